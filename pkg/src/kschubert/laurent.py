"""Exact arithmetic in Q[Lambda] and Q[Lambda] (x) Q[Lambda].

Coefficients are Python ints when integral and ``Fraction`` otherwise, so the
integer-heavy kernels never pay for rational arithmetic they do not need.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from .rootdata import Weight


class RankMismatch(ValueError):
    pass


class NotDivisible(ArithmeticError):
    pass


class ZeroCoordinate(ValueError):
    pass


class InternalInconsistency(AssertionError):
    pass


def _norm(c):
    if type(c) is int:
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, Rational):
        c = Fraction(c.numerator, c.denominator)
        return c.numerator if c.denominator == 1 else c
    raise TypeError(f"coefficient {c!r} is not an exact rational")


def _div(a, b):
    if type(a) is int and type(b) is int and a % b == 0:
        return a // b
    return _norm(Fraction(a) / b)


def _add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def _sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


class LaurentPoly:
    """Finite map from exponent vectors (weights) to nonzero rationals."""

    __slots__ = ("terms", "rank", "_hash")

    def __init__(self, terms=None, rank=None):
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(x) for x in exp)
            if rank is None:
                rank = len(exp)
            elif len(exp) != rank:
                raise RankMismatch(f"exponent {exp} does not have rank {rank}")
            c = _norm(c)
            if c:
                clean[exp] = _norm(clean.get(exp, 0) + c)
                if not clean[exp]:
                    del clean[exp]
        if rank is None:
            raise ValueError("rank is required for an empty polynomial")
        self.terms = clean
        self.rank = rank
        self._hash = None

    @classmethod
    def _make(cls, terms, rank):
        obj = object.__new__(cls)
        obj.terms = terms
        obj.rank = rank
        obj._hash = None
        return obj

    def _new(self, terms):
        return self._make(terms, self.rank)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, rank):
        return cls._make({}, rank)

    @classmethod
    def constant(cls, c, rank):
        c = _norm(c)
        return cls._make({(0,) * rank: c} if c else {}, rank)

    @classmethod
    def monomial(cls, exp, coeff=1):
        exp = tuple(int(x) for x in exp)
        c = _norm(coeff)
        return cls._make({exp: c} if c else {}, len(exp))

    # -- basic protocol ----------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.rank == other.rank and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == ({(0,) * self.rank: other} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rank, frozenset(self.terms.items())))
        return self._hash

    def sorted_terms(self):
        return sorted(self.terms.items())

    def coefficient(self, exp):
        return self.terms.get(tuple(exp), 0)

    def constant_term(self):
        return self.terms.get((0,) * self.rank, 0)

    def max_abs_exponent(self):
        return max((abs(x) for e in self.terms for x in e), default=0)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for exp, c in self.sorted_terms():
            if not any(exp):
                parts.append(str(c))
            else:
                mono = "e^(" + ",".join(map(str, exp)) + ")"
                parts.append(mono if c == 1 else f"-{mono}" if c == -1 else f"({c})*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    # -- ring operations ---------------------------------------------------

    def _check(self, other):
        if not isinstance(other, LaurentPoly):
            return False
        if other.rank != self.rank:
            raise RankMismatch(f"rank {self.rank} vs {other.rank}")
        return True

    def __add__(self, other):
        if not self._check(other):
            if isinstance(other, (int, Fraction)):
                other = self.constant(other, self.rank)
            else:
                return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = _norm(v)
            else:
                out.pop(e, None)
        return self._new(out)

    __radd__ = __add__

    def __neg__(self):
        return self._new({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.constant(other, self.rank)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not self._check(other):
            return NotImplemented
        out = {}
        get = out.get
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = get(e, 0) + c1 * c2
        return self._new({e: _norm(c) for e, c in out.items() if c})

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers are not supported")
        out = self.constant(1, self.rank)
        for _ in range(n):
            out = out * self
        return out

    def scale(self, c):
        c = _norm(c)
        if not c:
            return self._new({})
        return self._new({e: _norm(v * c) for e, v in self.terms.items()})

    def __truediv__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scale(Fraction(1) / c)
        return NotImplemented

    def shift(self, exp):
        """Multiply by the monomial ``e^exp``."""
        exp = tuple(exp)
        return self._new({_add(e, exp): c for e, c in self.terms.items()})

    # -- structure maps ----------------------------------------------------

    def act_matrix(self, m):
        out = {}
        for e, c in self.terms.items():
            out[tuple(sum(row[k] * e[k] for k in range(len(e))) for row in m)] = c
        return self._new(out)

    def act(self, w):
        """W-action ``e^lam -> e^{w lam}``."""
        return self.act_matrix(w.matrix)

    def augmentation(self):
        return _norm(sum(self.terms.values(), 0))

    def involution(self):
        return self._new({tuple(-x for x in e): c for e, c in self.terms.items()})

    def evaluate(self, point):
        """Evaluate at a torus point: ``e^lam -> prod t_i^lam_i``."""
        point = [Fraction(x) for x in point]
        if len(point) != self.rank:
            raise RankMismatch(f"point of length {len(point)} for rank {self.rank}")
        if any(x == 0 for x in point):
            raise ZeroCoordinate("torus point has a zero coordinate")
        total = Fraction(0)
        for e, c in self.terms.items():
            v = Fraction(c)
            for t, k in zip(point, e):
                v *= t ** k
            total += v
        return total

    # -- division ----------------------------------------------------------

    def divide_exact(self, alpha):
        """Return ``g`` with ``(1 - e^alpha) g == self``; raise NotDivisible otherwise.

        Works coset by coset of ``Lambda / Z alpha``: on each coset the polynomial
        is univariate in ``x = e^alpha`` and division by ``1 - x`` is a running sum.
        """
        alpha = tuple(alpha)
        if len(alpha) != self.rank:
            raise RankMismatch("alpha has the wrong rank")
        p = next((i for i, a in enumerate(alpha) if a), None)
        if p is None:
            raise ZeroDivisionError("1 - e^0 is zero")
        ap = alpha[p]
        cosets = {}
        for e, c in self.terms.items():
            k = e[p] // ap
            base = tuple(x - k * a for x, a in zip(e, alpha))
            cosets.setdefault(base, {})[k] = c
        out = {}
        for base, coeffs in cosets.items():
            lo, hi = min(coeffs), max(coeffs)
            run = 0
            for k in range(lo, hi):
                run += coeffs.get(k, 0)
                if run:
                    out[tuple(x + k * a for x, a in zip(base, alpha))] = _norm(run)
            if run + coeffs[hi] != 0:
                raise NotDivisible(f"not divisible by 1 - e^{alpha}")
        return self._new(out)

    def exact_div(self, other):
        """Exact quotient ``self / other`` in Q[Lambda]; raise NotDivisible otherwise."""
        self._check(other)
        if not other.terms:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self.terms:
            return self._new({})
        if len(other.terms) == 1:
            (eg, cg), = other.terms.items()
            return self._new({_sub(e, eg): _div(c, cg) for e, c in self.terms.items()})
        r = self.rank
        lo = [min(e[k] for e in self.terms) - min(e[k] for e in other.terms) for k in range(r)]
        hi = [max(e[k] for e in self.terms) - max(e[k] for e in other.terms) for k in range(r)]
        lead = max(other.terms)
        clead = other.terms[lead]
        gterms = list(other.terms.items())
        rem = dict(self.terms)
        q = {}
        while rem:
            top = max(rem)
            e = _sub(top, lead)
            if any(not (a <= x <= b) for a, x, b in zip(lo, e, hi)):
                raise NotDivisible("polynomial division leaves a remainder")
            c = _div(rem[top], clead)
            q[e] = c
            for eg, cg in gterms:
                k = _add(eg, e)
                v = rem.get(k, 0) - c * cg
                if v:
                    rem[k] = _norm(v)
                else:
                    rem.pop(k, None)
        return self._new(q)

    # -- serialization -----------------------------------------------------

    def to_json(self):
        out = []
        for e, c in self.sorted_terms():
            c = Fraction(c)
            out.append([list(e), str(c.numerator), str(c.denominator)])
        return out

    @classmethod
    def from_json(cls, data, rank=None):
        terms = {tuple(e): Fraction(int(n), int(d)) for e, n, d in data}
        return cls(terms, rank)


class TensorElem(LaurentPoly):
    """Element of Q[Lambda] (x) Q[Lambda] as a flat polynomial in 2r exponents.

    The first ``r`` exponents are the first tensor slot, the last ``r`` the second.
    """

    __slots__ = ()

    @property
    def half(self):
        return self.rank // 2

    @classmethod
    def pure(cls, a: LaurentPoly, b: LaurentPoly):
        """``a (x) b``."""
        if a.rank != b.rank:
            raise RankMismatch("tensor factors have different ranks")
        out = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                out[e1 + e2] = _norm(c1 * c2)
        return cls._make(out, 2 * a.rank)

    @classmethod
    def from_pairs(cls, pairs, rank):
        out = cls.zero(2 * rank)
        for a, b in pairs:
            out = out + cls.pure(a, b)
        return out

    def first(self, e):
        return e[: self.half]

    def second(self, e):
        return e[self.half:]

    def by_first(self):
        """Group terms as ``{first exponent: LaurentPoly in the second slot}``."""
        r = self.half
        groups = {}
        for e, c in self.terms.items():
            groups.setdefault(e[:r], {})[e[r:]] = c
        return {k: LaurentPoly._make(v, r) for k, v in groups.items()}

    def collapse(self):
        """Multiplication map ``a (x) b -> a b``."""
        r = self.half
        out = {}
        for e, c in self.terms.items():
            k = tuple(e[i] + e[r + i] for i in range(r))
            out[k] = out.get(k, 0) + c
        return LaurentPoly._make({k: _norm(v) for k, v in out.items() if v}, r)

    def mul_second(self, b: LaurentPoly):
        """Multiply by ``1 (x) b``."""
        return self * TensorElem.pure(LaurentPoly.constant(1, b.rank), b)

    def act_second(self, w):
        r = self.half
        m = w.matrix
        out = {}
        for e, c in self.terms.items():
            s = e[r:]
            out[e[:r] + tuple(sum(row[k] * s[k] for k in range(r)) for row in m)] = c
        return self._new(out)

    def act_first(self, w):
        r = self.half
        m = w.matrix
        out = {}
        for e, c in self.terms.items():
            f = e[:r]
            out[tuple(sum(row[k] * f[k] for k in range(r)) for row in m) + e[r:]] = c
        return self._new(out)

    def specialize_first(self, point):
        """Evaluate the first slot at a torus point, leaving a LaurentPoly in the second."""
        point = [Fraction(x) for x in point]
        if len(point) != self.half:
            raise RankMismatch("point has the wrong rank")
        if any(x == 0 for x in point):
            raise ZeroCoordinate("torus point has a zero coordinate")
        r = self.half
        out = {}
        for e, c in self.terms.items():
            v = Fraction(c)
            for t, k in zip(point, e[:r]):
                v *= t ** k
            out[e[r:]] = out.get(e[r:], 0) + v
        return LaurentPoly._make({k: _norm(v) for k, v in out.items() if v}, r)

    def divide_exact_first(self, alpha):
        """Divide by ``(1 - e^alpha) (x) 1``."""
        return self.divide_exact(tuple(alpha) + (0,) * self.half)

    def __repr__(self):
        if not self.terms:
            return "0"
        r = self.half
        parts = []
        for e, c in self.sorted_terms():
            parts.append(f"({c})*e^({','.join(map(str, e[:r]))})(x)e^({','.join(map(str, e[r:]))})")
        return " + ".join(parts)

    def to_json(self):
        r = self.half
        out = []
        for e, c in self.sorted_terms():
            c = Fraction(c)
            out.append([list(e[:r]), list(e[r:]), str(c.numerator), str(c.denominator)])
        return out

    @classmethod
    def from_json(cls, data, rank=None):
        terms = {tuple(a) + tuple(b): Fraction(int(n), int(d)) for a, b, n, d in data}
        return cls(terms, None if rank is None else 2 * rank)


def one(rank) -> LaurentPoly:
    return LaurentPoly.constant(1, rank)


def mono(exp, coeff=1) -> LaurentPoly:
    return LaurentPoly.monomial(exp, coeff)


def one_minus(alpha: Weight) -> LaurentPoly:
    """``1 - e^alpha``."""
    return one(len(alpha)) - mono(alpha)


def augmentation(f: LaurentPoly):
    return f.augmentation()


def involution(f: LaurentPoly) -> LaurentPoly:
    return f.involution()


def act(w, f: LaurentPoly) -> LaurentPoly:
    return f.act(w)


def divide_exact(f: LaurentPoly, alpha: Weight) -> LaurentPoly:
    return f.divide_exact(alpha)


def specialize_first(t, F: TensorElem) -> LaurentPoly:
    return F.specialize_first(getattr(t, "values", t))


def antisymmetrize(W, f: LaurentPoly) -> LaurentPoly:
    """``J(f) = sum_w det(w) w(f)``."""
    out = {}
    for w in W:
        sign = W.det(w)
        for e, c in f.act(w).terms.items():
            out[e] = out.get(e, 0) + sign * c
    return LaurentPoly._make({e: _norm(c) for e, c in out.items() if c}, f.rank)


def anti_invariant(W) -> LaurentPoly:
    """``d = J(e^rho)``, cross-checked against ``det(w0) e^-rho prod_{a>0} (1 - e^a)``."""
    rs = W.rs
    d = antisymmetrize(W, mono(rs.rho))
    prod = mono(tuple(-x for x in rs.rho), W.det(W.longest))
    for beta in rs.positive_roots:
        prod = prod * one_minus(beta)
    if d != prod:
        raise InternalInconsistency("J(e^rho) disagrees with the product form of d")
    return d


def is_invariant(f: LaurentPoly, W, I) -> bool:
    return all(f.act(W.simple(j)) == f for j in I)
