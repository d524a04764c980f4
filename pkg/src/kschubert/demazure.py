"""Demazure operators on Q[Lambda] and their first-slot-linear tensor extensions.

The simple operator is ``L_j(f) = (f - s_j f) / (1 - e^{alpha_j})``.  With this
normalization ``L_j(1) = 0``, and the Euler characteristic formulas below give
positive values on antidominant weights; :data:`CONVENTION` records that choice.
"""
from __future__ import annotations

import hashlib
from dataclasses import asdict, dataclass

from .laurent import LaurentPoly, TensorElem, _norm, mono
from .rootdata import Weight
from .weyl import WeylElement, WeylGroup, weyl_group


class NonInteger(AssertionError):
    pass


@dataclass(frozen=True)
class DemazureConvention:
    operator: str = "L_{s_a}(e^lam) = (e^lam - e^{s_a lam}) / (1 - e^a)"
    composition: str = "L_w = L_{i1} ... L_{ik} for a reduced word s_{i1}...s_{ik}; rightmost applied first"
    euler: str = "chi(X_w, L(lam)) = eps L_w(e^{lam - rho})"
    euler_T: str = "chi^T(X_w, L(lam)) = e^rho L_w(e^{lam - rho})"
    positivity: str = "L(lam) has positive chi for antidominant lam"

    @property
    def fingerprint(self) -> str:
        blob = "|".join(f"{k}={v}" for k, v in sorted(asdict(self).items()))
        return hashlib.sha256(blob.encode()).hexdigest()[:16]


CONVENTION = DemazureConvention()


def _step(terms: dict, pos: int, alpha: tuple) -> dict:
    # Closed form of (e^l - e^{l - n a}) / (1 - e^a) with n = l[pos]:
    #   n > 0: -sum_{k=1..n} e^{l - k a};  n < 0: sum_{k=0..-n-1} e^{l + k a}.
    out = {}
    get = out.get
    for e, c in terms.items():
        n = e[pos]
        if n > 0:
            cur = e
            for _ in range(n):
                cur = tuple(x - a for x, a in zip(cur, alpha))
                out[cur] = get(cur, 0) - c
        elif n < 0:
            cur = e
            for _ in range(-n):
                out[cur] = get(cur, 0) + c
                cur = tuple(x + a for x, a in zip(cur, alpha))
    return {e: _norm(c) for e, c in out.items() if c}


def _simple(rs, f: LaurentPoly, j: int) -> LaurentPoly:
    alpha = rs.simple_roots[j]
    if isinstance(f, TensorElem):
        r = f.half
        return f._new(_step(f.terms, r + j, (0,) * r + tuple(alpha)))
    return f._new(_step(f.terms, j, tuple(alpha)))


def demazure_simple(W, f: LaurentPoly, j: int) -> LaurentPoly:
    """``L_{s_j}``; on a TensorElem it acts on the second slot."""
    return _simple(weyl_group(W).rs, f, j)


def demazure(W, f: LaurentPoly, w: WeylElement) -> LaurentPoly:
    rs = weyl_group(W).rs
    for j in reversed(w.word):
        f = _simple(rs, f, j)
    return f


def demazure_word(W, f: LaurentPoly, word) -> LaurentPoly:
    """Apply ``L_{i1} ... L_{ik}`` for an arbitrary (not necessarily reduced) word."""
    rs = weyl_group(W).rs
    for j in reversed(tuple(word)):
        f = _simple(rs, f, j)
    return f


def demazure_all(W, f: LaurentPoly) -> dict:
    """``{w: L_w(f)}`` for every w, sharing work along stored reduced words."""
    W = weyl_group(W)
    out = {W.identity: f}
    for w in W.elements[1:]:
        rest = W.from_word(w.word[1:])
        out[w] = _simple(W.rs, out[rest], w.word[0])
    return out


def demazure_tensor(W, F: TensorElem, w: WeylElement) -> TensorElem:
    """``LL_w(a (x) b) = a (x) L_w(b)``."""
    if not isinstance(F, TensorElem):
        raise TypeError("demazure_tensor expects a TensorElem")
    return demazure(W, F, w)


def bar_w(W, wprime: WeylElement, w: WeylElement) -> WeylElement:
    """The element ``wbar`` with ``L_{w'} L_{w^-1 w0} = L_{wbar}``.

    Folds the letters of ``w'`` (rightmost first) into ``w^-1 w0``: a letter
    that lengthens is absorbed into the product, otherwise it is dropped.
    """
    W = weyl_group(W)
    x = W.mul(W.inverse(w), W.longest)
    for j in reversed(wprime.word):
        sx = W.mul(W.simple(j), x)
        if sx.length > x.length:
            x = sx
    return x


def _neg(lam):
    return tuple(-x for x in lam)


def euler_char(W, w: WeylElement, lam: Weight) -> int:
    W = weyl_group(W)
    rho = W.rs.rho
    val = demazure(W, mono(tuple(a - b for a, b in zip(lam, rho))), w).augmentation()
    if not isinstance(val, int):
        raise NonInteger(f"Euler characteristic {val} is not an integer")
    return val


def euler_char_T(W, w: WeylElement, lam: Weight) -> LaurentPoly:
    W = weyl_group(W)
    rho = W.rs.rho
    return demazure(W, mono(tuple(a - b for a, b in zip(lam, rho))), w).shift(rho)


def chiT_functional(W, F: TensorElem) -> LaurentPoly:
    """``sum a e^rho L_{w0}(b e^-rho)`` over the terms ``a (x) b`` of ``F``."""
    W = weyl_group(W)
    rho = W.rs.rho
    r = len(rho)
    G = F.shift((0,) * r + _neg(rho))
    return demazure(W, G, W.longest).collapse().shift(rho)


def validate_convention() -> None:
    """Startup gate: the three A1 identities that pin down the sign convention."""
    W = weyl_group("A1")
    s = W.longest
    if demazure_simple(W, LaurentPoly.constant(1, 1), 0):
        raise AssertionError("convention check failed: L_s(1) != 0")
    if euler_char(W, s, (-1,)) != 2:
        raise AssertionError("convention check failed: chi(X_s, -omega) != 2")
    if euler_char_T(W, s, (-1,)) != mono((1,)) + mono((-1,)):
        raise AssertionError("convention check failed: chi^T(X_s, -omega) != e^w + e^-w")


validate_convention()
