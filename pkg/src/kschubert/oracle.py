"""Independent verification engines.

None of these reuse the Demazure-operator path they are meant to check:

* evaluation on the W-orbit of a generic torus point (K_T(G/B) specialized at t
  is the ring of functions on that orbit);
* linear algebra over a monomial window for the ideal ``I(G) Q[Lambda]``;
* subword enumeration for Bruhat order and the Moebius recursion;
* the Weyl dimension formula.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product

import flint

from .laurent import LaurentPoly, ZeroCoordinate, mono
from .lifts import schubert_lift_r
from .weyl import WeylElement, parabolic, weyl_group


class GenericityFailure(RuntimeError):
    pass


class SingularEvaluation(ArithmeticError):
    pass


class WindowExhausted(RuntimeError):
    pass


class NotDominant(ValueError):
    pass


WINDOW_CAP = 32
_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _q(x):
    x = Fraction(x)
    return flint.fmpq(x.numerator, x.denominator)


def _frac(x):
    return Fraction(int(x.p), int(x.q))


def _matrix(rows, ncols):
    M = flint.fmpq_mat(len(rows), ncols)
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            if v:
                M[i, j] = _q(v)
    return M


@dataclass(frozen=True)
class TorusPoint:
    """Values of the fundamental characters ``e^{omega_i}`` at a point of T."""

    values: tuple

    def __post_init__(self):
        vals = tuple(Fraction(v) for v in self.values)
        if any(v == 0 for v in vals):
            raise ZeroCoordinate("torus point coordinates must be nonzero")
        object.__setattr__(self, "values", vals)


def orbit_points(group, t: TorusPoint, elements=None) -> list:
    """Coordinates of ``w.t`` for each ``w``: ``e^lam(w.t) = e^{w^-1 lam}(t)``."""
    W = weyl_group(group)
    pts = []
    for w in elements if elements is not None else W.elements:
        winv = W.inverse(w)
        pts.append(
            tuple(mono(W.act(winv, W.rs.fundamental_weight(i))).evaluate(t.values) for i in range(W.rank))
        )
    return pts


def is_generic(group, t: TorusPoint) -> bool:
    pts = orbit_points(group, t)
    return len(set(pts)) == len(pts)


def generic_point(group, seed: int = 0, retries: int = 50) -> TorusPoint:
    W = weyl_group(group)
    rng = random.Random(seed)
    for _ in range(retries):
        vals = []
        for _ in range(W.rank):
            num = rng.choice(_PRIMES)
            den = rng.choice((1, 1, 1) + _PRIMES[:4])
            vals.append(Fraction(num, den) if num != den else Fraction(num))
        t = TorusPoint(tuple(vals))
        if is_generic(W, t):
            return t
    raise GenericityFailure(f"no generic point found after {retries} draws (seed {seed})")


def _solve_square(rows, rhs):
    n = len(rows)
    A = _matrix(rows, n)
    b = _matrix([[v] for v in rhs], 1)
    try:
        x = A.solve(b)
    except ZeroDivisionError as exc:
        raise SingularEvaluation("evaluation matrix is singular") from exc
    return [_frac(x[i, 0]) for i in range(n)]


def evaluation_rank(rows) -> int:
    return _matrix(rows, len(rows[0])).rref()[1]


def expand_by_evaluation(group, t: TorusPoint, target: LaurentPoly, basis, points=None) -> list:
    """Coordinates of ``target`` in ``basis`` as functions on an orbit.

    ``points`` defaults to the full W-orbit of ``t``; pass a subset (one point
    per ``W_I``-orbit) when the basis consists of ``W_I``-invariants.
    """
    if points is None:
        points = orbit_points(group, t)
    if len(points) != len(basis):
        raise ValueError(f"{len(basis)} basis elements for {len(points)} points")
    rows = [[b.evaluate(p) for b in basis] for p in points]
    rhs = [target.evaluate(p) for p in points]
    return _solve_square(rows, rhs)


# -- monomial-window reduction modulo I(G) Q[Lambda] ---------------------------


@lru_cache(maxsize=None)
def fundamental_orbit_sums(rs) -> tuple:
    W = weyl_group(rs)
    out = []
    for i in range(W.rank):
        orbit = {W.act(w, rs.fundamental_weight(i)) for w in W}
        f = LaurentPoly.zero(W.rank)
        for mu in sorted(orbit):
            f = f + mono(mu)
        out.append(f)
    return tuple(out)


def _window_solve(W, basis, gens, targets, B):
    r = W.rank
    box = list(product(range(-B, B + 1), repeat=r))
    cols = [b.terms for b in basis]
    for g in gens:
        for mu in box:
            cols.append(g.shift(mu).terms)
    monos = {}
    for col in cols:
        for e in col:
            monos.setdefault(e, len(monos))
    if any(e not in monos for tgt in targets for e in tgt.terms):
        return None
    ncols = len(cols)
    M = flint.fmpq_mat(len(monos), ncols + len(targets))
    for j, col in enumerate(cols + [t.terms for t in targets]):
        for e, c in col.items():
            M[monos[e], j] = _q(c)
    R, rank = M.rref()
    pivots = []
    for i in range(rank):
        pivots.append(next(j for j in range(R.ncols()) if R[i, j] != 0))
    if any(p >= ncols for p in pivots):
        return None
    if pivots[: len(basis)] != list(range(len(basis))):
        raise AssertionError("basis is linearly dependent modulo the ideal window")
    return [[_frac(R[i, ncols + k]) for i in range(len(basis))] for k in range(len(targets))]


def reduce_many(group, targets, basis=None) -> list:
    """Batch form of :func:`reduce_modulo_augmented_invariants`."""
    W = weyl_group(group)
    if basis is None:
        basis = [schubert_lift_r(W.rs, w) for w in W]
    gens = [f - f.augmentation() for f in fundamental_orbit_sums(W.rs)]
    B = max([f.max_abs_exponent() for f in list(targets) + list(basis)] + [1])
    while True:
        sol = _window_solve(W, basis, gens, targets, min(B, WINDOW_CAP))
        if sol is not None:
            return sol
        if B >= WINDOW_CAP:
            raise WindowExhausted(f"no solution with monomial window up to {WINDOW_CAP}")
        B *= 2


def reduce_modulo_augmented_invariants(group, target: LaurentPoly, basis=None) -> list:
    """``kappa`` with ``target - sum kappa_w r_w`` in the ideal ``I(G) Q[Lambda]``.

    The ideal is generated by ``chi_i - eps(chi_i)`` for the orbit sums of the
    fundamental weights; membership is certified by an exact linear solve over
    a box of multiplier monomials that doubles until the system is consistent.
    """
    return reduce_many(group, [target], basis)[0]


# -- brute-force Bruhat order and Moebius function ------------------------------


def brute_bruhat(group, u: WeylElement, w: WeylElement) -> bool:
    W = weyl_group(group)
    word = w.word
    for k in range(len(word) + 1):
        if k != u.length:
            continue
        for sub in combinations(range(len(word)), k):
            if W.from_word(tuple(word[i] for i in sub)) == u:
                return True
    return False


@lru_cache(maxsize=None)
def _brute_order(rs) -> dict:
    W = weyl_group(rs)
    return {(u, w): brute_bruhat(W, u, w) for u in W for w in W}


def brute_mobius(group, I, v: WeylElement, w: WeylElement) -> int:
    """Moebius function of the induced order on ``W^I`` by the defining recursion."""
    W = weyl_group(group)
    I = parabolic(I, W.rank)
    leq = _brute_order(W.rs)
    reps = [x for x in W if W.is_min_rep(x, I)]
    if not leq[(v, w)]:
        return 0
    memo = {}

    def mu(a):
        if a in memo:
            return memo[a]
        if a == v:
            memo[a] = 1
        else:
            memo[a] = -sum(mu(u) for u in reps if leq[(v, u)] and leq[(u, a)] and u != a)
        return memo[a]

    return mu(w)


# -- Weyl dimension formula ------------------------------------------------------


@lru_cache(maxsize=None)
def _root_reps(rs) -> dict:
    # Each positive root as w(alpha_j); <lam, beta^vee> = (w^-1 lam)[j].
    W = weyl_group(rs)
    reps = {}
    for w in W:
        for j in range(W.rank):
            beta = W.act(w, rs.simple_roots[j])
            if rs.is_positive_root(beta) and beta not in reps:
                reps[beta] = (W.inverse(w), j)
    return reps


def coroot_pairing(group, lam, beta) -> int:
    W = weyl_group(group)
    winv, j = _root_reps(W.rs)[tuple(beta)]
    return W.act(winv, lam)[j]


def weyl_dim(group, mu) -> int:
    W = weyl_group(group)
    mu = tuple(mu)
    if any(x < 0 for x in mu):
        raise NotDominant(f"{mu} is not dominant")
    rho = W.rs.rho
    num, den = 1, 1
    for beta in W.rs.positive_roots:
        num *= coroot_pairing(W, tuple(a + b for a, b in zip(mu, rho)), beta)
        den *= coroot_pairing(W, rho, beta)
    out = Fraction(num, den)
    assert out.denominator == 1
    return int(out)


def dominant_representative(group, lam) -> tuple:
    W = weyl_group(group)
    for w in W:
        mu = W.act(w, lam)
        if all(x >= 0 for x in mu):
            return mu
    raise AssertionError("no dominant weight in the orbit")
