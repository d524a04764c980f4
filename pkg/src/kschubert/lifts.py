"""Canonical lifts of opposite Schubert classes.

* ordinary: ``u0 = det(w0) d / |W|`` and ``r_v = L_{v^-1 w0}(u0) e^rho`` in Q[Lambda];
* equivariant: ``v0 = sum_w a_w (x) e^{rho + p_w}`` from the Steinberg-matrix solve,
  ``u0t = v0 (1 (x) e^-rho)`` and ``U_w = LL_{w^-1 w0}(u0t) (1 (x) e^rho)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .demazure import demazure, demazure_all, demazure_tensor
from .elimination import SingularMatrix, bareiss_solve
from .laurent import LaurentPoly, TensorElem, anti_invariant, is_invariant, mono, one
from .weyl import NotMinimalRep, WeylElement, parabolic, weyl_group

__all__ = [
    "DeltaCheckFailed",
    "NonPolynomialSolution",
    "SingularMatrix",
    "OrdinaryLift",
    "TensorLift",
    "u0_ordinary",
    "ordinary_lift",
    "schubert_lift_r",
    "steinberg_p",
    "steinberg_f",
    "steinberg_matrix",
    "tensor_lift",
    "invariance_report",
]

TENSOR_LIFT_MAX_ORDER = 12


class DeltaCheckFailed(AssertionError):
    pass


class NonPolynomialSolution(ArithmeticError):
    def __init__(self, denominators):
        self.denominators = denominators
        super().__init__(f"tensor-lift solution has non-monomial denominators: {denominators}")


def _neg(lam):
    return tuple(-x for x in lam)


@dataclass(frozen=True)
class OrdinaryLift:
    u0: LaurentPoly
    rv: dict


@lru_cache(maxsize=None)
def u0_ordinary(group) -> LaurentPoly:
    W = weyl_group(group)
    d = anti_invariant(W)
    u0 = d.scale(Fraction(W.det(W.longest), len(W)))
    for w, val in demazure_all(W, u0).items():
        want = 1 if w == W.longest else 0
        if val.augmentation() != want:
            raise DeltaCheckFailed(f"eps L_{w}(u0) = {val.augmentation()}, expected {want}")
    return u0


@lru_cache(maxsize=None)
def _all_rv(group) -> dict:
    W = weyl_group(group)
    vals = demazure_all(W, u0_ordinary(group))
    w0 = W.longest
    rho = W.rs.rho
    return {v: vals[W.mul(W.inverse(v), w0)].shift(rho) for v in W}


def schubert_lift_r(group, v: WeylElement) -> LaurentPoly:
    """``r_v = L_{v^-1 w0}(u0) e^rho``."""
    return _all_rv(weyl_group(group).rs)[v]


def ordinary_lift(group) -> OrdinaryLift:
    W = weyl_group(group)
    return OrdinaryLift(u0_ordinary(W.rs), dict(_all_rv(W.rs)))


def steinberg_p(group, w: WeylElement) -> tuple:
    """``p_w = w(sum of omega_a over simple a with w(a) < 0)``."""
    W = weyl_group(group)
    lam = tuple(int(W.sends_negative(w, j)) for j in range(W.rank))
    return W.act(w, lam)


def steinberg_f(group, v: WeylElement, I) -> LaurentPoly:
    """Orbit sum over ``W_I`` of ``v^-1 (sum of omega_i with v^-1 alpha_i < 0)``."""
    W = weyl_group(group)
    I = parabolic(I, W.rank)
    if not W.is_min_rep(v, I):
        raise NotMinimalRep(f"{v} is not in W^I for I={I}")
    vinv = W.inverse(v)
    lam = tuple(int(W.sends_negative(vinv, j)) for j in range(W.rank))
    mu = W.act(vinv, lam)
    orbit = {W.act(x, mu) for x in W.parabolic_subgroup(I)}
    out = LaurentPoly.zero(W.rank)
    for nu in sorted(orbit):
        out = out + mono(nu)
    return out


def steinberg_matrix(group) -> list:
    """``M[w][w'] = L_{w'}(e^{p_w})`` with rows and columns in group order."""
    W = weyl_group(group)
    rows = []
    for w in W:
        vals = demazure_all(W, mono(steinberg_p(W, w)))
        rows.append([vals[wp] for wp in W])
    return rows


@dataclass(frozen=True)
class TensorLift:
    group: str
    a: tuple
    b: tuple
    v0: TensorElem
    u0t: TensorElem
    Uw: dict = field(repr=False)
    det: LaurentPoly = field(repr=False, default=None)


def _tensor_lift_uncached(W) -> TensorLift:
    rho = W.rs.rho
    n = len(W)
    M = steinberg_matrix(W)
    # sum_w a_w M[w][w'] = e^-rho delta_{w', w0}: transpose to A x = rhs.
    A = [[M[w][wp] for w in range(n)] for wp in range(n)]
    rhs = [LaurentPoly.zero(W.rank) for _ in range(n - 1)] + [mono(_neg(rho))]
    y, det = bareiss_solve(A, rhs)
    if len(det) == 1:
        a = [yi.exact_div(det) for yi in y]
    else:
        a, bad = [], []
        for yi in y:
            try:
                a.append(yi.exact_div(det))
            except ArithmeticError:
                bad.append(det)
        if bad:
            raise NonPolynomialSolution([repr(d) for d in bad])
    p = [steinberg_p(W, w) for w in W]
    b = [mono(tuple(x + y_ for x, y_ in zip(rho, pw))) for pw in p]

    for wp_idx, wp in enumerate(W):
        total = LaurentPoly.zero(W.rank)
        for i in range(n):
            total = total + a[i] * demazure(W, b[i].shift(_neg(rho)), wp).shift(rho)
        if total != (one(W.rank) if wp == W.longest else 0):
            raise DeltaCheckFailed(f"Kronecker identity fails at w = {wp}: {total}")

    v0 = TensorElem.from_pairs(zip(a, b), W.rank)
    u0t = v0.mul_second(mono(_neg(rho)))
    Uw = {}
    for w in W:
        x = W.mul(W.inverse(w), W.longest)
        Uw[w] = demazure_tensor(W, u0t, x).mul_second(mono(rho))
    return TensorLift(W.rs.label, tuple(a), tuple(b), v0, u0t, Uw, det)


@lru_cache(maxsize=None)
def _tensor_lift_cached(rs) -> TensorLift:
    return _tensor_lift_uncached(weyl_group(rs))


def tensor_lift(group, allow_large: bool = False) -> TensorLift:
    """Solve the Steinberg system for the tensor lift.

    Groups with ``|W| > 12`` (A3) need ``allow_large=True``.
    """
    W = weyl_group(group)
    if len(W) > TENSOR_LIFT_MAX_ORDER and not allow_large:
        raise ValueError(f"|W| = {len(W)} > {TENSOR_LIFT_MAX_ORDER}; pass allow_large=True")
    return _tensor_lift_cached(W.rs)


def second_slot_invariant(F: TensorElem, W, I) -> bool:
    return all(F.act_second(W.simple(j)) == F for j in I)


def invariance_report(group, lift: TensorLift = None) -> dict:
    """``{(I, v): bool}`` for every ``I`` and ``v`` in ``W^I``."""
    W = weyl_group(group)
    out = {}
    for I in W.subsets():
        for v in W.min_coset_reps(I):
            ok = is_invariant(schubert_lift_r(W.rs, v), W, I)
            if lift is not None:
                ok = ok and second_slot_invariant(lift.Uw[v], W, I)
            out[(I, v)] = ok
    return out
