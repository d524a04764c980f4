"""Structure constants and Chevalley coefficients of opposite Schubert classes.

Every constant is an alternating (or parabolic Moebius) sum over a Bruhat
lower interval of Euler-characteristic functionals ``eps L_w`` (ordinary) or
``e^rho (mult) LL_w`` (equivariant) applied to a product of lifts.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from . import __version__
from .demazure import CONVENTION, NonInteger, demazure_all
from .laurent import LaurentPoly, TensorElem, mono
from .lifts import schubert_lift_r, tensor_lift
from .weyl import NotMinimalRep, WeylElement, format_word, parabolic, weyl_group


def _neg(lam):
    return tuple(-x for x in lam)


def _sign(k):
    return -1 if k % 2 else 1


def _as_int(val, what):
    val = Fraction(val)
    if val.denominator != 1:
        raise NonInteger(f"{what} = {val} is not an integer")
    return int(val)


# -- cached per-group ingredients --------------------------------------------


@lru_cache(maxsize=None)
def _R(rs, x: WeylElement) -> LaurentPoly:
    """``L_{x^-1 w0}(u0) = r_x e^-rho``."""
    return schubert_lift_r(rs, x).shift(_neg(rs.rho))


@lru_cache(maxsize=None)
def _P(rs, x: WeylElement, allow_large: bool = False) -> TensorElem:
    """``LL_{x^-1 w0}(u0t) = U_x (1 (x) e^-rho)``."""
    lift = tensor_lift(rs, allow_large=allow_large)
    return lift.Uw[x].mul_second(mono(_neg(rs.rho)))


def _eps_values(W, f: LaurentPoly) -> dict:
    return {w: v.augmentation() for w, v in demazure_all(W, f).items()}


def _chiT_values(W, F: TensorElem) -> dict:
    rho = W.rs.rho
    return {w: v.collapse().shift(rho) for w, v in demazure_all(W, F).items()}


def _alternating(W, vals: dict, z: WeylElement, zero=0):
    total = zero
    for w in W.lower_set(z):
        v = vals[w]
        if v:
            total = total + (v if (z.length - w.length) % 2 == 0 else -v)
    return total


def _parabolic_sum(W, I, vals: dict, z: WeylElement, zero=0):
    total = zero
    for w in W.lower_set(z):
        if not W.is_min_rep(w, I):
            continue
        mu = W.mobius_WI(I, w, z)
        if mu and vals[w]:
            total = total + (vals[w] if mu == 1 else -vals[w])
    return total


def _require_reps(W, I, *xs):
    for x in xs:
        if not W.is_min_rep(x, I):
            raise NotMinimalRep(f"{x} is not in W^I for I={I}")


# -- ordinary K(G/B) and K(G/P) ---------------------------------------------


def ordinary_constants(group, x: WeylElement, y: WeylElement) -> dict:
    """``{z: c^z_{x,y}}`` (nonzero entries only)."""
    W = weyl_group(group)
    rs = W.rs
    vals = _eps_values(W, (_R(rs, x) * _R(rs, y)).shift(rs.rho))
    out = {}
    for z in W:
        c = _as_int(_alternating(W, vals, z), f"c^{z}_{{{x},{y}}}")
        if c:
            out[z] = c
    return out


def ordinary_chevalley(group, lam, x: WeylElement) -> dict:
    """``{y: q^lam_{x,y}}`` for ``[L(lam)] [O_{X^x}]``."""
    W = weyl_group(group)
    vals = _eps_values(W, _R(W.rs, x).shift(lam))
    out = {}
    for y in W:
        q = _as_int(_alternating(W, vals, y), f"q^{lam}_{{{x},{y}}}")
        if q:
            out[y] = q
    return out


def ordinary_partial(group, I, x: WeylElement, y: WeylElement) -> dict:
    """``{z: d^z_{x,y}}`` for ``z`` in ``W^I``; Schubert classes of ``G/P_I``."""
    W = weyl_group(group)
    I = parabolic(I, W.rank)
    _require_reps(W, I, x, y)
    rs = W.rs
    vals = _eps_values(W, (_R(rs, x) * _R(rs, y)).shift(rs.rho))
    out = {}
    for z in W.min_coset_reps(I):
        d = _as_int(_parabolic_sum(W, I, vals, z), f"d^{z}_{{{x},{y}}}")
        if d:
            out[z] = d
    return out


def expand_line_bundle(group, f: LaurentPoly) -> dict:
    """Coordinates of ``c_K(f)`` in the opposite Schubert basis of K(G/B)."""
    W = weyl_group(group)
    vals = _eps_values(W, f.shift(_neg(W.rs.rho)))
    out = {}
    for z in W:
        c = _as_int(_alternating(W, vals, z), f"coefficient of [O_X^{z}]")
        if c:
            out[z] = c
    return out


def xi_expansion(group, w: WeylElement) -> dict:
    """``xi^w = sum_{w <= w'} (-1)^{l(w') - l(w)} [O_{X^{w'}}]``."""
    W = weyl_group(group)
    return {wp: _sign(wp.length - w.length) for wp in W if W.bruhat_leq(w, wp)}


# -- equivariant K_T(G/B) and K_T(G/P) ----------------------------------------


def equivariant_constants(group, x: WeylElement, y: WeylElement, allow_large=False) -> dict:
    """``{z: C^z_{x,y}}`` with values in R(T)."""
    W = weyl_group(group)
    rs = W.rs
    F = (_P(rs, x, allow_large) * _P(rs, y, allow_large)).mul_second(mono(rs.rho))
    vals = _chiT_values(W, F)
    zero = LaurentPoly.zero(W.rank)
    out = {}
    for z in W:
        c = _alternating(W, vals, z, zero)
        if c:
            out[z] = c
    return out


def equivariant_chevalley(group, lam, x: WeylElement, allow_large=False) -> dict:
    """``{y: Q^lam_{x,y}}`` for ``[L^T(lam)] [O_{X^x}]_T``."""
    W = weyl_group(group)
    F = _P(W.rs, x, allow_large).mul_second(mono(tuple(lam)))
    vals = _chiT_values(W, F)
    zero = LaurentPoly.zero(W.rank)
    out = {}
    for y in W:
        q = _alternating(W, vals, y, zero)
        if q:
            out[y] = q
    return out


def equivariant_partial(group, I, x: WeylElement, y: WeylElement, allow_large=False) -> dict:
    """``{z: D^z_{x,y}}`` for ``z`` in ``W^I``."""
    W = weyl_group(group)
    I = parabolic(I, W.rank)
    _require_reps(W, I, x, y)
    rs = W.rs
    F = (_P(rs, x, allow_large) * _P(rs, y, allow_large)).mul_second(mono(rs.rho))
    vals = _chiT_values(W, F)
    zero = LaurentPoly.zero(W.rank)
    out = {}
    for z in W.min_coset_reps(I):
        d = _parabolic_sum(W, I, vals, z, zero)
        if d:
            out[z] = d
    return out


# -- tables ---------------------------------------------------------------------


@dataclass
class ConstantTable:
    group: str
    flavor: str  # "ordinary" | "equivariant"
    I: tuple
    entries: dict  # (x, y, z) -> int | LaurentPoly
    metadata: dict = field(default_factory=dict)

    def value(self, x, y, z):
        return self.entries.get((x, y, z), 0)

    def row(self, x, y) -> dict:
        return {z: v for (a, b, z), v in self.entries.items() if a == x and b == y}

    def to_json(self) -> dict:
        W = weyl_group(self.metadata.get("cartan") or self.group)
        key = lambda t: tuple(W.index[e] for e in t[0])
        entries = []
        for (x, y, z), v in sorted(self.entries.items(), key=key):
            entries.append(
                {
                    "x": format_word(x.word),
                    "y": format_word(y.word),
                    "z": format_word(z.word),
                    "value": v.to_json() if isinstance(v, LaurentPoly) else v,
                }
            )
        return {
            "group": self.group,
            "flavor": self.flavor,
            "I": [i + 1 for i in self.I] if self.I is not None else None,
            "metadata": self.metadata,
            "entries": entries,
        }


@dataclass
class ChevalleyTable:
    group: str
    flavor: str
    lam: tuple
    entries: dict  # (x, y) -> int | LaurentPoly

    def to_json(self) -> dict:
        W = weyl_group(self.group)
        entries = []
        for (x, y), v in sorted(self.entries.items(), key=lambda t: (W.index[t[0][0]], W.index[t[0][1]])):
            entries.append(
                {
                    "x": format_word(x.word),
                    "y": format_word(y.word),
                    "value": v.to_json() if isinstance(v, LaurentPoly) else v,
                }
            )
        return {"group": self.group, "flavor": self.flavor, "lambda": list(self.lam), "entries": entries}


def _pair_worker(args):
    cartan, flavor, I, xi, yi, allow_large = args
    W = weyl_group(cartan)
    x, y = W.elements[xi], W.elements[yi]
    if flavor == "ordinary":
        row = ordinary_constants(W, x, y) if I is None else ordinary_partial(W, I, x, y)
    else:
        row = (
            equivariant_constants(W, x, y, allow_large)
            if I is None
            else equivariant_partial(W, I, x, y, allow_large)
        )
    return xi, yi, {W.index[z]: v for z, v in row.items()}


def _metadata(W, flavor):
    return {
        "convention": CONVENTION.fingerprint,
        "lift": "anti-invariant u0 = det(w0) d/|W|" if flavor == "ordinary" else "Steinberg-matrix tensor lift",
        "version": __version__,
        "cartan": [list(r) for r in W.rs.datum.cartan],
    }


def _build_table(group, flavor, I=None, jobs=1, allow_large=False) -> ConstantTable:
    W = weyl_group(group)
    if I is not None:
        I = parabolic(I, W.rank)
        reps = W.min_coset_reps(I)
    else:
        reps = list(W)
    cartan = W.rs.datum.cartan
    work = [(cartan, flavor, I, W.index[x], W.index[y], allow_large) for x in reps for y in reps]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_pair_worker, work, chunksize=max(1, len(work) // (4 * jobs))))
    else:
        results = [_pair_worker(w) for w in work]
    entries = {}
    for xi, yi, row in sorted(results, key=lambda t: (t[0], t[1])):
        for zi in sorted(row):
            entries[(W.elements[xi], W.elements[yi], W.elements[zi])] = row[zi]
    return ConstantTable(W.rs.label, flavor, I, entries, _metadata(W, flavor))


def ordinary_table(group, I=None, jobs=1) -> ConstantTable:
    return _build_table(group, "ordinary", I, jobs)


def equivariant_table(group, I=None, jobs=1, allow_large=False) -> ConstantTable:
    return _build_table(group, "equivariant", I, jobs, allow_large)


def chevalley_table(group, lam, flavor="ordinary") -> ChevalleyTable:
    W = weyl_group(group)
    fn = ordinary_chevalley if flavor == "ordinary" else equivariant_chevalley
    entries = {}
    for x in W:
        for y, v in fn(W, lam, x).items():
            entries[(x, y)] = v
    return ChevalleyTable(W.rs.label, flavor, tuple(lam), entries)


def forget(value):
    """Coefficientwise augmentation of an equivariant entry."""
    return value.augmentation() if isinstance(value, LaurentPoly) else value
