"""Rational K-ring of the wonderful compactification as a module over K(G/B).

Elements of K(G/B)_Q are stored in the opposite Schubert basis; elements of
K(X)_Q are stored as K(G/B)-coordinates on the basis ``gamma_v``, where each
``v`` carries the subset ``I(v)`` with ``v`` in ``C^I``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .laurent import LaurentPoly, NotDivisible, TensorElem, one, one_minus
from .lifts import schubert_lift_r
from .oracle import evaluation_rank, generic_point, orbit_points
from .structconst import expand_line_bundle, ordinary_constants
from .weyl import WeylElement, format_word, weyl_group


def _norm(c):
    c = Fraction(c)
    return int(c) if c.denominator == 1 else c


def _json_num(c):
    return c if isinstance(c, int) else str(c)


@dataclass(frozen=True)
class KFlagElement:
    """A class in K(G/B)_Q as ``{z: coefficient of [O_{X^z}]}``."""

    coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "coeffs", {z: _norm(c) for z, c in self.coeffs.items() if c})

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, KFlagElement) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        out = dict(self.coeffs)
        for z, c in other.coeffs.items():
            out[z] = out.get(z, 0) + c
        return KFlagElement(out)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return KFlagElement({z: v * c for z, v in self.coeffs.items()})

    def to_json(self, W) -> list:
        return [
            {"z": format_word(z.word), "value": _json_num(self.coeffs[z])}
            for z in sorted(self.coeffs, key=W.index.__getitem__)
        ]


@dataclass(frozen=True)
class KXElement:
    """A class in K(X)_Q as ``{v: K(G/B) coordinate on gamma_v}``."""

    comps: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "comps", {v: c for v, c in self.comps.items() if c})

    def __bool__(self):
        return bool(self.comps)

    def __eq__(self, other):
        return isinstance(other, KXElement) and self.comps == other.comps

    def __hash__(self):
        return hash(frozenset(self.comps.items()))

    def __add__(self, other):
        out = dict(self.comps)
        for v, c in other.comps.items():
            out[v] = out[v] + c if v in out else c
        return KXElement(out)

    def to_json(self, W) -> list:
        return [
            {"w": format_word(v.word), "I": [i + 1 for i in W.tag(v)], "coeff": self.comps[v].to_json(W)}
            for v in sorted(self.comps, key=W.index.__getitem__)
        ]


def kflag_unit(group) -> KFlagElement:
    return KFlagElement({weyl_group(group).identity: 1})


def schubert_class(group, z: WeylElement) -> KFlagElement:
    return KFlagElement({z: 1})


@lru_cache(maxsize=None)
def _ctable(rs) -> dict:
    W = weyl_group(rs)
    return {(x, y): ordinary_constants(W, x, y) for x in W for y in W}


def kflag_multiply(group, u: KFlagElement, v: KFlagElement) -> KFlagElement:
    W = weyl_group(group)
    table = _ctable(W.rs)
    out = {}
    for x, a in u.coeffs.items():
        for y, b in v.coeffs.items():
            for z, c in table[(x, y)].items():
                out[z] = out.get(z, 0) + a * b * c
    return KFlagElement(out)


@lru_cache(maxsize=None)
def _lambda(rs, I: frozenset) -> KFlagElement:
    W = weyl_group(rs)
    f = one(W.rank)
    for j in sorted(I):
        f = f * one_minus(tuple(-a for a in rs.simple_roots[j]))
    return KFlagElement(expand_line_bundle(W, f))


def lambda_class(group, I) -> KFlagElement:
    """``c_K`` of the product of ``1 - e^{-alpha}`` over ``alpha`` in ``I``."""
    W = weyl_group(group)
    return _lambda(W.rs, frozenset(I))


def gamma(group, v: WeylElement) -> KXElement:
    return KXElement({v: kflag_unit(group)})


@lru_cache(maxsize=None)
def _gamma_product(rs, v: WeylElement, vp: WeylElement) -> KXElement:
    W = weyl_group(rs)
    I, Ip = set(W.tag(v)), set(W.tag(vp))
    union = I | Ip
    lam_cap = _lambda(rs, frozenset(I & Ip))
    out = {}
    for w, c in ordinary_constants(W, v, vp).items():
        J = set(W.tag(w))
        if not J <= union:
            continue
        coeff = kflag_multiply(W, lam_cap, _lambda(rs, frozenset(union - J))).scale(c)
        if coeff:
            out[w] = coeff
    return KXElement(out)


def gamma_product(group, v: WeylElement, vp: WeylElement) -> KXElement:
    """``gamma_v * gamma_v'``."""
    W = weyl_group(group)
    return _gamma_product(W.rs, v, vp)


def kx_multiply(group, xi: KXElement, eta: KXElement) -> KXElement:
    W = weyl_group(group)
    out = KXElement()
    for v, a in xi.comps.items():
        for vp, b in eta.comps.items():
            ab = kflag_multiply(W, a, b)
            terms = {
                w: kflag_multiply(W, ab, c)
                for w, c in _gamma_product(W.rs, v, vp).comps.items()
            }
            out = out + KXElement(terms)
    return out


# -- membership and basis checks -------------------------------------------------


def wond_congruence_check(group, F: TensorElem) -> bool:
    """Whether ``(1, s_alpha) F = F`` modulo ``1 - e^{alpha(u)}`` for every simple ``alpha``."""
    W = weyl_group(group)
    for j in range(W.rank):
        diff = F.act_second(W.simple(j)) - F
        try:
            diff.divide_exact_first(W.rs.simple_roots[j])
        except NotDivisible:
            return False
    return True


def kdec_element(group, v: WeylElement) -> TensorElem:
    """``prod_{alpha in I(v)} (1 - e^{alpha(u)}) (x) r_v``."""
    W = weyl_group(group)
    first = one(W.rank)
    for j in W.tag(v):
        first = first * one_minus(W.rs.simple_roots[j])
    return TensorElem.pure(first, schubert_lift_r(W, v))


def kdec_basis_check(group, seed: int = 0) -> dict:
    W = weyl_group(group)
    basis = {v: kdec_element(W, v) for v in W}
    failing = [format_word(v.word) for v, F in basis.items() if not wond_congruence_check(W, F)]

    t = generic_point(W, seed)
    s = generic_point(W, seed + 1)
    pts = orbit_points(W, s)
    rows = [[F.specialize_first(t.values).evaluate(p) for p in pts] for F in basis.values()]
    rank = evaluation_rank(rows)

    parts = W.partition_CI()
    full = set(range(W.rank))
    counts = []
    for I in W.subsets():
        got = sum(len(parts[J]) for J in W.subsets() if set(J) <= set(I))
        want = len(W.min_coset_reps(full - set(I)))
        counts.append({"I": [i + 1 for i in I], "union": got, "reps": want, "ok": got == want})

    return {
        "group": W.rs.label,
        "congruence": {"ok": not failing, "failing": failing},
        "rank": {"ok": rank == len(W), "rank": rank, "size": len(W)},
        "direct_sum": {"ok": all(c["ok"] for c in counts), "counts": counts},
        "ok": not failing and rank == len(W) and all(c["ok"] for c in counts),
    }


# -- structural checks and tables ----------------------------------------------


def _basis(W):
    return [gamma(W, v) for v in W]


def check_unit(group) -> list:
    """Basis elements on which ``gamma_e`` fails to act as the identity."""
    W = weyl_group(group)
    e = gamma(W, W.identity)
    return [format_word(v.word) for v, g in zip(W, _basis(W)) if kx_multiply(W, e, g) != g or kx_multiply(W, g, e) != g]


def check_commutativity(group) -> list:
    W = weyl_group(group)
    bad = []
    for v in W:
        for vp in W:
            if W.index[v] < W.index[vp] and gamma_product(W, v, vp) != gamma_product(W, vp, v):
                bad.append([format_word(v.word), format_word(vp.word)])
    return bad


def associativity_triples(group, samples=None, seed: int = 0) -> list:
    """All basis triples, or ``samples`` random ones drawn with ``seed``."""
    W = weyl_group(group)
    if samples is None:
        return list(product(W.elements, repeat=3))
    rng = random.Random(seed)
    return [tuple(rng.choice(W.elements) for _ in range(3)) for _ in range(samples)]


def check_associativity(group, triples) -> list:
    W = weyl_group(group)
    bad = []
    for a, b, c in triples:
        ga, gb, gc = gamma(W, a), gamma(W, b), gamma(W, c)
        left = kx_multiply(W, kx_multiply(W, ga, gb), gc)
        right = kx_multiply(W, ga, kx_multiply(W, gb, gc))
        if left != right:
            bad.append([format_word(x.word) for x in (a, b, c)])
    return bad


def check_lambda_multiplicativity(group) -> list:
    W = weyl_group(group)
    bad = []
    for I in W.subsets():
        for J in W.subsets():
            lhs = kflag_multiply(W, lambda_class(W, I), lambda_class(W, J))
            rhs = kflag_multiply(W, lambda_class(W, set(I) | set(J)), lambda_class(W, set(I) & set(J)))
            if lhs != rhs:
                bad.append([[i + 1 for i in I], [j + 1 for j in J]])
    return bad


def module_dimension(group) -> int:
    """Dimension of K(X)_Q over Q: gamma-basis size times dim K(G/B)_Q."""
    W = weyl_group(group)
    return len(_basis(W)) * len(W)


def wonderful_table(group) -> dict:
    W = weyl_group(group)
    return {
        "group": W.rs.label,
        "gamma": [{"v": format_word(v.word), "I": [i + 1 for i in W.tag(v)]} for v in W],
        "products": [
            {"v": format_word(v.word), "v'": format_word(vp.word), "result": gamma_product(W, v, vp).to_json(W)}
            for v in W
            for vp in W
        ],
    }
