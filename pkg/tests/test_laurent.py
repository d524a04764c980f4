from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from kschubert.laurent import (
    LaurentPoly,
    NotDivisible,
    RankMismatch,
    TensorElem,
    ZeroCoordinate,
    anti_invariant,
    antisymmetrize,
    mono,
    one,
    one_minus,
)
from kschubert.weyl import weyl_group

coeff = st.one_of(st.integers(-6, 6), st.fractions(min_value=-3, max_value=3, max_denominator=4))


def polys(rank=2, bound=3, size=4):
    exps = st.tuples(*[st.integers(-bound, bound)] * rank)
    return st.dictionaries(exps, coeff, max_size=size).map(lambda d: LaurentPoly(d, rank))


@given(polys(), polys(), polys())
def test_ring_axioms(f, g, h):
    assert f + g == g + f
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f - f == LaurentPoly.zero(2)
    assert f * one(2) == f


@given(polys(), st.tuples(st.integers(-3, 3), st.integers(-3, 3)).filter(any))
def test_divide_exact_roundtrip(f, alpha):
    assert (one_minus(alpha) * f).divide_exact(alpha) == f


@given(polys(), polys().filter(bool))
def test_exact_div_roundtrip(f, g):
    assert (f * g).exact_div(g) == f


@given(polys())
def test_augmentation_is_a_ring_map(f):
    g = f * f + f
    assert g.augmentation() == f.augmentation() ** 2 + f.augmentation()


@given(polys())
def test_json_roundtrip(f):
    assert LaurentPoly.from_json(f.to_json(), 2) == f


@given(polys(), polys())
def test_weyl_action_is_multiplicative(f, g):
    W = weyl_group("B2")
    for w in W:
        assert (f * g).act(w) == f.act(w) * g.act(w)
        assert f.act(W.inverse(w)).act(w) == f


def test_not_divisible():
    with pytest.raises(NotDivisible):
        mono((1, 0)).divide_exact((2, -1))
    with pytest.raises(NotDivisible):
        (mono((1, 0)) + one(2)).exact_div(mono((1, 0)) + mono((0, 1)))


def test_rank_mismatch():
    with pytest.raises(RankMismatch):
        mono((1,)) + mono((1, 0))


def test_coefficients_normalize():
    f = LaurentPoly({(1,): Fraction(4, 2), (2,): Fraction(1, 3)}, 1)
    assert type(f.coefficient((1,))) is int
    assert f.coefficient((2,)) == Fraction(1, 3)
    assert mono((1,)) - mono((1,)) == 0


def test_evaluate():
    f = mono((1, -1), 3) + one(2)
    assert f.evaluate((2, 3)) == Fraction(3 * 2, 3) + 1
    with pytest.raises(ZeroCoordinate):
        f.evaluate((0, 1))


@given(polys(rank=1), polys(rank=1), polys(rank=1), polys(rank=1))
def test_tensor_product_and_collapse(a, b, c, d):
    x, y = TensorElem.pure(a, b), TensorElem.pure(c, d)
    assert x * y == TensorElem.pure(a * c, b * d)
    assert (x * y).collapse() == a * b * c * d


def test_tensor_slots():
    W = weyl_group("A1")
    s = W.simple(0)
    F = TensorElem.pure(mono((1,)), mono((1,)))
    assert F.act_second(s) == TensorElem.pure(mono((1,)), mono((-1,)))
    assert F.act_first(s) == TensorElem.pure(mono((-1,)), mono((1,)))
    assert F.specialize_first((3,)) == mono((1,), 3)
    assert TensorElem.from_json(F.to_json(), 1) == F


@pytest.mark.parametrize("label", ["A1", "A2", "B2", "G2", "A3"])
def test_anti_invariant_product_form(label):
    W = weyl_group(label)
    prod = one(W.rank)
    for a in W.rs.positive_roots:
        prod = prod * one_minus(a)
    want = prod.shift(tuple(-x for x in W.rs.rho)).scale(W.det(W.longest))
    assert anti_invariant(W) == want
    assert antisymmetrize(W, anti_invariant(W)) == anti_invariant(W).scale(len(W))
