from fractions import Fraction

import pytest

from kschubert.demazure import demazure, demazure_all
from kschubert.laurent import TensorElem, is_invariant, mono, one, one_minus
from kschubert.lifts import (
    invariance_report,
    ordinary_lift,
    schubert_lift_r,
    steinberg_f,
    steinberg_matrix,
    steinberg_p,
    tensor_lift,
    u0_ordinary,
)
from kschubert.weyl import weyl_group

SMALL = ["A1", "A2", "B2", "C2", "G2"]


@pytest.mark.parametrize("label", SMALL + ["A3"])
def test_u0_kronecker(label):
    W = weyl_group(label)
    vals = demazure_all(W, u0_ordinary(W))
    for w, v in vals.items():
        assert v.augmentation() == (1 if w == W.longest else 0)


@pytest.mark.parametrize("label", SMALL)
def test_u0_denominator_is_group_order(label):
    W = weyl_group(label)
    dens = {Fraction(c).denominator for _, c in u0_ordinary(W).sorted_terms()}
    assert dens == {len(W)}


def test_a1_lifts():
    W = weyl_group("A1")
    rv = ordinary_lift(W).rv
    assert rv[W.identity] == one(1)
    assert rv[W.longest] == one_minus((2,)).scale(Fraction(1, 2))


@pytest.mark.parametrize("label", SMALL)
def test_identity_lift_is_one(label):
    W = weyl_group(label)
    assert schubert_lift_r(W, W.identity) == one(W.rank)


def test_a1_tensor_lift():
    lift = tensor_lift("A1")
    assert lift.a == (-mono((-1,)), one(1))
    assert lift.b == (mono((1,)), one(1))
    assert lift.Uw[weyl_group("A1").longest] == TensorElem.pure(one(1), one(1)) - TensorElem.pure(mono((-1,)), mono((1,)))


@pytest.mark.parametrize("label", ["A1", "A2", "B2", "C2", "G2"])
def test_tensor_lift_kronecker(label):
    W = weyl_group(label)
    lift = tensor_lift(W)
    rho = W.rs.rho
    neg = tuple(-x for x in rho)
    assert len(lift.det) == 1
    for w in W:
        total = sum((a * demazure(W, b.shift(neg), w).shift(rho) for a, b in zip(lift.a, lift.b)), 0 * one(W.rank))
        assert total == (one(W.rank) if w == W.longest else 0)


def test_large_tensor_lift_requires_opt_in():
    with pytest.raises(ValueError):
        tensor_lift("A3")


def test_a3_tensor_lift():
    lift = tensor_lift("A3", allow_large=True)
    assert len(lift.det) == 1


@pytest.mark.parametrize("label", SMALL)
def test_invariance(label):
    W = weyl_group(label)
    report = invariance_report(W, tensor_lift(W))
    assert all(report.values())
    assert len(report) == sum(len(W.min_coset_reps(I)) for I in W.subsets())


def test_invariance_a3_ordinary():
    assert all(invariance_report("A3").values())


def test_steinberg_exponents_a2():
    W = weyl_group("A2")
    assert steinberg_p(W, W.identity) == (0, 0)
    assert steinberg_p(W, W.longest) == (-1, -1)
    assert steinberg_p(W, W.simple(0)) == (-1, 1)


def test_steinberg_f_is_parabolic_invariant():
    W = weyl_group("B2")
    for I in W.subsets():
        for v in W.min_coset_reps(I):
            assert is_invariant(steinberg_f(W, v, I), W, I)


def test_steinberg_matrix_shape():
    W = weyl_group("A2")
    M = steinberg_matrix(W)
    assert len(M) == 6 and all(len(r) == 6 for r in M)
    assert M[0][0] == one(2)
