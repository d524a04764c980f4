import pytest
from hypothesis import given, strategies as st

from kschubert.demazure import (
    CONVENTION,
    bar_w,
    demazure,
    demazure_all,
    demazure_simple,
    demazure_tensor,
    demazure_word,
    euler_char,
    euler_char_T,
)
from kschubert.laurent import LaurentPoly, TensorElem, mono, one, one_minus
from kschubert.oracle import dominant_representative, weyl_dim
from kschubert.weyl import weyl_group

GROUPS = ["A1", "A2", "B2", "G2", "A3"]


def weights(rank, bound=3):
    return st.tuples(*[st.integers(-bound, bound)] * rank)


def by_definition(W, f, j):
    # (f - s_j f) / (1 - e^{alpha_j})
    alpha = W.rs.simple_roots[j]
    return (f - f.act(W.simple(j))).divide_exact(alpha)


@pytest.mark.parametrize("label", GROUPS)
@given(data=st.data())
def test_closed_form_matches_division(label, data):
    W = weyl_group(label)
    lam = data.draw(weights(W.rank))
    f = mono(lam)
    for j in range(W.rank):
        assert demazure_simple(W, f, j) == by_definition(W, f, j)


@pytest.mark.parametrize("label", GROUPS)
@given(data=st.data())
def test_idempotent_and_absorbing(label, data):
    W = weyl_group(label)
    f = mono(data.draw(weights(W.rank)))
    j = data.draw(st.integers(0, W.rank - 1))
    g = demazure_simple(W, f, j)
    assert demazure_simple(W, g, j) == g
    assert demazure(W, g, W.longest) == demazure(W, f, W.longest)


@pytest.mark.parametrize("label", ["A2", "B2", "G2"])
@given(data=st.data())
def test_braid_relation(label, data):
    W = weyl_group(label)
    f = mono(data.draw(weights(W.rank)))
    words = W.reduced_words(W.longest)
    vals = {demazure_word(W, f, w) for w in words}
    assert len(vals) == 1


def test_simple_values_a1():
    W = weyl_group("A1")
    assert demazure_simple(W, one(1), 0) == 0
    assert demazure_simple(W, mono((1,)), 0) == -mono((-1,))
    assert demazure_simple(W, mono((2,)), 0) == -(one(1) + mono((-2,)))
    assert demazure_simple(W, mono((-1,)), 0) == mono((-1,))


def test_operator_kills_invariants_times_constants():
    W = weyl_group("A2")
    f = mono((1, 0)) + mono((-1, 1)) + mono((0, -1))
    for j in range(2):
        assert demazure_simple(W, f, j) == 0


def test_demazure_all_matches_individual():
    W = weyl_group("B2")
    f = mono((1, -2)) + mono((0, 3), 2)
    vals = demazure_all(W, f)
    for w in W:
        assert vals[w] == demazure(W, f, w)


def test_tensor_acts_on_second_slot():
    W = weyl_group("A2")
    a, b = mono((1, 1)), mono((2, -1))
    F = TensorElem.pure(a, b)
    for w in W:
        assert demazure_tensor(W, F, w) == TensorElem.pure(a, demazure(W, b, w))


def test_euler_characteristics_a1():
    W = weyl_group("A1")
    s = W.longest
    assert euler_char(W, s, (-1,)) == 2
    assert euler_char(W, W.identity, (0,)) == 1
    assert euler_char_T(W, s, (-1,)) == mono((1,)) + mono((-1,))
    for n in range(5):
        assert euler_char(W, s, (-n,)) == n + 1


@pytest.mark.parametrize("label", GROUPS)
def test_euler_char_equals_weyl_dimension(label):
    W = weyl_group(label)
    for lam in [(-1,) * W.rank, (0,) * W.rank, tuple(-(i % 3) for i in range(W.rank))]:
        mu = dominant_representative(W, tuple(-x for x in lam))
        assert euler_char(W, W.longest, lam) == weyl_dim(W, mu)


@pytest.mark.parametrize("label", ["A2", "B2", "G2"])
def test_bar_w_detects_bruhat_order(label):
    W = weyl_group(label)
    for wp in W:
        for w in W:
            assert (bar_w(W, wp, w) == W.longest) == W.bruhat_leq(w, wp)


def test_bar_w_is_the_composite_operator():
    W = weyl_group("A2")
    f = mono((2, -1)) + mono((-3, 1))
    for wp in W:
        for w in W:
            x = W.mul(W.inverse(w), W.longest)
            assert demazure(W, demazure(W, f, x), wp) == demazure(W, f, bar_w(W, wp, w))


def test_convention_fingerprint_is_stable():
    assert CONVENTION.fingerprint == type(CONVENTION)().fingerprint
    assert len(CONVENTION.fingerprint) == 16
