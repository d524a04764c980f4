import pytest

from kschubert.oracle import brute_bruhat, brute_mobius
from kschubert.weyl import NotMinimalRep, format_word, parse_word, weyl_group

ORDERS = {"A1": 2, "A2": 6, "A3": 24, "B2": 8, "C2": 8, "G2": 12}
LONGEST = {"A1": 1, "A2": 3, "A3": 6, "B2": 4, "C2": 4, "G2": 6}


@pytest.mark.parametrize("label", sorted(ORDERS))
def test_order_and_longest_length(label):
    W = weyl_group(label)
    assert len(W) == ORDERS[label]
    assert W.longest.length == LONGEST[label]
    assert W.det(W.longest) == (-1) ** LONGEST[label]
    assert W.elements[0] == W.identity


@pytest.mark.parametrize("label", sorted(ORDERS))
def test_longest_element_negates_positive_roots(label):
    W = weyl_group(label)
    roots = set(W.rs.positive_roots)
    image = {W.act(W.longest, a) for a in roots}
    assert image == {tuple(-x for x in a) for a in roots}


@pytest.mark.parametrize("label", ["A2", "B2", "G2"])
def test_inverse_and_length(label):
    W = weyl_group(label)
    for w in W:
        assert W.mul(w, W.inverse(w)) == W.identity
        assert W.inverse(w).length == w.length
        assert sum(1 for a in W.rs.positive_roots if not W.rs.is_positive_root(W.act(w, a))) == w.length


def test_words_roundtrip():
    W = weyl_group("A3")
    for w in W:
        assert W.from_word(parse_word(format_word(w.word))) == w
    assert parse_word("e") == ()
    assert parse_word("1 2") == (0, 1)
    assert parse_word("s2 s1") == (1, 0)
    with pytest.raises(ValueError):
        parse_word("s0")


def test_reduced_words_of_a2_longest():
    W = weyl_group("A2")
    assert W.reduced_words(W.longest) == [(0, 1, 0), (1, 0, 1)]
    assert repr(W.longest) == "<s1 s2 s1>"


def test_g2_longest_has_two_reduced_words():
    W = weyl_group("G2")
    assert len(W.reduced_words(W.longest)) == 2


@pytest.mark.parametrize("label", ["A2", "B2", "G2"])
def test_bruhat_matches_subword_enumeration(label):
    W = weyl_group(label)
    for u in W:
        for w in W:
            assert W.bruhat_leq(u, w) == brute_bruhat(W, u, w)


def test_bruhat_interval_a2():
    W = weyl_group("A2")
    s1, s2 = W.simple(0), W.simple(1)
    assert not W.bruhat_leq(s1, s2)
    assert len(W.interval(W.identity, W.longest)) == 6
    assert W.lower_set(W.from_word("s1 s2")) == [W.identity, s1, s2, W.from_word("s1 s2")]


def test_min_coset_reps_a2():
    W = weyl_group("A2")
    reps = [format_word(w.word) for w in W.min_coset_reps((1,))]
    assert reps == ["e", "s1", "s2 s1"]


@pytest.mark.parametrize("label", ["A2", "B2", "G2", "A3"])
def test_coset_counts(label):
    W = weyl_group(label)
    for I in W.subsets():
        assert len(W.min_coset_reps(I)) * len(W.parabolic_subgroup(I)) == len(W)


def test_partition_a2():
    W = weyl_group("A2")
    parts = {I: [format_word(w.word) for w in ws] for I, ws in W.partition_CI().items()}
    assert parts == {
        (): ["e"],
        (0,): ["s1", "s2 s1"],
        (1,): ["s2", "s1 s2"],
        (0, 1): ["s1 s2 s1"],
    }
    assert W.tag(W.from_word("s2 s1")) == (0,)


@pytest.mark.parametrize("label", ["A2", "B2", "G2", "A3"])
def test_partition_is_a_partition(label):
    W = weyl_group(label)
    seen = [w for ws in W.partition_CI().values() for w in ws]
    assert sorted(seen, key=W.index.__getitem__) == list(W)


@pytest.mark.parametrize("label", ["A2", "B2", "G2"])
def test_mobius_matches_recursion(label):
    W = weyl_group(label)
    for I in W.subsets():
        reps = W.min_coset_reps(I)
        for v in reps:
            for w in reps:
                assert W.mobius_WI(I, v, w) == brute_mobius(W, I, v, w)


def test_mobius_full_flag_is_sign():
    W = weyl_group("B2")
    for v in W:
        for w in W:
            want = (-1) ** (w.length - v.length) if W.bruhat_leq(v, w) else 0
            assert W.mobius_WI((), v, w) == want


def test_mobius_requires_representatives():
    W = weyl_group("A2")
    with pytest.raises(NotMinimalRep):
        W.mobius_WI((1,), W.simple(1), W.longest)
