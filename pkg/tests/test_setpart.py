import pytest
from hypothesis import given, strategies as st

from skeinlab._text import ParseError
from skeinlab.setpart import (
    SegmentedPermutation,
    SetPartition,
    apply_perm,
    bell,
    canonical_segperm,
    catalan,
    compose,
    crossing_pairs,
    cyclic_decomposition,
    enumerate_partitions,
    format_partition,
    format_permutation,
    identity,
    inverse,
    is_noncrossing,
    narayana,
    odd_part_sum,
    parse_partition,
    parse_permutation,
    sign,
    stirling2,
    tangle,
    to_partition,
    transposition,
)

P = parse_partition


def test_noncrossing_predicate():
    assert not is_noncrossing(P("1 3 / 2 4"))
    assert is_noncrossing(P("1 5 6 / 2 4 / 3"))
    assert all(is_noncrossing(pi) for pi in enumerate_partitions(3))


def test_counts():
    assert len(enumerate_partitions(4, noncrossing_only=True)) == 14 == catalan(4)
    assert len(enumerate_partitions(4, 2, noncrossing_only=True)) == 6 == narayana(4, 2)
    assert len(enumerate_partitions(3)) == 5 == bell(3)
    assert [stirling2(4, k) for k in range(5)] == [0, 1, 7, 6, 1]
    assert len(enumerate_partitions(5, 3, 1)) == sum(1 for p in enumerate_partitions(5, 3) if p.singletons == 1)


@pytest.mark.parametrize("n", range(11))
def test_noncrossing_count_is_catalan(n):
    assert len(enumerate_partitions(n, noncrossing_only=True)) == catalan(n)


def test_enumeration_order_and_uniqueness():
    parts = enumerate_partitions(5)
    assert len(set(parts)) == len(parts)
    # restricted growth strings in lexicographic order: one block first, all singletons last
    assert parts[0].k == 1 and parts[-1].k == 5


def test_apply_perm():
    pi = P("1 2 / 3 4")
    assert apply_perm(identity(4), pi) == pi
    assert apply_perm(transposition(4, 2), pi) == P("1 3 / 2 4")


def test_tangle():
    assert tangle(P("1 2 / 3 4")) == 0
    assert tangle(P("1 3 / 2 4")) == 1
    assert tangle(P("1 5 / 2 6 / 3 7 / 4 8")) == 6
    assert len(crossing_pairs(P("1 5 / 2 6 / 3 7 / 4 8"))) == 6


def test_cyclic_decomposition_worked_example():
    a = {1, 2, 4, 8, 9, 10, 12, 13, 14, 15, 16}
    b = {3, 5, 6, 7, 11}
    got = cyclic_decomposition(a, b, 16)
    assert got == [(1, 2, 12, 13, 14, 15, 16), (3,), (4,), (5, 6, 7), (8, 9, 10), (11,)]


def test_cyclic_decomposition_small():
    assert cyclic_decomposition({1, 3}, {2, 4}, 4) == [(1,), (2,), (3,), (4,)]
    assert len(cyclic_decomposition({1, 2}, {3, 4}, 4)) == 2
    # the minimum lying in B moves the start to the next A-interval
    assert cyclic_decomposition({2, 4}, {1, 3}, 4) == [(2,), (3,), (4,), (1,)]


def test_cyclic_decomposition_partitions_inputs():
    for pi in enumerate_partitions(6, 2):
        a, b = pi.blocks
        parts = cyclic_decomposition(a, b, 6)
        assert sorted(x for s in parts[0::2] for x in s) == list(a)
        assert sorted(x for s in parts[1::2] for x in s) == list(b)
        assert (len(parts) // 2 < 2) == is_noncrossing(pi)


def test_segmented_permutations():
    sp = SegmentedPermutation((5, 3, 6, 7, 2, 1, 8, 4), (3, 1, 2, 2))
    assert to_partition(sp) == P("3 5 6 / 7 / 1 2 / 4 8")
    assert odd_part_sum((3, 1, 2, 2)) == 5
    c = canonical_segperm(P("3 5 6 / 7 / 1 2 / 4 8"))
    assert (c.w, c.alpha) == ((1, 2, 3, 5, 6, 4, 8, 7), (2, 3, 2, 1))
    one = canonical_segperm(P("1 2 3"))
    assert (one.w, one.alpha) == ((1, 2, 3), (3,))
    assert to_partition(SegmentedPermutation((2, 1, 3), (3,))).k == 1


def test_canonical_round_trip():
    for pi in enumerate_partitions(5):
        assert to_partition(canonical_segperm(pi)) == pi


def test_bad_segmentations():
    with pytest.raises(ValueError):
        SegmentedPermutation((1, 2), (3,))
    with pytest.raises(ValueError):
        SegmentedPermutation((1, 1), (2,))


def test_partition_text_round_trip():
    for pi in enumerate_partitions(5):
        assert P(format_partition(pi)) == pi
    assert P("{1,3 / 2}") == P("1 3 / 2")


def test_partition_parse_errors():
    with pytest.raises(ParseError) as err:
        P("1 3 / 2 x")
    assert err.value.pos == 8
    with pytest.raises(ParseError):
        P("1 / / 2")
    with pytest.raises(ValueError):
        P("1 3 / 3")
    with pytest.raises(ValueError):
        P("1 3")  # 2 is missing


def test_permutation_formats():
    assert parse_permutation("1 2 3 4 5 6 -> 2 3 4 5 6 1") == (2, 3, 4, 5, 6, 1)
    assert parse_permutation("3 1 2") == (3, 1, 2)
    assert format_permutation((3, 1, 2)) == "3 1 2"
    with pytest.raises(ValueError):
        parse_permutation("1 1 2")
    with pytest.raises(ParseError):
        parse_permutation("1 2 -> 2")


@given(st.permutations(range(1, 7)), st.permutations(range(1, 7)))
def test_permutation_group_laws(v, w):
    v, w = tuple(v), tuple(w)
    assert sign(compose(v, w)) == sign(v) * sign(w)
    assert compose(w, inverse(w)) == identity(6)
    pi = P("1 4 / 2 5 6 / 3")
    assert apply_perm(compose(v, w), pi) == apply_perm(v, apply_perm(w, pi))


def test_partition_validation():
    with pytest.raises(ValueError):
        SetPartition(3, [[1, 2], [2, 3]])
    with pytest.raises(ValueError):
        SetPartition(17, [range(1, 18)])
