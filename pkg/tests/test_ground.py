import pytest
from hypothesis import given
from hypothesis import strategies as st

from leastmaj.ground import (
    Biset,
    biset_from_index,
    biset_from_sign,
    biset_index,
    biset_le,
    check_permutation,
    check_signs,
    enumerate_bisets,
    fmt_set,
    mask_of,
    members,
    reduced_intersection,
    reduced_union,
    submasks,
)

N = 4


def bisets(n=N):
    return st.tuples(st.integers(0, 3 ** n - 1)).map(lambda t: biset_from_index(t[0], n))


def test_reduced_union_cancels_opposite_signs():
    assert reduced_union(Biset(1, 0), Biset(0, 1)) == Biset(0, 0)


def test_reduced_union_mixed():
    # ({1},{2}) and ({2},{3}) give ({1},{3})
    assert reduced_union(Biset(0b001, 0b010), Biset(0b010, 0b100)) == Biset(0b001, 0b100)


def test_reduced_union_positive_parts():
    assert reduced_union(Biset(0b011, 0), Biset(0b110, 0)) == Biset(0b111, 0)


def test_reduced_intersection_examples():
    assert reduced_intersection(Biset(0b001, 0b010), Biset(0b001, 0b100)) == Biset(0b001, 0)
    assert reduced_intersection(Biset(0b011, 0b100), Biset(0, 0)) == Biset(0, 0)
    assert reduced_intersection(Biset(0b011, 0b100), Biset(0b010, 0b100)) == Biset(0b010, 0b100)


def test_biset_from_sign():
    assert biset_from_sign(0b11, (1, -1)) == Biset(0b01, 0b10)
    assert biset_from_sign(0, (1, -1, 1)) == Biset(0, 0)
    assert biset_from_sign(0b111, (1, 1, 1)) == Biset(0b111, 0)


@pytest.mark.parametrize("n,count", [(1, 3), (2, 9), (3, 27)])
def test_enumerate_bisets_count(n, count):
    got = list(enumerate_bisets(n))
    assert len(got) == count == len(set(got))
    assert all(not (b.pos & b.neg) for b in got)


@given(st.integers(0, 3 ** N - 1))
def test_ternary_index_roundtrip(idx):
    b = biset_from_index(idx, N)
    assert biset_index(b.pos, b.neg) == idx


@given(bisets(), bisets())
def test_reduced_operations_stay_disjoint_and_ordered(u, v):
    join = reduced_union(u, v)
    meet = reduced_intersection(u, v)
    assert not (join.pos & join.neg) and not (meet.pos & meet.neg)
    assert biset_le(meet, u) and biset_le(meet, v)


def test_overlap_rejected():
    with pytest.raises(ValueError):
        Biset(1, 1).check()


def test_mask_helpers():
    assert members(0b1010) == [1, 3]
    assert mask_of([1, 3]) == 0b1010
    assert fmt_set(0) == "{}"
    assert fmt_set(0b101) == "{1,3}"
    assert sorted(submasks(0b101)) == [0, 0b001, 0b100, 0b101]


def test_permutation_and_sign_validation():
    assert check_permutation((1, 0, 2), 3) == (1, 0, 2)
    with pytest.raises(ValueError):
        check_permutation((0, 0, 1), 3)
    with pytest.raises(ValueError):
        check_signs((1, 0), 2)
