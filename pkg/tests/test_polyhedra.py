import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from leastmaj.generate import random_bisubmodular, random_submodular
from leastmaj.ground import Biset, permutations, popcount, sign_vectors
from leastmaj.polyhedra import (
    Polyhedron,
    base_vertices,
    bisub_vertices,
    coordinate_bounds,
    dependence,
    enumerate_integral_points,
    greedy_vertex,
    lift_to_base,
    linear_maximize,
    member,
    saturation,
    signed_greedy_vertex,
    tight_family,
    verify_tight_closure,
    violated_constraint,
)
from leastmaj.setfn import BisetFunction, SetFunction, dual


def test_membership_examples(f42):
    assert member(Polyhedron(f42, "B"), (-1, 1))
    assert not member(Polyhedron(f42, "B"), (-1, 0))
    assert violated_constraint(Polyhedron(f42, "B"), (-1, 0)) == 0b11
    assert member(Polyhedron(f42, "P"), (-1, 0))


def test_zero_in_p_iff_nonnegative():
    assert member(Polyhedron(SetFunction(2, (0, 1, 0, 2)), "P"), (0, 0))
    assert not member(Polyhedron(SetFunction(2, (0, 1, -1, 2)), "P"), (0, 0))


def test_aliases(f42, l1_ball):
    assert Polyhedron(dual(f42), "B_sup").kind == "Bsup"
    assert Polyhedron(l1_ball, "B_tilde").kind == "Btilde"
    assert Polyhedron(l1_ball, "B_orthant", Biset(0b11, 0)).kind == "Borth"
    with pytest.raises(ValueError):
        Polyhedron(f42, "Q")
    with pytest.raises(ValueError):
        Polyhedron(f42, "Bsup")


def test_tight_family_examples(f42, l1_ball):
    assert tight_family(Polyhedron(f42, "B"), (-1, 1)) == [0, 0b01, 0b11]
    full = SetFunction(2, (0, 5, 5, 9))
    assert tight_family(Polyhedron(full, "P"), (1, 1)) == [0]
    fam = set(tight_family(Polyhedron(l1_ball, "Btilde"), (1, 0)))
    assert {Biset(0b01, 0), Biset(0b01, 0b10), Biset(0b11, 0)} <= fam


def test_tight_family_needs_member(f42):
    with pytest.raises(ValueError):
        tight_family(Polyhedron(f42, "B"), (-1, 0))


def test_tight_closure_negative_control():
    sq = SetFunction(2, tuple(popcount(m) ** 2 for m in range(4)))
    # {1} and {2} tight, union {1,2} (value 4, sum 2) is not
    assert not verify_tight_closure(Polyhedron(sq, "P"), (1, 1))


def test_lift_to_base_examples(f42):
    assert lift_to_base(f42, (-2, 0)) == (-1, 1)
    assert lift_to_base(f42, (-2, 2)) == (-2, 2)
    c = SetFunction.modular((2, -1, 3))
    assert lift_to_base(c, (0, -4, 1)) == (2, -1, 3)


def test_greedy_examples(f42):
    assert greedy_vertex(f42, (0, 1)) == (-1, 1)
    assert greedy_vertex(f42, (1, 0)) == (-2, 2)
    c = SetFunction.modular((2, -1, 3))
    assert all(greedy_vertex(c, pi) == (2, -1, 3) for pi in permutations(3))


def test_signed_greedy_examples(l1_ball, box2):
    assert signed_greedy_vertex(l1_ball, (0, 1), (1, -1)) == (1, 0)
    for pi in permutations(2):
        for s in sign_vectors(2):
            assert signed_greedy_vertex(box2, pi, s) == s
    interval = BisetFunction(1, (0, 2, 1))
    assert signed_greedy_vertex(interval, (0,), (1,)) == (2,)
    assert signed_greedy_vertex(interval, (0,), (-1,)) == (-1,)


def test_saturation_examples(l1_ball):
    assert saturation(l1_ball, (1, 0)) == (0b11, 0b10)
    assert saturation(l1_ball, (0, 0)) == (0, 0)
    assert saturation(BisetFunction(1, (0, 2, 1)), (2,)) == (1, 0)


def test_dependence_examples(l1_ball, box2):
    assert dependence(l1_ball, (1, 0), 0, 1) == Biset(0b01, 0)
    assert dependence(box2, (1, 1), 0, 1) == Biset(0b01, 0)
    assert dependence(BisetFunction(1, (0, 2, 1)), (2,), 0, 1) == Biset(1, 0)
    with pytest.raises(ValueError):
        dependence(l1_ball, (0, 0), 0, 1)


def test_enumeration_examples(f42, l1_ball, capped3):
    assert enumerate_integral_points(Polyhedron(f42, "B")) == [(-2, 2), (-1, 1)]
    assert enumerate_integral_points(Polyhedron(l1_ball, "Btilde")) == sorted(
        [(0, 0), (1, 0), (-1, 0), (0, 1), (0, -1)]
    )
    # (2, 0, 0) breaks x({1}) <= 1, so only the arrangements of (1, 1, 0) remain
    want = sorted(set(itertools.permutations((1, 1, 0))))
    assert enumerate_integral_points(Polyhedron(capped3, "B")) == want


def test_unbounded_needs_box(f42):
    p = Polyhedron(f42, "P")
    with pytest.raises(ValueError):
        enumerate_integral_points(p)
    pts = enumerate_integral_points(p, [(-3, 0), (-3, 3)])
    assert pts == [x for x in itertools.product(range(-3, 1), range(-3, 4)) if member(p, x)]


def test_coordinate_bounds(f42):
    assert coordinate_bounds(Polyhedron(f42, "B")) == [(-2, -1), (1, 2)]
    assert coordinate_bounds(Polyhedron(f42, "P")) == [(None, -1), (None, 2)]


def test_linear_maximize_examples(f42, l1_ball):
    assert linear_maximize(Polyhedron(f42, "B"), (1, 0)) == (-1, 1)
    assert linear_maximize(Polyhedron(l1_ball, "Btilde"), (3, -1)) == (1, 0)
    x = linear_maximize(Polyhedron(l1_ball, "Btilde"), (0, 0))
    assert x in bisub_vertices(l1_ball)


def _brute_box(p, lo, hi):
    return [x for x in itertools.product(*[range(a, b + 1) for a, b in zip(lo, hi)]) if member(p, x)]


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 3), st.integers(0, 10 ** 6))
def test_enumeration_matches_box_scan(n, seed):
    rng = random.Random(seed)
    f = random_submodular(n, rng, -4, 4)
    b = Polyhedron(f, "B")
    bounds = coordinate_bounds(b)
    lo = [l for l, _ in bounds]
    hi = [u for _, u in bounds]
    assert enumerate_integral_points(b) == _brute_box(b, lo, hi)
    h = random_bisubmodular(n, rng)
    bt = Polyhedron(h, "Btilde")
    tb = coordinate_bounds(bt)
    assert enumerate_integral_points(bt) == _brute_box(bt, [l for l, _ in tb], [u for _, u in tb])


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 4), st.integers(0, 10 ** 6))
def test_greedy_vertices_are_members_with_chain(n, seed):
    f = random_submodular(n, random.Random(seed))
    b = Polyhedron(f, "B")
    for pi in permutations(n):
        x = greedy_vertex(f, pi)
        fam = set(tight_family(b, x))
        chain = 0
        for i in pi:
            chain |= 1 << i
            assert chain in fam


@settings(max_examples=20, deadline=None)
@given(st.integers(1, 4), st.integers(0, 10 ** 6))
def test_linear_maximize_beats_all_vertices(n, seed):
    rng = random.Random(seed)
    f = random_submodular(n, rng)
    w = [rng.randint(-3, 3) for _ in range(n)]
    best = linear_maximize(Polyhedron(f, "B"), w)
    val = sum(a * b for a, b in zip(w, best))
    assert all(sum(a * b for a, b in zip(w, v)) <= val for v in base_vertices(f))


@settings(max_examples=20, deadline=None)
@given(st.integers(1, 4), st.integers(0, 10 ** 6))
def test_lift_reaches_base(n, seed):
    rng = random.Random(seed)
    f = random_submodular(n, rng)
    bounds = coordinate_bounds(Polyhedron(f, "B"))
    x = tuple(lo - rng.randint(0, 3) for lo, _ in bounds)
    y = lift_to_base(f, x, integral=True)
    assert member(Polyhedron(f, "B"), y)
    assert all(a <= b for a, b in zip(x, y))
