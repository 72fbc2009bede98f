"""Recognize point sets that admit least elements of every shift.

A finite point set C (the integral points of a hole-free set, or the vertex
list of a polytope) admits least weakly supermajorized elements for every
shift exactly when each permutation has a point attaining all prefix-sum
maxima at once; equivalently the induced function ``max_C x(A)`` is
submodular and C sits between its base and submodular polyhedra.  The
analogous statements hold for the submajorized (minima, supermodular), the
full (base polyhedron) and the absolute (signed prefixes, bisubmodular)
orders.  ``characterize`` checks all of these conditions and reports the
first failing witness of each kind.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Optional, Sequence

from . import _lp, kernels
from .exact import common_denominator, point, q, scaled
from .ground import (
    biset_from_index,
    check_permutation,
    check_signs,
    permutations,
    sign_vectors,
)
from .majorization import ScalingShift, ab_compare
from .polyhedra import (
    Polyhedron,
    base_vertices,
    bisub_vertices,
    enumerate_integral_points,
)
from .setfn import (
    SUBMODULAR,
    SUPERMODULAR,
    BisetFunction,
    SetFunction,
    bisubmodular_violation,
    submodular_violation,
    supermodular_violation,
)

FAMILIES = ("super", "sub", "base", "bisub")
MAX_PERM_N = 8
MAX_SIGNED_N = 6


@dataclass(frozen=True)
class PointSet:
    """Finite point set; duplicates are dropped and points are kept sorted."""

    n: int
    points: tuple
    integral: bool = field(default=None)

    def __post_init__(self):
        pts = sorted({point(p) for p in self.points})
        if not pts:
            raise ValueError("point set is empty")
        for p in pts:
            if len(p) != self.n:
                raise ValueError(f"point {p} has length {len(p)}, expected {self.n}")
        object.__setattr__(self, "points", tuple(pts))
        all_int = all(isinstance(v, int) for p in pts for v in p)
        if self.integral is None:
            object.__setattr__(self, "integral", all_int)
        elif self.integral and not all_int:
            raise ValueError("integral point set has non-integral coordinates")

    def __contains__(self, x) -> bool:
        return point(x) in self._cached("set", lambda: frozenset(self.points))

    def __len__(self) -> int:
        return len(self.points)

    def _cached(self, key, build):
        cache = self.__dict__.setdefault("_cache", {})
        if key not in cache:
            cache[key] = build()
        return cache[key]

    def scaled(self) -> tuple[list, int]:
        """Row-major coordinates times their common denominator, and that denominator."""

        def build():
            coords = [v for p in self.points for v in p]
            d = common_denominator(coords)
            return scaled(coords, d), d

        return self._cached("scaled", build)

    def subset_extrema(self) -> tuple[list, list]:
        """Scaled max and min of x(A) over the set, for every subset A."""
        flat, _ = self.scaled()
        return self._cached("ext", lambda: kernels.subset_extrema(flat, len(self), self.n))

    def biset_maxima(self) -> list:
        """Scaled max of x(S) - x(T) over the set, for every biset in ternary order."""
        flat, _ = self.scaled()
        return self._cached("bimax", lambda: kernels.biset_maxima(flat, len(self), self.n))

    def coordinate_bounds(self) -> tuple[list, list]:
        lo = [min(p[i] for p in self.points) for i in range(self.n)]
        hi = [max(p[i] for p in self.points) for i in range(self.n)]
        return lo, hi


def _unscale(vals, d):
    return tuple(q(Fraction(v, d)) for v in vals)


def induced_set_function(c: PointSet, mode: str = "max") -> SetFunction:
    """``A -> max_C x(A)`` (tagged submodular) or ``min_C x(A)`` (tagged supermodular)."""
    if mode not in ("max", "min"):
        raise ValueError("mode must be 'max' or 'min'")
    hi, lo = c.subset_extrema()
    _, d = c.scaled()
    if mode == "max":
        return SetFunction(c.n, _unscale(hi, d), SUBMODULAR)
    return SetFunction(c.n, _unscale(lo, d), SUPERMODULAR)


def induced_biset_function(c: PointSet) -> BisetFunction:
    """``(X, Y) -> max_C x(X) - x(Y)``."""
    _, d = c.scaled()
    return BisetFunction(c.n, _unscale(c.biset_maxima(), d))


class PrefixCheck(NamedTuple):
    ok: bool
    pi: Optional[tuple]  # failing permutation (0-based)
    s: Optional[tuple] = None  # failing sign vector (signed variant)


def _sweep(c: PointSet, table, perms, coef, weight):
    flat, _ = c.scaled()
    n = c.n
    r = kernels.prefix_sweep(
        flat, len(c), n, table, [i for p in perms for i in p], len(perms), coef, weight
    )
    return None if r < 0 else perms[r]


def prefix_property(c: PointSet, mode: str = "max") -> PrefixCheck:
    """Whether every permutation has a point attaining all prefix maxima (or minima)."""
    if mode not in ("max", "min"):
        raise ValueError("mode must be 'max' or 'min'")
    if c.n > MAX_PERM_N:
        raise ValueError(f"permutation sweep limited to n <= {MAX_PERM_N}")
    hi, lo = c.subset_extrema()
    table = hi if mode == "max" else lo
    bad = _sweep(c, table, list(permutations(c.n)), [1] * c.n, [1 << i for i in range(c.n)])
    return PrefixCheck(bad is None, bad)


def signed_prefix_property(c: PointSet, max_n: int = MAX_SIGNED_N) -> PrefixCheck:
    """Signed analogue of :func:`prefix_property` over all (permutation, sign) pairs."""
    if c.n > max_n:
        raise ValueError(f"signed sweep limited to n <= {max_n}")
    table = c.biset_maxima()
    perms = list(permutations(c.n))
    for s in sign_vectors(c.n):
        # ternary digit 1 marks the positive part, 2 the negative part
        weight = [3 ** i * (1 if s[i] > 0 else 2) for i in range(c.n)]
        bad = _sweep(c, table, perms, list(s), weight)
        if bad is not None:
            return PrefixCheck(False, bad, s)
    return PrefixCheck(True, None, None)


def hull_membership(x: Sequence, c: PointSet) -> bool:
    """Whether ``x`` is a convex combination of the points of ``c`` (exact)."""
    x = point(x)
    if x in c:
        return True
    return _lp.convex_weights(list(c.points), x) is not None


class HoleCheck(NamedTuple):
    ok: bool
    missing: Optional[tuple]


def _hull_rows(c: PointSet):
    """Valid inequalities for co(C): bounds on x(A) (and x(S) - x(T) for small n)."""
    rows = []
    if c.n <= 5:
        for idx, top in enumerate(c.biset_maxima()):
            if idx:
                b = biset_from_index(idx, c.n)
                rows.append((b.pos, b.neg, top))
    else:
        hi, lo = c.subset_extrema()
        for m in range(1, 1 << c.n):
            rows.append((m, 0, hi[m]))
            rows.append((0, m, -lo[m]))
    return rows


def hole_free_check(c: PointSet) -> HoleCheck:
    """Whether every integral point of co(C) belongs to C; returns a missing one otherwise."""
    if not c.integral:
        raise ValueError("hole check needs an integral point set")
    lo, hi = c.coordinate_bounds()
    rows = _hull_rows(c)
    cand = kernels.enumerate_lattice(
        c.n, lo, hi, [r[0] for r in rows], [r[1] for r in rows], [int(r[2]) for r in rows]
    )
    for z in cand:
        if z not in c and hull_membership(z, c):
            return HoleCheck(False, z)
    return HoleCheck(True, None)


@dataclass
class CharacterizationReport:
    family: str
    holds: bool
    induced: object
    failures: list


def _fail(kind, **info):
    return {"kind": kind, **info}


def _check_sandwich(c, f, poly_kind, failures):
    """B(f) ⊆ C by enumeration or hull tests.

    C ⊆ P(f) needs no check: f is the maximum of x(A) over C itself.
    """
    base = Polyhedron(f, poly_kind)
    if c.integral:
        inner = enumerate_integral_points(base)
        missing = next((x for x in inner if x not in c), None)
    else:
        missing = next((z for z in base_vertices(f) if not hull_membership(z, c)), None)
    if missing is not None:
        failures.append(_fail("inclusion", side="inner", point=missing))


def characterize(c: PointSet, family: str, integral: Optional[bool] = None) -> CharacterizationReport:
    """Decide whether ``c`` is the (integral) polyhedron type of ``family``.

    ``super``: B(f) ⊆ C ⊆ P(f) with f = max_C x(A) submodular;
    ``sub``: B_sup(g) ⊆ C ⊆ P_sup(g) with g = min_C x(A) supermodular;
    ``base``: C = B(f); ``bisub``: C = B̃(h) with h = max_C x(X) - x(Y).
    Integral mode (default when every coordinate is an integer) compares
    integral point sets and first requires C to be hole-free.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
    if integral is None:
        integral = c.integral
    if integral and not c.integral:
        raise ValueError("integral mode needs integral points")
    if not integral and c.integral:
        c = PointSet(c.n, c.points, integral=False)
    failures: list = []
    if integral:
        hc = hole_free_check(c)
        if not hc.ok:
            failures.append(_fail("hole", point=hc.missing))
    if family == "bisub":
        induced = induced_biset_function(c)
        pc = signed_prefix_property(c)
        if not pc.ok:
            failures.append(_fail("prefix", pi=pc.pi, s=pc.s))
        bad = bisubmodular_violation(induced, max_n=MAX_SIGNED_N)
        if bad is not None:
            failures.append(_fail("not_bisubmodular", pair=bad))
        else:
            poly = Polyhedron(induced, "Btilde")
            if integral:
                inner = enumerate_integral_points(poly)
                missing = next((x for x in inner if x not in c), None)
            else:
                missing = next((z for z in bisub_vertices(induced) if not hull_membership(z, c)), None)
            if missing is not None:
                failures.append(_fail("inclusion", side="inner", point=missing))
        return CharacterizationReport(family, not failures, induced, failures)

    mode = "min" if family == "sub" else "max"
    induced = induced_set_function(c, mode)
    if family == "base":
        sums = {sum(p) for p in c.points}
        if len(sums) > 1:
            lo = min(c.points, key=sum)
            hi = max(c.points, key=sum)
            failures.append(_fail("unequal_sums", points=(lo, hi)))
    pc = prefix_property(c, mode)
    if not pc.ok:
        failures.append(_fail("prefix", pi=pc.pi))
    viol = supermodular_violation(induced) if mode == "min" else submodular_violation(induced)
    if viol is not None:
        failures.append(_fail("not_supermodular" if mode == "min" else "not_submodular", pair=viol))
    else:
        _check_sandwich(c, induced, "Bsup" if mode == "min" else "B", failures)
    return CharacterizationReport(family, not failures, induced, failures)


def witness_shift_super(c: PointSet, pi: Sequence[int]) -> tuple:
    """Shift forcing a least weakly (1, b)-supermajorized element to attain all pi-prefix maxima.

    ``b[pi[0]] = l[pi[0]]`` and ``b[pi[k+1]] = b[pi[k]] + u[pi[k]] - l[pi[k+1]] + 1``
    where l, u are coordinate minima and maxima over C.  Consecutive levels
    ``b + u`` then increase by at least 1, which separates the test
    functions ``max(0, b[pi[k]] + u[pi[k]] - t)``.
    """
    pi = check_permutation(pi, c.n)
    lo, hi = c.coordinate_bounds()
    b = [0] * c.n
    b[pi[0]] = lo[pi[0]]
    for prev, cur in zip(pi, pi[1:]):
        b[cur] = q(b[prev] + hi[prev] - lo[cur] + 1)
    return tuple(b)


def witness_shift_sub(c: PointSet, pi: Sequence[int]) -> tuple:
    """Mirror of :func:`witness_shift_super` for prefix minima (negate C and the shift)."""
    neg = PointSet(c.n, [tuple(-v for v in p) for p in c.points], integral=c.integral)
    return tuple(-v for v in witness_shift_super(neg, pi))


def witness_shift_signed(c: PointSet, pi: Sequence[int], s: Sequence[int]) -> tuple:
    """Shift forcing a least weakly absolutely (1, b)-majorized element to attain signed prefix maxima.

    With ``lh = u`` on the positive part and ``l`` on the negative part
    (``uh`` the other way round): ``b[pi[-1]] = -lh - s`` and, going
    backwards, ``b[pi[k]] = -s (|b[pi[k+1]] + uh[pi[k+1]]| + 1) - lh[pi[k]]``.
    """
    pi = check_permutation(pi, c.n)
    s = check_signs(s, c.n)
    lo, hi = c.coordinate_bounds()
    lh = [hi[i] if s[i] > 0 else lo[i] for i in range(c.n)]
    uh = [lo[i] if s[i] > 0 else hi[i] for i in range(c.n)]
    b = [0] * c.n
    last = pi[-1]
    b[last] = q(-lh[last] - s[last])
    for k in range(c.n - 2, -1, -1):
        cur, nxt = pi[k], pi[k + 1]
        b[cur] = q(-s[cur] * (abs(b[nxt] + uh[nxt]) + 1) - lh[cur])
    return tuple(b)


def least_in(c: PointSet, ab: ScalingShift, kind: str) -> Optional[tuple]:
    """A point of ``c`` below every other point in the order ``kind``, by pairwise comparison."""
    for x in c.points:
        if all(ab_compare(x, y, ab, kind) for y in c.points):
            return x
    return None
