"""Least (a, b)-majorized elements via separable quadratic minimization.

A least element of any of the supported kinds is the minimizer of
``sum x_i^2 / (2 a_i) + b_i x_i`` over a suitable base polyhedron (or over
the bisubmodular polyhedron for the absolute order), so everything here
reduces to a few quadratic solvers:

* ``min_quadratic_base``: exact decomposition algorithm over B(f)
* ``frank_wolfe``: floating-point pairwise Frank-Wolfe followed by an exact
  solve on the face it identifies (cross-check, and the B̃ solver)
* ``min_quadratic_base_integral`` / ``min_quadratic_bisub``: integral variants
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor
from typing import Callable, NamedTuple, Optional, Sequence

from . import _lp, kernels
from .exact import common_denominator, div, point, q, scaled
from .ground import Biset
from .majorization import ScalingShift
from .polyhedra import (
    Polyhedron,
    enumerate_integral_points,
    lift_to_base,
    linear_maximize,
    member,
    tight_family,
)
from .setfn import SUBMODULAR, BisetFunction, SetFunction, dual, orthant_restriction, reduce

EXHAUSTIVE_N = 4


class UnsupportedError(ValueError):
    """No least element of the requested kind is known for this family."""


def _ab(n, ab):
    if ab is None:
        return ScalingShift.make(n)
    if len(ab.a) != n:
        raise ValueError(f"scaling vectors have length {len(ab.a)}, expected {n}")
    return ab


def objective(x: Sequence, ab: ScalingShift):
    """``sum x_i^2 / (2 a_i) + b_i x_i``, exact."""
    return q(sum(Fraction(xi) * xi / (2 * ai) + bi * xi for xi, ai, bi in zip(x, ab.a, ab.b)))


def _minimal_minimizer(f: SetFunction, x: Sequence):
    """Inclusion-minimal minimizer of ``f(A) - x(A)`` and the minimum."""
    d = common_denominator(list(f.values) + list(x))
    meet, best = kernels.minimal_minimizer(scaled(f.values, d), scaled(x, d), f.n)
    return meet, div(best, d)


def _decompose(f: SetFunction, a: list, b: list) -> list:
    n = f.n
    full = f.full
    theta = div(f.values[full] + sum(ai * bi for ai, bi in zip(a, b)), sum(a))
    x = [q(ai * (theta - bi)) for ai, bi in zip(a, b)]
    meet, best = _minimal_minimizer(f, x)
    if best >= 0:
        return x
    inner = [i for i in range(n) if meet >> i & 1]
    outer = [i for i in range(n) if not meet >> i & 1]
    out = [0] * n
    left = _decompose(f.restrict(inner), [a[i] for i in inner], [b[i] for i in inner])
    right = _decompose(f.contract(meet, outer), [a[i] for i in outer], [b[i] for i in outer])
    for i, v in zip(inner, left):
        out[i] = v
    for i, v in zip(outer, right):
        out[i] = v
    return out


def min_quadratic_base(f: SetFunction, ab: Optional[ScalingShift] = None) -> tuple:
    """Unique minimizer of ``sum x_i^2/(2 a_i) + b_i x_i`` over B(f).

    Solve on the hyperplane x(N) = f(N); if that point violates some
    x(A) <= f(A), split at the inclusion-minimal most violated set A* (which
    is tight at the optimum) and solve the restriction to A* and the
    contraction by A* independently.
    """
    if f.kind != SUBMODULAR:
        raise ValueError("min_quadratic_base needs a submodular function")
    ab = _ab(f.n, ab)
    return tuple(_decompose(f, list(ab.a), list(ab.b)))


def _integral_key(x, ab):
    # twice the objective keeps integer instances in ints; larger x wins ties
    return (sum(xi * xi + 2 * bi * xi for xi, bi in zip(x, ab.b)), tuple(-v for v in x))


def _require_integral(ab, *funcs):
    if not ab.is_unit():
        raise ValueError("integral solutions are only defined for a = 1")
    if not all(isinstance(v, int) for v in ab.b):
        raise ValueError("integral solutions need an integral shift b")
    for fn in funcs:
        if not fn.is_integral():
            raise ValueError("integral solutions need an integral function")


def feasible_exchange(fam, i: int, k: int, supermodular: bool = False) -> bool:
    """Whether raising x_k and lowering x_i keeps every tight constraint.

    ``fam`` is a tight family of subsets of B(f) (or of B_sup(g) when
    ``supermodular``).
    """
    bi, bk = 1 << i, 1 << k
    if supermodular:
        return not any(m & bi and not m & bk for m in fam)
    return not any(m & bk and not m & bi for m in fam)


def min_quadratic_base_integral(f: SetFunction, b: Optional[Sequence] = None) -> tuple:
    """A minimizer of ``sum x_i^2/2 + b_i x_i`` over the integral points of B(f).

    Exhaustive for ``n <= 4`` (ties go to the lexicographically largest
    point); otherwise the rounded continuous optimum is lifted into B(f) and
    improved by steepest exchange moves ``+e_k - e_i`` until none helps.
    """
    ab = ScalingShift.make(f.n, None, b)
    _require_integral(ab, f)
    if f.kind != SUBMODULAR:
        raise ValueError("min_quadratic_base_integral needs a submodular function")
    if f.n <= EXHAUSTIVE_N:
        pts = enumerate_integral_points(Polyhedron(f, "B"))
        return min(pts, key=lambda x: _integral_key(x, ab))
    cont = min_quadratic_base(f, ab)
    x = list(lift_to_base(f, [floor(v) for v in cont], integral=True))
    p = Polyhedron(f, "B")
    while True:
        fam = tight_family(p, x)
        best = None
        for i in range(f.n):
            for k in range(f.n):
                if i == k or not feasible_exchange(fam, i, k):
                    continue
                gain = x[k] + ab.b[k] - x[i] - ab.b[i] + 1
                if gain < 0 and (best is None or gain < best[0]):
                    best = (gain, i, k)
        if best is None:
            return tuple(x)
        _, i, k = best
        x[i] -= 1
        x[k] += 1


class FWResult(NamedTuple):
    x: tuple
    exact: bool
    gap: float
    iterations: int


def _float_dot(u, v):
    return sum(float(a) * float(c) for a, c in zip(u, v))


def frank_wolfe(
    p: Polyhedron,
    ab: Optional[ScalingShift] = None,
    tol: float = 1e-9,
    max_iter: int = 20000,
    refine: bool = True,
) -> FWResult:
    """Minimize the separable quadratic over B(f) or B̃(h) by pairwise Frank-Wolfe.

    Iterates in floating point with exact line search until the duality gap
    drops below ``tol``, then (``refine``) solves the KKT system of the
    face spanned by the nearly tight constraints exactly.  The refined point
    is accepted only if it is an exact member with an exact gap of zero;
    ``exact`` in the result reports whether that happened.
    """
    if p.kind not in ("B", "Btilde"):
        raise ValueError(f"frank_wolfe supports B and Btilde, not {p.kind}")
    n = p.n
    ab = _ab(n, ab)
    a = [float(v) for v in ab.a]
    b = [float(v) for v in ab.b]
    start = linear_maximize(p, [-v for v in ab.b])
    active = {start: 1.0}
    x = [float(v) for v in start]
    gap = float("inf")
    it = 0
    for it in range(1, max_iter + 1):
        g = [xi / ai + bi for xi, ai, bi in zip(x, a, b)]
        s = linear_maximize(p, [-v for v in g])
        gap = _float_dot(g, x) - _float_dot(g, s)
        if gap <= tol:
            break
        away = max(active, key=lambda v: _float_dot(g, v))
        d = [float(si) - float(vi) for si, vi in zip(s, away)]
        curv = sum(di * di / ai for di, ai in zip(d, a))
        if curv <= 0:
            break
        gamma = min(max(-_float_dot(g, d) / curv, 0.0), active[away])
        if gamma <= 0:
            break
        x = [xi + gamma * di for xi, di in zip(x, d)]
        active[s] = active.get(s, 0.0) + gamma
        active[away] -= gamma
        if active[away] <= 1e-15:
            del active[away]
    approx = tuple(q(Fraction(v)) for v in x)
    if refine:
        exact = _refine(p, x, ab)
        if exact is not None:
            return FWResult(exact, True, 0.0, it)
    return FWResult(approx, False, gap, it)


def _exact_gap(p, x, ab):
    g = [div(xi, ai) + bi for xi, ai, bi in zip(x, ab.a, ab.b)]
    s = linear_maximize(p, [-v for v in g])
    return q(sum(gi * (xi - si) for gi, xi, si in zip(g, x, s)))


def is_optimal(p: Polyhedron, x: Sequence, ab: ScalingShift) -> bool:
    """Exact first-order optimality of a member ``x`` (zero Frank-Wolfe gap)."""
    return member(p, x) and _exact_gap(p, point(x), ab) == 0


def _refine(p, x, ab):
    rows_all = []
    for c in p.constraints():
        lhs = sum(x[i] for i in range(p.n) if c.pos >> i & 1) - sum(
            x[i] for i in range(p.n) if c.neg >> i & 1
        )
        rows_all.append((abs(lhs - float(c.rhs)), c))
    tried = set()
    for tol in (1e-7, 1e-6, 1e-5, 1e-4, 1e-3, 1e-2):
        tight = [c for slack, c in rows_all if slack <= tol and (c.pos or c.neg)]
        key = frozenset((c.pos, c.neg) for c in tight)
        if key in tried:
            continue
        tried.add(key)
        cand = _face_solve(p.n, tight, ab)
        if cand is not None and is_optimal(p, cand, ab):
            return cand
    return None


def _face_solve(n, tight, ab):
    """Minimize the quadratic on the affine set where every ``tight`` row is an equality."""
    rows = []
    rhs = []
    for c in tight:
        rows.append([(1 if c.pos >> i & 1 else -1 if c.neg >> i & 1 else 0) for i in range(n)])
        rhs.append(c.rhs)
    keep = _lp.independent_rows(rows)
    rows = [rows[i] for i in keep]
    rhs = [rhs[i] for i in keep]
    a, b = ab.a, ab.b
    if not rows:
        return tuple(q(-ai * bi) for ai, bi in zip(a, b))
    # x = -A(b + C^T lam),  (C A C^T) lam = -r - C A b
    m = len(rows)
    gram = [[sum(rows[u][i] * a[i] * rows[v][i] for i in range(n)) for v in range(m)] for u in range(m)]
    vec = [-rhs[u] - sum(rows[u][i] * a[i] * b[i] for i in range(n)) for u in range(m)]
    try:
        lam = _lp.solve(gram, vec)
    except ValueError:
        return None
    return tuple(
        q(-a[i] * (b[i] + sum(rows[u][i] * lam[u] for u in range(m)))) for i in range(n)
    )


def min_quadratic_bisub(
    h: BisetFunction, ab: Optional[ScalingShift] = None, integral: bool = False
) -> tuple:
    """Minimizer of ``sum x_i^2/(2 a_i) + b_i x_i`` over B̃(h) (or its integral points)."""
    ab = _ab(h.n, ab)
    p = Polyhedron(h, "Btilde")
    probe = linear_maximize(p, [1] * h.n)
    if not member(p, probe):
        raise ValueError("signed greedy vertex is infeasible: the function is not bisubmodular")
    if integral:
        _require_integral(ab, h)
        if h.n > EXHAUSTIVE_N:
            raise UnsupportedError(
                f"integral bisubmodular minimization is exhaustive only up to n={EXHAUSTIVE_N}"
            )
        pts = enumerate_integral_points(p)
        return min(pts, key=lambda x: _integral_key(x, ab))
    free = tuple(q(-ai * bi) for ai, bi in zip(ab.a, ab.b))
    if member(p, free):
        return free
    res = frank_wolfe(p, ab)
    if not res.exact:
        raise RuntimeError(f"exact refinement failed (gap {res.gap:.3g}); result not certified")
    return res.x


def least_element_hyperplane(r, ab: ScalingShift) -> tuple:
    """Least (a, b)-majorized point of {x : x(N) = r}: all x_i/a_i + b_i equal."""
    r = q(r)
    theta = div(r + sum(ai * bi for ai, bi in zip(ab.a, ab.b)), sum(ab.a))
    return tuple(q(ai * theta - ai * bi) for ai, bi in zip(ab.a, ab.b))


@dataclass(frozen=True)
class LeastElementRequest:
    polyhedron: Polyhedron
    ab: ScalingShift
    kind: str
    integral: bool = False


def _base_solve(f: SetFunction, ab, integral):
    if integral:
        _require_integral(ab, f)
        return min_quadratic_base_integral(f, ab.b)
    return min_quadratic_base(f, ab)


def least_element(req: LeastElementRequest) -> tuple:
    """Dispatch to the construction that yields a least element of ``req.kind``.

    Supported pairs: full over B and Bsup; weak_super over P and Btilde;
    weak_sub over Psup and Btilde; weak_abs over P, Psup and Btilde.
    """
    p, ab, kind, integral = req.polyhedron, _ab(req.polyhedron.n, req.ab), req.kind, req.integral
    fam = p.kind
    src = p.source
    if integral:
        _require_integral(ab, src)
    if (kind, fam) in (("full", "B"), ("weak_super", "P")):
        return _base_solve(src, ab, integral)
    if (kind, fam) in (("full", "Bsup"), ("weak_sub", "Psup")):
        return _base_solve(dual(src), ab, integral)
    if (kind, fam) == ("weak_super", "Btilde"):
        return _base_solve(orthant_restriction(src, Biset(src.full, 0)), ab, integral)
    if (kind, fam) == ("weak_sub", "Btilde"):
        lower = orthant_restriction(src, Biset(0, src.full))
        return _base_solve(dual(lower.negate()), ab, integral)
    if kind == "weak_abs" and fam in ("P", "Psup"):
        r = [q(-ai * bi) for ai, bi in zip(ab.a, ab.b)]
        red = reduce(src, r)
        return _base_solve(red if fam == "P" else dual(red), ab, integral)
    if (kind, fam) == ("weak_abs", "Btilde"):
        return min_quadratic_bisub(src, ab, integral)
    raise UnsupportedError(
        f"no least {kind} element is guaranteed over {fam} polyhedra; supported pairs are "
        "full/B, full/Bsup, weak_super/P, weak_super/Btilde, weak_sub/Psup, weak_sub/Btilde, "
        "weak_abs/P, weak_abs/Psup, weak_abs/Btilde"
    )


class DerivativeOracle:
    """Left and right derivatives of separable convex terms ``phi_i``."""

    def __init__(self, left: Callable, right: Callable, n: int):
        self.left = left
        self.right = right
        self.n = n

    @classmethod
    def quadratic(cls, ab: ScalingShift, integral: bool = False) -> "DerivativeOracle":
        """``phi_i(t) = t^2/(2 a_i) + b_i t``; forward/backward differences if ``integral``."""
        a, b = ab.a, ab.b
        if integral:
            return cls(
                lambda i, t: div(2 * t - 1, 2 * a[i]) + b[i],
                lambda i, t: div(2 * t + 1, 2 * a[i]) + b[i],
                len(a),
            )
        grad = lambda i, t: div(t, a[i]) + b[i]  # noqa: E731
        return cls(grad, grad, len(a))


class ExchangeCheck(NamedTuple):
    ok: bool
    pair: Optional[tuple]  # (i, k): lowering x_i and raising x_k would help


def check_exchange_optimality(p: Polyhedron, x: Sequence, phi: DerivativeOracle) -> ExchangeCheck:
    """Whether ``phi_k^+(x_k) >= phi_i^-(x_i)`` for every feasible exchange (i, k)."""
    if p.kind not in ("B", "Bsup"):
        raise ValueError(f"exchange optimality is implemented for B and Bsup, not {p.kind}")
    fam = tight_family(p, x)
    x = point(x)
    sup = p.kind == "Bsup"
    for i in range(p.n):
        for k in range(p.n):
            if i != k and feasible_exchange(fam, i, k, sup):
                if phi.right(k, x[k]) < phi.left(i, x[i]):
                    return ExchangeCheck(False, (i, k))
    return ExchangeCheck(True, None)
