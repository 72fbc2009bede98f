"""Majorization orders and their (a, b)-scaled variants.

The scaled orders are decided with piecewise-linear test functions: with
``t_i = x_i / a_i + b_i``

* weak_sub:   sum a_i max(0, alpha + t_i)
* weak_super: sum a_i max(0, alpha - t_i)
* weak_abs:   sum a_i max(alpha - t_i, 0, alpha + t_i)

``x`` is below ``y`` iff the sum for ``x`` never exceeds the one for ``y``.
Both sides are piecewise linear with equal slopes outside the outermost
kinks, so checking every kink is exact.
"""

from __future__ import annotations

from typing import NamedTuple, Optional, Sequence

from .exact import div, point, q

KINDS = ("full", "weak_sub", "weak_super", "weak_abs")


class ScalingShift(NamedTuple):
    a: tuple
    b: tuple

    @classmethod
    def make(cls, n: int, a=None, b=None) -> "ScalingShift":
        a = point(a) if a is not None else (1,) * n
        b = point(b) if b is not None else (0,) * n
        if len(a) != n or len(b) != n:
            raise ValueError(f"scaling and shift vectors must have length {n}")
        if any(v <= 0 for v in a):
            raise ValueError("scaling vector entries must be strictly positive")
        return cls(a, b)

    def is_unit(self) -> bool:
        return all(v == 1 for v in self.a)


def _check_kind(kind: str) -> None:
    if kind not in KINDS:
        raise ValueError(f"unknown majorization kind {kind!r}; expected one of {', '.join(KINDS)}")


def _pair(x, y):
    x, y = point(x), point(y)
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")
    return x, y


def _prefix(vals):
    out, s = [], 0
    for v in vals:
        s += v
        out.append(s)
    return out


def classical_compare(x: Sequence, y: Sequence, kind: str) -> bool:
    """Whether ``x`` is majorized by ``y`` in the classical sense ``kind``."""
    _check_kind(kind)
    x, y = _pair(x, y)
    if kind == "full":
        return sum(x) == sum(y) and classical_compare(x, y, "weak_sub")
    if kind == "weak_sub":
        px = _prefix(sorted(x, reverse=True))
        py = _prefix(sorted(y, reverse=True))
        return all(u <= v for u, v in zip(px, py))
    if kind == "weak_super":
        px = _prefix(sorted(x))
        py = _prefix(sorted(y))
        return all(u >= v for u, v in zip(px, py))
    px = _prefix(sorted((abs(v) for v in x), reverse=True))
    py = _prefix(sorted((abs(v) for v in y), reverse=True))
    return all(u <= v for u, v in zip(px, py))


def _transform(x, ab):
    return [xi + bi if ai == 1 else q(div(xi, ai) + bi) for xi, ai, bi in zip(x, ab.a, ab.b)]


def _sub_value(t, a, alpha):
    return sum(ai * max(0, alpha + ti) for ti, ai in zip(t, a))


def _super_value(t, a, alpha):
    return sum(ai * max(0, alpha - ti) for ti, ai in zip(t, a))


def _abs_value(t, a, alpha):
    return sum(ai * max(alpha - ti, 0, alpha + ti) for ti, ai in zip(t, a))


def family_value(kind: str, t: Sequence, a: Sequence, alpha) -> object:
    """Value of the test function of ``kind`` at ``alpha`` for transformed data ``t``."""
    if kind == "weak_sub":
        return _sub_value(t, a, alpha)
    if kind == "weak_super":
        return _super_value(t, a, alpha)
    if kind == "weak_abs":
        return _abs_value(t, a, alpha)
    raise ValueError(f"no single test function for kind {kind!r}")


def breakpoints(kind: str, tx: Sequence, ty: Sequence) -> list:
    pts = list(tx) + list(ty)
    if kind == "weak_sub":
        cands = [-t for t in pts]
    elif kind == "weak_super":
        cands = list(pts)
    else:
        cands = [abs(t) for t in pts] + [-abs(t) for t in pts]
    return sorted(set(cands))


def _compare_transformed(tx, ty, a, kind, method):
    if kind == "full":
        return _compare_transformed(tx, ty, a, "weak_sub", method) and _compare_transformed(
            tx, ty, a, "weak_super", method
        )
    if method == "prefix":
        return classical_compare(tx, ty, kind)
    for alpha in breakpoints(kind, tx, ty):
        if family_value(kind, tx, a, alpha) > family_value(kind, ty, a, alpha):
            return False
    return True


def _method(ab, method):
    if method not in ("auto", "breakpoints", "prefix"):
        raise ValueError(f"unknown method {method!r}")
    if method == "auto":
        return "prefix" if ab.is_unit() else "breakpoints"
    if method == "prefix" and not ab.is_unit():
        raise ValueError("prefix-sum comparison needs a = 1")
    return method


def ab_compare(x: Sequence, y: Sequence, ab: ScalingShift, kind: str, method: str = "auto") -> bool:
    """Whether ``x`` is (a, b)-majorized by ``y`` in the sense ``kind``.

    ``method="breakpoints"`` evaluates the test functions at every kink;
    ``"prefix"`` (only for a = 1) compares sorted prefix sums of ``x + b``
    and ``y + b``.  ``"auto"`` picks the prefix sums whenever a = 1.
    """
    _check_kind(kind)
    x, y = _pair(x, y)
    if len(ab.a) != len(x):
        raise ValueError("scaling vector length does not match the points")
    if kind == "full" and sum(x) != sum(y):
        return False
    method = _method(ab, method)
    return _compare_transformed(_transform(x, ab), _transform(y, ab), ab.a, kind, method)


class LeastCheck(NamedTuple):
    ok: bool
    counterexample: Optional[tuple]


def is_least_element(
    x_star: Sequence, candidates, ab: ScalingShift, kind: str, method: str = "auto"
) -> LeastCheck:
    """Whether ``x_star`` is below every candidate; returns a failing one otherwise."""
    _check_kind(kind)
    x_star = point(x_star)
    cands = [point(c) for c in candidates]
    if x_star not in cands:
        raise ValueError("x_star is not among the candidates")
    if any(len(y) != len(x_star) for y in cands):
        raise ValueError("candidates must have the same length as x_star")
    method = _method(ab, method)
    tx = _transform(x_star, ab)
    total = sum(x_star)
    for y in cands:
        if kind == "full" and sum(y) != total:
            return LeastCheck(False, y)
        if not _compare_transformed(tx, _transform(y, ab), ab.a, kind, method):
            return LeastCheck(False, y)
    return LeastCheck(True, None)
