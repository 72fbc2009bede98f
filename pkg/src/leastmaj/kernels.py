"""Backend selection for the integer kernels.

The compiled ``_ckernels`` extension is used when it was built; otherwise,
or when ``LEASTMAJ_PURE_PYTHON`` is set, the pure-Python twin is used.  The
wrappers here also fall back to Python for any input whose magnitude could
overflow 64-bit intermediates, so callers never need to care which backend
runs.
"""

from __future__ import annotations

import os

from . import _pykernels

try:
    if os.environ.get("LEASTMAJ_PURE_PYTHON"):
        raise ImportError("pure-python backend forced")
    from . import _ckernels as _native
except ImportError:
    _native = None

BACKEND = "cython" if _native is not None else "python"

# |value| bound under which sums of a few dozen terms stay inside int64
_SAFE = 1 << 55


def _fits(*seqs) -> bool:
    for seq in seqs:
        for v in seq:
            if v >= _SAFE or v <= -_SAFE:
                return False
    return True


def _pick(*seqs, bound_terms: int = 4):
    if _native is None:
        return _pykernels
    for seq in seqs:
        for v in seq:
            if abs(v) * bound_terms >= _SAFE:
                return _pykernels
    return _native


def local_violation(vals, n):
    return _pick(vals).local_violation(vals, n)


def pairs_violation(vals, n):
    return _pick(vals).pairs_violation(vals, n)


def bisub_violation(vals, n):
    return _pick(vals).bisub_violation(vals, n)


def reduction(vals, v, n, minimize=True):
    return _pick(vals, v, bound_terms=n + 1).reduction(vals, v, n, minimize)


def minimal_minimizer(vals, x, n):
    return _pick(vals, x, bound_terms=n + 1).minimal_minimizer(vals, x, n)


def enumerate_lattice(n, lo, hi, cons_pos, cons_neg, cons_rhs):
    return _pick(lo, hi, cons_rhs, bound_terms=n + 2).enumerate_lattice(
        n, lo, hi, cons_pos, cons_neg, cons_rhs
    )


def subset_extrema(flat, npts, n):
    return _pick(flat, bound_terms=n + 1).subset_extrema(flat, npts, n)


def biset_maxima(flat, npts, n):
    return _pick(flat, bound_terms=2 * n + 1).biset_maxima(flat, npts, n)


def prefix_sweep(flat, npts, n, table, perms, nperm, coef, weight):
    return _pick(flat, table, bound_terms=2 * n + 1).prefix_sweep(
        flat, npts, n, table, perms, nperm, coef, weight
    )


def backends() -> dict:
    """Available kernel modules by name (for tests and benchmarks)."""
    out = {"python": _pykernels}
    if _native is not None:
        out["cython"] = _native
    return out
