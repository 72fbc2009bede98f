"""Set functions on ``2^N`` and biset functions on ``3^N``.

Both are dense, immutable tables of exact rationals.  Validity checks run on
integer-scaled copies of the tables through :mod:`leastmaj.kernels`, which is
exact because the (bi)submodular inequalities are invariant under positive
scaling.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence

from . import kernels
from .exact import Rational, common_denominator, q, scaled
from .ground import (
    MAX_BISET_N,
    MAX_SET_N,
    Biset,
    biset_from_index,
    biset_index,
    check_n,
    full_mask,
)

SUBMODULAR = "submodular"
SUPERMODULAR = "supermodular"
_KINDS = (SUBMODULAR, SUPERMODULAR)


@dataclass(frozen=True)
class SetFunction:
    """Values of ``f`` on every subset, indexed by bitmask.

    ``kind`` records whether the table is meant as a submodular or a
    supermodular function; it is a tag, not a verified property.
    """

    n: int
    values: tuple
    kind: str = SUBMODULAR
    _scaled: list = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        check_n(self.n, MAX_SET_N)
        if self.kind not in _KINDS:
            raise ValueError(f"unknown kind {self.kind!r}")
        vals = tuple(q(v) for v in self.values)
        if len(vals) != 1 << self.n:
            raise ValueError(f"expected {1 << self.n} values, got {len(vals)}")
        if vals[0] != 0:
            raise ValueError("value on the empty set must be 0")
        object.__setattr__(self, "values", vals)

    def __call__(self, mask: int) -> Rational:
        return self.values[mask]

    @property
    def full(self) -> int:
        return full_mask(self.n)

    @classmethod
    def from_callable(cls, n: int, fn: Callable[[int], object], kind: str = SUBMODULAR):
        """Tabulate ``fn(mask)``; the empty-set value is forced to 0."""
        return cls(n, (0,) + tuple(fn(m) for m in range(1, 1 << n)), kind)

    @classmethod
    def modular(cls, c: Sequence, kind: str = SUBMODULAR):
        c = [q(v) for v in c]
        n = len(c)
        vals = [0] * (1 << n)
        for m in range(1, 1 << n):
            low = m & -m
            vals[m] = vals[m ^ low] + c[low.bit_length() - 1]
        return cls(n, tuple(vals), kind)

    def negate(self) -> "SetFunction":
        other = SUPERMODULAR if self.kind == SUBMODULAR else SUBMODULAR
        return SetFunction(self.n, tuple(-v for v in self.values), other)

    def int_table(self) -> list[int]:
        """Values scaled by their common denominator (cached)."""
        if self._scaled is None:
            d = common_denominator(self.values)
            object.__setattr__(self, "_scaled", scaled(self.values, d))
        return self._scaled

    def is_integral(self) -> bool:
        return all(isinstance(v, int) for v in self.values)

    def restrict(self, indices: Sequence[int]) -> "SetFunction":
        """``f`` restricted to subsets of ``indices`` (relabelled 0..k-1)."""
        k = len(indices)
        bits = [1 << i for i in indices]
        vals = [0] * (1 << k)
        glob = [0] * (1 << k)
        for m in range(1, 1 << k):
            low = m & -m
            glob[m] = glob[m ^ low] | bits[low.bit_length() - 1]
            vals[m] = self.values[glob[m]]
        return SetFunction(k, tuple(vals), self.kind)

    def contract(self, fixed: int, indices: Sequence[int]) -> "SetFunction":
        """``A -> f(A | fixed) - f(fixed)`` on subsets of ``indices``."""
        k = len(indices)
        bits = [1 << i for i in indices]
        base = self.values[fixed]
        vals = [0] * (1 << k)
        glob = [0] * (1 << k)
        for m in range(1, 1 << k):
            low = m & -m
            glob[m] = glob[m ^ low] | bits[low.bit_length() - 1]
            vals[m] = self.values[glob[m] | fixed] - base
        return SetFunction(k, tuple(vals), self.kind)


@dataclass(frozen=True)
class BisetFunction:
    """Values of ``h`` on every biset, in ternary-index order."""

    n: int
    values: tuple
    _scaled: list = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        check_n(self.n, MAX_BISET_N)
        vals = tuple(q(v) for v in self.values)
        if len(vals) != 3 ** self.n:
            raise ValueError(f"expected {3 ** self.n} values, got {len(vals)}")
        if vals[0] != 0:
            raise ValueError("value on (∅, ∅) must be 0")
        object.__setattr__(self, "values", vals)

    def __call__(self, pos: int, neg: int) -> Rational:
        if pos & neg:
            raise ValueError("biset parts overlap")
        return self.values[biset_index(pos, neg)]

    @property
    def full(self) -> int:
        return full_mask(self.n)

    @classmethod
    def from_callable(cls, n: int, fn: Callable[[int, int], object]):
        vals = [0] * 3 ** n
        for idx in range(1, 3 ** n):
            b = biset_from_index(idx, n)
            vals[idx] = fn(b.pos, b.neg)
        return cls(n, tuple(vals))

    @classmethod
    def from_entries(cls, n: int, entries):
        """Build from ``(pos, neg, value)`` triples covering every biset once."""
        check_n(n, MAX_BISET_N)
        vals = [None] * 3 ** n
        for pos, neg, value in entries:
            Biset(pos, neg).check()
            if pos >> n or neg >> n:
                raise ValueError(f"biset ({pos}, {neg}) outside a ground set of size {n}")
            idx = biset_index(pos, neg)
            if vals[idx] is not None:
                raise ValueError(f"duplicate entry for biset ({pos}, {neg})")
            vals[idx] = value
        missing = [biset_from_index(i, n) for i, v in enumerate(vals) if v is None]
        if missing:
            raise ValueError(f"{len(missing)} bisets missing, first {tuple(missing[0])}")
        return cls(n, tuple(vals))

    def entries(self):
        for idx, v in enumerate(self.values):
            b = biset_from_index(idx, self.n)
            yield b.pos, b.neg, v

    def int_table(self) -> list[int]:
        if self._scaled is None:
            d = common_denominator(self.values)
            object.__setattr__(self, "_scaled", scaled(self.values, d))
        return self._scaled

    def is_integral(self) -> bool:
        return all(isinstance(v, int) for v in self.values)


def submodular_violation(f: SetFunction, mode: str = "local") -> Optional[tuple[int, int]]:
    """A pair ``(A, B)`` with ``f(A) + f(B) < f(A|B) + f(A&B)``, or None.

    ``mode="local"`` uses the O(2^n n^2) exchange condition on
    ``A+i, A+j``; ``mode="pairs"`` scans every pair of subsets.
    """
    return _violation(f.int_table(), f.n, mode)


def _violation(vals, n, mode):
    if mode == "local":
        hit = kernels.local_violation(vals, n)
        if hit is None:
            return None
        a, i, j = hit
        return (a | 1 << i, a | 1 << j)
    if mode == "pairs":
        return kernels.pairs_violation(vals, n)
    raise ValueError(f"unknown mode {mode!r}")


def is_submodular(f: SetFunction, mode: str = "local") -> bool:
    return submodular_violation(f, mode) is None


def supermodular_violation(g: SetFunction, mode: str = "local") -> Optional[tuple[int, int]]:
    return _violation([-v for v in g.int_table()], g.n, mode)


def is_supermodular(g: SetFunction, mode: str = "local") -> bool:
    return supermodular_violation(g, mode) is None


def bisubmodular_violation(h: BisetFunction, max_n: int = 8) -> Optional[tuple[Biset, Biset]]:
    """Exhaustive pair check; ground sets above ``max_n`` are refused."""
    if h.n > max_n:
        raise ValueError(
            f"exhaustive bisubmodularity check refused for n={h.n} > {max_n}; raise max_n to force it"
        )
    hit = kernels.bisub_violation(h.int_table(), h.n)
    if hit is None:
        return None
    return biset_from_index(hit[0], h.n), biset_from_index(hit[1], h.n)


def is_bisubmodular(h: BisetFunction, max_n: int = 8) -> bool:
    return bisubmodular_violation(h, max_n) is None


def dual(f: SetFunction) -> SetFunction:
    """``f#(A) = f(N) - f(N - A)`` with the kind tag flipped."""
    full = f.full
    fn = f.values[full]
    other = SUPERMODULAR if f.kind == SUBMODULAR else SUBMODULAR
    return SetFunction(f.n, tuple(fn - f.values[full ^ m] for m in range(1 << f.n)), other)


def reduce(f: SetFunction, v: Sequence) -> SetFunction:
    """Reduction by ``v``: min (submodular) or max (supermodular) of f(Z) + v(A - Z)."""
    v = [q(c) for c in v]
    if len(v) != f.n:
        raise ValueError(f"vector has length {len(v)}, expected {f.n}")
    d = common_denominator(list(f.values) + v)
    table = scaled(f.values, d)
    vec = scaled(v, d)
    out = kernels.reduction(table, vec, f.n, f.kind == SUBMODULAR)
    return SetFunction(f.n, tuple(q(Fraction(x, d)) for x in out), f.kind)


def orthant_restriction(h: BisetFunction, orthant: Biset) -> SetFunction:
    """``X -> h(S & X, T & X)`` for an orthant ``(S, T)`` with ``S | T = N``."""
    s, t = Biset(*orthant).check()
    if s | t != h.full:
        raise ValueError("not an orthant: the two parts must cover the ground set")
    vals = tuple(h(s & m, t & m) for m in range(1 << h.n))
    return SetFunction(h.n, vals, SUBMODULAR)

