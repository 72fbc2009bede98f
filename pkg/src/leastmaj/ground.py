"""Ground-set combinatorics: subsets as bitmasks, bisets, signs, permutations.

Index ``i`` (0-based) corresponds to element ``i + 1`` of the ground set and
to bit ``i`` of a mask.  Biset tables use a ternary index: digit ``i`` is 0
when ``i`` is in neither part, 1 when it is in the positive part and 2 when
it is in the negative part.
"""

from __future__ import annotations

import itertools
from typing import Iterator, NamedTuple, Sequence

MAX_SET_N = 16
MAX_BISET_N = 12

# _TERN[mask] = sum of 3**i over bits i of mask
_TERN = [0] * (1 << MAX_BISET_N)
for _m in range(1, 1 << MAX_BISET_N):
    _low = (_m & -_m).bit_length() - 1
    _TERN[_m] = _TERN[_m & (_m - 1)] + 3 ** _low
del _m, _low


class Biset(NamedTuple):
    """Ordered pair ``(S, T)`` of disjoint subsets, stored as masks."""

    pos: int
    neg: int

    def check(self) -> "Biset":
        if self.pos < 0 or self.neg < 0:
            raise ValueError("masks must be non-negative")
        if self.pos & self.neg:
            raise ValueError(f"biset parts overlap: {self.pos:#b} & {self.neg:#b}")
        return self

    def __str__(self) -> str:
        return f"({fmt_set(self.pos)}, {fmt_set(self.neg)})"


class GroundSet(NamedTuple):
    n: int

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def subsets(self) -> range:
        return range(1 << self.n)

    def bisets(self) -> Iterator[Biset]:
        return enumerate_bisets(self.n)


def check_n(n: int, limit: int = MAX_SET_N) -> int:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"ground set size must be a positive integer, got {n!r}")
    if n > limit:
        raise ValueError(f"ground set size {n} exceeds the supported maximum {limit}")
    return n


def full_mask(n: int) -> int:
    return (1 << n) - 1


def members(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def mask_of(indices) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def fmt_set(mask: int) -> str:
    """1-based rendering, e.g. ``{1,3}``."""
    return "{" + ",".join(str(i + 1) for i in members(mask)) + "}"


def subset_sum(x: Sequence, mask: int):
    total = 0
    i = 0
    while mask:
        if mask & 1:
            total += x[i]
        mask >>= 1
        i += 1
    return total


def signed_sum(x: Sequence, pos: int, neg: int):
    """``x(S) - x(T)``."""
    return subset_sum(x, pos) - subset_sum(x, neg)


def biset_index(pos: int, neg: int) -> int:
    return _TERN[pos] + 2 * _TERN[neg]


def biset_from_index(idx: int, n: int) -> Biset:
    pos = neg = 0
    for i in range(n):
        idx, d = divmod(idx, 3)
        if d == 1:
            pos |= 1 << i
        elif d == 2:
            neg |= 1 << i
    return Biset(pos, neg)


def reduced_union(u1: Biset, u2: Biset) -> Biset:
    """``((S1|S2) - (T1|T2), (T1|T2) - (S1|S2))``."""
    Biset(*u1).check()
    Biset(*u2).check()
    s = u1[0] | u2[0]
    t = u1[1] | u2[1]
    return Biset(s & ~t, t & ~s)


def reduced_intersection(u1: Biset, u2: Biset) -> Biset:
    Biset(*u1).check()
    Biset(*u2).check()
    return Biset(u1[0] & u2[0], u1[1] & u2[1])


def biset_le(u1: Biset, u2: Biset) -> bool:
    """Containment ``(S1,T1) ⊑ (S2,T2)``."""
    return (u1[0] & ~u2[0]) == 0 and (u1[1] & ~u2[1]) == 0


def check_signs(s: Sequence[int], n: int) -> tuple[int, ...]:
    s = tuple(s)
    if len(s) != n:
        raise ValueError(f"sign vector has length {len(s)}, expected {n}")
    if any(v not in (1, -1) for v in s):
        raise ValueError(f"sign entries must be +1 or -1: {s}")
    return s


def biset_from_sign(x_mask: int, s: Sequence[int]) -> Biset:
    """``X | s``: split ``X`` by the sign of each member."""
    pos = neg = 0
    for i in members(x_mask):
        if s[i] > 0:
            pos |= 1 << i
        else:
            neg |= 1 << i
    return Biset(pos, neg)


def orthant_of_signs(s: Sequence[int]) -> Biset:
    return biset_from_sign(full_mask(len(s)), s)


def check_permutation(pi: Sequence[int], n: int) -> tuple[int, ...]:
    """Validate a 0-based permutation of ``range(n)``."""
    pi = tuple(pi)
    if sorted(pi) != list(range(n)):
        raise ValueError(f"not a permutation of {n} indices: {pi}")
    return pi


def permutations(n: int) -> Iterator[tuple[int, ...]]:
    return itertools.permutations(range(n))


def sign_vectors(n: int) -> Iterator[tuple[int, ...]]:
    return itertools.product((1, -1), repeat=n)


def enumerate_bisets(n: int) -> Iterator[Biset]:
    """All ``3**n`` bisets, in ternary-index order."""
    check_n(n, MAX_BISET_N)
    for idx in range(3 ** n):
        yield biset_from_index(idx, n)


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask``, including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask
