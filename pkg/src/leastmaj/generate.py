"""Random instance generators for tests and benchmarks."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Optional

from .ground import popcount
from .setfn import BisetFunction, SetFunction, is_bisubmodular


def repair_submodular(n: int, values) -> SetFunction:
    """Lower values in cardinality order until every local exchange inequality holds.

    For each C (by increasing size), f(C) becomes
    ``min(f(C), f(C-i) + f(C-j) - f(C-i-j))`` over pairs i < j in C; since
    smaller sets are final by then, the result satisfies the local (hence
    global) submodular inequality.
    """
    vals = list(values)
    vals[0] = 0
    for c in sorted(range(1, 1 << n), key=popcount):
        best = vals[c]
        bits = [1 << i for i in range(n) if c >> i & 1]
        for x, bi in enumerate(bits):
            for bj in bits[x + 1:]:
                cand = vals[c ^ bi] + vals[c ^ bj] - vals[c ^ bi ^ bj]
                if cand < best:
                    best = cand
        vals[c] = best
    return SetFunction(n, tuple(vals))


def random_submodular(n: int, rng: random.Random, lo: int = -10, hi: int = 10) -> SetFunction:
    """Integral submodular function from uniform values in [lo, hi], repaired."""
    return repair_submodular(n, [rng.randint(lo, hi) for _ in range(1 << n)])


def random_rational_submodular(n: int, rng: random.Random, den: int = 4) -> SetFunction:
    vals = [Fraction(rng.randint(-10 * den, 10 * den), den) for _ in range(1 << n)]
    return repair_submodular(n, vals)


def random_vector(n: int, rng: random.Random, lo: int = -5, hi: int = 5) -> tuple:
    return tuple(rng.randint(lo, hi) for _ in range(n))


def random_positive(n: int, rng: random.Random, den: int = 4, top: int = 3) -> tuple:
    """Strictly positive rationals with denominator ``den`` up to ``top``."""
    return tuple(Fraction(rng.randint(1, top * den), den) for _ in range(n))


def _blocks(n: int, rng: random.Random):
    c = [rng.randint(-3, 3) for _ in range(n)]
    w = [rng.randint(0, 3) for _ in range(n)]
    k = rng.randint(0, 3)
    steps = sorted((rng.randint(0, 3) for _ in range(n)), reverse=True)
    conc = [0]
    for s in steps:
        conc.append(conc[-1] + s)

    def h(s, t):
        u = s | t
        val = sum(c[i] for i in range(n) if s >> i & 1) - sum(c[i] for i in range(n) if t >> i & 1)
        val += sum(w[i] for i in range(n) if u >> i & 1)
        if u:
            val += k
        return val + conc[popcount(u)]

    return h


def random_bisubmodular(
    n: int, rng: random.Random, perturb: int = 2, tries: int = 50, max_check_n: int = 6
) -> BisetFunction:
    """Integral bisubmodular function.

    Sums a signed modular part, a weighted support measure, a constant on
    nonempty bisets and a concave function of the support size, all of which
    are bisubmodular; then tries small random perturbations, keeping one only
    if the exhaustive check still passes.
    """
    base = BisetFunction.from_callable(n, _blocks(n, rng))
    if n > max_check_n or perturb <= 0:
        return base
    for _ in range(tries):
        vals = list(base.values)
        for _ in range(rng.randint(1, 3)):
            idx = rng.randrange(1, len(vals))
            vals[idx] -= rng.randint(1, perturb)
        cand = BisetFunction(n, tuple(vals))
        if is_bisubmodular(cand, max_n=max_check_n):
            return cand
    return base


def random_box(f_bounds, pad: int = 2) -> list:
    return [(lo - pad, hi + pad) for lo, hi in f_bounds]


def seeded(seed: Optional[int] = None) -> random.Random:
    return random.Random(seed)
