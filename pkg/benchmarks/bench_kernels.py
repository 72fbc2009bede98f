"""Time the compiled kernels against their pure-Python twins.

    python3 benchmarks/bench_kernels.py [--n 10] [--bisub-n 5] [--repeat 3]
"""

import argparse
import itertools
import random
import timeit

from leastmaj.generate import random_bisubmodular, random_submodular
from leastmaj import _pykernels
from leastmaj.ground import popcount
from leastmaj.kernels import BACKEND, backends
from leastmaj.polyhedra import Polyhedron, enumerate_integral_points
from leastmaj.setfn import SetFunction


def cases(n, bisub_n, rng):
    f = random_submodular(n, rng)
    vals = [int(v) for v in f.values]
    x = [rng.randint(-5, 5) for _ in range(n)]
    h = random_bisubmodular(bisub_n, rng, perturb=0)
    hvals = [int(v) for v in h.values]
    # a large point set: the integral base polytope of a concave cardinality function
    pn = 5
    g = SetFunction(pn, tuple(6 * popcount(m) - popcount(m) ** 2 for m in range(1 << pn)))
    pts = enumerate_integral_points(Polyhedron(g, "B"))
    flat = [v for p in pts for v in p]
    npts = len(pts)
    hi = list(_pykernels.subset_extrema(flat, npts, pn)[0])
    perms = [i for p in itertools.permutations(range(pn)) for i in p]
    weight = [1 << i for i in range(pn)]
    table = {
        "local_violation": lambda k: k.local_violation(vals, n),
        "bisub_violation": lambda k: k.bisub_violation(hvals, bisub_n),
        "reduction": lambda k: k.reduction(vals, x, n, True),
        "minimal_minimizer": lambda k: k.minimal_minimizer(vals, x, n),
        "subset_extrema": lambda k: k.subset_extrema(flat, npts, pn),
        "biset_maxima": lambda k: k.biset_maxima(flat, npts, pn),
        "prefix_sweep": lambda k: k.prefix_sweep(flat, npts, pn, hi, perms, len(perms) // pn, [1] * pn, weight),
    }
    if n <= 8:  # the all-pairs scan is 4^n
        table["pairs_violation"] = lambda k: k.pairs_violation(vals, n)
    return table


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=10)
    ap.add_argument("--bisub-n", type=int, default=5)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    kernels = backends()
    table = cases(args.n, args.bisub_n, rng)
    if "cython" not in kernels:
        print("compiled kernels not built; only the Python backend is timed")
    print(f"{'kernel':20s} " + " ".join(f"{name:>12s}" for name in kernels) + "   speedup")
    for label, call in table.items():
        times = {}
        for name, mod in kernels.items():
            times[name] = min(timeit.repeat(lambda: call(mod), number=1, repeat=args.repeat))
        speed = times["python"] / times["cython"] if "cython" in times and times["cython"] else float("nan")
        print(f"{label:20s} " + " ".join(f"{times[k]:12.5f}" for k in kernels) + f"   {speed:7.1f}x")

    # lattice enumeration goes through the public wrapper; time the whole call
    # concave in |A|, so B(f) is a full-dimensional permutahedron-like polytope
    f = SetFunction(5, tuple(6 * popcount(m) - popcount(m) ** 2 for m in range(32)))
    p = Polyhedron(f, "B")
    t = min(timeit.repeat(lambda: enumerate_integral_points(p), number=1, repeat=args.repeat))
    print(f"enumerate B^Z(f), n=5, {len(enumerate_integral_points(p))} points ({BACKEND}): {t:.5f}s")


if __name__ == "__main__":
    main()
