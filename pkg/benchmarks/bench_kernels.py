"""Benchmark the enumeration kernel backends against each other.

Runs the full 2^n enumeration (satisfaction counts, agreement totals and
the outcome bitmap) on random three-layer societies with both the
compiled kernel and the pure-Python big-integer fallback, and reports the
best wall time of each.

    python benchmarks/bench_kernels.py --sizes 14,16,18,20 --repeats 5
"""

import argparse
import random
import time

from olfm.kernels import available_backends, enumerate_society
from olfm.society import build_society


def _three_layer_society(rng, n, density=0.4):
    a = max(1, n // 3)
    b = max(1, n // 3)
    bounds = [0, a, a + b, n]
    edges = []
    for m in range(1, 3):
        above = list(range(bounds[m - 1] + 1, bounds[m] + 1))
        for v in range(bounds[m] + 1, bounds[m + 1] + 1):
            chosen = [u for u in above if rng.random() < density]
            edges.extend((u, v) for u in (chosen or [rng.choice(above)]))
    return build_society(n, edges)


def bench(sizes, repeats, seed):
    backends = available_backends()
    print(f"backends: {', '.join(backends)}")
    header = ["n", "edges"] + [f"{b} best (s)" for b in backends]
    if len(backends) == 2:
        header.append("speedup")
    print("\t".join(header))
    for n in sizes:
        rng = random.Random(seed + n)
        society = _three_layer_society(rng, n)
        best = []
        reference = None
        for backend in backends:
            times = []
            for _ in range(repeats):
                start = time.perf_counter()
                result = enumerate_society(society, tie_rule="ones-win", backend=backend)
                times.append(time.perf_counter() - start)
            if reference is None:
                reference = result
            elif result != reference:
                raise AssertionError(f"backend disagreement at n={n}")
            best.append(min(times))
        row = [str(n), str(len(society.edges))] + [f"{t:.4f}" for t in best]
        if len(best) == 2:
            row.append(f"{best[1] / best[0]:.1f}x")
        print("\t".join(row))


def main():
    parser = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    parser.add_argument("--sizes", default="12,14,16,18,20")
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]
    bench(sizes, args.repeats, args.seed)


if __name__ == "__main__":
    main()
