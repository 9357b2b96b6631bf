"""Benchmark the compiled word kernel against the pure-Python twin.

Run:  python3 benchmarks/bench_core.py [--repeat N]
"""

import argparse
import random
import time

from g2kl import _core_py

try:
    from g2kl import _core_cy
except ImportError:
    _core_cy = None


def make_words(n, maxlen, seed):
    rng = random.Random(seed)
    return [bytes(rng.randint(0, 2) for _ in range(rng.randint(maxlen // 2, maxlen)))
            for _ in range(n)]


def bench(fn, repeat):
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best


def workloads(core):
    words = make_words(4000, 28, 11)
    points = [core.eval_word(w) for w in words]
    lens = [core.length_from_point(a, b) for a, b in points]
    oracle_words = make_words(30, 14, 13)

    def canonicalize():
        for a, b in points:
            core.canonical_from_point(a, b)

    def evaluate():
        for w in words:
            core.eval_word(w)

    def bruhat():
        m = len(points)
        for i in range(0, m, 7):
            for j in range(0, m, 97):
                pa, la = points[i], lens[i]
                pb, lb = points[j], lens[j]
                core.bruhat_leq(pa[0], pa[1], la, pb[0], pb[1], lb)

    def subwords():
        for w in oracle_words:
            core.subword_points(w)

    return [("evaluate 4k words", evaluate),
            ("canonicalize 4k points", canonicalize),
            ("bruhat ~3.4k pairs", bruhat),
            ("subword sets, 30 words <= 14", subwords)]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    if _core_cy is None:
        print("compiled core not built; only the pure backend is available")

    rows = []
    for name, fn_pure in workloads(_core_py):
        t_pure = bench(fn_pure, args.repeat)
        row = [name, "%8.1f ms" % (t_pure * 1e3)]
        if _core_cy is not None:
            fn_cy = dict(workloads(_core_cy))[name]
            t_cy = bench(fn_cy, args.repeat)
            row += ["%8.1f ms" % (t_cy * 1e3), "%6.1fx" % (t_pure / t_cy)]
        rows.append(row)

    header = ["workload", "pure"] + (["cython", "speedup"] if _core_cy else [])
    widths = [max(len(r[i]) for r in rows + [header]) for i in range(len(header))]
    print("  ".join(h.ljust(widths[i]) for i, h in enumerate(header)))
    for r in rows:
        print("  ".join(x.ljust(widths[i]) for i, x in enumerate(r)))


if __name__ == "__main__":
    main()
