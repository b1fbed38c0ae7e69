"""Compare the compiled and pure-Python search kernels on the same workloads.

    python benchmarks/bench_kernels.py [--repeat N] [--max-n 20]

Each workload runs through the public API inside ``kernels.use_backend`` so
both backends see identical inputs; results are checked for equality.
"""
from __future__ import annotations

import argparse
import time

from ocover import kernels
from ocover.corpus import load_corpus
from ocover.cover import SearchConfig, iter_cycle_covers, search_cycle_cover
from ocover.flows import search_333
from ocover.graph import enumerate_perfect_matchings, gen_flower_snark, gen_named


def workloads(max_n):
    pet = gen_named("petersen")
    corpus = load_corpus(max_n)
    yield "perfect matchings, corpus", lambda: [len(enumerate_perfect_matchings(g)) for g in corpus]
    yield "all 6c4c, corpus", lambda: [sum(1 for _ in iter_cycle_covers(g, 6, 4)) for g in corpus]
    yield "first o6c4c, corpus", lambda: [search_cycle_cover(g, SearchConfig(oriented=True)).count for g in corpus]
    yield "all o6c4c, J5", lambda: search_cycle_cover(gen_flower_snark(5), SearchConfig(oriented=True, mode="count")).count
    yield "all (3,3,3), Petersen", lambda: len(search_333(pet, False, limit=0)[0])


def timed(fn, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--max-n", type=int, default=20)
    args = ap.parse_args(argv)
    try:
        kernels.backend("cython")
    except ImportError:
        print("compiled kernels not built; run `pip install -e . --no-build-isolation` first")
        return 1
    print(f"{'workload':<28}{'cython s':>10}{'python s':>10}{'speedup':>9}")
    for name, fn in workloads(args.max_n):
        with kernels.use_backend("cython"):
            tc, rc = timed(fn, args.repeat)
        with kernels.use_backend("python"):
            tp, rp = timed(fn, args.repeat)
        if rc != rp:
            raise SystemExit(f"{name}: backends disagree ({rc} vs {rp})")
        print(f"{name:<28}{tc:>10.4f}{tp:>10.4f}{tp / tc:>8.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
