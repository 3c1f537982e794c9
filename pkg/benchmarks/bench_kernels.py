"""Time the compiled and pure-Python search kernels on the same workloads.

    python benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import random
import time

from listdist import kernels
from listdist.generators import book, cprime, cycle, figure1, friendship
from listdist.oracles import sample_assignment
from listdist.symmetry import automorphisms


def workloads(seed):
    rng = random.Random(seed)
    for name, G, k in (("C_8", cycle(8), 3), ("B_4", book(4), 4), ("F_4", friendship(4), 5),
                       ("figure1", figure1(), 3), ("cprime(2)", cprime(2), 3)):
        prep = kernels.prepare(G, automorphisms(G))
        lists = [sample_assignment(G.n, k, rng, universe=k + 2) for _ in range(200)]
        yield f"search {name}", lambda mod, prep=prep, lists=lists: [
            kernels.search(prep, L, backend=mod) for L in lists]
    prep = kernels.prepare(cycle(6))
    yield "find_bad C_6 proper k=2", lambda mod: kernels.find_bad(prep, 2, budget=2_000_000, backend=mod)
    fig = kernels.prepare(figure1(), automorphisms(figure1()))
    yield "find_bad figure1 k=2", lambda mod: kernels.find_bad(fig, 2, budget=200_000, backend=mod)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    mods = kernels.backends()
    if "compiled" not in mods:
        print("compiled extension not available; timing the Python kernels only")
    print(f"{'workload':<28}" + "".join(f"{m:>12}" for m in mods) + f"{'speedup':>10}")
    for label, job in workloads(args.seed):
        best = {}
        for m, mod in mods.items():
            runs = []
            for _ in range(args.repeat):
                t = time.perf_counter()
                job(mod)
                runs.append(time.perf_counter() - t)
            best[m] = min(runs)
        speed = f"{best['python'] / best['compiled']:9.1f}x" if "compiled" in best else ""
        print(f"{label:<28}" + "".join(f"{best[m]:11.3f}s" for m in mods) + speed)


if __name__ == "__main__":
    main()
