"""Compare the compiled and pure-Python clique kernels.

    python benchmarks/bench_clique.py [--repeat 3] [--full]

Each workload runs an unseeded exact search plus the all-maximum-cliques
pass, the two kernel-heavy steps of ``verify_theorem``.
"""
import argparse
import random
import statistics
import time

from ekrperm.extremal import BitGraph, build_graph
from ekrperm.extremal import _clique_py
from ekrperm.extremal import clique as clique_mod

try:
    from ekrperm.extremal import _clique_ext
except ImportError:
    _clique_ext = None


def random_graph(nv, p, seed):
    rng = random.Random(seed)
    return BitGraph.from_edges(nv, [(i, j) for i in range(nv) for j in range(i + 1, nv) if rng.random() < p])


def workloads(full):
    yield "S(6,3) t=2", build_graph(6, 3, 2)
    yield "S(7,2) t=1", build_graph(7, 2, 1)
    yield "S(7,3) t=1", build_graph(7, 3, 1)
    yield "G(120, 0.7)", random_graph(120, 0.7, 1)
    if full:
        yield "S(7,4) t=2", build_graph(7, 4, 2)
        yield "G(200, 0.8)", random_graph(200, 0.8, 2)


def time_kernel(kernel, g, repeat):
    clique_mod.kernel = kernel
    samples = []
    size = None
    for _ in range(repeat):
        g.__dict__.pop(f"_relabelled_{kernel.NAME}", None)
        start = time.perf_counter()
        result = clique_mod.max_clique(g, budget=None)
        clique_mod.all_maximum_cliques(g, result.best_size)
        samples.append(time.perf_counter() - start)
        size = result.best_size
    return statistics.median(samples), size


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--full", action="store_true", help="add the slow workloads (minutes in pure Python)")
    args = parser.parse_args()
    kernels = [_clique_py] + ([_clique_ext] if _clique_ext else [])
    original = clique_mod.kernel
    header = f"{'workload':<14}{'V':>6}{'omega':>7}" + "".join(f"{k.NAME + ' s':>12}" for k in kernels)
    if _clique_ext:
        header += f"{'speedup':>10}"
    print(header)
    try:
        for name, g in workloads(args.full):
            times = []
            sizes = set()
            for kernel in kernels:
                t, size = time_kernel(kernel, g, args.repeat)
                times.append(t)
                sizes.add(size)
            assert len(sizes) == 1, f"kernels disagree on {name}: {sizes}"
            line = f"{name:<14}{g.vertex_count:>6}{sizes.pop():>7}" + "".join(f"{t:>12.4f}" for t in times)
            if _clique_ext:
                line += f"{times[0] / times[1]:>9.1f}x"
            print(line)
    finally:
        clique_mod.kernel = original


if __name__ == "__main__":
    main()
