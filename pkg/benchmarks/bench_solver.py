"""Time the numba and pure-Python solver kernels on reduced graphs.

    python benchmarks/bench_solver.py --r 4 5 6 --count 20
"""
import argparse
import time

from rdvhc.oracle import GenSpec, find_hamiltonian_cycle, gen_bipartite
from rdvhc.oracle import _kernels
from rdvhc.reduction import reduce


def bench(graphs, backend):
    nodes = 0
    answers = []
    t0 = time.perf_counter()
    for g in graphs:
        res = find_hamiltonian_cycle(g, backend=backend)
        nodes += res.nodes
        answers.append((res.cycle, res.nodes))
    return time.perf_counter() - t0, nodes, answers


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--r", type=int, nargs="+", default=[4, 5, 6])
    ap.add_argument("--count", type=int, default=20)
    args = ap.parse_args()
    if not _kernels.HAVE_NUMBA:
        raise SystemExit("numba backend disabled (RDVHC_DISABLE_NUMBA set?)")

    # compile once outside the timed region
    warm = reduce(gen_bipartite(GenSpec(2, 0, plant=True))).graph
    find_hamiltonian_cycle(warm, backend="numba")

    print(f"{'r':>3} {'graphs':>6} {'nodes':>10} {'numba s':>9} {'python s':>9} {'speedup':>8}")
    for r in args.r:
        graphs = [reduce(gen_bipartite(GenSpec(r, seed, plant=bool(seed % 2)))).graph
                  for seed in range(args.count)]
        t_nb, nodes, a_nb = bench(graphs, "numba")
        t_py, _, a_py = bench(graphs, "python")
        assert a_nb == a_py, "backends disagree"
        print(f"{r:>3} {len(graphs):>6} {nodes:>10} {t_nb:>9.3f} {t_py:>9.3f} {t_py / max(t_nb, 1e-9):>7.1f}x")


if __name__ == "__main__":
    main()
