"""Deliberately dumb reference oracles used to validate the fast ones."""
from __future__ import annotations

from itertools import combinations, permutations

from ..graph import CliqueFamily, Graph, is_clique


def brute_force_hamiltonian(g: Graph) -> list[str] | None:
    """Try every ordering with the first vertex fixed."""
    vs = list(g.vertices)
    if len(vs) < 3:
        return None
    first, rest = vs[0], vs[1:]
    for perm in permutations(rest):
        seq = [first, *perm]
        if all(g.has_edge(seq[k], seq[(k + 1) % len(seq)]) for k in range(len(seq))):
            return seq
    return None


def brute_force_maximal_cliques(g: Graph) -> CliqueFamily:
    vs = sorted(g.vertices)
    cliques = [set(c) for size in range(1, len(vs) + 1) for c in combinations(vs, size) if is_clique(g, c)]
    maximal = [c for c in cliques if not any(c < d for d in cliques)]
    return sorted(tuple(sorted(c)) for c in maximal)
