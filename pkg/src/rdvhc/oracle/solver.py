"""Exact Hamiltonian cycle search."""
from __future__ import annotations

import time
from dataclasses import dataclass

from ..errors import ResourceExhausted
from ..graph import Cycle, Graph, canonical_cycle, is_hamiltonian_cycle
from ._kernels import EXHAUSTED, FOUND, run_search


@dataclass(frozen=True)
class SolverResult:
    cycle: Cycle | None
    nodes: int
    elapsed: float

    @property
    def found(self) -> bool:
        return self.cycle is not None


def _greedy_independent(adj: list[int], order: list[int]) -> int:
    chosen = blocked = 0
    for v in order:
        if not (blocked >> v) & 1:
            chosen |= 1 << v
            blocked |= adj[v] | (1 << v)
    return chosen


def find_hamiltonian_cycle(g: Graph, budget: int | None = None, backend: str = "auto") -> SolverResult:
    """Decide whether ``g`` has a Hamiltonian cycle.

    Path-extension backtracking from a minimum-degree vertex over bitmask
    adjacency. Each step bounds how many vertices of a greedy independent set
    can still fit on the remaining path, prunes on unvisited vertices left with fewer than two
    usable neighbours, follows forced degree-2 edges, and cuts branches whose
    unvisited vertices are no longer connected to the path end. The found
    cycle is returned in canonical form.

    Raises ResourceExhausted once more than ``budget`` nodes have been
    expanded; ``None`` or 0 means no limit.
    """
    t0 = time.perf_counter()
    n = len(g)
    if n < 3:
        return SolverResult(None, 0, time.perf_counter() - t0)
    adj = [0] * n
    for v in g.vertices:
        m = 0
        for w in g.neighbors(v):
            m |= 1 << g.index(w)
        adj[g.index(v)] = m
    by_degree = sorted(range(n), key=lambda k: (g.degree(g.vertices[k]), k))
    start = by_degree[0]
    status, nodes, path = run_search(adj, _greedy_independent(adj, by_degree), start, budget or 0, backend)
    elapsed = time.perf_counter() - t0
    if status == EXHAUSTED:
        raise ResourceExhausted(nodes)
    if status == FOUND:
        cycle = canonical_cycle(g.vertices[k] for k in path)
        if not is_hamiltonian_cycle(g, cycle):
            raise AssertionError("kernel returned a sequence that is not a Hamiltonian cycle")
        return SolverResult(cycle, nodes, elapsed)
    return SolverResult(None, nodes, elapsed)
