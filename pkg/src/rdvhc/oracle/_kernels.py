"""Bitmask backtracking kernel for Hamiltonian cycle search.

The kernel source is written once and built twice: compiled with numba's
``njit`` and as plain Python. Set ``RDVHC_DISABLE_NUMBA=1`` to force the
Python build. Both builds visit the same nodes in the same order, so they
return identical cycles and node counts.

The compiled build works on int64 bitmasks and is limited to
``NUMBA_MAX_VERTICES`` vertices; larger graphs always use the Python build,
whose masks are unbounded ints.
"""
from __future__ import annotations

import os

import numpy as np

NUMBA_MAX_VERTICES = 62

FOUND, NONE, EXHAUSTED = 1, 0, -1


def _make_kernels(jit):
    @jit
    def popcount(x):
        c = 0
        while x:
            x &= x - 1
            c += 1
        return c

    @jit
    def bit_index(low):
        k = 0
        while low > 1:
            low >>= 1
            k += 1
        return k

    @jit
    def expand(adj, indep, end, start, unvisited, depth):
        # Candidate mask for the vertex after `end`, or 0 if this branch is dead.
        endbit = 1 << end
        startbit = 1 << start
        # no two vertices of the independent set `indep` can be consecutive
        k = popcount(unvisited)
        if depth > 0:
            n_indep = popcount(unvisited & indep) + ((indep >> end) & 1) + ((indep >> start) & 1)
            if 2 * n_indep > k + 3:
                return 0
        elif 2 * popcount((unvisited | startbit) & indep) > k + 1:
            return 0
        live = unvisited | endbit | startbit
        forced_end = 0
        n_forced_end = 0
        n_forced_start = 0
        rest = unvisited
        while rest:
            low = rest & -rest
            rest ^= low
            v = bit_index(low)
            avail = adj[v] & live
            d = popcount(avail)
            if d < 2:
                return 0
            if d == 2:
                if avail & endbit:
                    forced_end |= low
                    n_forced_end += 1
                if depth > 0 and avail & startbit:
                    n_forced_start += 1
        if depth > 0:
            if n_forced_end > 1 or n_forced_start > 1:
                return 0
            if adj[start] & unvisited == 0:
                return 0
        elif n_forced_end > 2:
            return 0
        # every unvisited vertex must be reachable from `end` through unvisited ones
        reach = adj[end] & unvisited
        frontier = reach
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            grow = adj[bit_index(low)] & unvisited & ~reach
            reach |= grow
            frontier |= grow
        if reach != unvisited:
            return 0
        cand = adj[end] & unvisited
        if forced_end:
            if depth > 0:
                cand &= forced_end
            else:
                # orientation is free at the start: take the lowest forced neighbour
                cand = forced_end & -forced_end
        return cand

    @jit
    def pick(adj, cand, unvisited):
        # fewest onward options first, ties to the lower index
        best = -1
        best_d = 1 << 30
        rest = cand
        while rest:
            low = rest & -rest
            rest ^= low
            w = bit_index(low)
            d = popcount(adj[w] & unvisited)
            if d < best_d:
                best_d = d
                best = w
        return best

    @jit
    def search(adj, indep, n, start, budget, path, cand):
        unvisited = ((1 << n) - 1) ^ (1 << start)
        path[0] = start
        depth = 0
        nodes = 0
        cand[0] = expand(adj, indep, start, start, unvisited, 0)
        while True:
            c = cand[depth]
            if c == 0:
                if depth == 0:
                    return NONE, nodes
                unvisited |= 1 << path[depth]
                depth -= 1
                continue
            if budget > 0 and nodes >= budget:
                return EXHAUSTED, nodes
            w = pick(adj, c, unvisited)
            cand[depth] = c ^ (1 << w)
            depth += 1
            path[depth] = w
            unvisited ^= 1 << w
            nodes += 1
            if unvisited == 0:
                if (adj[w] >> start) & 1:
                    return FOUND, nodes
                cand[depth] = 0
            else:
                cand[depth] = expand(adj, indep, w, start, unvisited, depth)

    return search


_search_py = _make_kernels(lambda f: f)


def _numba_requested() -> bool:
    return os.environ.get("RDVHC_DISABLE_NUMBA", "").strip().lower() not in ("1", "true", "yes", "on")


_search_nb = None
if _numba_requested():
    try:
        import numba

        _search_nb = _make_kernels(numba.njit(cache=False))
    except ImportError:  # pragma: no cover - numba is a declared dependency
        _search_nb = None

HAVE_NUMBA = _search_nb is not None


def run_search(adj_masks: list[int], indep: int, start: int, budget: int,
               backend: str = "auto") -> tuple[int, int, list[int]]:
    """Run the kernel and return ``(status, nodes, path)``.

    ``indep`` must be the bitmask of an independent set of the graph.

    ``backend`` is "auto", "numba" or "python". "auto" uses numba when it is
    enabled and the graph fits in int64 masks.
    """
    n = len(adj_masks)
    use_nb = backend == "numba" or (backend == "auto" and HAVE_NUMBA)
    if use_nb and (_search_nb is None or n > NUMBA_MAX_VERTICES):
        if backend == "numba":
            raise RuntimeError("numba backend unavailable for this graph")
        use_nb = False
    if use_nb:
        adj = np.asarray(adj_masks, dtype=np.int64)
        path = np.zeros(n, dtype=np.int64)
        cand = np.zeros(n, dtype=np.int64)
        status, nodes = _search_nb(adj, indep, n, start, budget, path, cand)
        return int(status), int(nodes), [int(v) for v in path]
    path = [0] * n
    cand = [0] * n
    status, nodes = _search_py(list(adj_masks), indep, n, start, budget, path, cand)
    return status, nodes, path
