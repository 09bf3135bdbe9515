"""Seeded bipartite instance generators and exhaustive small-instance enumeration.

Randomness comes from numpy's PCG64 (``numpy.random.default_rng(seed)``), so an
instance is a pure function of ``(r, seed, plant, extra_edge_prob)``.

Draw order, for reproduction elsewhere:

* planted: base cycle m1 n1 m2 n2 ... mr nr m1, i.e. edges (i, i) and (i+1, i);
* unplanted: draw permutations ``s = rng.permutation(r)`` then ``t = rng.permutation(r)``
  until ``s[i] != t[i]`` for all i; edges (i+1, s[i]+1) and (i+1, t[i]+1);
* extras (both modes): the absent cells (i, j) in lexicographic order are
  shuffled by one ``rng.permutation`` call; for each, one ``rng.random()``
  draw is taken, and the edge is added when the draw is below
  ``extra_edge_prob`` and both endpoints still have degree below 3.
"""
from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from itertools import product

import numpy as np

from ..errors import GenerationError, ValidationError
from ..reduction import BipartiteInstance

MAX_RETRIES = 1000


@dataclass(frozen=True)
class GenSpec:
    r: int
    seed: int
    plant: bool = False
    extra_edge_prob: float = 0.25

    def __post_init__(self):
        if self.r < 2:
            raise ValidationError("r must be at least 2")
        if not 0 <= self.seed < 2**64:
            raise ValidationError("seed must be a 64-bit unsigned integer")
        if not 0.0 <= self.extra_edge_prob <= 1.0:
            raise ValidationError("extra_edge_prob must lie in [0, 1]")


def planted_edges(r: int) -> set[tuple[int, int]]:
    return {(i, i) for i in range(1, r + 1)} | {(i % r + 1, i) for i in range(1, r + 1)}


def planted_cycle(r: int) -> list[str]:
    out = []
    for i in range(1, r + 1):
        out += [f"m{i}", f"n{i}"]
    return out


def _add_extras(rng: np.random.Generator, r: int, edges: set, p: float) -> None:
    dm = [0] * (r + 1)
    dn = [0] * (r + 1)
    for i, j in edges:
        dm[i] += 1
        dn[j] += 1
    cells = [(i, j) for i, j in product(range(1, r + 1), repeat=2) if (i, j) not in edges]
    for k in rng.permutation(len(cells)):
        i, j = cells[k]
        u = rng.random()
        if u < p and dm[i] < 3 and dn[j] < 3:
            edges.add((i, j))
            dm[i] += 1
            dn[j] += 1


def gen_bipartite(spec: GenSpec) -> BipartiteInstance:
    rng = np.random.default_rng(spec.seed)
    r = spec.r
    if spec.plant:
        edges = planted_edges(r)
    else:
        for _ in range(MAX_RETRIES):
            s = rng.permutation(r)
            t = rng.permutation(r)
            if np.all(s != t):
                break
        else:
            raise GenerationError(f"no disjoint matching pair after {MAX_RETRIES} draws")
        edges = {(i + 1, int(s[i]) + 1) for i in range(r)} | {(i + 1, int(t[i]) + 1) for i in range(r)}
    _add_extras(rng, r, edges, spec.extra_edge_prob)
    return BipartiteInstance(r, edges)


def enumerate_small_instances(r: int) -> Iterator[BipartiteInstance]:
    """Every instance on r + r vertices with all degrees in {2, 3}, in sorted edge-list order."""
    if r not in (2, 3):
        raise ValidationError("exhaustive enumeration supports r = 2 or 3 only")
    cells = list(product(range(1, r + 1), repeat=2))
    found = []
    for bits in product((0, 1), repeat=len(cells)):
        es = [c for c, b in zip(cells, bits) if b]
        dm = [sum(1 for i, _ in es if i == k) for k in range(1, r + 1)]
        dn = [sum(1 for _, j in es if j == k) for k in range(1, r + 1)]
        if all(d in (2, 3) for d in dm + dn):
            found.append(tuple(es))
    for es in sorted(found):
        yield BipartiteInstance(r, es)
