"""Undirected graphs with named vertices, cycles, and the two core oracles.

Vertex names are opaque strings here; nothing in this module knows about the
X/Y/Z/A roles of the reduction.
"""
from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field

from .errors import ValidationError

Edge = tuple[str, str]
CliqueFamily = list[tuple[str, ...]]


def _edge_key(u: str, w: str) -> Edge:
    return (u, w) if u <= w else (w, u)


@dataclass(frozen=True)
class Graph:
    vertices: tuple[str, ...]
    edges: frozenset[Edge]
    _adj: dict[str, frozenset[str]] = field(init=False, repr=False, compare=False)
    _pos: dict[str, int] = field(init=False, repr=False, compare=False)

    def __init__(self, vertices: Iterable[str], edges: Iterable[Sequence[str]] = ()):
        verts = tuple(vertices)
        pos = {v: k for k, v in enumerate(verts)}
        if len(pos) != len(verts):
            raise ValidationError("duplicate vertex name")
        adj: dict[str, set[str]] = {v: set() for v in verts}
        keys = set()
        for e in edges:
            u, w = e
            if u == w:
                raise ValidationError(f"self-loop at {u}")
            for x in (u, w):
                if x not in pos:
                    raise ValidationError(f"edge endpoint {x} is not a vertex")
            key = _edge_key(u, w)
            if key in keys:
                raise ValidationError(f"duplicate edge {u} {w}")
            keys.add(key)
            adj[u].add(w)
            adj[w].add(u)
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", frozenset(keys))
        object.__setattr__(self, "_adj", {v: frozenset(s) for v, s in adj.items()})
        object.__setattr__(self, "_pos", pos)

    def __contains__(self, v: object) -> bool:
        return v in self._pos

    def __len__(self) -> int:
        return len(self.vertices)

    def index(self, v: str) -> int:
        return self._pos[v]

    def neighbors(self, v: str) -> frozenset[str]:
        return self._adj[v]

    def degree(self, v: str) -> int:
        return len(self._adj[v])

    def has_edge(self, u: str, w: str) -> bool:
        return w in self._adj.get(u, ())

    def sorted_edges(self) -> list[Edge]:
        """Edges ordered by the positions of their endpoints in ``vertices``."""
        out = []
        for u, w in self.edges:
            if self._pos[u] > self._pos[w]:
                u, w = w, u
            out.append((u, w))
        out.sort(key=lambda e: (self._pos[e[0]], self._pos[e[1]]))
        return out


@dataclass(frozen=True)
class Cycle:
    """Cyclic vertex sequence; the last entry is implicitly joined to the first."""

    order: tuple[str, ...]

    def __init__(self, order: Iterable[str]):
        seq = tuple(order)
        if len(seq) < 3:
            raise ValidationError(f"a cycle needs at least 3 vertices, got {len(seq)}")
        if len(set(seq)) != len(seq):
            raise ValidationError("cycle repeats a vertex")
        object.__setattr__(self, "order", seq)

    def __iter__(self) -> Iterator[str]:
        return iter(self.order)

    def __len__(self) -> int:
        return len(self.order)

    def __getitem__(self, k):
        return self.order[k]

    def __str__(self) -> str:
        return " ".join(self.order)

    def pairs(self) -> Iterator[Edge]:
        n = len(self.order)
        for k in range(n):
            yield self.order[k], self.order[(k + 1) % n]


def as_cycle(c: Cycle | Iterable[str]) -> Cycle:
    return c if isinstance(c, Cycle) else Cycle(c)


def canonical_cycle(c: Cycle | Iterable[str]) -> Cycle:
    """Rotate to the smallest vertex, then take the direction with the smaller successor."""
    seq = as_cycle(c).order
    k = seq.index(min(seq))
    fwd = seq[k:] + seq[:k]
    bwd = (fwd[0],) + tuple(reversed(fwd[1:]))
    return Cycle(fwd if fwd[1] <= bwd[1] else bwd)


def is_hamiltonian_cycle(g: Graph, c: Cycle | Iterable[str]) -> bool:
    seq = list(c)
    for v in seq:
        if v not in g:
            raise ValidationError(f"unknown vertex {v}")
    if len(seq) < 3 or len(seq) != len(g) or len(set(seq)) != len(seq):
        return False
    return all(g.has_edge(seq[k], seq[(k + 1) % len(seq)]) for k in range(len(seq)))


def is_clique(g: Graph, members: Iterable[str]) -> bool:
    ms = list(members)
    return all(g.has_edge(ms[a], ms[b]) for a in range(len(ms)) for b in range(a + 1, len(ms)))


def maximal_cliques(g: Graph) -> CliqueFamily:
    """Bron-Kerbosch with Tomita pivoting.

    Each clique is returned as a sorted tuple and the family is sorted, so the
    output does not depend on set iteration order.
    """
    adj = {v: set(g.neighbors(v)) for v in g.vertices}
    found: CliqueFamily = []

    def expand(R: list[str], P: set[str], X: set[str]) -> None:
        if not P and not X:
            found.append(tuple(sorted(R)))
            return
        pivot = max(sorted(P | X), key=lambda u: len(adj[u] & P))
        for v in sorted(P - adj[pivot]):
            expand(R + [v], P & adj[v], X & adj[v])
            P.discard(v)
            X.add(v)

    if g.vertices:
        expand([], set(g.vertices), set())
    found.sort()
    return found
