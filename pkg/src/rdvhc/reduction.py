"""Bipartite max-degree-3 instances and their reduction to RDV graphs.

Vertex names of the reduced graph encode their role: ``X<i>`` (one per
m_i), ``Y<j>`` and ``Z<j>`` (one or two per n_j), ``A<i>_<j>`` (one per edge
m_i n_j). Clique-tree nodes are ``K<i>``, ``Kp<j>`` and ``Kpp<j>``.
"""
from __future__ import annotations

import re
from collections import Counter
from collections.abc import Iterable
from dataclasses import dataclass
from itertools import combinations

from .errors import ValidationError
from .graph import Graph
from .rdv import CliqueTree, RootedDirectedTree

_ROLE = re.compile(r"^(?:([XYZ])(\d+)|A(\d+)_(\d+))$")


def x_name(i: int) -> str:
    return f"X{i}"


def y_name(j: int) -> str:
    return f"Y{j}"


def z_name(j: int) -> str:
    return f"Z{j}"


def a_name(i: int, j: int) -> str:
    return f"A{i}_{j}"


def m_name(i: int) -> str:
    return f"m{i}"


def n_name(j: int) -> str:
    return f"n{j}"


def decode(name: str) -> tuple[str, int, int]:
    """Role letter and indices of a reduced-graph vertex.

    ``X<i>`` -> ("X", i, 0); ``Y<j>``/``Z<j>`` -> (role, 0, j); ``A<i>_<j>`` -> ("A", i, j).
    """
    mt = _ROLE.match(name)
    if mt is None:
        raise ValidationError(f"{name} is not a reduced-graph vertex name")
    if mt.group(1):
        k = int(mt.group(2))
        return (mt.group(1), k, 0) if mt.group(1) == "X" else (mt.group(1), 0, k)
    return "A", int(mt.group(3)), int(mt.group(4))


def _degrees(edges) -> tuple[Counter, Counter]:
    dm, dn = Counter(), Counter()
    for i, j in edges:
        dm[i] += 1
        dn[j] += 1
    return dm, dn


@dataclass(frozen=True)
class BipartiteInstance:
    """B = (M, N, E) with |M| = |N| = r; edge (i, j) means m_i n_j."""

    r: int
    edges: tuple[tuple[int, int], ...]

    def __init__(self, r: int, edges: Iterable[tuple[int, int]]):
        es = tuple(sorted((int(i), int(j)) for i, j in edges))
        if r < 2:
            raise ValidationError("r must be at least 2")
        if len(set(es)) != len(es):
            raise ValidationError("duplicate edge")
        for i, j in es:
            if not (1 <= i <= r and 1 <= j <= r):
                raise ValidationError(f"edge ({i},{j}) out of range for r={r}")
        dm, dn = _degrees(es)
        for k in range(1, r + 1):
            if dm[k] not in (2, 3):
                raise ValidationError(f"m{k} has degree {dm[k]}, expected 2 or 3")
            if dn[k] not in (2, 3):
                raise ValidationError(f"n{k} has degree {dn[k]}, expected 2 or 3")
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "edges", es)

    def column(self, j: int) -> list[int]:
        """Indices i with m_i n_j in E, ascending."""
        return [i for i, jj in self.edges if jj == j]

    def n_degree(self, j: int) -> int:
        return len(self.column(j))

    @property
    def deg3(self) -> frozenset[int]:
        return frozenset(j for j in range(1, self.r + 1) if self.n_degree(j) == 3)

    def graph(self) -> Graph:
        verts = [m_name(i) for i in range(1, self.r + 1)] + [n_name(j) for j in range(1, self.r + 1)]
        return Graph(verts, [(m_name(i), n_name(j)) for i, j in self.edges])


@dataclass(frozen=True)
class NormalizationOutcome:
    kind: str  # "normalized" | "trivial-no" | "invalid"
    instance: BipartiteInstance | None = None
    reason: str = ""

    @property
    def normalized(self) -> bool:
        return self.kind == "normalized"


def normalize(r_m: int, r_n: int, edges: Iterable[tuple[int, int]]) -> NormalizationOutcome:
    """Sort a raw bipartite input into a usable instance, a structural no, or garbage.

    Anything that is not a bipartite graph of maximum degree 3 is ``invalid``.
    Unbalanced sides, fewer than two vertices per side and vertices of degree
    at most one all rule out a Hamiltonian cycle, giving ``trivial-no``.
    """
    es = [(int(i), int(j)) for i, j in edges]
    if r_m < 0 or r_n < 0:
        return NormalizationOutcome("invalid", reason="negative side size")
    if len(set(es)) != len(es):
        dup = next(e for e, c in Counter(es).items() if c > 1)
        return NormalizationOutcome("invalid", reason=f"duplicate edge {dup[0]} {dup[1]}")
    for i, j in es:
        if not (1 <= i <= r_m and 1 <= j <= r_n):
            return NormalizationOutcome("invalid", reason=f"edge {i} {j} out of range")
    dm, dn = _degrees(es)
    for side, deg in (("m", dm), ("n", dn)):
        for k, d in sorted(deg.items()):
            if d > 3:
                return NormalizationOutcome("invalid", reason=f"degree {d} at {side}{k} exceeds 3")
    if r_m != r_n:
        return NormalizationOutcome("trivial-no", reason="unbalanced")
    if r_m < 2:
        return NormalizationOutcome("trivial-no", reason="too-small")
    for side, deg, size in (("m", dm, r_m), ("n", dn, r_n)):
        for k in range(1, size + 1):
            if deg[k] <= 1:
                return NormalizationOutcome("trivial-no", reason=f"low-degree {side}{k}")
    return NormalizationOutcome("normalized", BipartiteInstance(r_m, es))


@dataclass(frozen=True)
class ReducedInstance:
    source: BipartiteInstance
    graph: Graph
    clique_names: tuple[str, ...]
    clique_family: tuple[tuple[str, ...], ...]
    clique_tree: CliqueTree

    @property
    def r(self) -> int:
        return self.source.r

    @property
    def deg3(self) -> frozenset[int]:
        return self.source.deg3

    @property
    def labels(self) -> dict[str, tuple[str, ...]]:
        return dict(zip(self.clique_names, self.clique_family))


def _construct_cliques(b: BipartiteInstance) -> tuple[list[str], list[tuple[str, ...]]]:
    names, fam = [], []
    for i in range(1, b.r + 1):
        names.append(f"K{i}")
        fam.append((x_name(i),) + tuple(a_name(s, j) for s, j in b.edges if s <= i))
    for j in range(1, b.r + 1):
        col = tuple(a_name(i, j) for i in b.column(j))
        names.append(f"Kp{j}")
        fam.append((y_name(j),) + col)
        if len(col) == 3:
            names.append(f"Kpp{j}")
            fam.append((z_name(j),) + col)
    return names, fam


def _chain_tree(r: int, deg3: Iterable[int], names: Iterable[str]) -> RootedDirectedTree:
    arcs = [(f"K{i}", f"K{i + 1}") for i in range(1, r)]
    arcs += [(f"K{r}", f"Kp{j}") for j in range(1, r + 1)]
    arcs += [(f"Kp{j}", f"Kpp{j}") for j in sorted(deg3)]
    return RootedDirectedTree(names, arcs)


def build_clique_tree(red: ReducedInstance) -> CliqueTree:
    """Chain K1 -> ... -> Kr, then Kr -> Kp<j> for all j and Kp<j> -> Kpp<j> for degree-3 columns."""
    tree = _chain_tree(red.r, red.deg3, red.clique_names)
    return CliqueTree(tree, red.labels)


def reduce(b: BipartiteInstance) -> ReducedInstance:
    if not isinstance(b, BipartiteInstance):
        raise ValidationError("reduce expects a BipartiteInstance")
    names, fam = _construct_cliques(b)
    r = b.r
    verts = [x_name(i) for i in range(1, r + 1)] + [y_name(j) for j in range(1, r + 1)]
    verts += [z_name(j) for j in sorted(b.deg3)]
    verts += [a_name(i, j) for i, j in b.edges]
    edges = set()
    for clique in fam:
        for u, w in combinations(clique, 2):
            edges.add((u, w) if u <= w else (w, u))
    g = Graph(verts, sorted(edges))
    tree = _chain_tree(r, b.deg3, names)
    return ReducedInstance(b, g, tuple(names), tuple(fam), CliqueTree(tree, dict(zip(names, fam))))


def expected_vertex_count(b: BipartiteInstance) -> int:
    return 2 * b.r + len(b.deg3) + len(b.edges)


def expected_path(red: ReducedInstance, v: str) -> tuple[str, ...]:
    """Clique-tree path a vertex must occupy: one node for X/Y/Z, K_i..K_r then Kp_j (and Kpp_j) for A_ij."""
    role, i, j = decode(v)
    if role == "X":
        return (f"K{i}",)
    if role == "Y":
        return (f"Kp{j}",)
    if role == "Z":
        return (f"Kpp{j}",)
    tail = (f"Kp{j}", f"Kpp{j}") if j in red.deg3 else (f"Kp{j}",)
    return tuple(f"K{s}" for s in range(i, red.r + 1)) + tail
