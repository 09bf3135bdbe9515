"""Rooted directed trees, directed-path families and clique-tree certificates.

A graph is a rooted directed path (RDV) graph exactly when its maximal cliques
can be arranged as the nodes of a rooted directed tree in which, for every
vertex, the cliques containing it form a directed path. ``verify_rdp_clique_tree``
checks a candidate arrangement against an independent clique enumeration.
"""
from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from itertools import combinations

from .errors import CliqueTreeError, ValidationError
from .graph import Graph, maximal_cliques

DirectedPath = tuple[str, ...]


@dataclass(frozen=True)
class RootedDirectedTree:
    """Nodes plus parent->child arcs.

    Construction only checks that arcs reference declared nodes; the tree
    shape itself is reported by :meth:`problem` so that verifiers can name
    what is wrong instead of failing at construction time.
    """

    nodes: tuple[str, ...]
    arcs: tuple[tuple[str, str], ...]
    _children: dict[str, tuple[str, ...]] = field(init=False, repr=False, compare=False)
    _parents: dict[str, tuple[str, ...]] = field(init=False, repr=False, compare=False)

    def __init__(self, nodes: Iterable[str], arcs: Iterable[tuple[str, str]]):
        ns = tuple(nodes)
        if len(set(ns)) != len(ns):
            raise ValidationError("duplicate tree node name")
        known = set(ns)
        ar = tuple((p, c) for p, c in arcs)
        if len(set(ar)) != len(ar):
            raise ValidationError("duplicate arc")
        children: dict[str, list[str]] = {v: [] for v in ns}
        parents: dict[str, list[str]] = {v: [] for v in ns}
        for p, c in ar:
            for x in (p, c):
                if x not in known:
                    raise ValidationError(f"arc endpoint {x} is not a tree node")
            if p == c:
                raise ValidationError(f"self-arc at {p}")
            children[p].append(c)
            parents[c].append(p)
        object.__setattr__(self, "nodes", ns)
        object.__setattr__(self, "arcs", ar)
        object.__setattr__(self, "_children", {k: tuple(v) for k, v in children.items()})
        object.__setattr__(self, "_parents", {k: tuple(v) for k, v in parents.items()})

    def children(self, v: str) -> tuple[str, ...]:
        return self._children[v]

    def parents(self, v: str) -> tuple[str, ...]:
        return self._parents[v]

    @property
    def root(self) -> str | None:
        roots = [v for v in self.nodes if not self._parents[v]]
        return roots[0] if len(roots) == 1 else None

    def problem(self) -> tuple[str, tuple[str, ...]] | None:
        """First violated rooted-tree condition as ``(reason, nodes)``, or None."""
        if not self.nodes:
            return "empty-tree", ()
        roots = tuple(v for v in self.nodes if not self._parents[v])
        if len(roots) > 1:
            return "multiple-roots", roots
        if not roots:
            return "no-root", ()
        for v in self.nodes:
            if len(self._parents[v]) > 1:
                return "in-degree", (v,)
        seen = {roots[0]}
        stack = [roots[0]]
        while stack:
            for c in self._children[stack.pop()]:
                if c not in seen:
                    seen.add(c)
                    stack.append(c)
        unreached = tuple(v for v in self.nodes if v not in seen)
        if unreached:
            return "unreachable", unreached
        return None

    def check(self) -> None:
        prob = self.problem()
        if prob is not None:
            raise ValidationError(f"not a rooted directed tree: {prob[0]} {' '.join(prob[1])}")


def _induced_degrees(t: RootedDirectedTree, subset: set[str]):
    indeg = {v: 0 for v in subset}
    outdeg = {v: 0 for v in subset}
    for p, c in t.arcs:
        if p in subset and c in subset:
            outdeg[p] += 1
            indeg[c] += 1
    return indeg, outdeg


def is_directed_path(t: RootedDirectedTree, subset: Iterable[str]) -> bool:
    sub = set(subset)
    if not sub:
        raise ValidationError("empty node subset")
    known = set(t.nodes)
    for v in sub:
        if v not in known:
            raise ValidationError(f"unknown tree node {v}")
    indeg, outdeg = _induced_degrees(t, sub)
    if any(d > 1 for d in indeg.values()) or any(d > 1 for d in outdeg.values()):
        return False
    sources = [v for v in sub if indeg[v] == 0]
    if len(sources) != 1:
        return False
    # walk from the source; a path must reach every node of the subset
    v, count = sources[0], 1
    while outdeg[v]:
        v = next(c for c in t.children(v) if c in sub)
        count += 1
    return count == len(sub)


def _order_path(t: RootedDirectedTree, subset: set[str]) -> DirectedPath:
    indeg, _ = _induced_degrees(t, subset)
    v = next(u for u in t.nodes if u in subset and indeg[u] == 0)
    out = [v]
    while True:
        nxt = [c for c in t.children(v) if c in subset]
        if not nxt:
            return tuple(out)
        v = nxt[0]
        out.append(v)


@dataclass(frozen=True)
class CliqueTree:
    tree: RootedDirectedTree
    label: Mapping[str, frozenset[str]]

    def __init__(self, tree: RootedDirectedTree, label: Mapping[str, Iterable[str]]):
        lab = {k: frozenset(v) for k, v in label.items()}
        if set(lab) != set(tree.nodes):
            raise ValidationError("clique-tree labels must cover exactly the tree nodes")
        for k, v in lab.items():
            if not v:
                raise ValidationError(f"empty label at node {k}")
        object.__setattr__(self, "tree", tree)
        object.__setattr__(self, "label", lab)

    def nodes_containing(self, v: str) -> set[str]:
        return {k for k, members in self.label.items() if v in members}


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    reason: str | None = None
    names: tuple[str, ...] = ()
    message: str = ""

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return "OK"
        return f"FAIL {self.reason} {' '.join(self.names)}".rstrip() + (f": {self.message}" if self.message else "")


def verify_rdp_clique_tree(g: Graph, ct: CliqueTree) -> VerificationReport:
    """Check that ``ct`` certifies ``g`` as a rooted directed path graph.

    Order of checks: the tree is a rooted directed tree; the labels are exactly
    the maximal cliques of ``g`` (computed independently); every vertex's
    clique set induces a directed path.
    """
    for node, members in ct.label.items():
        for v in members:
            if v not in g:
                raise ValidationError(f"label of {node} references unknown vertex {v}")
    prob = ct.tree.problem()
    if prob is not None:
        return VerificationReport(False, prob[0], prob[1], "tree is not a rooted directed tree")

    expected = maximal_cliques(g)
    labels = sorted(tuple(sorted(ct.label[k])) for k in ct.tree.nodes)
    if labels != expected:
        missing = [c for c in expected if c not in labels]
        extra = [c for c in labels if c not in expected]
        if extra:
            node = next(k for k in ct.tree.nodes if tuple(sorted(ct.label[k])) in extra)
            return VerificationReport(False, "not-maximal-clique", (node,),
                                      "label is not a maximal clique of the graph")
        if missing:
            return VerificationReport(False, "missing-clique", missing[0],
                                      "maximal clique has no tree node")
        return VerificationReport(False, "duplicate-clique", (), "a maximal clique labels several nodes")

    for v in g.vertices:
        if not is_directed_path(ct.tree, ct.nodes_containing(v)):
            return VerificationReport(False, "not-directed-path", (v,),
                                      "cliques containing this vertex do not form a directed path")
    return VerificationReport(True)


@dataclass(frozen=True)
class DirectedPathFamily:
    tree: RootedDirectedTree
    paths: Mapping[str, DirectedPath]

    def __init__(self, tree: RootedDirectedTree, paths: Mapping[str, Iterable[str]]):
        ps = {k: tuple(p) for k, p in paths.items()}
        arcs = set(tree.arcs)
        known = set(tree.nodes)
        for k, p in ps.items():
            if not p or len(set(p)) != len(p) or not set(p) <= known:
                raise ValidationError(f"path for {k} is not a node sequence of the tree")
            for a, b in zip(p, p[1:]):
                if (a, b) not in arcs:
                    raise ValidationError(f"path for {k} uses non-arc {a}->{b}")
        object.__setattr__(self, "tree", tree)
        object.__setattr__(self, "paths", ps)


def intersection_graph(t: RootedDirectedTree, fam: DirectedPathFamily | Mapping[str, Iterable[str]]) -> Graph:
    if not isinstance(fam, DirectedPathFamily):
        fam = DirectedPathFamily(t, fam)
    names = list(fam.paths)
    sets = {k: set(p) for k, p in fam.paths.items()}
    edges = [(u, w) for u, w in combinations(names, 2) if sets[u] & sets[w]]
    return Graph(names, edges)


def paths_from_clique_tree(g: Graph, ct: CliqueTree) -> DirectedPathFamily:
    report = verify_rdp_clique_tree(g, ct)
    if not report:
        raise CliqueTreeError(report)
    return DirectedPathFamily(ct.tree, {v: _order_path(ct.tree, ct.nodes_containing(v)) for v in g.vertices})
