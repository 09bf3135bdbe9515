"""Text formats: graph, cycle, clique tree and bipartite instance.

All readers skip blank lines and lines starting with ``c `` (or a bare ``c``),
and raise ParseError carrying the 1-based line number.

graph::

    p graph <num_vertices> <num_edges>
    v <name>
    e <name> <name>

clique tree::

    p cliquetree <num_nodes>
    t <node> : <member> <member> ...
    a <parent> <child>

bipartite::

    p bipartite <r> <num_edges>            (or: p bipartite <r_m> <r_n> <num_edges>)
    e <i> <j>
"""
from __future__ import annotations

import re
from collections.abc import Iterable, Iterator

from .errors import ParseError, ValidationError
from .graph import Cycle, Graph
from .rdv import CliqueTree, RootedDirectedTree

NAME = re.compile(r"^[A-Za-z][A-Za-z0-9_]*$")


def _lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line == "c" or line.startswith("c "):
            continue
        yield no, line.split()


def _name(tok: str, no: int) -> str:
    if not NAME.match(tok):
        raise ParseError(f"invalid name {tok!r}", no)
    return tok


def _int(tok: str, no: int) -> int:
    try:
        val = int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}", no) from None
    if val < 0:
        raise ParseError(f"expected a non-negative integer, got {tok}", no)
    return val


def _header(lines, kind: str, sizes: tuple[int, ...]) -> tuple[int, list[int]]:
    try:
        no, toks = next(lines)
    except StopIteration:
        raise ParseError(f"missing 'p {kind}' header") from None
    if toks[:2] != ["p", kind] or len(toks) - 2 not in sizes:
        raise ParseError(f"expected 'p {kind}' header", no)
    return no, [_int(t, no) for t in toks[2:]]


def parse_graph(text: str) -> Graph:
    lines = _lines(text)
    hno, (nv, ne) = _header(lines, "graph", (2,))
    verts, edges = [], []
    for no, toks in lines:
        if toks[0] == "v" and len(toks) == 2:
            if edges:
                raise ParseError("vertex line after edge lines", no)
            verts.append(_name(toks[1], no))
        elif toks[0] == "e" and len(toks) == 3:
            edges.append((_name(toks[1], no), _name(toks[2], no), no))
        else:
            raise ParseError(f"unexpected line {' '.join(toks)!r}", no)
    if len(verts) != nv:
        raise ParseError(f"header declares {nv} vertices, found {len(verts)}", hno)
    if len(edges) != ne:
        raise ParseError(f"header declares {ne} edges, found {len(edges)}", hno)
    try:
        g = Graph(verts, [])
    except ValidationError as exc:
        raise ParseError(str(exc), hno) from None
    keys = set()
    for u, w, no in edges:
        if u not in g or w not in g:
            raise ParseError("edge references undeclared vertex", no)
        if u == w:
            raise ParseError(f"self-loop at {u}", no)
        key = (u, w) if u <= w else (w, u)
        if key in keys:
            raise ParseError(f"duplicate edge {u} {w}", no)
        keys.add(key)
    return Graph(verts, [(u, w) for u, w, _ in edges])


def format_graph(g: Graph, comment: str | None = None) -> str:
    for v in g.vertices:
        if not NAME.match(v):
            raise ValidationError(f"vertex name {v!r} cannot be written")
    out = [f"c {comment}"] if comment else []
    out.append(f"p graph {len(g.vertices)} {len(g.edges)}")
    out += [f"v {v}" for v in g.vertices]
    out += [f"e {u} {w}" for u, w in g.sorted_edges()]
    return "\n".join(out) + "\n"


def parse_cycle(text: str) -> Cycle:
    toks = []
    for no, line in _lines(text):
        toks += [_name(t, no) for t in line]
    try:
        return Cycle(toks)
    except ValidationError as exc:
        raise ParseError(str(exc)) from None


def format_cycle(c: Iterable[str]) -> str:
    return " ".join(c) + "\n"


def parse_clique_tree(text: str) -> CliqueTree:
    lines = _lines(text)
    hno, (nn,) = _header(lines, "cliquetree", (1,))
    nodes: list[str] = []
    label: dict[str, list[str]] = {}
    arcs = []
    for no, toks in lines:
        if toks[0] == "t" and len(toks) >= 4 and toks[2] == ":":
            node = _name(toks[1], no)
            if node in label:
                raise ParseError(f"duplicate node {node}", no)
            members = [_name(t, no) for t in toks[3:]]
            if len(set(members)) != len(members):
                raise ParseError(f"repeated member in node {node}", no)
            nodes.append(node)
            label[node] = members
        elif toks[0] == "a" and len(toks) == 3:
            arcs.append((_name(toks[1], no), _name(toks[2], no), no))
        else:
            raise ParseError(f"unexpected line {' '.join(toks)!r}", no)
    if len(nodes) != nn:
        raise ParseError(f"header declares {nn} nodes, found {len(nodes)}", hno)
    seen = set()
    for p, ch, no in arcs:
        if p not in label or ch not in label:
            raise ParseError("arc references undeclared node", no)
        if (p, ch) in seen:
            raise ParseError(f"duplicate arc {p} {ch}", no)
        if p == ch:
            raise ParseError(f"self-arc at {p}", no)
        seen.add((p, ch))
    tree = RootedDirectedTree(nodes, [(p, ch) for p, ch, _ in arcs])
    return CliqueTree(tree, label)


def format_clique_tree(ct: CliqueTree, order: dict[str, Iterable[str]] | None = None) -> str:
    """Serialize ``ct``; ``order`` optionally fixes the member order per node (sorted otherwise)."""
    out = [f"p cliquetree {len(ct.tree.nodes)}"]
    for node in ct.tree.nodes:
        members = list(order[node]) if order and node in order else sorted(ct.label[node])
        out.append(f"t {node} : {' '.join(members)}")
    out += [f"a {p} {ch}" for p, ch in ct.tree.arcs]
    return "\n".join(out) + "\n"


def parse_bipartite(text: str) -> tuple[int, int, list[tuple[int, int]]]:
    """Return ``(r_m, r_n, edges)`` without judging the instance; see ``normalize``."""
    lines = _lines(text)
    hno, sizes = _header(lines, "bipartite", (2, 3))
    if len(sizes) == 2:
        r_m = r_n = sizes[0]
        ne = sizes[1]
    else:
        r_m, r_n, ne = sizes
    edges = []
    for no, toks in lines:
        if toks[0] == "e" and len(toks) == 3:
            edges.append((_int(toks[1], no), _int(toks[2], no)))
        else:
            raise ParseError(f"unexpected line {' '.join(toks)!r}", no)
    if len(edges) != ne:
        raise ParseError(f"header declares {ne} edges, found {len(edges)}", hno)
    return r_m, r_n, edges


def format_bipartite(r: int, edges: Iterable[tuple[int, int]], comment: str | None = None,
                     r_n: int | None = None) -> str:
    es = sorted(edges)
    out = [f"c {comment}"] if comment else []
    if r_n is None or r_n == r:
        out.append(f"p bipartite {r} {len(es)}")
    else:
        out.append(f"p bipartite {r} {r_n} {len(es)}")
    out += [f"e {i} {j}" for i, j in es]
    return "\n".join(out) + "\n"
