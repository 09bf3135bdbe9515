"""End-to-end property checks on one bipartite instance."""
from __future__ import annotations

from dataclasses import dataclass, field

from .cyclemap import find_j_blocks, lift_cycle, project_cycle
from .errors import StructureViolation
from .graph import Cycle, canonical_cycle, is_hamiltonian_cycle, maximal_cliques
from .oracle.solver import SolverResult, find_hamiltonian_cycle
from .rdv import intersection_graph, paths_from_clique_tree, verify_rdp_clique_tree
from .reduction import BipartiteInstance, ReducedInstance, expected_path, expected_vertex_count, reduce


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'} {self.name}" + (f": {self.detail}" if self.detail else "")


def check_construction(red: ReducedInstance) -> Check:
    got = maximal_cliques(red.graph)
    want = sorted(tuple(sorted(c)) for c in red.clique_family)
    if got == want:
        return Check("clique-family", True, f"{len(want)} maximal cliques")
    extra = [c for c in got if c not in want]
    missing = [c for c in want if c not in got]
    return Check("clique-family", False, f"unexpected {extra[:1]} missing {missing[:1]}")


def check_vertex_count(red: ReducedInstance) -> Check:
    b = red.source
    want = expected_vertex_count(b)
    got = len(red.graph)
    return Check("vertex-count", got == want,
                 f"2*{b.r} + {len(b.deg3)} + {len(b.edges)} = {want}, graph has {got}")


def check_clique_tree(red: ReducedInstance) -> Check:
    report = verify_rdp_clique_tree(red.graph, red.clique_tree)
    return Check("clique-tree", report.ok, "" if report.ok else str(report))


def check_path_shapes(red: ReducedInstance) -> Check:
    try:
        fam = paths_from_clique_tree(red.graph, red.clique_tree)
    except Exception as exc:  # verification failure is reported by check_clique_tree
        return Check("path-shapes", False, str(exc))
    for v in red.graph.vertices:
        if fam.paths[v] != expected_path(red, v):
            return Check("path-shapes", False, f"{v} occupies {' '.join(fam.paths[v])}")
    return Check("path-shapes", True)


def check_closure(red: ReducedInstance) -> Check:
    try:
        fam = paths_from_clique_tree(red.graph, red.clique_tree)
    except Exception as exc:
        return Check("closure", False, str(exc))
    h = intersection_graph(red.clique_tree.tree, fam)
    ok = set(h.vertices) == set(red.graph.vertices) and h.edges == red.graph.edges
    return Check("closure", ok, "" if ok else "intersection graph differs from G")


def check_lift(b: BipartiteInstance, red: ReducedInstance, cb: Cycle) -> list[Check]:
    lifted = lift_cycle(b, red, cb)
    ok = is_hamiltonian_cycle(red.graph, lifted)
    out = [Check("lift", ok, "" if ok else f"lifted sequence {lifted} is not a Hamiltonian cycle of G")]
    if ok:
        back = project_cycle(red, lifted, strict=False)
        same = canonical_cycle(back) == canonical_cycle(cb)
        out.append(Check("roundtrip", same, "" if same else f"{canonical_cycle(cb)} came back as {back}"))
    return out


def check_projection(b: BipartiteInstance, red: ReducedInstance, cg: Cycle) -> list[Check]:
    try:
        blocks = find_j_blocks(red, cg)
    except StructureViolation as exc:
        return [Check("j-blocks", False, f"{exc}: {' '.join(exc.run)}")]
    out = [Check("j-blocks", True, f"{len(blocks)} blocks")]
    projected = project_cycle(red, cg, strict=False)
    ok = is_hamiltonian_cycle(b.graph(), projected)
    if ok:
        out.append(Check("projection", True))
    else:
        edges = set(b.edges)
        bad = next(blk for blk in blocks if (blk.before, blk.j) not in edges or (blk.after, blk.j) not in edges)
        out.append(Check("projection", False,
                         f"block n{bad.j} between X{bad.before} and X{bad.after} projects to "
                         f"m{bad.before} n{bad.j} m{bad.after}, not a path of B"))
    return out


@dataclass
class RoundtripReport:
    checks: list[Check] = field(default_factory=list)
    solve_b: SolverResult | None = None
    solve_g: SolverResult | None = None

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)


def roundtrip(b: BipartiteInstance, planted: Cycle | None = None, budget: int | None = None) -> RoundtripReport:
    """Reduce ``b``, solve both sides and run every property check.

    ResourceExhausted from either solver propagates to the caller.
    """
    red = reduce(b)
    rep = RoundtripReport()
    rep.checks += [check_vertex_count(red), check_construction(red), check_clique_tree(red),
                   check_path_shapes(red), check_closure(red)]
    rep.solve_b = find_hamiltonian_cycle(b.graph(), budget)
    rep.solve_g = find_hamiltonian_cycle(red.graph, budget)
    fb, fg = rep.solve_b.found, rep.solve_g.found
    if planted is not None:
        ok = is_hamiltonian_cycle(b.graph(), planted)
        rep.checks.append(Check("planted", ok and fb, "" if ok else "planted cycle is not Hamiltonian in B"))
    rep.checks.append(Check("equivalence", fb == fg,
                            f"B {'yes' if fb else 'no'}, G {'yes' if fg else 'no'}"))
    cb = planted if planted is not None else rep.solve_b.cycle
    if cb is not None:
        rep.checks += check_lift(b, red, cb)
    if rep.solve_g.cycle is not None:
        rep.checks += check_projection(b, red, rep.solve_g.cycle)
    return rep
