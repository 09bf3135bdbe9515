"""Exit criteria for the reduction, one test per criterion.

Every criterion is exact. Each test records a PASS/FAIL line that is
printed in the terminal summary, then asserts.
"""
import random
import time

import pytest

from rdvhc.cyclemap import find_j_blocks, lift_cycle, project_cycle
from rdvhc.errors import ResourceExhausted, StructureViolation
from rdvhc.graph import Cycle, canonical_cycle, is_hamiltonian_cycle, maximal_cliques
from rdvhc.oracle import (GenSpec, brute_force_hamiltonian, brute_force_maximal_cliques,
                          enumerate_small_instances, find_hamiltonian_cycle, gen_bipartite, planted_cycle)
from rdvhc.rdv import intersection_graph, paths_from_clique_tree, verify_rdp_clique_tree
from rdvhc.reduction import decode, expected_path, reduce

from conftest import ACCEPTANCE_LINES, random_graph

pytestmark = pytest.mark.acceptance

SOLVER_BUDGET = 50_000_000


def check(name, failures, total, seconds, limit, extra=""):
    """Record the summary line for a criterion and fail the test if it does not hold."""
    ok = not failures and seconds < limit
    detail = f"{total - len(failures)}/{total} ok, {seconds:.1f}s (limit {limit}s)"
    if extra:
        detail += f"; {extra}"
    if failures:
        detail += f"; first failures: {', '.join(map(str, failures[:4]))}"
    line = f"{'PASS' if ok else 'FAIL'} {name}: {detail}"
    ACCEPTANCE_LINES.append(line)
    assert ok, line


def exhaustive():
    return [("exhaustive", b.r, k, b) for r in (2, 3) for k, b in enumerate(enumerate_small_instances(r))]


def random_set(r_lo, r_hi, count, salt, plant=None):
    rng = random.Random(salt)
    out = []
    for k in range(count):
        r = rng.randint(r_lo, r_hi)
        p = (k % 2 == 0) if plant is None else plant
        spec = GenSpec(r, salt * 100_000 + k, plant=p)
        out.append((f"{'planted' if p else 'random'}", r, spec.seed, gen_bipartite(spec)))
    return out


@pytest.fixture(scope="module")
def construction_set():
    return [(tag, r, seed, b, reduce(b)) for tag, r, seed, b in exhaustive() + random_set(4, 8, 200, 1)]


@pytest.fixture(scope="module")
def planted_set():
    return [(tag, r, seed, b, reduce(b)) for tag, r, seed, b in random_set(2, 8, 200, 2, plant=True)]


@pytest.fixture(scope="module")
def solved_set():
    """Criterion 5 instances with both sides solved once (shared by criteria 4 and 5)."""
    out = []
    t0 = time.perf_counter()
    for tag, r, seed, b in exhaustive() + random_set(4, 6, 200, 3):
        red = reduce(b)
        try:
            sb = find_hamiltonian_cycle(b.graph(), SOLVER_BUDGET)
            sg = find_hamiltonian_cycle(red.graph, SOLVER_BUDGET)
        except ResourceExhausted:
            sb = sg = None
        out.append((tag, r, seed, b, red, sb, sg))
    return out, time.perf_counter() - t0


def test_criterion_1_construction_fidelity(construction_set):
    t0 = time.perf_counter()
    failures = []
    for tag, r, seed, b, red in construction_set:
        if maximal_cliques(red.graph) != sorted(tuple(sorted(c)) for c in red.clique_family):
            failures.append((tag, r, seed))
    check("criterion 1 construction fidelity", failures, len(construction_set),
                  time.perf_counter() - t0, 60)


def test_criterion_2_clique_tree_certificate(construction_set):
    t0 = time.perf_counter()
    failures = []
    for tag, r, seed, b, red in construction_set:
        if not verify_rdp_clique_tree(red.graph, red.clique_tree):
            failures.append((tag, r, seed, "verify"))
            continue
        fam = paths_from_clique_tree(red.graph, red.clique_tree)
        if any(fam.paths[v] != expected_path(red, v) for v in red.graph.vertices):
            failures.append((tag, r, seed, "shape"))
    check("criterion 2 clique-tree certificate", failures, len(construction_set),
                  time.perf_counter() - t0, 60)


def test_criterion_3_lift_necessity(planted_set):
    t0 = time.perf_counter()
    failures = []
    for tag, r, seed, b, red in planted_set:
        if not is_hamiltonian_cycle(red.graph, lift_cycle(b, red, planted_cycle(b.r))):
            failures.append((tag, r, seed))
    check("criterion 3 necessity: lifted cycle is Hamiltonian in G", failures, len(planted_set),
                  time.perf_counter() - t0, 60)


def test_criterion_4_claim_j_blocks(solved_set):
    rows, solve_time = solved_set
    t0 = time.perf_counter()
    failures, total = [], 0
    for tag, r, seed, b, red, sb, sg in rows:
        if sg is None:
            failures.append((tag, r, seed, "budget"))
            continue
        if not sg.found:
            continue
        total += 1
        try:
            blocks = find_j_blocks(red, sg.cycle)
        except StructureViolation as exc:
            failures.append((tag, r, seed, f"violation {exc}"))
            continue
        bounds = all(blk.before >= decode(blk.entry_a)[1] and blk.after >= decode(blk.exit_a)[1]
                     for blk in blocks)
        if len(blocks) != r or not bounds:
            failures.append((tag, r, seed, "blocks"))
    check("criterion 4 claim: r flanked j-blocks with s>=i, t>=k", failures, total,
                  solve_time + time.perf_counter() - t0, 300)


def test_criterion_4_projection_sufficiency(solved_set):
    rows, solve_time = solved_set
    t0 = time.perf_counter()
    failures, total = [], 0
    for tag, r, seed, b, red, sb, sg in rows:
        if sg is None or not sg.found:
            continue
        total += 1
        try:
            projected = project_cycle(red, sg.cycle, strict=False)
        except StructureViolation:
            failures.append((tag, r, seed, "violation"))
            continue
        if not is_hamiltonian_cycle(b.graph(), projected):
            failures.append((tag, r, seed))
    check("criterion 4 projection: project_cycle yields a Hamiltonian cycle of B", failures, total,
                  solve_time + time.perf_counter() - t0, 300)


def test_criterion_5_equivalence(solved_set):
    rows, solve_time = solved_set
    failures = []
    confirmed = 0
    yes_b = sum(1 for row in rows if row[5] is not None and row[5].found)
    for tag, r, seed, b, red, sb, sg in rows:
        if sb is None or sg is None:
            failures.append((tag, r, seed, "budget"))
        elif sb.found != sg.found:
            failures.append((tag, r, seed, f"B={'yes' if sb.found else 'no'} G={'yes' if sg.found else 'no'}"))
            # rule out a solver fault: G's witness is checked directly, B's "no" by brute force where feasible
            if sg.found and is_hamiltonian_cycle(red.graph, sg.cycle):
                if r > 5 or brute_force_hamiltonian(b.graph()) is None:
                    confirmed += 1
    check("criterion 5 decision equivalence B vs G", failures, len(rows), solve_time, 600,
          extra=f"B Hamiltonian in {yes_b}/{len(rows)}; mismatches with a verified G cycle "
                f"and (r<=5) brute-force-confirmed B: {confirmed}/{len(failures)}")


def test_criterion_6_round_trip(planted_set):
    t0 = time.perf_counter()
    failures = []
    for tag, r, seed, b, red in planted_set:
        cb = Cycle(planted_cycle(b.r))
        if canonical_cycle(project_cycle(red, lift_cycle(b, red, cb))) != canonical_cycle(cb):
            failures.append((tag, r, seed))
    check("criterion 6 round trip", failures, len(planted_set), time.perf_counter() - t0, 60)


def test_criterion_7_definitional_closure(construction_set):
    t0 = time.perf_counter()
    failures = []
    for tag, r, seed, b, red in construction_set:
        h = intersection_graph(red.clique_tree.tree, paths_from_clique_tree(red.graph, red.clique_tree))
        if set(h.vertices) != set(red.graph.vertices) or h.edges != red.graph.edges:
            failures.append((tag, r, seed))
    check("criterion 7 definitional closure", failures, len(construction_set),
                  time.perf_counter() - t0, 60)


def test_criterion_8_oracle_self_validation():
    t0 = time.perf_counter()
    rng = random.Random(8)
    failures = []
    for k in range(100):
        g = random_graph(rng, rng.randint(3, 9), rng.uniform(0.25, 0.75))
        if find_hamiltonian_cycle(g).found != (brute_force_hamiltonian(g) is not None):
            failures.append(("hc", k))
    for k in range(50):
        g = random_graph(rng, rng.randint(1, 8), rng.random())
        if maximal_cliques(g) != brute_force_maximal_cliques(g):
            failures.append(("cliques", k))
    check("criterion 8 oracle self-validation", failures, 150, time.perf_counter() - t0, 120)
