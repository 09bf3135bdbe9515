"""Command-line interface.

Exit codes: 0 answer produced, 1 property or structure failure, 2 input
error, 3 solver budget exhausted.
"""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import formats
from .cyclemap import lift_cycle, project_cycle
from .errors import (GenerationError, InvalidProjection, ResourceExhausted, StructureViolation,
                     ValidationError)
from .graph import Graph, canonical_cycle, maximal_cliques
from .oracle.generators import GenSpec, gen_bipartite, planted_cycle
from .oracle.solver import find_hamiltonian_cycle
from .pipeline import roundtrip
from .rdv import verify_rdp_clique_tree
from .reduction import BipartiteInstance, expected_vertex_count, normalize, reduce

log = logging.getLogger("rdvhc")

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3
DEFAULT_BUDGET = 10_000_000


class InputError(Exception):
    pass


def _read(path: str | None, what: str) -> str:
    if path is None:
        raise InputError(f"missing {what}")
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {what} {path}: {exc.strerror}") from None


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc.strerror}") from None


def _load_bipartite(path: str | None):
    r_m, r_n, edges = formats.parse_bipartite(_read(path, "bipartite instance"))
    return normalize(r_m, r_n, edges)


def _require_instance(path: str | None) -> BipartiteInstance:
    out = _load_bipartite(path)
    if out.kind == "invalid":
        raise InputError(f"invalid instance: {out.reason}")
    if out.kind == "trivial-no":
        raise InputError(f"instance has no Hamiltonian cycle: {out.reason}")
    return out.instance


def _load_graph(path: str | None) -> Graph:
    text = _read(path, "graph")
    for line in text.splitlines():
        toks = line.split()
        if toks and toks[0] == "p":
            if toks[1:2] == ["bipartite"]:
                r_m, r_n, edges = formats.parse_bipartite(text)
                out = normalize(r_m, r_n, edges)
                if out.normalized:
                    return out.instance.graph()
                if out.kind == "invalid":
                    raise InputError(f"invalid instance: {out.reason}")
                m = [f"m{i}" for i in range(1, r_m + 1)]
                n = [f"n{j}" for j in range(1, r_n + 1)]
                return Graph(m + n, [(f"m{i}", f"n{j}") for i, j in edges])
            break
    return formats.parse_graph(text)


def cmd_gen(args) -> int:
    spec = GenSpec(args.r, args.seed, args.plant, args.extra_edge_prob)
    b = gen_bipartite(spec)
    comment = f"gen r={spec.r} seed={spec.seed} plant={int(spec.plant)} extra-edge-prob={spec.extra_edge_prob}"
    _write(args.output, formats.format_bipartite(b.r, b.edges, comment))
    return EXIT_OK


def cmd_reduce(args) -> int:
    out = _load_bipartite(args.input)
    if out.kind == "invalid":
        raise InputError(f"invalid instance: {out.reason}")
    if out.kind == "trivial-no":
        print(f"TRIVIAL-NO {out.reason}")
        return EXIT_OK
    b = out.instance
    red = reduce(b)
    identity = (f"|V(G)| = 2r + |deg3| + |E| = 2*{b.r} + {len(b.deg3)} + {len(b.edges)} "
                f"= {expected_vertex_count(b)}")
    _write(args.output, formats.format_graph(red.graph, identity))
    tree_path = args.tree
    if tree_path is None and args.output not in (None, "-"):
        tree_path = args.output + ".tree"
    if tree_path is not None:
        _write(tree_path, formats.format_clique_tree(red.clique_tree, red.labels))
    print(f"c {identity}")
    return EXIT_OK


def cmd_solve(args) -> int:
    g = _load_graph(args.input)
    res = find_hamiltonian_cycle(g, args.budget)
    log.info("solver expanded %d nodes in %.3fs", res.nodes, res.elapsed)
    _write(args.output, formats.format_cycle(res.cycle) if res.found else "NONE\n")
    return EXIT_OK


def cmd_lift(args) -> int:
    b = _require_instance(args.input)
    cb = formats.parse_cycle(_read(args.cycle, "cycle"))
    lifted = lift_cycle(b, reduce(b), cb)
    _write(args.output, formats.format_cycle(canonical_cycle(lifted)))
    return EXIT_OK


def cmd_project(args) -> int:
    b = _require_instance(args.input)
    cg = formats.parse_cycle(_read(args.cycle, "cycle"))
    try:
        projected = project_cycle(reduce(b), cg)
    except StructureViolation as exc:
        print(f"STRUCTURE-VIOLATION {exc}: {' '.join(exc.run)}")
        return EXIT_FAIL
    except InvalidProjection as exc:
        print(f"INVALID-PROJECTION {' '.join(exc.triple)}")
        return EXIT_FAIL
    _write(args.output, formats.format_cycle(canonical_cycle(projected)))
    return EXIT_OK


def cmd_verify_tree(args) -> int:
    g = _load_graph(args.input)
    ct = formats.parse_clique_tree(_read(args.tree, "clique tree"))
    report = verify_rdp_clique_tree(g, ct)
    print(str(report))
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_cliques(args) -> int:
    g = _load_graph(args.input)
    _write(args.output, "".join(" ".join(c) + "\n" for c in maximal_cliques(g)))
    return EXIT_OK


def cmd_roundtrip(args) -> int:
    spec = GenSpec(args.r, args.seed, args.plant, args.extra_edge_prob)
    b = gen_bipartite(spec)
    print(f"c instance r={b.r} edges={len(b.edges)} deg3={len(b.deg3)}")
    planted = planted_cycle(b.r) if args.plant else None
    rep = roundtrip(b, planted, args.budget)
    log.info("B solver: %d nodes, G solver: %d nodes", rep.solve_b.nodes, rep.solve_g.nodes)
    for chk in rep.checks:
        print(chk.line())
    if rep.ok:
        print("PASS all")
        return EXIT_OK
    failed = [c.name for c in rep.checks if not c.ok]
    print(f"FAIL {' '.join(failed)}")
    return EXIT_FAIL


def _r_value(text: str) -> int:
    try:
        r = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer {text!r}") from None
    if r < 2:
        raise argparse.ArgumentTypeError(f"r must be at least 2, got {r}")
    return r


def _seed_value(text: str) -> int:
    try:
        s = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer {text!r}") from None
    if not 0 <= s < 2**64:
        raise argparse.ArgumentTypeError("seed must lie in [0, 2^64)")
    return s


def _prob_value(text: str) -> float:
    try:
        p = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid number {text!r}") from None
    if not 0.0 <= p <= 1.0:
        raise argparse.ArgumentTypeError("probability must lie in [0, 1]")
    return p


def _budget_value(text: str) -> int:
    try:
        b = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer {text!r}") from None
    if b < 0:
        raise argparse.ArgumentTypeError("budget must be non-negative (0 = unlimited)")
    return b


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="count", default=0, help="log progress to stderr")

    gen_opts = argparse.ArgumentParser(add_help=False)
    gen_opts.add_argument("--r", type=_r_value, required=True, help="vertices per side (>= 2)")
    gen_opts.add_argument("--seed", type=_seed_value, default=0)
    gen_opts.add_argument("--plant", action="store_true", help="plant the cycle m1 n1 ... mr nr")
    gen_opts.add_argument("--extra-edge-prob", type=_prob_value, default=0.25)

    budget = argparse.ArgumentParser(add_help=False)
    budget.add_argument("--budget", type=_budget_value, default=DEFAULT_BUDGET,
                        help=f"solver node budget, 0 = unlimited (default {DEFAULT_BUDGET})")

    io = argparse.ArgumentParser(add_help=False)
    io.add_argument("-i", "--input", help="input file, '-' for stdin")
    io.add_argument("-o", "--output", help="output file (default stdout)")

    parser = argparse.ArgumentParser(prog="rdvhc", description="Hamiltonian cycle reduction to rooted directed path graphs")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common, gen_opts, io], help="generate a bipartite instance")
    p.set_defaults(func=cmd_gen)
    p = sub.add_parser("reduce", parents=[common, io], help="reduce a bipartite instance")
    p.add_argument("--tree", help="clique-tree output (default <output>.tree)")
    p.set_defaults(func=cmd_reduce)
    p = sub.add_parser("solve", parents=[common, io, budget], help="find a Hamiltonian cycle")
    p.set_defaults(func=cmd_solve)
    p = sub.add_parser("lift", parents=[common, io], help="lift a cycle of B into G")
    p.add_argument("--cycle", required=True, help="cycle file")
    p.set_defaults(func=cmd_lift)
    p = sub.add_parser("project", parents=[common, io], help="project a cycle of G back to B")
    p.add_argument("--cycle", required=True, help="cycle file")
    p.set_defaults(func=cmd_project)
    p = sub.add_parser("verify-tree", parents=[common, io], help="verify a clique-tree certificate")
    p.add_argument("--tree", required=True, help="clique-tree file")
    p.set_defaults(func=cmd_verify_tree)
    p = sub.add_parser("cliques", parents=[common, io], help="list maximal cliques")
    p.set_defaults(func=cmd_cliques)
    p = sub.add_parser("roundtrip", parents=[common, gen_opts, budget], help="generate, reduce, solve and check")
    p.set_defaults(func=cmd_roundtrip)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2), stream=sys.stderr,
                        format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (InputError, ValidationError, GenerationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except StructureViolation as exc:
        print(f"STRUCTURE-VIOLATION {exc}: {' '.join(exc.run)}")
        return EXIT_FAIL
    except ResourceExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
