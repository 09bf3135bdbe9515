"""Translate Hamiltonian cycles between B and its reduced graph G.

``lift_cycle`` replaces every m_i n_j m_k of a cycle of B by
X_i A_ij Y_j [A_hj Z_j] A_kj. ``find_j_blocks`` splits a cycle of G into the
runs between consecutive X vertices, and ``project_cycle`` turns each
X_s <block j> X_t back into m_s n_j m_t.
"""
from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from .errors import InvalidProjection, StructureViolation, ValidationError
from .graph import Cycle, as_cycle, is_hamiltonian_cycle
from .reduction import (BipartiteInstance, ReducedInstance, a_name, decode, m_name, n_name,
                        x_name, y_name, z_name)


@dataclass(frozen=True)
class JBlock:
    j: int
    entry_a: str
    exit_a: str
    body: tuple[str, ...]
    before: int  # index s of the X vertex preceding the block
    after: int  # index t of the X vertex following it


def _side_index(name: str) -> tuple[str, int]:
    if len(name) < 2 or name[0] not in "mn" or not name[1:].isdigit():
        raise ValidationError(f"{name} is not a vertex of B")
    return name[0], int(name[1:])


def lift_cycle(b: BipartiteInstance, red: ReducedInstance, cb: Cycle | Iterable[str]) -> Cycle:
    cb = as_cycle(cb)
    if not is_hamiltonian_cycle(b.graph(), cb):
        raise ValidationError("cycle is not a Hamiltonian cycle of B")
    seq = [_side_index(v) for v in cb]
    # a Hamiltonian cycle of a bipartite graph alternates sides
    if any(seq[k][0] == seq[(k + 1) % len(seq)][0] for k in range(len(seq))):
        raise ValidationError("cycle does not alternate between M and N")
    first_m = next(k for k, (side, _) in enumerate(seq) if side == "m")
    seq = seq[first_m:] + seq[:first_m]
    out: list[str] = []
    for k in range(0, len(seq), 2):
        i, j, kk = seq[k][1], seq[k + 1][1], seq[(k + 2) % len(seq)][1]
        out += [x_name(i), a_name(i, j), y_name(j)]
        col = b.column(j)
        if len(col) == 3:
            (h,) = [x for x in col if x not in (i, kk)]
            out += [a_name(h, j), z_name(j)]
        out.append(a_name(kk, j))
    return Cycle(out)


def _check_block(red: ReducedInstance, run: tuple[str, ...]) -> JBlock:
    roles = [decode(v) for v in run]
    js = {j for _, _, j in roles}
    if len(js) != 1:
        raise StructureViolation("run mixes several columns", run)
    (j,) = js
    deg3 = j in red.deg3
    pattern = [role for role, _, _ in roles]
    if deg3:
        ok = pattern in (["A", "Y", "A", "Z", "A"], ["A", "Z", "A", "Y", "A"])
    else:
        ok = pattern == ["A", "Y", "A"]
    if not ok:
        raise StructureViolation(f"run is not a j-block for column {j}", run)
    return JBlock(j, run[0], run[-1], run, 0, 0)


def find_j_blocks(red: ReducedInstance, cg: Cycle | Iterable[str]) -> list[JBlock]:
    """Decompose a Hamiltonian cycle of G into its j-blocks, in cycle order.

    Each block must be flanked by X_s before and X_t after with s >= i and
    t >= k, where A_ij opens and A_kj closes the block. Any deviation raises
    StructureViolation.
    """
    cg = as_cycle(cg)
    if not is_hamiltonian_cycle(red.graph, cg):
        raise ValidationError("cycle is not a Hamiltonian cycle of the reduced graph")
    seq = list(cg)
    first_x = next(k for k, v in enumerate(seq) if decode(v)[0] == "X")
    seq = seq[first_x:] + seq[:first_x]
    xs = [k for k, v in enumerate(seq) if decode(v)[0] == "X"]
    blocks: list[JBlock] = []
    for n, start in enumerate(xs):
        stop = xs[n + 1] if n + 1 < len(xs) else len(seq)
        run = tuple(seq[start + 1:stop])
        if not run:
            raise StructureViolation("two X vertices are adjacent in the cycle", (seq[start],))
        blk = _check_block(red, run)
        s = decode(seq[start])[1]
        t = decode(seq[stop % len(seq)])[1]
        i = decode(blk.entry_a)[1]
        k = decode(blk.exit_a)[1]
        if s < i or t < k:
            raise StructureViolation(f"flanking bounds fail: s={s} i={i} t={t} k={k}", run)
        blocks.append(JBlock(blk.j, blk.entry_a, blk.exit_a, run, s, t))
    if len(blocks) != red.r or sorted(blk.j for blk in blocks) != list(range(1, red.r + 1)):
        raise StructureViolation(f"expected one block per column, got {len(blocks)} blocks",
                                 tuple(b.entry_a for b in blocks))
    return blocks


def project_cycle(red: ReducedInstance, cg: Cycle | Iterable[str], strict: bool = True) -> Cycle:
    """Replace every X_s <j-block> X_t of ``cg`` by m_s n_j m_t.

    With ``strict`` the result is checked against B and InvalidProjection is
    raised naming the first triple whose m-n pair is not an edge; otherwise
    the substituted sequence is returned unchecked.
    """
    blocks = find_j_blocks(red, cg)
    out = []
    for blk in blocks:
        out += [m_name(blk.before), n_name(blk.j)]
    if strict:
        edges = set(red.source.edges)
        for blk in blocks:
            if (blk.before, blk.j) not in edges or (blk.after, blk.j) not in edges:
                triple = (m_name(blk.before), n_name(blk.j), m_name(blk.after))
                raise InvalidProjection(f"projected triple {' '.join(triple)} is not a path of B", triple)
    return Cycle(out)
