"""Left, right and two-sided Kazhdan-Lusztig cells and cell characters.

The left preorder is generated by w -> y whenever C_y appears in some
C_s C_w; cells are the strongly connected components of that graph (with
its reflexive closure), the right cells are the image of the left cells
under inversion, and the two-sided cells are the components of the union
of the left graph with its inverse-conjugated copy.

Cell characters come from the quotient module spanned by {C_w : w in the
cell}: T_s acts through the cached C-basis expansions of C_s C_w, every
v^g is specialized to 1, and the trace on one representative per
conjugacy class gives the character value.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, List, Optional, Sequence, Set, Tuple

from .characters import CharacterTable, decompose
from .coxeter import CoxeterGroup
from .hecke import KLTable


class NonIntegerMultiplicity(ArithmeticError):
    """A cell character decomposed with a non-integer or negative multiplicity
    (always an implementation bug, never valid input)."""


@dataclass
class PreorderGraph:
    """Directed graph on W; an edge w -> y means y precedes w."""

    size: int
    succ: List[Set[int]]

    def edges(self):
        for w, ys in enumerate(self.succ):
            for y in sorted(ys):
                yield (w, y)


def left_preorder(table: KLTable) -> PreorderGraph:
    group = table.group
    n = len(group)
    succ: List[Set[int]] = [{w} for w in range(n)]  # reflexive closure
    for s in range(group.rank):
        for w in range(n):
            for y in table.cs_product_in_c(s, w):
                succ[w].add(y)
    return PreorderGraph(n, succ)


def _tarjan_scc(size: int, succ: Sequence[Set[int]]) -> List[List[int]]:
    """Strongly connected components, iterative Tarjan."""
    index = [-1] * size
    low = [0] * size
    on_stack = [False] * size
    stack: List[int] = []
    comps: List[List[int]] = []
    counter = 0
    for root in range(size):
        if index[root] >= 0:
            continue
        work = [(root, iter(sorted(succ[root])))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, it = work[-1]
            advanced = False
            for u in it:
                if index[u] < 0:
                    index[u] = low[u] = counter
                    counter += 1
                    stack.append(u)
                    on_stack[u] = True
                    work.append((u, iter(sorted(succ[u]))))
                    advanced = True
                    break
                if on_stack[u]:
                    low[v] = min(low[v], index[u])
            if advanced:
                continue
            work.pop()
            if work:
                pv = work[-1][0]
                low[pv] = min(low[pv], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    u = stack.pop()
                    on_stack[u] = False
                    comp.append(u)
                    if u == v:
                        break
                comps.append(sorted(comp))
    return comps


@dataclass
class CellPartition:
    """Blocks of W with the induced partial order between blocks.

    ``order`` holds pairs (a, b) meaning block b strictly precedes block a;
    ``hasse`` is its transitive reduction.
    """

    kind: str
    blocks: List[List[int]]
    block_of: List[int]
    order: Set[Tuple[int, int]]
    hasse: List[Tuple[int, int]]

    def as_sets(self) -> Set[FrozenSet[int]]:
        return {frozenset(b) for b in self.blocks}


def _canonical_blocks(comps: List[List[int]], size: int):
    blocks = sorted((sorted(c) for c in comps), key=lambda b: b[0])
    block_of = [0] * size
    for i, b in enumerate(blocks):
        for w in b:
            block_of[w] = i
    return blocks, block_of


def _block_order(blocks: List[List[int]], block_of: List[int],
                 succ: Sequence[Set[int]]) -> Tuple[Set[Tuple[int, int]], List[Tuple[int, int]]]:
    nb = len(blocks)
    direct: List[Set[int]] = [set() for _ in range(nb)]
    for w, ys in enumerate(succ):
        bw = block_of[w]
        for y in ys:
            by = block_of[y]
            if by != bw:
                direct[bw].add(by)
    # Transitive closure on the condensation (a DAG): process blocks in a
    # topological order found by Kahn's algorithm.
    indeg = [0] * nb
    for b in range(nb):
        for c in direct[b]:
            indeg[c] += 1
    queue = [b for b in range(nb) if indeg[b] == 0]
    topo = []
    while queue:
        b = queue.pop()
        topo.append(b)
        for c in direct[b]:
            indeg[c] -= 1
            if indeg[c] == 0:
                queue.append(c)
    reach: List[Set[int]] = [set() for _ in range(nb)]
    for b in reversed(topo):
        acc: Set[int] = set()
        for c in direct[b]:
            acc.add(c)
            acc |= reach[c]
        reach[b] = acc
    order = {(a, b) for a in range(nb) for b in reach[a]}
    hasse = []
    for a in range(nb):
        for b in sorted(reach[a]):
            if not any((a, c) in order and (c, b) in order for c in range(nb)
                       if c != a and c != b):
                hasse.append((a, b))
    return order, hasse


def cells(graph: PreorderGraph, kind: str, group: CoxeterGroup) -> CellPartition:
    """Cell partition of the requested kind from the left preorder graph."""
    if kind == "left":
        succ = graph.succ
    elif kind == "right":
        succ = [set() for _ in range(graph.size)]
        for w, ys in enumerate(graph.succ):
            iw = group.inv(w)
            for y in ys:
                succ[iw].add(group.inv(y))
    elif kind == "two-sided":
        succ = [set(ys) for ys in graph.succ]
        for w, ys in enumerate(graph.succ):
            iw = group.inv(w)
            for y in ys:
                succ[iw].add(group.inv(y))
    else:
        raise ValueError("kind must be left, right or two-sided")
    comps = _tarjan_scc(graph.size, succ)
    blocks, block_of = _canonical_blocks(comps, graph.size)
    order, hasse = _block_order(blocks, block_of, succ)
    return CellPartition(kind, blocks, block_of, order, hasse)


@dataclass
class CellCharacter:
    """Integer character of the W-module carried by one left cell."""

    cell: List[int]
    values: List[int]  # per conjugacy class, in class order
    multiplicities: List[int]  # per irreducible, in table row order


def specialized_generator_action(table: KLTable, cell: Sequence[int]) -> List[List[List[int]]]:
    """For each generator s, the integer matrix of T_s (v -> 1) on the
    quotient basis {C_w : w in cell}."""
    algebra = table.algebra
    pos = {w: i for i, w in enumerate(cell)}
    k = len(cell)
    mats = []
    for s in range(table.group.rank):
        shift = 1 if algebra.weights[s].sign() > 0 else 0
        mat = [[0] * k for _ in range(k)]
        for j, w in enumerate(cell):
            for y, c in table.cs_product_in_c(s, w).items():
                i = pos.get(y)
                if i is not None:
                    mat[i][j] += c.evaluate_at_one()
            # T_s = C_s - v^{-L(s)}: subtract the identity part at v=1.
            mat[j][j] -= shift
        mats.append(mat)
    return mats


def _mat_mul(a: List[List[int]], b: List[List[int]]) -> List[List[int]]:
    k = len(a)
    out = [[0] * k for _ in range(k)]
    for i in range(k):
        ai = a[i]
        oi = out[i]
        for t in range(k):
            c = ai[t]
            if c:
                bt = b[t]
                for j in range(k):
                    oi[j] += c * bt[j]
    return out


def left_cell_character(table: KLTable, cell: Sequence[int],
                        chars: Optional[CharacterTable] = None) -> CellCharacter:
    """Character of the cell module, plus multiplicities when a character
    table is supplied."""
    group = table.group
    classes = group.conjugacy_classes()
    mats = specialized_generator_action(table, cell)
    k = len(cell)
    values = []
    for rep in classes.representatives:
        rho = [[1 if i == j else 0 for j in range(k)] for i in range(k)]
        for g in group.word(rep):
            rho = _mat_mul(rho, mats[g])
        values.append(sum(rho[i][i] for i in range(k)))
    mults: List[int] = []
    if chars is not None:
        field = chars.field
        f = [field.from_fraction(v) for v in values]
        coeffs, ok = decompose(f, chars)
        if not ok:
            raise NonIntegerMultiplicity(
                f"cell {sorted(cell)} decomposes with non-integer multiplicities")
        mults = [int(c.to_fraction()) for c in coeffs]
        if any(m < 0 for m in mults):
            raise NonIntegerMultiplicity(
                f"cell {sorted(cell)} decomposes with a negative multiplicity")
    return CellCharacter(list(cell), values, mults)


def check_refinement(left: CellPartition, two_sided: CellPartition
                     ) -> Optional[Tuple[List[int], List[int], List[int]]]:
    """None if every left block sits inside one two-sided block, else the
    violating (left block, first two-sided block, second two-sided block)."""
    for block in left.blocks:
        targets = {two_sided.block_of[w] for w in block}
        if len(targets) > 1:
            ids = sorted(targets)
            return (block, two_sided.blocks[ids[0]], two_sided.blocks[ids[1]])
    return None


def cells_report(table: KLTable, chars: Optional[CharacterTable] = None) -> dict:
    """JSON-ready summary: blocks, block order, characters, multiplicities."""
    group = table.group
    graph = left_preorder(table)
    left = cells(graph, "left", group)
    right = cells(graph, "right", group)
    two_sided = cells(graph, "two-sided", group)
    violation = check_refinement(left, two_sided)
    if violation is not None:
        raise AssertionError(f"left cells do not refine two-sided cells: {violation}")

    def blocks_json(p: CellPartition) -> dict:
        return {
            "blocks": [[group.name(w) for w in b] for b in p.blocks],
            "hasse": [[a, b] for a, b in sorted(p.hasse)],
        }

    classes = group.conjugacy_classes()
    doc = {
        "group": table.header(),
        "key": table.content_key(),
        "left_cells": blocks_json(left),
        "right_cells": blocks_json(right),
        "two_sided_cells": blocks_json(two_sided),
        "class_representatives": [group.name(r) for r in classes.representatives],
    }
    cell_chars = []
    for i, block in enumerate(left.blocks):
        cc = left_cell_character(table, block, chars)
        entry = {
            "cell": i,
            "values": {group.name(r): v
                       for r, v in zip(classes.representatives, cc.values)},
        }
        if chars is not None:
            entry["multiplicities"] = cc.multiplicities
        cell_chars.append(entry)
    doc["cell_characters"] = cell_chars
    return doc
