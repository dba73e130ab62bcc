"""Cross-checks between Calogero-Moser cell data and Kazhdan-Lusztig cells.

The one desk-computable overlap is d = 2: the cyclic group mu_2 is the
Coxeter group A1 under the unique group isomorphism, the CM parameter c
matches the weight L(s) = c, and both pipelines produce cells and
per-cell characters that can be compared exactly.

For B2 = I2(4) only the KL side is computed; reports for the five
parameter regimes (b<a, b=a, a<b<2a, b=2a, b>2a) are persisted as
snapshots keyed by the KL cache content hash so regressions across runs
are visible.
"""

from __future__ import annotations

import json
import os
import tempfile
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .cells import cells, cells_report, left_cell_character, left_preorder
from .characters import character_table
from .cherednik_rank1 import Rank1Params, cm_multiplicities, cm_report, inertia_and_cells
from .coxeter import WeightFunction, build_group, named_coxeter_matrix
from .hecke import HeckeAlgebra, kl_basis

MATCH = "MATCH"
MISMATCH = "MISMATCH"

# Deterministic sample points per B2 regime; the three open regimes get
# three points each so partition constancy can be asserted.
B2_REGIME_POINTS: Dict[str, List[Tuple[Fraction, Fraction]]] = {
    "b<a": [(Fraction(2), Fraction(1)), (Fraction(3), Fraction(1)),
            (Fraction(5), Fraction(2))],
    "b=a": [(Fraction(1), Fraction(1))],
    "a<b<2a": [(Fraction(2), Fraction(3)), (Fraction(3), Fraction(4)),
               (Fraction(2), Fraction(7, 2))],
    "b=2a": [(Fraction(1), Fraction(2))],
    "b>2a": [(Fraction(1), Fraction(3)), (Fraction(1), Fraction(4)),
             (Fraction(2), Fraction(5))],
}


def classify_b2_regime(a: Fraction, b: Fraction) -> str:
    if b < a:
        return "b<a"
    if b == a:
        return "b=a"
    if b < 2 * a:
        return "a<b<2a"
    if b == 2 * a:
        return "b=2a"
    return "b>2a"


def _det_value(j: int, elem: int) -> int:
    """det^j evaluated at s^elem in mu_2."""
    return -1 if (j * elem) % 2 else 1


def check_rank1_vs_a1(c: Fraction) -> dict:
    """Compare CM cells/multiplicities at d=2 with the KL side for A1,
    L(s) = c, under the identification s^0 <-> e, s^1 <-> s."""
    c = Fraction(c)
    if c < 0:
        raise ValueError("c must be >= 0 so that L(s) = c is a weight")

    # Calogero-Moser side.
    params = Rank1Params.from_c(2, [c])
    data = inertia_and_cells(params)
    mults = cm_multiplicities(data)
    cm_cells = [sorted(b) for b in data.cells]
    # Character of each CM cell on the classes (e), (s) of A1.
    cm_chars = []
    for idx in range(len(cm_cells)):
        vals = []
        for elem in (0, 1):
            vals.append(sum(mults[(idx, j)] * _det_value(j, elem) for j in (0, 1)))
        cm_chars.append(vals)

    # Kazhdan-Lusztig side.
    group = build_group(named_coxeter_matrix("A", 1))
    algebra = HeckeAlgebra(group, WeightFunction.rational([c]))
    table = kl_basis(algebra)
    graph = left_preorder(table)
    left = cells(graph, "left", group)
    two_sided = cells(graph, "two-sided", group)
    chars = character_table(group)
    kl_chars = [left_cell_character(table, b, chars).values for b in left.blocks]

    # mu_2 exponent j maps to the A1 element of the same index.
    cm_as_sets = {frozenset(b) for b in cm_cells}
    left_match = cm_as_sets == left.as_sets()
    two_sided_match = cm_as_sets == two_sided.as_sets()
    chars_match = sorted(cm_chars) == sorted(kl_chars)

    aligned = left_match
    if left_match:
        kl_by_set = {frozenset(b): v for b, v in zip(left.blocks, kl_chars)}
        aligned = all(kl_by_set[frozenset(b)] == v
                      for b, v in zip(cm_cells, cm_chars))

    verdict = MATCH if (left_match and two_sided_match and chars_match) else MISMATCH
    return {
        "d": 2,
        "c": str(c),
        "cm": cm_report(data),
        "kl_left_cells": [[group.name(w) for w in b] for b in left.blocks],
        "kl_two_sided_cells": [[group.name(w) for w in b] for b in two_sided.blocks],
        "cm_cell_characters": {f"cell_{i}": v for i, v in enumerate(cm_chars)},
        "kl_cell_characters": {f"cell_{i}": v for i, v in enumerate(kl_chars)},
        "cells_verdict": MATCH if (left_match and two_sided_match) else MISMATCH,
        "characters_verdict": MATCH if chars_match else MISMATCH,
        "per_cell_character_agreement": aligned,
        "verdict": verdict,
    }


def b2_regime_report(a: Fraction, b: Fraction) -> dict:
    """KL cells, cell order and cell characters of B2 at L = (a, b)."""
    a, b = Fraction(a), Fraction(b)
    if a <= 0 or b <= 0:
        raise ValueError("regime parameters must be positive")
    group = build_group(named_coxeter_matrix("I2", 4))
    algebra = HeckeAlgebra(group, WeightFunction.rational([a, b]))
    table = kl_basis(algebra)
    chars = character_table(group)
    doc = cells_report(table, chars)
    doc["weights"] = {"a": str(a), "b": str(b)}
    doc["regime"] = classify_b2_regime(a, b)
    return doc


def emit_report(results: dict) -> str:
    """Canonical JSON text: stable key order, trailing newline."""
    return json.dumps(results, sort_keys=True, indent=2) + "\n"


def snapshot_path(reports_dir: str, report: dict) -> str:
    return os.path.join(reports_dir, f"b2_{report['key']}.json")


def store_snapshot(report: dict, reports_dir: str, update: bool = False) -> str:
    """Persist a B2 report; returns 'created', 'match' or 'drift'.

    An existing snapshot with different content means the pipeline output
    changed for identical inputs; callers treat that as a regression
    unless update is requested.
    """
    os.makedirs(reports_dir, exist_ok=True)
    path = snapshot_path(reports_dir, report)
    payload = emit_report(report)
    if os.path.exists(path) and not update:
        with open(path, "r", encoding="utf-8") as fh:
            old = fh.read()
        return "match" if old == payload else "drift"
    fd, tmp = tempfile.mkstemp(dir=reports_dir, suffix=".tmp")
    with os.fdopen(fd, "w", encoding="utf-8") as fh:
        fh.write(payload)
    os.replace(tmp, path)
    return "created"


def run_conjecture_suite(c_values: Sequence[Fraction],
                         b2_points: Optional[Dict[str, List[Tuple[Fraction, Fraction]]]] = None,
                         reports_dir: Optional[str] = None,
                         update_snapshots: bool = False) -> dict:
    """The full cross-check: rank-1 comparisons plus B2 regime reports."""
    rank1 = [check_rank1_vs_a1(c) for c in c_values]
    points = B2_REGIME_POINTS if b2_points is None else b2_points
    b2_entries = []
    regime_partitions: Dict[str, set] = {}
    for regime, pts in points.items():
        for (a, b) in pts:
            rep = b2_regime_report(a, b)
            status = None
            if reports_dir is not None:
                status = store_snapshot(rep, reports_dir, update=update_snapshots)
            partition_key = json.dumps(rep["left_cells"]["blocks"], sort_keys=True)
            regime_partitions.setdefault(rep["regime"], set()).add(partition_key)
            entry = {"a": str(a), "b": str(b), "regime": rep["regime"],
                     "left_cell_count": len(rep["left_cells"]["blocks"]),
                     "two_sided_cell_count": len(rep["two_sided_cells"]["blocks"]),
                     "key": rep["key"]}
            if status is not None:
                entry["snapshot"] = status
            b2_entries.append(entry)
    stable = {regime: len(keys) == 1 for regime, keys in regime_partitions.items()}
    doc = {
        "rank1_vs_a1": rank1,
        "b2_regimes": b2_entries,
        "b2_partition_constant_per_regime": stable,
        "verdict": MATCH if all(r["verdict"] == MATCH for r in rank1) else MISMATCH,
    }
    return doc
