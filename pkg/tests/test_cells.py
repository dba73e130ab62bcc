from rs_oracle import rs_left_cell_partition
from klcells.cells import (CellPartition, cells,
                           cells_report, check_refinement,
                           left_cell_character, left_preorder)
from klcells.characters import character_table
from klcells.coxeter import WeightFunction, build_group, named_coxeter_matrix
from klcells.hecke import HeckeAlgebra, kl_basis


def pipeline(kind, n, weights):
    W = build_group(named_coxeter_matrix(kind, n))
    alg = HeckeAlgebra(W, WeightFunction.rational(weights))
    table = kl_basis(alg)
    graph = left_preorder(table)
    return W, table, graph


def blocks_as_names(group, partition):
    return sorted(sorted(group.name(w) for w in b) for b in partition.blocks)


def test_a1_positive_weight_cells():
    W, table, graph = pipeline("A", 1, [1])
    left = cells(graph, "left", W)
    assert blocks_as_names(W, left) == [["e"], ["s"]]
    # Edge set: e -> s (C_s C_e = C_s), s -> s (descent loop), plus the
    # reflexive closure.
    assert graph.succ[0] == {0, 1}
    assert graph.succ[1] == {1}


def test_zero_weights_single_cell():
    for kind, n in [("A", 1), ("A", 2), ("I2", 4)]:
        W = build_group(named_coxeter_matrix(kind, n))
        alg = HeckeAlgebra(W, WeightFunction.rational([0] * W.rank))
        table = kl_basis(alg)
        graph = left_preorder(table)
        left = cells(graph, "left", W)
        assert len(left.blocks) == 1
        two = cells(graph, "two-sided", W)
        assert check_refinement(left, two) is None


def test_every_element_has_loop():
    W, table, graph = pipeline("A", 2, [1, 1])
    for w in range(len(W)):
        assert w in graph.succ[w]


def test_no_edge_down_to_identity_when_positive():
    # Snapshot observation, not a theorem: with L > 0 nothing reaches e.
    W, table, graph = pipeline("B", 2, [1, 2])
    for w in range(len(W)):
        if w != W.identity:
            assert W.identity not in graph.succ[w]


def test_s3_left_cells_match_robinson_schensted():
    W, table, graph = pipeline("A", 2, [1, 1])
    left = cells(graph, "left", W)
    assert left.as_sets() == rs_left_cell_partition(W)
    assert blocks_as_names(W, left) == sorted([
        ["e"], ["s t s"], ["s", "t s"], ["s t", "t"]])


def test_s4_left_cells_match_robinson_schensted():
    W, table, graph = pipeline("A", 3, [1, 1, 1])
    left = cells(graph, "left", W)
    assert len(left.blocks) == 10
    assert left.as_sets() == rs_left_cell_partition(W)


def test_s5_left_cells_match_robinson_schensted():
    # 26 cells = number of standard tableaux pairs with equal recording
    # tableau = number of involutions of S5.
    W, table, graph = pipeline("A", 4, [1, 1, 1, 1])
    left = cells(graph, "left", W)
    assert len(left.blocks) == 26
    assert left.as_sets() == rs_left_cell_partition(W)


def test_b2_equal_parameter_two_sided_cells():
    W, table, graph = pipeline("I2", 4, [1, 1])
    two = cells(graph, "two-sided", W)
    assert blocks_as_names(W, two) == sorted([
        ["e"],
        sorted(["s", "t", "s t", "t s", "s t s", "t s t"]),
        ["s t s t"]])


def test_right_cells_are_inverted_left_cells():
    W, table, graph = pipeline("B", 2, [1, 2])
    left = cells(graph, "left", W)
    right = cells(graph, "right", W)
    inverted = {frozenset(W.inv(w) for w in b) for b in left.blocks}
    assert right.as_sets() == inverted


def test_left_refines_two_sided():
    for kind, n, weights in [("A", 2, [1, 1]), ("A", 3, [1, 1, 1]),
                             ("B", 2, [1, 2]), ("B", 2, [2, 1]),
                             ("I2", 5, [1, 1]), ("I2", 6, [2, 3])]:
        W, table, graph = pipeline(kind, n, weights)
        left = cells(graph, "left", W)
        two = cells(graph, "two-sided", W)
        assert check_refinement(left, two) is None


def test_refinement_violation_detected():
    # Corrupt partitions on purpose: {e,s} left inside split two-sided blocks.
    left = CellPartition("left", [[0, 1], [2]], [0, 0, 1], set(), [])
    two = CellPartition("two-sided", [[0], [1], [2]], [0, 1, 2], set(), [])
    violation = check_refinement(left, two)
    assert violation is not None
    assert violation[0] == [0, 1]


def test_a2_cell_characters():
    W, table, graph = pipeline("A", 2, [1, 1])
    left = cells(graph, "left", W)
    chars = character_table(W)
    by_block = {}
    for block in left.blocks:
        cc = left_cell_character(table, block, chars)
        by_block[tuple(sorted(W.name(w) for w in block))] = cc
    # Identity cell carries sign, longest-element cell carries trivial:
    # forced by the strictly-negative correction convention of the basis.
    assert by_block[("e",)].values == [1, -1, 1]
    assert by_block[("s t s",)].values == [1, 1, 1]
    assert by_block[("s", "t s")].values == [2, 0, -1]
    assert by_block[("s t", "t")].values == [2, 0, -1]
    # multiplicity vectors are unit vectors here
    for cc in by_block.values():
        assert sum(cc.multiplicities) == 1
        assert all(m >= 0 for m in cc.multiplicities)
    # degree equals cell size
    for cc in by_block.values():
        assert cc.values[0] == len(cc.cell)


def test_cell_character_sum_is_regular():
    for kind, n, weights in [("A", 2, [1, 1]), ("B", 2, [1, 1]),
                             ("B", 2, [1, 2]), ("I2", 6, [3, 1]),
                             ("A", 1, [0]), ("A", 3, [1, 1, 1])]:
        W, table, graph = pipeline(kind, n, weights)
        left = cells(graph, "left", W)
        classes = W.conjugacy_classes()
        total = [0] * len(classes)
        chars = character_table(W)
        for block in left.blocks:
            cc = left_cell_character(table, block, chars)
            total = [a + b for a, b in zip(total, cc.values)]
        expected = [len(W)] + [0] * (len(classes) - 1)
        assert total == expected


def test_block_order_on_a1():
    W, table, graph = pipeline("A", 1, [1])
    left = cells(graph, "left", W)
    blocks = blocks_as_names(W, left)
    # block containing s is below the block containing e
    e_block = next(i for i, b in enumerate(left.blocks) if W.identity in b)
    s_block = 1 - e_block
    assert (e_block, s_block) in left.order
    assert left.hasse == [(e_block, s_block)]


def test_cells_report_shape():
    W, table, graph = pipeline("B", 2, [1, 2])
    chars = character_table(W)
    doc = cells_report(table, chars)
    assert set(doc) >= {"group", "key", "left_cells", "right_cells",
                        "two_sided_cells", "cell_characters"}
    n_elements = sum(len(b) for b in doc["left_cells"]["blocks"])
    assert n_elements == len(W)
    for entry in doc["cell_characters"]:
        assert all(m >= 0 for m in entry["multiplicities"])
