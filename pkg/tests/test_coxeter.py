import random
from math import factorial

import pytest

from klcells.coxeter import (ConjugacyViolation, CoxeterMatrix,
                             InfiniteOrTooLarge, WeightFunction, build_group,
                             conjugate_generator_components,
                             named_coxeter_matrix, validate_weights)


CLASSIFIED_ORDERS = [
    ("A", 1, 2),
    ("A", 2, 6),
    ("A", 3, 24),
    ("A", 4, 120),
    ("B", 2, 8),
    ("B", 3, 48),
    ("D", 4, 192),
    ("I2", 3, 6),
    ("I2", 4, 8),
    ("I2", 5, 10),
    ("I2", 6, 12),
    ("I2", 7, 14),
    ("I2", 8, 16),
]


@pytest.mark.parametrize("kind,n,order", CLASSIFIED_ORDERS)
def test_classified_orders(kind, n, order):
    W = build_group(named_coxeter_matrix(kind, n))
    assert len(W) == order


def test_classification_formulas():
    for n in (1, 2, 3):
        assert len(build_group(named_coxeter_matrix("A", n))) == factorial(n + 1)
    for n in (2, 3):
        assert len(build_group(named_coxeter_matrix("B", n))) == 2 ** n * factorial(n)
    assert len(build_group(named_coxeter_matrix("D", 4))) == 2 ** 3 * factorial(4)
    for m in (3, 5, 8):
        assert len(build_group(named_coxeter_matrix("I2", m))) == 2 * m


def test_infinite_group_rejected():
    # Affine A_2: all bonds 3, rank 3; the root system never closes.
    affine = CoxeterMatrix.from_rows([[1, 3, 3], [3, 1, 3], [3, 3, 1]])
    with pytest.raises(InfiniteOrTooLarge):
        build_group(affine, size_cap=500)


def test_size_cap_respected():
    with pytest.raises(InfiniteOrTooLarge):
        build_group(named_coxeter_matrix("A", 3), size_cap=10)


def test_multiply_basics():
    W = build_group(named_coxeter_matrix("I2", 3))
    e = W.identity
    s, t = W.generators()
    assert W.mul(s, e) == s
    assert W.mul(s, s) == e
    st = W.mul(s, t)
    assert W.mul(W.mul(st, st), st) == e  # (st)^3 = e from m_st = 3


def test_length_properties():
    W = build_group(named_coxeter_matrix("B", 3))
    for w in range(len(W)):
        assert W.length(w) == W.length(W.inv(w))
        assert W.length(w) == len(W.word(w))
        for g in range(W.rank):
            assert abs(W.length(W.lmul_gen(g, w)) - W.length(w)) == 1


def test_descents():
    W = build_group(named_coxeter_matrix("I2", 4))
    assert W.descents(W.identity, "left") == []
    assert W.descents(W.identity, "right") == []
    w0 = W.longest_element()
    assert W.descents(w0, "left") == [0, 1]
    assert W.descents(w0, "right") == [0, 1]
    # Brute-force check of both sides against the length table.
    for w in range(len(W)):
        left = [g for g in range(W.rank) if W.length(W.lmul_gen(g, w)) < W.length(w)]
        assert W.left_descents(w) == left


def test_sts_descents_in_a2():
    W = build_group(named_coxeter_matrix("A", 2))
    sts = W.element_by_name("s t s")
    assert sts == W.longest_element()
    assert W.left_descents(sts) == [0, 1]


def test_exchange_condition_spot_checks():
    W = build_group(named_coxeter_matrix("B", 3))
    rng = random.Random(2024)
    for _ in range(40):
        w = rng.randrange(len(W))
        for s in W.left_descents(w):
            # some reduced word of w starts with s: s * (sw) is reduced
            sw = W.lmul_gen(s, w)
            assert W.length(sw) == W.length(w) - 1
            assert W.element_by_word((s,) + W.word(sw)) == w


def test_canonical_words_are_reduced_and_shortlex():
    W = build_group(named_coxeter_matrix("B", 2))
    words = [W.word(w) for w in range(len(W))]
    for w, word in enumerate(words):
        assert len(word) == W.length(w)
    # ShortLex order of canonical words agrees with the element order.
    keys = [(len(word), word) for word in words]
    assert keys == sorted(keys)


def test_action_is_faithful():
    W = build_group(named_coxeter_matrix("A", 3))
    perms = set()
    for w in range(len(W)):
        image = tuple(W.mul(w, g) for g in W.generators())
        perms.add((W.length(w), image))
    assert len(perms) == len(W)


def test_reflections_count_equals_positive_roots():
    for kind, n in [("A", 2), ("A", 3), ("B", 2), ("B", 3), ("I2", 5), ("I2", 6)]:
        W = build_group(named_coxeter_matrix(kind, n))
        assert len(W.reflections()) == len(W.roots) // 2


def test_conjugacy_class_counts():
    assert len(build_group(named_coxeter_matrix("A", 1)).conjugacy_classes()) == 2
    assert len(build_group(named_coxeter_matrix("A", 2)).conjugacy_classes()) == 3
    assert len(build_group(named_coxeter_matrix("B", 2)).conjugacy_classes()) == 5


def test_conjugacy_classes_partition():
    W = build_group(named_coxeter_matrix("B", 2))
    classes = W.conjugacy_classes()
    seen = sorted(w for block in classes.blocks for w in block)
    assert seen == list(range(len(W)))
    for block in classes.blocks:
        rep = block[0]
        for w in block:
            # some conjugator exists: brute force
            assert any(W.mul(W.mul(g, w), W.inv(g)) == rep for g in range(len(W)))


def test_odd_path_criterion_matches_true_conjugacy():
    for kind, n in [("A", 3), ("B", 3), ("I2", 4), ("I2", 5), ("D", 4)]:
        W = build_group(named_coxeter_matrix(kind, n))
        comp = conjugate_generator_components(W.matrix)
        classes = W.conjugacy_classes()
        gens = W.generators()
        for i in range(W.rank):
            for j in range(W.rank):
                same_class = classes.class_of[gens[i]] == classes.class_of[gens[j]]
                assert same_class == (comp[i] == comp[j])


def test_validate_weights():
    b2 = named_coxeter_matrix("I2", 4)
    validate_weights(b2, WeightFunction.rational([1, 2]))  # not conjugate: ok
    a2 = named_coxeter_matrix("A", 2)
    with pytest.raises(ConjugacyViolation) as err:
        validate_weights(a2, WeightFunction.rational([1, 2]))
    assert err.value.gen_a == "s" and err.value.gen_b == "t"
    validate_weights(a2, WeightFunction.rational([0, 0]))  # L = 0 is fine
    with pytest.raises(ValueError):
        validate_weights(a2, WeightFunction.rational([-1, -1]))


def test_lex_generic_weights_validate_on_b2_only():
    b2 = named_coxeter_matrix("I2", 4)
    validate_weights(b2, WeightFunction.lex_generic(2))
    a2 = named_coxeter_matrix("A", 2)
    with pytest.raises(ConjugacyViolation):
        validate_weights(a2, WeightFunction.lex_generic(2))
