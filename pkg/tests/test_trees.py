import random

import pytest

from conftest import unreduced_trees, vertex_parities
from magtree import series
from magtree.trees import (
    EMPTY,
    OMEGA,
    ArityBound,
    TreeParseError,
    as_bound,
    c_bounded,
    catalan,
    compose,
    enumerate_shapes,
    format_tree,
    graft,
    leaf,
    node,
    parse_tree,
    restrict_reduce,
    super_catalan,
    trees_with_label_multiset,
)


def test_parse_examples():
    assert parse_tree("1") is EMPTY
    assert parse_tree("(x1 x2)") == node([leaf(1), leaf(2)])
    t = parse_tree("(x1 (x2 x3) x4)")
    assert t.arity() == 3
    assert t.children[1] == node([leaf(2), leaf(3)])


def test_parse_format_round_trip():
    for text in ["1", "x1", "x12", "(x1 x2)", "((x1 x2) x3)", "(x1 (x2 x3) x4 x5)"]:
        assert format_tree(parse_tree(text)) == text


def test_parse_errors_report_positions():
    with pytest.raises(TreeParseError) as e:
        parse_tree("(x1)")
    assert e.value.position == 0  # unary node flagged at the opening paren
    with pytest.raises(TreeParseError):
        parse_tree("(x1 1)")  # unit as child
    with pytest.raises(TreeParseError):
        parse_tree("(x1  x2)")  # double space
    with pytest.raises(TreeParseError):
        parse_tree("x01")  # leading zero
    with pytest.raises(TreeParseError):
        parse_tree("x0")
    with pytest.raises(TreeParseError) as e:
        parse_tree("(x1 x2")
    assert e.value.position == 6
    with pytest.raises(TreeParseError):
        parse_tree("(x1 x2) ")


def test_tree_invariants():
    with pytest.raises(ValueError):
        node([leaf(1)])
    with pytest.raises(ValueError):
        node([leaf(1), EMPTY])
    with pytest.raises(ValueError):
        leaf(0)
    assert EMPTY.degree == 0
    assert leaf(3).degree == 1
    assert parse_tree("((x1 x2) x3)").degree == 3


def test_canonical_order():
    assert EMPTY < leaf(1) < leaf(2) < node([leaf(1), leaf(1)])
    # a corolla precedes its extensions, nested first children come later
    assert parse_tree("(x1 x1)") < parse_tree("(x1 x1 x1)")
    assert parse_tree("(x1 (x1 x1))") < parse_tree("((x1 x1) x1)")


def test_enumerate_counts_match_sequences():
    for n in range(1, 9):
        assert len(enumerate_shapes(n, 2)) == catalan(n) == c_bounded(2, n)
        assert len(enumerate_shapes(n, 3)) == c_bounded(3, n)
        assert len(enumerate_shapes(n, OMEGA)) == super_catalan(n) == c_bounded(OMEGA, n)


def test_enumerate_examples():
    assert len(enumerate_shapes(4, 2)) == 5
    assert len(enumerate_shapes(4, OMEGA)) == 11
    assert enumerate_shapes(1, 2) == [leaf(1)]
    shapes = enumerate_shapes(5, OMEGA)
    assert shapes == sorted(shapes)
    with pytest.raises(ValueError):
        enumerate_shapes(0, 2)


def test_sequence_values():
    assert [catalan(n) for n in range(1, 10)] == [1, 1, 2, 5, 14, 42, 132, 429, 1430]
    assert catalan(7) == 132
    assert super_catalan(6) == 197
    assert c_bounded(3, 3) == super_catalan(3) == 3
    for n in range(1, 4):
        assert c_bounded(5, n) == super_catalan(n)  # below the bound nothing is cut
    with pytest.raises(ValueError):
        catalan(0)
    with pytest.raises(ValueError):
        c_bounded(2, 0)


def test_arity_bound_values():
    assert as_bound("omega").is_omega
    assert as_bound(2) == ArityBound(2)
    assert OMEGA.includes(ArityBound(7))
    assert not ArityBound(2).includes(OMEGA)
    with pytest.raises(ValueError):
        ArityBound(1)
    with pytest.raises(ValueError):
        as_bound("three")


def test_compose_examples():
    corolla = parse_tree("(x1 x2)")
    assert compose(leaf(5), 1, corolla) == corolla
    assert compose(corolla, 1, corolla) == parse_tree("((x1 x2) x2)")
    assert compose(corolla, 2, corolla) == parse_tree("(x1 (x1 x2))")
    with pytest.raises(IndexError):
        compose(corolla, 3, corolla)
    with pytest.raises(ValueError):
        compose(EMPTY, 1, corolla)


def test_compose_associativity_laws():
    rng = random.Random(7)
    from conftest import random_tree

    for _ in range(200):
        t1 = random_tree(rng, 4, OMEGA, 3)
        t2 = random_tree(rng, 3, OMEGA, 3)
        t3 = random_tree(rng, 3, OMEGA, 3)
        n1, n2 = t1.degree, t2.degree
        i = rng.randint(1, n1)
        # disjoint slots, j before i
        if i > 1:
            j = rng.randint(1, i - 1)
            lhs = compose(compose(t1, i, t2), j, t3)
            rhs = compose(compose(t1, j, t3), i + t3.degree - 1, t2)
            assert lhs == rhs
        # nested slot inside the grafted copy
        j = rng.randint(i, i + n2 - 1)
        lhs = compose(compose(t1, i, t2), j, t3)
        rhs = compose(t1, i, compose(t2, j - i + 1, t3))
        assert lhs == rhs
        # disjoint slots, j after the grafted copy
        if i + n2 <= n1 + n2 - 1:
            j = rng.randint(i + n2, n1 + n2 - 1)
            lhs = compose(compose(t1, i, t2), j, t3)
            rhs = compose(compose(t1, j - n2 + 1, t3), i, t2)
            assert lhs == rhs


def test_graft_examples():
    assert graft([leaf(1), leaf(2)]) == parse_tree("(x1 x2)")
    assert graft([leaf(1), leaf(2), leaf(3)]) == parse_tree("(x1 x2 x3)")
    assert graft([parse_tree("(x1 x2)"), leaf(3)]) == parse_tree("((x1 x2) x3)")
    with pytest.raises(ValueError):
        graft([leaf(1)])
    with pytest.raises(ValueError):
        graft([leaf(1), EMPTY])


def test_restrict_reduce_examples():
    t = parse_tree("(x1 (x2 x3))")
    assert restrict_reduce(t, [1, 2, 3]) == t
    assert restrict_reduce(t, []) is EMPTY
    assert restrict_reduce(t, [1, 3]) == parse_tree("(x1 x3)")
    assert restrict_reduce(t, [2]) == leaf(2)
    assert restrict_reduce(t, 0b101) == parse_tree("(x1 x3)")
    with pytest.raises(IndexError):
        restrict_reduce(t, [4])


def test_restrict_reduce_root_contraction():
    t = parse_tree("((x1 x2) x3)")
    # dropping the right branch must promote the left child to the root
    assert restrict_reduce(t, [1, 2]) == parse_tree("(x1 x2)")


def test_restrict_reduce_degree_and_labels():
    rng = random.Random(11)
    from conftest import random_tree

    for _ in range(300):
        t = random_tree(rng, 6, OMEGA, 4)
        n = t.degree
        positions = sorted(rng.sample(range(1, n + 1), rng.randint(0, n)))
        r = restrict_reduce(t, positions)
        assert r.degree == len(positions)
        labels = t.leaf_labels()
        assert r.leaf_labels() == tuple(labels[p - 1] for p in positions)
        assert r.max_arity() <= max(t.max_arity(), 0)


def test_restrict_reduce_superset_consistency():
    rng = random.Random(13)
    from conftest import random_tree

    for _ in range(300):
        t = random_tree(rng, 6, OMEGA, 3)
        n = t.degree
        j_set = sorted(rng.sample(range(1, n + 1), rng.randint(0, n)))
        i_set = sorted(rng.sample(j_set, rng.randint(0, len(j_set))))
        through = restrict_reduce(
            restrict_reduce(t, j_set), [j_set.index(p) + 1 for p in i_set]
        )
        assert through == restrict_reduce(t, i_set)


def test_trees_with_label_multiset():
    got = trees_with_label_multiset((1, 2), 2)
    assert [str(t) for t in got] == ["(x1 x2)", "(x2 x1)"]
    assert len(trees_with_label_multiset((1, 1, 2), 2)) == 2 * 3


def test_vertex_parity_identity():
    cp = series.c_prime_sequence(2, 7)
    odd_expected = {2: 1, 3: 2, 4: 7, 5: 24, 6: 86, 7: 314}
    for n in range(1, 8):
        forest = unreduced_trees(n)
        assert len(forest) == catalan(n)
        even = odd = 0
        for t in forest:
            e, o = vertex_parities(t)
            even += e
            odd += o
        assert even == cp[n - 1]
        assert odd == n * catalan(n) - cp[n - 1]
        if n >= 2:
            assert odd == odd_expected[n]
