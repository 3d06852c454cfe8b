import random
from itertools import permutations

import pytest

from gapmatch.core import ConstraintSet, GapConstraint
from gapmatch.errors import InvalidArgument, TooLarge
from gapmatch.samples import crossing_pairs, nested_pairs, worked_example
from gapmatch.semilinear import SemilinearSet
from gapmatch.structure import (Relation, analyze, build_graph, build_tree, find_intersecting_pair,
                                is_non_intersecting, min_vsn_ordering, preorder_lt, relation, root,
                                synthetic_root, vsn_of_ordering, vsn_report)
from oracles import arcs_cross, in_length_set
from randgen import random_pairs

ANY = SemilinearSet.at_least(0)


def C(i, j):
    return GapConstraint(i, j, ANY)


def cset(pairs):
    return ConstraintSet(tuple(C(i, j) for i, j in pairs))


def boundary_width(m, edges, order):
    """Separation number straight from the definition."""
    place = {v: q for q, v in enumerate(order)}
    adj = {v: set() for v in range(1, m + 1)}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    return max(sum(1 for v in order[:q] if any(place[u] >= q for u in adj[v]))
               for q in range(1, m + 1))


def test_relation_examples():
    assert relation(C(1, 3), C(1, 4)) is Relation.CONTAINED_IN
    assert relation(C(1, 4), C(3, 5)) is Relation.INTERSECTS
    assert relation(C(1, 3), C(3, 5)) is Relation.DISJOINT
    assert relation(C(1, 4), C(1, 3)) is Relation.CONTAINS
    assert relation(C(2, 5), C(2, 5)) is Relation.EQUAL


def test_relation_symmetries():
    rng = random.Random(1)
    flip = {Relation.CONTAINS: Relation.CONTAINED_IN, Relation.CONTAINED_IN: Relation.CONTAINS}
    for _ in range(2000):
        a = sorted(rng.sample(range(1, 12), 2))
        b = sorted(rng.sample(range(1, 12), 2))
        r, s = relation(C(*a), C(*b)), relation(C(*b), C(*a))
        assert s is flip.get(r, r)


def test_non_intersecting_examples():
    assert is_non_intersecting(worked_example().constraints)
    assert not is_non_intersecting(cset(crossing_pairs()))
    assert is_non_intersecting(cset([]))
    assert is_non_intersecting(cset([(1, 2)]))
    pair = find_intersecting_pair(cset(crossing_pairs()))
    assert {pair[0].pair, pair[1].pair} == {(1, 4), (3, 5)}


def test_graph_of_crossing_set():
    g = build_graph(5, cset(crossing_pairs()))
    assert g.edges == {(1, 3), (1, 4), (3, 5), (1, 2), (2, 3), (3, 4), (4, 5), (1, 5)}


def test_graph_without_constraints():
    assert build_graph(3, cset([])).edges == {(1, 2), (2, 3), (1, 3)}


def test_real_label_overrides_trivial():
    real = GapConstraint(1, 4, SemilinearSet.linear(7))
    g = build_graph(4, ConstraintSet((real,)))
    assert g.labels[(1, 4)] is real
    assert (1, 4) not in g.trivial and (1, 2) in g.trivial


def test_graph_needs_two_positions():
    with pytest.raises(InvalidArgument):
        build_graph(1, cset([]))


def test_vsn_examples():
    path = build_graph(4, cset([]))
    assert vsn_of_ordering(path, (1, 2, 3, 4)) == boundary_width(4, path.edges, (1, 2, 3, 4)) == 2
    k4 = [(a, b) for a in range(1, 5) for b in range(a + 1, 5)]
    for order in permutations(range(1, 5)):
        assert vsn_of_ordering((4, k4), order) == 3
    assert vsn_of_ordering(build_graph(2, cset([])), (1, 2)) == 1


def test_vsn_rejects_non_permutation():
    with pytest.raises(InvalidArgument):
        vsn_of_ordering(build_graph(3, cset([])), (1, 1, 2))


def test_min_vsn_small_graphs():
    k4 = [(a, b) for a in range(1, 5) for b in range(a + 1, 5)]
    assert min_vsn_ordering((4, k4)).vsn == 3
    for m in range(3, 13):
        assert min_vsn_ordering(build_graph(m, cset([]))).vsn == 2


def test_min_vsn_is_minimal():
    rng = random.Random(9)
    for _ in range(40):
        m = rng.randint(2, 7)
        g = build_graph(m, cset(random_pairs(rng, m, rng.randint(0, 6), False)))
        report = min_vsn_ordering(g)
        assert report.optimal
        assert report.vsn == boundary_width(m, g.edges, report.ordering)
        brute = min(boundary_width(m, g.edges, o) for o in permutations(range(1, m + 1)))
        assert report.vsn == brute


def test_min_vsn_beats_random_orderings():
    rng = random.Random(13)
    m = 10
    g = build_graph(m, cset(random_pairs(rng, m, 10, False)))
    best = min_vsn_ordering(g).vsn
    for _ in range(1000):
        order = list(range(1, m + 1))
        rng.shuffle(order)
        assert best <= vsn_of_ordering(g, order)


def test_clique_graph_vsn_grows_with_k():
    from gapmatch.generators import SourceGraph, gen_clique
    for k in (2, 3):
        inst = gen_clique(SourceGraph.from_edges(4, []), k)
        assert min_vsn_ordering(build_graph(inst.m, inst.constraints)).vsn >= k


def test_min_vsn_limit():
    g = build_graph(22, cset([]))
    with pytest.raises(TooLarge):
        min_vsn_ordering(g)
    report = vsn_report(g)
    assert not report.optimal and report.ordering == tuple(range(1, 23))


def test_root_index():
    cs = cset([(2, 3), (1, 6), (4, 5)])
    assert root(cs, 6) == 2
    assert root(cset([(2, 3)]), 6) == 0
    inst = worked_example()
    k = root(inst.constraints, 5)
    assert inst.constraints[k - 1].pair == (1, 5)


def test_synthetic_root_is_loose():
    r = synthetic_root(6)
    assert r.pair == (1, 6)
    assert [x for x in range(30) if in_length_set(r.language, x)] == list(range(4, 30))


def test_preorder_examples():
    assert preorder_lt(C(1, 7), C(1, 5))
    assert preorder_lt(C(1, 5), C(5, 7))
    assert not preorder_lt(C(7, 9), C(1, 7))
    with pytest.raises(InvalidArgument):
        preorder_lt(C(1, 5), C(1, 5))


def tree_lists(tree):
    return {tree.nodes[k].pair: tree.child_pairs(k) for k in range(len(tree.nodes))}


def test_nested_tree():
    tree = build_tree(cset(nested_pairs()), 9)
    assert tree.synthetic and tree.nodes[0].pair == (1, 9)
    lists = tree_lists(tree)
    assert lists[(1, 9)] == [(1, 7), (7, 9)]
    assert lists[(1, 7)] == [(1, 5), (5, 7)]
    assert lists[(1, 5)] == [(1, 2), (2, 3), (4, 5)]
    assert lists[(5, 7)] == [(5, 6)]
    assert lists[(7, 9)] == [(8, 9)]
    assert tree.depth() == 3


def test_single_root_tree():
    tree = build_tree(cset([(1, 6)]), 6)
    assert not tree.synthetic and tree.children == ((),)


def test_chain_is_a_path():
    tree = build_tree(cset([(1, 8), (2, 7), (3, 6)]), 8)
    assert tree.children == ((1,), (2,), ())
    assert tree.depth() == 2


def test_tree_rejects_crossing():
    with pytest.raises(InvalidArgument):
        build_tree(cset(crossing_pairs()), 5)


def test_tree_invariants_on_random_sets():
    rng = random.Random(21)
    for _ in range(300):
        m = rng.randint(2, 12)
        pairs = random_pairs(rng, m, rng.randint(0, 2 * m), True)
        assert len(pairs) <= max(1, 2 * m - 3)
        tree = build_tree(cset(pairs), m)
        assert sorted(tree.origin[1:]) == [k for k in range(1, len(pairs) + 1) if pairs[k - 1] != (1, m)]
        for k, kids in enumerate(tree.children):
            a, b = tree.nodes[k].i, tree.nodes[k].j - 1
            for c in kids:
                x, y = tree.nodes[c].i, tree.nodes[c].j - 1
                assert a <= x and y <= b and (x, y) != (a, b)
            for u, v in zip(kids, kids[1:]):
                assert tree.nodes[u].j <= tree.nodes[v].i


def test_crossing_predicate_matches_relation():
    rng = random.Random(17)
    for _ in range(300):
        m = rng.randint(2, 10)
        items = [C(i, j) for i, j in random_pairs(rng, m, rng.randint(0, 8), False)]
        for c in items:
            for d in items:
                if c.pair != d.pair:
                    assert arcs_cross(c, d) == (relation(c, d) is Relation.INTERSECTS)


def test_analyze_worked_example():
    inst = worked_example()
    report = analyze(inst.constraints, inst.m)
    assert report["non_intersecting"] and report["tree_depth"] == 2 and report["K"] == 4
    assert not report["synthetic_root"]
    crossing = analyze(cset(crossing_pairs()), 5)
    assert not crossing["non_intersecting"] and "tree_depth" not in crossing
