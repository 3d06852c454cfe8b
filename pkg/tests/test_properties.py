"""Randomized properties driven by hypothesis."""

import numpy as np
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from gapmatch.boolmat import BoolMatrix, and_elementwise, multiply, multiply_naive
from gapmatch.core import Alphabet, GapConstraint, Instance, check_embedding, oracle_match
from gapmatch.io import parse_instance, serialize_instance
from gapmatch.matchers import dispatch, match_nfa_product, match_vsn_dp
from gapmatch.matchers.tree_matmul import _Pipeline, mask
from gapmatch.semilinear import LinearSet, SemilinearSet, build_table
from gapmatch.structure import build_tree, is_non_intersecting
from oracles import in_length_set, pinned_exists

SETTINGS = settings(max_examples=150, deadline=None, suppress_health_check=[HealthCheck.too_slow])

linear = st.builds(LinearSet, st.integers(0, 15),
                   st.lists(st.integers(1, 6), max_size=2, unique=True).map(tuple))
semilinear = st.lists(linear, min_size=1, max_size=3).map(lambda ps: SemilinearSet(tuple(ps)))


@st.composite
def instances(draw, max_n=12, max_m=5):
    letters = "abc"[:draw(st.integers(1, 3))]
    text = draw(st.text(letters, min_size=1, max_size=max_n))
    pattern = draw(st.text(letters, min_size=1, max_size=max_m))
    alpha = Alphabet(tuple(letters))
    m = len(pattern)
    pairs = draw(st.lists(st.tuples(st.integers(1, m), st.integers(1, m))
                          .filter(lambda ij: ij[0] < ij[1]), max_size=4, unique=True)) if m > 1 else []
    cs = []
    for i, j in pairs:
        if draw(st.booleans()):
            lang = draw(semilinear)
        else:
            states = draw(st.integers(1, 3))
            triples = [(q, a, draw(st.integers(-1, states - 1)))
                       for q in range(states) for a in letters]
            accepting = draw(st.lists(st.integers(0, states - 1), max_size=states, unique=True))
            lang = alpha.dfa(states, 0, accepting, [t for t in triples if t[2] >= 0])
        cs.append(GapConstraint(i, j, lang))
    return Instance.from_strings(text, pattern, cs, alpha)


@SETTINGS
@given(semilinear, st.integers(0, 60))
def test_table_equals_membership(s, n):
    bits = build_table(s, n).bits
    assert [bool(b) for b in bits] == [in_length_set(s, x) for x in range(n + 1)]


@SETTINGS
@given(instances())
def test_round_trip(inst):
    text = serialize_instance(inst)
    assert parse_instance(text) == inst
    assert serialize_instance(parse_instance(text)) == text


@SETTINGS
@given(instances())
def test_matchers_agree(inst):
    ref = oracle_match(inst)
    assert match_vsn_dp(inst).matched == ref.matched
    assert match_nfa_product(inst).matched == ref.matched
    assert dispatch(inst).matched == ref.matched
    if ref.matched:
        assert check_embedding(inst, ref.witness)


matrices = st.integers(1, 40).flatmap(
    lambda n: st.tuples(*[st.lists(st.lists(st.booleans(), min_size=n, max_size=n),
                                   min_size=n, max_size=n)] * 3))


@SETTINGS
@given(matrices)
def test_boolmat_laws(abc):
    a, b, c = (BoolMatrix.from_dense(np.array(x, dtype=bool)) for x in abc)
    ab = multiply(a, b)
    assert ab == multiply_naive(a, b) and ab.padding_clear()
    assert multiply(ab, c) == multiply(a, multiply(b, c))


@SETTINGS
@given(instances(max_n=9, max_m=5), st.data())
def test_join_and_constrain(inst, data):
    """Products of pinned matrices join embeddings; masks add one constraint."""
    m = inst.m
    if m < 3:
        return
    s = data.draw(st.integers(1, m - 2))
    t = data.draw(st.integers(s + 1, m - 1))
    u = data.draw(st.integers(t + 1, m))
    left = [c for c in inst.constraints if s <= c.i and c.j <= t]
    right = [c for c in inst.constraints if t <= c.i and c.j <= u]
    w, p = inst.text, inst.pattern

    def pinned(a, b, cs):
        return np.array([[pinned_exists(w, p, a, b, i, j, cs) for j in range(1, inst.n + 1)]
                         for i in range(1, inst.n + 1)], dtype=bool)

    P1, P2 = pinned(s, t, left), pinned(t, u, right)
    joined = multiply(BoolMatrix.from_dense(P1), BoolMatrix.from_dense(P2))
    assert np.array_equal(joined.to_dense(), pinned(s, u, left + right))
    outer = [c for c in inst.constraints if c.pair == (s, u)]
    if outer:
        both = and_elementwise(joined, mask(outer[0], w)).to_dense()
        assert np.array_equal(both, pinned(s, u, left + right + outer))


@SETTINGS
@given(instances(max_n=30, max_m=7))
def test_multiplication_count(inst):
    if inst.m < 2 or not is_non_intersecting(inst.constraints):
        return
    tree = build_tree(inst.constraints, inst.m)
    pipe = _Pipeline(inst, tree)
    pipe.compute()
    assert pipe.multiplications == 2 * (len(tree.nodes) - 1)
