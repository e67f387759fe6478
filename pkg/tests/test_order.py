import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from menergy import families as fam
from menergy.enumerate import EnumQuery, enumerate_class, enumerate_connected
from menergy.graph import GraphClass, GraphError, disjoint_union, from_edge_list
from menergy.order import Outcome, compare_coeff, compare_matching, compare_sequences
from menergy.spectral import me

TRI_PENDANT = from_edge_list(4, [(0, 1), (1, 2), (2, 0), (0, 3)])


def test_c4_vs_triangle_pendant():
    res = compare_matching(fam.cycle(4), TRI_PENDANT)
    assert res.outcome is Outcome.STRICTLY_DOMINATES and res.witness == 2
    assert res.left == (1, 4, 2) and res.right == (1, 4, 1)


def test_c4_vs_star():
    res = compare_matching(fam.cycle(4), fam.star(4))
    assert res.outcome is Outcome.STRICTLY_DOMINATES and res.witness == 2


def test_equal():
    g = fam.uni_min(9, 5)
    assert compare_matching(g, g).outcome is Outcome.EQUAL
    assert compare_coeff(g, g).outcome is Outcome.EQUAL


def test_path_vs_split_path():
    res = compare_matching(fam.path(6), disjoint_union(fam.path(1), fam.path(5)))
    assert res.outcome is Outcome.STRICTLY_DOMINATES


def test_coeff_examples():
    assert compare_coeff(fam.path(5), fam.star(5)).outcome is Outcome.STRICTLY_DOMINATES
    assert compare_coeff(fam.broom(6, 4), fam.broom(6, 3)).outcome is Outcome.STRICTLY_DOMINATES


def test_coeff_order_mismatch():
    with pytest.raises(GraphError):
        compare_coeff(fam.path(4), fam.path(5))


def test_matching_no_size_precondition():
    res = compare_matching(fam.path(5), fam.path(3))
    assert res.outcome is Outcome.STRICTLY_DOMINATES
    assert res.orders == (5, 3) and res.sizes == (4, 2)


def test_incomparable_two_witnesses():
    res = compare_sequences((1, 5, 2), (1, 4, 3))
    assert res.outcome is Outcome.INCOMPARABLE
    assert (res.witness, res.witness_other) == (1, 2)


def test_zero_padding():
    assert compare_sequences((1, 3), (1, 3, 0, 0)).outcome is Outcome.EQUAL
    assert compare_sequences((1, 3), (1, 3, 1)).outcome is Outcome.STRICTLY_DOMINATED_BY


vectors = st.lists(st.integers(0, 6), min_size=1, max_size=6)


@given(vectors, vectors)
def test_mirror(a, b):
    ab, ba = compare_sequences(a, b), compare_sequences(b, a)
    assert ba.outcome is ab.outcome.mirror()
    assert ab.mirror() == ba


@given(vectors, vectors)
def test_strict_witness_semantics(a, b):
    res = compare_sequences(a, b)
    L, R = res.left, res.right
    assert res.outcome not in (Outcome.DOMINATES, Outcome.DOMINATED_BY)
    if res.outcome is Outcome.STRICTLY_DOMINATES:
        assert all(x >= y for x, y in zip(L, R)) and L[res.witness] > R[res.witness]
    elif res.outcome is Outcome.INCOMPARABLE:
        assert L[res.witness] > R[res.witness] and L[res.witness_other] < R[res.witness_other]
    elif res.outcome is Outcome.EQUAL:
        assert L == R and res.weakly_dominates


def test_monotonicity_bridge():
    # strict dominance forces strictly larger matching energy
    pool = [g for n in range(4, 9) for kind in GraphClass if kind is not GraphClass.OTHER
            for g in enumerate_class(EnumQuery(kind, n))]
    by_n = {}
    for g in pool:
        by_n.setdefault(g.n, []).append((g, me(g)))
    checked = 0
    for n, items in by_n.items():
        for (g, eg), (h, eh) in itertools.permutations(items, 2):
            if compare_matching(g, h).outcome is Outcome.STRICTLY_DOMINATES:
                assert eg > eh + 1e-9
                checked += 1
    assert checked > 1000


@pytest.mark.parametrize("n", range(2, 11))
def test_forests_same_outcome_under_both_orders(n):
    trees = list(enumerate_class(EnumQuery(GraphClass.TREE, n)))
    for g, h in itertools.combinations(trees[:40], 2):
        assert compare_matching(g, h).outcome is compare_coeff(g, h).outcome


def test_pendant_edge_lemma():
    # G-u >= G'-u' and G-u-v > G'-u'-v' (pendant edges uv, u'v') imply G > G'
    from menergy.graph import delete_vertices
    pool = [g for n in range(5, 9) for g in enumerate_class(EnumQuery(GraphClass.UNICYCLIC, n))]
    hits = 0
    for g, h in itertools.permutations(pool[:60], 2):
        if g.n != h.n or g.m != h.m:
            continue
        pu = next((u for u in range(g.n) if g.degree(u) == 1), None)
        pu2 = next((u for u in range(h.n) if h.degree(u) == 1), None)
        if pu is None or pu2 is None:
            continue
        pv, pv2 = g.neighbors(pu)[0], h.neighbors(pu2)[0]
        a = compare_matching(delete_vertices(g, [pu]), delete_vertices(h, [pu2]))
        b = compare_matching(delete_vertices(g, [pu, pv]), delete_vertices(h, [pu2, pv2]))
        if a.weakly_dominates and b.outcome is Outcome.STRICTLY_DOMINATES:
            assert compare_matching(g, h).outcome is Outcome.STRICTLY_DOMINATES
            hits += 1
    assert hits > 0
