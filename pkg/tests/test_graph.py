import itertools

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from menergy import families as fam
from menergy.graph import (BicyclicStructure, GraphClass, GraphError, are_isomorphic, canonical_key,
                           classify, components, cycle_structure, delete_edge, delete_vertices,
                           diameter, disjoint_union, empty_graph, format_graph_text, from_edge_list,
                           is_connected, parse_graph_text, relabel)

from conftest import graphs, to_nx

C4 = from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
P4 = fam.path(4)


class TestConstruction:
    def test_single_edge(self):
        g = from_edge_list(2, [(0, 1)])
        assert (g.n, g.m) == (2, 1)

    def test_c4(self):
        assert C4.m == 4 and all(C4.degree(v) == 2 for v in range(4))

    @pytest.mark.parametrize("n,edges", [
        (3, [(0, 0)]),
        (3, [(0, 1), (1, 0)]),
        (3, [(0, 3)]),
        (3, [(-1, 0)]),
        (33, []),
    ])
    def test_rejects_bad_input(self, n, edges):
        with pytest.raises(GraphError):
            from_edge_list(n, edges)

    def test_edges_sorted_and_roundtrip(self):
        g = from_edge_list(5, [(4, 0), (2, 1), (3, 1)])
        assert g.edges() == sorted(g.edges())
        assert from_edge_list(5, g.edges()) == g


class TestEdits:
    def test_c4_minus_edge_is_p4(self):
        assert are_isomorphic(delete_edge(C4, 0, 1), P4)

    def test_k2_minus_edge(self):
        g = delete_edge(fam.path(2), 0, 1)
        assert (g.n, g.m) == (2, 0)

    def test_delete_non_edge(self):
        with pytest.raises(GraphError):
            delete_edge(fam.path(3), 0, 2)

    def test_c4_minus_vertex(self):
        assert are_isomorphic(delete_vertices(C4, [0]), fam.path(3))

    def test_p5_minus_ends(self):
        assert are_isomorphic(delete_vertices(fam.path(5), [0, 4]), fam.path(3))

    def test_star_minus_centre(self):
        g = delete_vertices(fam.star(5), [0])
        assert (g.n, g.m) == (4, 0)

    def test_unions(self):
        g = disjoint_union(fam.path(2), fam.path(3))
        assert (g.n, g.m) == (5, 3)
        assert disjoint_union(C4, empty_graph(0)) == C4
        g = disjoint_union(fam.path(1), fam.path(1))
        assert (g.n, g.m) == (2, 0)


class TestMetrics:
    @pytest.mark.parametrize("n", range(1, 33))
    def test_path_diameter(self, n):
        assert diameter(fam.path(n)) == n - 1

    @pytest.mark.parametrize("n", range(3, 12))
    def test_star_diameter(self, n):
        assert diameter(fam.star(n)) == 2

    def test_c5_diameter(self):
        assert diameter(fam.cycle(5)) == 2

    def test_diameter_disconnected(self):
        with pytest.raises(GraphError):
            diameter(empty_graph(2))

    def test_classify_examples(self):
        assert classify(fam.path(6)) is GraphClass.TREE
        assert classify(C4) is GraphClass.UNICYCLIC
        k4e = from_edge_list(4, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)])
        assert classify(k4e) is GraphClass.BICYCLIC
        assert classify(fam.complete(4)) is GraphClass.OTHER

    @settings(max_examples=150, deadline=None)
    @given(graphs(max_n=9, connected=True))
    def test_classify_matches_cycle_rank(self, g):
        rank = g.m - g.n + 1
        expected = [GraphClass.TREE, GraphClass.UNICYCLIC, GraphClass.BICYCLIC]
        assert classify(g) is (expected[rank] if rank < 3 else GraphClass.OTHER)

    @settings(max_examples=150, deadline=None)
    @given(graphs(max_n=10, connected=True))
    def test_diameter_matches_networkx(self, g):
        assert diameter(g) == nx.diameter(to_nx(g))

    @settings(max_examples=100, deadline=None)
    @given(graphs(max_n=10))
    def test_components_match_networkx(self, g):
        ours = sorted(sorted(c) for c in components(g))
        theirs = sorted(sorted(c) for c in nx.connected_components(to_nx(g)))
        assert ours == theirs
        assert is_connected(g) == (g.n > 0 and len(theirs) == 1)


class TestCycleStructure:
    def test_k4_minus_edge(self):
        g = from_edge_list(4, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)])
        s = cycle_structure(g)
        assert (s.a, s.b, s.t, s.c) == (3, 3, 1, 4)

    def test_dumbbell(self):
        g = from_edge_list(7, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 4)])
        s = cycle_structure(g)
        assert (s.a, s.b, s.t, s.l) == (3, 3, 0, 2)

    def test_bi_path_7_1(self):
        s = cycle_structure(fam.bi_path(7, 1))
        assert (s.a, s.b, s.t, s.c) == (3, 3, 1, 4)

    def test_requires_bicyclic(self):
        with pytest.raises(GraphError):
            cycle_structure(C4)

    @settings(max_examples=120, deadline=None)
    @given(st.data())
    def test_against_networkx_cycles(self, data):
        n = data.draw(st.integers(4, 9))
        tree = [(data.draw(st.integers(0, v - 1)), v) for v in range(1, n)]
        rest = [p for p in itertools.combinations(range(n), 2) if p not in tree]
        extra = data.draw(st.lists(st.sampled_from(rest), min_size=2, max_size=2, unique=True))
        g = from_edge_list(n, tree + extra)
        s = cycle_structure(g)
        lengths = sorted(len(c) for c in nx.cycle_basis(to_nx(g)))
        all_cycles = sorted(len(c) for c in nx.simple_cycles(to_nx(g)))
        if len(all_cycles) == 2:
            assert s.t == 0 and [s.a, s.b] == all_cycles
            h = to_nx(g)
            cyc = [set(c) for c in nx.simple_cycles(h)]
            dist = min(nx.shortest_path_length(h, x, y) for x in cyc[0] for y in cyc[1])
            assert s.l == dist
        else:
            assert len(all_cycles) == 3
            assert s.t >= 1 and s.c == s.a + s.b - 2 * s.t
            assert sorted([s.a, s.b, s.c]) == all_cycles
        assert len(lengths) == 2


class TestCanonical:
    def test_relabelled_path(self):
        a = from_edge_list(4, [(0, 1), (1, 2), (2, 3)])
        b = from_edge_list(4, [(2, 0), (0, 3), (3, 1)])
        assert canonical_key(a) == canonical_key(b)

    def test_distinct(self):
        assert canonical_key(C4) != canonical_key(P4)
        assert canonical_key(fam.star(4)) != canonical_key(P4)

    def test_isomorphism_examples(self):
        assert are_isomorphic(C4, relabel(C4, [2, 0, 3, 1]))
        assert not are_isomorphic(C4, P4)
        assert not are_isomorphic(disjoint_union(fam.complete(3), fam.path(1)), fam.star(4))

    @settings(max_examples=200, deadline=None)
    @given(st.data())
    def test_invariant_under_relabelling(self, data):
        g = data.draw(graphs(max_n=12))
        perm = data.draw(st.permutations(list(range(g.n))))
        assert canonical_key(relabel(g, perm)) == canonical_key(g)

    @settings(max_examples=200, deadline=None)
    @given(graphs(max_n=7), graphs(max_n=7))
    def test_agrees_with_networkx(self, g, h):
        if g.n != h.n or g.m != h.m:
            return
        assert are_isomorphic(g, h) == nx.is_isomorphic(to_nx(g), to_nx(h))

    def test_exhaustive_n5(self):
        # every labeled graph on 5 vertices; key classes must equal nx iso classes (34 of them)
        pairs = list(itertools.combinations(range(5), 2))
        keys = set()
        for mask in range(1 << len(pairs)):
            keys.add(canonical_key(from_edge_list(5, [p for i, p in enumerate(pairs) if mask >> i & 1])))
        assert len(keys) == 34

    def test_regular_graphs(self):
        # Petersen vs its relabelling, and two non-isomorphic cubic graphs on 8 vertices
        pet = nx.petersen_graph()
        g = from_edge_list(10, list(pet.edges()))
        h = relabel(g, [3, 7, 1, 9, 0, 5, 2, 8, 6, 4])
        assert are_isomorphic(g, h)
        cube = from_edge_list(8, [(a, b) for a, b in nx.convert_node_labels_to_integers(nx.hypercube_graph(3)).edges()])
        mobius = from_edge_list(8, [(i, (i + 1) % 8) for i in range(8)] + [(i, i + 4) for i in range(4)])
        assert not are_isomorphic(cube, mobius)


class TestTextFormat:
    def test_roundtrip(self):
        g = fam.uni_min(9, 5)
        assert parse_graph_text(format_graph_text(g)) == g

    def test_comments_and_blank_lines(self):
        g = parse_graph_text("# a comment\n3\n0 1\n\n1 2  # trailing\n")
        assert g == fam.path(3)

    @pytest.mark.parametrize("text", ["", "x\n", "3\n0\n", "3\n0 5\n", "2\n0 0\n"])
    def test_malformed(self, text):
        with pytest.raises(GraphError):
            parse_graph_text(text)
