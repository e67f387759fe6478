import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from menergy import families as fam
from menergy.graph import delete_edge, delete_vertices, disjoint_union, from_edge_list, relabel
from menergy.matching import (IntPolynomial, MatchingCache, brute_force_vector, convolve,
                              hosoya_index, matching_number, matching_polynomial, matching_vector,
                              pad, polynomial_from_vector, shift, add_vectors, trim)

from conftest import graphs


@pytest.mark.parametrize("g,vec", [
    (fam.path(4), (1, 3, 1)),
    (fam.uni_min(8, 6), (1, 8, 18, 11, 0)),
    (fam.star(5), (1, 4, 0)),
    (fam.cycle(4), (1, 4, 2)),
    (fam.path(1), (1,)),
    (fam.path(0), (1,)),
])
def test_vector_examples(g, vec):
    assert matching_vector(g) == vec


def test_polynomial_examples():
    assert matching_polynomial(fam.uni_min(9, 7)).coeffs == (1, 0, -9, 0, 25, 0, -23, 0, 4, 0)
    assert matching_polynomial(fam.cycle(4)).coeffs == (1, 0, -4, 0, 2)
    for n in range(2, 12):
        p = matching_polynomial(fam.star(n))
        assert p.coefficient(n) == 1 and p.coefficient(n - 2) == -(n - 1)
        assert sum(1 for c in p.coeffs if c) == 2


def test_polynomial_format():
    assert matching_polynomial(fam.uni_min(8, 6)).format("u") == "u^8 - 8u^6 + 18u^4 - 11u^2"
    assert IntPolynomial((0,)).format() == "0"
    assert IntPolynomial((-1, 0, 3)).format("x") == "-x^2 + 3"


def test_polynomial_from_vector_rejects_overflow():
    with pytest.raises(ValueError):
        polynomial_from_vector((1, 3, 1), 3)


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=9))
def test_matches_brute_force(g):
    assert matching_vector(g, MatchingCache()) == brute_force_vector(g)


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_edge_recurrence(data):
    g = data.draw(graphs(min_n=2, max_n=8))
    if g.m == 0:
        return
    u, v = data.draw(st.sampled_from(g.edges()))
    lhs = matching_vector(g)
    rhs = add_vectors(matching_vector(delete_edge(g, u, v)), shift(matching_vector(delete_vertices(g, (u, v)))))
    assert lhs == tuple(rhs[:len(lhs)]) and not any(rhs[len(lhs):])


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_vertex_recurrence(data):
    g = data.draw(graphs(min_n=1, max_n=8))
    u = data.draw(st.integers(0, g.n - 1))
    expected = list(matching_vector(delete_vertices(g, [u]))) + [0]
    for v in g.neighbors(u):
        for k, x in enumerate(matching_vector(delete_vertices(g, (u, v)))):
            expected[k + 1] += x
    got = matching_vector(g)
    assert list(got) == expected[:len(got)] and not any(expected[len(got):])


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_isomorphism_invariance(data):
    g = data.draw(graphs(max_n=11))
    perm = data.draw(st.permutations(list(range(g.n))))
    assert matching_vector(relabel(g, perm), MatchingCache()) == matching_vector(g, MatchingCache())


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_subgraph_monotone(data):
    g = data.draw(graphs(min_n=2, max_n=7))
    if g.m == 0:
        return
    u, v = data.draw(st.sampled_from(g.edges()))
    h = delete_edge(g, u, v)
    assert all(a >= b for a, b in zip(matching_vector(g), matching_vector(h)))
    assert matching_vector(g)[1] == matching_vector(h)[1] + 1


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=6), graphs(max_n=6))
def test_union_is_convolution(g, h):
    got = matching_vector(disjoint_union(g, h))
    want = pad(trim(convolve(matching_vector(g), matching_vector(h))), len(got))
    assert got == want


@pytest.mark.parametrize("n", range(3, 17))
def test_cycle_identity(n):
    # m_k(C_n) = m_k(P_n) + m_{k-1}(P_{n-2})
    lhs = matching_vector(fam.cycle(n))
    rhs = add_vectors(matching_vector(fam.path(n)), shift(matching_vector(fam.path(n - 2))))
    assert lhs == rhs[:len(lhs)]


@pytest.mark.parametrize("n", range(1, 20))
def test_path_hosoya_is_fibonacci(n):
    fib = [1, 1]
    while len(fib) <= n:
        fib.append(fib[-1] + fib[-2])
    assert hosoya_index(fam.path(n)) == fib[n]


def test_isolated_vertices_ignored():
    g = fam.uni_min(8, 5)
    padded = disjoint_union(g, from_edge_list(3, []))
    assert matching_vector(padded)[:len(matching_vector(g))] == matching_vector(g)


def test_matching_number():
    assert matching_number(matching_vector(fam.uni_min(8, 6))) == 3
    assert matching_number(matching_vector(fam.star(7))) == 1
    assert matching_number((1,)) == 0


def test_big_integers():
    vec = matching_vector(fam.complete(16))
    # perfect matchings of K_16: 15!!
    assert vec[8] == 2027025


class TestCache:
    def test_hits(self):
        cache = MatchingCache()
        matching_vector(fam.cycle(10), cache)
        before = cache.hits
        matching_vector(fam.cycle(10), cache)
        assert cache.hits > before

    def test_file_roundtrip(self, tmp_path):
        path = tmp_path / "sub" / "memo.txt"
        cache = MatchingCache()
        for n in range(4, 9):
            matching_vector(fam.uni_min(n + 2, n), cache)
        written = cache.save(path)
        assert written == len(cache) > 0
        assert cache.save(path) == 0
        other = MatchingCache()
        assert other.load(path) == written
        for key in list(cache._data):
            assert other.get(key) == cache.get(key)
        for line in path.read_text().splitlines():
            hexkey, body = line.split(":")
            bytes.fromhex(hexkey)
            assert body.endswith(",")

    def test_load_missing(self, tmp_path):
        assert MatchingCache().load(tmp_path / "nope") == 0

    def test_cached_answers_agree(self):
        cache = MatchingCache()
        for g in [fam.uni_min(10, d) for d in range(3, 9)]:
            assert matching_vector(g, cache) == brute_force_vector(g)
