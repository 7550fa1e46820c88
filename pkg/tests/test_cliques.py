import random
from fractions import Fraction
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from genbooks import (
    Graph,
    VertexSet,
    book_size,
    complement,
    complete,
    complete_multipartite,
    contains_book,
    count_cliques,
    count_independent_rsets,
    cycle,
    degree_square_bound,
    empty,
    find_clique,
    triangle_identity,
    turan_edge_max,
    turan_graph,
)
from genbooks.catalog import all_graphs
from genbooks.cliques import iter_cliques

from helpers import brute_book_size, brute_clique_count, is_clique, near_turan, random_graph
from test_graph import graphs, to_nx


class TestCounting:
    @settings(max_examples=150, deadline=None)
    @given(graphs(max_n=12), st.integers(1, 5))
    def test_clique_count_matches_enumeration(self, g, r):
        assert count_cliques(g, r) == brute_clique_count(g, r)

    @settings(max_examples=100, deadline=None)
    @given(graphs(max_n=12), st.integers(1, 4))
    def test_independent_sets_are_complement_cliques(self, g, r):
        assert count_independent_rsets(g, r) == count_cliques(complement(g), r)

    @settings(max_examples=100, deadline=None)
    @given(graphs(max_n=14))
    def test_low_orders(self, g):
        assert count_cliques(g, 1) == g.n
        assert count_cliques(g, 2) == g.edge_count

    def test_networkx_triangles(self):
        rng = random.Random(5)
        for _ in range(20):
            g = random_graph(30, 0.4, rng)
            assert count_cliques(g, 3) == sum(nx.triangles(to_nx(g)).values()) // 3

    def test_iter_cliques_lexicographic_with_common(self):
        g = complete(5)
        out = list(iter_cliques(g, 2))
        assert [c for c, _ in out] == list(combinations(range(5), 2))
        for c, common in out:
            assert common == g.vertex_mask & ~sum(1 << v for v in c)

    def test_rejects_bad_r(self):
        with pytest.raises(ValueError):
            count_cliques(complete(3), 0)


class TestFindClique:
    @settings(max_examples=150, deadline=None)
    @given(graphs(max_n=14), st.integers(1, 6))
    def test_agrees_with_enumeration(self, g, k):
        found = find_clique(g, k)
        assert (found is not None) == (brute_clique_count(g, k) > 0)
        if found is not None:
            assert len(found) == k and is_clique(g, found)

    def test_networkx_clique_number(self):
        rng = random.Random(11)
        for _ in range(10):
            g = random_graph(40, 0.5, rng)
            omega = max(len(c) for c in nx.find_cliques(to_nx(g)))
            assert find_clique(g, omega) is not None
            assert find_clique(g, omega + 1) is None

    def test_turan_is_clique_free(self):
        g = turan_graph(40, 4)
        assert find_clique(g, 4) is not None
        assert find_clique(g, 5) is None


class TestBooks:
    def test_triangle(self):
        bm = book_size(complete(3), 2)
        assert (bm.size, bm.base, bm.pages) == (1, VertexSet.of([0, 1]), VertexSet.of([2]))

    def test_no_base(self):
        bm = book_size(empty(4), 2)
        assert bm.size == 0 and bm.base is None and not bm.pages

    def test_complete_graph(self):
        assert book_size(complete(7), 3).size == 4

    def test_complement_of_extremal(self):
        # complement(K_2(3)) is two disjoint triangles
        assert book_size(complement(complete_multipartite([3, 3])), 2).size == 1

    def test_tie_break_is_lexicographic(self):
        bm = book_size(cycle(6), 1)
        assert bm.base == VertexSet.of([0]) and bm.size == 2

    @settings(max_examples=150, deadline=None)
    @given(graphs(max_n=11), st.integers(1, 4))
    def test_matches_enumeration(self, g, r):
        bm = book_size(g, r)
        assert bm.size == brute_book_size(g, r)
        if bm.base is not None:
            assert is_clique(g, list(bm.base))
            for v in bm.pages:
                assert all(g.has_edge(v, b) for b in bm.base)

    @settings(max_examples=100, deadline=None)
    @given(graphs(max_n=11), st.integers(1, 3), st.integers(1, 6))
    def test_contains_book_threshold(self, g, r, q):
        assert contains_book(g, q, r) == (book_size(g, r).size >= q and count_cliques(g, r) > 0)

    def test_zero_page_book_rejected(self):
        with pytest.raises(ValueError):
            contains_book(complete(3), 0, 2)


class TestIdentities:
    def test_triangle_identity_on_catalog(self):
        for n in range(1, 6):
            for g in all_graphs(n):
                lhs, rhs = triangle_identity(g)
                assert lhs == rhs

    @settings(max_examples=100, deadline=None)
    @given(graphs(max_n=30))
    def test_triangle_identity_property(self, g):
        lhs, rhs = triangle_identity(g)
        assert lhs == rhs

    @pytest.mark.parametrize("p", [2, 3, 4])
    def test_degree_square_equality_on_balanced_turan(self, p):
        g = turan_graph(6 * p, p)
        res = degree_square_bound(g, p)
        assert res.holds and res.lhs == res.rhs

    @pytest.mark.parametrize("p", [2, 3, 4])
    def test_degree_square_on_turan_subgraphs(self, p):
        rng = random.Random(p)
        for _ in range(30):
            n = rng.randint(p, 30)
            g = near_turan(p, n, rng.randint(0, turan_edge_max(n, p)), rng)
            assert degree_square_bound(g, p).holds

    def test_degree_square_fails_certify_clique(self):
        res = degree_square_bound(complete(5), 2)
        assert not res.holds
        assert find_clique(complete(5), 3) is not None
        assert isinstance(res.rhs, Fraction)

    @pytest.mark.parametrize("n,p", [(1, 1), (7, 1), (7, 2), (7, 3), (10, 3), (11, 4), (20, 7)])
    def test_turan_edge_max(self, n, p):
        assert turan_edge_max(n, p) == turan_graph(n, p).edge_count
        assert turan_edge_max(n, p) == nx.turan_graph(n, p).number_of_edges()


class TestBookProperties:
    @settings(max_examples=80, deadline=None)
    @given(graphs(max_n=12), st.integers(1, 3))
    def test_size_bounded(self, g, r):
        assert book_size(g, r).size <= max(g.n - r, 0)

    @pytest.mark.parametrize("n,r", [(3, 1), (5, 2), (8, 3)])
    def test_complete(self, n, r):
        assert book_size(complete(n), r).size == n - r

    @settings(max_examples=80, deadline=None)
    @given(graphs(max_n=12), st.integers(1, 3), st.data())
    def test_monotone_under_edge_addition(self, g, r, data):
        missing = [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v)]
        if not missing:
            return
        u, v = data.draw(st.sampled_from(missing))
        bigger = Graph.from_edges(g.n, list(g.edges()) + [(u, v)])
        assert book_size(bigger, r).size >= book_size(g, r).size
