import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monoindex.graphs import (
    BudgetError,
    Graph,
    Graph6Error,
    canonical_code,
    canonical_form,
    complement,
    complete_bipartite_graph,
    complete_graph,
    connected_components,
    cut_vertices,
    cycle_graph,
    diameter,
    enumerate_connected_graphs,
    enumerate_graphs,
    from_edges,
    is_connected,
    k_subsets,
    mask_from,
    parse_edge_list,
    parse_graph,
    parse_graph6,
    path_graph,
    star_graph,
    to_dot,
    to_edge_list,
    to_graph6,
)

import oracles


def random_graph(n: int, edge_mask: int) -> Graph:
    pairs = list(itertools.combinations(range(n), 2))
    return from_edges(n, [pairs[i] for i in range(len(pairs)) if edge_mask >> i & 1])


class TestGraphBasics:
    def test_validation(self):
        with pytest.raises(ValueError):
            Graph(0, ())
        with pytest.raises(ValueError):
            Graph(2, (1, 0))  # asymmetric
        with pytest.raises(ValueError):
            Graph(2, (1, 2))  # loop at vertex 1
        with pytest.raises(ValueError):
            from_edges(2, [(0, 0)])

    def test_edges_sorted(self):
        g = complete_graph(4)
        assert g.edges == tuple(itertools.combinations(range(4), 2))
        assert g.m == 6

    def test_degree_and_has_edge(self):
        g = star_graph(5)
        assert g.degree(0) == 4
        assert all(g.degree(v) == 1 for v in range(1, 5))
        assert g.has_edge(0, 3) and not g.has_edge(1, 2)


class TestGraph6:
    def test_known_encodings(self):
        assert to_graph6(complete_graph(4)) == "C~"
        assert to_graph6(path_graph(4)) == "Ch"
        assert to_graph6(Graph(1, (0,))) == "@"

    def test_known_decodings(self):
        assert parse_graph6("C~").adj == complete_graph(4).adj
        assert parse_graph6("Ch").adj == path_graph(4).adj
        assert parse_graph6(">>graph6<<Ch").adj == path_graph(4).adj

    def test_errors(self):
        with pytest.raises(Graph6Error):
            parse_graph6("")
        with pytest.raises(Graph6Error, match="byte 0"):
            parse_graph6("\x1aabc")
        with pytest.raises(Graph6Error, match="trailing"):
            parse_graph6("C~~")
        with pytest.raises(Graph6Error, match="truncated"):
            parse_graph6("C")
        with pytest.raises(Graph6Error, match="multi-byte"):
            parse_graph6("~??")
        with pytest.raises(Graph6Error):
            to_graph6(from_edges(63, [(0, 1)]))

    def test_round_trip_enumeration(self):
        for n in range(1, 8):
            for g in enumerate_connected_graphs(n):
                assert parse_graph6(to_graph6(g)).adj == g.adj

    def test_against_independent_codec(self):
        for n in range(2, 7):
            for g in enumerate_connected_graphs(n):
                assert to_graph6(g) == oracles.g6_encode(n, set(g.edges))
                dn, dedges = oracles.g6_decode(to_graph6(g))
                assert dn == n and dedges == set(g.edges)

    @given(st.integers(1, 10), st.integers(0, 2**45 - 1))
    @settings(max_examples=200)
    def test_round_trip_random(self, n, mask):
        g = random_graph(n, mask & ((1 << (n * (n - 1) // 2)) - 1))
        assert parse_graph6(to_graph6(g)).adj == g.adj


class TestComplement:
    def test_c5_self_complementary(self):
        c5 = cycle_graph(5)
        assert canonical_code(complement(c5)) == canonical_code(c5)

    def test_k4(self):
        assert complement(complete_graph(4)).m == 0

    def test_c6_prism(self):
        prism = complement(cycle_graph(6))
        assert prism.m == 9
        assert all(prism.degree(v) == 3 for v in range(6))
        assert prism.edges == tuple(
            (i, j) for i in range(6) for j in range(i + 1, 6) if j - i in (2, 3, 4)
        )

    @given(st.integers(1, 9), st.integers(0, 2**36 - 1))
    @settings(max_examples=200)
    def test_involution(self, n, mask):
        g = random_graph(n, mask & ((1 << (n * (n - 1) // 2)) - 1))
        assert complement(complement(g)).adj == g.adj


class TestConnectivity:
    def test_examples(self):
        assert is_connected(path_graph(4))
        assert not is_connected(from_edges(4, [(0, 1), (2, 3)]))
        assert is_connected(Graph(1, (0,)))

    def test_components(self):
        g = from_edges(5, [(0, 1), (2, 3)])
        assert connected_components(g) == [0b00011, 0b01100, 0b10000]
        assert connected_components(g, within=0b01110) == [0b00010, 0b01100]


class TestCutVertices:
    def test_examples(self):
        assert cut_vertices(path_graph(4)) == mask_from([1, 2])
        assert cut_vertices(cycle_graph(5)) == 0
        bowtie = from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
        assert cut_vertices(bowtie) == mask_from([2])

    def test_disconnected_rejected(self):
        with pytest.raises(ValueError):
            cut_vertices(from_edges(4, [(0, 1), (2, 3)]))

    def test_against_deletion_oracle(self):
        for n in range(2, 7):
            for g in enumerate_connected_graphs(n):
                assert cut_vertices(g) == mask_from(oracles.cut_vertices_by_deletion(g))


class TestDiameter:
    def test_examples(self):
        assert diameter(complete_graph(4)) == 1
        assert diameter(path_graph(5)) == 4
        k23 = complete_bipartite_graph(2, 3)
        rows = list(k23.adj)
        rows[0] &= ~(1 << 2)
        rows[2] &= ~1
        assert diameter(Graph(5, tuple(rows))) == 3

    def test_disconnected_rejected(self):
        with pytest.raises(ValueError):
            diameter(from_edges(3, [(0, 1)]))


class TestEnumeration:
    def test_counts(self):
        expected = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}
        for n, want in expected.items():
            assert len(list(enumerate_connected_graphs(n))) == want

    def test_all_graph_counts(self):
        expected = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156}
        for n, want in expected.items():
            assert len(list(enumerate_graphs(n))) == want

    def test_against_bruteforce_classes(self):
        for n in range(1, 6):
            assert (
                len(list(enumerate_connected_graphs(n)))
                == oracles.count_connected_classes_bruteforce(n)
            )

    def test_representatives_are_canonical_and_sorted(self):
        for n in (4, 5, 6):
            graphs = list(enumerate_connected_graphs(n))
            codes = [canonical_code(g) for g in graphs]
            assert codes == sorted(codes)
            assert all(canonical_form(g).adj == g.adj for g in graphs)
            assert all(is_connected(g) for g in graphs)

    def test_budget(self):
        with pytest.raises(BudgetError):
            next(enumerate_connected_graphs(9))

    def test_canonical_code_permutation_invariant(self):
        g = from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])
        for perm in itertools.permutations(range(5)):
            relabeled = from_edges(5, [(perm[u], perm[v]) for u, v in g.edges])
            assert canonical_code(relabeled) == canonical_code(g)


class TestKSubsets:
    def test_examples(self):
        assert list(k_subsets(3, 2)) == [0b011, 0b101, 0b110]
        assert list(k_subsets(4, 4)) == [0b1111]
        assert list(k_subsets(5, 0)) == [0]

    def test_errors(self):
        with pytest.raises(ValueError):
            list(k_subsets(3, 4))

    @given(st.integers(0, 10), st.integers(0, 10))
    def test_count(self, n, k):
        if k > n:
            return
        import math

        masks = list(k_subsets(n, k))
        assert len(masks) == math.comb(n, k)
        assert len(set(masks)) == len(masks)
        assert all(m.bit_count() == k for m in masks)


class TestTextFormats:
    def test_edge_list_round_trip(self):
        g = from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
        assert parse_edge_list(to_edge_list(g)).adj == g.adj

    def test_edge_list_errors(self):
        with pytest.raises(ValueError):
            parse_edge_list("3 2\n0 1\n")
        with pytest.raises(ValueError):
            parse_edge_list("3 one\n")

    def test_auto_detect(self):
        g = path_graph(4)
        assert parse_graph(to_edge_list(g)).adj == g.adj
        assert parse_graph(to_graph6(g)).adj == g.adj

    def test_dot(self):
        dot = to_dot(path_graph(3))
        assert "0 -- 1;" in dot and "1 -- 2;" in dot and dot.startswith("graph G {")
        assert "  2;" in to_dot(from_edges(3, [(0, 1)]))
