from __future__ import annotations

import functools
import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import brute_canonical, graphs, is_connected_brute, permutations_of
from grooming.canon import are_isomorphic, canonical_form, canonical_graph
from grooming.enumerate import (
    claw_family,
    count_graphs,
    enumerate_cubic_graphs,
    enumerate_graphs_max_degree,
    one_deficient_blocks,
)
from grooming.graph import Graph, complete_graph, components, cycle_graph, find_bridges, is_connected, is_regular, petersen_graph


@functools.lru_cache(maxsize=None)
def brute_classes(n: int, max_deg: int) -> frozenset[tuple]:
    """Isomorphism classes by relabelling every labelled graph; the slow, obvious oracle."""
    pairs = list(itertools.combinations(range(n), 2))
    out = set()
    for mask in range(1 << len(pairs)):
        edges = [p for i, p in enumerate(pairs) if mask >> i & 1]
        g = Graph(n, edges)
        if g.m and g.max_degree() > max_deg:
            continue
        out.add(brute_canonical(g))
    return frozenset(out)


class TestCanon:
    @given(st.data())
    def test_invariant_under_relabelling(self, data):
        g = data.draw(graphs(max_n=8))
        perm = data.draw(permutations_of(g.n))
        assert canonical_form(g) == canonical_form(g.relabel(perm))
        assert canonical_graph(g) == canonical_graph(g.relabel(perm))

    @given(graphs(max_n=6), graphs(max_n=6))
    def test_isomorphism_matches_brute_force(self, a, b):
        expected = a.n == b.n and a.m == b.m and brute_canonical(a) == brute_canonical(b)
        assert are_isomorphic(a, b) == expected

    def test_canonical_graph_is_isomorphic(self):
        g = petersen_graph()
        assert are_isomorphic(canonical_graph(g), g)

    def test_distinguishes_regular_graphs(self):
        prism = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
        k33 = Graph(6, [(u, v) for u in range(3) for v in range(3, 6)])
        assert not are_isomorphic(prism, k33)
        two_triangles = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        assert not are_isomorphic(two_triangles, cycle_graph(6))


class TestEnumerate:
    def test_small_examples(self):
        assert count_graphs(3, 2) == 4
        assert count_graphs(4, 1) == 3
        assert count_graphs(1, 0) == count_graphs(1, 5) == 1

    @pytest.mark.parametrize("n, expected", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34)])
    def test_all_graphs_known_counts(self, n, expected):
        assert count_graphs(n, n - 1) == expected
        found = {brute_canonical(g) for g in enumerate_graphs_max_degree(n, n - 1)}
        assert len(found) == expected
        assert found == brute_classes(n, n - 1)

    @pytest.mark.parametrize("n, d", [(4, 2), (5, 2), (5, 3), (6, 2), (6, 3)])
    def test_bounded_degree_matches_oracle(self, n, d):
        got = [brute_canonical(g) for g in enumerate_graphs_max_degree(n, d)]
        assert len(got) == len(set(got))
        assert set(got) == brute_classes(n, d)

    def test_connected_only(self):
        got = {brute_canonical(g) for g in enumerate_graphs_max_degree(6, 3, connected_only=True)}
        assert got == {c for c in brute_classes(6, 3) if is_connected_brute(6, c)}

    def test_counts_beyond_brute_force(self):
        assert [count_graphs(n, n - 1) for n in (6, 7)] == [156, 1044]
        assert [count_graphs(n, 3, connected_only=True) for n in range(1, 10)] == [1, 1, 2, 6, 10, 29, 64, 194, 531]

    def test_stream_is_deterministic(self):
        assert list(enumerate_graphs_max_degree(6, 3)) == list(enumerate_graphs_max_degree(6, 3))

    @pytest.mark.parametrize("n, expected", [(4, 1), (6, 2), (8, 5), (10, 19), (12, 85)])
    def test_connected_cubic_counts(self, n, expected):
        gs = list(enumerate_cubic_graphs(n))
        assert len(gs) == expected
        assert all(is_regular(g, 3) and is_connected(g) for g in gs)
        assert len({canonical_form(g) for g in gs}) == expected

    @pytest.mark.parametrize("n", [4, 6, 8, 10])
    def test_cubic_generator_agrees_with_generic(self, n):
        generic = {canonical_form(g) for g in enumerate_graphs_max_degree(n, 3, connected_only=True) if is_regular(g, 3)}
        assert {canonical_form(g) for g in enumerate_cubic_graphs(n)} == generic

    def test_disconnected_cubic(self):
        gs = list(enumerate_cubic_graphs(8, connected_only=False))
        assert len(gs) == 6
        assert sum(len(components(g)) == 2 for g in gs) == 1

    def test_blocks_and_claws(self):
        (b,) = one_deficient_blocks(5)
        assert sorted(b.degree(v) for v in range(5)) == [2, 3, 3, 3, 3] and b.degree(0) == 2
        assert one_deficient_blocks(4) == ()
        claws = list(claw_family(16))
        assert len(claws) == 1
        g = claws[0]
        assert is_regular(g, 3) and is_connected(g) and len(find_bridges(g)) == 3

    def test_k4_is_only_cubic_on_four(self):
        assert list(enumerate_cubic_graphs(4)) == [canonical_graph(complete_graph(4))]
