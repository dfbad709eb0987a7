from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from demkit import (
    CapExceededError,
    EnumerationCapExceededError,
    dem_number,
    greedy_dem,
    is_dem_set,
    join,
    monitor_matrix,
    monitor_matrix_naive,
    monitored_edges,
    monitored_edges_naive,
    monitored_pairs,
    vertex_cover_number,
)

import oracles
from conftest import (
    bipartite,
    book,
    complete,
    cycle,
    path,
    random_connected,
    random_tree,
)


class TestMonitoredPairs:
    def test_path_far_edge(self):
        g = path(3)
        assert monitored_pairs(g, {0}, g.edge_id(1, 2)) == {(0, 2)}

    def test_path_bridge_at_probe(self):
        g = path(3)
        assert monitored_pairs(g, {0}, g.edge_id(0, 1)) == {(0, 1), (0, 2)}

    def test_cycle_opposite_edge_unseen(self):
        # frozen from the brute-force rows on the 4-cycle and on it minus (1,2)
        g = cycle(4)
        assert monitored_pairs(g, {0}, g.edge_id(1, 2)) == set()


class TestMonitoredEdges:
    def test_tree_probe_sees_everything(self):
        g = path(3)
        assert monitored_edges(g, 0) == {0, 1}

    def test_cycle_probe_sees_incident_only(self):
        g = cycle(4)
        assert monitored_edges(g, 0) == {g.edge_id(0, 1), g.edge_id(0, 3)}

    def test_complete_probe_sees_incident_only(self):
        g = complete(4)
        assert monitored_edges(g, 0) == {
            g.edge_id(0, 1),
            g.edge_id(0, 2),
            g.edge_id(0, 3),
        }


class TestMonitorMatrix:
    def test_path_all_ones(self):
        mm = monitor_matrix(path(3))
        assert all(row == 0b11 for row in mm.rows)

    def test_cycle_rows_are_incident_edges(self):
        g = cycle(4)
        mm = monitor_matrix(g)
        for x in range(4):
            incident = {e for e, (u, v) in enumerate(g.edges) if x in (u, v)}
            assert set(mm.monitored(x)) == incident

    def test_book_hub_rows_cover_all_columns(self):
        g = book(2)
        mm = monitor_matrix(g)
        assert mm.rows[0] | mm.rows[1] == (1 << g.m) - 1

    def test_endpoints_always_monitor_their_edge(self):
        for g in (cycle(6), book(3), bipartite(2, 4), complete(5)):
            mm = monitor_matrix(g)
            for eid, (u, v) in enumerate(g.edges):
                assert u in mm.monitors(eid) and v in mm.monitors(eid)

    def test_cap(self):
        with pytest.raises(CapExceededError):
            monitor_matrix(cycle(30))


class TestOracleEquivalence:
    """The shortest-path-pruned route must agree with the recompute-everything
    oracle, and the exact solver with the exhaustive-subset oracle."""

    def test_rows_match_naive_on_families(self):
        for g in (path(5), cycle(7), complete(5), book(4), bipartite(3, 3)):
            for x in range(g.n):
                assert monitored_edges(g, x) == monitored_edges_naive(g, x)

    def test_matrix_matches_naive_on_random_graphs(self):
        for seed in range(20):
            g = random_connected(4 + seed % 4, 1, 2, 2000 + seed)
            assert monitor_matrix(g) == monitor_matrix_naive(g)

    def test_matrix_matches_definitional_oracle(self):
        for g in (cycle(5), book(3), bipartite(2, 3), random_connected(7, 1, 2, 77)):
            mm = monitor_matrix(g)
            cols = oracles.monitor_columns(g.n, list(g.edges))
            assert [set(mm.monitors(e)) for e in range(g.m)] == cols

    def test_solver_matches_exhaustive_search(self):
        for seed in range(12):
            g = random_connected(5 + seed % 3, 1, 2, 3000 + seed)
            assert dem_number(g).value == oracles.brute_dem(g.n, list(g.edges))


class TestIsDemSet:
    def test_any_single_vertex_monitors_a_tree(self):
        for t in (path(6), bipartite(1, 4), random_tree(9, 4)):
            assert all(is_dem_set(t, {x}) for x in range(t.n))

    def test_cycle_pair(self):
        assert is_dem_set(cycle(4), {0, 2})

    def test_book_hub_plus_page_fails(self):
        assert not is_dem_set(book(3), {0, 2})

    def test_hitting_set_equivalence_exhaustive(self):
        """A set monitors everything iff it intersects every edge's monitor
        list; checked over every subset of every small graph."""
        for g in (cycle(5), book(2), path(4), complete(4), bipartite(2, 3)):
            cols = oracles.monitor_columns(g.n, list(g.edges))
            mm = monitor_matrix(g)
            for r in range(g.n + 1):
                for subset in combinations(range(g.n), r):
                    expected = all(c & set(subset) for c in cols)
                    assert is_dem_set(g, subset, mm) == expected


class TestDemNumber:
    def test_complete(self):
        assert dem_number(complete(5)).value == 4

    def test_cycle(self):
        assert dem_number(cycle(6)).value == 2

    def test_book_unique_minimum_set(self):
        result = dem_number(book(4), enumerate_all=True)
        assert result.value == 2
        assert result.all_minimum_sets == ((0, 1),)

    def test_complete_bipartite(self):
        assert dem_number(bipartite(3, 4)).value == 3

    def test_witness_is_valid_and_minimal(self):
        for g in (cycle(7), book(3), complete(4), bipartite(2, 4)):
            result = dem_number(g)
            assert len(result.witness) == result.value
            assert is_dem_set(g, result.witness)

    def test_witness_matches_enumeration_head(self):
        for g in (cycle(5), complete(4), bipartite(2, 3)):
            plain = dem_number(g)
            full = dem_number(g, enumerate_all=True)
            assert plain.witness == full.all_minimum_sets[0]
            assert all(is_dem_set(g, s) for s in full.all_minimum_sets)

    def test_enumeration_is_complete(self):
        g = cycle(4)
        result = dem_number(g, enumerate_all=True)
        assert result.all_minimum_sets == ((0, 2), (1, 3))
        expected = [
            set(s)
            for s in combinations(range(g.n), result.value)
            if is_dem_set(g, s)
        ]
        assert [set(s) for s in result.all_minimum_sets] == expected

    def test_enumeration_cap(self):
        with pytest.raises(EnumerationCapExceededError):
            dem_number(complete(5), enumerate_all=True, enumeration_cap=3)

    def test_cap(self):
        with pytest.raises(CapExceededError):
            dem_number(cycle(25))
        dem_number(cycle(25), max_n=25)

    def test_single_vertex(self):
        from demkit import Graph

        result = dem_number(Graph(1, []), enumerate_all=True)
        assert result.value == 0 and result.all_minimum_sets == ((),)

    def test_json_document(self):
        doc = dem_number(book(2), enumerate_all=True).to_json_dict()
        assert list(doc) == ["n", "m", "dem", "witness", "all_minimum_sets", "nodes_explored"]
        assert doc["n"] == 4 and doc["m"] == 5
        assert doc["dem"] == 2 and doc["witness"] == [0, 1]


class TestGreedy:
    def test_tree_single_probe(self):
        assert len(greedy_dem(random_tree(10, 3))) == 1

    def test_complete_trace(self):
        assert greedy_dem(complete(4)) == (0, 1, 2)

    def test_cycle_trace(self):
        assert greedy_dem(cycle(4)) == (0, 2)

    def test_valid_and_at_least_optimal(self):
        for seed in range(15):
            g = random_connected(5 + seed % 4, 1, 2, 4000 + seed)
            chosen = greedy_dem(g)
            assert is_dem_set(g, chosen)
            assert len(chosen) >= dem_number(g).value


class TestTheoremLevelProperties:
    def test_minimum_covers_monitor_everything(self):
        for g in (cycle(6), book(3), complete(5), random_connected(8, 1, 2, 99)):
            assert is_dem_set(g, vertex_cover_number(g).witness)

    def test_dem_at_most_cover_at_most_n_minus_1(self):
        for seed in range(15):
            g = random_connected(4 + seed % 6, 1, 2, 5000 + seed)
            c = vertex_cover_number(g).value
            assert dem_number(g).value <= c <= g.n - 1

    def test_join_probes_see_incident_edges_only(self):
        """In a join of two graphs of order >= 2, every probe monitors exactly
        its incident edges, so monitoring sets are exactly vertex covers."""
        pairs = [
            (path(2), path(3)),
            (path(3), cycle(4)),
            (cycle(3), complete(3)),
            (path(4), bipartite(2, 2)),
        ]
        for a, b in pairs:
            g, _ = join(a, b)
            for x in range(g.n):
                incident = {e for e, (u, v) in enumerate(g.edges) if x in (u, v)}
                assert monitored_edges(g, x) == incident
            assert dem_number(g).value == vertex_cover_number(g).value

    def test_dem_one_iff_tree_exhaustive(self):
        for n in range(2, 6):
            for edges in oracles.connected_edge_subsets(n):
                from demkit import Graph

                g = Graph(n, edges)
                assert (dem_number(g).value == 1) == g.is_tree()

    def test_dem_one_iff_tree_seeded(self):
        for seed in range(10):
            g = random_connected(6, 1, 2, 6000 + seed)
            assert (dem_number(g).value == 1) == g.is_tree()


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=0, max_value=10_000))
def test_endpoint_detection_property(seed):
    g = random_connected(7, 1, 2, seed)
    mm = monitor_matrix(g)
    for eid, (u, v) in enumerate(g.edges):
        col = mm.cols[eid]
        assert (col >> u) & 1 and (col >> v) & 1
