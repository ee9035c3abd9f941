import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import boxdim as bd
from boxdim.metrics import _bfs_row, _dijkstra_row

from conftest import floyd_warshall, graph_weighted_edges, random_connected_graph


class TestEdgeRepulsiveForce:
    def test_worked_example_forces(self, example6):
        wg = bd.edge_repulsive_force(example6)
        # labels are 1..6 in id order; edge 5-6 has force 2, edge 1-3 force 6
        assert wg.force(4, 5) == 2
        assert wg.force(0, 2) == 6
        assert sorted(wg.forces) == [2, 4, 4, 6, 6, 6]

    def test_two_node_path(self):
        g = bd.Graph.from_edges(2, [(0, 1)])
        wg = bd.edge_repulsive_force(g)
        assert wg.forces == (1,)

    def test_force_is_degree_product(self):
        g = random_connected_graph(20, 25, seed=3)
        wg = bd.edge_repulsive_force(g)
        deg = bd.degrees(g)
        for (u, v), f in zip(g.edges, wg.forces):
            assert f == deg[u] * deg[v]

    def test_single_node_rejected(self):
        with pytest.raises(ValueError, match="no edges to weight"):
            bd.edge_repulsive_force(bd.Graph.from_edges(1, []))

    def test_disconnected_rejected(self):
        g = bd.Graph.from_edges(4, [(0, 1), (2, 3)])
        with pytest.raises(ValueError, match="connected"):
            bd.edge_repulsive_force(g)


class TestShortestPaths:
    def test_worked_example_row(self, example6):
        wg = bd.edge_repulsive_force(example6)
        row = bd.shortest_paths_from(wg, 2)  # node labeled "3"
        assert row[5] == 12  # 3-4-5-6
        assert row[2] == 0

    def test_worked_example_dist_1_to_5(self, example6_repulsion):
        assert example6_repulsion.dist[0, 4] == 16  # 1-3-4-5

    def test_self_distance_zero(self, karate):
        for s in (0, 7, 33):
            assert bd.shortest_paths_from(karate, s)[s] == 0

    def test_rows_match_all_pairs(self, karate):
        wg = bd.edge_repulsive_force(karate)
        dm = bd.all_pairs(wg)
        for s in (0, 5, 21):
            assert np.array_equal(bd.shortest_paths_from(wg, s), dm.dist[s])

    def test_source_out_of_range(self, example6):
        with pytest.raises(ValueError, match="out of range"):
            bd.shortest_paths_from(example6, 17)

    def test_repulsion_needs_weighted_graph(self, example6):
        with pytest.raises(TypeError, match="WeightedGraph"):
            bd.shortest_paths_from(example6, 0, bd.REPULSION)


class TestAllPairs:
    def test_worked_example_diameter(self, example6_repulsion):
        assert example6_repulsion.diameter == 18

    def test_worked_example_hop_diameter(self, example6_hop):
        assert example6_hop.diameter == 4

    def test_triangle_hop(self):
        g = bd.load_edge_list("1 2\n2 3\n3 1\n")
        dm = bd.all_pairs(g, bd.HOP)
        off = dm.dist[~np.eye(3, dtype=bool)]
        assert set(off.tolist()) == {1}
        assert dm.diameter == 1

    def test_disconnected_rejected(self):
        g = bd.Graph.from_edges(4, [(0, 1), (2, 3)])
        with pytest.raises(ValueError, match="connected"):
            bd.all_pairs(g, bd.HOP)

    def test_cell_cap(self, karate):
        with pytest.raises(ValueError, match="subsample"):
            bd.all_pairs(karate, bd.HOP, cell_cap=100)

    def test_matrix_is_read_only(self, example6_hop):
        with pytest.raises(ValueError):
            example6_hop.dist[0, 1] = 99

    @pytest.mark.parametrize("metric", [bd.HOP, bd.REPULSION])
    def test_against_floyd_warshall_oracle(self, metric):
        for seed in range(12):
            g = random_connected_graph(3 + seed * 4 % 46, 2 + seed * 3, seed=seed)
            arg = bd.edge_repulsive_force(g) if metric == bd.REPULSION else g
            dm = bd.all_pairs(arg, metric)
            oracle = floyd_warshall(g.node_count, graph_weighted_edges(g, metric))
            assert dm.dist.tolist() == oracle

    def test_pure_python_rows_match(self):
        # the compiled traversals must agree with the plain-Python ones
        g = random_connected_graph(25, 30, seed=11)
        wg = bd.edge_repulsive_force(g)
        hop = bd.all_pairs(g, bd.HOP)
        rep = bd.all_pairs(wg, bd.REPULSION)
        for s in range(g.node_count):
            assert hop.dist[s].tolist() == _bfs_row(g.adjacency, s, g.node_count)
            assert rep.dist[s].tolist() == _dijkstra_row(wg.weighted_adjacency, s, g.node_count)


class TestDistinctDistances:
    def test_worked_example_repulsion(self, example6_repulsion):
        assert bd.distinct_distances(example6_repulsion).tolist() == [2, 4, 6, 10, 12, 16, 18]

    def test_worked_example_hop(self, example6_hop):
        assert bd.distinct_distances(example6_hop).tolist() == [1, 2, 3, 4]

    def test_single_edge(self):
        g = bd.Graph.from_edges(2, [(0, 1)])
        dm = bd.all_pairs(g, bd.HOP)
        assert bd.distinct_distances(dm).tolist() == [1]


@st.composite
def connected_graphs(draw):
    n = draw(st.integers(2, 16))
    seed = draw(st.integers(0, 10**6))
    extra = draw(st.integers(0, 20))
    return random_connected_graph(n, extra, seed=seed)


@given(connected_graphs(), st.sampled_from([bd.HOP, bd.REPULSION]))
@settings(max_examples=40, deadline=None)
def test_metric_axioms(g, metric):
    arg = bd.edge_repulsive_force(g) if metric == bd.REPULSION else g
    dm = bd.all_pairs(arg, metric)
    d = dm.dist
    n = dm.n
    assert np.array_equal(d, d.T)
    assert (np.diag(d) == 0).all()
    assert dm.diameter == int(d.max())
    # triangle inequality via min-plus closure
    closure = np.min(d[:, :, None] + d[None, :, :], axis=1)
    assert (d <= closure).all()


@given(connected_graphs())
@settings(max_examples=30, deadline=None)
def test_repulsion_dominates_hop(g):
    hop = bd.all_pairs(g, bd.HOP)
    wg = bd.edge_repulsive_force(g)
    rep = bd.all_pairs(wg, bd.REPULSION)
    assert (rep.dist >= hop.dist).all()
    deg = bd.degrees(g)
    for u, v in g.edges:
        assert hop.dist[u, v] == 1
        assert rep.dist[u, v] <= deg[u] * deg[v]
