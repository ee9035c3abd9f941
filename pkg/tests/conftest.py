"""Shared fixtures and independent oracles for the test suite."""
from __future__ import annotations

import math

import numpy as np
import pytest

import boxdim as bd

# 6-node worked example: labels 1..6, edges 1-2,1-3,2-3,3-4,4-5,5-6
WORKED_EXAMPLE_TEXT = "1 2\n1 3\n2 3\n3 4\n4 5\n5 6\n"


@pytest.fixture(scope="session")
def example6():
    return bd.load_edge_list(WORKED_EXAMPLE_TEXT)


@pytest.fixture(scope="session")
def example6_repulsion(example6):
    return bd.all_pairs(bd.edge_repulsive_force(example6), bd.REPULSION)


@pytest.fixture(scope="session")
def example6_hop(example6):
    return bd.all_pairs(example6, bd.HOP)


@pytest.fixture(scope="session")
def karate():
    return bd.karate_club()


def random_connected_graph(n: int, extra_edges: int, seed: int) -> bd.Graph:
    """Random connected graph: random recursive tree plus extra distinct edges."""
    rng = np.random.default_rng(seed)
    edges = set()
    for v in range(1, n):
        edges.add((int(rng.integers(0, v)), v))
    want = min(len(edges) + extra_edges, n * (n - 1) // 2)
    while len(edges) < want:
        u, v = (int(x) for x in rng.integers(0, n, size=2))
        if u != v:
            edges.add((min(u, v), max(u, v)))
    return bd.Graph.from_edges(n, sorted(edges))


def floyd_warshall(n: int, weighted_edges) -> list[list[float]]:
    """Cubic-time all-pairs oracle, independent of the library's traversals."""
    dist = [[math.inf] * n for _ in range(n)]
    for i in range(n):
        dist[i][i] = 0
    for u, v, w in weighted_edges:
        if w < dist[u][v]:
            dist[u][v] = w
            dist[v][u] = w
    for k in range(n):
        dk = dist[k]
        for i in range(n):
            dik = dist[i][k]
            if dik == math.inf:
                continue
            di = dist[i]
            for j in range(n):
                alt = dik + dk[j]
                if alt < di[j]:
                    di[j] = alt
    return dist


def graph_weighted_edges(g: bd.Graph, metric: str):
    """Edge list with weights matching the requested metric."""
    if metric == bd.HOP:
        return [(u, v, 1) for u, v in g.edges]
    deg = bd.degrees(g)
    return [(u, v, int(deg[u]) * int(deg[v])) for u, v in g.edges]
