"""Simple undirected graphs: edge-list ingestion, components, degrees."""
from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from typing import IO, Iterable, Sequence

import numpy as np

logger = logging.getLogger(__name__)


class EdgeListError(ValueError):
    """Malformed or empty edge-list input."""

    def __init__(self, message: str, line_number: int | None = None):
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph over dense node ids 0..node_count-1.

    Edges are stored as sorted (u, v) pairs with u < v; no self-loops, no
    duplicates. Instances are immutable and safe to share across threads.
    """

    node_count: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...]
    node_labels: tuple[str, ...] | None = None

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def label(self, node: int) -> str:
        if self.node_labels is not None:
            return self.node_labels[node]
        return str(node)

    @classmethod
    def from_edges(
        cls,
        node_count: int,
        edges: Iterable[tuple[int, int]],
        node_labels: Sequence[str] | None = None,
    ) -> "Graph":
        """Build a validated graph from an iterable of node-id pairs."""
        if node_count < 0:
            raise ValueError("node_count must be non-negative")
        normalized = []
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < node_count and 0 <= v < node_count):
                raise ValueError(f"edge ({u},{v}) out of range for {node_count} nodes")
            if u == v:
                raise ValueError(f"self-loop at node {u}")
            pair = (u, v) if u < v else (v, u)
            if pair in seen:
                raise ValueError(f"duplicate edge {pair}")
            seen.add(pair)
            normalized.append(pair)
        normalized.sort()
        neighbors: list[list[int]] = [[] for _ in range(node_count)]
        for u, v in normalized:
            neighbors[u].append(v)
            neighbors[v].append(u)
        if node_labels is not None:
            node_labels = tuple(str(s) for s in node_labels)
            if len(node_labels) != node_count:
                raise ValueError("node_labels length must equal node_count")
        return cls(
            node_count=node_count,
            edges=tuple(normalized),
            adjacency=tuple(tuple(sorted(ns)) for ns in neighbors),
            node_labels=node_labels,
        )


def load_edge_list(
    source: str | IO[str] | Iterable[str],
    comment_prefix: str = "#",
    delimiter: str | None = None,
) -> Graph:
    """Parse a two-column edge list into a Graph.

    Each non-blank, non-comment line must hold exactly two node labels,
    separated by whitespace (or ``delimiter`` when given). Labels are mapped
    to dense ids in order of first appearance. Duplicate edges and self-loops
    are dropped; the drop counts are logged. Dropped lines never introduce
    nodes.
    """
    if isinstance(source, str):
        lines: Iterable[str] = source.splitlines()
    else:
        lines = source

    ids: dict[str, int] = {}
    labels: list[str] = []
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    duplicates = 0
    self_loops = 0

    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith(comment_prefix):
            continue
        tokens = [t for t in (s.strip() for s in line.split(delimiter)) if t]
        if len(tokens) != 2:
            raise EdgeListError(f"expected 2 node labels, got {len(tokens)}", lineno)
        a, b = tokens
        if a == b:
            self_loops += 1
            continue
        for tok in (a, b):
            if tok not in ids:
                ids[tok] = len(labels)
                labels.append(tok)
        pair = (ids[a], ids[b])
        if pair[0] > pair[1]:
            pair = (pair[1], pair[0])
        if pair in seen:
            duplicates += 1
            continue
        seen.add(pair)
        edges.append(pair)

    if not edges:
        raise EdgeListError("no edges")
    if duplicates or self_loops:
        logger.warning(
            "dropped %d duplicate edge(s) and %d self-loop(s) while loading",
            duplicates,
            self_loops,
        )
    return Graph.from_edges(len(labels), edges, labels)


def read_edge_list(path, **kwargs) -> Graph:
    """Load an edge list from a file path (UTF-8)."""
    with open(path, "r", encoding="utf-8") as fh:
        return load_edge_list(fh, **kwargs)


def save_edge_list(g: Graph, target: str | IO[str]) -> None:
    """Write one "label label" pair per line, sorted by id pair, UTF-8."""
    if hasattr(target, "write"):
        for u, v in g.edges:
            target.write(f"{g.label(u)} {g.label(v)}\n")
        return
    with open(target, "w", encoding="utf-8", newline="\n") as fh:
        save_edge_list(g, fh)


def degrees(g: Graph) -> np.ndarray:
    """Degree of every node, as an int64 vector."""
    out = np.fromiter((len(ns) for ns in g.adjacency), dtype=np.int64, count=g.node_count)
    out.setflags(write=False)
    return out


def _component_nodes(g: Graph, start: int, assigned: list[int], mark: int) -> list[int]:
    nodes = [start]
    assigned[start] = mark
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for v in g.adjacency[u]:
            if assigned[v] < 0:
                assigned[v] = mark
                nodes.append(v)
                queue.append(v)
    return nodes


def connected_components(g: Graph) -> list[list[int]]:
    """Connected components as sorted node lists, ordered by smallest member."""
    assigned = [-1] * g.node_count
    comps = []
    for s in range(g.node_count):
        if assigned[s] < 0:
            comps.append(sorted(_component_nodes(g, s, assigned, len(comps))))
    return comps


def is_connected(g: Graph) -> bool:
    if g.node_count <= 1:
        return True
    assigned = [-1] * g.node_count
    return len(_component_nodes(g, 0, assigned, 0)) == g.node_count


def largest_component(g: Graph) -> Graph:
    """Induced subgraph on the largest connected component.

    Ties go to the component containing the smallest node id. Node ids are
    re-densified in ascending order of the original ids; labels carry over.
    Discarded nodes are logged.
    """
    if g.node_count == 0:
        raise ValueError("empty graph")
    comps = connected_components(g)
    if len(comps) == 1:
        return g
    keep = max(comps, key=len)  # first maximum: smallest min node id
    remap = {old: new for new, old in enumerate(keep)}
    kept = set(keep)
    edges = [(remap[u], remap[v]) for u, v in g.edges if u in kept and v in kept]
    labels = None
    if g.node_labels is not None:
        labels = [g.node_labels[old] for old in keep]
    discarded = g.node_count - len(keep)
    logger.warning(
        "input graph is disconnected; keeping largest component "
        "(%d nodes, discarding %d)",
        len(keep),
        discarded,
    )
    return Graph.from_edges(len(keep), edges, labels)
