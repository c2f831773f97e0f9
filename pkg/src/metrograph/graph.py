"""Metrized-graph data model and structural operations.

A metrized graph is a finite connected multigraph whose edges carry positive
real lengths.  Vertices are dense 0-based integer indices.  Self-loops and
parallel edges are representable; operations that need a simple graph
(notably the discrete Laplacian) call :func:`make_adequate` first.

All operations are pure: a :class:`MetrizedGraph` is immutable after
construction and safe to share between threads.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .errors import (
    BadEdgeId,
    Disconnected,
    EmptyGraph,
    NonPositiveLength,
    TOutOfRange,
)


@dataclass(frozen=True)
class Edge:
    """An undirected edge ``a -- b`` of positive length, with a stable id."""

    a: int
    b: int
    length: float
    id: int

    @property
    def endpoints(self) -> tuple[int, int]:
        return (self.a, self.b)

    def is_self_loop(self) -> bool:
        return self.a == self.b


@dataclass(frozen=True)
class MetrizedGraph:
    """Vertex-indexed multigraph with positive real edge lengths."""

    vertex_count: int
    edges: tuple[Edge, ...]
    labels: Optional[tuple[str, ...]] = None

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def total_length(self) -> float:
        return float(sum(e.length for e in self.edges))

    @property
    def genus(self) -> int:
        """First Betti number e - v + 1."""
        return self.edge_count - self.vertex_count + 1

    def valences(self) -> list[int]:
        """Valence of every vertex; a self-loop contributes 2."""
        val = [0] * self.vertex_count
        for e in self.edges:
            val[e.a] += 1
            val[e.b] += 1
        return val

    def adjacency(self) -> list[list[tuple[int, Edge]]]:
        """Per-vertex incidence lists of (neighbor, edge)."""
        adj: list[list[tuple[int, Edge]]] = [[] for _ in range(self.vertex_count)]
        for e in self.edges:
            adj[e.a].append((e.b, e))
            if e.a != e.b:
                adj[e.b].append((e.a, e))
        return adj

    def has_self_loops(self) -> bool:
        return any(e.is_self_loop() for e in self.edges)

    def has_multi_edges(self) -> bool:
        seen: set[tuple[int, int]] = set()
        for e in self.edges:
            if e.is_self_loop():
                continue
            key = (min(e.a, e.b), max(e.a, e.b))
            if key in seen:
                return True
            seen.add(key)
        return False

    def is_adequate(self) -> bool:
        """True when the graph has neither self-loops nor parallel edges."""
        return not (self.has_self_loops() or self.has_multi_edges())


@dataclass(frozen=True)
class StructureReport:
    genus: int
    is_cubic: bool
    regular_degree: Optional[int]
    bridge_edge_ids: tuple[int, ...]
    edge_connectivity: Optional[int]
    has_self_loops: bool
    has_multi_edges: bool
    bridge_count: int = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "bridge_count", len(self.bridge_edge_ids))


def _check_connected(vertex_count: int, edges: Sequence[Edge]) -> bool:
    if vertex_count == 0:
        return False
    adj: list[list[int]] = [[] for _ in range(vertex_count)]
    for e in edges:
        adj[e.a].append(e.b)
        adj[e.b].append(e.a)
    seen = [False] * vertex_count
    stack = [0]
    seen[0] = True
    count = 1
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    return count == vertex_count


def from_edge_list(
    records: Iterable[tuple[int, int, float]],
    labels: Optional[Sequence[str]] = None,
) -> MetrizedGraph:
    """Build a connected metrized graph from (a, b, length) records.

    The vertex count is inferred as ``max index + 1``.  Raises
    :class:`NonPositiveLength`, :class:`EmptyGraph` or :class:`Disconnected`.
    """
    edges: list[Edge] = []
    vmax = -1
    for i, (a, b, length) in enumerate(records):
        a, b = int(a), int(b)
        if a < 0 or b < 0:
            raise BadEdgeId(f"negative vertex index in edge {i}: ({a}, {b})")
        length = float(length)
        if not (length > 0.0) or length != length or length == float("inf"):
            raise NonPositiveLength(f"edge {i} has length {length}")
        edges.append(Edge(a, b, length, i))
        vmax = max(vmax, a, b)
    if vmax < 0:
        raise EmptyGraph("no edges given")
    v = vmax + 1
    if not _check_connected(v, edges):
        raise Disconnected(f"graph on {v} vertices is not connected")
    lab = tuple(labels) if labels is not None else None
    return MetrizedGraph(v, tuple(edges), lab)


def with_lengths(G: MetrizedGraph, lengths: Sequence[float]) -> MetrizedGraph:
    """Copy of G with edge lengths replaced positionally."""
    if len(lengths) != G.edge_count:
        raise BadEdgeId("length vector does not match edge count")
    edges = tuple(
        Edge(e.a, e.b, float(L), e.id) for e, L in zip(G.edges, lengths)
    )
    for e in edges:
        if not e.length > 0:
            raise NonPositiveLength(f"edge {e.id} has length {e.length}")
    return MetrizedGraph(G.vertex_count, edges, G.labels)


def scale(G: MetrizedGraph, M: float) -> MetrizedGraph:
    """Multiply every edge length by M > 0."""
    if not M > 0:
        raise NonPositiveLength(f"scale factor {M}")
    return with_lengths(G, [e.length * M for e in G.edges])


def normalize(G: MetrizedGraph) -> MetrizedGraph:
    """Scale so the total length is 1."""
    ell = G.total_length
    if not ell > 0:
        raise NonPositiveLength("total length is not positive")
    return scale(G, 1.0 / ell)


def subdivide_edge(G: MetrizedGraph, edge_id: int, t: float) -> MetrizedGraph:
    """Split edge ``edge_id`` at fraction ``t`` of its length.

    The edge of length L becomes two edges of lengths tL and (1-t)L meeting
    at a new valence-2 vertex appended at index ``vertex_count``.  Total
    length is preserved exactly when t is exactly representable.
    """
    if not (0.0 < t < 1.0):
        raise TOutOfRange(f"t={t} not in (0, 1)")
    target = None
    for e in G.edges:
        if e.id == edge_id:
            target = e
            break
    if target is None:
        raise BadEdgeId(f"no edge with id {edge_id}")
    new_vertex = G.vertex_count
    next_id = max(e.id for e in G.edges) + 1
    edges: list[Edge] = []
    for e in G.edges:
        if e.id == edge_id:
            edges.append(Edge(e.a, new_vertex, e.length * t, e.id))
            edges.append(Edge(new_vertex, e.b, e.length * (1.0 - t), next_id))
        else:
            edges.append(e)
    labels = None
    if G.labels is not None:
        labels = G.labels + ("",)
    return MetrizedGraph(G.vertex_count + 1, tuple(edges), labels)


def make_adequate(G: MetrizedGraph) -> MetrizedGraph:
    """Insert valence-2 vertices until no self-loops or parallel edges remain.

    Every self-loop receives two midpoints (t=1/3, then t=1/2 of the
    remainder); every parallel edge beyond the first in a vertex pair
    receives one midpoint (t=1/2).  Original vertex indices are preserved;
    new vertices are appended, so the map from old to new indices is the
    identity.  Idempotent and length-preserving.
    """
    out = G
    while True:
        loop = next((e for e in out.edges if e.is_self_loop()), None)
        if loop is None:
            break
        out = subdivide_edge(out, loop.id, 1.0 / 3.0)
        remainder_id = max(e.id for e in out.edges)
        out = subdivide_edge(out, remainder_id, 0.5)
    while True:
        seen: dict[tuple[int, int], int] = {}
        dup = None
        for e in out.edges:
            key = (min(e.a, e.b), max(e.a, e.b))
            if key in seen:
                dup = e
                break
            seen[key] = e.id
        if dup is None:
            break
        out = subdivide_edge(out, dup.id, 0.5)
    return out


def find_bridges(G: MetrizedGraph) -> tuple[int, ...]:
    """Edge ids of all bridges, by iterative depth-first search.

    Runs in O(v + e).  Parallel edges and self-loops are never bridges.
    """
    v = G.vertex_count
    adj = G.adjacency()
    visited = [False] * v
    disc = [0] * v
    low = [0] * v
    bridges: list[int] = []
    timer = 0
    for root in range(v):
        if visited[root]:
            continue
        # stack entries: (vertex, incoming edge id, iterator position)
        stack: list[tuple[int, int, int]] = [(root, -1, 0)]
        visited[root] = True
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            u, in_edge, ptr = stack.pop()
            if ptr < len(adj[u]):
                stack.append((u, in_edge, ptr + 1))
                w, e = adj[u][ptr]
                if e.is_self_loop():
                    continue
                if not visited[w]:
                    visited[w] = True
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, e.id, 0))
                elif e.id != in_edge:
                    low[u] = min(low[u], disc[w])
            else:
                if in_edge >= 0 and stack:
                    parent = stack[-1][0]
                    low[parent] = min(low[parent], low[u])
                    if low[u] == disc[u]:
                        bridges.append(in_edge)
    return tuple(sorted(bridges))


def edge_connectivity(G: MetrizedGraph) -> Optional[int]:
    """Global minimum edge cut with unit capacity per edge (Stoer-Wagner).

    Returns None for a single-vertex graph, where no cut exists.
    """
    import networkx as nx

    if G.vertex_count < 2:
        return None
    H = nx.Graph()
    H.add_nodes_from(range(G.vertex_count))
    for e in G.edges:
        if e.is_self_loop():
            continue
        if H.has_edge(e.a, e.b):
            H[e.a][e.b]["weight"] += 1
        else:
            H.add_edge(e.a, e.b, weight=1)
    cut, _ = nx.stoer_wagner(H)
    return int(cut)


def structure_report(
    G: MetrizedGraph, edge_connectivity_limit: int = 10_000
) -> StructureReport:
    """Genus, regularity, bridges and (optionally) edge connectivity.

    Edge connectivity is skipped (None) above ``edge_connectivity_limit``
    vertices; bridges are always found combinatorially.
    """
    val = G.valences()
    regular = val[0] if all(d == val[0] for d in val) else None
    lam: Optional[int] = None
    if G.vertex_count <= edge_connectivity_limit:
        lam = edge_connectivity(G)
    return StructureReport(
        genus=G.genus,
        is_cubic=(regular == 3),
        regular_degree=regular,
        bridge_edge_ids=find_bridges(G),
        edge_connectivity=lam,
        has_self_loops=G.has_self_loops(),
        has_multi_edges=G.has_multi_edges(),
    )


def join_at_vertex(
    G1: MetrizedGraph, G2: MetrizedGraph, p1: int = 0, p2: int = 0
) -> MetrizedGraph:
    """One-point union identifying vertex ``p1`` of G1 with ``p2`` of G2."""

    def remap(q: int) -> int:
        if q == p2:
            return p1
        shift = G1.vertex_count
        return shift + (q if q < p2 else q - 1)

    records = [(e.a, e.b, e.length) for e in G1.edges]
    records += [(remap(e.a), remap(e.b), e.length) for e in G2.edges]
    return from_edge_list(records)


def write_edge_csv(G: MetrizedGraph, stream) -> None:
    """Write the interchange CSV: one ``a,b,length`` line per edge."""
    w = csv.writer(stream)
    stream.write(f"# vertices={G.vertex_count} edges={G.edge_count}\n")
    for e in G.edges:
        w.writerow([e.a, e.b, repr(e.length)])


def read_edge_csv(stream) -> MetrizedGraph:
    """Read the interchange CSV; ``#`` lines are comments."""
    records: list[tuple[int, int, float]] = []
    for line in stream:
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = next(csv.reader(io.StringIO(line)))
        if len(parts) != 3:
            raise BadEdgeId(f"malformed edge line: {line!r}")
        records.append((int(parts[0]), int(parts[1]), float(parts[2])))
    return from_edge_list(records)
