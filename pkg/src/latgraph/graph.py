"""The graph of a bounded semilattice and the metrics its theorems mention.

``G(S)`` has the elements of ``S`` other than bottom and top as vertices,
with ``x ~ y`` whenever ``x != y`` and ``meet(x, y) != bottom``.

Conventions for degenerate graphs:

* diameter is ``None`` (undefined) with no vertices, ``0`` for one vertex
  and ``math.inf`` when disconnected;
* girth is ``math.inf`` for forests;
* the graph with no vertices counts as connected, and Eulerian means every
  vertex lies in one component and every degree is even.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

import networkx as nx
import numpy as np

from .semilattice import MeetTable

__all__ = [
    "SimpleGraph",
    "UnknownVertex",
    "ShapeFlags",
    "GraphMetrics",
    "build_graph",
    "degree",
    "degree_sequence",
    "connected_components",
    "is_connected",
    "distances_from",
    "diameter",
    "girth",
    "is_eulerian",
    "euler_tour",
    "is_euler_tour",
    "is_planar",
    "classify_shape",
    "shape_name",
    "export_dot",
    "metrics",
]


class UnknownVertex(KeyError):
    pass


class SimpleGraph:
    """Immutable undirected simple graph on integer vertex ids.

    Backed by a boolean adjacency ``matrix`` indexed by position in the
    sorted ``vertices`` tuple.
    """

    def __init__(self, vertices: Iterable[int], edges: Iterable[tuple[int, int]] = ()):
        self.vertices: tuple[int, ...] = tuple(sorted(set(int(v) for v in vertices)))
        self.index = {v: i for i, v in enumerate(self.vertices)}
        n = len(self.vertices)
        adj = np.zeros((n, n), dtype=bool)
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if u not in self.index or v not in self.index:
                raise UnknownVertex((u, v))
            adj[self.index[u], self.index[v]] = adj[self.index[v], self.index[u]] = True
        adj.setflags(write=False)
        self.matrix = adj

    @classmethod
    def _from_matrix(cls, vertices: Sequence[int], adj: np.ndarray) -> "SimpleGraph":
        g = cls(vertices)
        adj = np.array(adj, dtype=bool)
        adj.setflags(write=False)
        g.matrix = adj
        return g

    @cached_property
    def adjacency(self) -> dict[int, tuple[int, ...]]:
        """Sorted neighbour tuple per vertex."""
        verts = np.asarray(self.vertices, dtype=np.int64)
        return {v: tuple(verts[self.matrix[i]].tolist()) for i, v in enumerate(self.vertices)}

    @cached_property
    def edges(self) -> frozenset[tuple[int, int]]:
        verts = np.asarray(self.vertices, dtype=np.int64)
        iu, iv = np.nonzero(np.triu(self.matrix, k=1))
        return frozenset(zip(verts[iu].tolist(), verts[iv].tolist()))

    @cached_property
    def edge_count(self) -> int:
        return int(self.matrix.sum()) // 2

    @cached_property
    def degree_array(self) -> np.ndarray:
        return self.matrix.sum(axis=1)

    def __len__(self):
        return len(self.vertices)

    def __contains__(self, v):
        return v in self.index

    def __repr__(self):
        return f"SimpleGraph(|V|={len(self.vertices)}, |E|={self.edge_count})"

    def __eq__(self, other):
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self.vertices == other.vertices and np.array_equal(self.matrix, other.matrix)

    def __hash__(self):
        return hash((self.vertices, np.packbits(self.matrix).tobytes()))

    def neighbors(self, v: int) -> tuple[int, ...]:
        try:
            return self.adjacency[v]
        except KeyError:
            raise UnknownVertex(v) from None

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edges)
        return g


def build_graph(S: MeetTable) -> SimpleGraph:
    inner = S.interior()
    sub = S.meet[np.ix_(inner, inner)]
    adj = sub != S.bottom
    np.fill_diagonal(adj, False)
    return SimpleGraph._from_matrix(inner, adj)


def degree(G: SimpleGraph, v: int) -> int:
    if v not in G.index:
        raise UnknownVertex(v)
    return int(G.degree_array[G.index[v]])


def degree_sequence(G: SimpleGraph) -> list[int]:
    return sorted(G.degree_array.tolist())


def connected_components(G: SimpleGraph) -> list[list[int]]:
    """Components as sorted vertex lists, ordered by smallest member."""
    n = len(G)
    adj = G.matrix
    seen = np.zeros(n, dtype=bool)
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        comp = np.zeros(n, dtype=bool)
        comp[s] = True
        frontier = comp.copy()
        while frontier.any():
            frontier = adj[frontier].any(axis=0) & ~comp
            comp |= frontier
        seen |= comp
        comps.append([G.vertices[i] for i in np.flatnonzero(comp)])
    return comps


def is_connected(G: SimpleGraph) -> bool:
    return len(connected_components(G)) <= 1


def distances_from(G: SimpleGraph, source: int) -> dict[int, int]:
    """BFS distances from ``source`` to every vertex it reaches."""
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in G.neighbors(u):
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def diameter(G: SimpleGraph) -> int | float | None:
    n = len(G)
    if n == 0:
        return None
    adj = G.matrix.astype(np.float32)
    reach = np.eye(n, dtype=bool)
    k = 0
    # grow every BFS ball by one step at a time
    while not reach.all():
        grown = reach | ((reach.astype(np.float32) @ adj) > 0)
        if np.array_equal(grown, reach):
            return math.inf
        reach = grown
        k += 1
    return k


def girth(G: SimpleGraph) -> int | float:
    adj = G.matrix
    if adj.size:
        a = adj.astype(np.float32)
        if ((a @ a) * a).any():
            return 3
    best = math.inf
    for s in G.vertices:
        dist = {s: 0}
        parent = {s: None}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in G.adjacency[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def is_eulerian(G: SimpleGraph) -> bool:
    if (G.degree_array % 2).any():
        return False
    return is_connected(G)


def euler_tour(G: SimpleGraph) -> list[int] | None:
    """A closed walk using every edge exactly once, or None if none exists.

    Hierholzer's algorithm.  A graph with no edges yields ``[v]`` for its only
    vertex or ``[]`` when it has none.
    """
    if not is_eulerian(G):
        return None
    if not G.edge_count:
        return list(G.vertices[:1])
    unused = {v: set(ns) for v, ns in G.adjacency.items()}
    stack, tour = [G.vertices[0]], []
    while stack:
        u = stack[-1]
        if unused[u]:
            w = unused[u].pop()
            unused[w].discard(u)
            stack.append(w)
        else:
            tour.append(stack.pop())
    tour.reverse()
    return tour


def is_euler_tour(G: SimpleGraph, walk: Sequence[int]) -> bool:
    """Check that ``walk`` is closed and traverses each edge exactly once."""
    if not G.edge_count:
        return len(walk) <= 1 and all(v in G for v in walk)
    if len(walk) != G.edge_count + 1 or walk[0] != walk[-1]:
        return False
    steps = [(min(u, v), max(u, v)) for u, v in zip(walk, walk[1:])]
    return len(set(steps)) == len(steps) and set(steps) == G.edges


def is_planar(G: SimpleGraph) -> bool:
    """Planarity by the left-right criterion (networkx implementation)."""
    n, m = len(G), G.edge_count
    if n >= 3 and m > 3 * n - 6:
        return False
    if n <= 4:
        return True
    planar, _ = nx.check_planarity(G.to_networkx())
    return planar


@dataclass(frozen=True)
class ShapeFlags:
    """Independent shape predicates; degenerate graphs are treated permissively."""

    is_empty: bool
    is_complete: bool
    is_path: bool
    is_tree: bool
    is_star: bool
    is_cycle_free: bool


def classify_shape(G: SimpleGraph) -> ShapeFlags:
    n, m = len(G), G.edge_count
    degs = G.degree_array.tolist()
    connected = is_connected(G)
    tree = n >= 1 and connected and m == n - 1
    if n <= 2:
        path = tree
    else:
        path = tree and degs.count(1) == 2 and degs.count(2) == n - 2
    return ShapeFlags(
        is_empty=n == 0,
        is_complete=m == n * (n - 1) // 2,
        is_path=path,
        is_tree=tree,
        is_star=tree and (n <= 2 or max(degs) == n - 1),
        is_cycle_free=girth(G) == math.inf,
    )


def shape_name(G: SimpleGraph) -> str:
    """One representative label: Empty, Complete(k), Star(k), Path(k), Tree, HasCycle or Other.

    ``Complete(k)`` is ``K_k``, ``Star(k)`` is ``K_{1,k}`` and ``Path(k)`` has
    ``k`` vertices; earlier labels win when several apply.
    """
    f = classify_shape(G)
    n = len(G)
    if f.is_empty:
        return "Empty"
    if f.is_complete:
        return f"Complete({n})"
    if f.is_star:
        return f"Star({n - 1})"
    if f.is_path:
        return f"Path({n})"
    if f.is_tree:
        return "Tree"
    if not f.is_cycle_free:
        return "HasCycle"
    return "Other"


def _dot_id(text: str) -> str:
    if text.isidentifier() or text.lstrip("-").isdigit():
        return text
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(G: SimpleGraph, labels: Mapping[int, str] | Sequence[str] | None = None) -> str:
    """Deterministic DOT text: nodes by id, then edges in lexicographic order."""

    def name(v):
        return _dot_id(str(labels[v])) if labels is not None else str(v)

    if not G.vertices:
        return "graph G { }\n"
    lines = ["graph G {"]
    lines += [f"  {name(v)};" for v in G.vertices]
    lines += [f"  {name(u)} -- {name(v)};" for u, v in sorted(G.edges)]
    lines.append("}")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class GraphMetrics:
    degrees: dict[int, int]
    connected: bool
    diameter: int | float | None
    girth: int | float
    eulerian: bool
    planar: bool
    shape: str
    flags: ShapeFlags

    def to_json(self) -> dict:
        def num(x):
            if x is None:
                return "Undefined"
            return "Infinite" if x == math.inf else x

        return {
            "degrees": {str(v): d for v, d in self.degrees.items()},
            "connected": self.connected,
            "diameter": num(self.diameter),
            "girth": num(self.girth),
            "eulerian": self.eulerian,
            "planar": self.planar,
            "shape": self.shape,
            "flags": {k: getattr(self.flags, k) for k in self.flags.__dataclass_fields__},
        }


def metrics(G: SimpleGraph) -> GraphMetrics:
    return GraphMetrics(
        degrees=dict(zip(G.vertices, G.degree_array.tolist())),
        connected=is_connected(G),
        diameter=diameter(G),
        girth=girth(G),
        eulerian=is_eulerian(G),
        planar=is_planar(G),
        shape=shape_name(G),
        flags=classify_shape(G),
    )
