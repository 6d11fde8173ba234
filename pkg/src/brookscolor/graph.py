"""Immutable simple undirected graphs with stable non-negative integer ids.

Derived graphs (vertex deletion, edge addition) keep the ids of surviving
vertices, so a named vertex can be tracked across a whole recursion. All
iteration runs in ascending id order, which keeps every downstream
computation reproducible.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator


class GraphError(Exception):
    """Base class for malformed graph input."""


class SelfLoop(GraphError):
    """An edge (v, v) was supplied."""


class UnknownVertex(GraphError):
    """A vertex id outside the graph's vertex set was referenced."""


class EndpointDeleted(GraphError):
    """An added edge references a vertex scheduled for deletion."""


class Graph:
    """Simple undirected graph, immutable once built.

    Construct through :func:`build_graph` or :func:`surgery`; the constructor
    trusts its adjacency argument to be symmetric and loop-free.
    """

    __slots__ = ("_vertices", "_neighbors", "_neighbor_sets", "_m")

    def __init__(self, adjacency: dict[int, Iterable[int]]):
        self._vertices: tuple[int, ...] = tuple(sorted(adjacency))
        self._neighbors: dict[int, tuple[int, ...]] = {
            v: tuple(sorted(adjacency[v])) for v in self._vertices
        }
        # built per vertex on first neighbor_set() call; concurrent builds
        # race benignly (same value, atomic dict store)
        self._neighbor_sets: dict[int, frozenset[int]] = {}
        self._m = sum(len(nbrs) for nbrs in self._neighbors.values()) // 2

    @classmethod
    def _from_parts(
        cls,
        vertices: tuple[int, ...],
        neighbors: dict[int, tuple[int, ...]],
        m: int,
    ) -> Graph:
        # trusted fast path: vertices and each neighbor tuple already sorted
        g = cls.__new__(cls)
        g._vertices = vertices
        g._neighbors = neighbors
        g._neighbor_sets = {}
        g._m = m
        return g

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def m(self) -> int:
        return self._m

    def has_vertex(self, v: int) -> bool:
        return v in self._neighbors

    def neighbors(self, v: int) -> tuple[int, ...]:
        try:
            return self._neighbors[v]
        except KeyError:
            raise UnknownVertex(f"vertex {v} is not in the graph") from None

    def neighbor_set(self, v: int) -> frozenset[int]:
        try:
            return self._neighbor_sets[v]
        except KeyError:
            if v not in self._neighbors:
                raise UnknownVertex(f"vertex {v} is not in the graph") from None
            made = self._neighbor_sets[v] = frozenset(self._neighbors[v])
            return made

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def adjacent(self, u: int, v: int) -> bool:
        return v in self.neighbor_set(u)

    def edges(self) -> Iterator[tuple[int, int]]:
        """All edges as (u, v) with u < v, ascending."""
        for v in self._vertices:
            for u in self._neighbors[v]:
                if u > v:
                    yield (v, u)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._neighbors == other._neighbors

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class ComponentPartition:
    """Connected components as disjoint sorted id tuples covering the graph."""

    components: tuple[tuple[int, ...], ...]


def build_graph(n_or_ids: int | Iterable[int], edges: Iterable[tuple[int, int]] = ()) -> Graph:
    """Build a graph from a vertex-id collection (or a count n, meaning 1..n)
    and unordered edge pairs. Duplicate edges collapse silently.
    """
    if isinstance(n_or_ids, int):
        ids: Iterable[int] = range(1, n_or_ids + 1)
    else:
        ids = n_or_ids
    adjacency: dict[int, set[int]] = {}
    for v in ids:
        if v < 0:
            raise UnknownVertex(f"vertex ids must be non-negative, got {v}")
        adjacency.setdefault(v, set())
    for u, v in edges:
        if u == v:
            raise SelfLoop(f"edge ({u}, {v}) is a self-loop")
        if u not in adjacency:
            raise UnknownVertex(f"edge endpoint {u} is not a declared vertex")
        if v not in adjacency:
            raise UnknownVertex(f"edge endpoint {v} is not a declared vertex")
        adjacency[u].add(v)
        adjacency[v].add(u)
    return Graph(adjacency)


def max_degree(g: Graph) -> int:
    """Largest vertex degree; 0 for edgeless (or empty) graphs."""
    return max((len(g.neighbors(v)) for v in g.vertices), default=0)


def connected_components(g: Graph) -> ComponentPartition:
    """Connected components, ordered by smallest contained id."""
    seen: set[int] = set()
    components: list[tuple[int, ...]] = []
    for start in g.vertices:
        if start in seen:
            continue
        queue = deque([start])
        seen.add(start)
        comp = [start]
        while queue:
            v = queue.popleft()
            for u in g.neighbors(v):
                if u not in seen:
                    seen.add(u)
                    comp.append(u)
                    queue.append(u)
        components.append(tuple(sorted(comp)))
    return ComponentPartition(tuple(components))


def is_complete(g: Graph, s: Iterable[int]) -> bool:
    """True iff every pair of vertices in s is adjacent (vacuous for |s| <= 1)."""
    members = frozenset(s)
    for v in members:
        if not g.has_vertex(v):
            raise UnknownVertex(f"vertex {v} is not in the graph")
    want = len(members) - 1
    return all(len(g.neighbor_set(v) & members) >= want for v in members)


def surgery(
    g: Graph,
    delete: Iterable[int] = (),
    add_edges: Iterable[tuple[int, int]] = (),
) -> Graph:
    """Induced subgraph on V(g) minus `delete`, plus the edges in `add_edges`.

    Surviving vertices keep their ids, so the original graph and any number
    of derived graphs can be used side by side.
    """
    doomed = frozenset(delete)
    for v in doomed:
        if not g.has_vertex(v):
            raise UnknownVertex(f"cannot delete unknown vertex {v}")
    additions: dict[int, list[int]] = {}
    for u, v in add_edges:
        if u == v:
            raise SelfLoop(f"added edge ({u}, {v}) is a self-loop")
        for x in (u, v):
            if x in doomed:
                raise EndpointDeleted(f"added edge ({u}, {v}) uses deleted vertex {x}")
            if not g.has_vertex(x):
                raise UnknownVertex(f"added edge ({u}, {v}) uses unknown vertex {x}")
        additions.setdefault(u, []).append(v)
        additions.setdefault(v, []).append(u)
    if doomed:
        vertices = tuple(v for v in g.vertices if v not in doomed)
        neighbors = {
            v: tuple(u for u in g.neighbors(v) if u not in doomed) for v in vertices
        }
    else:
        vertices = g.vertices
        neighbors = {v: g.neighbors(v) for v in vertices}
    for v, extra in additions.items():
        neighbors[v] = tuple(sorted(set(neighbors[v]).union(extra)))
    m = sum(len(nbrs) for nbrs in neighbors.values()) // 2
    return Graph._from_parts(vertices, neighbors, m)
