"""Certifying chordality and elimination-order greedy list coloring.

For any graph this module produces one of two independently checkable
certificates: an elimination order in which every vertex's earlier neighbors
form a clique (the graph is chordal), or a hole, i.e. a chordless cycle of
length at least four (it is not). Chordal graphs are then list-colored
greedily along the order.
"""

from __future__ import annotations

import heapq
from collections import Counter, deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Graph

# Per-vertex allowed colors and a chosen color per vertex.
ListAssignment = dict[int, frozenset[int]]
Coloring = dict[int, int]


class NotAPermutation(Exception):
    """The supplied order is not a permutation of the graph's vertices."""


class PreconditionBreach(Exception):
    """A witness triple did not satisfy the documented preconditions."""


class InvalidPeo(Exception):
    """An order claimed to be a perfect elimination ordering is not one."""


class ListExhausted(Exception):
    """Greedy coloring found no free color in some vertex's list."""

    def __init__(self, vertex: int):
        super().__init__(f"no free color in the list of vertex {vertex}")
        self.vertex = vertex


class InternalInvariantBroken(Exception):
    """A state the underlying arguments rule out was reached; implementation bug."""


class EliminationOrder:
    """A vertex order with O(1) position lookup."""

    __slots__ = ("order", "position")

    def __init__(self, order: Iterable[int]):
        self.order: tuple[int, ...] = tuple(order)
        self.position: dict[int, int] = {v: i for i, v in enumerate(self.order)}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EliminationOrder):
            return NotImplemented
        return self.order == other.order

    def __repr__(self) -> str:
        return f"EliminationOrder({list(self.order)!r})"


@dataclass(frozen=True)
class Hole:
    """A chordless cycle x_1, ..., x_k with k >= 4, listed in cycle order."""

    cycle: tuple[int, ...]


@dataclass(frozen=True)
class PeoViolation:
    """Earlier neighbors u, w of `vertex` that are not adjacent."""

    vertex: int
    witness_pair: tuple[int, int]


@dataclass(frozen=True)
class ChordalityCertificate:
    """Exactly one of: an elimination order (chordal) or a hole (not chordal)."""

    peo: EliminationOrder | None = None
    hole: Hole | None = None

    def __post_init__(self) -> None:
        if (self.peo is None) == (self.hole is None):
            raise ValueError("certificate must carry exactly one of peo / hole")

    @property
    def is_chordal(self) -> bool:
        return self.peo is not None


def uniform_lists(g: Graph, k: int) -> ListAssignment:
    """Every vertex gets the list {1, ..., k}."""
    colors = frozenset(range(1, k + 1))
    return {v: colors for v in g.vertices}


def _as_order(order: EliminationOrder | Sequence[int]) -> tuple[int, ...]:
    if isinstance(order, EliminationOrder):
        return order.order
    return tuple(order)


def mcs_order(g: Graph) -> EliminationOrder:
    """Maximum cardinality search visit order (an elimination-order candidate).

    Each step visits the vertex with the most already-visited neighbors,
    breaking ties toward the smallest id; the first vertex is the smallest id.
    For chordal graphs the result is a perfect elimination ordering.
    """
    weight = {v: 0 for v in g.vertices}
    heap: list[tuple[int, int]] = [(0, v) for v in g.vertices]
    seen: set[int] = set()
    order: list[int] = []
    while heap:
        w, v = heapq.heappop(heap)
        if v in seen or -w != weight[v]:
            continue  # stale entry
        seen.add(v)
        order.append(v)
        for u in g.neighbors(v):
            if u not in seen:
                weight[u] += 1
                heapq.heappush(heap, (-weight[u], u))
    return EliminationOrder(order)


def verify_peo(g: Graph, order: EliminationOrder | Sequence[int]) -> PeoViolation | None:
    """Check the elimination-order property; None if it holds.

    On failure, returns the violation at the earliest order position, with the
    lexicographically smallest non-adjacent pair of earlier neighbors.
    """
    seq = _as_order(order)
    if len(seq) != g.n or set(seq) != set(g.vertices):
        raise NotAPermutation("order must be a permutation of the graph's vertices")
    pos = {v: i for i, v in enumerate(seq)}
    for i, v in enumerate(seq):
        earlier = [u for u in g.neighbors(v) if pos[u] < i]
        if len(earlier) <= 1:
            continue
        # It suffices to compare against the latest-placed earlier neighbor:
        # its own earlier neighbors are pairwise adjacent by the minimality of
        # the first failure, so the full clique check reduces to membership.
        anchor = max(earlier, key=pos.__getitem__)
        anchor_nbrs = g.neighbor_set(anchor)
        if all(u == anchor or u in anchor_nbrs for u in earlier):
            continue
        earlier.sort()
        for a_idx, a in enumerate(earlier):
            a_nbrs = g.neighbor_set(a)
            for b in earlier[a_idx + 1:]:
                if b not in a_nbrs:
                    return PeoViolation(vertex=v, witness_pair=(a, b))
        raise InternalInvariantBroken("reduced check failed but no bad pair found")
    return None


def find_hole_from_witness(g: Graph, v: int, u: int, w: int) -> Hole | None:
    """Grow a hole from a vertex v with non-adjacent neighbors u, w.

    Searches for a shortest u-w path in the graph with v's closed
    neighborhood (except u and w) removed. Any such path is chordless, and no
    interior vertex touches v, so v, u, path, w closes a chordless cycle of
    length >= 4. Returns None when u and w fall apart in the reduced graph.
    """
    v_nbrs = g.neighbor_set(v)
    if u not in v_nbrs or w not in v_nbrs:
        raise PreconditionBreach(f"{u} and {w} must both be neighbors of {v}")
    if g.adjacent(u, w):
        raise PreconditionBreach(f"{u} and {w} must not be adjacent")
    blocked = (v_nbrs | {v}) - {u, w}
    parent: dict[int, int | None] = {u: None}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        if x == w:
            break
        for y in g.neighbors(x):
            if y not in blocked and y not in parent:
                parent[y] = x
                queue.append(y)
    if w not in parent:
        return None
    path = [w]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])  # type: ignore[arg-type]
    path.reverse()  # u ... w
    return Hole((v, *path))


def _norm(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a < b else (b, a)


def _edge_components(g: Graph) -> dict[tuple[int, int], int]:
    """Biconnected-component id per edge, keys normalized as (min, max).

    Bridges land in singleton components. Every cycle lies inside a single
    component, which is what the hole scan's pair filter relies on.
    """
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    comp_of: dict[tuple[int, int], int] = {}
    edge_stack: list[tuple[int, int]] = []
    clock = 0
    comps = 0
    for root in g.vertices:
        if root in disc:
            continue
        disc[root] = low[root] = clock
        clock += 1
        stack: list[tuple[int, int, Iterable[int]]] = [(root, -1, iter(g.neighbors(root)))]
        while stack:
            v, parent, nbrs = stack[-1]
            descended = False
            for w in nbrs:
                if w == parent:
                    continue
                if w not in disc:
                    disc[w] = low[w] = clock
                    clock += 1
                    edge_stack.append(_norm(v, w))
                    stack.append((w, v, iter(g.neighbors(w))))
                    descended = True
                    break
                if disc[w] < disc[v]:  # back edge to an ancestor, seen once
                    edge_stack.append(_norm(v, w))
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            if descended:
                continue
            stack.pop()
            if stack:
                up = stack[-1][0]
                if low[v] < low[up]:
                    low[up] = low[v]
                if low[v] >= disc[up]:
                    comps += 1
                    tree_edge = _norm(up, v)
                    while True:
                        e = edge_stack.pop()
                        comp_of[e] = comps
                        if e == tree_edge:
                            break
    return comp_of


def chordality_certificate(g: Graph) -> ChordalityCertificate:
    """Either a verified elimination order or a hole.

    Runs maximum cardinality search and verifies the result. On a violation
    the graph is known not to be chordal, and candidate witness triples
    (v; u, w) with u, w non-adjacent neighbors of v are scanned in ascending
    order until a hole grows. Pairs whose two edges lie in different
    biconnected components are skipped: no cycle can use both, so the path
    search would come back empty anyway.
    """
    candidate = mcs_order(g)
    if verify_peo(g, candidate) is None:
        return ChordalityCertificate(peo=candidate)
    edge_comp = _edge_components(g)
    comp_size = Counter(edge_comp.values())
    for v in g.vertices:
        cyclic = [u for u in g.neighbors(v) if comp_size[edge_comp[_norm(v, u)]] > 1]
        if len(cyclic) < 2:
            continue
        for i, u in enumerate(cyclic):
            u_comp = edge_comp[_norm(v, u)]
            u_nbrs = g.neighbor_set(u)
            for w in cyclic[i + 1:]:
                if w in u_nbrs or edge_comp[_norm(v, w)] != u_comp:
                    continue
                hole = find_hole_from_witness(g, v, u, w)
                if hole is not None:
                    return ChordalityCertificate(hole=hole)
    raise InternalInvariantBroken("order verification failed but no hole was found")


def clique_number_from_peo(g: Graph, peo: EliminationOrder | Sequence[int]) -> int:
    """Clique number of a chordal graph, read off a verified elimination order.

    Every clique appears as some vertex together with its earlier neighbors,
    so the maximum of (1 + earlier degree) over the order is exact.
    """
    seq = _as_order(peo)
    if verify_peo(g, seq) is not None:
        raise InvalidPeo("order is not a perfect elimination ordering")
    pos = {v: i for i, v in enumerate(seq)}
    best = 0
    for i, v in enumerate(seq):
        earlier = sum(1 for u in g.neighbors(v) if pos[u] < i)
        if earlier + 1 > best:
            best = earlier + 1
    return best


def greedy_color_along(
    g: Graph,
    order: EliminationOrder | Sequence[int],
    lists: ListAssignment,
) -> Coloring:
    """Color vertices in the given order, smallest free list color first.

    Succeeds whenever some list color is free at every step; in particular
    along a perfect elimination ordering with lists of size >= clique number,
    and in any order when every list exceeds the vertex's degree.
    """
    seq = _as_order(order)
    if len(seq) != g.n or set(seq) != set(g.vertices):
        raise NotAPermutation("order must be a permutation of the graph's vertices")
    colors: Coloring = {}
    for v in seq:
        used = {colors[u] for u in g.neighbors(v) if u in colors}
        free = frozenset(lists[v]) - used
        if not free:
            raise ListExhausted(v)
        colors[v] = min(free)
    return colors
