"""Ground truth for small instances: coloring validation and exhaustive search."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .chordal import Coloring, ListAssignment
from .graph import Graph


class IncompleteColoring(Exception):
    """The coloring's domain does not match the graph's vertex set."""


class OracleOutcome(enum.Enum):
    UNSATISFIABLE = "unsatisfiable"
    LIMIT_EXCEEDED = "limit-exceeded"


@dataclass(frozen=True)
class Defect:
    """First problem found in a coloring, in ascending vertex scan order."""

    kind: str  # "color-not-in-list" | "monochromatic-edge"
    vertex: int | None = None
    edge: tuple[int, int] | None = None

    def __str__(self) -> str:
        if self.kind == "color-not-in-list":
            return f"vertex {self.vertex} is colored outside its list"
        u, v = self.edge  # type: ignore[misc]
        return f"edge ({u}, {v}) is monochromatic"


def verify_coloring(g: Graph, lists: ListAssignment | None, phi: Coloring) -> Defect | None:
    """None if phi is proper and drawn from the lists; else the first defect.

    Vertices are scanned ascending; at each vertex the list check precedes the
    checks of its edges toward larger neighbor ids. Pass lists=None to check
    properness only.
    """
    missing = [v for v in g.vertices if v not in phi]
    if missing:
        raise IncompleteColoring(f"vertices without a color: {missing[:5]}")
    if len(phi) != g.n:
        extra = sorted(set(phi) - set(g.vertices))
        raise IncompleteColoring(f"colors assigned outside the graph: {extra[:5]}")
    for v in g.vertices:
        if lists is not None and phi[v] not in lists[v]:
            return Defect(kind="color-not-in-list", vertex=v)
        for u in g.neighbors(v):
            if u > v and phi[u] == phi[v]:
                return Defect(kind="monochromatic-edge", edge=(v, u))
    return None


def brute_force_list_color(
    g: Graph,
    lists: ListAssignment,
    node_limit: int = 10_000_000,
) -> Coloring | OracleOutcome:
    """Exhaustive backtracking over vertices and colors in ascending order.

    Returns the lexicographically first list coloring, UNSATISFIABLE after
    exhausting the space, or LIMIT_EXCEEDED once node_limit color decisions
    have been tried. Intended for roughly a dozen vertices or fewer.
    """
    verts = g.vertices
    options = {v: sorted(lists[v]) for v in verts}
    phi: Coloring = {}
    decisions = 0

    class _Limit(Exception):
        pass

    def backtrack(idx: int) -> bool:
        nonlocal decisions
        if idx == len(verts):
            return True
        v = verts[idx]
        taken = {phi[u] for u in g.neighbors(v) if u in phi}
        for color in options[v]:
            decisions += 1
            if decisions > node_limit:
                raise _Limit
            if color in taken:
                continue
            phi[v] = color
            if backtrack(idx + 1):
                return True
            del phi[v]
        return False

    try:
        found = backtrack(0)
    except _Limit:
        return OracleOutcome.LIMIT_EXCEEDED
    return dict(phi) if found else OracleOutcome.UNSATISFIABLE
