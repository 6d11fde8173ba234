"""Instance and coloring file formats.

Instance files are DIMACS-like text: a ``p edge n m`` header, ``e u v`` edge
lines, optional ``l v c1 c2 ...`` color-list lines, and ``c`` comments.
Vertex ids are 1..n. Coloring files hold ``v id color`` lines.
"""

from __future__ import annotations

from .chordal import Coloring, ListAssignment
from .graph import Graph, UnknownVertex, build_graph


class ParseError(Exception):
    """Malformed input text; the message carries the 1-based line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class DuplicateListLine(ParseError):
    """A vertex received more than one ``l`` line."""


def parse_instance(text: str) -> tuple[Graph, ListAssignment | None]:
    """Parse an instance file into a graph and, if ``l`` lines occur, lists.

    Vertices missing an ``l`` line in a file that has any get empty lists.
    """
    n: int | None = None
    edges: list[tuple[int, int]] = []
    lists: dict[int, frozenset[int]] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        kind = tokens[0]
        if kind == "p":
            if n is not None:
                raise ParseError(line_no, "duplicate problem line")
            if len(tokens) != 4 or tokens[1] != "edge":
                raise ParseError(line_no, "problem line must be 'p edge <n> <m>'")
            try:
                n = int(tokens[2])
                int(tokens[3])
            except ValueError:
                raise ParseError(line_no, "problem line counts must be integers") from None
            if n < 0:
                raise ParseError(line_no, "vertex count must be non-negative")
            continue
        if n is None:
            raise ParseError(line_no, f"'{kind}' line before the problem line")
        if kind == "e":
            if len(tokens) != 3:
                raise ParseError(line_no, "edge line must be 'e <u> <v>'")
            try:
                u, v = int(tokens[1]), int(tokens[2])
            except ValueError:
                raise ParseError(line_no, "edge endpoints must be integers") from None
            if u == v:
                raise ParseError(line_no, f"edge ({u}, {v}) is a self-loop")
            for x in (u, v):
                if not 1 <= x <= n:
                    raise UnknownVertex(f"line {line_no}: vertex {x} outside 1..{n}")
            edges.append((u, v))
        elif kind == "l":
            if len(tokens) < 2:
                raise ParseError(line_no, "list line must be 'l <v> <colors...>'")
            try:
                v = int(tokens[1])
                colors = [int(t) for t in tokens[2:]]
            except ValueError:
                raise ParseError(line_no, "list entries must be integers") from None
            if not 1 <= v <= n:
                raise UnknownVertex(f"line {line_no}: vertex {v} outside 1..{n}")
            if v in lists:
                raise DuplicateListLine(line_no, f"second list line for vertex {v}")
            lists[v] = frozenset(colors)
        else:
            raise ParseError(line_no, f"unknown line type {kind!r}")
    if n is None:
        raise ParseError(1, "missing problem line 'p edge <n> <m>'")
    g = build_graph(n, edges)
    if not lists:
        return g, None
    full: ListAssignment = {v: lists.get(v, frozenset()) for v in g.vertices}
    return g, full


def emit_instance(g: Graph, lists: ListAssignment | None = None) -> str:
    """Render a graph (ids must be exactly 1..n) and optional lists as text.

    parse_instance(emit_instance(g, lists)) reproduces both arguments.
    """
    if g.vertices != tuple(range(1, g.n + 1)):
        raise ValueError("emit requires contiguous vertex ids 1..n")
    out = [f"p edge {g.n} {g.m}"]
    out.extend(f"e {u} {v}" for u, v in g.edges())
    if lists is not None:
        for v in g.vertices:
            colors = " ".join(str(c) for c in sorted(lists[v]))
            out.append(f"l {v} {colors}".rstrip())
    return "\n".join(out) + "\n"


def parse_coloring(text: str) -> Coloring:
    """Parse ``v id color`` lines into a coloring."""
    phi: Coloring = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        if tokens[0] != "v" or len(tokens) != 3:
            raise ParseError(line_no, "coloring line must be 'v <id> <color>'")
        try:
            v, color = int(tokens[1]), int(tokens[2])
        except ValueError:
            raise ParseError(line_no, "coloring entries must be integers") from None
        if v in phi:
            raise ParseError(line_no, f"second color for vertex {v}")
        phi[v] = color
    return phi


def emit_coloring(phi: Coloring) -> str:
    """Render a coloring as ``v id color`` lines, ascending by id."""
    return "".join(f"v {v} {phi[v]}\n" for v in sorted(phi))
