"""Seeded instance generators driven by a portable SplitMix64 stream.

Every model consumes one stream in a documented order (graph first, then the
per-vertex lists), so a config reproduces its instance bit for bit on any
platform. Vertex ids are always 1..n.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chordal import ListAssignment
from .graph import Graph, build_graph




class InfeasibleConfig(Exception):
    """The requested instance cannot exist (e.g. degree cap too tight)."""


_MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64: state += 0x9E3779B97F4A7C15; output = mix(state).

    Chosen for portability: the whole generator is a handful of 64-bit
    integer operations, and bounded draws use plain modulo reduction.
    """

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform-ish integer in [0, n) via modulo reduction."""
        return self.next_u64() % n

    def float01(self) -> float:
        """Float in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) / float(1 << 53)

    def sample(self, pool: list[int], k: int) -> list[int]:
        """k distinct elements of pool by a partial Fisher-Yates shuffle."""
        pool = list(pool)
        for i in range(k):
            j = i + self.below(len(pool) - i)
            pool[i], pool[j] = pool[j], pool[i]
        return pool[:k]


MODELS = ("tree-plus-edges", "chordal-simplicial", "gnp-capped")


@dataclass(frozen=True)
class GeneratorConfig:
    """Parameters for one seeded instance.

    palette is the number of available colors (lists draw from 1..palette);
    delta caps every vertex degree in all models.
    """

    n: int
    delta: int
    model: str = "tree-plus-edges"
    seed: int = 0
    palette: int = 6
    list_size: int = 3


def _tree_plus_edges(n: int, delta: int, rng: SplitMix64) -> list[tuple[int, int]]:
    # Random attachment tree, then n extra-edge attempts rejected when a cap
    # would be exceeded.
    degree = {v: 0 for v in range(1, n + 1)}
    edges: list[tuple[int, int]] = []
    adjacent: set[tuple[int, int]] = set()

    def add(u: int, v: int) -> None:
        edges.append((u, v))
        adjacent.add((min(u, v), max(u, v)))
        degree[u] += 1
        degree[v] += 1

    for v in range(2, n + 1):
        candidates = [u for u in range(1, v) if degree[u] < delta]
        if not candidates:
            raise InfeasibleConfig(f"no spanning tree with degree cap {delta} on {n} vertices")
        add(candidates[rng.below(len(candidates))], v)
    for _ in range(n):
        u = 1 + rng.below(n)
        v = 1 + rng.below(n)
        if u == v or (min(u, v), max(u, v)) in adjacent:
            continue
        if degree[u] < delta and degree[v] < delta:
            add(u, v)
    return edges


def _chordal_simplicial(n: int, delta: int, rng: SplitMix64) -> list[tuple[int, int]]:
    # Each new vertex attaches to a random subset of a random existing clique
    # (subsets of cliques are cliques), so the insertion order is a perfect
    # elimination ordering and the result is chordal by construction.
    degree = {v: 0 for v in range(1, n + 1)}
    edges: list[tuple[int, int]] = []
    cliques: list[tuple[int, ...]] = [(1,)]
    for v in range(2, n + 1):
        base = cliques[rng.below(len(cliques))]
        eligible = [u for u in base if degree[u] < delta]
        if not eligible:
            # chosen clique is saturated; the previous vertex never is, so an
            # unsaturated single-vertex clique always exists
            unsaturated = [u for u in range(1, v) if degree[u] < delta]
            eligible = [unsaturated[rng.below(len(unsaturated))]]
        # non-final vertices keep one free slot so growth never dead-ends
        size_cap = delta if v == n else delta - 1
        if size_cap < 1:
            raise InfeasibleConfig(f"degree cap {delta} cannot fit {n} vertices")
        size = 1 + rng.below(min(len(eligible), size_cap))
        chosen = rng.sample(eligible, size)
        for u in chosen:
            edges.append((u, v))
            degree[u] += 1
            degree[v] += 1
        cliques.append(tuple(sorted((*chosen, v))))
    return edges


def _gnp_capped(n: int, delta: int, rng: SplitMix64) -> list[tuple[int, int]]:
    # Edge probability itself is drawn from the stream, so a seed sweep covers
    # densities from near-empty to near-complete.
    p = rng.float01()
    degree = {v: 0 for v in range(1, n + 1)}
    edges: list[tuple[int, int]] = []
    for u in range(1, n + 1):
        for v in range(u + 1, n + 1):
            if rng.float01() < p and degree[u] < delta and degree[v] < delta:
                edges.append((u, v))
                degree[u] += 1
                degree[v] += 1
    return edges


def random_lists(
    vertices: tuple[int, ...] | list[int],
    palette: int,
    list_size: int,
    rng: SplitMix64 | int,
) -> ListAssignment:
    """Uniform random list_size-subsets of {1..palette}, per vertex ascending."""
    if list_size > palette:
        raise InfeasibleConfig(f"list size {list_size} exceeds palette {palette}")
    if isinstance(rng, int):
        rng = SplitMix64(rng)
    colors = list(range(1, palette + 1))
    return {v: frozenset(rng.sample(colors, list_size)) for v in sorted(vertices)}


def generate(config: GeneratorConfig) -> tuple[Graph, ListAssignment]:
    """Deterministically generate a graph and list assignment from a config."""
    if config.n < 1:
        raise InfeasibleConfig("n must be at least 1")
    if config.delta < 0:
        raise InfeasibleConfig("delta must be non-negative")
    if config.model not in MODELS:
        raise InfeasibleConfig(f"unknown model {config.model!r} (choose from {MODELS})")
    if config.list_size > config.palette:
        raise InfeasibleConfig(
            f"list size {config.list_size} exceeds palette {config.palette}"
        )
    if config.n > 1 and config.delta < 1:
        raise InfeasibleConfig("delta 0 only allows a single vertex")
    rng = SplitMix64(config.seed)
    if config.n == 1:
        edges: list[tuple[int, int]] = []
    elif config.model == "tree-plus-edges":
        edges = _tree_plus_edges(config.n, config.delta, rng)
    elif config.model == "chordal-simplicial":
        edges = _chordal_simplicial(config.n, config.delta, rng)
    else:
        edges = _gnp_capped(config.n, config.delta, rng)
    g = build_graph(config.n, edges)
    lists = random_lists(g.vertices, config.palette, config.list_size, rng)
    return g, lists
