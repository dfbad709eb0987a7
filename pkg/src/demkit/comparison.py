"""Exhaustive reference solvers for three distance-based dimensions.

Metric dimension (vertex pairs split by distance), edge metric dimension
(edge pairs split by vertex-edge distance), and strong metric dimension
(vertex pairs strongly resolved via shortest-path containment). All three are
minimum covering problems over pair-resolving bitmasks, searched plainly by
increasing subset size; they are reference oracles, kept simple and capped.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import CapExceededError, GraphError
from .graph import Graph
from .monitoring import dem_number

DEFAULT_MAX_N = 12


def _smallest_cover(
    masks: list[int], full: int, n: int
) -> tuple[int, tuple[int, ...]]:
    """Smallest vertex subset whose resolving masks OR to ``full``; first hit
    in combinations order is the lexicographically smallest of its size."""
    if full == 0:
        return 0, ()
    for k in range(1, n + 1):
        for subset in combinations(range(n), k):
            acc = 0
            for v in subset:
                acc |= masks[v]
            if acc == full:
                return k, subset
    raise GraphError("no resolving set exists")  # unreachable for valid input


def _check_cap(g: Graph, max_n: int, what: str) -> None:
    if g.n > max_n:
        raise CapExceededError(what, g.n, max_n)


def _vertex_pairs(g: Graph) -> list[tuple[int, int]]:
    return list(combinations(range(g.n), 2))


def is_metric_generator(g: Graph, vertices: Iterable[int]) -> bool:
    s = set(vertices)
    d = g.distance_matrix
    return all(
        any(d[u][x] != d[v][x] for x in s) for u, v in _vertex_pairs(g)
    )


def metric_dimension(
    g: Graph, *, max_n: int = DEFAULT_MAX_N
) -> tuple[int, tuple[int, ...]]:
    """Smallest set of vertices giving every vertex a distinct distance
    signature."""
    _check_cap(g, max_n, "metric dimension solver")
    d = g.distance_matrix
    pairs = _vertex_pairs(g)
    masks = [0] * g.n
    for idx, (u, v) in enumerate(pairs):
        for x in range(g.n):
            if d[u][x] != d[v][x]:
                masks[x] |= 1 << idx
    return _smallest_cover(masks, (1 << len(pairs)) - 1, g.n)


def _edge_distances(g: Graph) -> list[list[int]]:
    d = g.distance_matrix
    return [
        [min(d[u][x], d[v][x]) for x in range(g.n)] for u, v in g.edges
    ]


def is_edge_metric_generator(g: Graph, vertices: Iterable[int]) -> bool:
    s = set(vertices)
    ed = _edge_distances(g)
    return all(
        any(ed[e1][x] != ed[e2][x] for x in s)
        for e1, e2 in combinations(range(g.m), 2)
    )


def edge_metric_dimension(
    g: Graph, *, max_n: int = DEFAULT_MAX_N
) -> tuple[int, tuple[int, ...]]:
    """Smallest set of vertices giving every edge a distinct distance
    signature (vertex-edge distance = nearer endpoint)."""
    _check_cap(g, max_n, "edge metric dimension solver")
    ed = _edge_distances(g)
    pairs = list(combinations(range(g.m), 2))
    masks = [0] * g.n
    for idx, (e1, e2) in enumerate(pairs):
        row1, row2 = ed[e1], ed[e2]
        for x in range(g.n):
            if row1[x] != row2[x]:
                masks[x] |= 1 << idx
    return _smallest_cover(masks, (1 << len(pairs)) - 1, g.n)


def _strongly_resolves(d, u: int, v: int, x: int) -> bool:
    # v on a shortest u-x path, or u on a shortest v-x path
    return d[u][x] == d[u][v] + d[v][x] or d[v][x] == d[v][u] + d[u][x]


def is_strong_resolving_set(g: Graph, vertices: Iterable[int]) -> bool:
    s = set(vertices)
    d = g.distance_matrix
    return all(
        any(_strongly_resolves(d, u, v, x) for x in s)
        for u, v in _vertex_pairs(g)
    )


def strong_metric_dimension(
    g: Graph, *, max_n: int = DEFAULT_MAX_N
) -> tuple[int, tuple[int, ...]]:
    """Smallest set strongly resolving every vertex pair."""
    _check_cap(g, max_n, "strong metric dimension solver")
    d = g.distance_matrix
    pairs = _vertex_pairs(g)
    masks = [0] * g.n
    for idx, (u, v) in enumerate(pairs):
        for x in range(g.n):
            if _strongly_resolves(d, u, v, x):
                masks[x] |= 1 << idx
    return _smallest_cover(masks, (1 << len(pairs)) - 1, g.n)


@dataclass(frozen=True)
class ComparisonReport:
    """All four distance parameters of one graph, with verified witnesses."""

    name: str
    n: int
    m: int
    dem: int
    dem_witness: tuple[int, ...]
    dim: int
    dim_witness: tuple[int, ...]
    edim: int
    edim_witness: tuple[int, ...]
    dim_s: int
    dim_s_witness: tuple[int, ...]


def compare_graph(
    g: Graph,
    name: str = "graph",
    *,
    dem_max_n: int = 24,
    max_n: int = DEFAULT_MAX_N,
) -> ComparisonReport:
    dem = dem_number(g, max_n=dem_max_n)
    dim, dim_w = metric_dimension(g, max_n=max_n)
    edim, edim_w = edge_metric_dimension(g, max_n=max_n)
    dim_s, dim_s_w = strong_metric_dimension(g, max_n=max_n)
    return ComparisonReport(
        name, g.n, g.m,
        dem.value, dem.witness,
        dim, dim_w,
        edim, edim_w,
        dim_s, dim_s_w,
    )
