"""Distance-edge monitoring.

A probe x monitors edge e when removing e changes the distance from x to some
vertex y, i.e. e lies on every shortest x-y path. The monitoring number of a
graph is the smallest probe set under which every edge is monitored; it is
exactly the minimum hitting set of the per-edge monitor lists collected in
the monitor matrix.

Two routes compute what a probe monitors: the default restricts candidates to
edges on some shortest path from the probe (an edge whose endpoint distances
from x do not differ by one lies on no shortest x-path, so its removal cannot
change any distance from x), while the ``*_naive`` twins re-run the
single-source distances for every (probe, edge) pair and exist as the
independent oracle for that pruning.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from . import hitting
from .cover import vertex_cover_number
from .errors import CapExceededError, GraphError
from .graph import Graph

DEFAULT_MAX_N = 24
DEFAULT_ENUMERATION_CAP = 100_000


@dataclass(frozen=True)
class MonitorMatrix:
    """Boolean incidence "vertex x monitors edge e" over V x E.

    ``rows[x]`` is a bitmask over edge ids, ``cols[e]`` a bitmask over vertex
    ids. Both endpoints of every edge always appear in its column: removing
    an edge strictly increases the distance between its endpoints.
    """

    n: int
    m: int
    rows: tuple[int, ...]
    cols: tuple[int, ...]

    def monitors(self, eid: int) -> tuple[int, ...]:
        """Vertices that monitor the given edge."""
        return tuple(hitting.bits(self.cols[eid]))

    def monitored(self, x: int) -> tuple[int, ...]:
        """Edge ids monitored by the given vertex."""
        return tuple(hitting.bits(self.rows[x]))

    def covers(self, vertices: Iterable[int]) -> bool:
        mask = 0
        for v in vertices:
            mask |= 1 << v
        return all(col & mask for col in self.cols)


def _validate_probes(g: Graph, probes: Iterable[int]) -> list[int]:
    out = sorted(set(probes))
    for x in out:
        if not 0 <= x < g.n:
            raise GraphError(f"probe vertex {x} out of range")
    return out


def monitored_pairs(g: Graph, probes: Iterable[int], eid: int) -> set[tuple[int, int]]:
    """All pairs (x, y), x a probe, whose distance changes when edge ``eid``
    is removed (becoming infinite counts as a change)."""
    if not 0 <= eid < g.m:
        raise GraphError(f"edge id {eid} out of range")
    pairs: set[tuple[int, int]] = set()
    for x in _validate_probes(g, probes):
        base = g.distances_from(x)
        cut = g.distances_from(x, removed=eid)
        pairs.update((x, y) for y in range(g.n) if base[y] != cut[y])
    return pairs


def _row(g: Graph, x: int, candidates: Iterable[int]) -> int:
    base = g.distances_from(x)
    row = 0
    for eid in candidates:
        if g.distances_from(x, removed=eid) != base:
            row |= 1 << eid
    return row


def _shortest_path_candidates(g: Graph, x: int) -> list[int]:
    base = g.distances_from(x)
    return [
        eid for eid, (u, v) in enumerate(g.edges) if abs(base[u] - base[v]) == 1
    ]


def monitored_edges(g: Graph, x: int) -> set[int]:
    """Edge ids monitored by vertex x (shortest-path-pruned computation)."""
    if not 0 <= x < g.n:
        raise GraphError(f"vertex {x} out of range")
    return set(hitting.bits(_row(g, x, _shortest_path_candidates(g, x))))


def monitored_edges_naive(g: Graph, x: int) -> set[int]:
    """Oracle twin of :func:`monitored_edges`: re-checks every edge."""
    if not 0 <= x < g.n:
        raise GraphError(f"vertex {x} out of range")
    return set(hitting.bits(_row(g, x, range(g.m))))


def _matrix(g: Graph, rows: list[int]) -> MonitorMatrix:
    cols = [0] * g.m
    for x, row in enumerate(rows):
        for eid in hitting.bits(row):
            cols[eid] |= 1 << x
    return MonitorMatrix(g.n, g.m, tuple(rows), tuple(cols))


def monitor_matrix(g: Graph, *, max_n: int = DEFAULT_MAX_N) -> MonitorMatrix:
    """Complete V x E monitoring incidence."""
    if g.n > max_n:
        raise CapExceededError("monitor matrix", g.n, max_n)
    return _matrix(
        g, [_row(g, x, _shortest_path_candidates(g, x)) for x in range(g.n)]
    )


def monitor_matrix_naive(g: Graph, *, max_n: int = DEFAULT_MAX_N) -> MonitorMatrix:
    """Oracle twin of :func:`monitor_matrix` without candidate pruning."""
    if g.n > max_n:
        raise CapExceededError("monitor matrix", g.n, max_n)
    return _matrix(g, [_row(g, x, range(g.m)) for x in range(g.n)])


def is_dem_set(
    g: Graph, vertices: Iterable[int], matrix: MonitorMatrix | None = None
) -> bool:
    """True iff every edge is monitored by some vertex of the set."""
    probes = _validate_probes(g, vertices)
    if matrix is None:
        matrix = monitor_matrix(g, max_n=g.n)
    return matrix.covers(probes)


def greedy_dem(
    g: Graph, matrix: MonitorMatrix | None = None
) -> tuple[int, ...]:
    """Greedy monitoring set: repeatedly take the vertex monitoring the most
    uncovered edges (ties: lowest id). Valid, not necessarily minimum."""
    if matrix is None:
        matrix = monitor_matrix(g, max_n=g.n)
    uncovered = (1 << g.m) - 1
    chosen: list[int] = []
    while uncovered:
        best = max(
            range(g.n),
            key=lambda v: ((matrix.rows[v] & uncovered).bit_count(), -v),
        )
        chosen.append(best)
        uncovered &= ~matrix.rows[best]
    return tuple(sorted(chosen))


@dataclass(frozen=True)
class DemResult:
    """Exact monitoring number with one witness and solver statistics."""

    n: int
    m: int
    value: int
    witness: tuple[int, ...]
    all_minimum_sets: tuple[tuple[int, ...], ...] | None
    nodes_explored: int

    def to_json_dict(self) -> dict:
        doc: dict = {
            "n": self.n,
            "m": self.m,
            "dem": self.value,
            "witness": list(self.witness),
        }
        if self.all_minimum_sets is not None:
            doc["all_minimum_sets"] = [list(s) for s in self.all_minimum_sets]
        doc["nodes_explored"] = self.nodes_explored
        return doc


def dem_number(
    g: Graph,
    enumerate_all: bool = False,
    *,
    max_n: int = DEFAULT_MAX_N,
    enumeration_cap: int = DEFAULT_ENUMERATION_CAP,
) -> DemResult:
    """Exact minimum distance-edge-monitoring set.

    The witness is the lexicographically smallest minimum set; with
    ``enumerate_all`` every minimum set is listed (capped). Branch and bound
    over the hitting-set instance, seeded with the better of the greedy
    monitoring set and the exact vertex cover (always a valid monitoring set).
    """
    if g.n > max_n:
        raise CapExceededError("monitoring solver", g.n, max_n)
    if g.m == 0:
        sets = ((),) if enumerate_all else None
        return DemResult(g.n, 0, 0, (), sets, 0)
    matrix = monitor_matrix(g, max_n=max_n)
    upper = min(
        len(greedy_dem(g, matrix)),
        vertex_cover_number(g, max_n=max_n).value,
    )
    value, nodes = hitting.minimum_hitting_set(matrix.cols, upper=upper)
    if enumerate_all:
        sets = hitting.enumerate_minimum_sets(
            matrix.cols, g.n, value, enumeration_cap
        )
        witness = sets[0]
    else:
        sets = None
        witness = hitting.lexicographically_smallest(matrix.cols, g.n, value)
    return DemResult(g.n, g.m, value, witness, sets, nodes)
