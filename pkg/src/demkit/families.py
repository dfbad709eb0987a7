"""Generators for the named graph families.

Deterministic kinds (paths, cycles, complete and complete bipartite graphs,
books, hypercubes) take integer parameters; the random kinds (uniform labeled
trees, connected Erdos-Renyi samples) additionally require a seed and are
reproducible from it.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass

from .errors import GenerationError
from .graph import Graph

KINDS = (
    "path",
    "cycle",
    "complete",
    "complete_bipartite",
    "book",
    "hypercube",
    "random_tree",
    "random_connected",
)

# short tokens used by the expression grammar and the CLI
SHORT_NAMES = {
    "complete_bipartite": "bipartite",
    "random_tree": "randtree",
    "random_connected": "randconn",
}

RANDOM_CONNECTED_MAX_TRIES = 1000


@dataclass(frozen=True)
class FamilySpec:
    """Declarative description of one generated graph."""

    kind: str
    params: tuple[int, ...] = ()
    seed: int | None = None

    def __str__(self) -> str:
        name = SHORT_NAMES.get(self.kind, self.kind)
        parts = [name]
        if self.kind == "random_connected" and len(self.params) == 3:
            n, num, den = self.params
            parts += [str(n), f"{num}/{den}"]
        else:
            parts += [str(p) for p in self.params]
        if self.seed is not None:
            parts.append(f"seed={self.seed}")
        return ":".join(parts)


def _need(spec: FamilySpec, count: int) -> tuple[int, ...]:
    if len(spec.params) != count:
        raise GenerationError(
            f"{spec.kind} expects {count} integer parameter(s), got {spec.params}"
        )
    return spec.params


def _rng(spec: FamilySpec) -> random.Random:
    if spec.seed is None:
        raise GenerationError(f"{spec.kind} requires a seed")
    return random.Random(spec.seed)


def path(n: int) -> Graph:
    if n < 1:
        raise GenerationError("path order must be >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GenerationError("cycle order must be >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise GenerationError("complete-graph order must be >= 1")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(m: int, n: int) -> Graph:
    if m < 1 or n < 1:
        raise GenerationError("bipartite part sizes must be >= 1")
    return Graph(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def book(q: int) -> Graph:
    """Book with q pages: q triangles sharing the common edge (0, 1)."""
    if q < 1:
        raise GenerationError("book page count must be >= 1")
    edges = [(0, 1)]
    for p in range(2, q + 2):
        edges += [(0, p), (1, p)]
    return Graph(q + 2, edges)


def hypercube(d: int) -> Graph:
    if d < 1:
        raise GenerationError("hypercube dimension must be >= 1")
    n = 1 << d
    edges = []
    for x in range(n):
        for bit in range(d):
            y = x ^ (1 << bit)
            if x < y:
                edges.append((x, y))
    return Graph(n, edges)


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniform labeled tree via a random Prufer sequence."""
    if n < 1:
        raise GenerationError("tree order must be >= 1")
    if n <= 2:
        return path(n)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return Graph(n, edges)


def _is_connected(n: int, edges: list[tuple[int, int]]) -> bool:
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = [False] * n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    return count == n


def random_connected(n: int, p_num: int, p_den: int, rng: random.Random) -> Graph:
    """Erdos-Renyi G(n, p) sample, rejected until connected (bounded retries)."""
    if n < 1:
        raise GenerationError("order must be >= 1")
    if p_den < 1 or p_num < 0 or p_num > p_den:
        raise GenerationError(f"edge probability {p_num}/{p_den} not in [0, 1]")
    p = p_num / p_den
    for _ in range(RANDOM_CONNECTED_MAX_TRIES):
        edges = [
            (i, j)
            for i in range(n)
            for j in range(i + 1, n)
            if rng.random() < p
        ]
        if _is_connected(n, edges):
            return Graph(n, edges)
    raise GenerationError(
        f"no connected sample of G({n}, {p_num}/{p_den}) "
        f"in {RANDOM_CONNECTED_MAX_TRIES} tries"
    )


def generate(spec: FamilySpec) -> Graph:
    """Build the canonical graph described by ``spec``."""
    kind = spec.kind
    if kind == "path":
        return path(*_need(spec, 1))
    if kind == "cycle":
        return cycle(*_need(spec, 1))
    if kind == "complete":
        return complete(*_need(spec, 1))
    if kind == "complete_bipartite":
        return complete_bipartite(*_need(spec, 2))
    if kind == "book":
        return book(*_need(spec, 1))
    if kind == "hypercube":
        return hypercube(*_need(spec, 1))
    if kind == "random_tree":
        (n,) = _need(spec, 1)
        return random_tree(n, _rng(spec))
    if kind == "random_connected":
        n, p_num, p_den = _need(spec, 3)
        return random_connected(n, p_num, p_den, _rng(spec))
    raise GenerationError(f"unknown family kind {kind!r}")


def family_order(spec: FamilySpec) -> int:
    """Vertex count of the generated graph, without generating it."""
    kind = spec.kind
    if kind in ("path", "cycle", "complete", "random_tree", "random_connected"):
        return spec.params[0]
    if kind == "complete_bipartite":
        return spec.params[0] + spec.params[1]
    if kind == "book":
        return spec.params[0] + 2
    if kind == "hypercube":
        return 1 << spec.params[0]
    raise GenerationError(f"unknown family kind {kind!r}")
