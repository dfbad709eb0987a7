"""The four binary graph operations: join, corona, cluster, Cartesian product.

Each constructor returns ``(Graph, ProductVertexMap)``; the map records where
every product vertex came from so tests and reports can address factor copies
and layers by structure instead of raw ids.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import GraphError
from .graph import Graph

# origin tags: "G" = left-factor / spine vertex, "H" = vertex of an H copy,
# "GH" = Cartesian pair (copy = left index i, index = right index j)
Origin = tuple[str, int, int]


@dataclass(frozen=True)
class ProductVertexMap:
    """Bijection between product vertex ids and their factor coordinates."""

    operation: str
    g_order: int
    h_order: int
    origins: tuple[Origin, ...]
    _ids: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(
            self, "_ids", {o: p for p, o in enumerate(self.origins)}
        )

    def origin(self, pid: int) -> Origin:
        return self.origins[pid]

    def vertex(self, tag: str, copy: int, index: int) -> int:
        try:
            return self._ids[(tag, copy, index)]
        except KeyError:
            raise GraphError(f"no product vertex with origin {(tag, copy, index)}") from None

    # Cartesian accessors -------------------------------------------------

    def pair(self, pid: int) -> tuple[int, int]:
        """Factor coordinates (i, j) of a Cartesian product vertex."""
        tag, i, j = self.origins[pid]
        if tag != "GH":
            raise GraphError("pair() applies to Cartesian products only")
        return i, j

    def vertex_at(self, i: int, j: int) -> int:
        return self.vertex("GH", i, j)

    def g_layer(self, j: int) -> tuple[int, ...]:
        """Vertices with right index j; the induced subgraph is a copy of G."""
        if self.operation != "cartesian":
            raise GraphError("g_layer() applies to Cartesian products only")
        return tuple(i * self.h_order + j for i in range(self.g_order))

    def h_layer(self, i: int) -> tuple[int, ...]:
        """Vertices with left index i; the induced subgraph is a copy of H."""
        if self.operation != "cartesian":
            raise GraphError("h_layer() applies to Cartesian products only")
        return tuple(i * self.h_order + j for j in range(self.h_order))

    # join / corona / cluster accessors -----------------------------------

    def g_vertices(self) -> tuple[int, ...]:
        """Left-factor vertices (for cluster: the roots, identified with G)."""
        if self.operation == "cluster":
            return tuple(range(self.g_order))
        if self.operation in ("join", "corona"):
            return tuple(range(self.g_order))
        raise GraphError(f"g_vertices() not defined for {self.operation}")

    def h_copy(self, i: int) -> tuple[int, ...]:
        """Vertices of the i-th copy of H, ordered by their H index."""
        out = [
            pid
            for pid, (tag, copy, _) in enumerate(self.origins)
            if tag == "H" and copy == i
        ]
        out.sort(key=lambda pid: self.origins[pid][2])
        return tuple(out)


def join(g: Graph, h: Graph) -> tuple[Graph, ProductVertexMap]:
    """Disjoint union of g and h plus every cross edge."""
    m, n = g.n, h.n
    edges = list(g.edges)
    edges += [(m + u, m + v) for u, v in h.edges]
    edges += [(i, m + j) for i in range(m) for j in range(n)]
    origins = [("G", 0, i) for i in range(m)] + [("H", 0, j) for j in range(n)]
    return Graph(m + n, edges), ProductVertexMap("join", m, n, tuple(origins))


def corona(g: Graph, h: Graph) -> tuple[Graph, ProductVertexMap]:
    """One copy of g; the i-th vertex of g joined to all of the i-th h copy."""
    m, n = g.n, h.n
    edges = list(g.edges)
    origins: list[Origin] = [("G", 0, i) for i in range(m)]
    for i in range(m):
        base = m + i * n
        edges += [(base + u, base + v) for u, v in h.edges]
        edges += [(i, base + j) for j in range(n)]
        origins += [("H", i, j) for j in range(n)]
    return Graph(m + m * n, edges), ProductVertexMap("corona", m, n, tuple(origins))


def cluster(g: Graph, h: Graph, root: int = 0) -> tuple[Graph, ProductVertexMap]:
    """Rooted product: the root of the i-th h copy is identified with vertex i
    of g. Product ids 0..m-1 are the roots (= the g vertices)."""
    m, n = g.n, h.n
    if not 0 <= root < n:
        raise GraphError(f"root {root} out of range for the rooted factor")
    others = [j for j in range(n) if j != root]
    edges = list(g.edges)
    origins: list[Origin] = [("H", i, root) for i in range(m)]
    copy_ids: list[dict[int, int]] = []
    for i in range(m):
        base = m + i * (n - 1)
        ids = {root: i}
        for k, j in enumerate(others):
            ids[j] = base + k
        copy_ids.append(ids)
        edges += [(ids[u], ids[v]) for u, v in h.edges]
    for i in range(m):
        origins += [("H", i, j) for j in others]
    return Graph(m * n, edges), ProductVertexMap("cluster", m, n, tuple(origins))


def cartesian(g: Graph, h: Graph) -> tuple[Graph, ProductVertexMap]:
    """Cartesian product: vertex (i, j) has id i*|V(h)| + j; edges move in
    exactly one coordinate."""
    m, n = g.n, h.n
    edges = []
    for i in range(m):
        edges += [(i * n + u, i * n + v) for u, v in h.edges]
    for u, v in g.edges:
        edges += [(u * n + j, v * n + j) for j in range(n)]
    origins = tuple(("GH", i, j) for i in range(m) for j in range(n))
    return Graph(m * n, edges), ProductVertexMap("cartesian", m, n, origins)
