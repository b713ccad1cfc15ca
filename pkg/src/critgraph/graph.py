"""Multigraphs (no self-loops, multi-edges allowed) and exact Laplacians.

Construction helpers cover cycles, Cartesian products, and the four-cycle
prism family C4 x Cn.  The C4 x Cn vertex (layer i, ring position j) is
encoded as ``4*i + j`` so each C4 layer occupies a contiguous index block.
"""

from __future__ import annotations

from typing import Mapping

from .exactla import IntegerMatrix


def _edge_key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class Multigraph:
    """Immutable undirected multigraph: a vertex count and a multiplicity
    map over unordered vertex pairs."""

    __slots__ = ("_n", "_edges")

    def __init__(self, vertex_count: int, edges: Mapping[tuple[int, int], int] | None = None):
        if vertex_count < 1:
            raise ValueError(f"vertex count must be >= 1, got {vertex_count}")
        self._n = vertex_count
        cleaned: dict[tuple[int, int], int] = {}
        for (u, v), mult in (edges or {}).items():
            if u == v:
                raise ValueError(f"self-loop at vertex {u} is not allowed")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"edge ({u}, {v}) out of range for {vertex_count} vertices")
            if mult < 1:
                raise ValueError(f"edge ({u}, {v}) has non-positive multiplicity {mult}")
            key = _edge_key(u, v)
            cleaned[key] = cleaned.get(key, 0) + int(mult)
        self._edges = cleaned

    @property
    def vertex_count(self) -> int:
        return self._n

    @property
    def edge_multiplicities(self) -> dict[tuple[int, int], int]:
        return dict(self._edges)

    @property
    def edge_count(self) -> int:
        """Number of edges counted with multiplicity."""
        return sum(self._edges.values())

    def multiplicity(self, u: int, v: int) -> int:
        if u == v:
            return 0
        return self._edges.get(_edge_key(u, v), 0)

    def degree(self, u: int) -> int:
        return sum(m for (a, b), m in self._edges.items() if u in (a, b))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, tuple(sorted(self._edges.items()))))

    def __repr__(self) -> str:
        return f"Multigraph(vertex_count={self._n}, edges={len(self._edges)} pairs)"


def cycle(n: int) -> Multigraph:
    """Simple cycle on n >= 3 vertices; vertex i is adjacent to i +- 1 mod n."""
    if n < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {n}")
    edges = {(i, (i + 1) % n): 1 for i in range(n)}
    return Multigraph(n, edges)


def cartesian_product(g1: Multigraph, g2: Multigraph) -> Multigraph:
    """Cartesian product; vertex (u, v) is encoded as u + v * |V1|.

    (u1, v1) ~ (u2, v2) iff u1 = u2 and v1 ~ v2, or u1 ~ u2 and v1 = v2;
    multiplicities are inherited from the contributing edge.
    """
    n1, n2 = g1.vertex_count, g2.vertex_count
    edges: dict[tuple[int, int], int] = {}
    for v in range(n2):
        for (u1, u2), mult in g1.edge_multiplicities.items():
            key = _edge_key(u1 + v * n1, u2 + v * n1)
            edges[key] = edges.get(key, 0) + mult
    for u in range(n1):
        for (v1, v2), mult in g2.edge_multiplicities.items():
            key = _edge_key(u + v1 * n1, u + v2 * n1)
            edges[key] = edges.get(key, 0) + mult
    return Multigraph(n1 * n2, edges)


def c4xcn(n: int) -> Multigraph:
    """The prism-of-cycles C4 x Cn: n four-cycle layers, layer vertex
    (i, j) encoded as 4*i + j, joined ring-to-ring between consecutive
    layers.  4-regular with 8n edges."""
    if n < 3:
        raise ValueError(f"C4 x Cn needs n >= 3, got {n}")
    edges: dict[tuple[int, int], int] = {}
    for i in range(n):
        for j in range(4):
            here = 4 * i + j
            edges[_edge_key(here, 4 * i + (j + 1) % 4)] = 1
            edges[_edge_key(here, 4 * ((i + 1) % n) + j)] = 1
    return Multigraph(4 * n, edges)


def laplacian(g: Multigraph) -> IntegerMatrix:
    """Laplacian matrix: degree on the diagonal, minus edge multiplicity
    off the diagonal.  Symmetric with zero row sums."""
    n = g.vertex_count
    rows = [[0] * n for _ in range(n)]
    for (u, v), mult in g.edge_multiplicities.items():
        rows[u][v] = -mult
        rows[v][u] = -mult
        rows[u][u] += mult
        rows[v][v] += mult
    return IntegerMatrix(rows)


def parse_edge_list(text: str) -> Multigraph:
    """Parse the edge-list text format.

    One edge per line: ``u v [multiplicity]`` with 0-based vertex ids.
    ``#`` starts a comment; blank lines are skipped.  An optional header
    line ``vertices N`` fixes the vertex count, otherwise it is one plus
    the largest id seen.  Repeated pairs accumulate multiplicity.
    """
    vertex_count: int | None = None
    raw_edges: list[tuple[int, int, int]] = []
    max_id = -1
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        parts = body.split()
        if parts[0] == "vertices":
            if len(parts) != 2:
                raise ValueError(f"line {lineno}: header must be 'vertices N'")
            if vertex_count is not None:
                raise ValueError(f"line {lineno}: duplicate 'vertices' header")
            vertex_count = int(parts[1])
            continue
        if len(parts) not in (2, 3):
            raise ValueError(f"line {lineno}: expected 'u v [multiplicity]', got {body!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
            mult = int(parts[2]) if len(parts) == 3 else 1
        except ValueError as exc:
            raise ValueError(f"line {lineno}: non-integer field in {body!r}") from exc
        if u < 0 or v < 0:
            raise ValueError(f"line {lineno}: vertex ids must be >= 0")
        raw_edges.append((u, v, mult))
        max_id = max(max_id, u, v)
    if vertex_count is None:
        if max_id < 0:
            raise ValueError("edge list is empty and has no 'vertices' header")
        vertex_count = max_id + 1
    edges: dict[tuple[int, int], int] = {}
    for u, v, mult in raw_edges:
        if u == v:
            raise ValueError(f"self-loop at vertex {u} is not allowed")
        key = _edge_key(u, v)
        edges[key] = edges.get(key, 0) + mult
    return Multigraph(vertex_count, edges)
