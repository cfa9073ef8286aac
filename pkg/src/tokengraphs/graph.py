"""Simple undirected graphs on bit-set adjacency rows, plus the standard
families used throughout (path, cycle, star, fan, wheel, complete, grid).

Vertices are ``0..n-1`` internally.  Anything that talks to a human (reports,
DOT, edge lists) shifts to ``1..n``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import ParameterError

FAMILIES = ("path", "cycle", "star", "fan", "wheel", "complete", "grid")

# Smallest admissible parameter per family.  star counts all vertices,
# fan and wheel count rim vertices only.
FAMILY_MINIMUM = {
    "path": 1,
    "cycle": 3,
    "star": 2,
    "fan": 3,
    "wheel": 3,
    "complete": 1,
    "grid": 1,
}


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable simple graph.  ``adj[v]`` is an int whose set bits are the
    neighbours of ``v``."""

    __slots__ = ("n", "adj", "_nbrs")

    def __init__(self, n: int, adj: Sequence[int]):
        if n < 0 or len(adj) != n:
            raise ParameterError(f"need {n} adjacency rows, got {len(adj)}")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise ParameterError(f"row {v} names a vertex outside 0..{n - 1}")
            if row >> v & 1:
                raise ParameterError(f"self-loop at vertex {v}")
            for u in _bits(row):
                if not adj[u] >> v & 1:
                    raise ParameterError(f"edge {v}-{u} is not symmetric")
        self.n = n
        self.adj = tuple(adj)
        self._nbrs = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ParameterError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ParameterError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.adj == other.adj

    def __hash__(self) -> int:
        return hash(self.adj)

    def __len__(self) -> int:
        return self.n

    @property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        """Sorted neighbour lists, cached on first use."""
        if self._nbrs is None:
            self._nbrs = tuple(tuple(_bits(row)) for row in self.adj)
        return self._nbrs

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [len(nb) for nb in self.neighbors]

    @property
    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in self.neighbors[u] if u < v]

    def degree_histogram(self) -> dict[int, int]:
        hist: dict[int, int] = {}
        for d in self.degrees():
            hist[d] = hist.get(d, 0) + 1
        return dict(sorted(hist.items()))

    def is_automorphism(self, image: Sequence[int]) -> bool:
        """True iff ``v -> image[v]`` is a bijection that preserves adjacency."""
        n = self.n
        if len(image) != n or sorted(image) != list(range(n)):
            return False
        adj = self.adj
        for u in range(n):
            row = 0
            for w in self.neighbors[u]:
                row |= 1 << image[w]
            if row != adj[image[u]]:
                return False
        return True

    def is_bipartite(self) -> bool:
        return two_coloring(self) is not None


def two_coloring(g: Graph) -> list[int] | None:
    """A proper 2-colouring of ``g`` or None if it has an odd cycle."""
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] != -1:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.neighbors[u]:
                if side[w] == -1:
                    side[w] = 1 - side[u]
                    stack.append(w)
                elif side[w] == side[u]:
                    return None
    return side


# -- families ---------------------------------------------------------------


@dataclass(frozen=True)
class FamilySpec:
    """A named family plus its integer parameters.

    ``params`` is ``(n,)`` for every family except grid, which takes
    ``(rows, cols)``.  For star ``n`` is the total vertex count (so
    ``star, 7`` is K_{1,6}); for fan and wheel it is the rim size.
    """

    family: str
    params: tuple[int, ...]

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ParameterError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        want = 2 if self.family == "grid" else 1
        if len(self.params) != want:
            raise ParameterError(f"{self.family} takes {want} parameter(s), got {self.params}")
        lo = FAMILY_MINIMUM[self.family]
        for p in self.params:
            if int(p) != p or p < lo:
                raise ParameterError(f"{self.family} needs parameters >= {lo}, got {self.params}")

    def label(self) -> str:
        n = self.params[0]
        return {
            "path": f"P_{n}",
            "cycle": f"C_{n}",
            "star": f"K_{{1,{n - 1}}}",
            "fan": f"A_{{1,{n}}}",
            "wheel": f"W_{{1,{n}}}",
            "complete": f"K_{n}",
            "grid": f"G_{{{self.params[0]},{self.params[-1]}}}",
        }[self.family]


def path_graph(n: int) -> Graph:
    return make_family(FamilySpec("path", (n,)))


def cycle_graph(n: int) -> Graph:
    return make_family(FamilySpec("cycle", (n,)))


def star_graph(n: int) -> Graph:
    """K_{1,n-1}: ``n`` vertices in total, vertex 0 (label 1) is the centre."""
    return make_family(FamilySpec("star", (n,)))


def fan_graph(rim: int) -> Graph:
    return make_family(FamilySpec("fan", (rim,)))


def wheel_graph(rim: int) -> Graph:
    return make_family(FamilySpec("wheel", (rim,)))


def complete_graph(n: int) -> Graph:
    return make_family(FamilySpec("complete", (n,)))


def grid_graph(rows: int, cols: int) -> Graph:
    return make_family(FamilySpec("grid", (rows, cols)))


def make_family(spec: FamilySpec) -> Graph:
    fam, p = spec.family, spec.params
    if fam == "path":
        n = p[0]
        return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
    if fam == "cycle":
        n = p[0]
        return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    if fam == "star":
        n = p[0]
        return Graph.from_edges(n, [(0, i) for i in range(1, n)])
    if fam == "fan":
        return join_with_apex(path_graph(p[0]))
    if fam == "wheel":
        return join_with_apex(cycle_graph(p[0]))
    if fam == "complete":
        n = p[0]
        return Graph(n, [((1 << n) - 1) ^ (1 << v) for v in range(n)])
    rows, cols = p
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return Graph.from_edges(rows * cols, edges)


# -- operations -------------------------------------------------------------


def join_with_apex(g: Graph) -> Graph:
    """K_1 + g.  The apex takes the highest label."""
    if g.n == 0:
        raise ParameterError("join_with_apex needs a nonempty graph")
    n = g.n
    rows = [row | 1 << n for row in g.adj]
    rows.append((1 << n) - 1)
    return Graph(n + 1, rows)


def _check_vertices(g: Graph, vs: Iterable[int]) -> list[int]:
    out = sorted(set(vs))
    for v in out:
        if not 0 <= v < g.n:
            raise ParameterError(f"vertex {v} out of range 0..{g.n - 1}")
    return out


def induced_subgraph(g: Graph, vs: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by ``vs``.

    Returns ``(h, index_map)`` where ``index_map[i]`` is the vertex of ``g``
    that became vertex ``i`` of ``h`` (order preserved).
    """
    keep = _check_vertices(g, vs)
    where = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        row = 0
        for w in g.neighbors[v]:
            i = where.get(w)
            if i is not None:
                row |= 1 << i
        rows.append(row)
    return Graph(len(keep), rows), tuple(keep)


def delete_vertices(g: Graph, xs: Iterable[int]) -> Graph:
    drop = set(_check_vertices(g, xs))
    return induced_subgraph(g, [v for v in range(g.n) if v not in drop])[0]


def set_neighborhood(g: Graph, xs: Iterable[int]) -> set[int]:
    """N(X): union of the neighbourhoods of X, minus X itself."""
    xs = _check_vertices(g, xs)
    mask = 0
    for x in xs:
        mask |= g.adj[x]
    for x in xs:
        mask &= ~(1 << x)
    return set(_bits(mask))
