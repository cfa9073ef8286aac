"""k-token graphs F_k(G): vertices are the k-subsets of V(G), two subsets
adjacent when their symmetric difference is an edge of G.

Subsets are n-bit masks.  Ranks follow colexicographic order, which for
masks is plain numeric order, so ``rank(mask) = sum_i C(c_i, i)`` over the
sorted positions ``c_1 < ... < c_k`` (0-based, ``i`` 1-based).
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

from .errors import CapacityError, ContractViolation, ParameterError
from .graph import Graph, _bits, delete_vertices, induced_subgraph

# Largest base graph accepted for token construction (bits per subset mask).
MAX_BASE_ORDER = 64
# Largest token graph built by default; override with TOKENGRAPHS_MAX_ORDER.
DEFAULT_MAX_TOKEN_ORDER = 20_000

_BINOM = [[comb(n, r) for r in range(MAX_BASE_ORDER + 1)] for n in range(MAX_BASE_ORDER + 1)]


def max_token_order() -> int:
    raw = os.environ.get("TOKENGRAPHS_MAX_ORDER")
    if raw is None:
        return DEFAULT_MAX_TOKEN_ORDER
    try:
        value = int(raw)
    except ValueError:
        raise ParameterError(f"TOKENGRAPHS_MAX_ORDER must be an integer, got {raw!r}") from None
    if value < 1:
        raise ParameterError("TOKENGRAPHS_MAX_ORDER must be positive")
    return value


def colex_rank(mask: int) -> int:
    r = 0
    for i, c in enumerate(_bits(mask), 1):
        r += _BINOM[c][i]
    return r


def colex_unrank(rank: int, n: int, k: int) -> int:
    if not 0 <= rank < _BINOM[n][k]:
        raise ParameterError(f"rank {rank} out of range for C({n},{k})")
    mask = 0
    c = n - 1
    for i in range(k, 0, -1):
        while _BINOM[c][i] > rank:
            c -= 1
        mask |= 1 << c
        rank -= _BINOM[c][i]
        c -= 1
    return mask


def k_subset_masks(n: int, k: int) -> list[int]:
    """All k-bit masks below 2**n in increasing (= colex) order."""
    if k == 0:
        return [0]
    out = []
    m = (1 << k) - 1
    limit = 1 << n
    while m < limit:
        out.append(m)
        low = m & -m
        ripple = m + low
        m = ripple | (((m ^ ripple) >> 2) // low)
    return out


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def format_subset(mask: int) -> str:
    """``{a,b,c}`` with 1-based labels."""
    return "{" + ",".join(str(v + 1) for v in _bits(mask)) + "}"


class TokenGraph:
    """F_k(base) together with the rank <-> mask tables."""

    __slots__ = ("base", "k", "graph", "masks", "_rank")

    def __init__(self, base: Graph, k: int, graph: Graph, masks: Sequence[int]):
        self.base = base
        self.k = k
        self.graph = graph
        self.masks = tuple(masks)
        self._rank = {m: r for r, m in enumerate(self.masks)}

    def __repr__(self) -> str:
        return f"TokenGraph(n={self.base.n}, k={self.k}, order={self.graph.n})"

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def order(self) -> int:
        return self.graph.n

    def rank(self, mask: int) -> int:
        try:
            return self._rank[mask]
        except KeyError:
            raise ParameterError(f"{mask:#b} is not a {self.k}-subset of {self.n} vertices") from None

    def rank_of(self, vertices: Iterable[int]) -> int:
        """Rank of the subset given by 0-based base vertices."""
        return self.rank(mask_of(vertices))

    def subset(self, rank: int) -> tuple[int, ...]:
        return tuple(_bits(self.masks[rank]))

    def label(self, rank: int) -> str:
        return format_subset(self.masks[rank])


def build_token_graph(base: Graph, k: int) -> TokenGraph:
    if not 1 <= k <= base.n - 1:
        raise ParameterError(f"k must satisfy 1 <= k <= n-1 (n={base.n}), got k={k}")
    return _build(base, k)


def _build(base: Graph, k: int) -> TokenGraph:
    n = base.n
    if n > MAX_BASE_ORDER:
        raise CapacityError(f"base graph has {n} vertices; the limit is {MAX_BASE_ORDER}")
    order = _BINOM[n][k]
    if order > max_token_order():
        raise CapacityError(f"F_{k} of a {n}-vertex graph has {order} vertices; limit is {max_token_order()}")
    masks = k_subset_masks(n, k)
    rank = {m: r for r, m in enumerate(masks)}
    nbrs = base.neighbors
    rows = []
    for a in masks:
        row = 0
        for x in _bits(a):
            without = a ^ (1 << x)
            for y in nbrs[x]:
                if not a >> y & 1:
                    row |= 1 << rank[without | 1 << y]
        rows.append(row)
    return TokenGraph(base, k, Graph(order, rows), masks)


def token_degree_by_cut(tg: TokenGraph, rank: int) -> int:
    """Number of base edges with exactly one end in the subset.

    This has to agree with the degree of ``rank`` in the token graph; a
    disagreement means the construction is broken and is raised as such.
    """
    a = tg.masks[rank]
    cut = sum((tg.base.adj[x] & ~a).bit_count() for x in _bits(a))
    if cut != tg.graph.degree(rank):
        raise ContractViolation(
            f"cut count {cut} differs from degree {tg.graph.degree(rank)} at {tg.label(rank)}"
        )
    return cut


@dataclass(frozen=True)
class ComplementMap:
    """A ↦ V∖A between F_k and F_{n-k}.  ``forward[r]`` is a rank of the
    target, ``backward`` its inverse."""

    source: TokenGraph
    target: TokenGraph
    forward: tuple[int, ...]
    backward: tuple[int, ...]


def complement_relabel(tg: TokenGraph, target: TokenGraph | None = None) -> ComplementMap:
    full = (1 << tg.n) - 1
    if target is None:
        target = tg if 2 * tg.k == tg.n else build_token_graph(tg.base, tg.n - tg.k)
    forward = tuple(target.rank(full ^ m) for m in tg.masks)
    backward = [0] * len(forward)
    for r, s in enumerate(forward):
        backward[s] = r
    g, h = tg.graph, target.graph
    for u in range(g.n):
        row = 0
        for w in g.neighbors[u]:
            row |= 1 << forward[w]
        if row != h.adj[forward[u]]:
            raise ContractViolation(f"complement map is not an isomorphism at {tg.label(u)}")
    return ComplementMap(tg, target, forward, tuple(backward))


@dataclass(frozen=True)
class DeletionReport:
    """F_k(G - X) built directly versus F_k(G) with every subset meeting X
    removed.  ``witness[r]`` sends rank ``r`` of ``direct`` to the matching
    vertex of ``projected``."""

    direct: TokenGraph
    projected: Graph
    projected_index: tuple[int, ...]
    witness: tuple[int, ...]
    isomorphic: bool


def delete_and_project(tg: TokenGraph, xs: Iterable[int]) -> DeletionReport:
    xs = sorted(set(xs))
    for x in xs:
        if not 0 <= x < tg.n:
            raise ParameterError(f"vertex {x} out of range 0..{tg.n - 1}")
    keep = [v for v in range(tg.n) if v not in set(xs)]
    if len(keep) < tg.k:
        raise ParameterError(f"{len(keep)} surviving vertices cannot carry F_{tg.k}")
    direct = _build(delete_vertices(tg.base, xs), tg.k)
    gone = mask_of(xs)
    survivors = [r for r, m in enumerate(tg.masks) if not m & gone]
    projected, index = induced_subgraph(tg.graph, survivors)
    pos = {r: i for i, r in enumerate(index)}
    witness = tuple(pos[tg.rank(mask_of(keep[v] for v in _bits(m)))] for m in direct.masks)
    ok = len(witness) == projected.n
    if ok:
        for u in range(direct.order):
            row = 0
            for w in direct.graph.neighbors[u]:
                row |= 1 << witness[w]
            if row != projected.adj[witness[u]]:
                ok = False
                break
    return DeletionReport(direct, projected, index, witness, ok)
