"""Distances in F_k(P_n).

With both vertices written as ascending tuples, the distance is the L1
distance of the tuples.  ``bfs_distance`` and ``all_pairs_bfs`` compute the
same thing by search and serve as the oracle.
"""
from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from .errors import DisconnectedError, ParameterError
from .tokens import TokenGraph


def sorted_tuple(values: Iterable[int], n: int | None = None) -> tuple[int, ...]:
    """Validate 1-based labels and return them in ascending order."""
    out = tuple(sorted(int(v) for v in values))
    if len(set(out)) != len(out):
        raise ParameterError(f"repeated label in {out}")
    if out and out[0] < 1:
        raise ParameterError(f"labels are 1-based, got {out}")
    if n is not None and out and out[-1] > n:
        raise ParameterError(f"label {out[-1]} exceeds n={n}")
    return out


def token_path_distance(u: Sequence[int], v: Sequence[int], n: int | None = None) -> int:
    u, v = sorted_tuple(u, n), sorted_tuple(v, n)
    if len(u) != len(v):
        raise ParameterError(f"token counts differ: {len(u)} vs {len(v)}")
    return sum(abs(b - a) for a, b in zip(u, v))


def bfs_distance(tg: TokenGraph, a: int, b: int) -> int:
    """Shortest-path length between ranks ``a`` and ``b``."""
    if a == b:
        return 0
    nbrs = tg.graph.neighbors
    dist = {a: 0}
    queue = [a]
    for x in queue:
        for y in nbrs[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                if y == b:
                    return dist[y]
                queue.append(y)
    raise DisconnectedError(f"{tg.label(b)} is unreachable from {tg.label(a)}")


def all_pairs_bfs(tg: TokenGraph) -> np.ndarray:
    """Integer distance matrix of the token graph (breadth-first search)."""
    g = tg.graph
    rows = [u for u in range(g.n) for _ in g.neighbors[u]]
    cols = [w for u in range(g.n) for w in g.neighbors[u]]
    m = csr_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(g.n, g.n))
    d = shortest_path(m, method="D", directed=False, unweighted=True)
    if np.isinf(d).any():
        raise DisconnectedError("token graph is disconnected")
    return d.astype(np.int64)


def all_pairs_formula(tg: TokenGraph) -> np.ndarray:
    """The closed-form distance for every pair of ranks."""
    pos = np.array([tg.subset(r) for r in range(tg.order)], dtype=np.int64).reshape(tg.order, tg.k)
    out = np.zeros((tg.order, tg.order), dtype=np.int64)
    for i in range(tg.k):
        col = pos[:, i]
        out += np.abs(col[:, None] - col[None, :])
    return out


def distance_mismatches(tg: TokenGraph) -> int:
    """Number of ordered pairs where formula and BFS disagree."""
    return int((all_pairs_formula(tg) != all_pairs_bfs(tg)).sum())
