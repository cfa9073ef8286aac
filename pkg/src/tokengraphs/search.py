"""Automorphism groups by individualization-refinement with backtracking,
plus the two distinguished automorphism families of token graphs: maps
induced by base automorphisms, and the complement involution A -> V \\ A.

The search walks the leftmost path of the search tree (always individualizing
the least vertex of the first non-singleton cell) and then, deepest level
first, tries to map each base point onto every other vertex of its cell that
is not already in its orbit under the generators found so far.  Each
successful attempt contributes one generator; the generators found at and
below a level generate the full pointwise stabilizer of the earlier base
points, so the result is the whole automorphism group.
"""
from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations
from typing import Sequence

import numpy as np

from .errors import CapacityError, ContractViolation, ElementCapError, ParameterError, SearchTimeout
from .graph import Graph
from .perm import Permutation, PermGroup
from .tokens import TokenGraph, complement_relabel, max_token_order


@dataclass(frozen=True)
class SearchConfig:
    """Knobs for :func:`find_automorphism_group`.

    refinement_rounds: cap on refinement iterations after each
        individualization; ``None`` refines to a stable partition, ``0``
        keeps the plain degree partition.
    parallel: explore the top-level branches in worker processes.
    element_cap: limit for full enumeration in verify mode.
    verify: re-count the group by plain backtracking (no refinement) and
        fail loudly if the two counts differ.
    time_limit: seconds before the search gives up with SearchTimeout.
    """

    refinement_rounds: int | None = None
    parallel: bool = False
    element_cap: int = 100_000
    verify: bool = False
    time_limit: float | None = None

    def __post_init__(self):
        if self.element_cap < 1:
            raise ParameterError("element_cap must be >= 1")
        if self.refinement_rounds is not None and self.refinement_rounds < 0:
            raise ParameterError("refinement_rounds must be >= 0 or None")


# -- partition refinement ---------------------------------------------------


def _rerank(keys: Sequence) -> tuple[list[int], list]:
    distinct = sorted(set(keys))
    idx = {k: i for i, k in enumerate(distinct)}
    return [idx[k] for k in keys], distinct


def _degree_colors(g: Graph) -> tuple[list[int], tuple]:
    colors, _ = _rerank(g.degrees())
    return colors, (tuple(sorted(g.degrees())),)


def _refine(nbrs, colors: list[int], rounds: int | None) -> tuple[list[int], tuple]:
    """Split cells by the multiset of neighbour colours until stable (or
    ``rounds`` times).  Returns the new colouring and a trace that is
    equal for two colourings exactly when they refined the same way."""
    trace = []
    ncol = max(colors) + 1 if colors else 0
    done = 0
    while rounds is None or done < rounds:
        sig = [(colors[v], tuple(sorted([colors[u] for u in nb]))) for v, nb in enumerate(nbrs)]
        new, keys = _rerank(sig)
        trace.append(tuple(keys))
        if len(keys) == ncol:
            break
        colors, ncol = new, len(keys)
        done += 1
    return colors, tuple(trace)


def _individualize(colors: list[int], v: int) -> list[int]:
    return _rerank([2 * c + (u != v) for u, c in enumerate(colors)])[0]


def _first_cell(colors: list[int]) -> list[int] | None:
    """Vertices of the first non-singleton cell, ascending; None if discrete."""
    if not colors:
        return None
    count = [0] * (max(colors) + 1)
    for c in colors:
        count[c] += 1
    for c, size in enumerate(count):
        if size > 1:
            return [v for v, cv in enumerate(colors) if cv == c]
    return None


class _Matcher:
    """Finds one isomorphism from ``g`` to ``h`` that respects a pair of
    equitable colourings, by individualizing matching cells on both sides."""

    def __init__(self, g: Graph, h: Graph, rounds: int | None, deadline: float | None = None):
        self.g, self.h, self.rounds = g, h, rounds
        self.gn, self.hn = g.neighbors, h.neighbors
        self.deadline = deadline
        self.nodes = 0

    def extend(self, left: list[int], right: list[int]) -> tuple[int, ...] | None:
        self.nodes += 1
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise SearchTimeout("automorphism search ran out of time")
        cell = _first_cell(left)
        if cell is None:
            where = [0] * len(right)
            for w, c in enumerate(right):
                where[c] = w
            image = tuple(where[c] for c in left)
            return image if self._is_iso(image) else None
        color = left[cell[0]]
        v = cell[0]
        l2, tl = _refine(self.gn, _individualize(left, v), self.rounds)
        for w in (u for u, c in enumerate(right) if c == color):
            r2, tr = _refine(self.hn, _individualize(right, w), self.rounds)
            if tl != tr:
                continue
            found = self.extend(l2, r2)
            if found is not None:
                return found
        return None

    def _is_iso(self, image: tuple[int, ...]) -> bool:
        hadj = self.h.adj
        for u, nb in enumerate(self.gn):
            row = 0
            for w in nb:
                row |= 1 << image[w]
            if row != hadj[image[u]]:
                return False
        return True


def _check_capacity(g: Graph) -> None:
    if g.n > max_token_order():
        raise CapacityError(f"graph has {g.n} vertices; the search limit is {max_token_order()}")


def _try_map(args):
    """Worker entry point: can base point ``b`` go to ``c``?"""
    g, rounds, colors, b, c = args
    m = _Matcher(g, g, rounds)
    left, tl = _refine(g.neighbors, _individualize(colors, b), rounds)
    right, tr = _refine(g.neighbors, _individualize(colors, c), rounds)
    return m.extend(left, right) if tl == tr else None


class _Orbits:
    """Union-find over points; tracks orbits of the generators added so far."""

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def add(self, image: Sequence[int]) -> None:
        for i, j in enumerate(image):
            a, b = self.find(i), self.find(j)
            if a != b:
                self.parent[max(a, b)] = min(a, b)


def find_automorphism_group(g: Graph, cfg: SearchConfig | None = None) -> PermGroup:
    cfg = cfg or SearchConfig()
    _check_capacity(g)
    n = g.n
    rounds = cfg.refinement_rounds
    colors, _ = _degree_colors(g)
    colors, _ = _refine(g.neighbors, colors, rounds)

    path = []
    cur = colors
    while True:
        cell = _first_cell(cur)
        if cell is None:
            break
        path.append((cur, cell))
        cur, _ = _refine(g.neighbors, _individualize(cur, cell[0]), rounds)

    gens: list[tuple[int, ...]] = []
    orbits = _Orbits(n)
    deadline = None if cfg.time_limit is None else time.monotonic() + cfg.time_limit
    matcher = _Matcher(g, g, rounds, deadline)
    for level in range(len(path) - 1, -1, -1):
        colors, cell = path[level]
        b = cell[0]
        candidates = cell[1:]
        if cfg.parallel and level == 0 and len(candidates) > 1:
            with ProcessPoolExecutor() as pool:
                results = list(pool.map(_try_map, [(g, rounds, colors, b, c) for c in candidates]))
            for c, image in zip(candidates, results):
                if image is not None and orbits.find(c) != orbits.find(b):
                    gens.append(image)
                    orbits.add(image)
            continue
        left, tl = _refine(g.neighbors, _individualize(colors, b), rounds)
        for c in candidates:
            if orbits.find(c) == orbits.find(b):
                continue
            right, tr = _refine(g.neighbors, _individualize(colors, c), rounds)
            if tl != tr:
                continue
            image = matcher.extend(left, right)
            if image is not None:
                gens.append(image)
                orbits.add(image)

    for image in gens:
        if not g.is_automorphism(image):
            raise ContractViolation("search produced a map that does not preserve adjacency")
    group = PermGroup(n, sorted(Permutation(im) for im in gens))
    if cfg.verify:
        counted = count_automorphisms(g, cfg.element_cap)
        if counted != group.order():
            raise ContractViolation(f"search found order {group.order()}, enumeration found {counted}")
    return group


def find_isomorphism(g: Graph, h: Graph, rounds: int | None = None) -> Permutation | None:
    """An isomorphism ``g -> h`` as an image table, or None."""
    if g.n != h.n or sorted(g.degrees()) != sorted(h.degrees()):
        return None
    lc, _ = _degree_colors(g)
    rc, _ = _degree_colors(h)
    left, tl = _refine(g.neighbors, lc, rounds)
    right, tr = _refine(h.neighbors, rc, rounds)
    if tl != tr:
        return None
    image = _Matcher(g, h, rounds).extend(left, right)
    return None if image is None else Permutation(image)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return find_isomorphism(g, h) is not None


# -- independent oracles ----------------------------------------------------


def _bfs_order(g: Graph) -> list[int]:
    order, seen = [], [False] * g.n
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        queue = [s]
        for u in queue:
            order.append(u)
            for w in g.neighbors[u]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    return order


def enumerate_automorphisms(g: Graph, cap: int = 100_000) -> list[Permutation]:
    """Every automorphism, by plain vertex-by-vertex backtracking with no
    partition refinement.  Raises ElementCapError past ``cap`` elements."""
    n = g.n
    order = _bfs_order(g)
    pos = {v: i for i, v in enumerate(order)}
    # anchor[i]: an earlier-placed neighbour of order[i], if any
    anchor = []
    for i, v in enumerate(order):
        earlier = [u for u in g.neighbors[v] if pos[u] < i]
        anchor.append(min(earlier, key=pos.get) if earlier else None)
    deg = g.degrees()
    adj = g.adj
    image = [-1] * n
    used = [False] * n
    out: list[Permutation] = []

    def place(i: int) -> None:
        if i == n:
            if len(out) >= cap:
                raise ElementCapError(f"more than {cap} automorphisms")
            out.append(Permutation(image))
            return
        v = order[i]
        a = anchor[i]
        pool = g.neighbors[image[a]] if a is not None else range(n)
        for w in pool:
            if used[w] or deg[w] != deg[v]:
                continue
            ok = True
            for j in range(i):
                u = order[j]
                if (adj[v] >> u & 1) != (adj[w] >> image[u] & 1):
                    ok = False
                    break
            if not ok:
                continue
            image[v] = w
            used[w] = True
            place(i + 1)
            used[w] = False
            image[v] = -1

    place(0)
    return out


def count_automorphisms(g: Graph, cap: int = 100_000) -> int:
    return len(enumerate_automorphisms(g, cap))


def count_automorphisms_bruteforce(g: Graph) -> int:
    """Test all n! bijections at once with numpy.  Only for n <= 9."""
    n = g.n
    if n > 9:
        raise CapacityError("brute-force enumeration is limited to 9 vertices")
    if n == 0:
        return 1
    a = np.array([[g.has_edge(u, v) for v in range(n)] for u in range(n)], dtype=bool)
    perms = np.array(list(permutations(range(n))), dtype=np.intp)
    moved = a[perms[:, :, None], perms[:, None, :]]
    return int(np.all(moved == a, axis=(1, 2)).sum())


# -- token-graph automorphisms ----------------------------------------------


def induced_automorphism(theta: Permutation, tg: TokenGraph) -> Permutation:
    """f_theta: apply ``theta`` elementwise to every k-subset."""
    if theta.degree != tg.n:
        raise ParameterError(f"theta has degree {theta.degree}, base graph has {tg.n} vertices")
    if not tg.base.is_automorphism(theta.image):
        raise ContractViolation(f"{theta.cycle_notation()} is not an automorphism of the base graph")
    img = theta.image
    out = []
    for m in tg.masks:
        t = 0
        while m:
            low = m & -m
            t |= 1 << img[low.bit_length() - 1]
            m ^= low
        out.append(tg.rank(t))
    f = Permutation(out)
    if not tg.graph.is_automorphism(f.image):
        raise ContractViolation("induced map is not an automorphism of the token graph")
    return f


def induced_subgroup(base_aut: PermGroup, tg: TokenGraph) -> PermGroup:
    return PermGroup(tg.order, [induced_automorphism(t, tg) for t in base_aut.generators])


def complement_involution(tg: TokenGraph, induced: PermGroup | None = None) -> Permutation:
    """f_c on F_{n/2}: A -> V \\ A.

    Checked to be a fixed-point-free involutive automorphism lying outside
    the induced subgroup (computed from the base graph when not given).
    """
    if 2 * tg.k != tg.n:
        raise ParameterError(f"complement involution needs n = 2k, got n={tg.n}, k={tg.k}")
    fc = Permutation(complement_relabel(tg, tg).forward)
    if not (fc * fc).is_identity():
        raise ContractViolation("complement map is not an involution")
    if fc.fixed_points():
        raise ContractViolation("complement map has a fixed point")
    if induced is None:
        induced = induced_subgroup(find_automorphism_group(tg.base), tg)
    if fc in induced:
        raise ContractViolation("complement map is induced by a base automorphism")
    return fc


# -- reporting --------------------------------------------------------------


@dataclass
class AutomorphismReport:
    """Order, generators (cycle notation, 1-based or subset labels) and
    orbit partition.  ``seconds`` is only serialized on request so that
    repeated runs produce identical JSON."""

    order: int
    generators: list[str]
    orbits: list[list[str]]
    degree: int
    seconds: float = field(default=0.0, compare=False)

    def to_dict(self, timing: bool = False) -> dict:
        out = {
            "degree": self.degree,
            "order": self.order,
            "generators": self.generators,
            "orbits": self.orbits,
        }
        if timing:
            out["seconds"] = round(self.seconds, 6)
        return out

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing), indent=2, sort_keys=True)


def automorphism_report(g: Graph, cfg: SearchConfig | None = None,
                        labels: Sequence[str] | None = None) -> AutomorphismReport:
    start = time.perf_counter()
    group = find_automorphism_group(g, cfg)
    elapsed = time.perf_counter() - start
    name = (lambda v: labels[v]) if labels is not None else (lambda v: str(v + 1))
    return AutomorphismReport(
        order=group.order(),
        generators=[p.cycle_notation(labels=labels) for p in group.generators],
        orbits=[[name(v) for v in orb] for orb in group.orbits()],
        degree=g.n,
        seconds=elapsed,
    )
