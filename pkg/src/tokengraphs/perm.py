"""Permutations as image tables and permutation groups given by generators.

Group order and membership come from a stabilizer chain (deterministic
Schreier-Sims with explicit transversals).  Composition convention:
``(a * b)(i) == a(b(i))``, i.e. ``b`` acts first.
"""
from __future__ import annotations

import json
from functools import reduce
from math import lcm
from typing import Iterable, Iterator, Sequence

from .errors import ElementCapError, ParameterError

Image = tuple[int, ...]


def _mul(a: Image, b: Image) -> Image:
    return tuple(a[i] for i in b)


def _inv(a: Image) -> Image:
    out = [0] * len(a)
    for i, j in enumerate(a):
        out[j] = i
    return tuple(out)


def _is_id(a: Image) -> bool:
    return all(i == j for i, j in enumerate(a))


class Permutation:
    """A bijection of ``0..m-1`` stored as ``image[i] = sigma(i)``."""

    __slots__ = ("image",)

    def __init__(self, image: Iterable[int]):
        image = tuple(int(x) for x in image)
        if sorted(image) != list(range(len(image))):
            raise ParameterError(f"not a permutation of 0..{len(image) - 1}: {image}")
        self.image = image

    @classmethod
    def _trusted(cls, image: Image) -> "Permutation":
        p = object.__new__(cls)
        p.image = image
        return p

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls._trusted(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]], one_based: bool = False) -> "Permutation":
        img = list(range(degree))
        shift = 1 if one_based else 0
        seen = set()
        for cyc in cycles:
            pts = [c - shift for c in cyc]
            for p in pts:
                if not 0 <= p < degree or p in seen:
                    raise ParameterError(f"bad cycle {tuple(cyc)} for degree {degree}")
                seen.add(p)
            for a, b in zip(pts, pts[1:] + pts[:1]):
                img[a] = b
        return cls._trusted(tuple(img))

    @property
    def degree(self) -> int:
        return len(self.image)

    def __call__(self, i: int) -> int:
        return self.image[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if other.degree != self.degree:
            raise ParameterError(f"degree mismatch: {self.degree} vs {other.degree}")
        return Permutation._trusted(_mul(self.image, other.image))

    def inverse(self) -> "Permutation":
        return Permutation._trusted(_inv(self.image))

    def is_identity(self) -> bool:
        return _is_id(self.image)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self.image == other.image

    def __lt__(self, other: "Permutation") -> bool:
        return self.image < other.image

    def __hash__(self) -> int:
        return hash(self.image)

    def __repr__(self) -> str:
        return f"Permutation({self.cycle_notation(one_based=False)}, degree={self.degree})"

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point."""
        seen = [False] * self.degree
        out = []
        for i in range(self.degree):
            if seen[i] or self.image[i] == i:
                continue
            cyc = [i]
            seen[i] = True
            j = self.image[i]
            while j != i:
                seen[j] = True
                cyc.append(j)
                j = self.image[j]
            out.append(tuple(cyc))
        return out

    def cycle_notation(self, one_based: bool = True, labels: Sequence[str] | None = None) -> str:
        """``(1, 7)(2, 6)(3, 5)``; the identity prints as ``()``."""
        cyc = self.cycles()
        if not cyc:
            return "()"
        if labels is not None:
            name = lambda i: labels[i]  # noqa: E731
        else:
            name = lambda i: str(i + 1 if one_based else i)  # noqa: E731
        return "".join("(" + ", ".join(name(i) for i in c) + ")" for c in cyc)

    def order(self) -> int:
        return reduce(lcm, (len(c) for c in self.cycles()), 1)

    def fixed_points(self) -> list[int]:
        return [i for i, j in enumerate(self.image) if i == j]


# -- stabilizer chain -------------------------------------------------------


class _Chain:
    """Base, strong generators and one transversal per base point.

    ``trans[l][p]`` maps ``base[l]`` to ``p`` and fixes ``base[:l]``.
    """

    def __init__(self, degree: int, gens: Sequence[Image], prefix: Sequence[int] = ()):
        self.degree = degree
        self.base: list[int] = list(prefix)
        strong: list[Image] = []
        for g in gens:
            if _is_id(g) or g in strong:
                continue
            strong.append(g)
            if all(g[b] == b for b in self.base):
                self.base.append(next(i for i in range(degree) if g[i] != i))
        # gens[l] generates the stabilizer of base[:l] once the chain is complete
        self.gens: list[list[Image]] = [
            [s for s in strong if all(s[b] == b for b in self.base[:l])] for l in range(len(self.base))
        ]
        self.trans: list[dict[int, Image]] = [self._orbit(l) for l in range(len(self.base))]
        self._schreier_sims()

    def _orbit(self, l: int) -> dict[int, Image]:
        b = self.base[l]
        gens = self.gens[l]
        trans = {b: tuple(range(self.degree))}
        queue = [b]
        for p in queue:
            u = trans[p]
            for s in gens:
                q = s[p]
                if q not in trans:
                    trans[q] = _mul(s, u)
                    queue.append(q)
        return trans

    def strip(self, g: Image, start: int = 0) -> tuple[Image, int]:
        """Sift ``g`` through levels ``start..``.  Returns the residue and
        the level where sifting stopped (``len(base)`` if it got through)."""
        for l in range(start, len(self.base)):
            p = g[self.base[l]]
            u = self.trans[l].get(p)
            if u is None:
                return g, l
            g = _mul(_inv(u), g)
        return g, len(self.base)

    def _schreier_sims(self) -> None:
        i = len(self.base) - 1
        while i >= 0:
            restart = False
            for p, u in list(self.trans[i].items()):
                for s in self.gens[i]:
                    sg = _mul(_inv(self.trans[i][s[p]]), _mul(s, u))
                    if _is_id(sg):
                        continue
                    h, j = self.strip(sg, i + 1)
                    if _is_id(h):
                        continue
                    if j == len(self.base):
                        self.base.append(next(x for x in range(self.degree) if h[x] != x))
                        self.gens.append([])
                        self.trans.append({})
                    for l in range(i + 1, j + 1):
                        self.gens[l].append(h)
                        self.trans[l] = self._orbit(l)
                    i = j
                    restart = True
                    break
                if restart:
                    break
            if not restart:
                i -= 1

    @property
    def strong(self) -> list[Image]:
        out: list[Image] = []
        for level in self.gens:
            for s in level:
                if s not in out:
                    out.append(s)
        return out

    def order(self) -> int:
        out = 1
        for t in self.trans:
            out *= len(t)
        return out

    def contains(self, g: Image) -> bool:
        h, _ = self.strip(g)
        return _is_id(h)


class PermGroup:
    """The group generated by ``generators`` acting on ``0..degree-1``."""

    def __init__(self, degree: int, generators: Iterable[Permutation | Sequence[int]] = ()):
        gens = []
        for g in generators:
            g = g if isinstance(g, Permutation) else Permutation(g)
            if g.degree != degree:
                raise ParameterError(f"generator of degree {g.degree} in a group of degree {degree}")
            gens.append(g)
        self.degree = degree
        self.generators: tuple[Permutation, ...] = tuple(gens)
        self._chain: _Chain | None = None

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, generators={len(self.generators)})"

    @property
    def chain(self) -> _Chain:
        if self._chain is None:
            self._chain = _Chain(self.degree, [g.image for g in self.generators])
        return self._chain

    @property
    def base(self) -> tuple[int, ...]:
        return tuple(self.chain.base)

    def order(self) -> int:
        return self.chain.order()

    def _check(self, sigma: Permutation) -> None:
        if sigma.degree != self.degree:
            raise ParameterError(f"permutation of degree {sigma.degree} vs group of degree {self.degree}")

    def _check_point(self, v: int) -> None:
        if not 0 <= v < self.degree:
            raise ParameterError(f"point {v} out of range 0..{self.degree - 1}")

    def __contains__(self, sigma: Permutation) -> bool:
        self._check(sigma)
        return self.chain.contains(sigma.image)

    def contains(self, sigma: Permutation) -> bool:
        return sigma in self

    def orbit(self, v: int) -> set[int]:
        self._check_point(v)
        seen = {v}
        queue = [v]
        for p in queue:
            for g in self.generators:
                q = g.image[p]
                if q not in seen:
                    seen.add(q)
                    queue.append(q)
        return seen

    def orbits(self) -> list[list[int]]:
        """Orbit partition, each orbit sorted, orbits ordered by least point."""
        done = [False] * self.degree
        out = []
        for v in range(self.degree):
            if not done[v]:
                orb = sorted(self.orbit(v))
                for p in orb:
                    done[p] = True
                out.append(orb)
        return out

    def stabilizer(self, v: int) -> "PermGroup":
        self._check_point(v)
        chain = _Chain(self.degree, [g.image for g in self.generators], prefix=(v,))
        gens = sorted(Permutation._trusted(s) for s in chain.strong if s[v] == v)
        return PermGroup(self.degree, gens)

    def extend_by(self, sigma: Permutation) -> "PermGroup":
        self._check(sigma)
        return PermGroup(self.degree, self.generators + (sigma,))

    def equals(self, other: "PermGroup") -> bool:
        if other.degree != self.degree:
            raise ParameterError(f"degree mismatch: {self.degree} vs {other.degree}")
        if self.order() != other.order():
            return False
        return all(g in self for g in other.generators) and all(g in other for g in self.generators)

    def elements(self, cap: int | None = None) -> Iterator[Permutation]:
        """Every element, by breadth-first closure over the generators.
        Independent of the stabilizer chain.  Raises ElementCapError once
        more than ``cap`` elements have been produced."""
        ident = tuple(range(self.degree))
        seen = {ident}
        queue = [ident]
        gens = [g.image for g in self.generators]
        for x in queue:
            yield Permutation._trusted(x)
            for g in gens:
                y = _mul(g, x)
                if y not in seen:
                    if cap is not None and len(seen) >= cap:
                        raise ElementCapError(f"group has more than {cap} elements")
                    seen.add(y)
                    queue.append(y)

    def to_json(self) -> str:
        return json.dumps([list(g.image) for g in self.generators])

    @classmethod
    def from_json(cls, text: str, degree: int | None = None) -> "PermGroup":
        data = json.loads(text)
        if not isinstance(data, list) or not all(isinstance(g, list) for g in data):
            raise ParameterError("expected a JSON array of image tables")
        if degree is None:
            if not data:
                raise ParameterError("degree is required for an empty generator list")
            degree = len(data[0])
        return cls(degree, data)


def closure_order(group: PermGroup, cap: int | None = None) -> int:
    """Order by brute-force enumeration (the oracle for ``group_order``)."""
    return sum(1 for _ in group.elements(cap))


def group_order(g: PermGroup) -> int:
    return g.order()


def orbit(g: PermGroup, v: int) -> set[int]:
    return g.orbit(v)


def stabilizer(g: PermGroup, v: int) -> PermGroup:
    return g.stabilizer(v)


def contains(g: PermGroup, sigma: Permutation) -> bool:
    return g.contains(sigma)


def groups_equal(a: PermGroup, b: PermGroup) -> bool:
    return a.equals(b)


def extend_by(g: PermGroup, sigma: Permutation) -> PermGroup:
    return g.extend_by(sigma)
