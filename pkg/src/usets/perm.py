"""Permutation algebra and deterministic Schreier-Sims machinery.

Conventions used throughout the package:

* Points are 0-based; a degree-n permutation acts on {0, ..., n-1}.
  Cycle notation is 1-based at I/O boundaries only (catalog data files,
  CLI output).
* Composition applies the left factor first: ``(a * b)(x) == b(a(x))``,
  i.e. ``(a * b).images[i] == b.images[a.images[i]]``.
* Everything is deterministic.  Base points are the smallest moved point
  at the time a stabilizer level is created, orbits are explored with
  ascending frontiers, and element enumeration is a breadth-first walk
  of the Cayley graph that emits each layer in sorted order, so repeated
  runs (and runs with reordered generating sets) produce identical
  output.

The groups handled here are small (the largest the test-suite touches
has order 1 814 400), so the algorithms favour clarity and
reproducibility over asymptotics: no randomized sifting, no Monte Carlo
variants.
"""

from __future__ import annotations

import math
from typing import Iterable, Iterator, Sequence

#: Default ceiling for full element enumeration.  Large enough for every
#: group shipped in the catalog (A10 at 1 814 400 is the biggest).
DEFAULT_ELEMENT_CAP = 2_000_000

RawPerm = tuple  # image tuple; internal fast representation


class GroupTooLargeError(ValueError):
    """An enumeration would exceed the configured element cap."""


def _identity(degree: int) -> RawPerm:
    return tuple(range(degree))


def _compose(a: RawPerm, b: RawPerm) -> RawPerm:
    # apply a first, then b
    return tuple(b[x] for x in a)


def _inverse(a: RawPerm) -> RawPerm:
    inv = [0] * len(a)
    for i, j in enumerate(a):
        inv[j] = i
    return tuple(inv)


class Permutation:
    """An element of a finite symmetric group, stored as its image tuple."""

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        imgs = tuple(images)
        n = len(imgs)
        seen = bytearray(n)
        for x in imgs:
            if not (isinstance(x, int) and 0 <= x < n) or seen[x]:
                raise ValueError(f"images {imgs!r} are not a bijection on 0..{n - 1}")
            seen[x] = 1
        self.images = imgs

    @classmethod
    def _wrap(cls, images: RawPerm) -> "Permutation":
        """Wrap an already-validated image tuple (internal fast path)."""
        p = object.__new__(cls)
        p.images = images
        return p

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls._wrap(_identity(degree))

    @classmethod
    def from_cycles(cls, degree: int, *cycles: Sequence[int]) -> "Permutation":
        """Build a permutation from disjoint 0-based cycles."""
        images = list(range(degree))
        seen: set[int] = set()
        for cycle in cycles:
            for pt in cycle:
                if not 0 <= pt < degree:
                    raise ValueError(f"point {pt} out of range for degree {degree}")
                if pt in seen:
                    raise ValueError(f"point {pt} appears in more than one cycle")
                seen.add(pt)
            for i, pt in enumerate(cycle):
                images[pt] = cycle[(i + 1) % len(cycle)]
        return cls._wrap(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __mul__(self, other: "Permutation") -> "Permutation":
        if not isinstance(other, Permutation):
            return NotImplemented
        if len(self.images) != len(other.images):
            raise ValueError("cannot compose permutations of different degree")
        return Permutation._wrap(_compose(self.images, other.images))

    def inverse(self) -> "Permutation":
        return Permutation._wrap(_inverse(self.images))

    def __pow__(self, n: int) -> "Permutation":
        if n < 0:
            return self.inverse() ** (-n)
        result = _identity(len(self.images))
        base = self.images
        while n:
            if n & 1:
                result = _compose(result, base)
            base = _compose(base, base)
            n >>= 1
        return Permutation._wrap(result)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Nontrivial cycles, 0-based, each starting at its smallest point."""
        seen = bytearray(len(self.images))
        out = []
        for start in range(len(self.images)):
            if seen[start] or self.images[start] == start:
                continue
            cycle = [start]
            seen[start] = 1
            pt = self.images[start]
            while pt != start:
                seen[pt] = 1
                cycle.append(pt)
                pt = self.images[pt]
            out.append(tuple(cycle))
        return tuple(out)

    def cycle_string(self) -> str:
        """Disjoint cycle notation with 1-based points, e.g. ``(1,2)(3,4,5)``."""
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + ",".join(str(pt + 1) for pt in c) + ")" for c in cycles)

    def order(self) -> int:
        lengths = [len(c) for c in self.cycles()]
        return math.lcm(*lengths) if lengths else 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images == other.images

    def __lt__(self, other: "Permutation") -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images < other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)!r})"

    def __str__(self) -> str:
        return self.cycle_string()


def compose(a: Permutation, b: Permutation) -> Permutation:
    """Apply ``a`` first, then ``b``."""
    return a * b


def inverse(a: Permutation) -> Permutation:
    return a.inverse()


class BSGS:
    """Base and strong generating set with per-level orbit transversals.

    ``transversal(i)`` maps each point gamma of the i-th basic orbit to a
    coset representative u with ``u.images[base[i]] == gamma``.
    """

    __slots__ = ("degree", "base", "_level_gens", "_transversals")

    def __init__(self, degree: int, base: list[int],
                 level_gens: list[list[RawPerm]],
                 transversals: list[dict[int, RawPerm]]):
        self.degree = degree
        self.base = tuple(base)
        self._level_gens = level_gens
        self._transversals = transversals

    def order(self) -> int:
        n = 1
        for trans in self._transversals:
            n *= len(trans)
        return n

    @property
    def basic_orbits(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(sorted(t)) for t in self._transversals)

    @property
    def strong_generators(self) -> list[Permutation]:
        seen: set[RawPerm] = set()
        out = []
        for gens in self._level_gens:
            for g in gens:
                if g not in seen:
                    seen.add(g)
                    out.append(Permutation._wrap(g))
        return out

    def transversal(self, level: int) -> dict[int, Permutation]:
        return {pt: Permutation._wrap(u) for pt, u in sorted(self._transversals[level].items())}

    def sift(self, images: RawPerm) -> RawPerm:
        """Strip transversal factors; the residue is the identity iff the
        permutation belongs to the group."""
        g = images
        for pt, trans in zip(self.base, self._transversals):
            gamma = g[pt]
            u = trans.get(gamma)
            if u is None:
                return g
            g = _compose(g, _inverse(u))
        return g

    def contains_images(self, images: RawPerm) -> bool:
        residue = self.sift(images)
        return all(i == j for i, j in enumerate(residue))


def _schreier_sims(raw_gens: Sequence[RawPerm], degree: int) -> BSGS:
    """Deterministic Schreier-Sims with full Schreier-generator closure.

    The generating set of the stabilizer subgroup at level i is the union
    of the generators stored at level i and all deeper levels.  Inserting
    a new group element re-closes every level from its resting place back
    up to the insertion level: orbits are rebuilt and all Schreier
    generators are sifted again, with nontrivial residues recursively
    inserted one level further down.
    """
    ident = _identity(degree)
    base: list[int] = []
    level_gens: list[list[RawPerm]] = []
    transversals: list[dict[int, RawPerm]] = []

    def gens_at(i: int) -> list[RawPerm]:
        return [g for lvl in level_gens[i:] for g in lvl]

    def new_level(g: RawPerm) -> None:
        pt = min(x for x in range(degree) if g[x] != x)
        base.append(pt)
        level_gens.append([])
        transversals.append({pt: ident})

    def rebuild_transversal(i: int) -> None:
        pt = base[i]
        trans = {pt: ident}
        frontier = [pt]
        gens = gens_at(i)
        while frontier:
            new_pts = []
            for gamma in frontier:
                u = trans[gamma]
                for s in gens:
                    delta = s[gamma]
                    if delta not in trans:
                        trans[delta] = _compose(u, s)
                        new_pts.append(delta)
            frontier = sorted(new_pts)
        transversals[i] = trans

    def sift_from(g: RawPerm, i: int) -> tuple[RawPerm, int]:
        for j in range(i, len(base)):
            gamma = g[base[j]]
            u = transversals[j].get(gamma)
            if u is None:
                return g, j
            g = _compose(g, _inverse(u))
        return g, len(base)

    def add_nonmember(i: int, g: RawPerm) -> None:
        # pre: g != identity, g fixes base[:i], g is not in the level-i
        # group, and every level deeper than i is closed
        if i == len(base):
            new_level(g)
        if g[base[i]] == base[i]:
            add_nonmember(i + 1, g)
        else:
            level_gens[i].append(g)
        rebuild_transversal(i)
        trans = transversals[i]
        gens = gens_at(i)
        for gamma in sorted(trans):
            u = trans[gamma]
            for s in gens:
                delta = s[gamma]
                schreier = _compose(_compose(u, s), _inverse(trans[delta]))
                if schreier == ident:
                    continue
                residue, _ = sift_from(schreier, i + 1)
                if residue != ident:
                    add_nonmember(i + 1, residue)

    first = min((min(x for x in range(degree) if g[x] != x)
                 for g in raw_gens if g != ident), default=degree)
    if first < degree:
        base.append(first)
        level_gens.append([])
        transversals.append({first: ident})
    for g in raw_gens:
        residue, _ = sift_from(g, 0)
        if residue != ident:
            add_nonmember(0, residue)
    return BSGS(degree, base, level_gens, transversals)


class PermGroup:
    """A permutation group defined by its generators.

    The base-and-strong-generating-set structure is built lazily on first
    use and cached; groups are immutable once constructed and safe to
    share.
    """

    __slots__ = ("degree", "generators", "_bsgs")

    def __init__(self, generators: Iterable[Permutation | Iterable[int]]):
        gens = tuple(g if isinstance(g, Permutation) else Permutation(g)
                     for g in generators)
        if not gens:
            raise ValueError("a group needs at least one generator")
        degrees = {g.degree for g in gens}
        if len(degrees) != 1:
            raise ValueError(f"generators have mixed degrees {sorted(degrees)}")
        self.degree = degrees.pop()
        self.generators = gens
        self._bsgs: BSGS | None = None

    @property
    def bsgs(self) -> BSGS:
        if self._bsgs is None:
            self._bsgs = _schreier_sims([g.images for g in self.generators], self.degree)
        return self._bsgs

    def order(self) -> int:
        return self.bsgs.order()

    def orbit(self, point: int) -> tuple[int, ...]:
        """Orbit of a point under the group, as a sorted tuple."""
        if not 0 <= point < self.degree:
            raise ValueError(f"point {point} out of range for degree {self.degree}")
        gens = self._raw_generators()
        seen = {point}
        frontier = [point]
        while frontier:
            new_pts = []
            for pt in frontier:
                for g in gens:
                    img = g[pt]
                    if img not in seen:
                        seen.add(img)
                        new_pts.append(img)
            frontier = sorted(new_pts)
        return tuple(sorted(seen))

    def contains(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            raise ValueError("degree mismatch")
        return self.bsgs.contains_images(p.images)

    def __contains__(self, p: Permutation) -> bool:
        return self.contains(p)

    def _raw_generators(self) -> tuple[RawPerm, ...]:
        """Deduplicated, sorted image tuples with the identity dropped.

        Sorting makes every generator-driven walk independent of the
        order in which generators were supplied.
        """
        ident = _identity(self.degree)
        return tuple(sorted({g.images for g in self.generators} - {ident}))

    def _element_images(self, limit: int = DEFAULT_ELEMENT_CAP) -> list[RawPerm]:
        n = self.order()
        if n > limit:
            raise GroupTooLargeError(
                f"group of order {n} exceeds the enumeration limit {limit}")
        gens = self._raw_generators()
        start = _identity(self.degree)
        seen = {start}
        out = [start]
        layer = [start]
        while layer:
            new_elems = []
            for x in layer:
                for s in gens:
                    y = _compose(x, s)
                    if y not in seen:
                        seen.add(y)
                        new_elems.append(y)
            new_elems.sort()
            out.extend(new_elems)
            layer = new_elems
        if len(out) != n:
            raise RuntimeError(
                f"enumeration produced {len(out)} elements, BSGS order is {n}")
        return out

    def elements(self, limit: int = DEFAULT_ELEMENT_CAP) -> list[Permutation]:
        """All group elements, breadth-first over the Cayley graph with each
        layer sorted; raises :class:`GroupTooLargeError` above ``limit``."""
        return [Permutation._wrap(t) for t in self._element_images(limit)]

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.elements())

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, generators={len(self.generators)})"
