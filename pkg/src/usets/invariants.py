"""Conjugacy-class invariants of a permutation group.

For a finite group G with distinct class sizes n_1 < n_2 < ... the
objects computed here are:

* the class size multiset cs(G) and the ascending distinct-size vector
  V(G), whose length minus one is the *conjugate type rank*;
* u(n) = number of elements whose class has size n, equal to n times the
  number of classes of that size;
* the same-size class set U(G) = set of distinct u(n) values (distinct
  sizes can share a count, so U may be smaller than the size vector);
* the prime divisor set of |G|.

Classes are found by enumerating all elements and growing conjugation
orbits under the generators, which is exact and fast at the scales this
package targets; there is no centralizer backtracking.  Output order is
canonical (by size, then by a minimal representative), independent of
the order in which generators were supplied.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Mapping

from .patterns import prime_factors
from .perm import DEFAULT_ELEMENT_CAP, GroupTooLargeError, PermGroup, Permutation, _inverse


@dataclass(frozen=True)
class ConjClass:
    representative: Permutation  # minimal class member in image-tuple order
    size: int
    element_order: int


@dataclass(frozen=True)
class InvariantProfile:
    group_order: int
    class_sizes: tuple[int, ...]   # one entry per class, ascending
    V: tuple[int, ...]             # distinct sizes, ascending
    rank: int                      # len(V) - 1
    class_count: int               # number of conjugacy classes
    u_map: Mapping[int, int]       # class size -> element count u(size)
    U: frozenset[int]              # distinct u values
    pi: frozenset[int]             # primes dividing the group order

    def u_multiset(self) -> tuple[int, ...]:
        """All u values, one per distinct size, ascending; sums to |G|."""
        return tuple(self.u_map[n] for n in self.V)

    def as_dict(self) -> dict:
        """Serializable form with stable field names."""
        return {
            "order": self.group_order,
            "class_sizes": list(self.class_sizes),
            "V": list(self.V),
            "rank": self.rank,
            "class_count": self.class_count,
            "u_map": {str(n): self.u_map[n] for n in self.V},
            "U": sorted(self.U),
            "pi": sorted(self.pi),
        }


def conjugacy_classes(group: PermGroup,
                      cap: int = DEFAULT_ELEMENT_CAP) -> list[ConjClass]:
    """All conjugacy classes, sorted by (size, representative images)."""
    elems = group._element_images(cap)
    index = {t: i for i, t in enumerate(elems)}
    gen_pairs = [(g, _inverse(g)) for g in group._raw_generators()]
    visited = bytearray(len(elems))
    found = []
    for i, start in enumerate(elems):
        if visited[i]:
            continue
        visited[i] = 1
        size = 1
        rep = start
        layer = [start]
        while layer:
            new_elems = []
            for x in layer:
                for g, ginv in gen_pairs:
                    y = tuple(g[x[b]] for b in ginv)  # conjugate of x by g
                    j = index[y]
                    if not visited[j]:
                        visited[j] = 1
                        new_elems.append(y)
                        if y < rep:
                            rep = y
            size += len(new_elems)
            layer = new_elems
        found.append((size, rep))
    found.sort()
    return [ConjClass(Permutation._wrap(rep), size, Permutation._wrap(rep).order())
            for size, rep in found]


def profile(group: PermGroup, cap: int = DEFAULT_ELEMENT_CAP) -> InvariantProfile:
    """The full invariant profile; see the module docstring."""
    classes = conjugacy_classes(group, cap)
    sizes = tuple(c.size for c in classes)
    order = group.order()
    counts = Counter(sizes)
    distinct = tuple(sorted(counts))
    u_map = {n: n * counts[n] for n in distinct}
    return InvariantProfile(
        group_order=order,
        class_sizes=sizes,
        V=distinct,
        rank=len(distinct) - 1,
        class_count=len(classes),
        u_map=u_map,
        U=frozenset(u_map.values()),
        pi=frozenset(prime_factors(order)),
    )


def conjugate_type_rank(prof: InvariantProfile) -> int:
    """Number of distinct class sizes minus one."""
    return prof.rank


def centralizer_count(group: PermGroup, cap: int = 10_000) -> int:
    """Number of distinct centralizer subgroups {C(x) : x in G}.

    Computed by brute force: each centralizer is fingerprinted as the set
    of commuting element indices.  Desk-scale only, hence the low default
    cap.
    """
    order = group.order()
    if order > cap:
        raise GroupTooLargeError(
            f"group of order {order} exceeds the centralizer-count cap {cap}")
    elems = group._element_images(cap)
    points = range(group.degree)
    fingerprints = set()
    for x in elems:
        fingerprints.add(frozenset(
            i for i, y in enumerate(elems)
            if all(x[y[b]] == y[x[b]] for b in points)))
    return len(fingerprints)
