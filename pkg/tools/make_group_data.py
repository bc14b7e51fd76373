#!/usr/bin/env python3
"""Regenerate the generator files shipped under src/usets/data.

Each group is built from first principles and double-checked before
anything is written:

* U3(3): the special unitary group SU(3,3) is generated by its unitary
  transvections (isotropic center v, twist λ with λ + λ^3 = 0); it acts
  faithfully on the 28 isotropic points of the Hermitian form
  H(u, v) = sum u_i v_i^3 over GF(9).  |SU(3,3)| = 6048 and its center
  is trivial, so the permutation image is U3(3) itself.
* U4(2): the symplectic group Sp(4,3) is generated by its symplectic
  transvections x -> x + c<x,v>v; it acts on the 40 points of PG(3,3)
  with kernel {+-I}, so the image is PSp(4,3) = U4(2) of order 25920.
* M11: the classical pair (an 11-cycle and a product of two 4-cycles).
  A transitive degree-11 group of order 7920 is M11, so the order check
  pins the group.

The full transvection generating sets are then reduced to two-element
generating sets (seeded random search, so reruns reproduce the same
files) to keep downstream element enumeration cheap.
"""

from __future__ import annotations

import random
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from usets.catalog import parse_generator_file, write_generator_file
from usets.construct import Matrix, projectivize
from usets.gf import FieldElement, field_create
from usets.invariants import profile
from usets.perm import PermGroup, Permutation

DATA_DIR = Path(__file__).resolve().parent.parent / "src" / "usets" / "data"


def two_generator_reduction(group: PermGroup, order: int, seed: int) -> PermGroup:
    """Find two elements generating the same group (seeded, reproducible)."""
    rng = random.Random(seed)
    gens = [g for g in group.generators if not g.is_identity()]

    def random_word() -> Permutation:
        w = Permutation.identity(group.degree)
        for _ in range(rng.randint(8, 20)):
            w = w * rng.choice(gens)
        return w

    for _ in range(200):
        a, b = random_word(), random_word()
        if a == b or a.is_identity() or b.is_identity():
            continue
        candidate = PermGroup([a, b])
        if candidate.order() == order:
            return candidate
    raise RuntimeError("no two-element generating set found")


def build_u3_3() -> PermGroup:
    spec = field_create(3, 2)  # GF(9), modulus x^2 + 1

    def conj(a: FieldElement) -> FieldElement:
        return a ** 3

    def herm(u, v) -> FieldElement:
        acc = spec.zero
        for x, y in zip(u, v):
            acc = acc + x * conj(y)
        return acc

    def normalize(vec):
        for x in vec:
            if x:
                inv = x.inverse()
                return tuple(y * inv for y in vec)
        raise ValueError("zero vector")

    # normalized isotropic points of the Hermitian curve (q^3 + 1 = 28)
    points = []
    for i in range(spec.size ** 3):
        coords = []
        rest = i
        for _ in range(3):
            coords.append(spec.from_index(rest % spec.size))
            rest //= spec.size
        vec = tuple(coords)
        if any(vec) and not herm(vec, vec) and normalize(vec) == vec:
            points.append(vec)
    assert len(points) == 28, len(points)
    index = {pt: i for i, pt in enumerate(points)}

    # unitary transvections: x -> x + lam * H(x, v) * v, with lam + lam^3 = 0
    twists = [lam for lam in spec.elements() if lam and not (lam + lam ** 3)]
    assert len(twists) == 2
    mats = []
    basis = [tuple(spec.one if i == j else spec.zero for j in range(3)) for i in range(3)]
    for v in points:
        for lam in twists:
            rows = []
            for e in basis:
                img = tuple(x + lam * herm(e, v) * y for x, y in zip(e, v))
                rows.append(img)
            # rows hold images of basis vectors; the matrix acting on column
            # vectors is the transpose
            m = Matrix(tuple(zip(*rows)))
            assert m.det() == spec.one
            for a in basis:
                for b in basis:
                    assert herm(m.apply(a), m.apply(b)) == herm(a, b)
            mats.append(m)

    perms = []
    for m in mats:
        perms.append(Permutation(tuple(index[normalize(m.apply(pt))] for pt in points)))
    group = PermGroup(perms)
    assert group.order() == 6048, group.order()
    return two_generator_reduction(group, 6048, seed=33)


def build_u4_2() -> PermGroup:
    spec = field_create(3, 1)
    one, zero = spec.one, spec.zero

    def form(u, v) -> FieldElement:
        return (u[0] * v[1] - u[1] * v[0]) + (u[2] * v[3] - u[3] * v[2])

    # symplectic transvections x -> x + c*<x, v>*v over all of PG(3,3)
    vectors = []
    for i in range(3 ** 4):
        coords = []
        rest = i
        for _ in range(4):
            coords.append(spec.from_index(rest % 3))
            rest //= 3
        vec = tuple(coords)
        if any(vec):
            vectors.append(vec)
    basis = [tuple(one if i == j else zero for j in range(4)) for i in range(4)]
    mats = []
    seen = set()
    for v in vectors:
        for c in (one, one + one):
            rows = []
            for e in basis:
                img = tuple(x + c * form(e, v) * y for x, y in zip(e, v))
                rows.append(img)
            m = Matrix(tuple(zip(*rows)))
            if m in seen:
                continue
            seen.add(m)
            assert m.det() == one
            for a in basis:
                for b in basis:
                    assert form(m.apply(a), m.apply(b)) == form(a, b)
            mats.append(m)
    group = projectivize(mats)
    assert group.degree == 40, group.degree
    assert group.order() == 25920, group.order()
    return two_generator_reduction(group, 25920, seed=7)


def build_m11() -> PermGroup:
    a = Permutation.from_cycles(11, tuple(range(11)))
    b = Permutation.from_cycles(11, (2, 6, 10, 7), (3, 9, 4, 5))
    group = PermGroup([a, b])
    assert group.order() == 7920, group.order()
    assert len(group.orbit(0)) == 11
    return group


def main() -> None:
    DATA_DIR.mkdir(exist_ok=True)
    jobs = [
        ("u3_3.txt", build_u3_3, 6048,
         ["U3(3) = SU(3,3) on the 28 isotropic points of the Hermitian form",
          "sum x_i^4 over GF(9); built from unitary transvections and reduced",
          "to a two-element generating set.  |U3(3)| = 27*8*28 = 6048."]),
        ("u4_2.txt", build_u4_2, 25920,
         ["U4(2) as the symplectic group on the 40 points of PG(3,3):",
          "Sp(4,3) is generated by symplectic transvections and acts with",
          "kernel {+-I}.  |U4(2)| = 81*8*80/2 = 25920."]),
        ("m11.txt", build_m11, 7920,
         ["M11, sharply 4-transitive on 11 points, from the classical",
          "generating pair.  |M11| = 11*10*9*8 = 7920."]),
    ]
    for fname, builder, order, comments in jobs:
        group = builder()
        path = DATA_DIR / fname
        write_generator_file(path, group, comments)
        degree, declared, gens = parse_generator_file(path)
        reloaded = PermGroup(gens)
        assert reloaded.order() == declared == order
        prof = profile(reloaded)
        print(f"{fname}: degree {degree}, order {declared}, "
              f"|U| = {len(prof.U)}, U = {sorted(prof.U)}")


if __name__ == "__main__":
    main()
