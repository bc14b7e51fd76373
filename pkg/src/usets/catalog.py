"""Named registry of the groups the verification suite works with.

Alternating and projective special linear groups are built by the
constructors in :mod:`usets.construct`; M11, U3(3) and U4(2) load from
generator files shipped under ``usets/data`` (building unitary or
symplectic matrix groups from scratch buys nothing here, while the order
check plus the published class-set comparison give two independent
correctness gates).  Every entry records its expected order together
with a provenance note saying how that number was obtained, and a group
is only handed out after its computed order matches.

Generator file format (text, UTF-8)::

    # comment lines and blank lines are ignored
    degree N
    order M
    (1,2,3)(4,5)      <- one generator per line, 1-based disjoint cycles
    ()                <- the identity, if ever needed

Points are 1-based in files (atlas convention) and converted at this
boundary only.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Callable, Iterable

from .construct import alternating_group, classical_order, psl_group
from .invariants import InvariantProfile, profile
from .patterns import classify_k
from .perm import DEFAULT_ELEMENT_CAP, PermGroup, Permutation

DATA_DIR = Path(__file__).parent / "data"


class CatalogError(Exception):
    """Base class for catalog failures."""


class UnknownGroupError(CatalogError):
    pass


class OrderMismatchError(CatalogError):
    """A built group's order disagrees with its declared order."""


class GeneratorFileError(CatalogError):
    """Base class for generator-file parse failures."""


class MalformedCycleError(GeneratorFileError):
    pass


class PointOutOfRangeError(GeneratorFileError):
    pass


class DuplicatePointError(GeneratorFileError):
    pass


_CYCLE_LINE_RE = re.compile(r"^(\(\s*\)|\(\s*\d+(\s*,\s*\d+)*\s*\))+$")


def parse_cycle_notation(text: str, degree: int) -> Permutation:
    """One permutation in 1-based disjoint cycle notation."""
    s = text.strip()
    if not _CYCLE_LINE_RE.match(s):
        raise MalformedCycleError(f"cannot parse cycle notation {text!r}")
    images = list(range(degree))
    seen: set[int] = set()
    for body in re.findall(r"\(([^()]*)\)", s):
        body = body.strip()
        if not body:
            continue
        points = [int(tok) - 1 for tok in body.split(",")]
        for pt in points:
            if not 0 <= pt < degree:
                raise PointOutOfRangeError(
                    f"point {pt + 1} outside 1..{degree} in {text!r}")
            if pt in seen:
                raise DuplicatePointError(
                    f"point {pt + 1} repeated in {text!r}")
            seen.add(pt)
        for i, pt in enumerate(points):
            images[pt] = points[(i + 1) % len(points)]
    return Permutation(images)


def parse_generator_file(path: Path | str) -> tuple[int, int, list[Permutation]]:
    """Parse a generator file into (degree, declared order, generators)."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise GeneratorFileError(f"cannot read generator file {path}: {exc}")
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if len(lines) < 3:
        raise GeneratorFileError(f"{path.name}: need degree, order and generators")
    m = re.fullmatch(r"degree\s+(\d+)", lines[0])
    if not m:
        raise GeneratorFileError(f"{path.name}: first line must be 'degree N'")
    degree = int(m.group(1))
    m = re.fullmatch(r"order\s+(\d+)", lines[1])
    if not m:
        raise GeneratorFileError(f"{path.name}: second line must be 'order M'")
    declared = int(m.group(1))
    gens = [parse_cycle_notation(ln, degree) for ln in lines[2:]]
    return degree, declared, gens


def write_generator_file(path: Path | str, group: PermGroup,
                         comments: Iterable[str] = ()) -> None:
    """Serialize a group in the generator file format (round-trippable)."""
    lines = [f"# {c}" for c in comments]
    lines.append(f"degree {group.degree}")
    lines.append(f"order {group.order()}")
    lines.extend(g.cycle_string() for g in group.generators)
    Path(path).write_text("\n".join(lines) + "\n")


@dataclass
class CatalogEntry:
    """A named group with its declared order and a lazy, validated build."""

    name: str
    source: str                      # "constructor" | "generator_file"
    expected_order: int
    provenance: str                  # how expected_order was obtained
    builder: Callable[[], PermGroup]
    simple: bool = True
    _group: PermGroup | None = field(default=None, repr=False)
    _profile: InvariantProfile | None = field(default=None, repr=False)

    def group(self) -> PermGroup:
        if self._group is None:
            g = self.builder()
            got = g.order()
            if got != self.expected_order:
                raise OrderMismatchError(
                    f"{self.name}: built order {got}, expected {self.expected_order}")
            self._group = g
        return self._group

    def profile(self, cap: int = DEFAULT_ELEMENT_CAP) -> InvariantProfile:
        """Invariant profile, cached after the first computation."""
        if self._profile is None:
            self._profile = profile(self.group(), cap)
        return self._profile

    @property
    def k(self) -> int:
        """Number of distinct primes dividing the order."""
        return classify_k(self.expected_order)[0]


def _file_builder(path: Path, name: str, expected: int) -> Callable[[], PermGroup]:
    def build() -> PermGroup:
        degree, declared, gens = parse_generator_file(path)
        group = PermGroup(gens)
        got = group.order()
        if got != declared:
            raise OrderMismatchError(
                f"{path.name}: generators give order {got}, file declares {declared}")
        if declared != expected:
            raise OrderMismatchError(
                f"{name}: file declares order {declared}, catalog expects {expected}")
        return group
    return build


def load_generator_file(path: Path | str) -> CatalogEntry:
    """Standalone entry from a generator file, validated immediately."""
    path = Path(path)
    _, declared, _ = parse_generator_file(path)
    entry = CatalogEntry(
        name=path.stem,
        source="generator_file",
        expected_order=declared,
        provenance=f"declared in {path.name}",
        builder=_file_builder(path, path.stem, declared),
    )
    entry.group()
    return entry


def _natural_key(name: str) -> tuple:
    return tuple(int(tok) if tok.isdigit() else tok
                 for tok in re.split(r"(\d+)", name))


def _canonical(name: str) -> str:
    s = name.replace(" ", "").upper()
    m = re.fullmatch(r"(?:PSL|L)\((\d+),(\d+)\)|L(\d)\((\d+)\)", s)
    if m:
        n, q = (m.group(1), m.group(2)) if m.group(1) else (m.group(3), m.group(4))
        return f"PSL({n},{q})"
    m = re.fullmatch(r"(?:PSU|U)(\d)\((\d+)\)|(?:PSU|U)\((\d+),(\d+)\)", s)
    if m:
        n, q = (m.group(1), m.group(2)) if m.group(1) else (m.group(3), m.group(4))
        return f"U{n}({q})"
    return s


class Catalog:
    """Registry of named groups; built once, then read-only."""

    def __init__(self, data_dir: Path | str | None = None):
        data = Path(data_dir) if data_dir is not None else DATA_DIR
        self._entries: dict[str, CatalogEntry] = {}
        for n in (5, 6, 9, 10):
            self._add(CatalogEntry(
                name=f"A{n}", source="constructor",
                expected_order=classical_order("Alt", n),
                provenance=f"{n}!/2",
                builder=(lambda n=n: alternating_group(n))))
        psl_params = [(2, 4), (2, 5), (2, 7), (2, 8), (2, 9), (2, 11),
                      (2, 13), (2, 17), (3, 3), (3, 4)]
        for n, q in psl_params:
            self._add(CatalogEntry(
                name=f"PSL({n},{q})", source="constructor",
                expected_order=classical_order("PSL", n, q),
                provenance=f"q^{n * (n - 1) // 2}*prod(q^i-1, i=2..{n})/gcd({n},q-1), q={q}",
                builder=(lambda n=n, q=q: psl_group(n, q))))
        file_specs = [
            ("M11", "m11.txt", 7920,
             "11*10*9*8 (sharply 4-transitive on 11 points)"),
            ("U3(3)", "u3_3.txt", 6048,
             "q^3(q^2-1)(q^3+1)/gcd(3,q+1) = 27*8*28, q=3"),
            ("U4(2)", "u4_2.txt", 25920,
             "q^4(q^2-1)(q^4-1)/gcd(2,q-1) = 81*8*80/2, q=3 (as the symplectic group on PG(3,3))"),
        ]
        for name, fname, expected, provenance in file_specs:
            path = data / fname
            self._add(CatalogEntry(
                name=name, source="generator_file",
                expected_order=expected, provenance=provenance,
                builder=_file_builder(path, name, expected)))

    def _add(self, entry: CatalogEntry) -> None:
        self._entries[entry.name] = entry

    def names(self) -> list[str]:
        return sorted(self._entries, key=_natural_key)

    def entry(self, name: str) -> CatalogEntry:
        key = _canonical(name)
        if key not in self._entries:
            known = ", ".join(self.names())
            raise UnknownGroupError(f"unknown group {name!r}; known groups: {known}")
        return self._entries[key]

    def get(self, name: str) -> PermGroup:
        """The named group, built lazily and order-validated."""
        return self.entry(name).group()

    def entries(self, k: int | None = None,
                max_order: int | None = None) -> list[CatalogEntry]:
        """Entries in natural name order, optionally filtered by the number
        of distinct prime divisors or by a maximum order."""
        out = [self._entries[n] for n in self.names()]
        if k is not None:
            out = [e for e in out if e.k == k]
        if max_order is not None:
            out = [e for e in out if e.expected_order <= max_order]
        return out

    def __contains__(self, name: str) -> bool:
        return _canonical(name) in self._entries


@lru_cache(maxsize=None)
def _default_catalog_cached(data_dir: str | None) -> Catalog:
    return Catalog(data_dir)


def default_catalog(data_dir: Path | str | None = None) -> Catalog:
    """Shared catalog instance (per data directory), so invariant profiles
    are computed at most once per process."""
    return _default_catalog_cached(str(data_dir) if data_dir is not None else None)
