"""Wire registry, bundle arithmetic, and extraction of explicit representatives.

A wire is a fixed cycle tagged with its starting index; at most one wire exists
per index, so a bundle is just a set of indices and bundle summation is the
symmetric difference of index sets.  The prefix sums of a bundle's wires,
taken index by index over the total complex, generate the representative of
the interval the bundle is attached to; extract_representative materialises
that sequence as maximal constant segments.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Iterator, List, Sequence, Set, Tuple, Union

from .chains import Chain, Simplex

NONBOUNDARY = "nonboundary"
BOUNDARY = "boundary"

HOMOLOGY = "H"
BOUNDARY_MODULE = "B"

Bundle = Union[Set[int], FrozenSet[int]]


class RepresentativeFormatError(ValueError):
    """Malformed representative text."""


@dataclass(frozen=True)
class Wire:
    """A cycle with a starting index; boundary or non-boundary by its birth condition."""

    start: int
    kind: str
    cycle: Chain

    def __post_init__(self):
        if self.kind not in (NONBOUNDARY, BOUNDARY):
            raise ValueError(f"wire kind must be {NONBOUNDARY!r} or {BOUNDARY!r}")
        if not self.cycle:
            raise ValueError(f"wire at {self.start} has an empty cycle")

    @property
    def degree(self) -> int:
        return self.cycle.degree


@dataclass(frozen=True)
class Representative:
    """Per-index cycles witnessing one interval, stored as constant segments.

    interval is (module, degree, birth, death) with module "H" or "B";
    segments are (alpha_lo, alpha_hi, chain) triples partitioning [birth, death].
    """

    interval: Tuple[str, int, int, int]
    segments: Tuple[Tuple[int, int, Chain], ...]

    def __post_init__(self):
        module, _, b, d = self.interval
        if module not in (HOMOLOGY, BOUNDARY_MODULE):
            raise ValueError(f"module must be 'H' or 'B', got {module!r}")
        object.__setattr__(self, "segments", tuple(
            (lo, hi, c if isinstance(c, Chain) else Chain(c)) for lo, hi, c in self.segments
        ))
        expect = b
        for lo, hi, _ in self.segments:
            if lo != expect or hi < lo:
                raise ValueError(f"segments do not partition [{b},{d}]")
            expect = hi + 1
        if expect != d + 1:
            raise ValueError(f"segments do not partition [{b},{d}]")

    def cycle_at(self, alpha: int) -> Chain:
        b, d = self.interval[2], self.interval[3]
        if not b <= alpha <= d:
            raise ValueError(f"index {alpha} outside [{b},{d}]")
        for lo, hi, chain in self.segments:
            if lo <= alpha <= hi:
                return chain
        raise AssertionError("unreachable: segments partition the interval")


class WireStore:
    """Append-only registry of wires, at most one per starting index."""

    __slots__ = ("_wires",)

    def __init__(self):
        self._wires: Dict[int, Wire] = {}

    def register_wire(self, index: int, cycle: Chain, kind: str) -> int:
        if index in self._wires:
            raise ValueError(f"a wire is already registered at index {index}")
        self._wires[index] = Wire(index, kind, cycle)
        return index

    def __len__(self) -> int:
        return len(self._wires)

    def __contains__(self, index: int) -> bool:
        return index in self._wires

    def __getitem__(self, index: int) -> Wire:
        return self._wires[index]

    def wires(self) -> Iterator[Wire]:
        return iter(self._wires.values())

    def indices(self) -> FrozenSet[int]:
        return frozenset(self._wires)


def bundle_sum(a: Bundle, b: Bundle) -> Set[int]:
    """Symmetric difference of two bundles' wire-index sets."""
    return set(a) ^ set(b)


def bundle_last_cycle(store: WireStore, bundle: Bundle, i: int) -> Chain:
    """Sum of the bundle's wires with start <= i, as a chain over the total complex."""
    out: set = set()
    for j in bundle:
        if j <= i:
            out ^= store[j].cycle.simplices
    return Chain(out)


def extract_representative(
    store: WireStore, bundle: Bundle, interval: Tuple[str, int, int, int]
) -> Representative:
    """Materialise the representative generated by a bundle for one interval.

    Wires with start > death do not contribute and are dropped.  The chain is
    constant between consecutive wire starts, so the output holds one segment
    per contributing wire past the birth; O(m) chain additions total.
    """
    module, degree, b, d = interval
    starts = sorted(j for j in bundle if j <= d)
    for j in starts:
        if store[j].degree != degree:
            raise ValueError(
                f"wire at {j} has degree {store[j].degree}, interval has degree {degree}"
            )
    prefix = [j for j in starts if j <= b]
    if module == HOMOLOGY and not prefix:
        raise ValueError(
            f"bundle {sorted(bundle)} has no wire at or before birth {b}: "
            "it cannot generate a representative"
        )
    acc: set = set()
    for j in prefix:
        acc ^= store[j].cycle.simplices
    segments: List[Tuple[int, int, Chain]] = []
    lo = b
    for j in starts[len(prefix):]:
        segments.append((lo, j - 1, Chain(acc)))
        acc ^= store[j].cycle.simplices
        lo = j
    segments.append((lo, d, Chain(acc)))
    return Representative(interval, tuple(segments))


def serialize_representatives(reps: Sequence[Representative]) -> str:
    """Text dump: one R header per interval, one S header plus vertex lines per segment."""
    lines: List[str] = []
    for rep in reps:
        module, degree, b, d = rep.interval
        lines.append(f"R {module} {degree} {b} {d} {len(rep.segments)}")
        for lo, hi, chain in rep.segments:
            lines.append(f"S {lo} {hi} {len(chain)}")
            for simplex in sorted(chain.simplices):
                lines.append(" ".join(map(str, simplex)))
    return "".join(line + "\n" for line in lines)


def parse_representatives(text: Union[str, bytes]) -> List[Representative]:
    """Parse the serialize_representatives format back into Representative objects."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    lines = [
        (no, line.strip())
        for no, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.strip().startswith("#")
    ]
    pos = 0

    def take(expect: str) -> Tuple[int, List[str]]:
        nonlocal pos
        if pos >= len(lines):
            raise RepresentativeFormatError(f"unexpected end of input, expected {expect!r} line")
        no, line = lines[pos]
        tokens = line.split()
        if tokens[0] != expect:
            raise RepresentativeFormatError(f"line {no}: expected {expect!r} line, got {line!r}")
        pos += 1
        return no, tokens

    def take_vertices() -> Simplex:
        nonlocal pos
        no, line = lines[pos]
        try:
            simplex = Simplex(int(t) for t in line.split())
        except (ValueError, TypeError) as exc:
            raise RepresentativeFormatError(f"line {no}: {exc}") from None
        pos += 1
        return simplex

    reps: List[Representative] = []
    while pos < len(lines):
        no, tokens = take("R")
        try:
            module, degree, b, d, nsegs = tokens[1], *map(int, tokens[2:6])
        except (ValueError, IndexError):
            raise RepresentativeFormatError(f"line {no}: malformed R header") from None
        segments = []
        for _ in range(nsegs):
            no, tokens = take("S")
            try:
                lo, hi, nsimp = map(int, tokens[1:4])
            except (ValueError, IndexError):
                raise RepresentativeFormatError(f"line {no}: malformed S header") from None
            simplices = [take_vertices() for _ in range(nsimp)]
            try:
                segments.append((lo, hi, Chain(simplices)))
            except ValueError as exc:
                raise RepresentativeFormatError(f"line {no}: {exc}") from None
        try:
            reps.append(Representative((module, degree, b, d), tuple(segments)))
        except ValueError as exc:
            raise RepresentativeFormatError(f"line {no}: {exc}") from None
    return reps
