"""Simplices, Z2 chain arithmetic, and live-id tracking for the current complex.

A simplex is identified by its vertex tuple alone, so the same simplex appearing
in different complexes of a filtration compares equal (identity in the total
complex).  Chains are sets of equal-dimension simplices with symmetric-difference
addition.  ComplexState tracks the live simplices of the evolving complex, each
tagged with the arrow index at which it was most recently inserted (its live id);
pivots of matrix columns are maximum live ids.
"""
from __future__ import annotations

import operator
from typing import Dict, FrozenSet, Iterable, Iterator, Optional


class Simplex(tuple):
    """A simplex as a strictly increasing tuple of non-negative vertex ids.

    Subclasses tuple so equality/hashing come from the vertices alone.
    """

    __slots__ = ()

    def __new__(cls, vertices: Iterable[int]) -> "Simplex":
        vs = tuple(operator.index(v) for v in vertices)
        if not vs:
            raise ValueError("a simplex needs at least one vertex")
        if vs[0] < 0:
            raise ValueError(f"vertices must be non-negative: {vs}")
        if any(a >= b for a, b in zip(vs, vs[1:])):
            raise ValueError(f"vertices must be strictly increasing: {vs}")
        return tuple.__new__(cls, vs)

    @property
    def dimension(self) -> int:
        return len(self) - 1

    def faces(self) -> Iterator["Simplex"]:
        """Codimension-1 faces; empty for a vertex."""
        if len(self) > 1:
            for k in range(len(self)):
                yield Simplex(self[:k] + self[k + 1:])

    def __repr__(self) -> str:
        return f"Simplex({tuple(self)!r})"


class Chain:
    """A Z2 chain: a finite set of simplices of one common dimension.

    The empty chain is valid at any degree and reports degree None.
    Addition (also available as `a + b`) is symmetric difference.
    """

    __slots__ = ("simplices",)

    simplices: FrozenSet[Simplex]

    def __init__(self, simplices: Iterable = ()):
        ss = frozenset(s if isinstance(s, Simplex) else Simplex(s) for s in simplices)
        if len({s.dimension for s in ss}) > 1:
            raise ValueError(f"chain mixes dimensions: {sorted(ss)}")
        object.__setattr__(self, "simplices", ss)

    @property
    def degree(self) -> Optional[int]:
        for s in self.simplices:
            return s.dimension
        return None

    def __len__(self) -> int:
        return len(self.simplices)

    def __iter__(self) -> Iterator[Simplex]:
        return iter(self.simplices)

    def __contains__(self, simplex) -> bool:
        return simplex in self.simplices

    def __bool__(self) -> bool:
        return bool(self.simplices)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Chain):
            return NotImplemented
        return self.simplices == other.simplices

    def __hash__(self) -> int:
        return hash(self.simplices)

    def __add__(self, other: "Chain") -> "Chain":
        return chain_add(self, other)

    def __setattr__(self, name, value):
        raise AttributeError("Chain is immutable")

    def __repr__(self) -> str:
        return f"Chain({sorted(tuple(s) for s in self.simplices)!r})"


def chain_add(a: Chain, b: Chain) -> Chain:
    """Z2 sum (symmetric difference) of two chains of the same degree."""
    if a.simplices and b.simplices and a.degree != b.degree:
        raise ValueError(f"degree mismatch in chain addition: {a.degree} vs {b.degree}")
    return Chain(a.simplices ^ b.simplices)


def boundary(c: Chain) -> Chain:
    """Simplicial boundary over Z2; vertices have empty boundary."""
    out: set = set()
    for s in c:
        out ^= set(s.faces())
    return Chain(out)


class ComplexState:
    """Live simplices of the current complex, keyed to live ids.

    A live id is the arrow index at which the simplex was most recently
    inserted; re-inserting after a deletion assigns a fresh, strictly larger
    id.  The state stays closed under faces, and coface counts are maintained
    so deletions of simplices with live cofaces are rejected.
    """

    __slots__ = ("live", "_by_id", "_ncofaces", "_max_id")

    live: Dict[Simplex, int]

    def __init__(self):
        self.live = {}
        self._by_id: Dict[int, Simplex] = {}
        self._ncofaces: Dict[Simplex, int] = {}
        self._max_id = -1

    def __contains__(self, simplex) -> bool:
        return simplex in self.live

    def __len__(self) -> int:
        return len(self.live)

    def __iter__(self) -> Iterator[Simplex]:
        return iter(self.live)

    def insert(self, simplex: Simplex, live_id: int) -> None:
        if simplex in self.live:
            raise ValueError(f"simplex already present: {simplex}")
        if live_id <= self._max_id:
            raise ValueError(f"live id {live_id} not larger than all previous ids")
        for f in simplex.faces():
            if f not in self.live:
                raise ValueError(f"face {f} of {simplex} is missing")
        self.live[simplex] = live_id
        self._by_id[live_id] = simplex
        self._ncofaces[simplex] = 0
        self._max_id = live_id
        for f in simplex.faces():
            self._ncofaces[f] += 1

    def delete(self, simplex: Simplex) -> None:
        if simplex not in self.live:
            raise ValueError(f"simplex not present: {simplex}")
        if self._ncofaces[simplex]:
            raise ValueError(f"simplex {simplex} still has {self._ncofaces[simplex]} cofaces")
        del self._by_id[self.live.pop(simplex)]
        del self._ncofaces[simplex]
        for f in simplex.faces():
            self._ncofaces[f] -= 1

    def has_cofaces(self, simplex: Simplex) -> bool:
        return bool(self._ncofaces[simplex])

    def id_of(self, simplex: Simplex) -> int:
        return self.live[simplex]

    def simplex_of(self, live_id: int) -> Simplex:
        return self._by_id[live_id]

    def copy(self) -> "ComplexState":
        out = ComplexState()
        out.live = dict(self.live)
        out._by_id = dict(self._by_id)
        out._ncofaces = dict(self._ncofaces)
        out._max_id = self._max_id
        return out

    def __repr__(self) -> str:
        return f"ComplexState({len(self.live)} simplices, max id {self._max_id})"


def pivot(c: Chain, state: ComplexState) -> Optional[int]:
    """Maximum live id among the chain's simplices; None for the empty chain."""
    if not c.simplices:
        return None
    try:
        return max(state.live[s] for s in c)
    except KeyError:
        dead = sorted(tuple(s) for s in c if s not in state.live)
        raise ValueError(f"chain has simplices not live in the complex: {dead}")
