"""Submodules of free modules ``R^k``.

Every module in the package is a quotient ``R^k / S`` and every submodule is
a span ``S ⊆ T ⊆ R^k``, so all set-level work happens on spans. Two
backends exist: ``HowellSpan`` stores a Howell form and is used for
``Z/n`` (where left, right and additive spans coincide); ``SetSpan`` stores
the full element set and is used for explicit table rings.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Sequence

from . import exactlin as el
from .errors import ResourceError

Vector = tuple[int, ...]

KINDS = ("right", "left", "abelian")
DEFAULT_CAP = 4096


class Span:
    """Common interface; see the two concrete backends below."""

    ring = None
    dim = 0
    kind = "right"

    @property
    def key(self):
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, Span) and type(self) is type(other) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __le__(self, other: Span) -> bool:
        return all(other.contains(g) for g in self.gens)

    def __ge__(self, other: Span) -> bool:
        return other <= self

    def __lt__(self, other: Span) -> bool:
        return self <= other and self != other

    def __repr__(self):
        return f"{type(self).__name__}(dim={self.dim}, size={self.size}, gens={list(self.gens)})"

    def is_zero(self) -> bool:
        return not self.gens


class HowellSpan(Span):
    """Span over ``Z/n`` held as Howell rows."""

    __slots__ = ("ring", "dim", "rows", "kind")

    def __init__(self, ring, dim: int, rows: Iterable[Sequence[int]], kind: str = "right"):
        self.ring = ring
        self.dim = dim
        self.kind = kind
        n = ring.modulus
        self.rows = el.howell_rows(n, tuple(tuple(int(x) % n for x in r) for r in rows), dim)

    @property
    def key(self):
        return (self.ring.modulus, self.dim, self.rows)

    @property
    def gens(self) -> tuple[Vector, ...]:
        return self.rows

    @property
    def size(self) -> int:
        return el.span_size(self.ring.modulus, self.rows)

    def contains(self, v: Sequence[int]) -> bool:
        return el.in_span(self.ring.modulus, self.rows, v)

    def reduce(self, v: Sequence[int]) -> Vector:
        return el.reduce_vector(self.ring.modulus, self.rows, v)

    def elements(self) -> Iterator[Vector]:
        return el.span_elements(self.ring.modulus, self.rows, self.dim)

    def reps(self, cap: int = DEFAULT_CAP) -> Iterator[Vector]:
        n = self.ring.modulus
        count = n**self.dim // self.size
        if count > cap:
            raise ResourceError(f"quotient has {count} elements, cap is {cap}")
        return el.quotient_reps(n, self.rows, self.dim)

    def __add__(self, other: Span) -> HowellSpan:
        return HowellSpan(self.ring, self.dim, self.rows + tuple(other.gens), self.kind)

    def __and__(self, other: Span) -> HowellSpan:
        rows = el.intersect_rows(self.ring.modulus, self.rows, tuple(other.gens), self.dim)
        return HowellSpan(self.ring, self.dim, rows, self.kind)

    def __le__(self, other: Span) -> bool:
        return all(other.contains(g) for g in self.rows)


class SetSpan(Span):
    """Span over an explicit table ring, stored as the set of its elements."""

    __slots__ = ("ring", "dim", "kind", "members", "_gens", "_reduce_cache", "_rep_table")

    def __init__(self, ring, dim: int, members: frozenset, gens: tuple, kind: str):
        self.ring = ring
        self.dim = dim
        self.kind = kind
        self.members = members
        self._gens = gens
        self._reduce_cache = {}
        self._rep_table = None

    @classmethod
    def generated(cls, ring, dim: int, vectors: Iterable[Sequence[int]], kind: str, cap: int = DEFAULT_CAP) -> SetSpan:
        vectors = [tuple(v) for v in vectors]
        members = _closure(ring, dim, kind, vectors, cap)
        return cls(ring, dim, members, _greedy_gens(ring, dim, kind, members, cap), kind)

    @classmethod
    def from_members(cls, ring, dim: int, members: Iterable[Sequence[int]], kind: str, cap: int = DEFAULT_CAP) -> SetSpan:
        """Wrap a set already known to be closed (e.g. a kernel)."""
        members = frozenset(tuple(v) for v in members)
        return cls(ring, dim, members, _greedy_gens(ring, dim, kind, members, cap), kind)

    @property
    def key(self):
        return (self.ring, self.dim, self.kind, self.members)

    @property
    def gens(self) -> tuple[Vector, ...]:
        return self._gens

    @property
    def size(self) -> int:
        return len(self.members)

    def contains(self, v: Sequence[int]) -> bool:
        return tuple(v) in self.members

    def _table(self, cap: int = DEFAULT_CAP):
        """Map every vector of ``R^dim`` to its coset minimum, or ``None`` if too big."""
        if self._rep_table is None:
            total = self.ring.size**self.dim
            if total > cap:
                return None
            table = {}
            add = self.ring.vadd
            members = sorted(self.members)
            for v in itertools.product(range(self.ring.size), repeat=self.dim):
                if v in table:
                    continue
                for s in members:
                    table[add(v, s)] = v
            self._rep_table = table
        return self._rep_table

    def reduce(self, v: Sequence[int]) -> Vector:
        v = tuple(v)
        table = self._table()
        if table is not None:
            return table[v]
        rep = self._reduce_cache.get(v)
        if rep is None:
            add = self.ring.vadd
            rep = min(add(v, s) for s in self.members)
            self._reduce_cache[v] = rep
        return rep

    def elements(self) -> Iterator[Vector]:
        return iter(sorted(self.members))

    def reps(self, cap: int = DEFAULT_CAP) -> Iterator[Vector]:
        total = self.ring.size**self.dim
        if total > cap:
            raise ResourceError(f"ambient R^{self.dim} has {total} elements, cap is {cap}")
        table = self._table(max(cap, total))
        return iter(sorted({rep for rep in table.values()}))

    def __add__(self, other: Span) -> SetSpan:
        add = self.ring.vadd
        members = frozenset(add(a, b) for a in self.members for b in other.members)
        return SetSpan.from_members(self.ring, self.dim, members, self.kind)

    def __and__(self, other: Span) -> SetSpan:
        return SetSpan.from_members(self.ring, self.dim, self.members & other.members, self.kind)

    def __le__(self, other: Span) -> bool:
        if isinstance(other, SetSpan):
            return self.members <= other.members
        return super().__le__(other)


def cyclic_set(ring, v: Vector, kind: str) -> set:
    if kind == "right":
        return {ring.rscale(v, r) for r in ring.elements}
    if kind == "left":
        return {ring.lscale(r, v) for r in ring.elements}
    out = {ring.zero_vector(len(v))}
    x = v
    while x not in out:
        out.add(x)
        x = ring.vadd(x, v)
    return out


def _closure(ring, dim, kind, vectors, cap):
    members = {ring.zero_vector(dim)}
    for v in vectors:
        if v in members:
            continue
        cyc = cyclic_set(ring, v, kind)
        members = {ring.vadd(a, b) for a in members for b in cyc}
        if len(members) > cap:
            raise ResourceError(f"span exceeds cap {cap}")
    return frozenset(members)


def _greedy_gens(ring, dim, kind, members, cap):
    """A small generating set: repeatedly add the element that enlarges the span most.

    Ties go to the lexicographically smallest vector, so the result is
    deterministic. Large spans fall back to a plain lexicographic sweep.
    """
    current = {ring.zero_vector(dim)}
    gens = []
    ordered = sorted(members)
    best_first = len(members) <= 256
    cyclics = {}
    while len(current) < len(members):
        if best_first:
            best, best_set = None, None
            for v in ordered:
                if v in current:
                    continue
                if v not in cyclics:
                    cyclics[v] = cyclic_set(ring, v, kind)
                cand = {ring.vadd(a, b) for a in current for b in cyclics[v]}
                if best_set is None or len(cand) > len(best_set):
                    best, best_set = v, cand
            gens.append(best)
            current = best_set
        else:
            v = next(v for v in ordered if v not in current)
            gens.append(v)
            cyc = cyclic_set(ring, v, kind)
            current = {ring.vadd(a, b) for a in current for b in cyc}
    return tuple(gens)
