"""Finitely presented one-sided modules over a finite ring.

A module is ``R^k / Rel`` where ``Rel`` is a span of the matching kind:
right modules use right spans (``v·r``), left modules left spans. Elements
are coordinate tuples in ``R^k`` reduced to their canonical coset
representative, so equality of elements is tuple equality.

A third side, ``"abelian"``, presents an abelian group as a quotient of
``R^k`` by an additive subgroup. It appears only as the tensor product
``M_R ⊗_R _RN`` over a noncommutative table ring, which carries no
module structure.

Conventions for a linear map given by generator images ``y_i``:

* right module: ``φ(v) = Σ y_i · v_i``
* left module:  ``φ(v) = Σ v_i · y_i``
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Iterator, Optional, Sequence

from . import exactlin as el
from .errors import ConstructionError, ContractViolation, ResourceError, UnsupportedError
from .rings import Ring, TableRing, ZModRing, ideals
from .spans import DEFAULT_CAP, HowellSpan, SetSpan, Span
from .verdicts import Verdict

Vector = tuple[int, ...]
SIDES = ("left", "right", "abelian")


def opposite(side: str) -> str:
    return {"left": "right", "right": "left"}.get(side, side)


def combine(ring: Ring, side: str, coeffs: Sequence[int], images: Sequence[Vector], dim: int) -> Vector:
    """``Σ images_i · coeffs_i`` (right) or ``Σ coeffs_i · images_i`` (left)."""
    acc = ring.zero_vector(dim)
    for c, y in zip(coeffs, images):
        if c == ring.zero:
            continue
        term = ring.lscale(c, y) if side == "left" else ring.rscale(y, c)
        acc = ring.vadd(acc, term)
    return acc


# --------------------------------------------------------------------------
# modules


@dataclass(frozen=True)
class Module:
    """``R^ngens / relations`` as a ``side`` module.

    Attributes:
        ring: The coefficient ring.
        side: ``"right"``, ``"left"`` or ``"abelian"``.
        ngens: Number of generators ``k``.
        relations: A span inside ``R^k``.
    """

    ring: Ring
    side: str
    ngens: int
    relations: Span

    def __post_init__(self):
        if self.side not in SIDES:
            raise ContractViolation(f"unknown side {self.side!r}")
        if self.relations.dim != self.ngens:
            raise ContractViolation("relation span dimension does not match generator count")

    @property
    def cardinality(self) -> int:
        return self.ring.size**self.ngens // self.relations.size

    def __len__(self) -> int:
        return self.cardinality

    @property
    def is_zero(self) -> bool:
        return self.cardinality == 1

    @cached_property
    def canonical(self):
        """Invariant-factor chain (``Z/n``) or a canonical relation key (tables)."""
        if isinstance(self.ring, ZModRing):
            A = el.ZnMatrix(self.ring.n, self.relations.gens, self.ngens)
            return tuple(el.invariant_factors(A))
        return ("table", self.side, self.ngens, tuple(sorted(self.relations.members)))

    def reduce(self, v: Sequence[int]) -> Vector:
        v = tuple(v)
        if len(v) != self.ngens:
            raise ContractViolation(f"element {v} has wrong length for {self.ngens} generators")
        return self.relations.reduce(v)

    def element(self, v: Sequence[int]) -> Vector:
        return self.reduce(v)

    def elements(self, cap: int = DEFAULT_CAP) -> list[Vector]:
        """All elements in canonical (lexicographic representative) order."""
        if self.cardinality > cap:
            raise ResourceError(f"module has {self.cardinality} elements, cap is {cap}")
        return list(self.relations.reps(max(cap, self.ring.size**self.ngens)))

    @property
    def zero(self) -> Vector:
        return self.ring.zero_vector(self.ngens)

    def gen(self, i: int) -> Vector:
        return self.reduce(self.ring.unit_vector(self.ngens, i))

    def add(self, u, v) -> Vector:
        return self.reduce(self.ring.vadd(u, v))

    def neg(self, v) -> Vector:
        return self.reduce(self.ring.vneg(v))

    def act(self, v, r) -> Vector:
        """Scalar action on the module's side."""
        if self.side == "left":
            return self.reduce(self.ring.lscale(r, v))
        if self.side == "abelian" and not self.ring.is_commutative:
            raise UnsupportedError("an abelian-group presentation has no ring action")
        return self.reduce(self.ring.rscale(v, r))

    def is_zero_element(self, v) -> bool:
        return self.relations.contains(v)

    def span(self, vectors) -> Span:
        kind = self.side if self.side != "abelian" else "abelian"
        return self.ring.span(list(vectors) + list(self.relations.gens), self.ngens, kind)

    def full(self) -> "Submodule":
        return Submodule(self, self.ring.span([self.ring.unit_vector(self.ngens, i) for i in range(self.ngens)],
                                              self.ngens, self.relations.kind))

    def zero_submodule(self) -> "Submodule":
        return Submodule(self, self.relations)

    def describe(self) -> dict:
        out = {"side": self.side, "gens": self.ngens, "relations": [list(g) for g in self.relations.gens],
               "cardinality": self.cardinality}
        if isinstance(self.ring, ZModRing):
            out["canonical"] = list(self.canonical)
        return out

    def __repr__(self):
        if isinstance(self.ring, ZModRing):
            return f"Module({self.ring!r}, {self.side}, chain={list(self.canonical)})"
        return f"Module({self.ring!r}, {self.side}, gens={self.ngens}, |M|={self.cardinality})"


def _kind(side: str) -> str:
    return side


def fp_module(ring: Ring, side: str, generators: int, relations: Iterable[Sequence[int]] = ()) -> Module:
    """Build ``R^generators / span(relations)``.

    >>> from dualpair.rings import zmod
    >>> fp_module(zmod(4), "right", 1, [[2]]).canonical
    (2,)
    """
    if side not in SIDES:
        raise ContractViolation(f"side must be one of {SIDES}, got {side!r}")
    if generators < 0:
        raise ContractViolation("generator count must be nonnegative")
    rels = [tuple(int(x) % ring.size if isinstance(ring, ZModRing) else int(x) for x in r) for r in relations]
    for r in rels:
        if len(r) != generators:
            raise ContractViolation(f"relation {list(r)} has length {len(r)}, expected {generators}")
        if isinstance(ring, TableRing) and any(not 0 <= x < ring.size for x in r):
            raise ContractViolation(f"relation {list(r)} has entries outside the ring")
    if isinstance(ring, TableRing) and ring.size**generators > DEFAULT_CAP:
        raise ResourceError(f"table-backend ambient R^{generators} exceeds cap {DEFAULT_CAP}")
    return Module(ring, side, generators, ring.span(rels, generators, _kind(side)))


def free_module(ring: Ring, rank: int, side: str = "right") -> Module:
    return fp_module(ring, side, rank, [])


def zero_module(ring: Ring, side: str = "right") -> Module:
    return fp_module(ring, side, 0, [])


def cyclic(ring: ZModRing, d: int, side: str = "right") -> Module:
    """``Z/d`` as a module over ``Z/n`` (``d`` must divide ``n``)."""
    n = ring.modulus
    if n is None or n % d:
        raise ContractViolation(f"{d} does not divide the modulus of {ring!r}")
    return fp_module(ring, side, 1, [[d % n]])


def module_from_chain(ring: ZModRing, chain: Sequence[int], side: str = "right") -> Module:
    """``⊕ Z/d`` over the chain (each ``d`` divides ``n``)."""
    n = ring.modulus
    k = len(chain)
    rows = []
    for i, d in enumerate(chain):
        if n % d:
            raise ContractViolation(f"{d} does not divide {n}")
        rows.append(tuple(d % n if j == i else 0 for j in range(k)))
    return fp_module(ring, side, k, rows)


def ring_module(ring: Ring, side: str = "right") -> Module:
    return free_module(ring, 1, side)


# --------------------------------------------------------------------------
# submodules


@dataclass(frozen=True)
class Submodule:
    """A submodule ``T / Rel`` of ``M = R^k / Rel`` held as the span ``T``."""

    ambient: Module
    span: Span

    def __post_init__(self):
        if not self.ambient.relations <= self.span:
            raise ContractViolation("submodule span must contain the ambient relations")

    @property
    def cardinality(self) -> int:
        return self.span.size // self.ambient.relations.size

    def contains(self, v) -> bool:
        return self.span.contains(tuple(v))

    __contains__ = contains

    def elements(self, cap: int = DEFAULT_CAP) -> list[Vector]:
        if self.cardinality > cap:
            raise ResourceError(f"submodule has {self.cardinality} elements, cap is {cap}")
        M = self.ambient
        if isinstance(self.span, HowellSpan):
            out = {M.reduce(v) for v in self.span.elements()} if self.span.size <= 64 * cap else None
            if out is None:
                raise ResourceError("submodule span too large to enumerate")
            return sorted(out)
        return sorted({M.reduce(v) for v in self.span.members})

    @property
    def generators(self) -> list[Vector]:
        """Canonical generators: span generators not already in the relations."""
        M = self.ambient
        return [M.reduce(g) for g in self.span.gens if not M.relations.contains(g)]

    def __le__(self, other: "Submodule") -> bool:
        return self.span <= other.span

    def __lt__(self, other: "Submodule") -> bool:
        return self.span <= other.span and self.span != other.span

    def __add__(self, other: "Submodule") -> "Submodule":
        return Submodule(self.ambient, self.span + other.span)

    def __and__(self, other: "Submodule") -> "Submodule":
        return Submodule(self.ambient, self.span & other.span)

    def __eq__(self, other):
        return isinstance(other, Submodule) and self.ambient == other.ambient and self.span == other.span

    def __hash__(self):
        return hash((self.ambient, self.span))

    def is_zero(self) -> bool:
        return self.span == self.ambient.relations or self.cardinality == 1

    def is_full(self) -> bool:
        return self.cardinality == self.ambient.cardinality

    def as_module(self) -> "Presented":
        return present(self.ambient, self.span.gens)

    def __repr__(self):
        return f"Submodule(|{self.cardinality}| in {self.ambient!r}, gens={self.generators})"


def submodule_span(M: Module, gens: Iterable[Sequence[int]]) -> Submodule:
    """Least submodule of ``M`` containing ``gens``."""
    gens = [tuple(g) for g in gens]
    return Submodule(M, M.span(gens))


def cyclic_submodule(M: Module, v) -> Submodule:
    return submodule_span(M, [v])


def all_submodules(M: Module, cap: int = 4096) -> list[Submodule]:
    """Every submodule of ``M``, sorted by size then generators.

    Found by closing the zero submodule under adding cyclic submodules.
    """
    cache = M.ring.cache.setdefault("all_submodules", {})
    if M in cache:
        return cache[M]
    elems = M.elements()
    cyclics = {cyclic_submodule(M, v) for v in elems}
    found = {M.zero_submodule()}
    frontier = list(found)
    while frontier:
        nxt = []
        for S in frontier:
            for C in cyclics:
                if C <= S:
                    continue
                T = S + C
                if T not in found:
                    found.add(T)
                    nxt.append(T)
                    if len(found) > cap:
                        raise ResourceError(f"more than {cap} submodules")
        frontier = nxt
    out = sorted(found, key=lambda S: (S.cardinality, sorted(S.elements())))
    cache[M] = out
    return out


# --------------------------------------------------------------------------
# maps


@dataclass(frozen=True, eq=False)
class LinearMap:
    """A homomorphism given by generator images or, for abelian domains, by a function.

    ``images[i]`` is the codomain coordinate vector of ``φ(e_i)``.
    """

    domain: Module
    codomain: Module
    images: Optional[tuple[Vector, ...]] = None
    func: Optional[Callable[[Vector], Vector]] = None

    def __post_init__(self):
        if self.images is None and self.func is None:
            raise ContractViolation("a linear map needs images or a function")
        if self.images is not None:
            imgs = tuple(self.codomain.reduce(y) for y in self.images)
            if len(imgs) != self.domain.ngens:
                raise ContractViolation("one image per domain generator is required")
            object.__setattr__(self, "images", imgs)

    @classmethod
    def from_images(cls, domain: Module, codomain: Module, images, check: bool = True) -> "LinearMap":
        f = cls(domain, codomain, tuple(tuple(y) for y in images))
        if check:
            for rho in domain.relations.gens:
                if not codomain.is_zero_element(f.raw(rho)):
                    raise ConstructionError("images do not respect a domain relation", rho)
        return f

    @classmethod
    def from_function(cls, domain: Module, codomain: Module, func) -> "LinearMap":
        if isinstance(domain.ring, ZModRing) or domain.side != "abelian":
            images = tuple(codomain.reduce(func(domain.ring.unit_vector(domain.ngens, i))) for i in range(domain.ngens))
            return cls(domain, codomain, images)
        return cls(domain, codomain, None, func)

    def raw(self, v) -> Vector:
        if self.images is not None:
            side = self.domain.side if self.domain.side != "abelian" else "right"
            return combine(self.domain.ring, side, v, self.images, self.codomain.ngens)
        return tuple(self.func(tuple(v)))

    def __call__(self, v) -> Vector:
        return self.codomain.reduce(self.raw(v))

    def matrix(self) -> el.ZnMatrix:
        """Image rows as a ``ZnMatrix`` (``Z/n`` only)."""
        if not isinstance(self.domain.ring, ZModRing):
            raise UnsupportedError("matrices exist only over Z/n")
        return el.ZnMatrix(self.domain.ring.n, self.images, self.codomain.ngens)

    def preimage(self, S: Submodule | Span) -> Submodule:
        """``{x : φ(x) ∈ S}`` as a submodule of the domain."""
        span = S.span if isinstance(S, Submodule) else S
        D = self.domain
        R = D.ring
        if isinstance(R, ZModRing):
            k = D.ngens
            stacked = tuple(self.images) + tuple(span.gens)
            ker = el.kernel_rows(R.n, stacked, self.codomain.ngens)
            rows = tuple(r[:k] for r in ker)
            return Submodule(D, HowellSpan(R, k, rows + tuple(D.relations.gens), D.relations.kind))
        members = set()
        rel = sorted(D.relations.members)
        for x in D.elements(cap=max(DEFAULT_CAP, R.size**D.ngens)):
            if span.contains(self.raw(x)):
                for r in rel:
                    members.add(R.vadd(x, r))
        return Submodule(D, SetSpan.from_members(R, D.ngens, members, D.relations.kind))

    def kernel(self) -> Submodule:
        return self.preimage(self.codomain.relations)

    def image(self) -> Submodule:
        C = self.codomain
        if self.images is not None:
            R = C.ring
            kind = C.relations.kind
            if isinstance(R, TableRing) and self.domain.side != C.side:
                kind = "abelian"
            return Submodule(C, R.span(list(self.images) + list(C.relations.gens), C.ngens, kind))
        vals = {self.raw(x) for x in self.domain.elements()}
        return Submodule(C, C.ring.span(list(vals) + list(C.relations.gens), C.ngens, C.relations.kind))

    def is_injective(self) -> Verdict:
        K = self.kernel()
        if K.is_zero():
            return Verdict(True)
        witness = next(v for v in K.elements() if not self.domain.is_zero_element(v))
        return Verdict(False, witness)

    def is_surjective(self) -> Verdict:
        return Verdict(self.image().is_full())

    def compose(self, other: "LinearMap") -> "LinearMap":
        """``self ∘ other``."""
        if other.images is not None:
            return LinearMap(other.domain, self.codomain, tuple(self(y) for y in other.images))
        return LinearMap(other.domain, self.codomain, None, lambda v: self(other(v)))


def identity_map(M: Module) -> LinearMap:
    return LinearMap(M, M, tuple(M.gen(i) for i in range(M.ngens)))


def zero_map(M: Module, N: Module) -> LinearMap:
    return LinearMap(M, N, tuple(N.zero for _ in range(M.ngens)))


# --------------------------------------------------------------------------
# presentations of submodules


@dataclass(frozen=True, eq=False)
class Presented:
    """A submodule re-presented as a module in its own right.

    Attributes:
        module: ``R^t / K`` where ``t`` is the number of span generators.
        inclusion: Map ``module -> ambient`` sending ``e_i`` to the ``i``-th generator.
        gens: The generators in the ambient coordinates.
    """

    module: Module
    inclusion: LinearMap
    gens: tuple[Vector, ...]
    ambient: Module

    def lift(self, v) -> Vector:
        """Coordinates in ``module`` of an ambient vector lying in the submodule."""
        v = tuple(v)
        R = self.module.ring
        A = self.ambient
        if isinstance(R, ZModRing):
            rows = tuple(self.gens) + tuple(A.relations.gens)
            x = el.solve_rows(R.n, rows, A.ngens, v)
            if x is None:
                raise ContractViolation(f"{v} is not in the submodule")
            return self.module.reduce(x[: len(self.gens)])
        table = self._lift_table()
        key = A.reduce(v)
        if key not in table:
            raise ContractViolation(f"{v} is not in the submodule")
        return table[key]

    def _lift_table(self):
        cache = self.__dict__.get("_lift")
        if cache is None:
            cache = {}
            for c in self.module.elements():
                cache.setdefault(self.ambient.reduce(self.inclusion.raw(c)), c)
            object.__setattr__(self, "_lift", cache)
        return cache


def present(ambient: Module, vectors: Iterable[Sequence[int]]) -> Presented:
    """Present the submodule generated by ``vectors`` as an f.p. module."""
    R = ambient.ring
    side = ambient.side
    span = ambient.span([tuple(v) for v in vectors])
    gens = tuple(g for g in span.gens if not ambient.relations.contains(g))
    t = len(gens)
    if isinstance(R, ZModRing):
        rows = tuple(gens) + tuple(ambient.relations.gens)
        ker = el.kernel_rows(R.n, rows, ambient.ngens) if rows else ()
        rel = tuple(r[:t] for r in ker)
        module = Module(R, side, t, HowellSpan(R, t, rel, side))
    else:
        if R.size**t > DEFAULT_CAP:
            raise ResourceError(f"presenting with {t} generators exceeds cap {DEFAULT_CAP}")
        kern = [c for c in itertools.product(R.elements, repeat=t)
                if ambient.relations.contains(combine(R, side if side != "abelian" else "right", c, gens, ambient.ngens))]
        kind = side
        module = Module(R, side, t, SetSpan.from_members(R, t, kern, kind))
    inclusion = LinearMap(module, ambient, gens)
    return Presented(module, inclusion, gens, ambient)


def quotient(M: Module, S: Submodule) -> tuple[Module, LinearMap]:
    """``M / S`` with its projection (identity on coordinates)."""
    if S.ambient != M:
        raise ContractViolation("submodule does not belong to this module")
    Q = Module(M.ring, M.side, M.ngens, S.span)
    proj = LinearMap(M, Q, tuple(Q.gen(i) for i in range(M.ngens)))
    return Q, proj


# --------------------------------------------------------------------------
# direct sums


@dataclass(frozen=True, eq=False)
class DirectSum:
    module: Module
    inj: tuple[LinearMap, LinearMap]
    proj: tuple[LinearMap, LinearMap]


def _block_rows(a_rows, b_rows, ka, kb, zero):
    rows = [tuple(r) + (zero,) * kb for r in a_rows]
    rows += [(zero,) * ka + tuple(r) for r in b_rows]
    return rows


def direct_sum(M: Module, N: Module) -> DirectSum:
    """The biproduct ``M ⊕ N`` with its structural maps."""
    if M.ring != N.ring or M.side != N.side:
        raise ContractViolation("direct sum needs the same ring and side")
    R = M.ring
    ka, kb = M.ngens, N.ngens
    if isinstance(R, ZModRing):
        S = Module(R, M.side, ka + kb, HowellSpan(R, ka + kb, _block_rows(M.relations.gens, N.relations.gens, ka, kb, 0), M.side))
    else:
        members = [tuple(a) + tuple(b) for a in M.relations.members for b in N.relations.members]
        S = Module(R, M.side, ka + kb, SetSpan.from_members(R, ka + kb, members, M.relations.kind))
    z = R.zero
    inj1 = LinearMap(M, S, tuple(tuple(M.gen(i)) + (z,) * kb for i in range(ka)))
    inj2 = LinearMap(N, S, tuple((z,) * ka + tuple(N.gen(j)) for j in range(kb)))
    p1 = LinearMap(S, M, tuple(M.gen(i) for i in range(ka)) + tuple(M.zero for _ in range(kb)))
    p2 = LinearMap(S, N, tuple(N.zero for _ in range(ka)) + tuple(N.gen(j) for j in range(kb)))
    return DirectSum(S, (inj1, inj2), (p1, p2))


def direct_power(M: Module, k: int) -> Module:
    out = zero_module(M.ring, M.side)
    for _ in range(k):
        out = direct_sum(out, M).module
    return out


# --------------------------------------------------------------------------
# tensor products


@dataclass(frozen=True, eq=False)
class Tensor:
    """``M ⊗_R N`` with generator ``m_i ⊗ n_j`` at coordinate ``i * N.ngens + j``."""

    module: Module
    left: Module
    right: Module

    def pure(self, m, n) -> Vector:
        """Coordinates of ``m ⊗ n``: ``(m_i n_j)``."""
        R = self.module.ring
        return self.module.reduce(tuple(R.mul(a, b) for a in m for b in n))

    def index(self, i: int, j: int) -> int:
        return i * self.right.ngens + j


def _tensor_side(M: Module, N: Module) -> str:
    if isinstance(M.ring, ZModRing):
        return M.side if M.side != "abelian" else "right"
    return "abelian"


def tensor(M: Module, N: Module, cap: int = DEFAULT_CAP) -> Tensor:
    """``M_R ⊗_R _RN`` presented on the pure tensors of generators.

    Over ``Z/n`` sides are interchangeable. Over a table ring ``M`` must be a
    right module and ``N`` a left module, and the result is an abelian group.
    """
    R = M.ring
    if N.ring != R:
        raise ContractViolation("tensor factors must share a ring")
    if isinstance(R, TableRing) and (M.side != "right" or N.side != "left"):
        raise ContractViolation("tensor over a table ring needs a right module times a left module")
    a, b = M.ngens, N.ngens
    dim = a * b
    z = R.zero
    rows = []

    def put(vec_by_index):
        row = [z] * dim
        for idx, val in vec_by_index:
            row[idx] = val
        return tuple(row)

    if isinstance(R, ZModRing):
        for rho in M.relations.gens:
            for j in range(b):
                rows.append(put((i * b + j, rho[i]) for i in range(a)))
        for sigma in N.relations.gens:
            for i in range(a):
                rows.append(put((i * b + j, sigma[j]) for j in range(b)))
        module = Module(R, _tensor_side(M, N), dim, HowellSpan(R, dim, rows, "right"))
    else:
        if R.size**dim > cap:
            raise ResourceError(f"tensor ambient R^{dim} exceeds cap {cap}")
        for rho in M.relations.gens:
            for t in R.elements:
                col = R.rscale(rho, t)
                for j in range(b):
                    rows.append(put((i * b + j, col[i]) for i in range(a)))
        for sigma in N.relations.gens:
            for t in R.elements:
                row_ = R.lscale(t, sigma)
                for i in range(a):
                    rows.append(put((i * b + j, row_[j]) for j in range(b)))
        module = Module(R, "abelian", dim, SetSpan.generated(R, dim, rows, "abelian", cap=max(cap, R.size**dim)))
    return Tensor(module, M, N)


def tensor_map(f: LinearMap, g: LinearMap, source: Tensor, target: Tensor) -> LinearMap:
    """``f ⊗ g : M' ⊗ N' -> M ⊗ N`` for ``f`` right-linear and ``g`` left-linear.

    The coordinate ``(p, q)`` with value ``r`` stands for ``e_p r ⊗ e_q`` and is
    sent to ``f(e_p) r ⊗ g(e_q)``.
    """
    R = source.module.ring
    a2, b2 = target.left.ngens, target.right.ngens
    b1 = source.right.ngens
    fimg, gimg = f.images, g.images

    def func(c):
        out = [R.zero] * (a2 * b2)
        for idx, r in enumerate(c):
            if r == R.zero:
                continue
            p, q = divmod(idx, b1)
            left = fimg[p]
            right = gimg[q]
            for i in range(a2):
                lr = R.mul(left[i], r)
                if lr == R.zero:
                    continue
                for j in range(b2):
                    out[i * b2 + j] = R.add(out[i * b2 + j], R.mul(lr, right[j]))
        return tuple(out)

    return LinearMap.from_function(source.module, target.module, func)


# --------------------------------------------------------------------------
# Hom and duals


@dataclass(frozen=True, eq=False)
class Hom:
    """``Hom_R(M, N)``.

    Over ``Z/n`` (and for duals over any ring) ``module`` presents the
    homomorphisms as a module; ``images`` turns module coordinates back into
    generator images in ``N``. Over table rings with ``N != R`` only the
    enumerated set of maps is available.
    """

    domain: Module
    codomain: Module
    module: Optional[Module]
    presented: Optional[Presented]
    maps: Optional[tuple[tuple[Vector, ...], ...]] = None

    @property
    def cardinality(self) -> int:
        if self.module is not None:
            return self.module.cardinality
        return len(self.maps)

    def images(self, coords) -> tuple[Vector, ...]:
        """Generator images of the map with the given module coordinates."""
        flat = self.presented.inclusion.raw(coords)
        b = self.codomain.ngens
        return tuple(self.codomain.reduce(flat[i * b:(i + 1) * b]) for i in range(self.domain.ngens))

    def as_map(self, coords) -> LinearMap:
        return LinearMap(self.domain, self.codomain, self.images(coords))

    def coords(self, images) -> Vector:
        flat = tuple(x for y in images for x in y)
        return self.presented.lift(flat)

    def evaluate(self, coords, m) -> Vector:
        return self.as_map(coords)(m)

    def all_images(self) -> list[tuple[Vector, ...]]:
        if self.maps is not None:
            return list(self.maps)
        return [self.images(c) for c in self.module.elements()]


def _well_defined_images(M: Module, N: Module) -> Iterator[tuple[Vector, ...]]:
    R = M.ring
    side = M.side
    Nel = N.elements()
    for imgs in itertools.product(Nel, repeat=M.ngens):
        if all(N.is_zero_element(combine(R, side, rho, imgs, N.ngens)) for rho in M.relations.gens):
            yield imgs


def hom_module(M: Module, N: Module) -> Hom:
    """All ``R``-linear maps ``M -> N``, solved from the relation constraints."""
    R = M.ring
    if N.ring != R:
        raise ContractViolation("Hom needs a common ring")
    a, b = M.ngens, N.ngens
    if isinstance(R, ZModRing):
        # Y in R^{ab}: for each relation rho of M, Σ_i rho_i Y_i ∈ Rel_N
        n = R.n
        rels = M.relations.gens
        r = len(rels)
        cols = b * r
        rows = []
        for i in range(a):
            for j in range(b):
                row = [0] * cols
                for g, rho in enumerate(rels):
                    row[g * b + j] = rho[i] % n
                rows.append(tuple(row))
        nrel = []
        for g in range(r):
            for s in N.relations.gens:
                row = [0] * cols
                row[g * b:(g + 1) * b] = s
                nrel.append(tuple(row))
        if r:
            ker = el.kernel_rows(n, tuple(rows) + tuple(nrel), cols)
            sol = [k[: a * b] for k in ker]
        else:
            sol = [R.unit_vector(a * b, i) for i in range(a * b)]
        block = direct_power(N, a) if a else zero_module(R, N.side)
        block = Module(R, M.side, a * b, block.relations)
        pres = present(block, sol)
        return Hom(M, N, pres.module, pres)
    if N.ngens == 1 and N.relations.size == 1:
        return dual(M)
    maps = tuple(_well_defined_images(M, N))
    return Hom(M, N, None, None, maps)


def dual(M: Module) -> Hom:
    """``M* = Hom(M, R)`` as a module on the opposite side.

    Module coordinates map to generator values through ``Hom.images``; each
    image is a length-1 vector holding ``f(e_i)``. Results are memoized per
    module on the ring.
    """
    cache = M.ring.cache.setdefault("dual", {})
    if M not in cache:
        cache[M] = _dual(M)
    return cache[M]


def _dual(M: Module) -> Hom:
    R = M.ring
    side = M.side if M.side != "abelian" else "right"
    a = M.ngens
    rels = list(M.relations.gens)
    free = free_module(R, a, opposite(side))
    if isinstance(R, ZModRing):
        if rels:
            A = tuple(tuple(rho[i] for rho in rels) for i in range(a))
            sol = el.kernel_rows(R.n, A, len(rels))
        else:
            sol = [R.unit_vector(a, i) for i in range(a)]
    else:
        if R.size**a > DEFAULT_CAP:
            raise ResourceError(f"dual search over R^{a} exceeds cap {DEFAULT_CAP}")
        sol = [y for y in itertools.product(R.elements, repeat=a)
               if all(combine(R, side, rho, [(v,) for v in y], 1)[0] == R.zero for rho in rels)]
    pres = present(free, sol)
    return Hom(M, ring_module(R, side), pres.module, pres)


def dual_values(D: Hom, coords) -> Vector:
    """``(f(e_1), ..., f(e_k))`` for the dual element with the given coordinates."""
    return tuple(y[0] for y in D.images(coords))


def dual_elements(M: Module) -> list[Vector]:
    """Every element of ``M*`` as its value tuple on generators."""
    D = dual(M)
    return sorted({dual_values(D, c) for c in D.module.elements()})


def evaluate_dual(M: Module, values: Sequence[int], m: Sequence[int]) -> int:
    """``f(m)`` for ``f`` with generator values ``values``."""
    side = M.side if M.side != "abelian" else "right"
    return combine(M.ring, side, m, [(y,) for y in values], 1)[0]


# --------------------------------------------------------------------------
# isomorphism


def is_isomorphic(M: Module, N: Module, cap: int = 64) -> Verdict:
    """Isomorphism test: invariant factors over ``Z/n``, exhaustive search otherwise."""
    if M.cardinality != N.cardinality:
        return Verdict(False)
    if isinstance(M.ring, ZModRing):
        return Verdict(M.canonical == N.canonical)
    return exhaustive_isomorphic(M, N, cap)


def exhaustive_isomorphic(M: Module, N: Module, cap: int = 64) -> Verdict:
    """Search all homomorphisms ``M -> N`` for a bijective one."""
    if M.cardinality != N.cardinality:
        return Verdict(False)
    if M.cardinality > cap:
        raise ResourceError(f"isomorphism search over {M.cardinality} elements exceeds cap {cap}")
    R = M.ring
    side = M.side if M.side != "abelian" else "right"
    Nel = N.elements()
    Mel = M.elements()
    for imgs in itertools.product(Nel, repeat=M.ngens):
        if not all(N.is_zero_element(combine(R, side, rho, imgs, N.ngens)) for rho in M.relations.gens):
            continue
        values = {N.reduce(combine(R, side, x, imgs, N.ngens)) for x in Mel}
        if len(values) == len(Nel):
            return Verdict(True, imgs)
    return Verdict(False)


# --------------------------------------------------------------------------
# predicates


def is_flat(M: Module) -> Verdict:
    """Ideal criterion: ``I ⊗ M -> M`` injective for every ideal ``I`` on the other side.

    The witness is ``{"ideal": [...], "element": coords}`` of a nonzero kernel
    element of ``I ⊗ M``.
    """
    R = M.ring
    commutative = isinstance(R, ZModRing)
    side = "left" if (M.side == "right" and not commutative) else "right"
    Rmod = ring_module(R, side)
    for I in ideals(R, side):
        if len(I) in (1, R.size):
            continue
        P = present(Rmod, [(g,) for g in I.generators])
        if side == "right":
            f = tensor_map(P.inclusion, identity_map(M), tensor(P.module, M), tensor(Rmod, M))
        else:
            f = tensor_map(identity_map(M), P.inclusion, tensor(M, P.module), tensor(M, Rmod))
        inj = f.is_injective()
        if not inj:
            return Verdict(False, {"ideal": I.labels(), "element": list(inj.witness)})
    return Verdict(True)


def is_projective(M: Module) -> Verdict:
    """Dual-basis test: ``x = Σ_j e_j f_j(x)`` for some ``f_j ∈ M*``.

    Over ``Z/n`` the coefficients are found by solving one linear system; over
    table rings every tuple of dual elements is tried. The witness is the
    list of dual-basis value tuples, and the found basis is always checked by
    enumeration.
    """
    R = M.ring
    k = M.ngens
    side = M.side if M.side != "abelian" else "right"
    if k == 0:
        return Verdict(True, [])
    basis = None
    if isinstance(R, ZModRing):
        n = R.n
        rels = list(M.relations.gens)
        r = len(rels)
        # unknowns: y[j][i] = f_j(e_i) (k*k), then slack s[i][g] (k*r)
        # columns: well-definedness (j, g) -> k*r, then reconstruction (i, j) -> k*k
        ncols = k * r + k * k
        rows = []
        for j in range(k):
            for i in range(k):
                row = [0] * ncols
                for g, rho in enumerate(rels):
                    row[j * r + g] = rho[i] % n
                row[k * r + i * k + j] = 1
                rows.append(tuple(row))
        for i in range(k):
            for g, rho in enumerate(rels):
                row = [0] * ncols
                for j in range(k):
                    row[k * r + i * k + j] = (-rho[j]) % n
                rows.append(tuple(row))
        b = [0] * (k * r) + [1 if i == j else 0 for i in range(k) for j in range(k)]
        x = el.solve_rows(n, tuple(rows), ncols, b)
        if x is not None:
            basis = [tuple(x[j * k + i] for i in range(k)) for j in range(k)]
    else:
        duals = dual_elements(M)
        for choice in itertools.product(duals, repeat=k):
            ok = True
            for i in range(k):
                coeffs = tuple(choice[j][i] for j in range(k))
                if M.reduce(coeffs) != M.gen(i):
                    ok = False
                    break
            if ok:
                basis = list(choice)
                break
    if basis is None:
        return Verdict(False)
    for x in M.elements():
        recon = M.zero
        for j in range(k):
            c = evaluate_dual(M, basis[j], x)
            e = M.gen(j)
            recon = M.add(recon, R.rscale(e, c) if side == "right" else R.lscale(c, e))
        if recon != x:
            raise ConstructionError("dual basis failed verification", (basis, x))
    return Verdict(True, [list(f) for f in basis])


def is_cogenerated(M: Module) -> Verdict:
    """The evaluation map into ``R^{M*}`` is injective; the witness is a nonzero element killed by every dual."""
    R = M.ring
    duals = dual_elements(M)
    if isinstance(R, ZModRing):
        cols = [tuple(f) for f in duals] or [R.zero_vector(M.ngens)]
        # matrix with rows e_i and columns the dual functionals
        A = tuple(tuple(f[i] for f in cols) for i in range(M.ngens))
        ker = el.kernel_rows(R.n, A, len(cols)) if M.ngens else ()
        bad = [v for v in ker if not M.is_zero_element(v)]
        if bad:
            return Verdict(False, list(M.reduce(bad[0])))
        return Verdict(True)
    for x in M.elements():
        if M.is_zero_element(x):
            continue
        if all(evaluate_dual(M, f, x) == R.zero for f in duals):
            return Verdict(False, list(x))
    return Verdict(True)


def test_family(R: Ring, side: str, max_gens: int = 1, cap: int = DEFAULT_CAP) -> tuple[list[Module], str]:
    """Test modules for tensor-injectivity checks and their certainty.

    Over ``Z/n`` the cyclic modules ``Z/d`` (``d | n``) suffice, since every
    finite module is a sum of them and tensor distributes over sums; the
    verdict is exact. Over table rings the family is every quotient of
    ``R^k`` (``k <= max_gens``) and the verdict is bounded.
    """
    if isinstance(R, ZModRing):
        return [cyclic(R, d, side) for d in el.divisors(R.n) if d > 1], "exact"
    family = []
    for k in range(1, max_gens + 1):
        if R.size**k > cap:
            break
        F = free_module(R, k, side)
        family.extend(Module(R, side, k, S.span) for S in all_submodules(F))
    return family, "bounded"


def is_pure_submodule(K: Submodule, L: Optional[Module] = None, test_module: Optional[Module] = None,
                      max_gens: int = 1) -> Verdict:
    """``K ⊗ T -> L ⊗ T`` injective for every test module ``T``.

    With ``test_module`` only that ``T`` is used (purity relative to a
    single module). The witness names the test module and a kernel element.
    """
    L = L if L is not None else K.ambient
    if K.ambient != L:
        raise ContractViolation("K must be a submodule of L")
    R = L.ring
    commutative = isinstance(R, ZModRing)
    tside = opposite(L.side) if not commutative else L.side
    if test_module is not None:
        family, certainty = [test_module], "exact"
    else:
        family, certainty = test_family(R, tside, max_gens)
    P = present(L, K.span.gens)
    skipped = 0
    for T in family:
        try:
            if L.side == "left" and not commutative:
                src, tgt = tensor(T, P.module), tensor(T, L)
                f = tensor_map(identity_map(T), P.inclusion, src, tgt)
            else:
                src, tgt = tensor(P.module, T), tensor(L, T)
                f = tensor_map(P.inclusion, identity_map(T), src, tgt)
        except ResourceError:
            skipped += 1
            continue
        inj = f.is_injective()
        if not inj:
            return Verdict(False, {"test_module": T.describe(), "element": list(inj.witness)}, certainty="exact")
    return Verdict(True, certainty=certainty, details={"tested": len(family) - skipped, "skipped": skipped})


def divisor_chains(n: int, max_len: int = 2, max_card: Optional[int] = None) -> list[tuple[int, ...]]:
    """Divisor chains ``d_1 | d_2 | ...`` of proper-or-full divisors of ``n`` (no 1s)."""
    divs = [d for d in el.divisors(n) if d > 1]
    out = [()]
    frontier = [()]
    for _ in range(max_len):
        nxt = []
        for ch in frontier:
            for d in divs:
                if ch and d % ch[-1]:
                    continue
                new = ch + (d,)
                if max_card is not None and math.prod(new) > max_card:
                    continue
                nxt.append(new)
        out.extend(nxt)
        frontier = nxt
    return out
