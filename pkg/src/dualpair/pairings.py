"""Pairings of a right module with a left module and the weak topology they induce.

A pairing ``P = (V, W)`` is stored as the matrix ``B`` of values on
generators, ``B[i][j] = <e_i, e_j>``, and evaluated as

    <v, w> = Σ_ij  w_j · B[i][j] · v_i

which is right-linear in ``v`` and left-linear in ``w``.

Every carrier is finite, so the linear weak topology on ``V`` has the least
neighbourhood ``W^⊥`` of zero. The closure is still computed from its
definition (an intersection of ``X + F^⊥`` over a family of finite subsets
``F``) and then compared against ``X + W^⊥``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import reduce
from typing import Iterable, Sequence

from . import exactlin as el
from .errors import ConsistencyError, ConstructionError, ContractViolation, ResourceError
from .modules import (
    Hom,
    LinearMap,
    Module,
    Submodule,
    all_submodules,
    dual,
    dual_values,
    present,
    quotient,
    submodule_span,
)
from .rings import Ring, TableRing, ZModRing, is_injective_cogenerator, is_self_injective
from .spans import HowellSpan, SetSpan
from .verdicts import Verdict

Vector = tuple[int, ...]


# --------------------------------------------------------------------------
# construction


@dataclass(frozen=True, eq=False)
class Pairing:
    """A balanced bilinear form ``V × W -> R``.

    Attributes:
        V: Right module (first slot).
        W: Left module (second slot).
        B: Values on generators, ``B[i][j] = <e_i, e_j>``.
        name: Optional label used in reports.
    """

    V: Module
    W: Module
    B: tuple[tuple[int, ...], ...]
    name: str = ""
    cache: dict = field(default_factory=dict, repr=False)

    @property
    def ring(self) -> Ring:
        return self.V.ring

    def descriptor(self) -> dict:
        return {"V": self.V.describe(), "W": self.W.describe(), "beta": [list(r) for r in self.B],
                **({"name": self.name} if self.name else {})}

    # -- evaluation --------------------------------------------------------

    def pair(self, v, w) -> int:
        R = self.ring
        s = R.zero
        for i, vi in enumerate(v):
            if vi == R.zero:
                continue
            row = self.B[i]
            for j, wj in enumerate(w):
                if wj == R.zero:
                    continue
                s = R.add(s, R.mul(R.mul(wj, row[j]), vi))
        return s

    def kappa_values(self, v) -> Vector:
        """``κ(v)`` as its values ``(<v, e_j>)_j`` on the generators of ``W``."""
        R = self.ring
        out = []
        for j in range(self.W.ngens):
            s = R.zero
            for i, vi in enumerate(v):
                s = R.add(s, R.mul(self.B[i][j], vi))
            out.append(s)
        return tuple(out)

    def chi_values(self, w) -> Vector:
        """``χ(w)`` as its values ``(<e_i, w>)_i`` on the generators of ``V``."""
        R = self.ring
        out = []
        for i in range(self.V.ngens):
            s = R.zero
            for j, wj in enumerate(w):
                s = R.add(s, R.mul(wj, self.B[i][j]))
            out.append(s)
        return tuple(out)

    @property
    def dual_W(self) -> Hom:
        return dual(self.W)

    @property
    def dual_V(self) -> Hom:
        return dual(self.V)

    def kappa(self) -> LinearMap:
        """``κ_P : V -> *W``."""
        D = self.dual_W
        return LinearMap(self.V, D.module, tuple(D.presented.lift(self.kappa_values(self.V.gen(i)))
                                                 for i in range(self.V.ngens)))

    def chi(self) -> LinearMap:
        """``χ_P : W -> V*``."""
        D = self.dual_V
        return LinearMap(self.W, D.module, tuple(D.presented.lift(self.chi_values(self.W.gen(j)))
                                                 for j in range(self.W.ngens)))

    # -- orthogonals -------------------------------------------------------

    def _sub_V(self, X) -> Submodule:
        return X if isinstance(X, Submodule) else submodule_span(self.V, X)

    def _sub_W(self, K) -> Submodule:
        return K if isinstance(K, Submodule) else submodule_span(self.W, K)

    def perp_of_W_subset(self, F) -> Submodule:
        """``F^⊥ = {v : <v, f> = 0 for all f ∈ F}``."""
        vecs = list(F.span.gens) if isinstance(F, Submodule) else [tuple(f) for f in F]
        R, V = self.ring, self.V
        cols = [self.chi_values(f) for f in vecs]
        cols = [c for c in cols if any(x != R.zero for x in c)]
        if not cols:
            return V.full()
        if isinstance(R, ZModRing):
            A = tuple(tuple(c[i] for c in cols) for i in range(V.ngens))
            ker = el.kernel_rows(R.n, A, len(cols))
            return Submodule(V, HowellSpan(R, V.ngens, tuple(ker) + tuple(V.relations.gens), V.relations.kind))
        members = []
        for v in itertools.product(R.elements, repeat=V.ngens):
            if all(self.pair(v, f) == R.zero for f in vecs):
                members.append(v)
        return Submodule(V, SetSpan.from_members(R, V.ngens, members, V.relations.kind))

    def perp_of_V_subset(self, X) -> Submodule:
        """``X^⊥ = {w : <x, w> = 0 for all x ∈ X}``."""
        vecs = list(X.span.gens) if isinstance(X, Submodule) else [tuple(x) for x in X]
        R, W = self.ring, self.W
        cols = [self.kappa_values(x) for x in vecs]
        cols = [c for c in cols if any(y != R.zero for y in c)]
        if not cols:
            return W.full()
        if isinstance(R, ZModRing):
            A = tuple(tuple(c[j] for c in cols) for j in range(W.ngens))
            ker = el.kernel_rows(R.n, A, len(cols))
            return Submodule(W, HowellSpan(R, W.ngens, tuple(ker) + tuple(W.relations.gens), W.relations.kind))
        members = []
        for w in itertools.product(R.elements, repeat=W.ngens):
            if all(self.pair(x, w) == R.zero for x in vecs):
                members.append(w)
        return Submodule(W, SetSpan.from_members(R, W.ngens, members, W.relations.kind))

    def radical(self) -> Submodule:
        """``W^⊥ = Ker κ_P``: the least neighbourhood of zero in ``V``."""
        if "radical" not in self.cache:
            self.cache["radical"] = self.perp_of_W_subset([self.W.gen(j) for j in range(self.W.ngens)])
        return self.cache["radical"]

    def right_radical(self) -> Submodule:
        """``V^⊥ = Ker χ_P``."""
        if "right_radical" not in self.cache:
            self.cache["right_radical"] = self.perp_of_V_subset([self.V.gen(i) for i in range(self.V.ngens)])
        return self.cache["right_radical"]

    # -- topology ----------------------------------------------------------

    def neighbourhoods(self, family: str = "chain") -> list[Submodule]:
        """Basic neighbourhoods ``F^⊥`` over a family of finite subsets ``F ⊆ W``.

        ``"chain"`` takes the prefixes of the generator list of ``W`` (starting
        from the empty set); ``"lattice"`` takes every submodule of ``W``.
        Either family contains a set spanning ``W``.
        """
        key = ("nbhd", family)
        if key not in self.cache:
            W = self.W
            if family == "chain":
                gens = [W.gen(j) for j in range(W.ngens)]
                fams = [gens[:t] for t in range(len(gens) + 1)]
                out = [self.perp_of_W_subset(F) for F in fams]
            elif family == "lattice":
                out = [self.perp_of_W_subset(K) for K in all_submodules(W)]
            else:
                raise ContractViolation(f"unknown neighbourhood family {family!r}")
            uniq = []
            for N in out:
                if N not in uniq:
                    uniq.append(N)
            self.cache[key] = uniq
        return self.cache[key]

    def closure(self, X, family: str = "chain", check: bool = True) -> Submodule:
        """``∩ (X + F^⊥)`` over the chosen family; checked against ``X + W^⊥``."""
        X = self._sub_V(X)
        result = reduce(lambda a, b: a & b, (X + N for N in self.neighbourhoods(family)))
        if check:
            collapsed = X + self.radical()
            if result != collapsed:
                raise ConsistencyError("definitional closure differs from X + W^⊥", (X.generators, result.generators))
        return result

    def biperp(self, X) -> Submodule:
        X = self._sub_V(X)
        return self.perp_of_W_subset(self.perp_of_V_subset(X))

    def is_closed(self, X) -> bool:
        X = self._sub_V(X)
        return self.closure(X) == X

    def is_orth_closed(self, X) -> bool:
        X = self._sub_V(X)
        return self.biperp(X) == X

    def is_open(self, X, check: bool = True) -> Verdict:
        """``X ⊇ F^⊥`` for some finite ``F``; the reduced test is ``X ⊇ W^⊥``."""
        X = self._sub_V(X)
        reduced = self.radical() <= X
        if check:
            searched = any(N <= X for N in self.neighbourhoods("lattice"))
            if searched != reduced:
                raise ConsistencyError("open-set search disagrees with the reduced test", X.generators)
        return Verdict(reduced, note="cofinite: vacuous for finite V")

    def is_dense(self, X, Y=None) -> Verdict:
        """Is ``X`` dense in ``Y`` (default ``Y = V``)?

        The closure route is the verdict; the ``X^⊥ = Y^⊥`` route is reported in
        ``details`` and must agree whenever ``R_R`` is an injective cogenerator.
        """
        X = self._sub_V(X)
        Y = self.V.full() if Y is None else self._sub_V(Y)
        if not X <= Y:
            raise ContractViolation("is_dense needs X ⊆ Y")
        by_closure = Y <= self.closure(X)
        by_perp = self.perp_of_V_subset(X) == self.perp_of_V_subset(Y)
        if by_closure != by_perp and is_injective_cogenerator(self.ring):
            raise ConsistencyError("density routes disagree over an injective-cogenerator ring", (X.generators, Y.generators))
        return Verdict(by_closure, details={"closure_route": by_closure, "perp_route": by_perp})

    def is_hausdorff(self) -> Verdict:
        """Ker κ_P = 0; the witness is a nonzero element of the radical."""
        rad = self.radical()
        if rad.is_zero():
            return Verdict(True)
        w = next(v for v in rad.elements() if not self.V.is_zero_element(v))
        return Verdict(False, list(w))

    def chi_injective(self) -> Verdict:
        """``W ↪ V*``."""
        rr = self.right_radical()
        if rr.is_zero():
            return Verdict(True)
        w = next(v for v in rr.elements() if not self.W.is_zero_element(v))
        return Verdict(False, list(w))

    def is_dense_pairing(self) -> Verdict:
        """``κ_P(V)`` dense in ``*W`` for the finite topology.

        The finite topology on ``*W`` has trivial least neighbourhood, so
        density is surjectivity of ``κ_P``; both are computed.
        """
        k = self.kappa()
        surj = bool(k.is_surjective())
        cp = canonical_pairing(self.W)
        image = k.image()
        dense = cp.is_dense(image).value
        if dense != surj:
            raise ConsistencyError("dense pairing: closure route and surjectivity disagree")
        return Verdict(surj)

    def completion(self) -> "Completion":
        """``V / W^⊥`` with the comparison map into ``*W`` induced by ``κ_P``."""
        Q, proj = quotient(self.V, self.radical())
        D = self.dual_W
        cmp = LinearMap(Q, D.module, self.kappa().images)
        inj = bool(cmp.is_injective())
        surj = bool(cmp.is_surjective())
        dense = bool(self.is_dense_pairing())
        w_inj = is_W_injective(self.W)
        if dense and w_inj and not (inj and surj):
            raise ConsistencyError("dense pairing over a W-injective ring has a completion that is not *W")
        return Completion(Q, cmp, inj, surj, dense, bool(w_inj))

    def __repr__(self):
        return f"Pairing({self.name or ''} V={self.V!r}, W={self.W!r}, B={[list(r) for r in self.B]})"


@dataclass(frozen=True, eq=False)
class Completion:
    module: Module
    comparison: LinearMap
    injective: bool
    surjective: bool
    dense: bool
    w_injective: bool

    @property
    def is_isomorphism(self) -> bool:
        return self.injective and self.surjective


def _check_beta(V: Module, W: Module, B) -> None:
    R = V.ring
    for rho in V.relations.gens:
        for j in range(W.ngens):
            s = R.zero
            for i, r in enumerate(rho):
                s = R.add(s, R.mul(B[i][j], r))
            if s != R.zero:
                raise ConstructionError(f"beta does not vanish on relation {list(rho)} of V (column {j})",
                                        {"relation_V": list(rho), "column": j})
    for sigma in W.relations.gens:
        for i in range(V.ngens):
            s = R.zero
            for j, t in enumerate(sigma):
                s = R.add(s, R.mul(t, B[i][j]))
            if s != R.zero:
                raise ConstructionError(f"beta does not vanish on relation {list(sigma)} of W (row {i})",
                                        {"relation_W": list(sigma), "row": i})


def make_pairing(V: Module, W: Module, beta, name: str = "", cap: int = 4096) -> Pairing:
    """Validate and build a pairing.

    ``beta`` is either a generator matrix ``B`` (``V.ngens × W.ngens``) or a
    callable on element pairs; a callable is checked exhaustively for
    additivity in both slots and for the balance laws, and a violation
    raises ``ConstructionError`` with a witness.
    """
    R = V.ring
    if W.ring != R:
        raise ContractViolation("V and W must share a ring")
    if isinstance(R, TableRing) and (V.side != "right" or W.side != "left"):
        raise ContractViolation("a pairing needs V a right module and W a left module")
    if callable(beta):
        Vel, Wel = V.elements(cap), W.elements(cap)
        if len(Vel) * len(Wel) * R.size > 64 * cap:
            raise ResourceError("bilinearity check exceeds cap")
        for v, w in itertools.product(Vel, Wel):
            b = beta(v, w)
            for r in R.elements:
                if beta(V.act(v, r), w) != R.mul(b, r):
                    raise ConstructionError("balance fails in V", {"v": list(v), "r": r, "w": list(w)})
                if beta(v, W.act(w, r)) != R.mul(r, b):
                    raise ConstructionError("balance fails in W", {"v": list(v), "r": r, "w": list(w)})
        for v, v2, w in itertools.product(Vel, Vel, Wel):
            if beta(V.add(v, v2), w) != R.add(beta(v, w), beta(v2, w)):
                raise ConstructionError("not additive in V", {"v": list(v), "v2": list(v2), "w": list(w)})
        for v, w, w2 in itertools.product(Vel, Wel, Wel):
            if beta(v, W.add(w, w2)) != R.add(beta(v, w), beta(v, w2)):
                raise ConstructionError("not additive in W", {"v": list(v), "w": list(w), "w2": list(w2)})
        B = tuple(tuple(beta(V.gen(i), W.gen(j)) for j in range(W.ngens)) for i in range(V.ngens))
        P = Pairing(V, W, B, name)
        for v, w in itertools.product(Vel, Wel):
            if P.pair(v, w) != beta(v, w):
                raise ConstructionError("callable disagrees with its generator matrix", {"v": list(v), "w": list(w)})
        return P
    B = [list(row) for row in beta]
    if len(B) != V.ngens or any(len(row) != W.ngens for row in B):
        raise ContractViolation(f"beta must be {V.ngens}x{W.ngens}, got {len(B)}x{len(B[0]) if B else 0}")
    if isinstance(R, ZModRing):
        B = [[int(x) % R.n for x in row] for row in B]
    elif any(not 0 <= x < R.size for row in B for x in row):
        raise ContractViolation("beta entries must be ring element indices")
    B = tuple(tuple(row) for row in B)
    _check_beta(V, W, B)
    return Pairing(V, W, B, name)


def zero_pairing(V: Module, W: Module) -> Pairing:
    R = V.ring
    return Pairing(V, W, tuple(tuple(R.zero for _ in range(W.ngens)) for _ in range(V.ngens)), "zero")


def canonical_pairing(W: Module) -> Pairing:
    """``(*W, W)`` with ``<f, w> = f(w)``.

    ``*W`` is the presented dual module; its ``c``-th generator is the
    functional whose generator values are ``B[c]``.
    """
    cache = W.ring.cache.setdefault("canonical_pairing", {})
    if W in cache:
        return cache[W]
    D = dual(W)
    Wstar = D.module
    B = tuple(dual_values(D, Wstar.gen(c)) for c in range(Wstar.ngens))
    P = Pairing(Wstar, W, B, "canonical")
    _check_beta(Wstar, W, B)
    cache[W] = P
    return P


def canonical_right_pairing(V: Module) -> Pairing:
    """``(V, V*)`` with ``<v, f> = f(v)``."""
    D = dual(V)
    Vstar = D.module
    B = tuple(tuple(dual_values(D, Vstar.gen(c))[i] for c in range(Vstar.ngens)) for i in range(V.ngens))
    return make_pairing(V, Vstar, B, "evaluation")


# --------------------------------------------------------------------------
# injectivity relative to a module


def is_W_injective(W: Module) -> Verdict:
    """``R`` is ``W``-injective: every ``U -> R`` on a submodule ``U ⊆ W`` extends.

    Self-injective rings are injective, hence ``W``-injective; otherwise the
    restriction map ``*W -> *U`` is tested for surjectivity on every
    submodule by counting restricted functionals.
    """
    R = W.ring
    side = "left" if W.side == "left" else "right"
    if is_self_injective(R, side):
        return Verdict(True, note="via self-injectivity")
    Wvals = _dual_value_set(W)
    for U in all_submodules(W):
        P = present(W, U.span.gens)
        Uvals = _dual_value_set(P.module)
        restricted = set()
        for f in Wvals:
            restricted.add(tuple(_eval_dual(W, f, g) for g in P.gens))
        if len(restricted) != len(Uvals):
            return Verdict(False, {"submodule": [list(g) for g in U.generators]})
    return Verdict(True)


def _dual_value_set(M: Module) -> list[Vector]:
    D = dual(M)
    return sorted({dual_values(D, c) for c in D.module.elements()})


def _eval_dual(M: Module, values, m) -> int:
    R = M.ring
    s = R.zero
    for mi, y in zip(m, values):
        s = R.add(s, R.mul(mi, y) if M.side == "left" else R.mul(y, mi))
    return s


# --------------------------------------------------------------------------
# annihilators and common kernels


def an(N: Module, L) -> Submodule:
    """``An(L) = {f ∈ Hom(N, R) : f(L) = 0}`` inside the dual module of ``N``."""
    L = L if isinstance(L, Submodule) else submodule_span(N, L)
    D = dual(N)
    R = N.ring
    gens = [g for g in L.span.gens]
    k = N.ngens
    free = D.presented.ambient
    if isinstance(R, ZModRing):
        if gens:
            A = tuple(tuple(g[i] for g in gens) for i in range(k))
            rows = el.kernel_rows(R.n, A, len(gens))
        else:
            rows = tuple(R.unit_vector(k, i) for i in range(k))
        target = HowellSpan(R, k, rows, free.relations.kind)
    else:
        members = [y for y in itertools.product(R.elements, repeat=k)
                   if all(_eval_dual(N, y, g) == R.zero for g in gens)]
        target = SetSpan.from_members(R, k, members, free.relations.kind)
    return D.presented.inclusion.preimage(target)


def ke(N: Module, X) -> Submodule:
    """``Ke(X) = ∩ Ker f`` for ``X`` a submodule of ``dual(N).module`` or a list of value tuples."""
    D = dual(N)
    R = N.ring
    if isinstance(X, Submodule):
        vals = [tuple(y[0] for y in D.images(g)) for g in X.span.gens]
    else:
        vals = [tuple(f) for f in X]
    vals = [v for v in vals if any(x != R.zero for x in v)]
    if not vals:
        return N.full()
    if isinstance(R, ZModRing):
        A = tuple(tuple(f[i] for f in vals) for i in range(N.ngens))
        rows = el.kernel_rows(R.n, A, len(vals))
        return Submodule(N, HowellSpan(R, N.ngens, tuple(rows) + tuple(N.relations.gens), N.relations.kind))
    members = [x for x in itertools.product(R.elements, repeat=N.ngens)
               if all(_eval_dual(N, f, x) == R.zero for f in vals)]
    return Submodule(N, SetSpan.from_members(R, N.ngens, members, N.relations.kind))


def dual_submodule(N: Module, values: Iterable[Sequence[int]]) -> Submodule:
    """Submodule of ``dual(N).module`` generated by functionals given by generator values."""
    D = dual(N)
    return submodule_span(D.module, [D.presented.lift(tuple(v)) for v in values])


# --------------------------------------------------------------------------
# subpairings and morphisms


@dataclass(frozen=True, eq=False)
class PairingMorphism:
    """``(ξ, θ) : (V', W') -> (V, W)`` with ``ξ : V -> V'`` and ``θ : W' -> W``.

    Validated against ``<ξ(v), w'> = <v, θ(w')>``.
    """

    source: Pairing
    target: Pairing
    xi: LinearMap
    theta: LinearMap

    def __post_init__(self):
        S, T = self.source, self.target
        if self.xi.domain != T.V or self.xi.codomain != S.V:
            raise ContractViolation("ξ must map V to V'")
        if self.theta.domain != S.W or self.theta.codomain != T.W:
            raise ContractViolation("θ must map W' to W")
        for i in range(T.V.ngens):
            v = T.V.gen(i)
            for q in range(S.W.ngens):
                w2 = S.W.gen(q)
                if S.pair(self.xi(v), w2) != T.pair(v, self.theta(w2)):
                    raise ConstructionError("morphism compatibility fails", {"v": list(v), "w'": list(w2)})


def subpairing(P: Pairing, Vp, Wp) -> tuple[Pairing, PairingMorphism, dict]:
    """``Q = (V/V', W')`` with its morphism ``(π, ι) : Q -> P``.

    Requires ``<V', W'> = 0`` (checked on every element pair). The returned
    metadata records whether ``W' ⊂ W`` is pure.
    """
    from .modules import is_pure_submodule

    Vp = P._sub_V(Vp)
    Wp = P._sub_W(Wp)
    R = P.ring
    for v in Vp.elements():
        for w in Wp.elements():
            if P.pair(v, w) != R.zero:
                raise ContractViolation(f"<V', W'> != 0 at ({list(v)}, {list(w)})")
    Qv, proj = quotient(P.V, Vp)
    pres = present(P.W, Wp.span.gens)
    Wq = pres.module
    B = tuple(tuple(P.pair(P.V.gen(i), g) for g in pres.gens) for i in range(P.V.ngens))
    Q = make_pairing(Qv, Wq, B, name="subpairing")
    mor = PairingMorphism(Q, P, proj, pres.inclusion)
    meta = {"W_prime_pure": bool(is_pure_submodule(Wp)), "presented_W_prime": pres}
    return Q, mor, meta


def restrict_W(P: Pairing, Wp) -> tuple[Pairing, "object"]:
    """``(V, W')`` for a submodule ``W' ⊆ W``; returns the pairing and the presentation of ``W'``."""
    Wp = P._sub_W(Wp)
    pres = present(P.W, Wp.span.gens)
    B = tuple(tuple(P.pair(P.V.gen(i), g) for g in pres.gens) for i in range(P.V.ngens))
    return make_pairing(P.V, pres.module, B, name="restricted"), pres


def induced_pairing(Omega: Pairing, xi: LinearMap) -> Pairing:
    """``(V, W)`` with ``<v, w> = <ξ(v), w>_Ω`` for ``ξ : V -> Y``."""
    if xi.codomain != Omega.V:
        raise ContractViolation("ξ must land in the first carrier of Ω")
    V = xi.domain
    B = tuple(tuple(Omega.pair(xi(V.gen(i)), Omega.W.gen(j)) for j in range(Omega.W.ngens)) for i in range(V.ngens))
    return make_pairing(V, Omega.W, B, name="induced")


# --------------------------------------------------------------------------
# dual maps


@dataclass(frozen=True, eq=False)
class DualMap:
    """``θ* : *W -> *W'``, ``f ↦ f ∘ θ``, for ``θ : W' -> W``."""

    theta: LinearMap
    map: LinearMap
    source: Pairing
    target: Pairing

    @property
    def morphism(self) -> PairingMorphism:
        """``(θ*, θ) : (*W', W') -> (*W, W)``."""
        return PairingMorphism(self.target, self.source, self.map, self.theta)


def dual_map(theta: LinearMap) -> DualMap:
    W2, W = theta.domain, theta.codomain
    PW = canonical_pairing(W)
    PW2 = canonical_pairing(W2)
    D, D2 = dual(W), dual(W2)
    images = []
    for c in range(PW.V.ngens):
        f = dual_values(D, PW.V.gen(c))
        g = tuple(_eval_dual(W, f, theta(W2.gen(q))) for q in range(W2.ngens))
        images.append(D2.presented.lift(g))
    m = LinearMap(PW.V, PW2.V, tuple(images))
    return DualMap(theta, m, PW, PW2)


def image_of(f: LinearMap, S: Submodule) -> Submodule:
    """``f(S)``."""
    C = f.codomain
    return submodule_span(C, [f(g) for g in S.span.gens])
