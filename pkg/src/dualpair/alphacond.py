"""The α-map of a pairing and the predicates built on it.

For a pairing ``P = (V, W)`` and a right module ``M``

    α_M : M ⊗ W -> Hom(V, M),   m ⊗ w  ↦  (v ↦ m <v, w>)

``P`` satisfies the α-condition when every ``α_M`` is injective. Over
``Z/n`` it suffices to test the cyclic modules ``Z/d`` (``d | n``), because
every finite module is a direct sum of those and ``α`` commutes with finite
sums; ``cyclic_reduction_oracle`` compares that shortcut against a brute
force family. Over table rings the family is truncated and verdicts are
flagged ``"bounded"``.

Maps into ``Hom(V, M)`` are represented through the embedding
``Hom(V, M) ⊆ M^{V.ngens}`` (values on generators, coordinate
``i * M.ngens + p``).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Optional

from . import exactlin as el
from .errors import ConsistencyError, ContractViolation, HypothesisError, ResourceError, UnsupportedError
from .modules import (
    LinearMap,
    Module,
    Submodule,
    Tensor,
    all_submodules,
    direct_power,
    dual,
    dual_values,
    fp_module,
    free_module,
    identity_map,
    is_flat,
    is_projective,
    is_pure_submodule,
    opposite,
    present,
    submodule_span,
    tensor,
    tensor_map,
    test_family,
)
from .pairings import (
    Pairing,
    canonical_pairing,
    canonical_right_pairing,
    induced_pairing,
    ke,
    make_pairing,
    restrict_W,
    subpairing,
)
from .rings import TableRing, ZModRing, is_injective_cogenerator, is_qf, is_semisimple
from .spans import HowellSpan
from .verdicts import Verdict

Vector = tuple[int, ...]


# --------------------------------------------------------------------------
# the α-map


@dataclass(frozen=True, eq=False)
class AlphaMap:
    pairing: Pairing
    test_module: Module
    tensor: Tensor
    codomain: Module
    map: LinearMap

    def __call__(self, t) -> Vector:
        return self.map(t)

    def value_at(self, t, v) -> Vector:
        """``α(t)(v)`` as an element of ``M``."""
        M = self.test_module
        R = M.ring
        img = self.map.raw(t)
        k = M.ngens
        acc = M.zero
        for i, vi in enumerate(v):
            block = img[i * k:(i + 1) * k]
            acc = R.vadd(acc, R.rscale(block, vi))
        return M.reduce(acc)


def _alpha_func(P: Pairing, M: Module):
    R = P.ring
    kM, b, kV = M.ngens, P.W.ngens, P.V.ngens
    B = P.B

    def func(c):
        out = [R.zero] * (kV * kM)
        for idx, r in enumerate(c):
            if r == R.zero:
                continue
            p, j = divmod(idx, b)
            for i in range(kV):
                x = R.mul(r, B[i][j])
                if x != R.zero:
                    out[i * kM + p] = R.add(out[i * kM + p], x)
        return tuple(out)

    return func


def alpha_map(P: Pairing, M: Module, verify: bool = True, cap: int = 4096) -> AlphaMap:
    """Build ``α_M`` and check the defining formula on generators.

    With ``verify`` the value ``α(m ⊗ w)(v) = m <v, w>`` is compared for
    every generator triple, and for every element triple when that stays
    under ``cap``.
    """
    R = P.ring
    if M.ring != R:
        raise ContractViolation("test module must live over the pairing's ring")
    if isinstance(R, TableRing) and M.side != "right":
        raise ContractViolation("the α-map needs a right test module")
    T = tensor(M, P.W)
    target = direct_power(M, P.V.ngens)
    target = Module(R, M.side, target.ngens, target.relations)
    f = LinearMap.from_function(T.module, target, _alpha_func(P, M))
    A = AlphaMap(P, M, T, target, f)
    if verify:
        if M.cardinality * P.W.cardinality * P.V.cardinality <= cap:
            triples = itertools.product(M.elements(), P.W.elements(), P.V.elements())
        else:
            triples = itertools.product([M.gen(p) for p in range(M.ngens)], [P.W.gen(j) for j in range(P.W.ngens)],
                                        [P.V.gen(i) for i in range(P.V.ngens)])
        for m, w, v in triples:
            lhs = A.value_at(T.pure(m, w), v)
            rhs = M.reduce(R.rscale(m, P.pair(v, w)))
            if lhs != rhs:
                raise ConsistencyError("α-map formula check failed", {"m": list(m), "w": list(w), "v": list(v)})
    return A


def alpha_injective_for(P: Pairing, M: Module) -> Verdict:
    """Is ``α_M`` injective? The witness is a nonzero kernel element of ``M ⊗ W``."""
    A = alpha_map(P, M)
    inj = A.map.is_injective()
    if inj:
        return Verdict(True)
    return Verdict(False, {"test_module": M.describe(), "element": list(inj.witness)})


@dataclass(frozen=True)
class AlphaVerdict(Verdict):
    pairing_id: str = ""


def satisfies_alpha(P: Pairing, max_gens: int = 1) -> AlphaVerdict:
    """α-condition over the backend's test family (exact over ``Z/n``)."""
    family, certainty = test_family(P.ring, "right", max_gens)
    tested = skipped = 0
    for M in family:
        try:
            v = alpha_injective_for(P, M)
        except ResourceError:
            skipped += 1
            continue
        tested += 1
        if not v:
            return AlphaVerdict(False, v.witness, "exact", pairing_id=P.name)
    return AlphaVerdict(True, None, certainty, details={"tested": tested, "skipped": skipped}, pairing_id=P.name)


# --------------------------------------------------------------------------
# local projectivity


def local_dual_basis(W: Module, xs) -> Optional[list[Vector]]:
    """Functionals ``g_j ∈ *W`` with ``x = Σ_j g_j(x) e_j`` for every ``x`` in ``xs``.

    Any local dual basis can be rewritten over the generators ``e_j`` of
    ``W``, so only the ``g_j`` are unknown. Returns their generator values
    or ``None``.
    """
    R = W.ring
    k = W.ngens
    xs = [tuple(x) for x in xs]
    side = W.side
    if k == 0 or not xs:
        return [R.zero_vector(k) for _ in range(k)]
    if isinstance(R, ZModRing):
        n = R.n
        rels = list(W.relations.gens)
        r = len(rels)
        nx = len(xs)
        # unknowns G[j][i] (k*k) then slack s[x][g] (nx*r)
        # columns: well-definedness (j, g) then reconstruction (x, j)
        ncols = k * r + nx * k
        rows = []
        for j in range(k):
            for i in range(k):
                row = [0] * ncols
                for g, sig in enumerate(rels):
                    row[j * r + g] = sig[i] % n
                for t, x in enumerate(xs):
                    row[k * r + t * k + j] = x[i] % n
                rows.append(tuple(row))
        for t in range(nx):
            for g, sig in enumerate(rels):
                row = [0] * ncols
                for j in range(k):
                    row[k * r + t * k + j] = (-sig[j]) % n
                rows.append(tuple(row))
        b = [0] * (k * r) + [x[j] % n for x in xs for j in range(k)]
        sol = el.solve_rows(n, tuple(rows), ncols, b)
        if sol is None:
            return None
        return [tuple(sol[j * k + i] for i in range(k)) for j in range(k)]
    D = dual(W)
    duals = sorted({dual_values(D, c) for c in D.module.elements()})
    if len(duals) ** k > 10**6:
        raise ResourceError("local dual basis search too large")
    for choice in itertools.product(duals, repeat=k):
        ok = True
        for x in xs:
            recon = W.zero
            for j in range(k):
                c = _eval(W, choice[j], x)
                e = W.gen(j)
                recon = R.vadd(recon, R.lscale(c, e) if side == "left" else R.rscale(e, c))
            if W.reduce(recon) != W.reduce(x):
                ok = False
                break
        if ok:
            return list(choice)
    return None


def _eval(M: Module, values, m) -> int:
    R = M.ring
    s = R.zero
    for mi, y in zip(m, values):
        s = R.add(s, R.mul(mi, y) if M.side == "left" else R.mul(y, mi))
    return s


def is_locally_projective(W: Module) -> Verdict:
    """Local projectivity of a left module, decided by two independent routes.

    Route 1 is the α-condition of ``(*W, W)``. Route 2 looks for a local
    dual basis on every submodule of ``W``. Disagreement raises
    ``ConsistencyError``.
    """
    cp = canonical_pairing(W)
    r1 = satisfies_alpha(cp)
    r2, failing = True, None
    for F in all_submodules(W):
        if local_dual_basis(W, F.span.gens) is None:
            r2, failing = False, F
            break
    if bool(r1) != r2:
        raise ConsistencyError("local projectivity routes disagree", {"alpha": bool(r1), "dual_basis": r2})
    witness = r1.witness if not r1 else None
    if failing is not None:
        witness = {"alpha": r1.witness, "submodule_without_dual_basis": [list(g) for g in failing.generators]}
    return Verdict(r2, witness, certainty=r1.certainty, details={"route_alpha": bool(r1), "route_dual_basis": r2})


# --------------------------------------------------------------------------
# membership criterion


def q2_membership(P: Pairing, M: Module, N: Submodule, t, alpha_verdict: Optional[Verdict] = None) -> Verdict:
    """Membership of ``t ∈ M ⊗ W`` in the image of ``N ⊗ W``.

    The criterion ``α(t)(v) ∈ N`` for all ``v ∈ V`` is evaluated by
    enumerating ``V`` and compared with a direct image computation; the
    two must agree on α-pairings.
    """
    av = alpha_verdict if alpha_verdict is not None else satisfies_alpha(P)
    if not av:
        raise HypothesisError("membership criterion needs an α-pairing")
    A = alpha_map(P, M, verify=False)
    t = A.tensor.module.reduce(t)
    criterion = all(N.contains(A.value_at(t, v)) for v in P.V.elements())
    pres = present(M, N.span.gens)
    src = tensor(pres.module, P.W)
    inc = tensor_map(pres.inclusion, identity_map(P.W), src, A.tensor)
    direct = inc.image().contains(t)
    if criterion != direct:
        raise ConsistencyError("membership routes disagree", {"t": list(t)})
    return Verdict(criterion, details={"criterion": criterion, "image": direct})


# --------------------------------------------------------------------------
# tensor pairings


def tensor_pairing(P: Pairing, P2: Pairing, variant: str = "left") -> Pairing:
    """Tensor product of two pairings over ``Z/n``.

    ``"left"``:  ``(V' ⊗ V, W ⊗ W')`` with ``<v' ⊗ v, w ⊗ w'> = <v, w><v', w'>``.
    ``"right"``: ``(V ⊗ V', W' ⊗ W)`` with ``<v ⊗ v', w' ⊗ w> = <v, w><v', w'>``.
    """
    R = P.ring
    if not isinstance(R, ZModRing):
        raise UnsupportedError("tensor pairings need bimodules, available only over Z/n")
    V, W, V2, W2 = P.V, P.W, P2.V, P2.W
    if variant == "left":
        TV, TW = tensor(V2, V), tensor(W, W2)
        B = [[R.mul(P.B[i][j], P2.B[q][s]) for j in range(W.ngens) for s in range(W2.ngens)]
             for q in range(V2.ngens) for i in range(V.ngens)]
    elif variant == "right":
        TV, TW = tensor(V, V2), tensor(W2, W)
        B = [[R.mul(P.B[i][j], P2.B[q][s]) for s in range(W2.ngens) for j in range(W.ngens)]
             for i in range(V.ngens) for q in range(V2.ngens)]
    else:
        raise ContractViolation("variant must be 'left' or 'right'")
    Vt = Module(R, "right", TV.module.ngens, TV.module.relations)
    Wt = Module(R, "left", TW.module.ngens, TW.module.relations)
    return make_pairing(Vt, Wt, B, name=f"tensor-{variant}")


def tensor_pairing_checked(P: Pairing, P2: Pairing, alpha_P=None, alpha_P2=None) -> tuple[Pairing, dict]:
    """Left tensor pairing plus the mirrored right one, checked to be isomorphic.

    When both factors are α-pairings the α-condition of the product is
    asserted.
    """
    L = tensor_pairing(P, P2, "left")
    Rt = tensor_pairing(P2, P, "right")
    # the right pairing of (P2, P) uses the same index order as the left pairing of (P, P2)
    for i in range(L.V.ngens):
        for j in range(L.W.ngens):
            if L.pair(L.V.gen(i), L.W.gen(j)) != Rt.pair(Rt.V.gen(i), Rt.W.gen(j)):
                raise ConsistencyError("left and right tensor pairings are not isomorphic")
    aP = satisfies_alpha(P) if alpha_P is None else alpha_P
    aP2 = satisfies_alpha(P2) if alpha_P2 is None else alpha_P2
    aL = satisfies_alpha(L)
    info = {"alpha_P": bool(aP), "alpha_P2": bool(aP2), "alpha_product": bool(aL)}
    if aP and aP2 and not aL:
        raise ConsistencyError("tensor product of α-pairings is not an α-pairing", aL.witness)
    return L, info


# --------------------------------------------------------------------------
# β_M, δ and the Ke formula


def beta_map(M: Module, x: int) -> tuple[LinearMap, Verdict]:
    """``M ⊗ R^X -> M^X``, ``m ⊗ f ↦ (v ↦ m f(v))`` for ``|X| = x``."""
    R = M.ring
    if x < 0:
        raise ContractViolation("|X| must be nonnegative")
    FX = free_module(R, x, "left")
    T = tensor(M, FX)
    target = direct_power(M, x)
    kM = M.ngens

    def func(c):
        out = [R.zero] * (x * kM)
        for idx, r in enumerate(c):
            p, j = divmod(idx, x)
            out[j * kM + p] = R.add(out[j * kM + p], r)
        return tuple(out)

    f = LinearMap.from_function(T.module, target, func)
    inj = f.is_injective()
    if isinstance(R, ZModRing) and not inj:
        raise ConsistencyError("β_M not injective over a Noetherian ring", inj.witness)
    return f, Verdict(bool(inj), inj.witness)


def uno_delta(E: Submodule, E2: Submodule) -> tuple[LinearMap, Verdict, dict]:
    """``δ : E ⊗ E' -> R^{X × X'}``, ``f ⊗ f' ↦ ((x, x') ↦ f(x) f'(x'))``.

    ``E`` is a right submodule of ``R^X`` and ``E'`` a left submodule of
    ``R^{X'}``. The hypothesis (``E' ⊆ R^{X'}`` is ``E``-pure) is evaluated
    and injectivity is asserted when it holds.
    """
    R = E.ambient.ring
    if not isinstance(R, ZModRing):
        raise UnsupportedError("δ is supported over Z/n only")
    P1 = present(E.ambient, E.span.gens)
    P2 = present(E2.ambient, E2.span.gens)
    X, X2 = E.ambient.ngens, E2.ambient.ngens
    T = tensor(P1.module, P2.module)
    target = free_module(R, X * X2, "right")
    b = P2.module.ngens

    def func(c):
        out = [0] * (X * X2)
        for idx, r in enumerate(c):
            if not r:
                continue
            p, q = divmod(idx, b)
            g, h = P1.gens[p], P2.gens[q]
            for x in range(X):
                for y in range(X2):
                    out[x * X2 + y] = (out[x * X2 + y] + g[x] * r * h[y]) % R.n
        return tuple(out)

    d = LinearMap.from_function(T.module, target, func)
    inj = d.is_injective()
    hyp = e_purity(E, E2)
    if hyp and not inj:
        raise ConsistencyError("δ not injective although E' is E-pure", inj.witness)
    return d, Verdict(bool(inj), inj.witness), {"E_pure": bool(hyp)}


def e_purity(E: Submodule, E2: Submodule) -> Verdict:
    """``E' ⊆ R^{X'}`` is pure relative to the test module ``E`` (presented as a right module)."""
    P1 = present(E.ambient, E.span.gens)
    R = E.ambient.ring
    return is_pure_submodule(E2, test_module=Module(R, "right", P1.module.ngens, P1.module.relations))


def ke_formula(W: Module, W2: Module, X: Submodule, X2: Submodule) -> Verdict:
    """Compare ``Ke(κ(X' ⊗ X))`` with ``Ke(X) ⊗ W' + W ⊗ Ke(X')`` inside ``W ⊗ W'``.

    ``X`` and ``X2`` are submodules of the dual modules of ``W`` and ``W2``.
    Hypotheses (``W`` flat, ``Ke(X) ⊆ W`` pure) are evaluated and reported;
    equality is asserted only when they hold.
    """
    R = W.ring
    if not isinstance(R, ZModRing):
        raise UnsupportedError("the Ke formula is checked over Z/n only")
    T = tensor(W, W2)
    D, D2 = dual(W), dual(W2)
    fs = [dual_values(D, g) for g in X.span.gens]
    gs = [dual_values(D2, g) for g in X2.span.gens]
    b = W2.ngens
    cols = []
    for f in fs:
        for g in gs:
            cols.append(tuple(f[j] * g[s] % R.n for j in range(W.ngens) for s in range(b)))
    cols = [c for c in cols if any(c)]
    dim = T.module.ngens
    if cols:
        A = tuple(tuple(c[i] for c in cols) for i in range(dim))
        rows = el.kernel_rows(R.n, A, len(cols))
    else:
        rows = tuple(R.unit_vector(dim, i) for i in range(dim))
    lhs = Submodule(T.module, HowellSpan(R, dim, tuple(rows) + tuple(T.module.relations.gens), "right"))
    K, K2 = ke(W, X), ke(W2, X2)
    PK, PK2 = present(W, K.span.gens), present(W2, K2.span.gens)
    m1 = tensor_map(PK.inclusion, identity_map(W2), tensor(PK.module, W2), T)
    m2 = tensor_map(identity_map(W), PK2.inclusion, tensor(W, PK2.module), T)
    rhs = m1.image() + m2.image()
    hyps = {"W_flat": bool(is_flat(W)), "Ke_X_pure": bool(is_pure_submodule(K))}
    equal = lhs == rhs
    if all(hyps.values()) and not equal:
        raise ConsistencyError("Ke formula fails under its hypotheses")
    return Verdict(equal, None if equal else {"lhs": [list(g) for g in lhs.generators], "rhs": [list(g) for g in rhs.generators]},
                   details=hyps)


# --------------------------------------------------------------------------
# function-module embeddings


def carrier_embedding(P: Pairing) -> tuple[Module, Submodule]:
    """``W -> R^V``, ``w ↦ (<v, w>)_{v ∈ V}``, with ``V`` taken as its finite carrier.

    Returns the free left module ``R^V`` and the image of ``W``.
    """
    R = P.ring
    Vel = P.V.elements()
    F = free_module(R, len(Vel), "left")
    vecs = [tuple(P.pair(v, P.W.gen(j)) for v in Vel) for j in range(P.W.ngens)]
    return F, submodule_span(F, vecs)


def is_pure_in_carrier(P: Pairing, test_module: Optional[Module] = None) -> Verdict:
    """``W ⊂ R^V`` is pure (or ``M``-pure); false whenever ``χ_P`` is not injective."""
    if not P.chi_injective():
        return Verdict(False, {"reason": "W does not embed in V*"})
    F, img = carrier_embedding(P)
    return is_pure_submodule(img, test_module=test_module)


def module_alpha(W: Module) -> Verdict:
    """α-condition of a module: that of its canonical pairing ``(*W, W)``."""
    return satisfies_alpha(canonical_pairing(W))


# --------------------------------------------------------------------------
# suites on single instances


def rp_rp_suite(P: Pairing, Vp: Submodule, Wp: Submodule) -> dict:
    """Evaluate the subpairing statements on one instance.

    Returns a dictionary of named checks, each ``{"applicable", "holds", ...}``.
    """
    out = {}
    aP = bool(satisfies_alpha(P))
    Pp, _ = restrict_W(P, Wp)
    aPp = bool(satisfies_alpha(Pp))
    pure = bool(is_pure_submodule(Wp))
    out["1a-necessity"] = {"applicable": aPp, "holds": (not aPp) or pure, "alpha_restricted": aPp, "pure": pure}
    out["1a-equivalence"] = {"applicable": aP, "holds": (not aP) or (aPp == pure), "alpha_P": aP,
                             "alpha_restricted": aPp, "pure": pure}
    orth = all(P.pair(v, w) == P.ring.zero for v in Vp.elements() for w in Wp.elements())
    if orth:
        Q, _, _ = subpairing(P, Vp, Wp)
        aQ = bool(satisfies_alpha(Q))
        out["1b"] = {"applicable": aP, "holds": (not aP) or (aQ == pure), "alpha_Q": aQ, "pure": pure}
    else:
        out["1b"] = {"applicable": False, "holds": True, "reason": "<V', W'> != 0"}
    out["2"] = rp_rp_chain(P, Vp)
    return out


def rp_rp_chain(Omega: Pairing, Vp: Submodule) -> dict:
    """Statements (i)-(iv) for ``Ω = (Y, W)`` and the inclusion ``ξ : V' -> Y``."""
    pres = present(Omega.V, Vp.span.gens)
    xi = pres.inclusion
    P2 = induced_pairing(Omega, xi)
    aO = bool(satisfies_alpha(Omega))
    dense_P = bool(P2.is_dense_pairing())
    closure_img = Omega.closure(Vp)
    dense_img = closure_img.is_full()
    aP = bool(satisfies_alpha(P2))
    emb = bool(P2.chi_injective())
    s = {
        "i": aO and dense_P,
        "ii": aO and dense_img,
        "iii": aP,
        "iv": aP and emb,
    }
    s_i_strict = s["i"] and emb
    chain_ok = (not s["i"] or s["ii"]) and (not s["ii"] or s["iii"]) and (not s["iii"] or s["iv"])
    ic = bool(is_injective_cogenerator(Omega.ring))
    equiv_ok = (len(set(s.values())) == 1) if ic else True
    equiv_strict = (len({s_i_strict, s["ii"], s["iii"], s["iv"]}) == 1) if ic else True
    return {"applicable": True, "holds": chain_ok and equiv_ok, "statements": s, "chain": chain_ok,
            "equivalence_checked": ic, "equivalence": equiv_ok,
            "reading_with_embedding_in_i": equiv_strict, "readings_differ": equiv_ok != equiv_strict}


def pw_dicht_suite(P: Pairing) -> dict:
    """Equivalences for dense α-pairings over QF and semisimple rings."""
    R = P.ring
    W = P.W
    out = {}
    dense = bool(P.is_dense_pairing())
    emb = bool(P.chi_injective())
    alpha = bool(satisfies_alpha(P))
    if is_injective_cogenerator(R):
        lp = bool(is_locally_projective(W))
        aW = bool(module_alpha(W))
        stmts = {"i": lp and dense, "ii": aW and dense, "ii'": alpha, "iii": aW and emb}
        if is_qf(R):
            stmts["iv"] = bool(is_projective(W)) and emb
            stmts["v"] = bool(is_pure_in_carrier(P))
        out["PW"] = {"applicable": True, "holds": len(set(stmts.values())) == 1, "statements": stmts}
    else:
        out["PW"] = {"applicable": False, "holds": True}
    if is_semisimple(R):
        stmts = {"dense": dense, "W_in_V*": emb, "alpha": alpha}
        out["dicht"] = {"applicable": True, "holds": len(set(stmts.values())) == 1, "statements": stmts}
    else:
        out["dicht"] = {"applicable": False, "holds": True}
    return out


# --------------------------------------------------------------------------
# brute-force family for the cyclic reduction


def scrambled_module(R: ZModRing, chain, rng: random.Random, extra: int = 1, side: str = "right") -> Module:
    """``⊕ Z/d`` over ``chain`` presented in a random basis with extra redundant relations.

    The presentation uses ``len(chain) + extra`` generators: the extra
    generators are killed by relations, and the relation matrix is mixed by
    random invertible row and column operations.
    """
    n = R.n
    k = len(chain) + extra
    rows = []
    for i, d in enumerate(chain):
        rows.append([d % n if j == i else 0 for j in range(k)])
    for i in range(len(chain), k):
        rows.append([1 if j == i else 0 for j in range(k)])
    # column operations: multiply by a random unimodular matrix (product of elementary ops)
    for _ in range(3 * k):
        a, b = rng.sample(range(k), 2) if k > 1 else (0, 0)
        if a == b:
            continue
        c = rng.randrange(n)
        for r in rows:
            r[b] = (r[b] + c * r[a]) % n
    # row operations leave the span unchanged; also append a random combination
    if rows:
        comb = [0] * k
        for r in rows:
            c = rng.randrange(n)
            comb = [(x + c * y) % n for x, y in zip(comb, r)]
        rows.append(comb)
    return fp_module(R, side, k, rows)


def bruteforce_family(R: ZModRing, max_card: int = 64, seed: int = 0, side: str = "right") -> list[Module]:
    """Every finite module of cardinality ``≤ max_card`` up to isomorphism, in scrambled presentations."""
    from .modules import divisor_chains

    rng = random.Random(seed)
    chains = [c for c in divisor_chains(R.n, max_len=6, max_card=max_card) if c]
    return [scrambled_module(R, c, rng, extra=1, side=side) for c in chains]


def cyclic_reduction_oracle(P: Pairing, K: Submodule, seed: int = 0, max_card: int = 64) -> dict:
    """Compare the cyclic-family verdicts with brute force over all modules of size ``≤ max_card``.

    Checks the α-verdict of ``P`` and the purity verdict of ``K`` in its
    ambient module.
    """
    R = P.ring
    fam_r = bruteforce_family(R, max_card, seed, "right")
    reduced_alpha = bool(satisfies_alpha(P))
    brute_alpha = all(bool(alpha_injective_for(P, M)) for M in fam_r)
    reduced_pure = bool(is_pure_submodule(K))
    side = opposite(K.ambient.side)
    brute_pure = all(bool(is_pure_submodule(K, test_module=Module(R, side, M.ngens, M.relations))) for M in fam_r)
    return {"alpha": (reduced_alpha, brute_alpha), "pure": (reduced_pure, brute_pure),
            "agree": reduced_alpha == brute_alpha and reduced_pure == brute_pure, "family_size": len(fam_r)}


def hered_check(V: Module) -> Verdict:
    """``(V, V*)`` is an α-pairing (checked where the ring is hereditary)."""
    return satisfies_alpha(canonical_right_pairing(V))
