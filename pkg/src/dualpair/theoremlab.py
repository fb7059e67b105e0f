"""Registry of checkable statements about pairings, a corpus runner and a miner.

Every entry pairs named hypotheses with a conclusion evaluated on an
``Instance`` plus parameters (submodules, test modules, elements). A
conclusion is evaluated only when all hypotheses hold; otherwise the cell is
reported as not applicable. Hypotheses that are automatic for finite
modules (Noetherian, Artinian, cofinite, finitely generated) are literal
``True`` predicates flagged ``vacuous``.

Entry ids are opaque stable keys such as ``"lrs-bet.1"``.
"""

from __future__ import annotations

import itertools
import math
import random
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Optional, Sequence

from . import alphacond as ac
from .errors import ConsistencyError, ContractViolation, DualPairError, ResourceError, UnsupportedError
from .modules import (
    LinearMap,
    Module,
    Submodule,
    all_submodules,
    divisor_chains,
    dual,
    fp_module,
    free_module,
    is_cogenerated,
    is_flat,
    is_pure_submodule,
    module_from_chain,
    present,
    quotient,
    submodule_span,
    tensor,
    test_family,
)
from .pairings import (
    Pairing,
    an,
    canonical_pairing,
    dual_map,
    image_of,
    is_W_injective,
    ke,
    make_pairing,
    restrict_W,
    subpairing,
)
from .rings import (
    Ring,
    ZModRing,
    is_hereditary,
    is_injective_cogenerator,
    is_qf,
    is_self_injective,
    is_semisimple,
    named_ring,
    table_ring,
    zmod,
)
from .verdicts import Verdict

KINDS = ("pairing", "module", "map", "pairing-pair", "module-pair", "ring")


# --------------------------------------------------------------------------
# instances and their documents


@dataclass(frozen=True, eq=False)
class Instance:
    """One object a statement is evaluated on.

    Attributes:
        kind: One of ``KINDS``.
        ring: The coefficient ring.
        pairing: Main pairing (``"pairing"``, ``"pairing-pair"``).
        other: Second pairing (``"pairing-pair"``).
        module: Main module (``"module"``, ``"module-pair"``).
        module2: Second module (``"module-pair"``).
        theta: A map ``W' -> W`` (``"map"``).
        label: Free-form name used in reports.
    """

    kind: str
    ring: Ring
    pairing: Optional[Pairing] = None
    other: Optional[Pairing] = None
    module: Optional[Module] = None
    module2: Optional[Module] = None
    theta: Optional[LinearMap] = None
    label: str = ""
    cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ContractViolation(f"unknown instance kind {self.kind!r}")
        need = {"pairing": ("pairing",), "module": ("module",), "map": ("theta",),
                "pairing-pair": ("pairing", "other"), "module-pair": ("module", "module2"), "ring": ()}
        for name in need[self.kind]:
            if getattr(self, name) is None:
                raise ContractViolation(f"{self.kind} instance needs {name}")

    def document(self) -> dict:
        """Self-contained instance document (the format read by the CLI)."""
        doc: dict[str, Any] = {"ring": self.ring.descriptor(), "modules": {}, "instance": {"kind": self.kind}}
        mods: dict[str, Module] = {}

        def name_of(M: Module, hint: str) -> str:
            for k, v in mods.items():
                if v is M:
                    return k
            name = hint if hint not in mods else f"{hint}{len(mods)}"
            mods[name] = M
            doc["modules"][name] = module_document(M)
            return name

        def put_pairing(P: Pairing, tag: str, vname: str, wname: str) -> None:
            doc.setdefault("pairings", {})[tag] = {"V": name_of(P.V, vname), "W": name_of(P.W, wname),
                                                   "beta": [list(r) for r in P.B]}
            doc["instance"][tag if tag != "P" else "pairing"] = tag

        if self.kind in ("pairing", "pairing-pair"):
            put_pairing(self.pairing, "P", "V", "W")
        if self.kind == "pairing-pair":
            put_pairing(self.other, "P2", "V2", "W2")
            doc["instance"]["other"] = doc["instance"].pop("P2")
        if self.kind in ("module", "module-pair"):
            doc["instance"]["module"] = name_of(self.module, "N")
        if self.kind == "module-pair":
            doc["instance"]["module2"] = name_of(self.module2, "N2")
        if self.kind == "map":
            t = self.theta
            doc["maps"] = {"theta": {"domain": name_of(t.domain, "Wp"), "codomain": name_of(t.codomain, "W"),
                                     "images": [list(x) for x in t.images]}}
            doc["instance"]["map"] = "theta"
        if self.label:
            doc["instance"]["label"] = self.label
        return doc


def module_document(M: Module) -> dict:
    return {"side": M.side, "gens": M.ngens, "relations": [list(g) for g in M.relations.gens]}


def ring_from_descriptor(desc) -> Ring:
    """``{"zmod": n}``, ``{"named": name}``, ``{"table": {...}}`` or a bare name string."""
    if isinstance(desc, (str, int)):
        return named_ring(str(desc))
    if not isinstance(desc, dict) or len(desc) != 1:
        raise ContractViolation("ring descriptor must have exactly one of 'zmod', 'named', 'table'")
    (key, val), = desc.items()
    if key == "zmod":
        return zmod(int(val))
    if key == "named":
        return named_ring(str(val))
    if key == "table":
        return table_ring(val["elements"], val["add"], val["mul"], val["zero"], val["one"], val.get("name", ""))
    raise ContractViolation(f"unknown ring key {key!r}")


def module_from_document(R: Ring, doc: dict) -> Module:
    side = doc.get("side", "right")
    if "chain" in doc:
        if not isinstance(R, ZModRing):
            raise ContractViolation("'chain' module descriptors need a Z/n ring")
        return module_from_chain(R, doc["chain"], side)
    return fp_module(R, side, int(doc["gens"]), doc.get("relations", []))


def instance_from_document(doc: dict) -> Instance:
    """Rebuild an ``Instance`` from ``Instance.document()`` output (or a hand-written file)."""
    R = ring_from_descriptor(doc["ring"])
    mods = {name: module_from_document(R, m) for name, m in doc.get("modules", {}).items()}
    pairings = {}
    for name, p in doc.get("pairings", {}).items():
        pairings[name] = make_pairing(mods[p["V"]], mods[p["W"]], p["beta"], name=name)
    maps = {}
    for name, m in doc.get("maps", {}).items():
        maps[name] = LinearMap.from_images(mods[m["domain"]], mods[m["codomain"]], [tuple(x) for x in m["images"]])
    spec = doc.get("instance", {})
    kind = spec.get("kind") or ("pairing" if pairings else "module" if mods else "ring")
    return Instance(
        kind,
        R,
        pairing=pairings.get(spec.get("pairing", "P" if "P" in pairings else next(iter(pairings), None))),
        other=pairings.get(spec.get("other")),
        module=mods.get(spec.get("module")),
        module2=mods.get(spec.get("module2")),
        theta=maps.get(spec.get("map")),
        label=spec.get("label", ""),
    )


# --------------------------------------------------------------------------
# registry types


@dataclass(frozen=True)
class Hypothesis:
    """A named predicate; ``per_param`` ones see the parameters, others are cached per instance."""

    name: str
    predicate: Callable[..., Any]
    vacuous: bool = False
    per_param: bool = False

    def evaluate(self, inst: Instance, params: dict) -> bool:
        if self.vacuous:
            return True
        if self.per_param:
            return bool(self.predicate(inst, params))
        key = ("hyp", self.name)
        if key not in inst.cache:
            inst.cache[key] = bool(self.predicate(inst))
        return inst.cache[key]


@dataclass(frozen=True)
class ParamSpec:
    """A parameter: ``"sub"`` (submodule of ``ambient``), ``"module"``, ``"element"`` or ``"int"``."""

    name: str
    type: str = "sub"
    ambient: Optional[Callable[[Instance, dict], Module]] = None

    def resolve(self, inst: Instance, params: dict, value):
        if self.type == "sub":
            if isinstance(value, Submodule):
                return value
            return submodule_span(self.ambient(inst, params), [tuple(g) for g in value])
        if self.type == "module":
            return value if isinstance(value, Module) else module_from_document(inst.ring, value)
        if self.type == "element":
            return tuple(value)
        if self.type == "int":
            return int(value)
        raise ContractViolation(f"unknown parameter type {self.type!r}")

    def serialize(self, value):
        if self.type == "sub":
            return [list(g) for g in value.generators]
        if self.type == "module":
            return module_document(value)
        if self.type == "element":
            return list(value)
        return value


@dataclass(frozen=True)
class TheoremEntry:
    """A registered statement.

    Attributes:
        id: Stable key.
        statement: Plain-language statement at finite scale.
        kind: Instance kind the entry is evaluated on.
        hypotheses: Gate predicates.
        conclusion: ``(instance, params) -> Verdict``; a ``ConsistencyError``
            raised inside counts as a failure.
        params: Parameter specifications.
        enumerate: Optional custom cell enumerator ``(instance, rng) -> dicts``;
            the default takes all combinations of ``"sub"`` parameters.
        where: Optional filter on parameter tuples.
        scale_note: Note when the statement is close to vacuous for finite modules.
        backends: Ring backends the entry supports.
    """

    id: str
    statement: str
    kind: str
    hypotheses: tuple[Hypothesis, ...]
    conclusion: Callable[[Instance, dict], Verdict]
    params: tuple[ParamSpec, ...] = ()
    enumerate: Optional[Callable[[Instance, random.Random], Iterable[dict]]] = None
    where: Optional[Callable[[Instance, dict], bool]] = None
    scale_note: str = ""
    backends: tuple[str, ...] = ("zmod", "table")

    def hypothesis(self, name: str) -> Hypothesis:
        for h in self.hypotheses:
            if h.name == name:
                return h
        raise ContractViolation(f"{self.id} has no hypothesis {name!r}; known: {[h.name for h in self.hypotheses]}")


@dataclass
class CheckReport:
    """Outcome of one (entry, instance, parameters) cell.

    ``status`` is ``"pass"``, ``"fail"``, ``"not-applicable"`` or ``"error"``
    (resource caps or unsupported backends). ``wall_time`` is kept out of the
    machine-readable form so reports stay byte-identical across runs.
    """

    theorem: str
    instance: dict
    params: dict
    hypotheses: dict
    status: str
    conclusion: Optional[bool] = None
    witness: Any = None
    certainty: str = "exact"
    note: str = ""
    vacuous: list = field(default_factory=list)
    wall_time: float = 0.0

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "instance": self.instance,
            "params": self.params,
            "hypotheses": self.hypotheses,
            "vacuous": self.vacuous,
            "status": self.status,
            "conclusion": self.conclusion,
            "witness": _jsonable(self.witness),
            "certainty": self.certainty,
            "note": self.note,
        }


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, Submodule):
        return [list(g) for g in x.generators]
    if isinstance(x, Module):
        return module_document(x)
    if x is None or isinstance(x, (bool, int, str)):
        return x
    return str(x)


# --------------------------------------------------------------------------
# shared predicates


def _P(inst: Instance) -> Pairing:
    return inst.pairing


def _alpha(P: Pairing) -> bool:
    key = "alpha"
    if key not in P.cache:
        P.cache[key] = ac.satisfies_alpha(P)
    return bool(P.cache[key])


def _module_alpha(W: Module) -> bool:
    return _alpha(canonical_pairing(W))


def _lp(W: Module) -> bool:
    cache = W.ring.cache.setdefault("locally_projective", {})
    if W not in cache:
        cache[W] = ac.is_locally_projective(W)
    return bool(cache[W])


def _as_module(S: Submodule) -> Module:
    return present(S.ambient, S.span.gens).module


def _dense(P: Pairing) -> bool:
    if "dense" not in P.cache:
        P.cache["dense"] = bool(P.is_dense_pairing())
    return P.cache["dense"]


def _sub_V(inst, params):
    return inst.pairing.V


def _sub_W(inst, params):
    return inst.pairing.W


def _sub_N(inst, params):
    return inst.module


def _sub_dual_N(inst, params):
    return dual(inst.module).module


def _map_Wp(inst, params):
    return inst.theta.domain


def _map_W(inst, params):
    return inst.theta.codomain


def _map_dual_W(inst, params):
    return dual(inst.theta.codomain).module


def _map_dual_Wp(inst, params):
    return dual(inst.theta.domain).module


def _check(value: bool, witness=None, **details) -> Verdict:
    return Verdict(bool(value), None if value else witness, details=details)


def _gens(S: Submodule) -> list:
    return [list(g) for g in S.generators]


H_IC = Hypothesis("injective-cogenerator", lambda i: is_injective_cogenerator(i.ring))
H_QF = Hypothesis("quasi-frobenius", lambda i: is_qf(i.ring))
H_SEMISIMPLE = Hypothesis("semisimple", lambda i: is_semisimple(i.ring))
H_HEREDITARY = Hypothesis("hereditary", lambda i: is_hereditary(i.ring))
H_RIGHT_SI = Hypothesis("self-injective", lambda i: is_self_injective(i.ring, "right"))
H_NOETHERIAN = Hypothesis("noetherian", None, vacuous=True)
H_ARTINIAN = Hypothesis("artinian", None, vacuous=True)
H_COFINITE = Hypothesis("cofinite", None, vacuous=True)
H_FG = Hypothesis("finitely-generated", None, vacuous=True)
H_W_INJ = Hypothesis("W-injective", lambda i: is_W_injective(i.pairing.W))
H_DENSE = Hypothesis("dense", lambda i: _dense(i.pairing))
H_KAPPA_INJ = Hypothesis("kappa-injective", lambda i: i.pairing.is_hausdorff())
H_CHI_INJ = Hypothesis("chi-injective", lambda i: i.pairing.chi_injective())
H_ALPHA = Hypothesis("alpha", lambda i: _alpha(i.pairing))


# --------------------------------------------------------------------------
# conclusions: topology of a single pairing


def c_hausdorff(inst, p):
    P = _P(inst)
    h = bool(P.is_hausdorff())
    k = bool(P.kappa().is_injective())
    return _check(h == k, {"hausdorff": h, "kappa_injective": k})


def c_completion(inst, p):
    c = _P(inst).completion()
    return _check(c.is_isomorphism, {"injective": c.injective, "surjective": c.surjective})


def c_dual_hausdorff(inst, p):
    v = canonical_pairing(inst.module).is_hausdorff()
    return _check(bool(v), v.witness)


def c_dual_complete(inst, p):
    c = canonical_pairing(inst.module).completion()
    return _check(c.is_isomorphism and c.dense, {"injective": c.injective, "surjective": c.surjective})


def c_closure_in_biperp(inst, p):
    P, X = _P(inst), p["X"]
    cl, bp = P.closure(X), P.biperp(X)
    ok = cl <= bp and (not P.is_orth_closed(X) or P.is_closed(X))
    return _check(ok, {"closure": _gens(cl), "biperp": _gens(bp)})


def c_open_cofinite(inst, p):
    P, X = _P(inst), p["X"]
    P.is_open(X)
    return Verdict(True, note="every submodule of a finite module is cofinite")


def _an_equals_chi_perp(P: Pairing, X: Submodule) -> bool:
    key = ("an=chi", X)
    if key not in P.cache:
        P.cache[key] = an(P.V, X) == image_of(P.chi(), P.perp_of_V_subset(X))
    return P.cache[key]


def c_closed(inst, p):
    P, X = _P(inst), p["X"]
    return _check(P.is_closed(X), {"closure": _gens(P.closure(X))})


def c_open(inst, p):
    P, X = _P(inst), p["X"]
    return _check(bool(P.is_open(X)), {"radical": _gens(P.radical())})


def c_open_iff_closed(inst, p):
    P, X = _P(inst), p["X"]
    o, c = bool(P.is_open(X)), P.is_closed(X)
    return _check(o == c, {"open": o, "closed": c})


def c_closed_upward(inst, p):
    P, Y = _P(inst), p["Y"]
    return _check(P.is_closed(Y), {"closure_of_Y": _gens(P.closure(Y))})


def c_closure_biperp(inst, p):
    P, X = _P(inst), p["X"]
    cl = P.closure(X, family=p.get("family", "chain"))
    bp = P.biperp(X)
    return _check(cl == bp, {"closure": _gens(cl), "biperp": _gens(bp)})


def c_density(inst, p):
    P, X, Y = _P(inst), p["X"], p["Y"]
    try:
        v = P.is_dense(X, Y)
    except ConsistencyError as e:
        return Verdict(False, {"error": str(e)})
    d = v.details
    return _check(d["closure_route"] == d["perp_route"], dict(d), **d)


def c_density_embedded(inst, p):
    P, X = _P(inst), p["X"]
    dense = bool(P.is_dense(X))
    zero = P.perp_of_V_subset(X).is_zero()
    return _check(dense == zero, {"dense": dense, "perp_is_zero": zero})


def c_closed_iff_an(inst, p):
    P, X = _P(inst), p["X"]
    c, a = P.is_closed(X), _an_equals_chi_perp(P, X)
    return _check(c == a, {"closed": c, "an_equals_chi_perp": a})


def _perp_family(P: Pairing) -> set:
    return {P.perp_of_W_subset(K) for K in all_submodules(P.W)}


def c_closed_sets(inst, p):
    P = _P(inst)
    closed = {X for X in all_submodules(P.V) if P.is_closed(X)}
    perps = _perp_family(P)
    return _check(closed == perps, {"closed_not_perp": [_gens(X) for X in closed - perps],
                                    "perp_not_closed": [_gens(X) for X in perps - closed]})


def c_open_sets(inst, p):
    P = _P(inst)
    opens = {X for X in all_submodules(P.V) if P.is_open(X, check=False)}
    perps = _perp_family(P)
    return _check(opens == perps, {"open_not_perp": [_gens(X) for X in opens - perps],
                                   "perp_not_open": [_gens(X) for X in perps - opens]})


# --------------------------------------------------------------------------
# conclusions: annihilators and common kernels


def c_keann(inst, p):
    N, L = inst.module, p["L"]
    lhs = ke(N, an(N, L)) == L
    Q, _ = quotient(N, L)
    rhs = bool(is_cogenerated(Q))
    return _check(lhs == rhs, {"KeAn_equals_L": lhs, "quotient_cogenerated": rhs})


def c_an_meet(inst, p):
    N, L1, L2 = inst.module, p["L1"], p["L2"]
    lhs = an(N, L1 & L2)
    rhs = an(N, L1) + an(N, L2)
    return _check(lhs == rhs, {"An_meet": _gens(lhs), "sum_An": _gens(rhs)})


def c_anke(inst, p):
    N, X = inst.module, p["X"]
    back = an(N, ke(N, X))
    return _check(back == X, {"AnKe": _gens(back)})


# --------------------------------------------------------------------------
# conclusions: dual maps


def _dmap(inst):
    if "dual_map" not in inst.cache:
        inst.cache["dual_map"] = dual_map(inst.theta)
    return inst.cache["dual_map"]


def c_stet_perp(inst, p):
    D = _dmap(inst)
    Kp = p["Kp"]
    lhs = D.map.preimage(D.target.perp_of_W_subset(Kp))
    rhs = D.source.perp_of_W_subset(image_of(inst.theta, Kp))
    return _check(lhs == rhs, {"lhs": _gens(lhs), "rhs": _gens(rhs)})


def c_stet_closed(inst, p):
    D = _dmap(inst)
    pre = D.map.preimage(p["Y"])
    return _check(D.source.is_orth_closed(pre), {"preimage": _gens(pre)})


def c_fstar_an_preimage(inst, p):
    D = _dmap(inst)
    Kp = p["Kp"]
    lhs = D.map.preimage(an(inst.theta.domain, Kp))
    rhs = an(inst.theta.codomain, image_of(inst.theta, Kp))
    return _check(lhs == rhs, {"lhs": _gens(lhs), "rhs": _gens(rhs)})


def c_fstar_an_image(inst, p):
    D = _dmap(inst)
    K = p["K"]
    lhs = image_of(D.map, an(inst.theta.codomain, K))
    rhs = an(inst.theta.domain, inst.theta.preimage(K))
    return _check(lhs == rhs, {"lhs": _gens(lhs), "rhs": _gens(rhs)})


def c_fstar_linearly_closed(inst, p):
    D = _dmap(inst)
    img = image_of(D.map, p["X"])
    return _check(D.target.is_closed(img), {"image": _gens(img)})


def c_fstar_closure(inst, p):
    D = _dmap(inst)
    X = p["X"]
    lhs = D.target.closure(image_of(D.map, X))
    rhs = image_of(D.map, D.source.closure(X))
    return _check(lhs == rhs, {"lhs": _gens(lhs), "rhs": _gens(rhs)})


def c_fstar_ke(inst, p):
    D = _dmap(inst)
    X = p["X"]
    lhs = ke(inst.theta.domain, image_of(D.map, X))
    rhs = inst.theta.preimage(ke(inst.theta.codomain, X))
    return _check(lhs == rhs, {"lhs": _gens(lhs), "rhs": _gens(rhs)})


def c_closure_of_sum(inst, p):
    D = _dmap(inst)
    X1, X2 = p["X1"], p["X2"]
    P = D.source
    lhs = P.closure(X1 + X2)
    rhs = P.closure(X1) + P.closure(X2)
    return _check(lhs == rhs, {"lhs": _gens(lhs), "rhs": _gens(rhs)})


# --------------------------------------------------------------------------
# conclusions: α-condition and purity


def c_q2(inst, p):
    P = _P(inst)
    v = ac.q2_membership(P, p["M"], p["N"], p["t"], alpha_verdict=P.cache.get("alpha"))
    return Verdict(True, details=dict(v.details))


def _restricted(P: Pairing, Wp: Submodule) -> Pairing:
    key = ("restricted", Wp)
    if key not in P.cache:
        P.cache[key] = restrict_W(P, Wp)[0]
    return P.cache[key]


def _pure(S: Submodule) -> bool:
    cache = S.ambient.ring.cache.setdefault("pure", {})
    if S not in cache:
        cache[S] = bool(is_pure_submodule(S))
    return cache[S]


def c_rp_pure(inst, p):
    return _check(_pure(p["Wp"]), {"Wp": _gens(p["Wp"])})


def c_rp_equiv(inst, p):
    a, q = _alpha(_restricted(_P(inst), p["Wp"])), _pure(p["Wp"])
    return _check(a == q, {"alpha_restricted": a, "pure": q})


def _orthogonal(P: Pairing, Vp: Submodule, Wp: Submodule) -> bool:
    return all(P.pair(v, w) == P.ring.zero for v in Vp.span.gens for w in Wp.span.gens)


def c_rp_quotient(inst, p):
    P = _P(inst)
    Q, _, _ = subpairing(P, p["Vp"], p["Wp"])
    a, q = _alpha(Q), _pure(p["Wp"])
    return _check(a == q, {"alpha_quotient": a, "pure": q})


def c_rp_chain(inst, p):
    r = ac.rp_rp_chain(_P(inst), p["Vp"])
    return _check(r["chain"], r["statements"], **r["statements"])


def c_rp_chain_equiv(inst, p):
    r = ac.rp_rp_chain(_P(inst), p["Vp"])
    return _check(r["chain"] and r["equivalence"], r["statements"], **r["statements"])


def c_beta(inst, p):
    _, v = ac.beta_map(inst.module, p["x"])
    return _check(bool(v), v.witness)


def c_alpha_m_pure(inst, p):
    P, M = _P(inst), p["M"]
    a = bool(ac.alpha_injective_for(P, M))
    q = bool(ac.is_pure_in_carrier(P, test_module=M))
    return _check(a == q, {"alpha_M": a, "M_pure": q})


def c_alpha_pure(inst, p):
    P = _P(inst)
    a, q = _alpha(P), bool(ac.is_pure_in_carrier(P))
    return _check(a == q, {"alpha": a, "pure": q})


def c_hered(inst, p):
    v = ac.hered_check(inst.module)
    return _check(bool(v), v.witness)


def c_tensor_alpha(variant):
    def conclusion(inst, p):
        P, P2 = inst.pairing, inst.other
        if variant == "left":
            _, info = ac.tensor_pairing_checked(P, P2, P.cache.get("alpha"), P2.cache.get("alpha"))
            return _check(info["alpha_product"], info)
        T = ac.tensor_pairing(P, P2, "right")
        a = _alpha(T)
        return _check(a, {"alpha_product": a})

    return conclusion


def c_delta(inst, p):
    _, v, hyp = ac.uno_delta(p["E"], p["E2"])
    return _check(bool(v), v.witness, **hyp)


def c_ke_formula(inst, p):
    v = ac.ke_formula(inst.module, inst.module2, p["X"], p["X2"])
    return _check(bool(v), v.witness)


def c_alpha_module(inst, p):
    W = inst.module
    emb = bool(canonical_pairing(W).chi_injective())
    flat = bool(is_flat(W))
    return _check(emb and flat, {"torsionless": emb, "flat": flat})


def c_alpha_pairing_flat(inst, p):
    P = _P(inst)
    emb, flat = bool(P.chi_injective()), bool(is_flat(P.W))
    return _check(emb and flat, {"chi_injective": emb, "flat": flat})


def c_lp_routes(inst, p):
    try:
        v = ac.is_locally_projective(inst.module)
    except ConsistencyError as e:
        return Verdict(False, {"error": str(e), "witness": _jsonable(e.witness)})
    return Verdict(True, details=dict(v.details))


def c_lp_pure_sub(inst, p):
    K = p["K"]
    return _check(_lp(_as_module(K)), {"K": _gens(K)})


def c_pure_lp_sub(inst, p):
    K = p["K"]
    return _check(_pure(K), {"K": _gens(K)})


def c_lp_carrier(inst, p):
    W = inst.module
    a = _lp(W)
    q = bool(ac.is_pure_in_carrier(canonical_pairing(W)))
    return _check(a == q, {"locally_projective": a, "pure_in_carrier": q})


def c_pw(inst, p):
    r = ac.pw_dicht_suite(_P(inst))["PW"]
    return _check(r["holds"], r.get("statements"))


def c_dicht(inst, p):
    r = ac.pw_dicht_suite(_P(inst))["dicht"]
    return _check(r["holds"], r.get("statements"))


# --------------------------------------------------------------------------
# custom enumerators


def _sample(cells: list, cap: int, rng: random.Random) -> list:
    if len(cells) <= cap:
        return cells
    idx = sorted(rng.sample(range(len(cells)), cap))
    return [cells[i] for i in idx]


def enum_q2(inst: Instance, rng: random.Random, samples: int = 4) -> list[dict]:
    P = inst.pairing
    family, _ = test_family(P.ring, "right")
    out = []
    for _ in range(samples):
        M = rng.choice(family)
        N = rng.choice(all_submodules(M))
        T = tensor(M, P.W)
        t = rng.choice(T.module.elements())
        out.append({"M": M, "N": N, "t": t})
    return out


def enum_test_modules(inst: Instance, rng: random.Random) -> list[dict]:
    family, _ = test_family(inst.ring, "right")
    return [{"M": M} for M in family]


def enum_beta(inst: Instance, rng: random.Random) -> list[dict]:
    return [{"x": x} for x in (1, 2)]


def enum_uno(inst: Instance, rng: random.Random) -> list[dict]:
    R = inst.ring
    F1, F2 = free_module(R, 1, "right"), free_module(R, 2, "left")
    return [{"E": E, "E2": E2} for E in all_submodules(F1) for E2 in all_submodules(F2)]


# --------------------------------------------------------------------------
# registry


def _X(amb=_sub_V):
    return (ParamSpec("X", "sub", amb),)


def _XY():
    return (ParamSpec("X", "sub", _sub_V), ParamSpec("Y", "sub", _sub_V))


def _x_le_y(inst, p):
    return p["X"] <= p["Y"]


def _per(name, fn):
    return Hypothesis(name, fn, per_param=True)


def _build_registry() -> dict[str, TheoremEntry]:
    E = TheoremEntry
    pure_hyp = _per("Ke(X)-pure", lambda i, p: _pure(ke(i.module, p["X"])))
    entries = [
        E("Lemma1.1", "the linear weak topology on V is Hausdorff exactly when κ is injective", "pairing",
          (), c_hausdorff),
        E("Lemma1.2", "for a dense pairing over a W-injective ring the comparison V/W^⊥ -> *W is an isomorphism",
          "pairing", (H_DENSE, H_W_INJ), c_completion),
        E("Lemma1.3", "the finite topology on *W is Hausdorff", "module", (), c_dual_hausdorff),
        E("Lemma1.3.complete", "over a W-injective ring the canonical pairing (*W, W) is dense and *W is complete",
          "module", (Hypothesis("W-injective", lambda i: is_W_injective(i.module)),), c_dual_complete),
        E("An-Ke.1", "KeAn(L) = L exactly when N/L is cogenerated by R", "module", (),
          c_keann, (ParamSpec("L", "sub", _sub_N),)),
        E("An-Ke.2", "over an N-injective ring An(L1 ∩ L2) = An(L1) + An(L2)", "module",
          (Hypothesis("N-injective", lambda i: is_W_injective(i.module)),), c_an_meet,
          (ParamSpec("L1", "sub", _sub_N), ParamSpec("L2", "sub", _sub_N))),
        E("An-Ke.3", "over an injective ring AnKe(X) = X for finitely generated X ⊆ Hom(N, R)", "module",
          (Hypothesis("injective", lambda i: is_self_injective(i.ring, "left" if i.module.side == "left" else "right")),
           H_FG), c_anke, (ParamSpec("X", "sub", _sub_dual_N),)),
        E("orth-clos.1", "closure(X) ⊆ X^⊥⊥, and orthogonally closed submodules are closed", "pairing", (),
          c_closure_in_biperp, _X()),
        E("orth-clos.2", "over a Noetherian ring open submodules are cofinite", "pairing", (H_NOETHERIAN,),
          c_open_cofinite, _X(), scale_note="vacuous: every submodule of a finite module is cofinite"),
        E("orth-clos.3", "X is closed when V/X is cogenerated and An(X) = χ(X^⊥)", "pairing",
          (_per("V/X-cogenerated", lambda i, p: is_cogenerated(quotient(i.pairing.V, p["X"])[0])),
           _per("An(X)=chi(X^perp)", lambda i, p: _an_equals_chi_perp(i.pairing, p["X"]))), c_closed, _X()),
        E("orth-clos.3.open", "under the closedness hypotheses, with χ injective and X cofinite, X is open",
          "pairing",
          (_per("V/X-cogenerated", lambda i, p: is_cogenerated(quotient(i.pairing.V, p["X"])[0])),
           _per("An(X)=chi(X^perp)", lambda i, p: _an_equals_chi_perp(i.pairing, p["X"])),
           H_NOETHERIAN, H_COFINITE, H_CHI_INJ), c_open, _X()),
        E("orth-clos.4a", "over an Artinian ring X is open exactly when it is closed and cofinite", "pairing",
          (H_ARTINIAN,), c_open_iff_closed, _X()),
        E("orth-clos.4b", "a submodule containing a closed cofinite X is closed and cofinite", "pairing",
          (_per("X-closed", lambda i, p: i.pairing.is_closed(p["X"])), H_COFINITE), c_closed_upward, _XY(),
          where=_x_le_y),
        E("orth-clos.5a", "κ injective over an injective ring: finitely generated submodules are closed", "pairing",
          (H_KAPPA_INJ, H_RIGHT_SI, H_FG), c_closed, _X()),
        E("orth-clos.5b", "κ injective, V finitely generated, injective Noetherian ring: all submodules closed",
          "pairing", (H_KAPPA_INJ, H_RIGHT_SI, H_NOETHERIAN, H_FG), c_closed, _X()),
        E("lrs-bet.1", "over an injective cogenerator ring the closure of X is X^⊥⊥", "pairing", (H_IC,),
          c_closure_biperp, _X()),
        E("lrs-bet.2", "over an injective cogenerator ring X is dense in Y exactly when X^⊥ = Y^⊥", "pairing",
          (H_IC,), c_density, _XY(), where=_x_le_y),
        E("lrs-bet.2.embedded", "with χ injective as well, X is dense exactly when X^⊥ = 0", "pairing",
          (H_IC, H_CHI_INJ), c_density_embedded, _X()),
        E("lrs-bet.3", "over a QF ring a cofinite X is closed exactly when An(X) = χ(X^⊥)", "pairing",
          (H_QF, H_COFINITE), c_closed_iff_an, _X()),
        E("lrs-bet.4", "over an injective cogenerator ring the closed submodules are the K^⊥ for K ⊆ W", "pairing",
          (H_IC,), c_closed_sets),
        E("lrs-bet.5", "over a QF ring with χ injective the open submodules are the K^⊥ for finitely generated K",
          "pairing", (H_QF, H_CHI_INJ, H_FG), c_open_sets),
        E("th-stet.1", "for a pairing morphism (ξ, θ), ξ^{-1}(K'^⊥) = θ(K')^⊥", "map", (), c_stet_perp,
          (ParamSpec("Kp", "sub", _map_Wp),)),
        E("th-stet.2", "over an injective cogenerator ring preimages of closed submodules are orthogonally closed",
          "map", (H_IC, _per("Y-closed", lambda i, p: _dmap(i).target.is_closed(p["Y"]))), c_stet_closed,
          (ParamSpec("Y", "sub", _map_dual_Wp),),
          scale_note="near-vacuous: every submodule of *W' is closed when W' is finite"),
        E("f*-clos.1", "θ*^{-1}(An(K')) = An(θ(K'))", "map", (), c_fstar_an_preimage,
          (ParamSpec("Kp", "sub", _map_Wp),)),
        E("f*-clos.2", "over a W-injective ring θ*(An(K)) = An(θ^{-1}(K))", "map",
          (Hypothesis("W-injective", lambda i: is_W_injective(i.theta.codomain)),), c_fstar_an_image,
          (ParamSpec("K", "sub", _map_W),)),
        E("f*-clos.3a", "θ* maps closed submodules to closed submodules", "map",
          (H_IC, Hypothesis("W-injective", lambda i: is_W_injective(i.theta.codomain)),
           _per("X-closed", lambda i, p: _dmap(i).source.is_closed(p["X"]))), c_fstar_linearly_closed,
          (ParamSpec("X", "sub", _map_dual_W),),
          scale_note="near-vacuous: every submodule of *W' is closed when W' is finite"),
        E("f*-clos.3b", "closure(θ*(X)) = θ*(closure(X))", "map",
          (H_IC, Hypothesis("W-injective", lambda i: is_W_injective(i.theta.codomain))), c_fstar_closure,
          (ParamSpec("X", "sub", _map_dual_W),)),
        E("f*-clos.3c", "Ke(θ*(X)) = θ^{-1}(Ke(X))", "map",
          (H_IC, Hypothesis("W-injective", lambda i: is_W_injective(i.theta.codomain))), c_fstar_ke,
          (ParamSpec("X", "sub", _map_dual_W),)),
        E("f*-clos.3d", "closure(X1 + X2) = closure(X1) + closure(X2) in *W", "map",
          (H_IC, Hypothesis("W-injective", lambda i: is_W_injective(i.theta.codomain))), c_closure_of_sum,
          (ParamSpec("X1", "sub", _map_dual_W), ParamSpec("X2", "sub", _map_dual_W))),
        E("q-2", "for an α-pairing, t ∈ N ⊗ W exactly when α(t)(v) ∈ N for every v", "pairing", (H_ALPHA,), c_q2,
          (ParamSpec("M", "module"), ParamSpec("N", "sub", lambda i, p: p["M"]), ParamSpec("t", "element")),
          enumerate=enum_q2),
        E("rp-rp.1a", "if (V, W') is an α-pairing then W' ⊂ W is pure", "pairing",
          (_per("restricted-alpha", lambda i, p: _alpha(_restricted(i.pairing, p["Wp"]))),), c_rp_pure,
          (ParamSpec("Wp", "sub", _sub_W),)),
        E("rp-rp.1a.equiv", "for an α-pairing (V, W), (V, W') is α exactly when W' ⊂ W is pure", "pairing",
          (H_ALPHA,), c_rp_equiv, (ParamSpec("Wp", "sub", _sub_W),)),
        E("rp-rp.1b", "for an α-pairing, (V/V', W') is α exactly when W' ⊂ W is pure", "pairing", (H_ALPHA,),
          c_rp_quotient, (ParamSpec("Vp", "sub", _sub_V), ParamSpec("Wp", "sub", _sub_W)),
          where=lambda i, p: _orthogonal(i.pairing, p["Vp"], p["Wp"])),
        E("rp-rp.2", "for ξ: V' -> Y the statements (i) => (ii) => (iii) => (iv) hold", "pairing", (),
          c_rp_chain, (ParamSpec("Vp", "sub", _sub_V),)),
        E("rp-rp.2.equiv", "over an injective cogenerator ring statements (i)-(iv) are equivalent", "pairing",
          (H_IC,), c_rp_chain_equiv, (ParamSpec("Vp", "sub", _sub_V),)),
        E("P-rs.1", "β_M: M ⊗ R^X -> M^X is injective", "module", (H_NOETHERIAN,), c_beta,
          (ParamSpec("x", "int"),), enumerate=enum_beta),
        E("P-rs.2", "α_M is injective exactly when W ⊂ R^V is M-pure", "pairing", (H_CHI_INJ,), c_alpha_m_pure,
          (ParamSpec("M", "module"),), enumerate=enum_test_modules),
        E("P-rs.3", "(V, W) is α exactly when W ⊂ R^V is pure", "pairing", (H_CHI_INJ,), c_alpha_pure),
        E("hered.1", "over a hereditary ring (V, V*) is an α-pairing", "module", (H_HEREDITARY,), c_hered),
        E("p-2.1", "the tensor pairing (V' ⊗ V, W ⊗ W') of α-pairings is α", "pairing-pair",
          (Hypothesis("alpha-P", lambda i: _alpha(i.pairing)), Hypothesis("alpha-P2", lambda i: _alpha(i.other))),
          c_tensor_alpha("left"), backends=("zmod",)),
        E("p-2.2", "the tensor pairing (V ⊗ V', W' ⊗ W) of α-pairings is α", "pairing-pair",
          (Hypothesis("alpha-P", lambda i: _alpha(i.pairing)), Hypothesis("alpha-P2", lambda i: _alpha(i.other))),
          c_tensor_alpha("right"), backends=("zmod",)),
        E("uno.1", "δ: E ⊗ E' -> R^{X × X'} is injective when E' ⊆ R^{X'} is E-pure", "ring",
          (_per("E-pure", lambda i, p: ac.e_purity(p["E"], p["E2"])),), c_delta,
          (ParamSpec("E", "sub", lambda i, p: free_module(i.ring, 1, "right")),
           ParamSpec("E2", "sub", lambda i, p: free_module(i.ring, 2, "left"))), enumerate=enum_uno,
          backends=("zmod",)),
        E("uno.2", "W flat and Ke(X) pure: Ke(κ(X' ⊗ X)) = Ke(X) ⊗ W' + W ⊗ Ke(X')", "module-pair",
          (Hypothesis("W-flat", lambda i: is_flat(i.module)), pure_hyp), c_ke_formula,
          (ParamSpec("X", "sub", _sub_dual_N), ParamSpec("X2", "sub", lambda i, p: dual(i.module2).module)),
          backends=("zmod",)),
        E("alph-W", "a module satisfying the α-condition is torsionless and flat", "module",
          (Hypothesis("alpha", lambda i: _module_alpha(i.module)),), c_alpha_module),
        E("rem-flat", "for an α-pairing, W embeds in V* and W is flat", "pairing", (H_ALPHA,),
          c_alpha_pairing_flat),
        E("proj-gut", "W is locally projective exactly when it satisfies the α-condition", "module", (),
          c_lp_routes),
        E("proj-gut.1", "pure submodules of a locally projective module are locally projective", "module",
          (Hypothesis("locally-projective", lambda i: _lp(i.module)), _per("K-pure", lambda i, p: _pure(p["K"]))),
          c_lp_pure_sub, (ParamSpec("K", "sub", _sub_N),)),
        E("proj-gut.1-pure-direction", "over a W-injective ring locally projective submodules are pure",
          "module",
          (Hypothesis("W-injective", lambda i: is_W_injective(i.module)),
           _per("K-locally-projective", lambda i, p: _lp(_as_module(p["K"])))),
          c_pure_lp_sub, (ParamSpec("K", "sub", _sub_N),)),
        E("proj-gut.2", "W is locally projective exactly when W ⊂ R^{*W} is pure", "module", (), c_lp_carrier),
        E("PW", "over an injective cogenerator ring the dense α characterisations agree", "pairing", (H_IC,), c_pw),
        E("dicht=alp", "over a semisimple ring: dense, W ⊆ V* and α are equivalent", "pairing",
          (H_SEMISIMPLE,), c_dicht),
    ]
    return {e.id: e for e in entries}


REGISTRY: dict[str, TheoremEntry] = _build_registry()


def get_entry(theorem_id: str) -> TheoremEntry:
    try:
        return REGISTRY[theorem_id]
    except KeyError:
        raise ContractViolation(f"unknown theorem id {theorem_id!r}") from None


# --------------------------------------------------------------------------
# checking cells


def _backend(R: Ring) -> str:
    return "zmod" if isinstance(R, ZModRing) else "table"


def resolve_params(entry: TheoremEntry, inst: Instance, params: Optional[dict]) -> dict:
    params = dict(params or {})
    out = {}
    for spec in entry.params:
        if spec.name not in params:
            raise ContractViolation(f"{entry.id} needs parameter {spec.name!r}")
        out[spec.name] = spec.resolve(inst, out, params[spec.name])
    for k, v in params.items():
        if k not in out:
            out[k] = v
    return out


def serialize_params(entry: TheoremEntry, params: dict) -> dict:
    specs = {s.name: s for s in entry.params}
    return {k: (specs[k].serialize(v) if k in specs else _jsonable(v)) for k, v in params.items()}


def check(theorem_id: str, instance: Instance, params: Optional[dict] = None, *,
          descriptor: Optional[dict] = None, gate: Sequence[str] = ()) -> CheckReport:
    """Evaluate one cell.

    Hypotheses are evaluated first; the conclusion is evaluated only when all
    of them hold, except those named in ``gate`` (used by the miner), whose
    required value is ``False``.
    """
    entry = get_entry(theorem_id)
    if instance.kind != entry.kind:
        raise ContractViolation(f"{theorem_id} needs a {entry.kind} instance, got {instance.kind}")
    t0 = time.perf_counter()
    p = resolve_params(entry, instance, params)
    desc = descriptor if descriptor is not None else instance.document()
    report = CheckReport(theorem_id, desc, serialize_params(entry, p), {}, "not-applicable",
                         vacuous=[h.name for h in entry.hypotheses if h.vacuous])
    if _backend(instance.ring) not in entry.backends:
        report.status = "error"
        report.note = f"unsupported backend {_backend(instance.ring)}"
        return report
    try:
        failed = []
        for h in entry.hypotheses:
            val = h.evaluate(instance, p)
            report.hypotheses[h.name] = val
            want = h.name not in gate
            if val != want:
                failed.append(h.name)
                break
        if failed:
            report.note = f"not applicable: hypothesis {failed[0]} {'false' if failed[0] not in gate else 'true'}"
            return report
        try:
            v = entry.conclusion(instance, p)
        except ConsistencyError as e:
            v = Verdict(False, {"error": str(e), "witness": _jsonable(e.witness)})
        report.conclusion = bool(v)
        report.status = "pass" if v else "fail"
        report.witness = None if v else v.witness
        report.certainty = v.certainty
        if entry.scale_note:
            report.note = entry.scale_note
    except (ResourceError, UnsupportedError) as e:
        report.status = "error"
        report.note = f"{type(e).__name__}: {e}"
    finally:
        report.wall_time = time.perf_counter() - t0
    return report


def cells(entry: TheoremEntry, inst: Instance, rng: random.Random, param_cap: int) -> list[dict]:
    """Parameter dictionaries for one instance (canonical order, seeded sampling above ``param_cap``)."""
    if entry.enumerate is not None:
        out = list(entry.enumerate(inst, rng))
    elif not entry.params:
        out = [{}]
    else:
        out = []
        for combo in _product(entry.params, inst):
            if entry.where is None or entry.where(inst, combo):
                out.append(combo)
    return _sample(out, param_cap, rng)


def _product(specs: Sequence[ParamSpec], inst: Instance) -> Iterable[dict]:
    def rec(i, acc):
        if i == len(specs):
            yield dict(acc)
            return
        s = specs[i]
        for S in all_submodules(s.ambient(inst, acc)):
            acc[s.name] = S
            yield from rec(i + 1, acc)
        acc.pop(s.name, None)

    yield from rec(0, {})


# --------------------------------------------------------------------------
# corpus


@dataclass(frozen=True)
class CorpusConfig:
    """Corpus and sampling parameters; every field is echoed into reports.

    Attributes:
        rings: Ring names (``"4"``, ``"zmod6"``, ``"ut2"`` ...).
        max_card: Largest module cardinality.
        max_factors: Longest invariant-factor chain over ``Z/n``.
        beta_exhaustive: Enumerate every β when ``|V| * |W|`` is at most this.
        beta_samples: Seeded β samples otherwise.
        param_cap: Parameter tuples per (entry, instance) before sampling.
        instance_cap: Instances per (ring, kind) before sampling.
        map_cap: Maps per (W', W) shape pair.
        seed: Seed for every sampled choice.
    """

    rings: tuple[str, ...] = ("4", "6", "8", "9")
    max_card: int = 16
    max_factors: int = 2
    beta_exhaustive: int = 64
    beta_samples: int = 200
    param_cap: int = 400
    instance_cap: int = 100000
    map_cap: int = 4
    seed: int = 0

    def to_dict(self) -> dict:
        return {"rings": list(self.rings), "max_card": self.max_card, "max_factors": self.max_factors,
                "beta_exhaustive": self.beta_exhaustive, "beta_samples": self.beta_samples,
                "param_cap": self.param_cap, "instance_cap": self.instance_cap, "map_cap": self.map_cap,
                "seed": self.seed}

    def replace(self, **kw) -> "CorpusConfig":
        d = self.to_dict()
        d.update(kw)
        d["rings"] = tuple(str(r) for r in d["rings"])
        return CorpusConfig(**d)


def _rng(config: CorpusConfig, *tags) -> random.Random:
    return random.Random(":".join(str(t) for t in (config.seed,) + tags))


def corpus_modules(R: Ring, side: str, config: CorpusConfig) -> list[Module]:
    """Module shapes: divisor chains over ``Z/n``, cyclic quotients of ``R`` over tables."""
    if isinstance(R, ZModRing):
        return [module_from_chain(R, c, side) for c in divisor_chains(R.n, config.max_factors, config.max_card)]
    fam, _ = test_family(R, side, 1)
    return [M for M in fam if M.cardinality <= config.max_card]


def beta_choices(V: Module, W: Module) -> Optional[list[list[int]]]:
    """Admissible values per generator pair over ``Z/n`` (diagonal presentations only)."""
    R = V.ring
    if not isinstance(R, ZModRing):
        return None
    n = R.n
    dv = [next((g[i] for g in V.relations.gens if g[i]), 0) for i in range(V.ngens)]
    dw = [next((g[j] for g in W.relations.gens if g[j]), 0) for j in range(W.ngens)]
    out = []
    for i in range(V.ngens):
        for j in range(W.ngens):
            a = _order(n, dv[i])
            b = _order(n, dw[j])
            g = math.gcd(a, b)
            step = n // g
            out.append(list(range(0, n, step)))
    return out


def _order(n: int, d: int) -> int:
    return n if d == 0 else d


def corpus_pairings(R: Ring, config: CorpusConfig, max_card: Optional[int] = None) -> list[Pairing]:
    """All corpus pairings over ``R`` in canonical order."""
    mc = config.max_card if max_card is None else max_card
    Vs = [M for M in corpus_modules(R, "right", config) if M.cardinality <= mc]
    Ws = [M for M in corpus_modules(R, "left", config) if M.cardinality <= mc]
    out = []
    for a, V in enumerate(Vs):
        for b, W in enumerate(Ws):
            rng = _rng(config, "beta", R, a, b)
            out.extend(_pairings_for(V, W, config, rng, f"{a}.{b}"))
    return out


def _pairings_for(V: Module, W: Module, config: CorpusConfig, rng: random.Random, tag: str) -> list[Pairing]:
    R = V.ring
    choices = beta_choices(V, W)
    if choices is None:
        choices = [list(R.elements)] * (V.ngens * W.ngens)
    total = 1
    for c in choices:
        total *= len(c)
    if V.cardinality * W.cardinality <= config.beta_exhaustive or total <= config.beta_samples:
        flat_list = list(itertools.product(*choices))
    else:
        seen = set()
        flat_list = []
        while len(flat_list) < config.beta_samples:
            f = tuple(rng.choice(c) for c in choices)
            if f not in seen:
                seen.add(f)
                flat_list.append(f)
        flat_list.sort()
    out = []
    for k, flat in enumerate(flat_list):
        B = [list(flat[i * W.ngens:(i + 1) * W.ngens]) for i in range(V.ngens)]
        try:
            out.append(make_pairing(V, W, B, name=f"P{tag}.{k}"))
        except DualPairError:
            continue
    return out


def corpus_maps(R: Ring, config: CorpusConfig) -> list[LinearMap]:
    """Maps ``θ: W' -> W`` between corpus left modules (all, or ``map_cap`` seeded per shape pair)."""
    Ws = [M for M in corpus_modules(R, "left", config) if M.cardinality > 1]
    out = []
    for a, Wp in enumerate(Ws):
        for b, W in enumerate(Ws):
            from .modules import hom_module

            H = hom_module(Wp, W)
            imgs = H.all_images()
            rng = _rng(config, "maps", R, a, b)
            for images in _sample(imgs, config.map_cap, rng):
                out.append(LinearMap(Wp, W, tuple(images)))
    return out


def fixture_maps() -> list[LinearMap]:
    """Doubling on ``Z/4``, ``Z/4 -> Z/2`` and ``Z/6 -> Z/3`` projections."""
    from .modules import cyclic

    R4, R6 = zmod(4), zmod(6)
    Z4 = cyclic(R4, 4, "left")
    return [
        LinearMap.from_images(Z4, Z4, [(2,)]),
        LinearMap.from_images(Z4, cyclic(R4, 2, "left"), [(1,)]),
        LinearMap.from_images(cyclic(R6, 6, "left"), cyclic(R6, 3, "left"), [(1,)]),
    ]


def corpus_instances(R: Ring, kind: str, config: CorpusConfig) -> list[Instance]:
    """Instances of one kind over ``R`` in canonical order (sampled down to ``instance_cap``)."""
    if kind == "pairing":
        out = [Instance("pairing", R, pairing=P, label=P.name) for P in corpus_pairings(R, config)]
    elif kind == "module":
        side = "left"
        out = [Instance("module", R, module=M) for M in corpus_modules(R, side, config)]
    elif kind == "map":
        out = [Instance("map", R, theta=t) for t in corpus_maps(R, config)]
    elif kind == "pairing-pair":
        Ps = corpus_pairings(R, config, max_card=min(config.max_card, 6))
        out = [Instance("pairing-pair", R, pairing=P, other=Q) for P in Ps for Q in Ps]
    elif kind == "module-pair":
        Ms = [M for M in corpus_modules(R, "left", config) if M.cardinality <= min(config.max_card, 6)]
        out = [Instance("module-pair", R, module=M, module2=N) for M in Ms for N in Ms]
    elif kind == "ring":
        out = [Instance("ring", R)]
    else:
        raise ContractViolation(f"unknown kind {kind!r}")
    return _sample(out, config.instance_cap, _rng(config, "instances", R, kind))


# --------------------------------------------------------------------------
# suites


SUITES: dict[str, dict] = {
    "qf-core": {
        "rings": ("4", "6", "8", "9"),
        "theorems": tuple(REGISTRY),
        "config": {"max_card": 8, "beta_exhaustive": 16, "beta_samples": 8, "param_cap": 24, "instance_cap": 40,
                   "map_cap": 2},
    },
    "semisimple": {
        "rings": ("2", "3", "5", "6"),
        "theorems": ("dicht=alp", "hered.1", "PW", "Lemma1.2", "lrs-bet.1"),
        "config": {},
    },
    "closure": {"rings": ("4", "6", "8", "9", "12"), "theorems": ("lrs-bet.1",), "config": {}},
    "annihilators": {"rings": ("4", "6", "8"), "theorems": ("An-Ke.1", "An-Ke.2", "An-Ke.3"),
                     "config": {"max_factors": 3, "max_card": 64, "param_cap": 10**9}},
    "density": {"rings": ("4", "6", "8", "9", "12"), "theorems": ("lrs-bet.2",), "config": {"param_cap": 10**9}},
    "local-projectivity": {"rings": ("4", "6", "8", "9"), "theorems": ("proj-gut",), "config": {"max_card": 10**6}},
    "dual-maps": {"rings": ("4", "6"), "theorems": ("f*-clos.1", "f*-clos.2", "f*-clos.3c", "f*-clos.3d"),
                  "config": {"param_cap": 10**9}},
    "tensor": {"rings": ("6",), "theorems": ("p-2.1", "uno.2"), "config": {"max_card": 6, "param_cap": 10**9}},
    "completion": {"rings": ("4", "6", "8", "9"), "theorems": ("Lemma1.2",), "config": {}},
    "table-rings": {"rings": ("ut2", "f2xy", "f2x2"), "theorems": tuple(REGISTRY),
                    "config": {"max_card": 8, "param_cap": 16, "instance_cap": 12}},
}


def suite_config(suite_name: str, overrides: Optional[dict] = None) -> CorpusConfig:
    """Default configuration of a suite, updated with ``overrides``."""
    if suite_name not in SUITES:
        raise ContractViolation(f"unknown suite {suite_name!r}; known: {sorted(SUITES)}")
    s = SUITES[suite_name]
    cfg = CorpusConfig(rings=tuple(s["rings"])).replace(**s["config"])
    return cfg.replace(**(overrides or {}))


def run_suite(suite_name: str, corpus_config: Optional[CorpusConfig] = None,
              theorems: Optional[Sequence[str]] = None) -> list[CheckReport]:
    """Run a registered suite over its corpus in canonical order.

    Order: rings as listed, then theorems in registry order, then instances,
    then parameter tuples. Resource errors are reported per cell.
    """
    cfg = corpus_config if corpus_config is not None else suite_config(suite_name)
    ids = list(theorems) if theorems is not None else list(SUITES[suite_name]["theorems"])
    if suite_name not in SUITES and theorems is None:
        raise ContractViolation(f"unknown suite {suite_name!r}")
    reports = []
    for rname in cfg.rings:
        R = named_ring(rname)
        by_kind: dict[str, list[Instance]] = {}
        for tid in ids:
            entry = get_entry(tid)
            if entry.kind not in by_kind:
                by_kind[entry.kind] = corpus_instances(R, entry.kind, cfg)
            for idx, inst in enumerate(by_kind[entry.kind]):
                desc = None
                rng = _rng(cfg, "cells", tid, rname, idx)
                try:
                    cell_list = cells(entry, inst, rng, cfg.param_cap)
                except ResourceError as e:
                    reports.append(CheckReport(tid, inst.document(), {}, {}, "error", note=f"ResourceError: {e}"))
                    continue
                for p in cell_list:
                    desc = desc if desc is not None else inst.document()
                    reports.append(check(tid, inst, p, descriptor=desc))
    return reports


def summarize(reports: Sequence[CheckReport]) -> dict:
    """Counts per theorem and status."""
    out: dict[str, dict[str, int]] = {}
    for r in reports:
        d = out.setdefault(r.theorem, {"pass": 0, "fail": 0, "not-applicable": 0, "error": 0})
        d[r.status] += 1
    return out


# --------------------------------------------------------------------------
# counterexample mining


@dataclass(frozen=True)
class MinerConfig:
    rings: tuple[str, ...] = ("ut2", "f2xy")
    max_card: int = 8
    param_cap: int = 200
    instance_cap: int = 200
    seed: int = 0


def mine_counterexamples(theorem_id: str, dropped_hypotheses: Sequence[str],
                         search_config: Optional[MinerConfig] = None) -> list[dict]:
    """Search instances where exactly the dropped hypotheses fail and the conclusion fails too.

    Returns one finding per violating cell (an empty list is a valid result).
    Each finding carries the instance document, parameters and witness, so
    it can be re-checked with ``recheck_finding``.
    """
    entry = get_entry(theorem_id)
    dropped = list(dropped_hypotheses)
    if not dropped:
        raise ContractViolation("dropped hypothesis set must be nonempty")
    for name in dropped:
        h = entry.hypothesis(name)
        if h.vacuous:
            raise ContractViolation(f"hypothesis {name!r} is vacuous at finite scale and cannot be dropped")
    sc = search_config or MinerConfig()
    cfg = CorpusConfig(rings=sc.rings, max_card=sc.max_card, param_cap=sc.param_cap, instance_cap=sc.instance_cap,
                       seed=sc.seed)
    findings = []
    for rname in sc.rings:
        R = named_ring(rname)
        if _backend(R) not in entry.backends:
            continue
        for idx, inst in enumerate(corpus_instances(R, entry.kind, cfg)):
            rng = _rng(cfg, "mine", theorem_id, rname, idx)
            try:
                cell_list = cells(entry, inst, rng, sc.param_cap)
            except ResourceError:
                continue
            desc = None
            for p in cell_list:
                desc = desc if desc is not None else inst.document()
                r = check(theorem_id, inst, p, descriptor=desc, gate=dropped)
                if r.status == "fail":
                    findings.append({"theorem": theorem_id, "dropped": dropped, "ring": rname,
                                     "instance": r.instance, "params": r.params, "hypotheses": r.hypotheses,
                                     "witness": _jsonable(r.witness)})
    return findings


def recheck_finding(finding: dict) -> CheckReport:
    """Reload a finding (or failing report) from its documents and evaluate it again."""
    inst = instance_from_document(finding["instance"])
    return check(finding["theorem"], inst, finding["params"], gate=finding.get("dropped", ()))


# --------------------------------------------------------------------------
# seeded gates


def reduction_gate(count: int = 50, rings: Sequence[int] = (4, 6, 8), seed: int = 0,
                   max_card: int = 64) -> list[dict]:
    """Compare the cyclic-family shortcut with brute force on seeded (pairing, submodule) draws.

    Each draw picks a corpus pairing ``P`` and a submodule ``K ⊆ W``; the α
    verdict of ``P`` and the purity verdict of ``K ⊆ W`` are decided with the
    cyclic family and with every module of cardinality ``≤ max_card``.
    """
    rng = random.Random(f"reduction-gate:{seed}")
    cfg = CorpusConfig(seed=seed)
    pools = {n: corpus_pairings(zmod(n), cfg) for n in rings}
    out = []
    for k in range(count):
        n = rings[k % len(rings)]
        P = rng.choice(pools[n])
        K = rng.choice(all_submodules(P.W))
        res = ac.cyclic_reduction_oracle(P, K, seed=rng.randrange(2**31), max_card=max_card)
        out.append({"ring": n, "pairing": P.descriptor(), "K": [list(g) for g in K.generators], **res})
    return out


def q2_samples(n: int, count: int = 500, seed: int = 0) -> list[CheckReport]:
    """``count`` seeded membership checks over α-pairings of the ``Z/n`` corpus."""
    R = zmod(n)
    rng = random.Random(f"q2:{n}:{seed}")
    pool = [P for P in corpus_pairings(R, CorpusConfig(seed=seed)) if _alpha(P)]
    reports = []
    for _ in range(count):
        P = rng.choice(pool)
        inst = Instance("pairing", R, pairing=P)
        (p,) = enum_q2(inst, rng, samples=1)
        reports.append(check("q-2", inst, p))
    return reports
