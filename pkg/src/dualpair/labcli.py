"""Command-line entry point: instance files, subcommands and report emission.

Subcommands::

    analyze  --instance FILE         closure/perp/density/Hausdorff/completion table
    alpha    --instance FILE         α verdict with witness
    theorems --suite NAME            run a theorem suite over its corpus
    mine     --theorem ID --drop H   counterexample search with hypotheses dropped
    rings    --rings 2,3,ut2         ring predicate table

Exit codes: 0 when every check passes or is not applicable, 1 when a
theorem check fails, 2 on usage or input errors.

Instance files are JSON documents::

    {
      "ring": {"zmod": 4},
      "modules": {"V": {"side": "right", "chain": [4]},
                  "W": {"side": "left", "gens": 1, "relations": [[0]]}},
      "pairings": {"P": {"V": "V", "W": "W", "beta": [[1]]}},
      "maps": {"theta": {"domain": "W", "codomain": "W", "images": [[2]]}},
      "submodules": {"X": {"module": "V", "gens": [[2]]}},
      "instance": {"kind": "pairing", "pairing": "P"},
      "config": {"seed": 7, "caps": {"max_card": 8}}
    }

A pairing may instead be declared as ``{"canonical": "W"}``, meaning
``(*W, W)`` with evaluation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass, field
from typing import Any, Optional, Sequence

from . import alphacond as ac
from . import theoremlab as tl
from .errors import DualPairError
from .modules import LinearMap, Module, Submodule, all_submodules, submodule_span
from .pairings import Pairing, canonical_pairing, make_pairing
from .rings import named_ring, predicate_table

TOP_KEYS = ("ring", "modules", "pairings", "maps", "submodules", "instance", "config")
CONFIG_KEYS = ("seed", "caps")


class InstanceError(DualPairError):
    """Invalid instance document; the message names the field path and line."""

    def __init__(self, path: str, message: str, line: Optional[int] = None, context: str = ""):
        self.path, self.line, self.context = path, line, context
        where = f" (line {line}: {context.strip()})" if line else ""
        super().__init__(f"{path}: {message}{where}")


@dataclass
class InstanceDocument:
    """A validated instance file."""

    ring: Any
    modules: dict
    pairings: dict
    maps: dict
    submodules: dict
    instance: Optional[tl.Instance]
    config: dict
    raw: dict = field(repr=False, default_factory=dict)

    def to_dict(self) -> dict:
        """Canonical document (explicit relations, explicit β)."""
        names = {id(M): k for k, M in self.modules.items()}
        out: dict[str, Any] = {"ring": self.ring.descriptor(),
                               "modules": {k: tl.module_document(M) for k, M in self.modules.items()}}
        if self.pairings:
            out["pairings"] = {}
            for k, P in self.pairings.items():
                out["pairings"][k] = {"V": names.get(id(P.V)) or _add_module(out, names, P.V, f"{k}.V"),
                                      "W": names.get(id(P.W)) or _add_module(out, names, P.W, f"{k}.W"),
                                      "beta": [list(r) for r in P.B]}
        if self.maps:
            out["maps"] = {k: {"domain": names[id(f.domain)], "codomain": names[id(f.codomain)],
                               "images": [list(x) for x in f.images]} for k, f in self.maps.items()}
        if self.submodules:
            out["submodules"] = {k: {"module": names.get(id(S.ambient)) or _find_ambient(self, S),
                                     "gens": [list(g) for g in S.generators]} for k, S in self.submodules.items()}
        if "instance" in self.raw:
            out["instance"] = self.raw["instance"]
        if self.config:
            out["config"] = self.config
        return out


def _add_module(out: dict, names: dict, M: Module, name: str) -> str:
    out["modules"][name] = tl.module_document(M)
    names[id(M)] = name
    return name


def _find_ambient(doc: InstanceDocument, S: Submodule) -> str:
    for k, P in doc.pairings.items():
        if S.ambient is P.V:
            return f"{k}.V"
        if S.ambient is P.W:
            return f"{k}.W"
    raise InstanceError("submodules", "ambient module not declared")


# --------------------------------------------------------------------------
# parsing


def _locate(text: str, key: str) -> tuple[Optional[int], str]:
    needle = f'"{key}"'
    for i, line in enumerate(text.splitlines(), 1):
        if needle in line:
            return i, line
    return None, ""


def parse_instance(path: str) -> InstanceDocument:
    """Read and validate an instance file.

    Raises:
        InstanceError: naming the offending field path, with line context.
    """
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise InstanceError(path, f"cannot read file: {e.strerror}") from None
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        lines = text.splitlines()
        ctx = lines[e.lineno - 1] if 0 < e.lineno <= len(lines) else ""
        raise InstanceError("<document>", f"invalid JSON: {e.msg}", e.lineno, ctx) from None
    return parse_document(raw, text)


def parse_document(raw: Any, text: str = "") -> InstanceDocument:
    """Validate an already-loaded document (``text`` is used for line context)."""

    def fail(path: str, msg: str, key: Optional[str] = None):
        line, ctx = _locate(text, key or path.rsplit(".", 1)[-1]) if text else (None, "")
        raise InstanceError(path, msg, line, ctx)

    if not isinstance(raw, dict):
        fail("<document>", "top level must be an object")
    for k in raw:
        if k not in TOP_KEYS:
            fail(k, f"unknown top-level key {k!r}; expected one of {list(TOP_KEYS)}", k)
    if "ring" not in raw:
        fail("ring", "missing ring descriptor")
    try:
        R = tl.ring_from_descriptor(raw["ring"])
    except DualPairError as e:
        key = next(iter(raw["ring"]), "ring") if isinstance(raw["ring"], dict) else "ring"
        fail(f"ring.{key}" if key != "ring" else "ring", str(e), key)
    except (KeyError, TypeError) as e:
        fail("ring", f"malformed ring descriptor ({e})")

    modules: dict[str, Module] = {}
    for name, m in _obj(raw, "modules", fail).items():
        p = f"modules.{name}"
        if not isinstance(m, dict):
            fail(p, "module descriptor must be an object", name)
        for k in m:
            if k not in ("side", "gens", "relations", "chain"):
                fail(f"{p}.{k}", f"unknown module key {k!r}", k)
        if "chain" not in m and "gens" not in m:
            fail(p, "module needs 'gens' (with optional 'relations') or 'chain'", name)
        try:
            modules[name] = tl.module_from_document(R, m)
        except (DualPairError, TypeError, ValueError) as e:
            fail(p, str(e), name)

    def module_ref(path: str, ref) -> Module:
        if ref not in modules:
            fail(path, f"unresolved module reference {ref!r}", path.rsplit(".", 1)[-1])
        return modules[ref]

    pairings: dict[str, Pairing] = {}
    for name, pd in _obj(raw, "pairings", fail).items():
        p = f"pairings.{name}"
        if not isinstance(pd, dict):
            fail(p, "pairing descriptor must be an object", name)
        if "canonical" in pd:
            W = module_ref(f"{p}.canonical", pd["canonical"])
            pairings[name] = canonical_pairing(W)
            continue
        for k in ("V", "W", "beta"):
            if k not in pd:
                fail(f"{p}.{k}", f"missing {k!r}", name)
        V, W = module_ref(f"{p}.V", pd["V"]), module_ref(f"{p}.W", pd["W"])
        beta = pd["beta"]
        if (not isinstance(beta, list) or len(beta) != V.ngens
                or any(not isinstance(r, list) or len(r) != W.ngens for r in beta)):
            fail(f"{p}.beta", f"beta must be a {V.ngens}x{W.ngens} matrix (V and W generator counts)", "beta")
        try:
            pairings[name] = make_pairing(V, W, beta, name=name)
        except DualPairError as e:
            fail(f"{p}.beta", f"balance law fails: {e}", "beta")

    maps: dict[str, LinearMap] = {}
    for name, md in _obj(raw, "maps", fail).items():
        p = f"maps.{name}"
        for k in ("domain", "codomain", "images"):
            if k not in md:
                fail(f"{p}.{k}", f"missing {k!r}", name)
        D, C = module_ref(f"{p}.domain", md["domain"]), module_ref(f"{p}.codomain", md["codomain"])
        try:
            maps[name] = LinearMap.from_images(D, C, [tuple(x) for x in md["images"]])
        except (DualPairError, TypeError, ValueError) as e:
            fail(f"{p}.images", str(e), "images")

    subs: dict[str, Submodule] = {}
    for name, sd in _obj(raw, "submodules", fail).items():
        p = f"submodules.{name}"
        if "module" not in sd:
            fail(f"{p}.module", "missing 'module'", name)
        M = module_ref(f"{p}.module", sd["module"])
        try:
            subs[name] = submodule_span(M, [tuple(g) for g in sd.get("gens", [])])
        except (DualPairError, TypeError, ValueError) as e:
            fail(f"{p}.gens", str(e), "gens")

    config = _obj(raw, "config", fail)
    for k in config:
        if k not in CONFIG_KEYS:
            fail(f"config.{k}", f"unknown config key {k!r}", k)

    inst_doc = _obj(raw, "instance", fail)
    inst = None
    kind = inst_doc.get("kind") or ("pairing" if pairings else "module" if len(modules) == 1 else None)
    if kind is not None:
        refs = {"pairing": pairings, "other": pairings, "module": modules, "module2": modules, "map": maps}
        for k, table in refs.items():
            if k in inst_doc and inst_doc[k] not in table:
                fail(f"instance.{k}", f"unresolved reference {inst_doc[k]!r}", k)
        try:
            inst = tl.Instance(
                kind, R,
                pairing=pairings.get(inst_doc.get("pairing")) or (next(iter(pairings.values())) if pairings else None),
                other=pairings.get(inst_doc.get("other")),
                module=modules.get(inst_doc.get("module")) or (next(iter(modules.values())) if kind == "module" else None),
                module2=modules.get(inst_doc.get("module2")),
                theta=maps.get(inst_doc.get("map")) or (next(iter(maps.values())) if kind == "map" and maps else None),
                label=inst_doc.get("label", ""),
            )
        except DualPairError as e:
            fail("instance", str(e), "instance")
    return InstanceDocument(R, modules, pairings, maps, subs, inst, config, raw)


def _obj(raw: dict, key: str, fail) -> dict:
    val = raw.get(key, {})
    if not isinstance(val, dict):
        fail(key, "must be an object", key)
    return val


# --------------------------------------------------------------------------
# reports


def dumps(doc: Any) -> str:
    """Canonical machine-readable serialization."""
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def human_summary(doc: dict) -> str:
    lines = [f"command: {doc.get('command')}"]
    if "config" in doc:
        lines.append("config: " + json.dumps(doc["config"], sort_keys=True))
    if "summary" in doc:
        for tid, counts in doc["summary"].items():
            lines.append(f"  {tid:28s} pass={counts['pass']:<6d} fail={counts['fail']:<4d} "
                         f"n/a={counts['not-applicable']:<6d} error={counts['error']}")
    for key in ("verdict", "findings_count"):
        if key in doc:
            lines.append(f"{key}: {doc[key]}")
    if "table" in doc:
        for row in doc["table"]:
            lines.append("  " + ", ".join(f"{k}={row[k]}" for k in sorted(row)))
    if "rings" in doc and isinstance(doc["rings"], list):
        for row in doc["rings"]:
            lines.append("  " + ", ".join(f"{k}={row[k]}" for k in sorted(row) if k != "descriptor"))
    if "overview" in doc:
        for k in sorted(doc["overview"]):
            lines.append(f"  {k}: {doc['overview'][k]}")
    lines.append(f"status: {doc.get('status')}")
    return "\n".join(lines) + "\n"


def emit_report(doc: dict, fmt: str = "machine", out_dir: Optional[str] = None, stream=None) -> list[str]:
    """Write the report.

    The machine form (``report.json``) is canonical JSON without timings; the
    human form (``summary.txt``) is a short text table. With ``out_dir`` both
    files are written; the chosen format also goes to ``stream``.

    Raises:
        OSError: when the output directory is not writable.
    """
    machine = dumps(doc)
    human = human_summary(doc)
    paths = []
    if out_dir:
        os.makedirs(out_dir, exist_ok=True)
        for name, content in (("report.json", machine), ("summary.txt", human)):
            p = os.path.join(out_dir, name)
            with open(p, "w", encoding="utf-8") as fh:
                fh.write(content)
            paths.append(p)
    if stream is not None:
        stream.write(machine if fmt == "machine" else human)
    return paths


# --------------------------------------------------------------------------
# commands


def _gens(S: Submodule) -> list:
    return [list(g) for g in S.generators]


def analyze(doc: InstanceDocument) -> dict:
    inst = doc.instance
    if inst is None or inst.pairing is None:
        raise InstanceError("instance", "analyze needs a pairing")
    P = inst.pairing
    comp = P.completion()
    overview = {
        "W_perp": _gens(P.radical()),
        "V_perp": _gens(P.right_radical()),
        "hausdorff": bool(P.is_hausdorff()),
        "chi_injective": bool(P.chi_injective()),
        "dense_pairing": bool(P.is_dense_pairing()),
        "completion": {"cardinality": comp.module.cardinality,
                       "injective": comp.injective, "surjective": comp.surjective,
                       "isomorphism": comp.is_isomorphism},
    }
    targets = list(doc.submodules.items()) or [(f"X{i}", S) for i, S in enumerate(all_submodules(P.V))]
    table = []
    for name, X in targets:
        if X.ambient != P.V:
            continue
        table.append({
            "name": name,
            "X": _gens(X),
            "perp": _gens(P.perp_of_V_subset(X)),
            "closure": _gens(P.closure(X)),
            "biperp": _gens(P.biperp(X)),
            "closed": P.is_closed(X),
            "open": bool(P.is_open(X)),
            "dense": bool(P.is_dense(X)),
        })
    return {"command": "analyze", "instance": doc.to_dict(), "overview": overview, "table": table, "status": "ok"}


def alpha(doc: InstanceDocument) -> dict:
    inst = doc.instance
    if inst is None:
        raise InstanceError("instance", "alpha needs a pairing or a module")
    P = inst.pairing if inst.pairing is not None else canonical_pairing(inst.module)
    v = ac.satisfies_alpha(P)
    return {"command": "alpha", "instance": doc.to_dict(), "verdict": bool(v), "witness": tl._jsonable(v.witness),
            "certainty": v.certainty, "status": "ok"}


def _parse_caps(text: Optional[str]) -> dict:
    if not text:
        return {}
    out = {}
    for part in text.split(","):
        if not part.strip():
            continue
        if "=" not in part:
            raise InstanceError("--caps", f"expected key=value, got {part!r}")
        k, v = part.split("=", 1)
        k = k.strip()
        if k not in tl.CorpusConfig.__dataclass_fields__ or k in ("rings", "seed"):
            raise InstanceError("--caps", f"unknown cap {k!r}")
        out[k] = int(v)
    return out


def _parse_rings(text: Optional[str]) -> Optional[tuple[str, ...]]:
    if not text:
        return None
    rings = tuple(r.strip() for r in text.split(",") if r.strip())
    for r in rings:
        named_ring(r)
    return rings


def theorems(args) -> dict:
    overrides = _parse_caps(args.caps)
    rings = _parse_rings(args.rings)
    if rings:
        overrides["rings"] = rings
    if args.seed is not None:
        overrides["seed"] = args.seed
    cfg = tl.suite_config(args.suite, overrides)
    ids = [t.strip() for t in args.theorems.split(",")] if args.theorems else None
    if ids:
        for t in ids:
            tl.get_entry(t)
    reports = tl.run_suite(args.suite, cfg, ids)
    summary = tl.summarize(reports)
    failures = [r.to_dict() for r in reports if r.status == "fail"]
    return {
        "command": "theorems",
        "suite": args.suite,
        "config": cfg.to_dict(),
        "summary": summary,
        "failures": failures,
        "reports": [r.to_dict() for r in reports] if args.full else [],
        "status": "fail" if failures else "pass",
    }


def mine(args) -> dict:
    if not args.theorem or not args.drop:
        raise InstanceError("mine", "needs --theorem and --drop")
    caps = _parse_caps(args.caps)
    rings = _parse_rings(args.rings) or tl.MinerConfig().rings
    sc = tl.MinerConfig(rings=rings, seed=args.seed or 0,
                        **{k: v for k, v in caps.items() if k in tl.MinerConfig.__dataclass_fields__})
    dropped = [d.strip() for d in args.drop.split(",") if d.strip()]
    findings = tl.mine_counterexamples(args.theorem, dropped, sc)
    return {"command": "mine", "theorem": args.theorem, "dropped": dropped,
            "config": {"rings": list(sc.rings), "max_card": sc.max_card, "param_cap": sc.param_cap,
                       "instance_cap": sc.instance_cap, "seed": sc.seed},
            "findings": findings, "findings_count": len(findings), "status": "ok"}


def rings_cmd(args) -> dict:
    names = _parse_rings(args.rings) or tuple(str(n) for n in range(2, 13)) + ("ut2", "f2xy", "f2x2")
    rows = []
    for name in names:
        row = predicate_table(named_ring(name))
        row = {k: tl._jsonable(v) for k, v in row.items()}
        row["descriptor"] = row.pop("ring", None)
        rows.append({"ring": name, **row})
    return {"command": "rings", "rings": rows, "status": "ok"}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="dualpair", description="Exact checks for pairings of finite modules.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("machine", "human"), default="machine")
        p.add_argument("--out", metavar="DIR", help="write report.json and summary.txt here")
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--caps", help="comma list key=value, e.g. max_card=8,param_cap=50")
        p.add_argument("--rings", help="comma list of ring names, e.g. 4,6,ut2")

    for name in ("analyze", "alpha"):
        p = sub.add_parser(name)
        p.add_argument("--instance", required=True)
        common(p)
    p = sub.add_parser("theorems")
    p.add_argument("--suite", default="qf-core", choices=sorted(tl.SUITES))
    p.add_argument("--theorems", help="restrict to these ids (comma list)")
    p.add_argument("--full", action="store_true", help="include every cell report")
    common(p)
    p = sub.add_parser("mine")
    p.add_argument("--theorem")
    p.add_argument("--drop", help="comma list of hypothesis names")
    common(p)
    p = sub.add_parser("rings")
    common(p)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0) and 2
    t0 = time.perf_counter()
    try:
        if args.command in ("analyze", "alpha"):
            doc = parse_instance(args.instance)
            report = analyze(doc) if args.command == "analyze" else alpha(doc)
        elif args.command == "theorems":
            report = theorems(args)
        elif args.command == "mine":
            report = mine(args)
        else:
            report = rings_cmd(args)
    except (InstanceError, DualPairError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    try:
        emit_report(report, args.format, args.out, sys.stdout)
    except OSError as e:
        print(f"error: cannot write report: {e}", file=sys.stderr)
        return 2
    if args.format == "human":
        print(f"elapsed: {time.perf_counter() - t0:.1f}s", file=sys.stderr)
    return 1 if report.get("status") == "fail" else 0


def main_entry() -> None:
    """Console-script wrapper around ``main``."""
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    main_entry()
