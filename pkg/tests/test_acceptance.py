"""Acceptance gates, one test per criterion.

Each test prints a single ``PASS``/``FAIL`` line for its criterion (shown even
when pytest captures output) and then asserts.
"""

from __future__ import annotations

import random
import time

import pytest

from dualpair import canonical_pairing, cyclic, is_locally_projective, ut2_f2, zmod
from dualpair.alphacond import alpha_injective_for
from dualpair.labcli import main
from dualpair.modules import divisor_chains, module_from_chain
from dualpair.rings import is_cogenerator_ring, is_qf, is_self_injective, is_semisimple, is_squarefree
from dualpair.theoremlab import (
    CorpusConfig,
    Instance,
    cells,
    check,
    corpus_pairings,
    fixture_maps,
    get_entry,
    q2_samples,
    reduction_gate,
    run_suite,
    suite_config,
    summarize,
)


@pytest.fixture
def verdict_line(capsys):
    def emit(number: int, ok: bool, detail: str) -> None:
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'} criterion {number}: {detail}")

    return emit


def _failures(reports) -> list:
    return [r for r in reports if r.status in ("fail", "error")]


def _timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def test_criterion_01_closure_equals_biperp(verdict_line):
    reports, dt = _timed(lambda: run_suite("closure"))
    bad = _failures(reports)
    passed = sum(r.status == "pass" for r in reports)
    ok = not bad and passed > 0 and dt < 120
    verdict_line(1, ok, f"{passed} cells, {len(bad)} failures, {dt:.1f}s")
    assert not bad, bad[:3]
    assert passed > 0
    assert dt < 120


def test_criterion_02_annihilator_conditions(verdict_line):
    reports, dt = _timed(lambda: run_suite("annihilators"))
    bad = _failures(reports)
    counts = summarize(reports)
    ok = not bad and all(counts.get(t, {}).get("pass", 0) > 0 for t in ("An-Ke.1", "An-Ke.2", "An-Ke.3")) and dt < 60
    verdict_line(2, ok, f"{len(reports)} cells, {len(bad)} failures, {dt:.1f}s")
    assert not bad, bad[:3]
    assert all(counts[t]["pass"] > 0 for t in ("An-Ke.1", "An-Ke.2", "An-Ke.3"))
    assert dt < 60


def test_criterion_03_density_routes_agree(verdict_line):
    reports = run_suite("density")
    bad = _failures(reports)
    passed = sum(r.status == "pass" for r in reports)
    verdict_line(3, not bad and passed > 0, f"{passed} (X, Y) pairs, {len(bad)} failures")
    assert not bad, bad[:3]
    assert passed > 0


def test_criterion_04_local_projectivity_routes(verdict_line):
    reports = run_suite("local-projectivity")
    bad = _failures(reports)
    R = zmod(4)
    v = is_locally_projective(cyclic(R, 2, "left"))
    w = alpha_injective_for(canonical_pairing(cyclic(R, 2, "left")), cyclic(R, 2, "right"))
    witness_ok = (not v and not w and w.witness["element"] == [1]
                  and w.witness["test_module"]["canonical"] == [2])
    verdict_line(4, not bad and witness_ok, f"{len(reports)} modules, {len(bad)} failures, witness {witness_ok}")
    assert not bad, bad[:3]
    assert witness_ok


def test_criterion_05_cyclic_reduction_gate(verdict_line):
    rows = reduction_gate()
    disagree = [r for r in rows if not r["agree"]]
    verdict_line(5, len(rows) == 50 and not disagree, f"{len(rows)} draws, {len(disagree)} disagreements")
    assert len(rows) == 50
    assert not disagree, disagree[:3]


def test_criterion_06_q2_two_routes(verdict_line):
    reports = q2_samples(4) + q2_samples(6)
    na = [r for r in reports if r.status != "pass"]
    verdict_line(6, len(reports) == 1000 and not na, f"{len(reports)} samples, {len(na)} non-pass")
    assert len(reports) == 1000
    assert not na, na[:3]


def test_criterion_07_dual_map_identities(verdict_line):
    total, bad = 0, []
    for theta in fixture_maps():
        inst = Instance("map", theta.domain.ring, theta=theta)
        for tid in ("f*-clos.1", "f*-clos.2", "f*-clos.3c", "f*-clos.3d"):
            for p in cells(get_entry(tid), inst, random.Random(0), 10**9):
                r = check(tid, inst, p)
                total += 1
                if r.status != "pass":
                    bad.append(r)
    verdict_line(7, total > 0 and not bad, f"{total} cells, {len(bad)} non-pass")
    assert total > 0
    assert not bad, bad[:3]


def test_criterion_08_ring_predicate_table(verdict_line):
    t0 = time.perf_counter()
    problems = []
    for n in range(2, 13):
        R = zmod(n)
        q = is_qf(R)
        if not (q and is_self_injective(R) and is_cogenerator_ring(R)):
            problems.append(("qf", n))
        if q.details != {"self_injective": True, "cogenerator": True}:
            problems.append(("routes", n))
        if bool(is_semisimple(R)) != is_squarefree(n):
            problems.append(("semisimple", n))
    ut = is_self_injective(ut2_f2())
    if ut or not ut.witness or not ut.witness.get("ideal") or not ut.witness.get("map"):
        problems.append(("ut2", ut))
    dt = time.perf_counter() - t0
    verdict_line(8, not problems and dt < 30, f"{len(problems)} problems, {dt:.2f}s")
    assert not problems
    assert dt < 30


def test_criterion_09_tensor_alpha_and_ke_formula(verdict_line):
    reports = run_suite("tensor")
    bad = _failures(reports)
    counts = summarize(reports)
    ok = not bad and counts["p-2.1"]["pass"] > 0 and counts["uno.2"]["pass"] > 0
    verdict_line(9, ok, f"{len(reports)} cells, {len(bad)} failures")
    assert not bad, bad[:3]
    assert counts["p-2.1"]["pass"] > 0 and counts["uno.2"]["pass"] > 0


def test_criterion_10_completion(verdict_line):
    reports = run_suite("completion")
    bad = _failures(reports)
    recorded, wrong = 0, []
    for n in (4, 6, 8, 9):
        for P in corpus_pairings(zmod(n), CorpusConfig()):
            c = P.completion()
            recorded += 1
            if bool(P.is_dense_pairing()):
                if not c.is_isomorphism:
                    wrong.append((n, P.descriptor()))
            elif c.surjective:
                wrong.append((n, P.descriptor()))
    ok = not bad and not wrong and recorded > 0
    verdict_line(10, ok, f"{recorded} pairings, {len(bad) + len(wrong)} failures")
    assert not bad, bad[:3]
    assert not wrong, wrong[:3]


def test_criterion_11_determinism(verdict_line, tmp_path):
    outs = []
    for k in range(2):
        d = tmp_path / f"run{k}"
        assert main(["theorems", "--suite", "qf-core", "--seed", "7", "--full", "--format", "machine", "--out", str(d)]) == 0
        outs.append((d / "report.json").read_bytes())
    same = outs[0] == outs[1]
    verdict_line(11, same, f"{len(outs[0])} bytes per report")
    assert same


def test_criterion_12_semisimple_corollary(verdict_line):
    reports = run_suite("semisimple", suite_config("semisimple", {"rings": ("2", "3", "6")}), ["dicht=alp"])
    bad = [r for r in reports if r.status != "pass"]
    verdict_line(12, bool(reports) and not bad, f"{len(reports)} pairings, {len(bad)} non-pass")
    assert reports
    assert not bad, bad[:3]


def test_corpus_chains_within_bounds():
    # sanity check on the corpus the criteria range over
    for n in (4, 6, 8, 9):
        for chain in divisor_chains(n, 2):
            assert module_from_chain(zmod(n), chain).cardinality == max(1, _prod(chain))


def _prod(xs) -> int:
    out = 1
    for x in xs:
        out *= x
    return out
