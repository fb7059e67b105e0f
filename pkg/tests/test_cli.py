from __future__ import annotations

import json
from pathlib import Path

import pytest

from dualpair.labcli import InstanceError, main, parse_instance

INSTANCES = Path(__file__).resolve().parent.parent / "instances"


def write(tmp_path: Path, doc: dict, name: str = "inst.json") -> Path:
    p = tmp_path / name
    p.write_text(json.dumps(doc, indent=2))
    return p


def run(argv, capsys) -> tuple[int, dict]:
    code = main(argv)
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip().startswith("{") else {})


MULT = {
    "ring": {"zmod": 4},
    "modules": {"V": {"side": "right", "chain": [4]}, "W": {"side": "left", "chain": [4]}},
    "pairings": {"P": {"V": "V", "W": "W", "beta": [[1]]}},
    "instance": {"kind": "pairing", "pairing": "P"},
}


def test_parse_valid_document(tmp_path):
    doc = parse_instance(write(tmp_path, MULT))
    P = doc.pairings["P"]
    assert P.B == ((1,),)
    assert doc.instance.pairing is P


def test_beta_dimension_error_names_beta(tmp_path):
    bad = json.loads(json.dumps(MULT))
    bad["pairings"]["P"]["beta"] = [[1], [0]]
    with pytest.raises(InstanceError, match="beta"):
        parse_instance(write(tmp_path, bad))


def test_unknown_ring_key_is_named(tmp_path):
    bad = json.loads(json.dumps(MULT))
    bad["ring"] = {"zmodd": 4}
    with pytest.raises(InstanceError, match="zmodd"):
        parse_instance(write(tmp_path, bad))


def test_unresolved_reference(tmp_path):
    bad = json.loads(json.dumps(MULT))
    bad["pairings"]["P"]["W"] = "missing"
    with pytest.raises(InstanceError, match="missing"):
        parse_instance(write(tmp_path, bad))


def test_balance_failure_surfaces(tmp_path):
    bad = json.loads(json.dumps(MULT))
    bad["modules"]["V"] = {"side": "right", "chain": [2]}
    with pytest.raises(InstanceError):
        parse_instance(write(tmp_path, bad))


def test_invalid_json_reports_line(tmp_path):
    p = tmp_path / "broken.json"
    p.write_text('{\n  "ring": {"zmod": 4},\n  "modules": \n}')
    with pytest.raises(InstanceError) as exc:
        parse_instance(p)
    assert exc.value.line is not None


@pytest.mark.parametrize("name", sorted(p.name for p in INSTANCES.glob("*.json")))
def test_round_trip(tmp_path, name):
    first = parse_instance(INSTANCES / name).to_dict()
    again = parse_instance(write(tmp_path, first)).to_dict()
    assert again == first


def test_analyze_mult_pairing(capsys):
    code, rep = run(["analyze", "--instance", str(INSTANCES / "mult_z4.json")], capsys)
    assert code == 0
    assert rep["overview"]["W_perp"] == []
    assert rep["overview"]["hausdorff"] is True
    (row,) = rep["table"]
    assert row["closure"] == row["biperp"] == [[2]]


def test_analyze_degenerate_pairing(capsys):
    code, rep = run(["analyze", "--instance", str(INSTANCES / "degenerate_z4.json")], capsys)
    assert code == 0
    assert rep["overview"]["hausdorff"] is False
    assert rep["overview"]["completion"]["surjective"] is False


def test_alpha_reports_witness(capsys):
    code, rep = run(["alpha", "--instance", str(INSTANCES / "canonical_z2_over_z4.json")], capsys)
    assert code == 0
    assert rep["verdict"] is False
    assert rep["witness"]["element"] == [1]


def test_usage_and_input_errors_exit_2(tmp_path, capsys):
    assert main(["bogus"]) == 2
    assert main(["analyze"]) == 2
    assert main(["analyze", "--instance", str(tmp_path / "nope.json")]) == 2
    assert main(["theorems", "--caps", "nonsense"]) == 2
    capsys.readouterr()


def test_theorems_small_suite(tmp_path, capsys):
    code, _ = run(["theorems", "--suite", "semisimple", "--rings", "2,3", "--out", str(tmp_path)], capsys)
    assert code == 0
    rep = json.loads((tmp_path / "report.json").read_text())
    assert rep["config"]["rings"] == ["2", "3"]
    assert rep["status"] == "pass"
    assert (tmp_path / "summary.txt").read_text().strip()


def test_identical_runs_are_byte_identical(tmp_path, capsys):
    outs = []
    for k in range(2):
        d = tmp_path / str(k)
        main(["theorems", "--suite", "completion", "--rings", "4", "--seed", "3", "--full", "--out", str(d)])
        outs.append((d / "report.json").read_bytes())
    capsys.readouterr()
    assert outs[0] == outs[1]


def test_mine_empty_findings_exit_0(capsys):
    code, rep = run(["mine", "--theorem", "lrs-bet.1", "--drop", "injective-cogenerator", "--rings", "4"], capsys)
    assert code == 0
    assert rep["findings"] == [] and rep["findings_count"] == 0


def test_mine_finds_counterexample_on_ut2(capsys):
    code, rep = run(["mine", "--theorem", "proj-gut.1-pure-direction", "--drop", "W-injective",
                     "--rings", "ut2"], capsys)
    assert code == 0
    assert rep["findings_count"] > 0


def test_failing_report_exits_1(tmp_path, capsys, monkeypatch):
    from dualpair import theoremlab as tl

    real = tl.check

    def broken(tid, inst, params=None, **kw):
        r = real(tid, inst, params, **kw)
        r.status = "fail"
        r.witness = {"forced": True}
        return r

    monkeypatch.setattr(tl, "check", broken)
    code, rep = run(["theorems", "--suite", "semisimple", "--rings", "2", "--theorems", "PW"], capsys)
    assert code == 1
    assert rep["failures"] and rep["failures"][0]["witness"] == {"forced": True}


def test_rings_table(capsys):
    code, rep = run(["rings", "--rings", "4,ut2"], capsys)
    assert code == 0
    names = [r["ring"] for r in rep["rings"]]
    assert names == ["4", "ut2"]
    assert rep["rings"][0]["qf"] is True
    assert rep["rings"][1]["self_injective"] is False


def test_human_format(capsys):
    code = main(["rings", "--rings", "2", "--format", "human"])
    out = capsys.readouterr().out
    assert code == 0
    assert "2" in out and not out.lstrip().startswith("{")
