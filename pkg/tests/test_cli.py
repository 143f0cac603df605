import json

import pytest

from semigroups.cli import EXIT_CAP, EXIT_OK, EXIT_USAGE, EXIT_WITNESS, run_command
from semigroups.core import read_cayley
from semigroups.report import strip_timing


@pytest.fixture
def brandt_file(tmp_path):
    path = tmp_path / "b2.cay"
    assert run_command(["gen", "brandt", "2", "-o", str(path)]) == EXIT_OK
    return path


def _report(path):
    return json.loads(path.read_text(encoding="utf-8"))


def test_gen_writes_a_readable_table(brandt_file):
    S = read_cayley(brandt_file)
    assert S.order == 5
    assert list(S.labels) == ["0", "e11", "e12", "e21", "e22"]


def test_analyze(tmp_path, brandt_file):
    out = tmp_path / "report.json"
    assert run_command(["analyze", str(brandt_file), "-o", str(out)]) == EXIT_OK
    results = _report(out)["results"]
    assert results["order"] == 5
    assert results["regular"] and results["inverse"] and results["fundamental"]
    assert results["idempotents"] == 3
    assert results["pseudo_inverse"]


def test_analyze_is_deterministic(tmp_path):
    first, second = tmp_path / "a.json", tmp_path / "b.json"
    for out in (first, second):
        assert run_command(["analyze", "-o", str(out), "--family", "full_transformation", "3"]) == EXIT_OK
    assert strip_timing(_report(first)) == strip_timing(_report(second))
    assert _report(first)["input"]["params"] == [3]


def test_bad_input_file(tmp_path, capsys):
    path = tmp_path / "broken.cay"
    path.write_text("2\n0 1\n1\n", encoding="utf-8")
    assert run_command(["analyze", str(path)]) == EXIT_USAGE
    path.write_text("2\n1 1\n1 0\n", encoding="utf-8")
    assert run_command(["analyze", str(path)]) == EXIT_USAGE
    assert run_command(["analyze", str(tmp_path / "missing.cay")]) == EXIT_USAGE
    assert run_command(["analyze"]) == EXIT_USAGE
    assert run_command(["frobnicate"]) == EXIT_USAGE


def test_cap_exceeded(capsys):
    code = run_command(["analyze", "--cap-max-elements", "8", "--family", "full_transformation", "3"])
    assert code == EXIT_CAP
    err = capsys.readouterr().err
    assert '"cap": "max_elements"' in err
    assert '"requested": 27' in err


def test_cap_from_environment(monkeypatch):
    monkeypatch.setenv("SEMIGROUPS_MAX_ELEMENTS", "8")
    assert run_command(["analyze", "--family", "full_transformation", "3"]) == EXIT_CAP
    assert run_command(["analyze", "--cap-max-elements", "27", "--family", "full_transformation", "3"]) == EXIT_OK


def test_witness_failure(capsys):
    assert run_command(["category", "build", "--family", "null_plus_zero", "2"]) == EXIT_WITNESS
    assert '"witness"' in capsys.readouterr().err


def test_biorder_commands(tmp_path, brandt_file):
    out, bos = tmp_path / "biorder.json", tmp_path / "b2.bos"
    assert run_command(["biorder", "extract", str(brandt_file), "-o", str(bos)]) == EXIT_OK
    assert bos.read_text(encoding="utf-8").splitlines()[0] == "3"
    assert run_command(["biorder", "check", str(bos), "-o", str(out)]) == EXIT_OK
    results = _report(out)["results"]
    assert results["labels"] == ["0", "e11", "e22"]
    assert "sandwich" not in results
    assert run_command(["biorder", "sandwich", str(brandt_file), "--pair", "e11", "e22", "-o", str(out)]) == EXIT_OK
    assert _report(out)["results"]["sandwich"] == {"e11,e22": ["0"]}
    assert run_command(["biorder", "sandwich", str(brandt_file), "--pair", "e11", "e99"]) == EXIT_USAGE
    assert run_command(["fundamental", "build", str(bos), "--json", "-o", str(out)]) == EXIT_OK
    assert _report(out)["results"]["quotient"]["order"] == 5


def test_fundamental_build_writes_table_and_sidecar(tmp_path, brandt_file):
    table = tmp_path / "te.cay"
    assert run_command(["fundamental", "build", str(brandt_file), "-o", str(table), "--seed", "5"]) == EXIT_OK
    assert read_cayley(table).order == 5
    sidecar = _report(tmp_path / "te.json")["results"]
    assert sidecar["choice_independent"]
    assert len(sidecar["quotient"]["classes"]) == 5
    assert all("representative" in block for block in sidecar["quotient"]["classes"])


def test_fundamental_image_and_groupoid(tmp_path, brandt_file):
    out = tmp_path / "report.json"
    assert run_command(["fundamental", "image", "-o", str(out), "--family", "brandt_group", "2", "2"]) == EXIT_OK
    results = _report(out)["results"]
    assert not results["fundamental"]
    assert results["image"]["image_order"] == 5
    assert run_command(["groupoid", "roundtrip", str(brandt_file), "-o", str(out)]) == EXIT_OK
    results = _report(out)["results"]
    assert results["morphisms"] == 5
    assert results["schein"]
    assert results["reconstruction"]["order"] == 5
    assert run_command(["groupoid", "squares", "-o", str(out), "--family", "rectangular_band", "2", "2"]) == EXIT_OK
    assert _report(out)["results"]["singular_squares"] == []


def test_presentation_gap(tmp_path):
    out = tmp_path / "ig.g"
    assert run_command(["presentation", "--gap", "-o", str(out), "--family", "chain_semilattice", "2"]) == EXIT_OK
    text = out.read_text(encoding="utf-8")
    assert text.startswith("F := FreeSemigroup(")
    out = tmp_path / "rig.json"
    code = run_command(["presentation", "--json", "--kind", "RIG", "--cycles", "gamma_tau", "-o", str(out),
                        "--family", "rectangular_band", "2", "2"])
    assert code == EXIT_OK
    proper = _report(out)["results"]["proper"]
    assert proper and all(result["passed"] for result in proper.values())


def test_missing_biorder_file(tmp_path):
    assert run_command(["groupoid", "roundtrip", str(tmp_path / "x.bos")]) == EXIT_USAGE


def test_category_cones(tmp_path):
    out = tmp_path / "cones.json"
    assert run_command(["category", "cones", "-o", str(out), "--family", "chain_semilattice", "2"]) == EXIT_OK
    results = _report(out)["results"]
    assert results["category"]
    assert run_command(["category", "check", "--side", "R", "-o", str(out), "--family", "brandt", "2"]) == EXIT_OK
    assert "recovery" in _report(out)["results"]


def test_corpus_ndjson(tmp_path):
    out = tmp_path / "corpus.ndjson"
    code = run_command(["corpus", "--max-order", "2", "--check", "axioms", "--check", "fundamental", "--no-progress", "-o", str(out)])
    assert code == EXIT_OK
    lines = [json.loads(line) for line in out.read_text(encoding="utf-8").splitlines()]
    records, summary = lines[:-1], lines[-1]
    assert len(records) == 2 * 6
    assert {r["check"] for r in records} == {"axioms", "fundamental"}
    assert summary["summary"] == {"max_order": 2, "inputs": 6, "checks": ["axioms", "fundamental"]}


def test_corpus_dumps_json_per_check(tmp_path):
    dump_dir = tmp_path / "dumps"
    dump_dir.mkdir()
    code = run_command(["corpus", "--max-order", "2", "--check", "sandwich", "--check", "cones", "--no-progress",
                        "--dump-dir", str(dump_dir), "-o", str(tmp_path / "corpus.ndjson")])
    assert code == EXIT_OK
    [sandwich] = list(dump_dir.glob("check_results_sandwich_*.json"))
    [cones] = list(dump_dir.glob("check_results_cones_*.json"))
    assert [record["index"] for record in _report(sandwich)] == list(range(6))
    assert {record["status"] for record in _report(cones)} <= {"pass", "skip"}
