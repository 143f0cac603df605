import io
import json

import pytest

from semigroups.checks import BUG, CAP, CHECKS, FAIL, PASS, SKIP, BaseCheck, corpus_checks, make_check
from semigroups.core import CongruenceRelation, generate_family
from semigroups.errors import CapExceeded, InvalidChain, TheoremViolation
from semigroups.report import strip_timing


class _Scripted(BaseCheck):
    """Fails, caps or trips a theorem depending on the order of S."""

    def __setup__(self):
        return {}

    def check_one(self, S, check_tools):
        if S.order == 1:
            return {"passed": True}
        if S.order == 2:
            raise InvalidChain("no chain", witness=(0, 1))
        if S.order == 3:
            raise CapExceeded("max_elements", 2, 3)
        raise TheoremViolation("impossible", witness=(S.order,))


@pytest.mark.parametrize("kind", sorted(CHECKS))
def test_every_check_passes_on_the_small_corpus(corpus3, kind):
    check = make_check(kind, corpus3)
    results = check.run()
    assert len(results) == len(corpus3)
    assert check.passed, [r for r in results if r["status"] not in (PASS, SKIP)]


@pytest.mark.slow
@pytest.mark.parametrize("kind", sorted(CHECKS))
def test_every_check_passes_up_to_order_four(corpus4, kind):
    check = make_check(kind, corpus4)
    results = check.run(max_workers=4)
    assert len(results) == len(corpus4) == 218
    summary = check.summary()
    assert summary[FAIL] == summary[CAP] == summary[BUG] == 0, [r for r in results if r["status"] not in (PASS, SKIP)]


def test_regular_only_checks_skip_the_rest():
    null = generate_family("null_plus_zero", 2)
    [record] = make_check("fundamental", [null]).run()
    assert record["status"] == SKIP
    assert record["result"] == {"skipped": "not regular"}


def test_unknown_check():
    with pytest.raises(ValueError):
        make_check("everything", [])


def test_constructor_gates(families):
    with pytest.raises(TypeError):
        make_check("axioms", [families["T2"], "T3"])
    with pytest.raises(TypeError):
        _Scripted(keyword=3, semigroups=[])
    with pytest.raises(ValueError):
        make_check("axioms", [families["T2"]]).run(max_workers=0)


def test_parallel_run_matches_serial(corpus3):
    serial = make_check("sandwich", corpus3).run()
    threaded = make_check("sandwich", corpus3).run(max_workers=4)
    assert [r["index"] for r in threaded] == list(range(len(corpus3)))
    assert strip_timing(threaded) == strip_timing(serial)


def test_statuses_and_summary():
    semigroups = [generate_family("chain_semilattice", k) for k in (1, 2, 3, 4)]
    check = _Scripted(keyword="scripted", semigroups=semigroups)
    results = check.run()
    assert [r["status"] for r in results] == [PASS, FAIL, CAP, BUG]
    assert results[1]["result"]["witness"] == [0, 1]
    assert results[2]["result"]["witness"]["cap"] == "max_elements"
    assert not check.passed
    assert check.summary() == {"check": "scripted", "total": 4, PASS: 1, FAIL: 1, SKIP: 0, CAP: 1, BUG: 1}


def test_max_failures_stops_the_run():
    semigroups = [generate_family("chain_semilattice", k) for k in (2, 2, 1)]
    check = _Scripted(keyword="scripted", semigroups=semigroups, options={"max_failures": 1})
    results = check.run()
    assert len(results) == 1
    assert results[0]["status"] == FAIL


def test_ndjson_and_dataframe(families):
    check = make_check("axioms", [families["T2"], families["B2"]])
    check.run()
    stream = io.StringIO()
    check.write_ndjson(stream)
    lines = stream.getvalue().splitlines()
    assert len(lines) == 2
    assert [json.loads(line)["name"] for line in lines] == ["T2", "B2"]

    df = check.into_DataFrame()
    assert list(df["status"]) == [PASS, PASS]
    assert {"index", "name", "order", "check", "biordered", "ms"} <= set(df.columns)


def test_json_dump(tmp_path, families):
    check = make_check("pseudo_inverse", [families["B2"]], out_path=str(tmp_path), save_json=True)
    check.run()
    [dumped] = list(tmp_path.glob("check_results_pseudo_inverse_*.json"))
    assert json.loads(dumped.read_text(encoding="utf-8"))[0]["result"]["pseudo_inverse"] is True


def test_cones_check_reports_each_condition(families, monkeypatch):
    [record] = make_check("cones", [families["B2"]]).run()
    assert record["status"] == PASS
    assert set(record["result"]["conditions"]) == {
        "left_normal",
        "right_normal",
        "multiplicative",
        "kernel",
        "cone_semigroup_regular",
        "principal_cones_included",
    }
    assert all(record["result"]["conditions"].values())

    monkeypatch.setattr(corpus_checks, "right_regular_kernel", lambda S: CongruenceRelation.from_labels([0] * S.order))
    [record] = make_check("cones", [families["B2"]]).run()
    assert record["status"] == FAIL
    assert record["result"]["conditions"]["kernel"] is False
