import json
import logging
from pathlib import Path

import jsonschema
import pytest

from backend.cli import run
from core.models.reports import CRITERION_JSON_SCHEMA, SCHEMA_ID

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture(autouse=True)
def _drop_cli_handler():
    yield
    root = logging.getLogger()
    for handler in list(root.handlers):
        if handler.get_name() == "pclosed":
            root.removeHandler(handler)


@pytest.fixture(autouse=True)
def _clean_env(monkeypatch):
    for name in ("PCLOSED_WORKERS", "PCLOSED_LOG_LEVEL", "PCLOSED_LOG_FORMAT"):
        monkeypatch.delenv(name, raising=False)


@pytest.mark.parametrize(
    "golden, argv",
    [
        ("check_final_example", ["check", "--p", "5", "--f", "y", "--g", "x^2"]),
        ("check_diagonal", ["check", "--p", "5", "--f", "(x-y)^4", "--g", "(x-y)^4"]),
        ("check_not_closed", ["check", "--p", "3", "--f", "1", "--g", "x^2"]),
        ("multiplier", ["multiplier", "--p", "5", "--f", "y, x^2"]),
        ("witness_not_closed", ["witness", "--p", "3", "--f", "1", "--g", "x^2"]),
        ("decompose", ["decompose", "--p", "5", "--f", "x^2", "--g", "3*x*y"]),
        ("cartier", ["cartier", "--p", "5", "--u", "x^4", "--v", "0"]),
        ("classify_monomial", ["classify-monomial", "--p", "5", "--mx", "2", "--my", "1"]),
        ("series_gen", ["series-gen", "--p", "3", "--h", "x*y", "--c", "1", "--level", "1"]),
    ],
)
def test_golden_output(golden, argv, capsys):
    assert run(argv) == 0
    out = capsys.readouterr().out
    assert out == (GOLDEN / f"{golden}.txt").read_text()


@pytest.mark.parametrize(
    "f, g, closed",
    [("y", "x^2", True), ("(x-y)^4", "(x-y)^4", True), ("1", "x^2", False), ("y/x^2", "x", None)],
)
def test_check_json_matches_schema(f, g, closed, capsys):
    p = "5" if closed is not False else "3"
    assert run(["check", "--p", p, "--f", f, "--g", g, "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    jsonschema.validate(doc, CRITERION_JSON_SCHEMA)
    assert doc["schema"] == SCHEMA_ID
    if closed is not None:
        assert doc["p_closed"] is closed
    assert (doc["witness_a"] is not None) == doc["p_closed"]


def test_check_without_witness(capsys):
    assert run(["check", "--p", "5", "--f", "y", "--g", "x^2", "--no-witness", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    jsonschema.validate(doc, CRITERION_JSON_SCHEMA)
    assert doc["witness_a"] is None


@pytest.mark.parametrize(
    "argv, command",
    [
        (["multiplier", "--p", "3", "--f", "x + y^2, x*y"], "multiplier"),
        (["witness", "--p", "5", "--f", "y", "--g", "x^2"], "witness"),
        (["decompose", "--p", "5", "--f", "x^2", "--g", "3*x*y"], "decompose"),
        (["cartier", "--p", "5", "--u", "x^4", "--v", "0"], "cartier"),
        (["classify-monomial", "--p", "5", "--mx", "-1", "--my", "-1"], "classify-monomial"),
        (["series-gen", "--p", "3", "--h", "x*y"], "series-gen"),
    ],
)
def test_json_documents_carry_schema_and_command(argv, command, capsys):
    assert run(argv + ["--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["schema"] == SCHEMA_ID
    assert doc["command"] == command


def test_monomial_json_reports_case_two(capsys):
    assert run(["classify-monomial", "--p", "5", "--mx", "-1", "--my", "-1", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["p_closed"] is True
    assert doc["proof_case"] == 2
    assert (doc["eps_x"], doc["eps_y"]) == (4, 4)


@pytest.mark.parametrize(
    "argv",
    [
        ["check", "--p", "4", "--f", "y", "--g", "x"],
        ["check", "--p", "five", "--f", "y", "--g", "x"],
        ["check", "--p", "5", "--f", "x + * y", "--g", "x"],
        ["check", "--p", "5", "--f", "z", "--g", "x"],
        ["check", "--p", "5", "--f", "y"],
        ["bench", "--p", "5", "--trials", "0"],
        ["frobnicate"],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    assert run(argv) == 2
    assert capsys.readouterr().out == ""


@pytest.mark.parametrize(
    "argv, fragment",
    [
        (["cartier", "--p", "5", "--u", "y", "--v", "0"], "not closed"),
        (["decompose", "--p", "5", "--f", "x", "--g", "0"], "not zero"),
        (["series-gen", "--p", "3", "--h", "x*y", "--c", "x"], "x^3"),
        (["series-gen", "--p", "3", "--h", "1/x"], "polynomial"),
    ],
)
def test_domain_errors_exit_1(argv, fragment, capsys):
    code = run(argv)
    err = capsys.readouterr().err
    assert code == 1
    assert err.startswith("error: ")
    assert fragment in err


def test_bench_agrees(capsys):
    assert run(["bench", "--p", "3", "--deg", "2", "--trials", "5", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["trials"] == 5
    assert doc["agreements"] == 5
    assert len(doc["records"]) == 5


@pytest.mark.slow
def test_bench_default_size_agrees(capsys):
    assert run(["bench", "--p", "5", "--deg", "3", "--trials", "25"]) == 0
    out = capsys.readouterr().out
    assert "25/25" in out


def test_selftest_passes(capsys):
    assert run(["selftest"]) == 0
    out = capsys.readouterr().out
    assert "0 failed" in out
    assert "FAIL" not in out


def test_bad_environment_exits_2(monkeypatch, capsys):
    monkeypatch.setenv("PCLOSED_WORKERS", "0")
    assert run(["selftest"]) == 2
    assert "bad environment" in capsys.readouterr().err


def test_json_log_format_goes_to_stderr(capsys):
    assert run(["--log-level", "debug", "--log-format", "json", "check", "--p", "5", "--f", "y", "--g", "x^2"]) == 0
    captured = capsys.readouterr()
    assert captured.out.startswith("p: 5")
    records = [json.loads(line) for line in captured.err.splitlines() if line.startswith("{")]
    assert records
    assert all("level" in r and "message" in r for r in records)
