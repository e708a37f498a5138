"""CLI report, determinism, and schema tests."""

import json

import pytest

from rank1binary import cli

try:
    import jsonschema
except ImportError:  # pragma: no cover
    jsonschema = None


def run_cli(argv, tmp_path):
    out = tmp_path / "report.json"
    code = cli.run(argv + ["--out", str(out)])
    return code, out.read_text() if out.exists() else ""


def load_schema():
    import importlib.resources as res
    with res.files("rank1binary").joinpath("data/report.schema.json").open() as fh:
        return json.load(fh)


def test_construct_report(tmp_path):
    code, text = run_cli(["construct", "psl2:7"], tmp_path)
    assert code == 0
    report = json.loads(text)
    assert report["schema_version"] == 1
    assert report["results"]["degree"] == 8
    assert report["results"]["order"] == 168
    assert report["results"]["primitive"] is True


def test_reports_are_byte_identical(tmp_path):
    _, first = run_cli(["witness", "psl2:11/coset:a5"], tmp_path)
    _, second = run_cli(["witness", "psl2:11/coset:a5"], tmp_path)
    assert first == second
    assert "timings" not in json.loads(first)


def test_schema_validation(tmp_path):
    if jsonschema is None:
        pytest.skip("jsonschema not installed")
    schema = load_schema()
    for argv in (["construct", "pgl2:5"],
                 ["closure", "frob:7:2"],
                 ["witness", "psl2:7", "--max-len", "3"],
                 ["frobenius", "13", "3"],
                 ["verify-tables", "T5"]):
        _, text = run_cli(argv, tmp_path)
        jsonschema.validate(json.loads(text), schema)


def test_closure_report(tmp_path):
    code, text = run_cli(["closure", "frob:7:2"], tmp_path)
    assert code == 0
    results = json.loads(text)["results"]
    assert results["decided"] is True and results["is_closed"] is True
    code, text = run_cli(["closure", "psl2:7"], tmp_path)
    results = json.loads(text)["results"]
    assert results["is_closed"] is False
    assert results["separating_element"].startswith("(")


def test_tsv_format(tmp_path):
    code, text = run_cli(["construct", "psl2:7", "--format", "tsv"], tmp_path)
    assert code == 0
    lines = text.splitlines()
    assert any(line == "results.degree\t8" for line in lines)
    assert all("\t" in line for line in lines)


def test_parse_error_exit_code(tmp_path):
    code, _ = run_cli(["construct", "nosuch:5"], tmp_path)
    assert code == 2
    code, _ = run_cli(["construct", "psl2:6"], tmp_path)
    assert code == 2


def test_classify_needs_descriptor_or_corpus():
    with pytest.raises(SystemExit) as exc:
        cli.run(["classify"])
    assert exc.value.code == 2


def test_verify_tables_numeric(tmp_path):
    code, text = run_cli(["verify-tables", "T2", "--q", "8"], tmp_path)
    assert code == 0
    results = json.loads(text)["results"]
    assert results["all_ok"] is True
    entry = results["tables"][0]
    assert entry["symbolic_ok"] and entry["numeric_ok"]


def test_frobenius_witness_report(tmp_path):
    code, text = run_cli(["frobenius", "7", "2"], tmp_path)
    assert code == 0
    w = json.loads(text)["results"]["witness"]
    assert w["I"] == [0, 1, 5] and w["J"] == [0, 1, 3]


def test_perm_str():
    from rank1binary.perm import Permutation
    assert cli.perm_str(Permutation.identity(4)) == "()"
    assert cli.perm_str(Permutation.from_cycles(5, [(0, 1), (2, 3, 4)])) \
        == "(0 1)(2 3 4)"
