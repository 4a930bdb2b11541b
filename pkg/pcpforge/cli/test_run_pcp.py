import os
import json

import pytest

from pcpforge.cli.run_pcp import main, BUNDLE_SCHEMA


def _lines(path):
    with open(path) as f:
        return [json.loads(line) for line in f if line.strip()]


@pytest.fixture
def planted(tmp_path):
    path = str(tmp_path / "lc.json")
    argv = ["gen", "planted", "--u", "3", "--v", "4", "--degree", "2", "--k", "2", "--m", "3",
            "--seed", "1", "--out", path]
    assert main(argv) == 0
    return path


def test_gen_writes_bundle(planted):
    with open(planted) as f:
        bundle = json.load(f)
    assert bundle["schema"] == BUNDLE_SCHEMA
    assert bundle["labeling"] is not None
    assert bundle["reduction"] is None
    assert bundle["generator"]["kind"] == "planted"


def test_e3sat_pipeline_accepts_long_codes(planted, tmp_path):
    red, report, export = (str(tmp_path / n) for n in ("red.json", "report.jsonl", "lc.wcnf"))
    assert main(["reduce", "e3sat", "--eps", "1/4", "--in", planted, "--out", red,
                 "--export", export]) == 0
    with open(export) as f:
        assert f.readline().startswith("p wcnf")
    assert main(["eval", "--proofs", "longcode", "--mode", "exact", "--in", red,
                 "--out", report]) == 0
    records = _lines(report)
    assert records[0]["check"] == "eval"
    assert records[0]["quantity"] == "acceptance"
    assert records[0]["lhs"] == "1/1"
    assert records[-1]["check"] == "summary" and records[-1]["pass"]

    assert main(["eval", "--proofs", "longcode", "--mode", "exact", "--expect", "7/8",
                 "--in", red, "--out", report]) == 1
    assert not _lines(report)[0]["pass"]


def test_hypergraph_long_codes_are_independent(planted, tmp_path):
    red, report = str(tmp_path / "red.json"), str(tmp_path / "report.jsonl")
    assert main(["reduce", "hypergraph", "--in", planted, "--out", red]) == 0
    assert main(["eval", "--proofs", "longcode", "--mode", "exact", "--expect", "0",
                 "--in", red, "--out", report]) == 0
    rec = _lines(report)[0]
    assert rec["quantity"] == "violations"
    assert rec["lhs"] == "0/1"
    assert rec["monochromatic"]["value"] == "0/1"


def test_eval_needs_reduction(planted, capsys):
    assert main(["eval", "--in", planted]) == 1
    err = json.loads(capsys.readouterr().out.strip().splitlines()[-1])
    assert err["check"] == "error" and err["kind"] == "input"


def test_config_error_record(capsys):
    assert main(["eval", "--eps", "3/2"]) == 2
    err = json.loads(capsys.readouterr().out.strip().splitlines()[-1])
    assert err["kind"] == "config"


def test_decode_long_codes(planted, tmp_path):
    report = str(tmp_path / "decode.jsonl")
    assert main(["decode", "--variant", "e3sat", "--proofs", "longcode", "--runs", "2",
                 "--in", planted, "--out", report]) == 0
    records = _lines(report)
    assert [r["check"] for r in records] == ["decode", "decode", "decode_expected", "summary"]
    assert all(r["lhs"] == "1/1" for r in records[:3])
    assert records[2]["rhs"] == "1/1"


def test_params(tmp_path):
    report = str(tmp_path / "params.jsonl")
    assert main(["params", "--variant", "e3sat", "--eps", "1/100", "--c0", "1", "--out", report]) == 0
    rec = _lines(report)[0]
    assert (rec["R"], rec["T"]) == (1843, 1843)


def test_check_is_deterministic(tmp_path):
    paths = [str(tmp_path / "a.jsonl"), str(tmp_path / "b.jsonl")]
    log_dir = str(tmp_path / "logs")
    argv = ["check", "--trials", "quick", "--seed", "1", "--suites", "gamma", "mixing", "p_measure"]
    assert main(argv + ["--out", paths[0], "--log-dir", log_dir]) == 0
    assert main(argv + ["--out", paths[1], "--workers", "2"]) == 0
    with open(paths[0]) as a, open(paths[1]) as b:
        assert a.read() == b.read()
    assert os.path.exists(os.path.join(log_dir, "cmd.txt"))
    summary = _lines(paths[0])[-1]
    assert sorted(summary["checks"]) == ["gamma", "mixing", "p_measure"]


def test_check_rejects_unknown_suite(tmp_path):
    assert main(["check", "--trials", "quick", "--suites", "nope",
                 "--out", str(tmp_path / "r.jsonl")]) == 2
