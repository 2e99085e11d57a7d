"""Command-line behavior: subcommands, formats, exit codes, determinism."""

import json

import pytest

from sympspin.cli import main

EXAMPLE = "-i*x1*x2 + x1*x4 + x2*x3 + i*x3*x4"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_apply_ds_kills_example(tmp_path, capsys):
    src = tmp_path / "s.txt"
    src.write_text(EXAMPLE)
    code, out, _ = run(capsys, "apply", "--n", "2", "--op", "Ds",
                       "--input", str(src))
    assert code == 0
    assert out.splitlines()[-1] == "0"


def test_apply_ts_components(tmp_path, capsys):
    src = tmp_path / "s.txt"
    src.write_text(EXAMPLE)
    code, out, _ = run(capsys, "apply", "--n", "2", "--op", "Xs",
                       "--input", str(src))
    assert code == 0
    raised = out.splitlines()[-1]
    src.write_text(raised)
    code, out, _ = run(capsys, "apply", "--n", "2", "--op", "Ts",
                       "--input", str(src))
    assert code == 0
    assert "component 1: x2^2*q2 + 2i*x2*x4*q2 - x4^2*q2" in out
    assert "component 2: x1^2*q1 + 2i*x1*x3*q1 - x3^2*q1" in out
    assert "e^{-|q|^2/2}" in out  # convention header


def test_kernel_command(capsys):
    code, out, _ = run(capsys, "kernel", "--n", "1", "--op", "Ds",
                       "--h", "0", "--Q", "2", "--parity", "even")
    assert code == 0
    assert "dim 2" in out


def test_verify_pass_and_formats(tmp_path, capsys):
    code, out, _ = run(capsys, "verify", "--n", "2", "--hmax", "3",
                       "--Q", "4", "--suites", "theorem,example",
                       "--format", "text")
    assert code == 0
    assert "PASS" in out and "FAIL" not in out

    outdir = tmp_path / "reports"
    code, out, _ = run(capsys, "verify", "--n", "2", "--hmax", "2",
                       "--Q", "3", "--suites", "theorem",
                       "--format", "json", "--out", str(outdir))
    assert code == 0
    data = json.loads((outdir / "reports.json").read_text())
    dims = {d["params"]["h"]: d["observedDim"] for d in data["reports"]}
    # boxes pattern {full, Xs M0, 0}
    assert dims[2] == 0 and dims[0] > dims[1] > 0


def test_verify_json_deterministic(capsys):
    args = ("verify", "--n", "1", "--hmax", "2", "--Q", "3",
            "--suites", "sl2,theorem,triangle", "--format", "json")
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2


def test_verify_parallel_matches_serial(tmp_path, capsys, monkeypatch):
    args = ("verify", "--n", "1", "--hmax", "1", "--Q", "2",
            "--suites", "sl2,constant,example", "--format", "json")
    _, serial, _ = run(capsys, *args)
    monkeypatch.setenv("SYMPSPIN_THREADS", "2")
    _, parallel, _ = run(capsys, *args)
    assert serial == parallel


def test_usage_errors(capsys):
    code, _, err = run(capsys, "verify", "--n", "0", "--hmax", "1",
                       "--Q", "1")
    assert code == 2
    code, _, err = run(capsys, "verify", "--n", "1", "--hmax", "1",
                       "--Q", "1", "--suites", "nonsense")
    assert code == 2
    code, _, _ = run(capsys, "apply", "--n", "1", "--op", "Frob",
                     "--input", "-")
    assert code == 2  # bad operator token (stdin never read)
    assert main(["kernel", "--n", "1", "--op", "Es",
                 "--h", "0", "--Q", "1"]) == 2


def test_report_aggregation(tmp_path, capsys):
    outdir = tmp_path / "r"
    run(capsys, "verify", "--n", "2", "--hmax", "2", "--Q", "3",
        "--suites", "theorem,triangle", "--format", "json",
        "--out", str(outdir))
    code, out, _ = run(capsys, "report", "--input",
                       str(outdir / "reports.json"), "--format", "csv")
    assert code == 0
    assert out.startswith("n,h,")
    # triangle layout block: rows l, columns j
    assert "triangle n=2" in out and "l=0" in out and "j=1" in out


def test_report_missing_file(capsys):
    code, _, err = run(capsys, "report", "--input", "/no/such.json")
    assert code == 2
