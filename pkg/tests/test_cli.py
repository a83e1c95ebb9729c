"""Tests for the command line interface: formats, examples, exit codes."""

import json

import pytest

from realhurwitz.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_table_csv_contains_degree_four_count(capsys):
    code, out = run(capsys, "table", "--max-degree", "3", "--max-m", "3",
                    "--connected", "--format", "csv")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "m,kappa_plus,kappa_minus,lambda,chi,connected,value_num,value_den"
    assert "3,4,,,2,true,2,1" in lines
    assert "3,,4,,2,true,2,1" in lines


def test_table_text_small_block(capsys):
    code, out = run(capsys, "table", "--max-degree", "1", "--max-m", "0")
    assert code == 0
    assert out.splitlines() == [
        "m=0 k+:[] k-:[] l:[] chi=0 value=1",
        "m=0 k+:[] k-:[1] l:[] chi=2 value=1",
        "m=0 k+:[1] k-:[] l:[] chi=2 value=1",
        "m=0 k+:[] k-:[] l:[1] chi=4 value=1",
        "m=0 k+:[1] k-:[1] l:[] chi=4 value=1",
    ]


def test_table_cap_zero_single_row(capsys):
    code, out = run(capsys, "table", "--max-degree", "0", "--max-m", "5")
    assert code == 0
    assert out.splitlines() == ["m=0 k+:[] k-:[] l:[] chi=0 value=1"]


def test_table_json_and_thread_determinism(capsys):
    code, first = run(capsys, "table", "--max-degree", "2", "--max-m", "4",
                      "--format", "json")
    assert code == 0
    code, second = run(capsys, "table", "--max-degree", "2", "--max-m", "4",
                       "--format", "json", "--threads", "3")
    assert code == 0
    assert first == second
    data = json.loads(first)
    row = data["rows"][0]
    assert set(row) == {"m", "kappa_plus", "kappa_minus", "lambda", "chi",
                        "connected", "value_num", "value_den"}
    assert all(isinstance(r["value_num"], str) for r in data["rows"])


def test_verify_paper_suite_passes(capsys):
    code, out = run(capsys, "verify", "--suite", "paper")
    assert code == 0
    assert "FAIL" not in out
    assert out.strip().endswith("all checks passed")


def test_verify_oracle_suite_passes(capsys):
    code, out = run(capsys, "verify", "--suite", "oracle", "--max-size", "3")
    assert code == 0
    assert "FAIL" not in out


def test_verify_spectral_suite_passes(capsys):
    code, out = run(capsys, "verify", "--suite", "spectral")
    assert code == 0
    assert "MISMATCH" not in out
    assert "FAIL" not in out


def test_verify_nonsep_suite_passes(capsys):
    code, out = run(capsys, "verify", "--suite", "nonsep")
    assert code == 0
    assert "FAIL" not in out


def test_verify_genus0_suite_reports_known_discrepancy(capsys):
    code, out = run(capsys, "verify", "--suite", "genus0", "--max-m", "4",
                    "--max-degree", "4")
    assert code == 1
    lines = out.splitlines()
    fails = [line for line in lines if line.startswith("FAIL")]
    assert len(fails) == 1
    assert "u^2/2!" in fails[0]
    assert "expected 1/2 actual 1" in fails[0]


def test_block_json_matches_csv_sparsity(capsys):
    code, out = run(capsys, "block", "--nplus", "1", "--nminus", "1",
                    "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert len(data["basis"]) == 4
    flat = [x for row in data["entries"] for x in row]
    assert flat.count(["1", "1"]) == 4
    code, out = run(capsys, "block", "--nplus", "1", "--nminus", "1",
                    "--format", "csv")
    assert code == 0
    assert len(out.splitlines()) == 5  # header plus four nonzero entries


def test_spectrum_json_block_1_1(capsys):
    code, out = run(capsys, "spectrum", "--nplus", "1", "--nminus", "1",
                    "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["exact"] is True
    assert data["orthogonal"] is True
    assert [c["matches"] for c in data["reference_comparison"]] == [
        True, False, True, False]
    assert all(isinstance(p[0], list) for p in data["pairs"])


def test_spectrum_json_float_block(capsys):
    code, out = run(capsys, "spectrum", "--nplus", "2", "--nminus", "1",
                    "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["exact"] is False
    assert all(isinstance(p[0], float) for p in data["pairs"])
    assert "reference_comparison" not in data


def test_oracle_command(capsys):
    code, out = run(capsys, "oracle", "--nplus", "1", "--nminus", "1", "--m", "1")
    assert code == 0
    assert out.splitlines() == [
        "m=1 k+:[] k-:[2] l:[] chi=2 value=1",
        "m=1 k+:[2] k-:[] l:[] chi=2 value=1",
    ]


def test_nonsep_json_has_kappa_odd_column(capsys):
    code, out = run(capsys, "nonsep", "--max-n", "2", "--max-m", "2",
                    "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert all("kappa_odd" in row for row in data["rows"])


def test_usage_errors_exit_two(capsys):
    with pytest.raises(SystemExit) as info:
        main(["table", "--max-degree", "-1"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["nosuchcommand"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["verify"])
    assert info.value.code == 2
