"""
Unit tests for the ppl command line.
"""

import json

import pytest

from cli.__main__ import main


# Test command discovery
def test_list_commands(capsys):
    """--list shows every subcommand with its description."""
    assert main(["--list"]) == 0

    out = capsys.readouterr().out
    for command in ("algebra", "pencil", "reduce", "invariants", "verify"):
        assert command in out


def test_unknown_command(capsys):
    """Unknown subcommands exit with status 2."""
    assert main(["simulate"]) == 2
    assert "Unknown command" in capsys.readouterr().out


def test_version(capsys):
    """-V prints the installed version."""
    assert main(["-V"]) == 0
    assert capsys.readouterr().out.strip()


# Test algebra
def test_algebra_json(capsys):
    """The algebra command writes a ppl/1 document to stdout."""
    assert main(["algebra", "C3"]) == 0

    document = json.loads(capsys.readouterr().out)
    assert document["schema"] == "ppl/1"
    assert document["dim"] == 21
    assert document["table1"]["h_vee"] == 4


def test_algebra_bad_descriptor(capsys):
    """Invalid descriptors are usage errors."""
    assert main(["algebra", "Q7"]) == 2
    assert "VALIDATION_ERROR" in capsys.readouterr().out


# Test pencil and reduce
def test_pencil_text(capsys):
    """Text output shows both operators of the pencil."""
    assert main(["pencil", "--pencil", "scalar", "--emit", "text"]) == 0

    out = capsys.readouterr().out
    assert "P_1 =" in out
    assert "P_2 =" in out


def test_reduce_text(capsys):
    """The reduced KdV pencil is printed with F_Q."""
    assert main(["reduce", "-p", "kdv", "--emit", "text"]) == 0

    out = capsys.readouterr().out
    assert "P_1' =" in out
    assert "F_Q: 1/4" in out


def test_reduce_missing_gauge_file(capsys, tmp_path):
    """A missing gauge file is a usage error."""
    assert main(["reduce", "-p", "kdv", "-g", str(tmp_path / "gauge.json")]) == 2
    assert "NOT_FOUND_ERROR" in capsys.readouterr().out


# Test invariants
def test_invariants_json(capsys):
    """Central invariants of KdV through the command line."""
    assert main(["invariants", "-p", "kdv", "--samples", "2", "--seed", "9"]) == 0

    document = json.loads(capsys.readouterr().out)
    assert document["constant"] is True
    assert document["seed"] == 9


@pytest.mark.parametrize("option", [["--order", "5"], ["--samples", "0"], ["--tol", "2"]])
def test_invariants_invalid_options(capsys, option):
    """Invalid numeric options are rejected before any computation."""
    assert main(["invariants", "-p", "kdv", *option]) == 2
    assert "Invalid option" in capsys.readouterr().out


# Test verify
def test_verify_json(capsys):
    """verify --emit json prints the report document."""
    assert main(["verify", "-s", "scalar", "--emit", "json", "--samples", "2"]) == 0

    document = json.loads(capsys.readouterr().out)
    assert document["ok"] is True
    assert document["suites"][0]["name"] == "scalar"


def test_verify_table(capsys):
    """The default text output is a table followed by the verdict."""
    assert main(["verify", "-s", "eigen-scaling"]) == 0

    out = capsys.readouterr().out
    assert "Verification" in out
    assert "All checks passed." in out


@pytest.mark.slow
def test_verify_all_suites_pass(capsys):
    """verify --suite all exits 0 with every suite passing."""
    code = main(["verify", "-s", "all", "--ranks", "3", "--samples", "2", "--emit", "json"])

    document = json.loads(capsys.readouterr().out)
    failed = [suite["name"] for suite in document["suites"] if not suite["ok"]]
    assert failed == []
    assert code == 0
    assert len(document["suites"]) == 10
