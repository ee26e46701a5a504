"""CLI contract: output shapes, exit codes, byte determinism."""

import json
import subprocess
import sys

import pytest

from tqftdims.cli import (
    EXIT_GUARD,
    EXIT_OK,
    EXIT_USAGE,
    Config,
    UsageError,
    delta_float,
    main,
    total_float,
)
from tqftdims.recursion import dim_table


def run_cli(*args, binary=False):
    return subprocess.run(
        [sys.executable, "-m", "tqftdims", *args],
        capture_output=True,
        text=not binary,
    )


def test_dims_csv_golden():
    res = run_cli("dims", "--p", "5", "--gmax", "2", "--format", "csv")
    assert res.returncode == EXIT_OK
    assert res.stdout.splitlines() == [
        "p,g,c,fe,fo,D,delta",
        "5,1,0,2,0,2,2",
        "5,1,1,1,0,1,1",
        "5,2,0,5,0,5,5",
        "5,2,1,4,1,5,3",
    ]


def test_dims_includes_known_rows():
    res = run_cli("dims", "--p", "5", "--gmax", "3", "--format", "csv")
    assert "5,3,0,14,1,15,13" in res.stdout.splitlines()
    res = run_cli("dims", "--p", "7", "--gmax", "2", "--format", "csv")
    assert "7,2,0,14,0,14,14" in res.stdout.splitlines()


def test_dims_json_shape():
    res = run_cli("dims", "--p", "5", "--gmax", "1", "--format", "json")
    rows = json.loads(res.stdout)
    assert rows == [
        {"p": 5, "g": 1, "c": 0, "fe": 2, "fo": 0, "D": 2, "delta": 2},
        {"p": 5, "g": 1, "c": 1, "fe": 1, "fo": 0, "D": 1, "delta": 1},
    ]


def test_dims_float_display_columns():
    res = run_cli("dims", "--p", "7", "--gmax", "3", "--format", "csv", "--float-display")
    lines = res.stdout.splitlines()
    assert lines[0] == "p,g,c,fe,fo,D,delta,delta_sine,D_sine"
    t = dim_table(7, 3)
    for line in lines[1:]:
        cells = line.split(",")
        g, c = int(cells[1]), int(cells[2])
        assert abs(float(cells[7]) - t.delta(g, c)) < 1e-6
        assert abs(float(cells[8]) - t.total(g, c)) < 1e-6


def test_byte_determinism():
    first = run_cli("dims", "--p", "11", "--gmax", "3", "--format", "json", binary=True)
    second = run_cli("dims", "--p", "11", "--gmax", "3", "--format", "json", binary=True)
    assert first.stdout == second.stdout
    a = run_cli("poly", "--g", "3", "--emit", "delta", binary=True)
    b = run_cli("poly", "--g", "3", "--emit", "delta", binary=True)
    assert a.stdout == b.stdout


def test_census_counts_and_stream():
    res = run_cli("census", "--p", "5", "--g", "2", "--c", "1")
    assert res.returncode == EXIT_OK
    assert res.stdout.strip() == "fe=4 fo=1"
    res = run_cli("census", "--p", "5", "--g", "2", "--c", "1", "--list")
    assert res.stdout.splitlines() == [
        "g;c;ab;e;parity",
        "2;1;0,0,1,0;1;even",
        "2;1;0,1,1,0;1;even",
        "2;1;1,0,0,0;0;even",
        "2;1;1,0,0,1;0;even",
        "2;1;1,0,1,0;1;odd",
    ]
    res = run_cli("census", "--p", "5", "--g", "1", "--c", "0", "--list")
    assert len(res.stdout.splitlines()) == 3  # header + two colorings


def test_census_csv_row():
    res = run_cli("census", "--p", "7", "--g", "2", "--c", "0", "--format", "csv")
    assert res.stdout.splitlines() == ["p,g,c,fe,fo,D,delta", "7,2,0,14,0,14,14"]


def test_census_size_guard():
    res = run_cli("census", "--p", "13", "--g", "5", "--c", "0")
    assert res.returncode == EXIT_GUARD
    assert "refus" in res.stderr.lower()
    # forcing a small-enough case still works
    res = run_cli("census", "--p", "5", "--g", "3", "--c", "0", "--force")
    assert res.returncode == EXIT_OK


def test_poly_text_golden():
    res = run_cli("poly", "--g", "2", "--emit", "delta")
    assert res.returncode == EXIT_OK
    assert res.stdout.strip() == (
        "(1/24)P^3 + (-1/4)C^2P + (1/6)C^3 + (-1/4)CP + (1/4)C^2 + (-1/24)P + (1/12)C"
    )


def test_poly_methods_agree():
    a = run_cli("poly", "--g", "2", "--emit", "D", "--method", "interpolate")
    b = run_cli("poly", "--g", "2", "--emit", "D", "--method", "residue")
    assert a.stdout == b.stdout
    assert a.returncode == b.returncode == EXIT_OK


def test_poly_json_parses():
    res = run_cli("poly", "--g", "1", "--emit", "delta", "--format", "json")
    obj = json.loads(res.stdout)
    assert obj == {
        "monomials": [
            {"p": 1, "c": 0, "num": 1, "den": 2},
            {"p": 0, "c": 1, "num": -1, "den": 1},
            {"p": 0, "c": 0, "num": -1, "den": 2},
        ]
    }


def test_poly_usage_errors():
    assert run_cli("poly", "--g", "1", "--emit", "D", "--method", "residue").returncode == EXIT_USAGE
    assert run_cli("poly", "--g", "2", "--emit", "delta", "--method", "residue").returncode == EXIT_USAGE
    assert run_cli("poly", "--g", "0", "--emit", "delta").returncode == EXIT_USAGE


def test_verify_poly_suite():
    res = run_cli("verify", "--suite", "poly", "--gmax", "2")
    assert res.returncode == EXIT_OK
    lines = res.stdout.splitlines()
    assert all(line.startswith("PASS") for line in lines[:-1])
    assert "0 failures" in lines[-1]


def test_verify_census_suite_small():
    res = run_cli("verify", "--suite", "census", "--p-list", "5,7", "--gmax", "2")
    assert res.returncode == EXIT_OK
    assert "FAIL" not in res.stdout


def test_hopf_certificate_output():
    res = run_cli("hopf", "--p", "7")
    assert res.returncode == EXIT_OK
    assert res.stdout.strip() == "p=7 valuation=3 expected=3 unit_norm=1 certified=yes"
    assert run_cli("hopf", "--p", "4").returncode == EXIT_USAGE


def test_quadruple_table():
    res = run_cli("quadruple", "--format", "csv")
    lines = res.stdout.splitlines()
    assert lines[0] == "g,fe0,fe2,fo2,fo0"
    assert len(lines) == 6
    t = dim_table(5, 8)
    for line in lines[1:]:
        g, fe0, fe2, fo2, fo0 = (int(x) for x in line.split(","))
        assert (fe0, fe2, fo2, fo0) == (
            t.n_even(g, 0),
            t.n_even(g, 1),
            t.n_odd(g, 1),
            t.n_odd(g, 0),
        )


def test_invalid_prime_exits_2():
    assert run_cli("dims", "--p", "6", "--gmax", "1").returncode == EXIT_USAGE
    assert run_cli("dims", "--p", "9", "--gmax", "1").returncode == EXIT_USAGE
    assert run_cli("census", "--p", "5", "--g", "0", "--c", "0").returncode == EXIT_USAGE
    assert run_cli("quadruple", "--gmin", "3", "--gmax", "2").returncode == EXIT_USAGE


def test_config_validation_direct():
    cfg = Config(primes=(5, 7), gmax=3, fmt="csv")
    assert cfg.primes == (5, 7)
    with pytest.raises(UsageError):
        Config(primes=(6,))
    with pytest.raises(UsageError):
        Config(gmax=0)
    with pytest.raises(UsageError):
        Config(fmt="yaml")
    with pytest.raises(UsageError):
        Config(suite="everything")
    with pytest.raises(UsageError):
        Config(c_filter=-2)


def test_main_callable_in_process(capsys):
    assert main(["dims", "--p", "5", "--gmax", "1", "--format", "csv"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "p,g,c,fe,fo,D,delta"
    assert main(["dims", "--p", "6", "--gmax", "1"]) == EXIT_USAGE


def test_float_display_helpers_match_exact():
    for p in (5, 7, 11):
        t = dim_table(p, 4)
        for g in range(1, 5):
            for c in range(t.d):
                assert abs(delta_float(p, g, c) - t.delta(g, c)) < 1e-6
                assert abs(total_float(p, g, c) - t.total(g, c)) < 1e-6
