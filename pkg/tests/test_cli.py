import json
import os
from pathlib import Path

import pytest

from klschur.cli import mnr_size, run

GOLDEN = Path(__file__).parent / "golden"
GOLDEN_CASES = {
    "qschur_basis_2_2": ["qschur", "--n", "2", "--r", "2", "basis", "--json"],
    "qschur_cells_2_2": ["qschur", "--n", "2", "--r", "2", "cells", "--json"],
    "wedderburn_D_2_2": ["wedderburn", "--n", "2", "--r", "2", "D", "--json"],
    "wedderburn_M_2_2": ["wedderburn", "--n", "2", "--r", "2", "M", "--json"],
    "asymptotic_phi_2_2": ["asymptotic", "--n", "2", "--r", "2", "phi", "--json"],
    "james_2_2_e2": ["james", "--n", "2", "--r", "2", "--e", "2", "--primes", "5,13", "--json"],
    "hecke_cells_3": ["hecke", "--r", "3", "cells", "--json"],
}


def run_json(capsys, argv):
    code = run(argv)
    out = capsys.readouterr().out
    return code, out


@pytest.mark.parametrize("name", sorted(GOLDEN_CASES))
def test_golden(capsys, name):
    code, out = run_json(capsys, GOLDEN_CASES[name])
    assert code == 0
    path = GOLDEN / f"{name}.json"
    if os.environ.get("KLSCHUR_UPDATE_GOLDEN"):
        path.parent.mkdir(exist_ok=True)
        path.write_text(out)
    assert out == path.read_text()


def test_output_is_deterministic(capsys):
    argv = ["wedderburn", "--n", "2", "--r", "2", "basis", "--json"]
    first = run_json(capsys, argv)
    assert run_json(capsys, argv) == first
    payload = json.loads(first[1])
    assert payload["schemaVersion"] == 1 and payload["config"]["n"] == 2


def test_worked_example_triple(capsys):
    code, out = run_json(capsys, ["qschur", "--n", "3", "--r", "3", "fconst",
                                  "2,1,0/e/1,1,1", "1,1,1/s2/2,1,0", "2,1,0/s2/2,1,0", "--json"])
    assert code == 0 and json.loads(out)["result"]["f"] == "1"


def test_ordinal_indices(capsys):
    code, out = run_json(capsys, ["qschur", "--n", "2", "--r", "2", "fconst", "0", "0", "0", "--json"])
    assert code == 0
    assert json.loads(out)["result"]["a"]["ordinal"] == 0


@pytest.mark.parametrize("argv", [
    ["qschur", "--n", "2", "basis"],
    ["qschur", "--n", "2", "--r", "2", "nonsense"],
    ["qschur", "--n", "2", "--r", "2", "fconst", "99", "0", "0"],
    ["qschur", "--n", "2", "--r", "2", "fconst", "1/e/1", "0", "0"],
    ["hecke", "--r", "7", "afn"],
    ["wedderburn", "--n", "4", "--r", "3", "D"],
    ["wedderburn", "--n", "2", "--r", "2", "--schur", "9=1", "D"],
    ["wedderburn", "--n", "2", "--r", "2", "--schur", "0=0", "D"],
    ["james", "--n", "2", "--r", "2", "--e", "2", "--primes", "2"],
    ["james", "--n", "2", "--r", "2", "--e", "7", "--primes", "7"],
    [],
])
def test_usage_errors_exit_2(capsys, argv):
    assert run(argv) == 2


def test_schur_override_by_label(capsys):
    code, out = run_json(capsys, ["wedderburn", "--n", "2", "--r", "2", "--schur", "(2)=v",
                                  "--schur", "1,1=2", "D", "--json"])
    assert code == 0
    entries = sorted(x for row in json.loads(out)["result"]["D"] for x in row if x != "0")
    assert entries == ["2"] + ["v"] * 9  # class (2) is the 3-dimensional one


def test_verify_all_passes(capsys):
    code, out = run_json(capsys, ["verify-all", "--n", "2", "--r", "2", "--json"])
    assert code == 0
    result = json.loads(out)["result"]
    assert result["passed"] and set(result["suites"]) == {"hecke", "qschur", "wedderburn", "asymptotic"}


def test_plain_output(capsys):
    assert run(["hecke", "--r", "2", "afn"]) == 0
    assert "Delta" in capsys.readouterr().out


def test_size_formula():
    assert [mnr_size(n, r) for n, r in ((2, 2), (2, 3), (3, 2), (3, 3))] == [10, 20, 45, 165]
