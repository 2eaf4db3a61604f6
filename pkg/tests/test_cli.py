import io
import json
import subprocess
import sys

import pytest

from tatefrob.cli import main


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), stream=buf)
    text = buf.getvalue()
    assert text.endswith("\n") and text.count("\n") == 1
    return code, json.loads(text)


def test_hcp_exact_output():
    buf = io.StringIO()
    assert main(["hcp", "--D", "-4"], stream=buf) == 0
    assert buf.getvalue() == '{"D":-4,"coeffs":["-1728","1"]}\n'


def test_hcp_reduced_and_large_coefficients():
    code, out = run("hcp", "--D", "-3", "--mod", "7")
    assert code == 0 and out == {"D": -3, "p": 7, "coeffs": ["0", "1"]}
    code, out = run("hcp", "--D", "-23")
    assert out["coeffs"] == ["12771880859375", "-5151296875", "3491750", "1"]


@pytest.mark.parametrize("argv", [
    ["hcp", "--D", "-5"],
    ["hcp", "--D", "4"],
    ["hcp", "--D", "-4", "--mod", "9"],
    ["hcp"],
    ["bogus"],
    ["sweep", "--p", "4", "--N", "3"],
    ["sweep", "--p", "5", "--N", "10"],
    ["sweep", "--p", "5", "--r", "0", "--N", "3"],
    ["count", "--curve", "7^1:1"],
    ["count", "--curve", "nonsense"],
    ["split", "--a", "0", "--b", "0", "--N", "3", "--pmax", "50"],
])
def test_usage_errors(argv):
    code, out = run(*argv)
    assert code == 2 and out["error"] == "UsageError" and out["message"]


def test_scriptp():
    code, out = run("scriptp", "--D", "-16")
    assert code == 0 and out["kind"] == "PRODUCT" and out["factors"] == [-16, -4]
    # (x - 287496)(x - 1728)
    assert out["coeffs"] == [str(287496 * 1728), str(-(287496 + 1728)), "1"]
    assert run("scriptp", "--D", "0")[1]["kind"] == "ZERO"
    assert run("scriptp", "--D", "-5")[1] == {"D": -5, "kind": "ONE", "factors": [], "coeffs": ["1"]}


def test_count():
    code, out = run("count", "--curve", "7^1:1,0")
    assert code == 0
    assert out == {"curve": "7^1:1,0", "count": "8", "a_E": "0", "delta_E": "-28",
                   "f_E": ["7", "0", "1"], "j_E": "6"}


def test_frob_special():
    code, out = run("frob", "--curve", "7^1:1,0")
    assert code == 0 and out["classification"] == "SPECIAL"
    assert out["sigma_prime"] == [["14", "-203"], ["1", "-14"]]
    assert out["sigma_double_prime"] == [["7", "-28"], ["2", "-7"]]
    code, out = run("frob", "--curve", "7^1:1,0", "--N", "2")
    assert code == 1 and out["error"] == "SpecialEvenTorsion"


def test_frob_with_level():
    code, out = run("frob", "--curve", "5^1:0,1", "--N", "3")
    assert code == 0 and out["N"] == 3 and out["verdict"] == "PASS"
    tau = [[int(x) for x in row] for row in out["tau"]]
    assert out["tau_mod_N"] == [[str(x % 3) for x in row] for row in tau]


def test_domain_error_exit_code():
    code, out = run("count", "--curve", "7^1:0,0")
    assert code == 1 and out["error"] == "Singular"
    code, out = run("verify", "--curve", "7^1:1,1", "--N", "7")
    assert code == 1 and out["error"] == "BadTorsionLevel"


def test_sweep_cross_check_all_pass():
    code, rows = run("sweep", "--p", "5", "--N", "3", "--cross-check")
    assert code == 0 and len(rows) == 20
    assert all(r["verdict"] == "PASS" and r["criteria_consistent"] for r in rows)


def test_sweep_level_two_has_out_of_contract_rows():
    code, rows = run("sweep", "--p", "7", "--N", "2")
    verdicts = {r["verdict"] for r in rows}
    assert code == 0 and verdicts == {"PASS", "OUT-OF-CONTRACT"}
    assert all(r["classification"] == "SPECIAL" for r in rows if r["verdict"] == "OUT-OF-CONTRACT")


def test_sweep_extension_field():
    code, rows = run("sweep", "--p", "2", "--r", "2", "--N", "3")
    assert code == 0 and len(rows) == 60 and all(r["verdict"] == "PASS" for r in rows)


def test_split():
    code, rows = run("split", "--a", "0", "--b", "1", "--N", "3", "--pmax", "60", "--cross-check")
    assert code == 0
    assert [r["p"] for r in rows] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
    for r in rows:
        if "skipped" not in r:
            assert r["splits"] == r["cross_check"]


def test_deterministic_subprocess():
    cmd = [sys.executable, "-m", "tatefrob.cli", "sweep", "--p", "5", "--N", "2"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and json.loads(first)
