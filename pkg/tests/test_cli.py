import io
import json

import pytest

from pencilgit.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, run


def call(*argv, **kw):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err, **kw)
    return code, out.getvalue(), err.getvalue()


def test_classify():
    code, out, _ = call("classify", "--field", "fp:13", "--pencil", "rep:Z1")
    assert (code, out.strip()) == (EXIT_OK, "Z1")


def test_chow_piece():
    code, out, _ = call("chow", "piece", "FINAL", "1")
    assert (code, out.strip()) == (EXIT_OK, "Z/2 + Z/3")


def test_invariants_at_written_basis():
    code, out, _ = call("invariants", "--field", "q", "--pencil", "wall:2")
    assert code == EXIT_OK
    assert out.splitlines() == ["I' = 7", "J = -143/216", "point = (74088:-143)", "Stable"]


def test_flags_before_subcommand():
    code, out, _ = call("--field", "fp:13", "--json", "orbit", "--rho", "6")
    data = json.loads(out)
    assert code == EXIT_OK and data["checks"][0]["witness"]["orbit"] == ["6", "7"]


@pytest.mark.parametrize(
    "argv",
    [
        ("classify", "--pencil", "f=[1,2];g=[0,0,0,1]"),
        ("classify", "--field", "fp:12", "--pencil", "rep:Z1"),
        ("classify", "--field", "gf13", "--pencil", "rep:Z1"),
        ("orbit", "--rho", "x"),
        ("chow", "ideal", "FINAL", "foo"),
        ("chow", "piece", "NOPE", "1"),
        ("frobnicate",),
        ("classify",),
    ],
)
def test_usage_errors_exit_2(argv):
    code, _, err = call(*argv)
    assert code == EXIT_USAGE and err


def test_domain_error_exits_1():
    code, _, err = call("wall-form", "--field", "fp:13", "--pencil", "rep:Z1")
    assert code == EXIT_FAIL and "NotStable" in err


def test_other_commands():
    assert call("stabilizer", "--field", "fp:13", "--pencil", "wall:2")[1].startswith("order 4")
    assert call("fiber", "--point", "74088:-143")[1].split() == ["-5", "-2", "-1/3", "1/3", "2", "5"]
    assert call("fiber", "--field", "fp:13", "--phi", "--pencil", "wall:2")[1].startswith("24 points")
    assert "V = triv + k_D4" in call("chars", "D8")[1]
    assert call("chow", "ideal", "D8_COHOM", "beta_d", "--extra", "3*beta_d")[1].strip() == "zero"
    assert call("chow", "verify-map", "PGL2_PT->FINAL")[0] == EXIT_OK
    assert "gen c2 2" in call("chow", "show", "PGL2_PT")[1]


def test_json_is_deterministic(tmp_path):
    argv = ("verify-all", "--json", "--seed", "3", "--only", "01", "--only", "09", "--only", "13")
    a, b = call(*argv), call(*argv)
    assert a == b and a[0] == EXIT_OK
    data = json.loads(a[1])
    assert data["version"] == "pencil-git/1"
    assert set(data) == {"version", "command", "field", "checks", "status"}
    assert [c["id"] for c in data["checks"]] == sorted(c["id"] for c in data["checks"])
    assert all(set(c) == {"id", "anchor", "status", "witness"} for c in data["checks"])
    out = tmp_path / "report.json"
    call(*argv, "--out", str(out))
    assert out.read_text().strip() == a[1].strip()


def test_corrupted_builtin_fails_the_harness():
    broken = {"FINAL": "gen alpha 1; gen zeta1 2; gen zeta 1; rel 2*alpha; rel 4*zeta1; rel alpha**2;"}
    code, out, _ = call("verify-all", "--only", "09", "--only", "10", builtin_overrides=broken)
    assert code == EXIT_FAIL
    assert "09-graded-pieces                 fail" in out
    assert "FAILED 09-graded-pieces" in out


def test_verify_all_needs_p_1_mod_4():
    assert call("verify-all", "--field", "fp:7")[0] == EXIT_USAGE
