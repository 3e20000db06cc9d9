import json
import subprocess
import sys
from pathlib import Path

import pytest

from chebalg import cli, identities
from chebalg.chebyshev import ChebKind, gen_recurrence
from chebalg.poly import IntPoly

GOLDEN = Path(__file__).parent / "golden"
GOLDEN_CASES = [(k, n, fmt) for k in ("T", "U", "Tstar") for n in (1, 4, 5, 64)
                for fmt in ("json", "plain")]


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def golden_path(kind, n, fmt):
    return GOLDEN / f"gen_{kind}_{n}.{'json' if fmt == 'json' else 'txt'}"


@pytest.mark.parametrize("kind, n, fmt", GOLDEN_CASES)
def test_gen_golden(capsys, kind, n, fmt):
    code, out, _ = run(capsys, "gen", kind, str(n), "--format", fmt)
    assert code == 0
    assert out.encode() == golden_path(kind, n, fmt).read_bytes()


@pytest.mark.parametrize("kind, n", [(k, n) for k in ("T", "U") for n in (1, 4, 5, 64)])
def test_closed_form_method_gives_same_coefficients(capsys, kind, n):
    code, out, _ = run(capsys, "gen", kind, str(n), "--method", "closed-form",
                       "--format", "plain")
    assert code == 0
    assert out.encode() == golden_path(kind, n, "plain").read_bytes()


def test_gen_examples(capsys):
    assert run(capsys, "gen", "T", "4", "--method", "recurrence", "--format", "plain")[1] \
        == "1 0 -8 0 8\n"
    assert run(capsys, "gen", "U", "2", "--format", "plain")[1] == "-1 0 4\n"
    assert run(capsys, "gen", "Tstar", "1", "--format", "plain")[1] == "-1 2\n"


@pytest.mark.parametrize("kind", ["T", "U", "Tstar"])
def test_json_round_trip(capsys, kind):
    k = ChebKind.parse(kind)
    for n in range(0, 201, 9):
        code, out, _ = run(capsys, "gen", kind, str(n))
        doc = json.loads(out)
        assert doc["schema_version"] == "1" and doc["command"] == "gen"
        assert all(isinstance(c, str) for c in doc["payload"]["coefficients"])
        assert IntPoly(int(c) for c in doc["payload"]["coefficients"]) == gen_recurrence(k, n)
    assert len(str(gen_recurrence(k, 200).lc)) >= 60


def test_verify_pass(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "64")
    doc = json.loads(out)
    assert code == 0 and doc["status"] == "pass"
    assert [s["name"] for s in doc["payload"]["suites"]] == list(cli.suites.SUITES)


def test_verify_subset(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "8", "--only", "ode,coprime")
    doc = json.loads(out)
    assert code == 0
    assert [s["name"] for s in doc["payload"]["suites"]] == ["ode", "coprime"]
    assert all(s["status"] == "pass" for s in doc["payload"]["suites"])


def test_verify_output_is_deterministic(capsys):
    first = run(capsys, "verify", "--max-n", "12")[1]
    second = run(capsys, "verify", "--max-n", "12")[1]
    assert first == second


def test_injected_failure_exits_1_with_witness(capsys, monkeypatch):
    real = identities.gen_recurrence

    def flipped(kind, n):
        p = real(kind, n)
        if kind is ChebKind.FIRST and n == 6:
            c = list(p.coeffs)
            c[2] = -c[2]
            return IntPoly(c)
        return p

    monkeypatch.setattr(identities, "gen_recurrence", flipped)
    code, out, _ = run(capsys, "verify", "--max-n", "8", "--only", "eq1,ode")
    doc = json.loads(out)
    assert code == 1
    assert doc["status"] == "fail"
    failures = [f for s in doc["payload"]["suites"] for f in s["failures"]]
    assert failures
    assert all("witness" in f and any(c != "0" for c in f["witness"]) for f in failures)


@pytest.mark.parametrize("argv", [
    ["verify", "--only", "bogus"],
    ["verify", "--only", ""],
    ["verify", "--max-n", "0"],
    ["gen", "X", "3"],
    ["gen", "T", "-1"],
    ["gen", "Tstar", "3", "--method", "closed-form"],
    ["gen", "T", "0", "--method", "closed-form"],
    ["roots", "isolate", "T", "3", "--width", "1/1000"],
    ["roots", "isolate", "T", "3", "--width", "0"],
    ["roots", "isolate", "T", "3", "--width", "abc"],
    ["roots", "rational", "U", "0"],
    ["roots"],
    [],
])
def test_usage_errors_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_roots_rational(capsys):
    code, out, _ = run(capsys, "roots", "rational", "U", "5")
    payload = json.loads(out)["payload"]
    assert code == 0
    assert payload["computed"] == ["-1/2", "0", "1/2"] == payload["expected"]
    assert payload["agrees"] is True


def test_roots_isolate(capsys):
    code, out, _ = run(capsys, "roots", "isolate", "T", "3", "--width", "1/1024")
    ivs = json.loads(out)["payload"]["intervals"]
    assert code == 0 and len(ivs) == 3
    assert ivs[1] == {"lo": "0", "hi": "0", "exact": "0"}
    from fractions import Fraction
    for iv in (ivs[0], ivs[2]):
        assert Fraction(iv["hi"]) - Fraction(iv["lo"]) <= Fraction(1, 1024)
    code, out, _ = run(capsys, "roots", "isolate", "T", "1")
    assert json.loads(out)["payload"]["intervals"] == [{"lo": "0", "hi": "0", "exact": "0"}]


def test_out_file(capsys, tmp_path):
    target = tmp_path / "t64.txt"
    code, out, _ = run(capsys, "gen", "T", "64", "--format", "plain", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_bytes() == golden_path("T", 64, "plain").read_bytes()


def test_subprocess_entry_point():
    ok = subprocess.run([sys.executable, "-m", "chebalg", "gen", "T", "5", "--format", "plain"],
                        capture_output=True, text=True)
    assert ok.returncode == 0 and ok.stdout.encode() == golden_path("T", 5, "plain").read_bytes()
    bad = subprocess.run([sys.executable, "-m", "chebalg", "gen", "Q", "5"],
                         capture_output=True, text=True)
    assert bad.returncode == 2
