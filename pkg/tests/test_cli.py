import json
import subprocess
import sys

import pytest

from polydec.cli import CliConfig, main
from polydec.errors import PreconditionError


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    assert code == 0
    return json.loads(out)


def test_decompose_text(capsys):
    code, out, _ = run(capsys, "decompose", "--field", "q", "x^4+2*x^2+1")
    assert code == 0 and out.startswith("Decomposable u=x^2 g=x^2 + 1")
    code, out, _ = run(capsys, "decompose", "--field", "q", "x^4+x^3")
    assert "Indecomposable" in out and "h_2 = 1/8*x" in out


def test_decompose_single_m(capsys):
    blob = run_json(capsys, "decompose", "--field", "fp:3", "--m", "2", "x^4+x^3")
    assert blob["h"] == "2*x" and not blob["mDecomposable"]


def test_text_and_json_agree(capsys):
    for poly in ("x^4+x^3", "x^6+3*x^3+1", "x^5+x+1"):
        _, out, _ = run(capsys, "decompose", poly)
        blob = run_json(capsys, "decompose", poly)
        assert out.split()[0].lower() == blob["verdict"]


def test_modp(capsys):
    blob = run_json(capsys, "modp", "x^4+x^3")
    assert (blob["If"], blob["badPrimes"], blob["threshold"]) == (8, [2], 4)
    code, out, _ = run(capsys, "modp", "x^4+x^3", "--p", "5")
    assert code == 0 and out.strip() == "GuaranteedIndecomposable"
    code, _, err = run(capsys, "modp", "x^4+2*x^2+1")
    assert code == 3 and "InputDecomposable" in err


def test_specialize(capsys):
    blob = run_json(capsys, "specialize", "x^4+t", "--exceptional")
    assert blob["divisors"] == {"2": {"h": ["a"], "degreeBound": 40, "maxDegree": 1}}
    code, out, _ = run(capsys, "specialize", "t*x^4", "--alpha", "1", "--t", "0")
    assert out.startswith("Indecomposable (x^5)")


def test_montecarlo_byte_identical(capsys):
    argv = ["specialize", "x^4+t", "--montecarlo", "--field", "fp:10007", "--trials", "1000", "--seed", "42"]
    blob1 = run(capsys, *argv, "--format", "json")[1]
    blob2 = run(capsys, *argv, "--format", "json")[1]
    assert blob1 == blob2
    rep = json.loads(blob1)
    assert rep["plan"]["D"] == 136 and rep["plan"]["boundExact"] == "136/10007"
    assert rep["failures"] / 1000 <= 136 / 10007


def test_seed_from_environment(capsys, monkeypatch):
    argv = ["specialize", "x^4+t", "--montecarlo", "--field", "fp:1009", "--trials", "20", "--format", "json"]
    monkeypatch.setenv("POLYDEC_SEED", "7")
    a = run(capsys, *argv)[1]
    b = run(capsys, *argv, "--seed", "7")[1]
    assert json.loads(a)["plan"]["seed"] == 7 and a == b


def test_exit_codes(capsys):
    assert run(capsys, "decompose", "x^4+*")[0] == 2
    assert run(capsys, "decompose", "x^4+t")[0] == 2  # t is not a variable here
    assert run(capsys, "decompose", "--field", "fp:9", "x^4")[0] == 3
    assert run(capsys, "decompose", "--m", "3", "x^4+x")[0] == 3
    assert run(capsys, "specialize", "x^4+t")[0] == 3


def test_config_validation():
    with pytest.raises(PreconditionError):
        CliConfig(trials=0)
    with pytest.raises(PreconditionError):
        CliConfig(seed=-1)


def test_stdin_and_module_entry():
    proc = subprocess.run(
        [sys.executable, "-m", "polydec", "decompose", "-"],
        input="x^6 + 2*x^3 + 1\n", capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout.startswith("Decomposable")
