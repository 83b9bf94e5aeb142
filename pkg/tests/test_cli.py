import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from permalg.cli import main

ALGEBRAS = str(Path(__file__).resolve().parent.parent / "algebras")


@pytest.fixture
def runner():
    return CliRunner()


def invoke(runner, *args, expect=0):
    result = runner.invoke(main, list(args))
    assert result.exit_code == expect, result.output
    return result.output


def test_normalize_and_expand(runner):
    out = invoke(runner, "normalize", "x2*x1*x3")
    assert out.strip() == "x2*x1*x3"
    out = invoke(runner, "expand", "[x1,x2]")
    assert out.strip() == "x1*x2 - x2*x1"
    out = invoke(runner, "expand", "{{x1,x2},{x3,x4}}")
    assert out.strip() == "2*x1*x2*x3*x4 + 2*x2*x1*x3*x4 + 2*x3*x1*x2*x4 + 2*x4*x1*x2*x3"


def test_is_lie_exit_codes(runner):
    out = invoke(runner, "is-lie", "x2*x1*x3 - x1*x2*x3")
    assert out.strip() == "Lie element: [[x2,x1],x3]"
    result = runner.invoke(main, ["is-lie", "x1*x2"])
    assert result.exit_code == 1
    assert "defect" in result.output


def test_lie_express_and_jordan_express(runner):
    out = invoke(runner, "lie-express", "x2*x1 - x1*x2")
    assert out.strip() == "[x2,x1]"
    result = runner.invoke(main, ["jordan-express", "x1*x2"])
    assert result.exit_code == 1
    out = invoke(runner, "jordan-express", "x1*x2 + x2*x1")
    assert "{" in out


def test_check_identity(runner):
    invoke(runner, "check-identity", "--template", "[[a,b],[c,d]] = 0")
    invoke(runner, "check-identity", "--template", "{a,b} = {b,a}", "--polarized")
    result = runner.invoke(main, ["check-identity", "--template", "a*b = b*a"])
    assert result.exit_code == 1
    assert "witness" in result.output


def test_dims_and_bn(runner):
    out = invoke(runner, "dims", "--gens", "2", "--deg", "3", "--json")
    assert json.loads(out)["dimension"] == 6
    out = invoke(runner, "bn", "--gens", "3", "--deg", "3", "--json")
    data = json.loads(out)
    assert data["count"] == 18
    result = runner.invoke(main, ["bn", "--gens", "2", "--deg", "2"])
    assert result.exit_code == 2


def test_to_bn(runner):
    out = invoke(runner, "to-bn", "x1*x2*x3")
    assert out.strip() == "f(x1;x2,x3) + f(x2;x1,x3) + 2*f(x3;x1,x2)"
    result = runner.invoke(main, ["to-bn", "x1*x2"])
    assert result.exit_code == 2


def test_cohn_witness(runner):
    out = invoke(runner, "cohn-witness", "--json")
    data = json.loads(out)
    assert data["ideal_slice_dim"] == 1
    assert data["perm_slice_dim"] == 2
    assert data["exceptional_quotient"] is True


def test_envelope_commands(runner):
    out = invoke(runner, "envelope", "nf", "--algebra", f"{ALGEBRAS}/heisenberg.json", "d(e2)*e1")
    assert out.strip() == "d(e1)*e2 - d(e3)"
    out = invoke(
        runner,
        "envelope",
        "nf",
        "--algebra",
        f"{ALGEBRAS}/heisenberg.json",
        "d(e2)*e1",
        "--unicode",
    )
    assert "̇" in out
    out = invoke(runner, "envelope", "build", "--algebra", f"{ALGEBRAS}/heisenberg.json", "--deg", "3", "--json")
    data = json.loads(out)
    assert data["counts"] == {"1": 3, "2": 3, "3": 4}
    out = invoke(runner, "envelope", "check", "--algebra", f"{ALGEBRAS}/heisenberg.json", "--seed", "5", "--json")
    data = json.loads(out)
    assert data["ok"] is True
    result = runner.invoke(main, ["envelope", "check", "--algebra", f"{ALGEBRAS}/sl2.json"])
    assert result.exit_code == 1
    result = runner.invoke(main, ["envelope", "build", "--algebra", f"{ALGEBRAS}/sl2.json", "--deg", "2"])
    assert result.exit_code == 1


def test_gk_command(runner):
    out = invoke(runner, "gk", "--algebra", f"{ALGEBRAS}/heisenberg.json", "--max-deg", "12", "--json")
    data = json.loads(out)
    assert abs(float(data["slope"]) - 2.0) <= 0.25
    result = runner.invoke(main, ["gk", "--algebra", f"{ALGEBRAS}/heisenberg.json", "--max-deg", "3"])
    assert result.exit_code == 2


def test_input_error_exit_codes(runner):
    result = runner.invoke(main, ["expand", "x1*x2 +"])
    assert result.exit_code == 2
    result = runner.invoke(main, ["expand", "foo"])
    assert result.exit_code == 2
    result = runner.invoke(main, ["envelope", "nf", "--algebra", "does-not-exist.json", "d(e1)"])
    assert result.exit_code == 2


def test_json_flag_stable_within_process(runner):
    first = invoke(runner, "expand", "{x1,x2}", "--json")
    second = invoke(runner, "expand", "{x1,x2}", "--json")
    assert first == second
    data = json.loads(first)
    assert data["terms"] == [
        {"coefficient": "1", "word": [1, 2]},
        {"coefficient": "1", "word": [2, 1]},
    ]
