import json

import pytest
from click.testing import CliRunner

from core import user_config
from skewalg_cli import EXIT_FAIL, EXIT_PASS, EXIT_USAGE, skewalg


@pytest.fixture
def run(tmp_path):
    runner = CliRunner()

    def invoke(*args):
        return runner.invoke(skewalg, ["--log-level", "ERROR", "--log-file", str(tmp_path / "skewalg.log"),
                                       *args])
    return invoke


def lines(result):
    return result.output.strip().splitlines()


def test_nf_daha(run):
    result = run("nf", "Y1*Y2")
    assert result.exit_code == EXIT_PASS, result.output
    assert lines(result) == ["z3"]


def test_nf_contexts(run):
    assert lines(run("nf", "z3*z1", "--context", "torus3")) == ["q*z1*z3"]
    assert lines(run("nf", "x*x", "--context", "F1")) == ["s^2"]
    assert lines(run("nf", "z3*z1", "--context", "torus3", "--params", "q=2,h=3")) == ["2*z1*z3"]


def test_nf_json(run):
    result = run("nf", "x*s - s*x", "--context", "F2", "--format", "json")
    assert result.exit_code == EXIT_PASS
    document = json.loads(result.output)
    assert document["command"] == "nf"
    assert document["outputs"] == {"normal_form": "1"}
    assert document["verdict"] == "pass"


@pytest.mark.parametrize("args", [
    ["nf", "x y", "--context", "F1"],
    ["nf", "x", "--context", "F3"],
    ["nf", "z1", "--params", "q=2,t=3"],
    ["nf", "(x + 1)^-1", "--context", "F1"],
])
def test_nf_usage_errors(run, args):
    assert run(*args).exit_code == EXIT_USAGE


def test_daha_verify(run):
    result = run("daha-verify")
    assert result.exit_code == EXIT_PASS, result.output
    assert lines(result)[-1] == "20/20 identities hold"


def test_daha_verify_json_mod_p(run):
    result = run("daha-verify", "--params", "q=2,h=3", "--prime", "7", "--format", "json")
    assert result.exit_code == EXIT_PASS
    document = json.loads(result.output)
    assert len(document["outputs"]["records"]) == 20
    assert document["outputs"]["passed"] is True


def test_daha_verify_failing_relation(run):
    result = run("daha-verify", "--extra-relation", "X1*X2 = X1")
    assert result.exit_code == EXIT_FAIL
    assert "FAIL  X1*X2 = X1" in result.output


def test_ideal_reduce(run):
    result = run("ideal-reduce", "x", "y")
    assert result.exit_code == EXIT_PASS, result.output
    assert lines(result)[0] == "generators: [1]"
    assert lines(result)[1].startswith("certificate: verified")


def test_ideal_reduce_two_sided_json(run, monkeypatch):
    monkeypatch.setenv("SKEWALG_STRICT_SCHEMA", "1")
    result = run("ideal-reduce", "--side", "2", "--context", "F2", "x", "--format", "json")
    assert result.exit_code == EXIT_PASS, result.output
    document = json.loads(result.output)
    assert document["outputs"]["generators"] == ["1"]
    assert document["outputs"]["hypotheses"]["verdict"] == "pass"


def test_ideal_reduce_hypothesis_failure(run):
    assert run("ideal-reduce", "--side", "2", "--context", "F2S-zero", "x").exit_code == EXIT_FAIL
    assert run("ideal-reduce", "--context", "daha", "x").exit_code == EXIT_FAIL


def test_ideal_reduce_failure_document(run):
    result = run("ideal-reduce", "--side", "2", "--context", "F2S-zero", "x", "--format", "json")
    assert result.exit_code == EXIT_FAIL
    document = json.loads(result.output)
    assert document["verdict"] == "fail"
    assert document["outputs"]["report"]["verdict"] == "fail"


def test_ideal_reduce_usage_errors(run):
    assert run("ideal-reduce", "0").exit_code == EXIT_USAGE
    assert run("ideal-reduce", "x", "--side", "up").exit_code == EXIT_USAGE


def test_compat_check(run):
    result = run("compat-check", "torus-bad")
    assert result.exit_code == EXIT_FAIL
    assert "NOT normal" in result.output
    assert "fails: N*z1 = tau2^2(z1)*N" in result.output
    assert run("compat-check", "F1").exit_code == EXIT_PASS
    assert run("compat-check", "daha").exit_code == EXIT_PASS


def test_selftest(run):
    result = run("selftest", "--seed", "5", "--cases", "3", "--suite", "scalars", "--suite", "compat")
    assert result.exit_code == EXIT_PASS, result.output
    assert lines(result)[0] == "selftest (seed 5):"
    assert all(line.strip().startswith("PASS") for line in lines(result)[1:])


def test_selftest_saves_seed(run):
    result = run("selftest", "--seed", "41", "--cases", "1", "--suite", "compat", "--save-seed")
    assert result.exit_code == EXIT_PASS, result.output
    assert user_config.get_seed() == 41
    result = run("selftest", "--cases", "1", "--suite", "compat")
    assert lines(result)[0] == "selftest (seed 41):"


def test_nf_grouped_inverse(run):
    assert lines(run("nf", "(z1)^-1*z1", "--context", "torus3")) == ["1"]
    assert run("nf", "(z1 + z2)^-1", "--context", "torus3").exit_code == EXIT_USAGE
