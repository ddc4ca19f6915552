import json

import pytest

from stringy_zeta.cli import main
from stringy_zeta.config import DEFAULTS, ENV_PREFIX
from tests.conftest import FIXTURES, fixture_path


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch, tmp_path):
    for key in DEFAULTS:
        monkeypatch.delenv(ENV_PREFIX + key.upper(), raising=False)
    monkeypatch.chdir(tmp_path)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_classify(capsys):
    assert run(capsys, "classify", fixture_path("a1")) == (0, "klt\n", "")


def test_discrepancies(capsys):
    code, out, _ = run(capsys, "discrepancies", fixture_path("tangent-branch-kappa2"))
    assert code == 0
    assert out.splitlines() == ["E0 -1/2", "E1 0", "E2 -1", "B 1/2"]


def test_zeta_value_at_s1(capsys):
    assert run(capsys, "zeta", fixture_path("example-3-6"), "--level", "euler", "--eval-s1")[:2] == (0, "13\n")
    assert run(capsys, "zeta", fixture_path("tangent-branch-kappa2"), "--level", "euler", "--eval-s1")[:2] == (0, "1\n")


def test_zeta_example_from_the_fixture_corpus(capsys, monkeypatch):
    monkeypatch.chdir(FIXTURES.parent)
    assert run(capsys, "zeta", "fixtures/example-3-6.json", "--level", "euler", "--eval-s1") == (0, "13\n", "")


def test_motivic_value_at_s1_is_printed_reduced(capsys):
    code, out, _ = run(capsys, "zeta", fixture_path("example-3-6"), "--eval-s1")
    assert (code, out) == (0, "-L^3 - L^2 - 4*L*[C] - L\n")


def test_zeta_warns_that_d_is_ignored_on_stratified_data(capsys, caplog):
    code, out, _ = run(capsys, "zeta", fixture_path("example-3-6"), "--d", "1/2", "--level", "euler")
    assert (code, out) == (0, "13/s\n")
    assert "--d 1/2 is ignored" in caplog.text


def test_zeta_of_an_elliptic_germ_vanishes(capsys):
    assert run(capsys, "zeta", fixture_path("elliptic-kappa2"), "--d", "1/2", "--level", "euler") == (0, "0\n", "")


def test_zeta_pole_at_s1(capsys):
    code, out, _ = run(capsys, "zeta", fixture_path("cycle-2"), "--d", "1/2", "--level", "euler", "--eval-s1")
    assert code == 0
    assert out == "pole of order 2\n"


def test_model(capsys):
    code, out, _ = run(capsys, "model", fixture_path("lc-star"), "--d", "1/2", "--canonical")
    assert code == 0
    assert out.splitlines()[:2] == ["canonical model of lc-star at d = 1/2", "contracted: E1, E2, E3"]


def test_batyrev(capsys):
    assert run(capsys, "batyrev", fixture_path("a3"), "--level", "euler")[:2] == (0, "4\n")


def test_invariants(capsys):
    code, out, _ = run(capsys, "invariants", fixture_path("genus2"))
    assert code == 0
    assert out.splitlines()[1] == "e(X) = 1"


def test_veys_prints_the_invariants(capsys):
    code, out, err = run(capsys, "veys", fixture_path("genus2"))
    assert (code, err) == (0, "")
    assert out.splitlines()[1] == "e(X) = 1"
    assert run(capsys, "invariants", fixture_path("genus2"))[1] == out


def test_check_duality(capsys):
    code, out, _ = run(capsys, "check-duality", fixture_path("p2-cubic"))
    assert (code, out.splitlines()[0]) == (0, "duality holds")
    code, out, _ = run(capsys, "check-duality", fixture_path("p2-cubic-broken"))
    assert (code, out.splitlines()[0]) == (1, "duality fails")


def test_check_blowup(capsys):
    code, out, _ = run(capsys, "check-blowup", fixture_path("tangent-branch-kappa2"), "--trials", "3", "--seed", "1")
    assert code == 0
    assert out.splitlines()[-1] == "3/3 blow-ups passed"


def test_oracle(capsys):
    code, out, _ = run(capsys, "oracle-am", "--r", "3", "--m", "2", "--k", "1", "5/2", "--dwt", "0", "1/3")
    assert code == 0
    assert out.splitlines()[-1] == "equal"


def test_json_output(capsys):
    code, out, _ = run(capsys, "classify", fixture_path("a1"), "--format", "json")
    assert code == 0
    assert json.loads(out) == {"germ": "A1", "classification": "klt"}


def test_output_is_deterministic(capsys):
    argv = ("zeta", fixture_path("h-chain-k1"), "--d", "1/2", "--format", "json")
    assert run(capsys, *argv) == run(capsys, *argv)


@pytest.mark.parametrize(
    "argv,name",
    [
        (("zeta", "missing.json"), "InputError"),
        (("zeta", fixture_path("a1"), "--d", "3/2"), "ConfigError"),
        (("oracle-am", "--r", "3", "--m", "2", "--k", "1"), "InputError"),
        (("check-duality", fixture_path("a1")), "InputError"),
    ],
)
def test_parse_errors_exit_with_2(capsys, argv, name):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == ""
    assert err.startswith(f"error: {name}: ")


def test_domain_errors_exit_with_1(capsys):
    code, _, err = run(capsys, "compare-d", fixture_path("elliptic-kappa2"))
    assert code == 1
    assert err.startswith("error: StrictlyLcAtDOne: ")
    code, _, err = run(capsys, "invariants", fixture_path("a1"))
    assert code == 1
    assert err.startswith("error: NotApplicable: ")


def test_usage_errors_exit_with_2(capsys):
    assert main(["resolve", fixture_path("a1")]) == 2
    assert main([]) == 2


def test_settings_file_sets_the_defaults(capsys, tmp_path):
    (tmp_path / "stringy.json").write_text(json.dumps({"context": {"level": "euler"}}))
    assert run(capsys, "zeta", fixture_path("example-3-6"), "--eval-s1")[:2] == (0, "13\n")


def test_environment_sets_the_format(capsys, monkeypatch):
    monkeypatch.setenv("STRINGY_FORMAT", "json")
    code, out, _ = run(capsys, "classify", fixture_path("a1"))
    assert json.loads(out)["classification"] == "klt"
