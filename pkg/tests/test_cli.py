import json

import pytest

from qfilters.cli import main, parse_permutation


def run_cli(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_filters_text(capsys):
    code, out = run_cli(capsys, "filters", "--k", "3", "--n", "2")
    assert code == 0
    assert out.splitlines()[:2] == ["11110000", "00001111"]


def test_filters_verify(capsys):
    code, out = run_cli(capsys, "filters", "--k", "3", "--n", "2", "--verify")
    assert code == 0
    assert "F1=True F2=True F3=True" in out


def test_filters_k1(capsys):
    code, out = run_cli(capsys, "filters", "--k", "1", "--n", "2")
    assert code == 0
    assert out.splitlines() == ["10", "01"]


def test_filters_permuted(capsys):
    code, out = run_cli(
        capsys, "filters", "--k", "3", "--n", "2", "--permute", "1,2,3,4,5,6,7,0"
    )
    assert code == 0
    assert out.splitlines()[0] == "11100001"


def test_filters_cycle_permutation(capsys):
    # swapping the middle columns exchanges the two projector rows
    code, out = run_cli(capsys, "filters", "--k", "2", "--n", "2", "--permute", "(1 2)")
    assert code == 0
    assert out.splitlines()[0] == "1010"
    assert out.splitlines()[2] == "1100"


def test_filters_bad_permutation(capsys):
    with pytest.raises(SystemExit) as err:
        main(["filters", "--k", "2", "--n", "2", "--permute", "0,0,1,2"])
    assert err.value.code == 2


def test_deutsch_constant(capsys):
    code, out = run_cli(capsys, "deutsch", "00")
    assert code == 0
    assert "constant by state:  True" in out
    assert "constant by filter: True" in out


def test_deutsch_balanced(capsys):
    code, out = run_cli(capsys, "deutsch", "10")
    assert code == 0
    assert "constant by state:  False" in out


def test_deutsch_usage_error(capsys):
    with pytest.raises(SystemExit) as err:
        main(["deutsch", "0"])
    assert err.value.code == 2


def test_deutsch_json_state(capsys):
    code, out = run_cli(capsys, "--format", "json", "deutsch", "00")
    assert code == 0
    report = json.loads(out)
    assert report["status"] == "ok"
    amps = report["payload"]["final_state"]["amplitudes"]
    assert len(amps) == 4
    assert abs(abs(amps[3][0]) - 1.0) < 1e-9


def test_deutsch_sampling_mode(capsys):
    code, out = run_cli(capsys, "--format", "json", "--seed", "5", "deutsch", "01")
    assert code == 0
    report = json.loads(out)
    assert report["payload"]["sampled_eigenvalue"] == 1.0


def test_gendeutsch(capsys):
    code, out = run_cli(capsys, "gendeutsch", "--problem", "D1", "--i", "0", "--j", "1")
    assert code == 0
    assert "verdict        True" in out
    assert "classical      True" in out


def test_gendeutsch_json_agreement(capsys):
    for problem in ("D1", "D2", "D3", "D4"):
        code, out = run_cli(
            capsys, "--format", "json", "gendeutsch", "--problem", problem, "--i", "2", "--j", "3"
        )
        report = json.loads(out)
        assert code == 0 and report["payload"]["agree"]


def test_parity_single(capsys):
    code, out = run_cli(capsys, "parity", "--k", "2", "--function", "0001")
    assert code == 0
    assert "parity -, classical 4 queries, quantum 2 invocations" in out


def test_parity_sweep(capsys):
    code, out = run_cli(capsys, "--format", "json", "parity", "--k", "2")
    assert code == 0
    report = json.loads(out)
    assert report["payload"]["all_agree"]
    assert len(report["payload"]["results"]) == 16


def test_parity_hex_function(capsys):
    code, out = run_cli(capsys, "parity", "--k", "2", "--function", "0xf")
    assert code == 0
    assert "parity +" in out


def test_parity_bad_function(capsys):
    with pytest.raises(SystemExit) as err:
        main(["parity", "--k", "2", "--function", "01"])
    assert err.value.code == 2


def test_tables_clean(capsys):
    code, out = run_cli(capsys, "tables", "table6")
    assert code == 0
    assert out.splitlines()[-1] == "golden diff: clean"
    assert len([l for l in out.splitlines() if l.startswith("f")]) == 16


def test_tables_json(capsys):
    code, out = run_cli(capsys, "--format", "json", "tables", "eq1")
    report = json.loads(out)
    assert code == 0
    assert report["payload"]["golden_diff"] == []
    assert report["payload"]["lines"][0] == "11110000"


def test_verify_all(capsys):
    code, out = run_cli(capsys, "verify-all")
    assert code == 0
    assert "0 failures" in out
    assert out.count("WARNING") == 2


def test_verify_all_deterministic(capsys):
    _, first = run_cli(capsys, "--format", "json", "verify-all")
    _, second = run_cli(capsys, "--format", "json", "verify-all")
    assert first == second


def test_parse_permutation_forms():
    assert parse_permutation("1,2,3,0", 4) == [1, 2, 3, 0]
    assert parse_permutation("1 2 3 0", 4) == [1, 2, 3, 0]
    assert parse_permutation("(0 1)(2 3)", 4) == [1, 0, 3, 2]
    assert parse_permutation("(0 1 2)", 4) == [1, 2, 0, 3]
