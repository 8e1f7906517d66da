"""Command-line surface: dispatch, JSON output, exit codes, determinism."""

import json

import pytest

from spintheta import PeriodMatrix
from spintheta.cli import Report, main
from spintheta.verify import CheckResult


@pytest.fixture
def period_g1(tmp_path):
    path = tmp_path / "period1.json"
    path.write_text(json.dumps(PeriodMatrix([[1j]]).to_json()))
    return str(path)


@pytest.fixture
def period_g2(tmp_path):
    path = tmp_path / "period2.json"
    path.write_text(json.dumps(PeriodMatrix([[1j, 0], [0, 2j]]).to_json()))
    return str(path)


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_picard_szego_hodge_json(capsys):
    code, out = run_cli(capsys, "--format", "json", "picard", "szego-hodge", "--g", "3")
    assert code == 0
    payload = json.loads(out)
    assert payload["results"]["lambda"] == "103/2"
    assert payload["results"]["alpha"] == ["93/8", "0"]


def test_picard_slope_text(capsys):
    code, out = run_cli(capsys, "picard", "slope", "--g", "3")
    assert code == 0
    assert "412/93" in out and "PASS" in out


def test_picard_ledger(capsys):
    code, out = run_cli(capsys, "--format", "json", "picard", "ledger", "--g", "4")
    assert code == 0
    payload = json.loads(out)
    assert payload["results"]["weight"] == "283/4"
    names = [e["name"] for e in payload["results"]["entries"]]
    assert "three_half_forms" in names and "szego_hodge_weight" in names
    assert payload["passed"]


def test_picard_pullback(capsys):
    code, out = run_cli(capsys, "--format", "json", "picard", "pullback-delta0", "--g", "3")
    assert code == 0
    payload = json.loads(out)
    assert payload["results"]["alpha"] == ["-5", "-10"]
    assert {"name": "theta_null", "coeff": "24"} in payload["results"]["symbolic"]


def test_degeneration_report(capsys):
    code, out = run_cli(capsys, "degeneration", "--divisor", "thetanull", "--g", "3")
    assert code == 0
    assert "p_a" in out and "19" in out and "PASS" in out


def test_degeneration_with_index(capsys):
    code, out = run_cli(capsys, "--format", "json", "degeneration", "--divisor", "Ai", "--g", "4", "--i", "2")
    payload = json.loads(out)
    assert code == 0
    assert payload["results"]["p_a"] == 37


def test_degeneration_missing_index_fails(capsys):
    code = main(["degeneration", "--divisor", "Ai", "--g", "4"])
    assert code == 2


def test_missing_period_file_fails(capsys):
    code = main(["theta", "eval", "--period", "/nonexistent.json", "--char", "0;0", "--point", "0,0"])
    assert code == 2


def test_malformed_point_fails(capsys, period_g1):
    code = main(["theta", "eval", "--period", period_g1, "--char", "0;0", "--point", "0.5"])
    assert code == 2


def test_malformed_characteristic_fails(capsys, period_g1):
    code = main(["theta", "eval", "--period", period_g1, "--char", "0,0", "--point", "0,0"])
    assert code == 2


def test_degeneration_bad_genus_fails(capsys):
    code = main(["degeneration", "--divisor", "thetanull", "--g", "2"])
    assert code == 2


def test_szego_eval_json(capsys, period_g1):
    code, out = run_cli(
        capsys, "--format", "json", "szego", "eval",
        "--period", period_g1, "--char", "0;0", "--point", "0,0",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["results"]["value"] == [1.0, 0.0]
    assert payload["results"]["on_locus"] is False


def test_szego_eval_on_locus(capsys, period_g1):
    code, out = run_cli(
        capsys, "--format", "json", "szego", "eval",
        "--period", period_g1, "--char", "0;0", "--point", "0.5,0.5",
    )
    payload = json.loads(out)
    assert code == 0
    assert payload["results"]["on_locus"] is True


def test_szego_theta_null_is_an_error(capsys, period_g2):
    code = main(["szego", "eval", "--period", period_g2, "--char", "1,1;1,1", "--point", "0,0;0,0"])
    assert code == 2


def test_theta_eval(capsys, period_g1):
    code, out = run_cli(
        capsys, "--format", "json", "theta", "eval",
        "--period", period_g1, "--char", "0;0", "--point", "0,0",
    )
    payload = json.loads(out)
    assert code == 0
    assert payload["results"]["value"][0] == pytest.approx(1.0864348112133081)
    assert payload["results"]["parity"] == "even"


def test_theta_eval_derivative(capsys, period_g1):
    code, out = run_cli(
        capsys, "--format", "json", "theta", "eval",
        "--period", period_g1, "--char", "0;0", "--point", "0,0", "--deriv", "0,0",
    )
    payload = json.loads(out)
    assert code == 0
    assert payload["results"]["value"][0] == pytest.approx(-3.413135621511943)


def test_jet_and_quartic_commands(capsys, period_g2):
    code, out = run_cli(capsys, "--format", "json", "jet", "--period", period_g2, "--char", "1,1;1,1")
    assert code == 0
    payload = json.loads(out)
    assert abs(payload["results"]["theta0"][0]) < 1e-12

    code, out = run_cli(
        capsys, "--format", "json", "quartic", "--period", period_g2, "--char", "1,1;1,1"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["results"]["g"] == 2
    assert len(payload["results"]["coeffs"]) == 5  # C(2+3, 4) canonical entries


def test_verify_all_quick(capsys):
    code, out = run_cli(capsys, "verify-all", "--quick")
    assert code == 0
    assert out.count("[PASS]") == 14
    assert "ALL CHECKS PASS" in out


def test_json_output_is_deterministic(capsys):
    _, first = run_cli(capsys, "--format", "json", "picard", "szego-hodge", "--g", "5")
    _, second = run_cli(capsys, "--format", "json", "picard", "szego-hodge", "--g", "5")
    assert first == second


def test_verify_all_json_is_deterministic(capsys):
    _, first = run_cli(capsys, "--format", "json", "verify-all", "--quick")
    _, second = run_cli(capsys, "--format", "json", "verify-all", "--quick")
    assert first == second


def test_exit_code_reflects_failed_checks(capsys, monkeypatch):
    import spintheta.cli as cli

    def fake_run(cfg):
        report = Report("picard slope", cfg.seed)
        report.checks.append(CheckResult("negative-control", False, "forced failure"))
        return report

    monkeypatch.setattr(cli, "run", fake_run)
    assert cli.main(["picard", "slope", "--g", "3"]) == 1


def test_report_json_roundtrip():
    report = Report("demo", 7, {"x": 1})
    report.checks.append(CheckResult("a", True, "fine"))
    again = Report.from_json(report.to_json())
    assert again.command == report.command
    assert again.seed == report.seed
    assert again.results == report.results
    assert again.checks == report.checks
    assert again.passed


def test_tolerance_override_flags(capsys, period_g1):
    code, out = run_cli(
        capsys, "--eps-zero", "0.5", "--format", "json", "szego", "eval",
        "--period", period_g1, "--char", "0;0", "--point", "0.45,0.45",
    )
    payload = json.loads(out)
    assert code == 0
    # |sz| is about 0.35 there: below the widened threshold, above the default
    assert payload["results"]["on_locus"] is True
