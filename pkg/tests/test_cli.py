import json

import pytest

from PyPainleveTau.cli import CSV_HEADER, Run
from PyPainleveTau.config import CONFIG_ENV_VAR, SIGN_NU_ENV_VAR, LoadConfig


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch, tmp_path):
    monkeypatch.delenv(CONFIG_ENV_VAR, raising=False)
    monkeypatch.delenv(SIGN_NU_ENV_VAR, raising=False)
    monkeypatch.chdir(tmp_path)


def test_tau_identity(capsys):
    assert Run(["tau", "--method", "airy", "--s", "0", "--kappa", "0", "--quiet"]) == 0
    assert "value: 1.0" in capsys.readouterr().out


def test_tau_json_output_file(tmp_path):
    path = tmp_path / "tau.json"
    args = ["tau", "--method", "widom", "--s", "1", "--kappa", "0.5", "--json", "--quiet"]
    code = Run(args + ["--out", str(path)])
    assert code == 0
    data = json.loads(path.read_text(encoding="utf-8"))
    assert set(data) == {"value", "imag_residual", "method", "s", "kappa", "error_estimate"}
    assert data["method"] == "widom"
    assert 0.0 < data["value"] < 1.0


def test_scan_csv(tmp_path):
    path = tmp_path / "scan.csv"
    code = Run(
        [
            "scan", "--method", "airy", "--kappa", "0", "--s-min", "0", "--s-max", "1",
            "--step", "0.5", "--quiet", "--out", str(path),
        ]
    )
    assert code == 0
    lines = path.read_text(encoding="utf-8").splitlines()
    assert lines == [CSV_HEADER, "0,1,0,airy", "0.5,1,0,airy", "1,1,0,airy"]


def test_scan_airy_far_right(tmp_path):
    path = tmp_path / "far.csv"
    code = Run(
        [
            "scan", "--method", "airy", "--kappa", "0.5", "--s-min", "35", "--s-max", "45",
            "--step", "5", "--quiet", "--out", str(path),
        ]
    )
    assert code == 0
    assert len(path.read_text(encoding="utf-8").splitlines()) == 4


@pytest.mark.parametrize("kappa", ["2", "-1.5"])
def test_kappa_out_of_range_is_an_argument_error(kappa, capsys):
    assert Run(["tau", "--s", "0", "--kappa", kappa, "--quiet"]) == 2
    assert "kappa" in capsys.readouterr().err


def test_bad_scan_range_is_an_argument_error():
    assert Run(["scan", "--s-min", "1", "--s-max", "0", "--step", "0.1", "--quiet"]) == 2


def test_maya_json(capsys):
    assert Run(["maya", "--max-weight", "2", "--n-cut", "2", "--json", "--quiet"]) == 0
    records = json.loads(capsys.readouterr().out)
    assert len(records) == 5
    assert records[0] == {"particles": [], "holes": [], "young": []}
    assert {"particles": ["3/2"], "holes": ["-1/2"], "young": [2]} in records


def test_coeffs_json(capsys):
    code = Run(["coeffs", "--s", "1", "--kappa", "0.5", "--n-cut", "3", "--symbolic", "--json", "--quiet"])
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    assert data["source"] == "symbolic"
    assert len(data["alpha"]) == 3
    assert set(data["integrals"]) == {"0", "1", "2", "3", "4"}


def test_u_with_check(capsys):
    code = Run(["u", "--s", "1", "--kappa", "0.5", "--check", "--json", "--quiet"])
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    assert data["residual"] <= 1e-4
    assert data["u"] > 0.0


def test_selftest_filter():
    assert Run(["selftest", "--filter", "maya", "--quiet"]) == 0


def test_calibrate_writes_config(tmp_path, capsys):
    path = tmp_path / "calibrated.cfg"
    assert Run(["calibrate", "--config", str(path), "--json", "--quiet"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["recursion_step"] == "-1/4"
    cfg = LoadConfig(path)
    assert cfg.sigmaC == -1
    assert abs(cfg.scaleC - 2.0 ** (-2.0 / 3.0)) <= 1e-6


def test_missing_command_is_rejected():
    with pytest.raises(SystemExit):
        Run([])


def test_selftest_fails_with_flipped_phase(monkeypatch):
    monkeypatch.setenv(SIGN_NU_ENV_VAR, "-1")
    assert Run(["selftest", "--filter", "cross-determinant", "--quiet"]) == 1
