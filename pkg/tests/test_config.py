from fractions import Fraction

import pytest

import PyPainleveTau as pt
from PyPainleveTau.config import CONFIG_ENV_VAR, SIGN_NU_ENV_VAR, DEFAULT_SCALE_C


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch, tmp_path):
    monkeypatch.delenv(CONFIG_ENV_VAR, raising=False)
    monkeypatch.delenv(SIGN_NU_ENV_VAR, raising=False)
    monkeypatch.chdir(tmp_path)


def test_defaults_validate():
    cfg = pt.RunConfig()
    cfg.Validate()
    assert cfg.scaleC == DEFAULT_SCALE_C
    assert cfg.Convention().recursionStep == Fraction(-1, 4)
    assert cfg.Convention().sigmaC == -1


def test_save_load_round_trip_is_bit_exact(tmp_path):
    cfg = pt.RunConfig(s=0.1 + 0.2, kappa=1 / 3, scaleC=0.6299605249474366, fdStep=1e-2 / 3)
    path = pt.SaveConfig(cfg, tmp_path / "run.cfg")
    loaded = pt.LoadConfig(path)
    assert loaded == cfg
    assert loaded.s == 0.1 + 0.2
    assert loaded.kappa == 1 / 3


def test_format_uses_snake_case_keys():
    text = pt.FormatConfigText(pt.RunConfig())
    assert "quad_order=200\n" in text
    assert "half_line_order=200\n" in text
    assert "recursion_step=-1/4\n" in text


def test_parse_ignores_comments_and_blank_lines():
    cfg = pt.ParseConfigText("# comment\n\nkappa = 0.25\nmethod=widom\n")
    assert cfg.kappa == 0.25
    assert cfg.method == "widom"


def test_parse_rejects_unknown_key():
    with pytest.raises(pt.ArgumentError):
        pt.ParseConfigText("bogus=1\n")


def test_parse_rejects_malformed_line():
    with pytest.raises(pt.ArgumentError):
        pt.ParseConfigText("kappa 0.5\n")


def test_parse_rejects_malformed_value():
    with pytest.raises(pt.ArgumentError):
        pt.ParseConfigText("quad_order=many\n")


@pytest.mark.parametrize(
    "changes",
    [
        {"kappa": 1.5},
        {"method": "fourier"},
        {"eps": 1.0},
        {"eps": -0.5},
        {"nCut": 0},
        {"fdStep": 1.0},
        {"signNu": 2},
        {"sigmaC": 0},
        {"recursionStep": "0"},
        {"recursionStep": "quarter"},
        {"operatorOrder": "sideways"},
        {"odeAnchor": 2.0},
    ],
)
def test_replace_validates(changes):
    with pytest.raises(pt.ArgumentError):
        pt.RunConfig().Replace(**changes)


def test_missing_file_gives_defaults(tmp_path):
    assert pt.LoadConfig(tmp_path / "absent.cfg") == pt.RunConfig()


def test_default_path_from_environment(monkeypatch, tmp_path):
    path = tmp_path / "env.cfg"
    pt.SaveConfig(pt.RunConfig(kappa=0.75), path)
    monkeypatch.setenv(CONFIG_ENV_VAR, str(path))
    assert pt.LoadConfig().kappa == 0.75


def test_sign_override_from_environment(monkeypatch):
    monkeypatch.setenv(SIGN_NU_ENV_VAR, "-1")
    assert pt.LoadConfig().signNu == -1
    assert pt.LoadConfig(applyEnvironment=False).signNu == 1


def test_invalid_sign_override(monkeypatch):
    monkeypatch.setenv(SIGN_NU_ENV_VAR, "minus")
    with pytest.raises(pt.ArgumentError):
        pt.LoadConfig()


def test_load_config_type_check():
    with pytest.raises(TypeError):
        pt.LoadConfig(42)


def test_snapshot_is_flat_snake_case():
    snapshot = pt.RunConfig().Snapshot()
    assert snapshot["n_cut"] == 8
    assert snapshot["output_format"] == "text"
    assert all(key == key.lower() for key in snapshot)
