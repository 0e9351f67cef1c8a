from fractions import Fraction

import pytest

import PyPainleveTau as pt
from PyPainleveTau.config import DEFAULT_SCALE_C


def test_scale_is_two_to_minus_two_thirds():
    scale, residual = pt.CalibrateScale()
    assert abs(scale - 2.0 ** (-2.0 / 3.0)) <= 1e-6
    assert residual <= 1e-8


def test_scale_with_zero_kappa_uses_probe_amplitude():
    scale, _ = pt.CalibrateScale(pt.RunConfig(kappa=0.0), probeS=(-1.0, 1.0))
    assert abs(scale - 2.0 ** (-2.0 / 3.0)) <= 1e-6


def test_wrong_phase_sign_fails_calibration():
    with pytest.raises(pt.CalibrationError):
        pt.CalibrateScale(pt.RunConfig(signNu=-1), probeS=(-1.0, 1.0))


def test_calibration_reproduces_defaults():
    report = pt.CalibrateConventions(quiet=True)
    cfg = report.config
    assert report.closureSign == 1
    assert cfg.sigmaC == -1
    assert cfg.Convention().recursionStep == Fraction(-1, 4)
    assert cfg.operatorOrder == "shift_first"
    assert abs(cfg.scaleC - DEFAULT_SCALE_C) <= 1e-6
    assert report.familyResiduals[-1] < report.familyResiduals[1]
    assert report.recursionResidual <= 1e-8
