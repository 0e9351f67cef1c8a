import pytest

import PyPainleveTau as pt
from PyPainleveTau.pipelines import ScanGrid


def test_scan_grid_includes_end_point():
    assert ScanGrid(-1.0, 1.0, 0.5).tolist() == [-1.0, -0.5, 0.0, 0.5, 1.0]


def test_scan_grid_stops_before_overshoot():
    assert len(ScanGrid(0.0, 1.0, 0.3)) == 4


@pytest.mark.parametrize("sMin, sMax, step", [(1.0, 0.0, 0.1), (0.0, 1.0, 0.0), (0.0, 1.0, -0.5)])
def test_scan_grid_guards(sMin, sMax, step):
    with pytest.raises(pt.ArgumentError):
        ScanGrid(sMin, sMax, step)


@pytest.mark.parametrize("method", ["airy", "widom", "minor"])
def test_evaluate_tau_dispatches(method):
    result = pt.EvaluateTau(method, 1.0, 0.25, errorEstimate=False)
    assert result.method == method
    assert 0.0 < result.value < 1.0


def test_evaluate_tau_invalid_method():
    with pytest.raises(pt.ArgumentError):
        pt.EvaluateTau("fourier", 1.0, 0.5)


def test_scan_keeps_input_order():
    cfg = pt.RunConfig(method="airy", kappa=0.5)
    points = [1.0, -1.0, 0.0, 2.0]
    results = pt.ScanTau(points, cfg, workers=3, quiet=True)
    assert [r.s for r in results] == points
    for s, result in zip(points, results):
        assert result.value == pt.EvaluateTau("airy", s, 0.5, cfg).value


def test_scan_with_zero_kappa():
    results = pt.ScanTau(ScanGrid(0.0, 1.0, 0.5), pt.RunConfig(kappa=0.0), quiet=True)
    assert [r.value for r in results] == [1.0, 1.0, 1.0]
