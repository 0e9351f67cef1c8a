import numpy as np
import pytest

import PyPainleveTau as pt
from PyPainleveTau.special_functions import AIRY_SCALE


def test_kappa_zero_is_exactly_one():
    result = pt.TauWidom(1.0, 0.0)
    assert result.value == 1.0
    assert result.errorEstimate == 0.0
    assert result.method == "widom"


def test_schur_and_block_forms_agree():
    schur = pt.TauWidom(1.0, 0.5, form="schur", errorEstimate=False).value
    block = pt.TauWidom(1.0, 0.5, form="block", errorEstimate=False).value
    assert abs(schur - block) <= 1e-12


def test_symmetrized_and_raw_kernels_agree():
    symmetric = pt.TauWidom(1.0, 0.5, symmetrized=True, errorEstimate=False).value
    raw = pt.TauWidom(1.0, 0.5, symmetrized=False, errorEstimate=False).value
    assert abs(symmetric - raw) <= 1e-10


@pytest.mark.parametrize("s, kappa", [(1.0, 0.5), (-1.0, 0.25), (0.0, 0.9)])
def test_matches_airy_determinant_on_scaled_axis(s, kappa):
    widom = pt.TauWidom(s, kappa, errorEstimate=False).value
    airy = pt.TauAiry(AIRY_SCALE * s, kappa, errorEstimate=False).value
    assert abs(widom - airy) <= 1e-8


def test_value_is_real():
    result = pt.TauWidom(0.5, 0.5)
    assert result.imagResidual <= 1e-12
    assert result.errorEstimate <= 1e-10


def test_kernel_matrices_shapes():
    cfg = pt.RunConfig(quadOrder=40)
    a, b = pt.BuildKernelMatrices(1.0, 0.5, cfg)
    assert a.entries.shape == (40, 40)
    assert b.entries.shape == (40, 40)
    assert np.all(a.rowContour.nodes.real > 0)
    assert np.all(b.rowContour.nodes.real < 0)


def test_invalid_form():
    with pytest.raises(pt.ArgumentError):
        pt.TauWidom(1.0, 0.5, form="lu")


@pytest.mark.parametrize("which", ["a12", "b21"])
def test_hilbert_schmidt_norm_scales_with_kappa_squared(which):
    unit = pt.HSNormSq(which, 1.0, kappa=1.0)
    half = pt.HSNormSq(which, 1.0, kappa=0.5)
    assert abs(half - 0.25 * unit) <= 1e-12 * unit


@pytest.mark.parametrize("which", ["a12", "b21"])
def test_hilbert_schmidt_norm_is_stable_under_refinement(which):
    coarse = pt.HSNormSq(which, 1.0, kappa=0.5, m=200)
    fine = pt.HSNormSq(which, 1.0, kappa=0.5, m=400)
    assert np.isfinite(fine)
    assert abs(fine - coarse) <= 1e-8 * fine


@pytest.mark.parametrize("which", ["a12", "b21"])
def test_raw_hilbert_schmidt_norm_is_finite(which):
    value = pt.HSNormSq(which, 1.0, kappa=0.5, form="raw")
    assert np.isfinite(value)
    assert value > 0.0


def test_hilbert_schmidt_argument_checks():
    with pytest.raises(pt.ArgumentError):
        pt.HSNormSq("a21", 1.0)
    with pytest.raises(pt.ArgumentError):
        pt.HSNormSq("a12", 1.0, form="weighted")


def test_contour_collapse():
    assert pt.VerifyCollapse(1.0, 0.5) <= 1e-8


def test_theta_large_z_behavior():
    # z·θ₂(z) → −κ ∫ e^{ν} dw/2πi = −κ A(s)
    s = 1.0
    z = 1e7
    _, theta2 = pt.ThetaOffDiag(z, s)
    assert abs(z * theta2 + 0.5 * pt.SeedA(s)) <= 1e-6


def test_theta_vectorized():
    points = np.array([2.0 + 1.0j, -3.0 + 0.5j])
    theta1, theta2 = pt.ThetaOffDiag(points, 1.0)
    assert theta1.shape == (2,)
    assert theta2.shape == (2,)
    scalar1, scalar2 = pt.ThetaOffDiag(complex(points[0]), 1.0)
    assert scalar1 == pytest.approx(theta1[0], abs=1e-15)
    assert scalar2 == pytest.approx(theta2[0], abs=1e-15)


@pytest.mark.parametrize("z", [-0.5 + 1.0j, 0.5 - 2.0j])
def test_theta_on_contour_raises(z):
    with pytest.raises(pt.ContourCollisionError):
        pt.ThetaOffDiag(z, 1.0)


def test_value_does_not_depend_on_contour_shift():
    cfg = pt.RunConfig()
    near = pt.TauWidom(1.0, 0.5, cfg.Replace(eps=0.3), errorEstimate=False).value
    far = pt.TauWidom(1.0, 0.5, cfg.Replace(eps=0.7), errorEstimate=False).value
    assert abs(near - far) <= 1e-8


def test_theta_between_contours_does_not_depend_on_shift():
    cfg = pt.RunConfig(kappa=0.5)
    _, near = pt.ThetaOffDiag(0.1, 1.0, cfg.Replace(eps=0.3))
    _, far = pt.ThetaOffDiag(0.1, 1.0, cfg.Replace(eps=0.7))
    assert abs(near - far) <= 1e-10


def test_theta_decays_like_inverse_z():
    _, atHundred = pt.ThetaOffDiag(100.0, 1.0)
    _, atTwoHundred = pt.ThetaOffDiag(200.0, 1.0)
    assert abs(atTwoHundred / atHundred - 0.5) <= 0.025
