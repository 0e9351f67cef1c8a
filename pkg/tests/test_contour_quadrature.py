import math

import numpy as np
import pytest

import PyPainleveTau as pt
from PyPainleveTau.contour_quadrature import CheckOffContour, ContourHalfLength, OnContour


def test_gauss_legendre_two_nodes():
    rule = pt.GaussLegendre(2)
    assert np.allclose(rule.nodes, [-1 / math.sqrt(3), 1 / math.sqrt(3)], atol=1e-15)
    assert np.allclose(rule.weights, [1.0, 1.0], atol=1e-15)


@pytest.mark.parametrize("m", [1, 5, 40, 200, 1000])
def test_gauss_legendre_weights_sum_to_two(m):
    rule = pt.GaussLegendre(m)
    assert abs(rule.weights.sum() - 2.0) <= 1e-13
    assert np.all(np.diff(rule.nodes) > 0)
    assert np.allclose(rule.nodes, -rule.nodes[::-1], atol=0.0)


@pytest.mark.parametrize("m", [3, 10, 50])
def test_gauss_legendre_polynomial_exactness(m):
    rule = pt.GaussLegendre(m)
    degree = 2 * m - 2
    exact = 2.0 / (degree + 1)
    assert abs(rule.weights @ rule.nodes**degree - exact) <= 1e-13


def test_gauss_legendre_is_read_only():
    rule = pt.GaussLegendre(8)
    with pytest.raises(ValueError):
        rule.nodes[0] = 0.0


@pytest.mark.parametrize("m", [0, 2001])
def test_gauss_legendre_order_guard(m):
    with pytest.raises(pt.ArgumentError):
        pt.GaussLegendre(m)


def test_gauss_legendre_type_check():
    with pytest.raises(TypeError):
        pt.GaussLegendre(2.5)


def test_vertical_contour_geometry():
    contour = pt.VerticalContour("left", 0.5, 1.0, 64)
    assert np.allclose(contour.nodes.real, -0.5)
    assert np.all(np.diff(contour.nodes.imag) > 0)
    assert contour.halfLength == ContourHalfLength(0.5, 1.0, 1e-18)
    envelope = math.exp((4 / 3) * 0.5**3 + 0.5 - 4 * 0.5 * contour.halfLength**2)
    assert envelope <= 1.0000001e-18


def test_right_contour_is_mirrored():
    left = pt.VerticalContour("left", 0.5, 0.0, 16)
    right = pt.VerticalContour("right", 0.5, 0.0, 16)
    assert np.allclose(right.nodes, -left.nodes.conj())


@pytest.mark.parametrize("eps", [1.0, 0.0, -0.25])
def test_contour_collision(eps):
    with pytest.raises(pt.ContourCollisionError):
        pt.VerticalContour("left", eps, 0.0, 16)


def test_contour_side_guard():
    with pytest.raises(pt.ArgumentError):
        pt.VerticalContour("up", 0.5, 0.0, 16)


def test_contour_integral_of_gaussian_envelope():
    # ∫ e^{ν} over Re w = −ε equals 2^{-2/3} Ai(0) at s = 0
    contour = pt.VerticalContour("left", 0.5, 0.0, 200)
    value = pt.ContourIntegral(lambda w: np.exp(-(4 / 3) * w**3), contour)
    assert abs(value.real - 2 ** (-2 / 3) * pt.AiryAi(0.0).ai) <= 1e-12
    assert abs(value.imag) <= 1e-12


def test_imaginary_axis_grid_cauchy_density():
    grid = pt.ImaginaryAxisGrid(50)
    value = pt.ContourIntegral(lambda w: 1.0 / (1.0 - w**2), grid)
    assert abs(value - 0.5) <= 1e-13


def test_contour_integral_rejects_non_finite():
    contour = pt.VerticalContour("left", 0.5, 0.0, 8)
    with pytest.raises(pt.NumericalError):
        pt.ContourIntegral(np.full(8, np.nan), contour)


def test_contour_integral_length_check():
    contour = pt.VerticalContour("left", 0.5, 0.0, 8)
    with pytest.raises(pt.ArgumentError):
        pt.ContourIntegral(np.ones(7), contour)


def test_half_line_grid_single_node():
    grid = pt.BuildHalfLineGrid(0.0, 2.0, 1)
    assert grid.nodes.tolist() == [1.0]
    assert grid.weights.tolist() == [2.0]


def test_half_line_grid_integrates_exponential():
    grid = pt.BuildHalfLineGrid(-1.0, 16.0, 60)
    value = grid.weights @ np.exp(-grid.nodes)
    assert abs(value - (math.e - math.exp(-15.0))) <= 1e-12


def test_off_contour_check():
    contour = pt.VerticalContour("right", 0.5, 0.0, 8)
    assert OnContour(0.5 + 1.0j, contour)
    assert not OnContour(0.25 + 1.0j, contour)
    with pytest.raises(pt.ContourCollisionError):
        CheckOffContour(np.array([0.0, 0.5 - 2.0j]), contour)
