import math

import numpy as np
import pytest

import PyPainleveTau as pt
from PyPainleveTau.special_functions import AIRY_SCALE, AiryAiArray, PhaseNu


def test_airy_at_zero():
    value = pt.AiryAi(0.0)
    assert abs(value.ai - 0.3550280538878172) <= 1e-15
    assert abs(value.aiPrime + 0.2588194037928068) <= 1e-15


@pytest.mark.parametrize("x", np.linspace(-10.0, 10.0, 41).tolist())
def test_airy_matches_extended_precision_oracle(x):
    value = pt.AiryAi(x)
    oracle = pt.AiryOracle(x)
    assert abs(value.ai - oracle.ai) <= 1e-12
    assert abs(value.aiPrime - oracle.aiPrime) <= 1e-12


@pytest.mark.parametrize("x", [-20.0, 12.0, 30.0])
def test_oracle_asymptotic_branch(x):
    value = pt.AiryAi(x)
    oracle = pt.AiryOracle(x)
    if x < 0:
        assert abs(value.ai - oracle.ai) <= 1e-11
    else:
        assert abs(value.ai - oracle.ai) <= 1e-10 * abs(oracle.ai)


def test_series_backend_routes_to_oracle():
    assert pt.AiryAi(1.5, backend="series") == pt.AiryOracle(1.5)


@pytest.mark.parametrize("x", [50.5, -60.0, math.inf, math.nan])
def test_airy_domain(x):
    with pytest.raises(pt.DomainError):
        pt.AiryAi(x)


def test_airy_type_check():
    with pytest.raises(TypeError):
        pt.AiryAi("1.0")


def test_airy_backend_check():
    with pytest.raises(pt.ArgumentError):
        pt.AiryAi(1.0, backend="tables")


def test_airy_array_matches_scalar():
    points = np.array([-3.0, 0.0, 2.5])
    ai, aiPrime = AiryAiArray(points)
    for x, a, b in zip(points, ai, aiPrime):
        value = pt.AiryAi(float(x))
        assert a == value.ai
        assert b == value.aiPrime


def test_phase():
    assert PhaseNu(1.0, 0.0) == -4.0 / 3.0
    assert PhaseNu(1.0, 2.0) == 2.0 - 4.0 / 3.0
    assert PhaseNu(1.0, 2.0, signNu=-1) == -2.0 - 4.0 / 3.0


@pytest.mark.parametrize("s", np.linspace(-6.0, 10.0, 17).tolist())
def test_seed_a_is_scaled_airy(s):
    assert abs(pt.SeedA(s) - AIRY_SCALE * pt.AiryAi(AIRY_SCALE * s).ai) <= 1e-10


@pytest.mark.parametrize("s", [-1.0, 0.0, 2.0])
def test_seed_a_does_not_depend_on_contour_shift(s):
    cfg = pt.RunConfig()
    assert abs(pt.SeedA(s, cfg.Replace(eps=0.3)) - pt.SeedA(s, cfg.Replace(eps=0.7))) <= 1e-10


@pytest.mark.parametrize("s", [-2.0, 0.0, 1.5])
def test_seed_a_prime_is_scaled_airy_derivative(s):
    expected = AIRY_SCALE**2 * pt.AiryAi(AIRY_SCALE * s).aiPrime
    assert abs(pt.SeedAPrime(s) - expected) <= 1e-10


@pytest.mark.parametrize("s", [-3.0, 0.0, 2.0])
def test_seed_a_satisfies_airy_equation(s):
    assert abs(4.0 * pt.SeedASecond(s) - s * pt.SeedA(s)) <= 1e-10


def test_closure_sign_of_literal_seed():
    sign, residual = pt.DetermineClosureSign(sigma=1)
    assert sign == 1
    assert residual <= 1e-6


def test_closure_sign_of_second_family():
    sign, residual = pt.DetermineClosureSign(sigma=-1)
    assert sign == -1
    assert residual <= 1e-6


def test_seed_c_families_differ():
    assert abs(pt.SeedC(0.5, sigma=1) - pt.SeedC(0.5, sigma=-1)) > 1e-3


def test_seed_c_sigma_check():
    with pytest.raises(pt.ArgumentError):
        pt.SeedC(0.0, sigma=0)


def test_seed_domain():
    with pytest.raises(pt.DomainError):
        pt.SeedA(51.0)


def test_seed_with_flipped_phase_is_not_airy():
    cfg = pt.RunConfig(signNu=-1)
    assert abs(pt.SeedA(2.0, cfg) - AIRY_SCALE * pt.AiryAi(AIRY_SCALE * 2.0).ai) > 1e-3
