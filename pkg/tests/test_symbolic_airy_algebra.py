import math
from fractions import Fraction

import pytest

import PyPainleveTau as pt
from PyPainleveTau.symbolic_airy_algebra import (
    ChiIntegrals,
    IntegralK,
    MakePoly,
    PolyCoefficients,
)

SF = pt.SymbolicFunction


def test_make_poly_round_trip():
    coefficients = [Fraction(1), Fraction(0), Fraction(-3, 7)]
    assert PolyCoefficients(MakePoly(coefficients)) == coefficients
    assert PolyCoefficients(MakePoly([0])) == []


def test_derivative_of_a():
    assert pt.Differentiate(SF.A()) == SF.APrime()


def test_derivative_of_a_prime_uses_airy_equation():
    coefficients = pt.Differentiate(SF.APrime()).Coefficients()
    assert coefficients == {"p": [Fraction(0), Fraction(1, 4)], "q": [], "r": []}


@pytest.mark.parametrize("sigma", [1, -1])
def test_derivative_of_c_uses_closure_sign(sigma):
    coefficients = pt.Differentiate(SF.C(sigma)).Coefficients()
    assert coefficients == {"p": [Fraction(sigma)], "q": [], "r": [Fraction(-sigma)]}


def test_derivative_of_polynomial_multiple():
    f = SF.A().MultiplyPoly(MakePoly([0, 0, 1]))
    coefficients = pt.Differentiate(f).Coefficients()
    assert coefficients == {"p": [Fraction(0), Fraction(2)], "q": [Fraction(0), Fraction(0), Fraction(1)], "r": []}


def test_differentiate_type_check():
    with pytest.raises(TypeError):
        pt.Differentiate("A")


def test_mixed_closure_signs_rejected():
    with pytest.raises(pt.ArgumentError):
        SF.A(1) + SF.A(-1)


def test_d_tilde_annihilates_a():
    assert pt.ApplyDTilde(SF.A()).IsZero()


def test_d_tilde_of_a_prime():
    coefficients = pt.ApplyDTilde(SF.APrime()).Coefficients()
    assert coefficients == {"p": [Fraction(2), Fraction(1, 2)], "q": [Fraction(-4)], "r": []}


def test_d_tilde_order_matters():
    airyFirst = pt.ApplyDTilde(SF.C(), "airy_first", -1)
    shiftFirst = pt.ApplyDTilde(SF.C(), "shift_first", -1)
    assert airyFirst != shiftFirst


def test_d_tilde_invalid_order():
    with pytest.raises(pt.ArgumentError):
        pt.ApplyDTilde(SF.A(), "inside_out")


@pytest.mark.parametrize("s", [-1.0, 0.0, 1.0, 2.0])
def test_seed_matches_quadrature(s):
    seed = pt.EvalSymFn(pt.SeedCoefficient(-1), s)
    integral = ChiIntegrals(0, s)[0]
    assert abs(seed - integral) <= 1e-9 * max(1.0, abs(integral))


def test_seed_variants():
    assert pt.SeedCoefficient(-1, "unit") != pt.SeedCoefficient(-1, "airy")
    with pytest.raises(pt.ArgumentError):
        pt.SeedCoefficient(-1, "bessel")
    with pytest.raises(pt.ArgumentError):
        pt.SeedCoefficient(0)


@pytest.mark.parametrize("s", [0.0, 1.0])
@pytest.mark.parametrize("m, n", [(0, 0), (1, 0), (0, 1), (2, 1), (1, 3), (3, 3), (0, 6)])
def test_closed_form_matches_quadrature(s, m, n):
    kappa = 0.5
    symbolic = kappa * pt.EvalSymFn(pt.CoeffAlpha(m, n).sym, s)
    oracle = pt.AlphaQuadratureOracle(m, n, s, kappa=kappa)
    assert abs(symbolic - oracle) <= 1e-8 * abs(oracle)


@pytest.mark.parametrize("m, n", [(0, 0), (1, 2), (3, 0)])
def test_recursion_in_m(m, n):
    stepped = pt.RecurseInM(pt.CoeffAlpha(m, n))
    direct = pt.CoeffAlpha(m + 1, n)
    assert (stepped.m, stepped.n) == (m + 1, n)
    assert stepped.sym.Coefficients() == direct.sym.Coefficients()


@pytest.mark.parametrize("m, n", [(0, 0), (2, 1), (0, 3)])
def test_recursion_in_n(m, n):
    stepped = pt.RecurseInN(pt.CoeffAlpha(m, n))
    direct = pt.CoeffAlpha(m, n + 1)
    assert (stepped.m, stepped.n) == (m, n + 1)
    assert stepped.sym.Coefficients() == direct.sym.Coefficients()


@pytest.mark.parametrize("m, n", [(1, 1), (2, 3), (4, 1)])
def test_index_shift_relation(m, n):
    # n·α_{m−1}ⁿ = m·α_mⁿ⁻¹
    left = pt.CoeffAlpha(m - 1, n).sym.Scale(n)
    right = pt.CoeffAlpha(m, n - 1).sym.Scale(m)
    assert left.Coefficients() == right.Coefficients()


@pytest.mark.parametrize("m, n", [(0, 2), (3, 1)])
def test_beta_equals_alpha(m, n):
    assert pt.CoeffBeta(n, m).sym.Coefficients() == pt.CoeffAlpha(m, n).sym.Coefficients()


@pytest.mark.parametrize("m, n", [(2, 1), (3, 0)])
def test_printed_prefactor_differs_by_m_factorial(m, n):
    printed = pt.CoeffAlpha(m, n, prefactor="printed").sym.Scale(math.factorial(m))
    derived = pt.CoeffAlpha(m, n).sym
    assert printed.Coefficients() == derived.Coefficients()


def test_integral_k_matches_alpha_at_row_zero():
    assert IntegralK(3).Coefficients() == pt.CoeffAlpha(0, 3).sym.Scale(6).Coefficients()


def test_depth_guard():
    with pytest.raises(pt.DepthGuardError):
        pt.CoeffAlpha(30, 11)
    with pytest.raises(pt.DepthGuardError):
        pt.AlphaQuadratureOracle(7, 6, 1.0)


def test_index_checks():
    with pytest.raises(pt.ArgumentError):
        pt.CoeffAlpha(-1, 0)
    with pytest.raises(TypeError):
        pt.CoeffAlpha(1.0, 0)
    with pytest.raises(pt.ArgumentError):
        pt.CoeffAlpha(0, 0, prefactor="guessed")


def test_eval_zero():
    assert pt.EvalSymFn(SF.Zero(), 1.0) == 0.0


def test_recursion_step_is_determined_by_quadrature():
    step, order, residual = pt.DetermineRecursionStep()
    assert step == Fraction(-1, 4)
    assert order == "shift_first"
    assert residual <= 1e-8
