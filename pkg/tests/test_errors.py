import pytest

import PyPainleveTau as pt


@pytest.mark.parametrize(
    "errorClass, exitCode",
    [
        (pt.ArgumentError, 2),
        (pt.DomainError, 2),
        (pt.ContourCollisionError, 2),
        (pt.DepthGuardError, 2),
        (pt.NumericalError, 3),
        (pt.ConvergenceError, 3),
        (pt.FactorizationError, 3),
        (pt.PoleEncounteredError, 3),
        (pt.CalibrationError, 3),
        (pt.NonPositiveTauError, 3),
    ],
)
def test_exit_codes(errorClass, exitCode):
    error = errorClass("something failed")
    assert error.exitCode == exitCode
    assert isinstance(error, pt.PainleveTauError)


def test_message_and_panel():
    error = pt.DomainError("Airy argument out of range", {"x": 60.0})
    assert str(error) == "Airy argument out of range"
    assert "Airy argument out of range" in error.panel
    assert "60.0" in error.panel


def test_argument_errors_are_value_errors():
    with pytest.raises(ValueError):
        raise pt.ContourCollisionError("on the contour")


def test_numerical_errors_are_arithmetic_errors():
    with pytest.raises(ArithmeticError):
        raise pt.FactorizationError("singular")
