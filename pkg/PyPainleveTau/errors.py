# PyPainleveTau/errors.py

"""
Errors
======

Exception hierarchy shared by every pipeline. Each error keeps a plain message for
``str(e)`` and a rich-rendered panel that the command-line interface prints.

Argument errors (bad inputs, domain violations) map to exit code 2, numerical
failures (non-convergence, singular factorizations, ODE blow-up) to exit code 3.

Key Classes
-----------
- ``PainleveTauError`` : Base class carrying the rendered panel.
- ``ArgumentError`` : Precondition or domain violation.
- ``DomainError`` : Argument outside a supported range.
- ``ContourCollisionError`` : Evaluation point or pole on an integration contour.
- ``DepthGuardError`` : Symbolic recursion depth beyond the guard.
- ``NumericalError`` : Numerical failure.
- ``ConvergenceError`` : Iteration or tail bound not met.
- ``FactorizationError`` : Singular pivoted factorization.
- ``PoleEncounteredError`` : Painlevé II solution blew up.
- ``CalibrationError`` : No calibration candidate reached the residual threshold.
- ``NonPositiveTauError`` : log τ requested where τ ≤ 0.
"""

from rich.console import Console
from rich.panel import Panel
from rich.text import Text


class PainleveTauError(Exception):
    """
    Base exception for PyPainleveTau.

    Parameters
    ----------
    message : str
        Human readable description.
    details : dict[str, object] or None, optional
        Extra key/value context shown inside the panel.
    """

    title = "PyPainleveTau Error"
    exitCode = 1

    def __init__(self, message: str, details: dict[str, object] | None = None):
        self.details = dict(details) if details else {}

        errorText = Text()
        errorText.append(message, style="bold red")

        if self.details:

            errorText.append("\n")

        for key, value in self.details.items():

            errorText.append("\n")
            errorText.append(f"{key}: ", style="green")
            errorText.append(f"{value}", style="bold")

        panel = Panel(
            errorText, title=self.title, title_align="left", border_style="red"
        )

        console = Console(color_system="truecolor", record=True)

        with console.capture() as capture:

            console.print("")
            console.print(panel)
        self.panel = capture.get()

        super().__init__(message)


class ArgumentError(PainleveTauError, ValueError):
    """Invalid argument or violated precondition."""

    title = "Argument Error"
    exitCode = 2


class DomainError(ArgumentError):
    """Argument outside the supported domain."""

    title = "Domain Error"


class ContourCollisionError(ArgumentError):
    """An evaluation point or pole lies on an integration contour."""

    title = "Contour Collision"


class DepthGuardError(ArgumentError):
    """Symbolic recursion requested beyond the supported depth."""

    title = "Depth Guard"


class NumericalError(PainleveTauError, ArithmeticError):
    """Numerical failure."""

    title = "Numerical Error"
    exitCode = 3


class ConvergenceError(NumericalError):
    """An iteration or a truncation bound did not converge."""

    title = "Convergence Error"


class FactorizationError(NumericalError):
    """Singular matrix met during pivoted factorization."""

    title = "Factorization Error"


class PoleEncounteredError(NumericalError):
    """The Painlevé II integration hit a pole."""

    title = "Pole Encountered"


class CalibrationError(NumericalError):
    """No scale candidate reconciles the Widom and Airy determinants."""

    title = "Calibration Error"


class NonPositiveTauError(NumericalError):
    """log τ requested at a point where τ is not positive."""

    title = "Non-positive Tau"


for _errorClass in (
    PainleveTauError,
    ArgumentError,
    DomainError,
    ContourCollisionError,
    DepthGuardError,
    NumericalError,
    ConvergenceError,
    FactorizationError,
    PoleEncounteredError,
    CalibrationError,
    NonPositiveTauError,
):

    # Set module for correct traceback display
    _errorClass.__module__ = "PyPainleveTau"
