# PyPainleveTau/contour_quadrature.py

"""
Contour Quadrature
==================

Gauss–Legendre rules and the discretized integration paths every pipeline uses:
truncated vertical lines ``Re w = ∓ε`` for the Gaussian-decaying contour
integrands, the Airy half-line ``[s, s+T]`` and a tangent-mapped grid over the
whole imaginary axis for integrands with only algebraic decay.

Contour weights are the raw ``dw`` weights; the ``1/(2πi)`` factor is applied in
``ContourIntegral`` and nowhere else.

Key Classes
-----------
- ``QuadratureRule`` : Gauss–Legendre nodes and weights on (−1, 1).
- ``Contour`` : Discretized vertical line (or the imaginary axis).
- ``HalfLineGrid`` : Discretized interval ``[s, s+T]``.

Key Functions
-------------
- ``GaussLegendre`` : Legendre roots by Newton iteration.
- ``VerticalContour`` : Truncated line ``Re w = ∓ε`` with an explicit tail bound.
- ``BuildHalfLineGrid`` : Affine image of a Gauss–Legendre rule on ``[s, s+T]``.
- ``ImaginaryAxisGrid`` : Gauss–Legendre rule mapped onto the whole axis.
- ``ContourIntegral`` : ``Σ f(w_j) μ_j / (2πi)``.
- ``OnContour`` : Whether a point lies on a contour segment.
"""

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

from .errors import ArgumentError, ContourCollisionError, ConvergenceError, NumericalError

MAX_ORDER = 2000
NEWTON_MAX_ITERATIONS = 100
VALID_SIDES = ["left", "right"]


def _ReadOnly(array: np.ndarray) -> np.ndarray:

    array.flags.writeable = False

    return array


@dataclass(frozen=True, eq=False)
class QuadratureRule:
    """Gauss–Legendre rule of a given order on (−1, 1)."""

    order: int
    nodes: np.ndarray
    weights: np.ndarray


@dataclass(frozen=True, eq=False)
class Contour:
    """
    Discretized upward-oriented integration path.

    Attributes
    ----------
    side : str
        ``left`` (Re w = −eps), ``right`` (Re w = +eps) or ``axis`` (iℝ).
    eps : float
        Horizontal shift (0 for the axis).
    halfLength : float
        Truncation ``Y`` of the imaginary part (``inf`` for the mapped axis).
    nodes : np.ndarray
        Complex nodes, imaginary parts increasing.
    weights : np.ndarray
        Complex ``dw`` weights (no ``1/(2πi)``).
    """

    side: str
    eps: float
    halfLength: float
    nodes: np.ndarray
    weights: np.ndarray

    @property
    def order(self) -> int:

        return len(self.nodes)


@dataclass(frozen=True, eq=False)
class HalfLineGrid:
    """Nodes and weights on ``[s, s+T]``."""

    s: float
    truncation: float
    nodes: np.ndarray
    weights: np.ndarray


def _CheckOrder(m: int, name: str = "m") -> None:

    if isinstance(m, bool) or not isinstance(m, (int, np.integer)):

        raise TypeError(
            f'Unexpected type for parameter "{name}". Expected type: int. Given type: {type(m)}'
        )

    if not 1 <= m <= MAX_ORDER:

        raise ArgumentError(f"Quadrature order must lie in [1, {MAX_ORDER}], got {m}")


def _LegendreWithDerivative(m: int, x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:

    previous = np.ones_like(x)
    current = x.copy()

    for j in range(2, m + 1):

        previous, current = current, ((2 * j - 1) * x * current - (j - 1) * previous) / j

    derivative = m * (x * current - previous) / (x * x - 1.0)

    return current, derivative


@lru_cache(maxsize=64)
def GaussLegendre(m: int) -> QuadratureRule:
    """
    Gauss–Legendre rule of order ``m``.

    Roots of ``P_m`` are found by simultaneous Newton iteration started from the
    Chebyshev-type guesses ``cos(π(k − 1/4)/(m + 1/2))``; weights are
    ``2/((1 − x²) P′_m(x)²)``. Nodes are symmetrized and sorted increasingly.

    Parameters
    ----------
    m : int
        Number of nodes, ``1 ≤ m ≤ 2000``.

    Returns
    -------
    QuadratureRule
        Immutable rule (read-only arrays).

    Raises
    ------
    ArgumentError
        If ``m`` is out of range.
    ConvergenceError
        If Newton iteration does not settle within 100 iterations.

    Examples
    --------
    >>> from PyPainleveTau import GaussLegendre
    >>> GaussLegendre(2).nodes
    array([-0.57735027,  0.57735027])
    """

    _CheckOrder(m)

    if m == 1:

        return QuadratureRule(1, _ReadOnly(np.zeros(1)), _ReadOnly(np.full(1, 2.0)))

    k = np.arange(1, m + 1)
    x = np.cos(np.pi * (k - 0.25) / (m + 0.5))

    for _ in range(NEWTON_MAX_ITERATIONS):

        value, derivative = _LegendreWithDerivative(m, x)
        step = value / derivative
        x = x - step

        if np.max(np.abs(step)) < 1e-15:

            break

    else:

        raise ConvergenceError(
            f"Gauss-Legendre Newton iteration did not converge for m={m}",
            {"iterations": NEWTON_MAX_ITERATIONS},
        )

    _, derivative = _LegendreWithDerivative(m, x)
    weights = 2.0 / ((1.0 - x * x) * derivative * derivative)

    # cos ordering is decreasing
    x = x[::-1]
    weights = weights[::-1]
    nodes = 0.5 * (x - x[::-1])
    weights = 0.5 * (weights + weights[::-1])

    return QuadratureRule(m, _ReadOnly(nodes), _ReadOnly(weights))


def ContourHalfLength(eps: float, s: float, tailTol: float) -> float:
    """
    Half-length ``Y`` with ``exp((4/3)ε³ + |s|ε − 4εY²) = tailTol``.
    """

    return math.sqrt(((4.0 / 3.0) * eps**3 + abs(s) * eps - math.log(tailTol)) / (4.0 * eps))


@lru_cache(maxsize=256)
def VerticalContour(
    side: str, eps: float, s: float, m: int, tailTol: float = 1e-18
) -> Contour:
    """
    Truncated vertical line ``Re w = ∓eps`` discretized by Gauss–Legendre.

    The half-length ``Y`` is chosen so that the Gaussian envelope
    ``exp((4/3)ε³ + |s|ε − 4εY²)`` of ``e^{±ν}`` is at most ``tailTol`` at the ends.

    Parameters
    ----------
    side : str
        ``left`` (``Re w = −eps``, carries ``e^{ν}``) or ``right`` (``+eps``,
        carries ``e^{−ν}``).
    eps : float
        Shift, positive and different from 1.
    s : float
        Deformation parameter entering the envelope.
    m : int
        Number of nodes.
    tailTol : float, optional
        Envelope bound at the endpoints, in ``(0, 1e-6]``.

    Returns
    -------
    Contour
        Upward-oriented discretized line.

    Raises
    ------
    ArgumentError
        For an unknown side or out-of-range ``tailTol``.
    ContourCollisionError
        If ``eps ≤ 0`` or ``eps = 1`` (the basis poles sit at ``±1``).
    ConvergenceError
        If the envelope bound cannot be met.
    """

    if side not in VALID_SIDES:

        raise ArgumentError(f"Invalid contour side: {side!r}\n\nValid sides: {VALID_SIDES}")

    if not isinstance(eps, (int, float)) or isinstance(eps, bool):

        raise TypeError(
            f'Unexpected type for parameter "eps". Expected type: float. Given type: {type(eps)}'
        )

    if not eps > 0 or eps == 1:

        raise ContourCollisionError(
            f"Contour shift must be positive and different from 1, got eps={eps}"
        )

    if not 0 < tailTol <= 1e-6:

        raise ArgumentError(f"tailTol must lie in (0, 1e-6], got {tailTol}")

    _CheckOrder(m)

    halfLength = ContourHalfLength(eps, s, tailTol)
    envelope = math.exp((4.0 / 3.0) * eps**3 + abs(s) * eps - 4.0 * eps * halfLength**2)

    if not math.isfinite(halfLength) or envelope > 1.0000001 * tailTol:

        raise ConvergenceError(
            "Contour tail bound not met",
            {"eps": eps, "s": s, "halfLength": halfLength, "envelope": envelope},
        )

    rule = GaussLegendre(m)
    shift = -eps if side == "left" else eps
    nodes = shift + 1j * halfLength * rule.nodes
    weights = 1j * halfLength * rule.weights

    return Contour(side, float(eps), halfLength, _ReadOnly(nodes), _ReadOnly(weights))


@lru_cache(maxsize=32)
def ImaginaryAxisGrid(m: int) -> Contour:
    """
    Gauss–Legendre rule mapped onto the whole imaginary axis.

    Uses ``y = tan(πt/2)``, so ``dw = i (π/2) sec²(πt/2) dt``. Suited to
    integrands decaying like ``|w|^{-2}`` or faster, for which the mapped
    integrand stays analytic at ``t = ±1``.
    """

    rule = GaussLegendre(m)
    angle = 0.5 * np.pi * rule.nodes
    nodes = 1j * np.tan(angle)
    weights = 1j * 0.5 * np.pi * rule.weights / np.cos(angle) ** 2

    return Contour("axis", 0.0, math.inf, _ReadOnly(nodes), _ReadOnly(weights))


def BuildHalfLineGrid(s: float, truncation: float, m: int) -> HalfLineGrid:
    """
    Affine image of the order-``m`` Gauss–Legendre rule on ``[s, s + truncation]``.

    Examples
    --------
    >>> grid = BuildHalfLineGrid(0.0, 2.0, 1)
    >>> grid.nodes, grid.weights
    (array([1.]), array([2.]))
    """

    if not math.isfinite(s):

        raise ArgumentError(f"Half-line start must be finite, got {s}")

    if not truncation > 0 or not math.isfinite(truncation):

        raise ArgumentError(f"Half-line truncation must be positive, got {truncation}")

    rule = GaussLegendre(m)
    nodes = s + 0.5 * truncation * (rule.nodes + 1.0)
    weights = 0.5 * truncation * rule.weights

    return HalfLineGrid(float(s), float(truncation), _ReadOnly(nodes), _ReadOnly(weights))


def ContourIntegral(
    f: Callable[[np.ndarray], np.ndarray] | np.ndarray, contour: Contour
) -> complex:
    """
    ``Σ f(w_j) μ_j / (2πi)`` over the contour nodes.

    Parameters
    ----------
    f : callable or np.ndarray
        Vectorized integrand, or its values at ``contour.nodes``.
    contour : Contour
        Integration path.

    Returns
    -------
    complex
        The integral including the ``1/(2πi)`` factor.

    Raises
    ------
    NumericalError
        If the integrand is not finite at some node.
    """

    values = f(contour.nodes) if callable(f) else np.asarray(f)

    if values.shape[-1] != contour.order:

        raise ArgumentError(
            f"Integrand has {values.shape[-1]} values for a contour of {contour.order} nodes"
        )

    if not np.all(np.isfinite(values)):

        raise NumericalError(
            "Integrand is not finite on the contour",
            {"side": contour.side, "eps": contour.eps},
        )

    return values @ contour.weights / (2j * np.pi)


def OnContour(z: complex, contour: Contour, tolerance: float = 1e-12) -> bool:
    """Whether ``z`` lies on the (truncated) contour segment."""

    shift = {"left": -contour.eps, "right": contour.eps, "axis": 0.0}[contour.side]

    return abs(z.real - shift) <= tolerance and abs(z.imag) <= contour.halfLength


def CheckOffContour(z: np.ndarray, contour: Contour) -> None:
    """
    Raise ``ContourCollisionError`` if any point of ``z`` lies on ``contour``.
    """

    for point in np.atleast_1d(z):

        if OnContour(complex(point), contour):

            raise ContourCollisionError(
                "Evaluation point lies on the integration contour",
                {"z": complex(point), "side": contour.side, "eps": contour.eps},
            )
