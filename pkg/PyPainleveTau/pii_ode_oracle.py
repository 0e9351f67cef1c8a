# PyPainleveTau/pii_ode_oracle.py

"""
Painlevé II ODE Oracle
======================

Integrates ``u″ = s·u + 2u³`` backward from the Airy asymptotics
``u(s₀) = κ·Ai(s₀)``, ``u′(s₀) = κ·Ai′(s₀)`` with an embedded Runge–Kutta pair,
and checks ``u(s)² = −(log τ)″(s)`` against the determinant pipelines.

Key Classes
-----------
- ``ODESolution`` : Solution on a uniform decreasing grid with dense output.

Key Functions
-------------
- ``SolvePII`` : Backward integration from the anchor.
- ``EvaluateU`` : ``(u, u′)`` at any point of the solved range.
- ``ODEResidual`` : ``|u″ − s·u − 2u³|`` by re-differentiating ``u′`` on the grid.
- ``VerifyUSquared`` : ``|u² + (log τ)″|`` at one point.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy.integrate import solve_ivp

from .airy_fredholm import LogTauDds2
from .config import RunConfig
from .errors import ArgumentError, ConvergenceError, PoleEncounteredError
from .special_functions import AiryAi

logger = logging.getLogger(__name__)

BLOWUP_LIMIT = 1e6
GRID_STEP = 0.01
MIN_ANCHOR = 6.0
MIN_END = -6.0
RESIDUAL_LIMIT = 1e-8
ATOL_RATIO = 1e-3

# Central sixth-order first-derivative stencil at offsets -3..3.
_STENCIL = np.array([-1.0, 9.0, -45.0, 0.0, 45.0, -9.0, 1.0]) / 60.0


@dataclass(frozen=True, eq=False)
class ODESolution:
    """
    Ablowitz–Segur solution on a uniform grid.

    Attributes
    ----------
    sGrid : np.ndarray
        Decreasing grid from the anchor to the end point.
    u, uPrime : np.ndarray
        Solution and derivative on ``sGrid``.
    kappa : float
        Boundary amplitude.
    tol : float
        Integration tolerance.
    dense : callable
        ``s ↦ [u(s), u′(s)]`` on the solved range.
    """

    sGrid: np.ndarray
    u: np.ndarray
    uPrime: np.ndarray
    kappa: float
    tol: float
    dense: Callable[[float], np.ndarray] = field(repr=False)

    @property
    def sMin(self) -> float:

        return float(self.sGrid[-1])

    @property
    def sMax(self) -> float:

        return float(self.sGrid[0])


def _PainleveRhs(s: float, y: np.ndarray) -> list[float]:

    return [y[1], s * y[0] + 2.0 * y[0] ** 3]


def _Blowup(s: float, y: np.ndarray) -> float:

    return abs(y[0]) - BLOWUP_LIMIT


_Blowup.terminal = True


def SolvePII(
    kappa: float,
    sStart: float = 8.0,
    sEnd: float = -6.0,
    tol: float = 1e-10,
    gridStep: float = GRID_STEP,
) -> ODESolution:
    """
    Solve Painlevé II backward from ``sStart`` to ``sEnd``.

    Uses ``solve_ivp`` with the Dormand–Prince pair (``RK45``), ``rtol = tol``,
    and steps capped at the output grid spacing.

    Parameters
    ----------
    kappa : float
        ``|κ| < 1``.
    sStart : float, optional
        Anchor ``s₀ ≥ 6``.
    sEnd : float, optional
        End point ``≥ −6``.
    tol : float, optional
        Relative tolerance per step.
    gridStep : float, optional
        Output grid spacing, at most 0.01.

    Returns
    -------
    ODESolution
        Solution sampled on the uniform grid.

    Raises
    ------
    PoleEncounteredError
        If ``|u|`` reaches ``1e6``.
    ConvergenceError
        If the integrator fails.

    Examples
    --------
    >>> float(SolvePII(0.0).u.max())
    0.0
    """

    if not math.isfinite(kappa) or abs(kappa) >= 1:

        raise ArgumentError(f"kappa must satisfy |kappa| < 1, got {kappa}")

    if sStart < MIN_ANCHOR:

        raise ArgumentError(f"Anchor must be at least {MIN_ANCHOR}, got {sStart}")

    if sEnd < MIN_END or sEnd >= sStart:

        raise ArgumentError(f"End point must lie in [{MIN_END}, {sStart}), got {sEnd}")

    if not 0 < gridStep <= GRID_STEP:

        raise ArgumentError(f"Grid step must lie in (0, {GRID_STEP}], got {gridStep}")

    if not tol > 0:

        raise ArgumentError(f"Tolerance must be positive, got {tol}")

    anchor = AiryAi(sStart)
    initial = [kappa * anchor.ai, kappa * anchor.aiPrime]
    solution = solve_ivp(
        _PainleveRhs,
        (sStart, sEnd),
        initial,
        method="RK45",
        rtol=tol,
        atol=tol * ATOL_RATIO,
        max_step=gridStep,
        dense_output=True,
        events=_Blowup,
    )

    if solution.status == 1:

        raise PoleEncounteredError(
            "Painleve II solution blew up",
            {"kappa": kappa, "s": float(solution.t_events[0][0])},
        )

    if solution.status != 0:

        raise ConvergenceError(f"ODE integration failed: {solution.message}")

    points = int(math.ceil((sStart - sEnd) / gridStep - 1e-9)) + 1
    sGrid = np.linspace(sStart, sEnd, points)
    values = solution.sol(sGrid)
    result = ODESolution(sGrid, values[0], values[1], float(kappa), tol, solution.sol)
    residual = ODEResidual(result)

    if residual > RESIDUAL_LIMIT:

        logger.warning(f"Painleve II residual {residual:.3e} exceeds {RESIDUAL_LIMIT:.0e}")

    logger.debug(f"Solved Painleve II for kappa={kappa} on [{sEnd}, {sStart}]: {len(sGrid)} points")

    return result


def ODEResidual(solution: ODESolution) -> float:
    """
    ``max |u″ − s·u − 2u³|`` over interior grid points.

    ``u″`` is the sixth-order central difference of ``u′`` on the grid.
    """

    step = solution.sGrid[1] - solution.sGrid[0]
    derivative = np.convolve(solution.uPrime, _STENCIL[::-1], mode="valid") / step
    interior = slice(3, len(solution.sGrid) - 3)
    s = solution.sGrid[interior]
    u = solution.u[interior]

    return float(np.max(np.abs(derivative - s * u - 2.0 * u**3), initial=0.0))


def EvaluateU(solution: ODESolution, s: float) -> tuple[float, float]:
    """``(u(s), u′(s))`` from the dense output."""

    if not solution.sMin <= s <= solution.sMax:

        raise ArgumentError(
            f"s={s} lies outside the solved range [{solution.sMin}, {solution.sMax}]"
        )

    u, uPrime = solution.dense(s)

    return float(u), float(uPrime)


def VerifyUSquared(
    s: float,
    kappa: float,
    cfg: RunConfig | None = None,
    method: str | None = None,
    solution: ODESolution | None = None,
    h: float | None = None,
) -> float:
    """
    ``|u(s)² + (log τ)″(s)|`` with ``u`` from the ODE and ``τ`` from a determinant.

    The Widom and minor pipelines live on the axis ``s/c``; their second
    log-derivative is evaluated there with step ``h/c`` and divided by ``c²``.

    Examples
    --------
    >>> VerifyUSquared(1.0, 0.0)
    0.0
    """

    cfg = cfg or RunConfig()
    method = method or cfg.method
    h = cfg.fdStep if h is None else h

    if kappa == 0.0:

        return 0.0

    if solution is None:

        solution = SolvePII(kappa, cfg.odeAnchor, max(MIN_END, min(s - 0.1, 0.0)), cfg.odeTol)

    u, _ = EvaluateU(solution, s)
    scale = 1.0 if method == "airy" else cfg.scaleC
    second = LogTauDds2(s / scale, kappa, h / scale, method, cfg) / scale**2

    return abs(u**2 + second)
