# PyPainleveTau/airy_fredholm.py

"""
Airy-Kernel Fredholm Determinant
================================

``τ_airy(s, κ) = det(1 − κ² K_Ai)`` on ``L²([s, ∞))`` by Nyström discretization of
the truncated half-line ``[s, s+T]``, and ``(log τ)″`` by Richardson-extrapolated
second differences.

Key Classes
-----------
- ``TauResult`` : τ value with method tag, parameters and error estimate.

Key Functions
-------------
- ``AiryKernel`` : ``K_Ai(x, y)`` at one pair of points.
- ``AiryKernelMatrix`` : ``K_Ai`` on all pairs of grid nodes.
- ``TauAiry`` : The Nyström determinant.
- ``LogTauDds2`` : Second log-derivative of any τ pipeline.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .config import RunConfig
from .contour_quadrature import BuildHalfLineGrid
from .determinants import LogDeterminant
from .errors import ArgumentError, DomainError, NonPositiveTauError
from .special_functions import AIRY_MAX_ARGUMENT, AiryAi, AiryAiArray

logger = logging.getLogger(__name__)

TRUNCATION_TAIL_LIMIT = 1e-14


@dataclass(frozen=True)
class TauResult:
    """
    A τ value produced by one of the pipelines.

    Attributes
    ----------
    value : float
        Real part of the determinant.
    imagResidual : float
        Magnitude of the discarded imaginary part.
    method : str
        ``airy``, ``widom`` or ``minor``.
    s : float
        Deformation parameter.
    kappa : float
        Ablowitz–Segur parameter.
    errorEstimate : float
        Difference to a coarser evaluation of the same pipeline.
    config : dict[str, object]
        Snapshot of the run configuration.
    """

    value: float
    imagResidual: float
    method: str
    s: float
    kappa: float
    errorEstimate: float
    config: dict[str, object] = field(default_factory=dict, compare=False)

    def ToDict(self) -> dict[str, object]:
        """Flat dictionary used for JSON output."""

        return {
            "value": self.value,
            "imag_residual": self.imagResidual,
            "method": self.method,
            "s": self.s,
            "kappa": self.kappa,
            "error_estimate": self.errorEstimate,
        }


def CheckKappa(kappa: float) -> float:
    """Validate ``|κ| ≤ 1`` and return it as float."""

    if isinstance(kappa, bool) or not isinstance(kappa, (int, float, np.integer, np.floating)):

        raise TypeError(
            f'Unexpected type for parameter "kappa". Expected type: float. Given type: {type(kappa)}'
        )

    if not math.isfinite(kappa) or abs(kappa) > 1:

        raise ArgumentError(f"kappa must satisfy |kappa| <= 1, got {kappa}")

    return float(kappa)


def AiryKernel(x: float, y: float) -> float:
    """
    Airy kernel ``(Ai(x)Ai′(y) − Ai′(x)Ai(y))/(x − y)``.

    The diagonal uses the limit ``Ai′(x)² − x·Ai(x)²``.

    Examples
    --------
    >>> round(AiryKernel(0.0, 0.0), 10)
    0.0669874837
    """

    first = AiryAi(x)
    second = AiryAi(y)

    if x == y:

        return first.aiPrime**2 - x * first.ai**2

    return (first.ai * second.aiPrime - first.aiPrime * second.ai) / (x - y)


def AiryKernelMatrix(nodes: np.ndarray) -> np.ndarray:
    """``K_Ai(x_j, x_k)`` for all node pairs, diagonal by the limit formula."""

    nodes = np.asarray(nodes, dtype=float)
    ai, aiPrime = AiryAiArray(nodes)
    numerator = np.outer(ai, aiPrime) - np.outer(aiPrime, ai)
    difference = nodes[:, None] - nodes[None, :]
    kernel = np.divide(
        numerator, difference, out=np.zeros_like(numerator), where=difference != 0.0
    )
    np.fill_diagonal(kernel, aiPrime**2 - nodes * ai**2)

    return kernel


def _TauAiryValue(
    s: float, kappa: float, truncation: float, m: int, symmetrized: bool
) -> tuple[float, float]:

    grid = BuildHalfLineGrid(s, truncation, m)
    kernel = AiryKernelMatrix(grid.nodes)

    if symmetrized:

        root = np.sqrt(grid.weights)
        operator = root[:, None] * kernel * root[None, :]

    else:

        operator = kernel * grid.weights[None, :]

    phase, logAbs = LogDeterminant(np.eye(m) - kappa**2 * operator)
    magnitude = math.exp(logAbs)

    return phase.real * magnitude, abs(phase.imag) * magnitude


def TauAiry(
    s: float,
    kappa: float,
    cfg: RunConfig | None = None,
    symmetrized: bool = True,
    errorEstimate: bool = True,
) -> TauResult:
    """
    Airy-kernel Fredholm determinant ``det(1 − κ² K_Ai|[s, ∞))``.

    The symmetrized Nyström matrix ``√w_j K(x_j, x_k) √w_k`` on the Gauss–Legendre
    grid of ``[s, s+T]`` is factorized with partial pivoting and the determinant
    accumulated in log space.

    Parameters
    ----------
    s : float
        Left endpoint; the documented validity window is ``[−8, 20]``.
    kappa : float
        ``|κ| ≤ 1``.
    cfg : RunConfig or None, optional
        Supplies ``halfLineOrder`` and ``truncation``.
    symmetrized : bool, optional
        Use ``K(x_j, x_k) w_k`` instead when False (same determinant).
    errorEstimate : bool, optional
        Also evaluate at half the order and report the difference.

    Returns
    -------
    TauResult
        ``method="airy"``.

    Raises
    ------
    DomainError
        If ``s`` exceeds the Airy evaluation range. The half-line is clipped
        at that range, where the kernel is below double precision.
    FactorizationError
        If the Nyström matrix is singular.

    Examples
    --------
    >>> TauAiry(0.0, 0.0).value
    1.0
    """

    cfg = cfg or RunConfig()
    kappa = CheckKappa(kappa)

    if not math.isfinite(s):

        raise ArgumentError(f"s must be finite, got {s}")

    if s > AIRY_MAX_ARGUMENT:

        raise DomainError(f"s must not exceed {AIRY_MAX_ARGUMENT:g}, got {s}")

    if s == AIRY_MAX_ARGUMENT:

        return TauResult(
            value=1.0,
            imagResidual=0.0,
            method="airy",
            s=float(s),
            kappa=kappa,
            errorEstimate=0.0,
            config=cfg.Snapshot(),
        )

    # Ai(x)^2 < 1e-200 beyond the evaluation range.
    truncation = min(cfg.truncation, AIRY_MAX_ARGUMENT - s)
    m = cfg.halfLineOrder
    tail = AiryAi(s + truncation).ai ** 2 * truncation

    if tail > TRUNCATION_TAIL_LIMIT:

        logger.warning(
            f"Half-line truncation T={truncation} too small at s={s}: Ai(s+T)^2*T = {tail:.3e}"
        )

    value, imagResidual = _TauAiryValue(s, kappa, truncation, m, symmetrized)
    estimate = 0.0

    if errorEstimate and kappa != 0.0:

        coarse, _ = _TauAiryValue(s, kappa, truncation, max(m // 2, 1), symmetrized)
        estimate = abs(value - coarse)

    return TauResult(
        value=value,
        imagResidual=imagResidual,
        method="airy",
        s=float(s),
        kappa=kappa,
        errorEstimate=estimate,
        config=cfg.Snapshot(),
    )


def LogTauDds2(
    s: float,
    kappa: float,
    h: float | None = None,
    method: str = "airy",
    cfg: RunConfig | None = None,
    tauFunction: Callable[[float], float] | None = None,
) -> float:
    """
    ``d²/ds² log τ(s)`` by Richardson extrapolation of central second differences.

    With ``D(h) = (L(s+h) − 2L(s) + L(s−h))/h²`` and ``L = log τ``, returns
    ``(4D(h) − D(2h))/3``, accurate to ``O(h⁴)``.

    Parameters
    ----------
    s : float
        Evaluation point.
    kappa : float
        ``|κ| ≤ 1``.
    h : float or None, optional
        Step in ``[1e-4, 1e-1]``; ``cfg.fdStep`` when None.
    method : str, optional
        τ pipeline: ``airy``, ``widom`` or ``minor``.
    cfg : RunConfig or None, optional
        Pipeline settings.
    tauFunction : callable or None, optional
        Replaces the pipeline with ``s ↦ τ(s)`` (test hook).

    Returns
    -------
    float
        The extrapolated second log-derivative.

    Raises
    ------
    NonPositiveTauError
        If some τ sample is not positive.
    """

    cfg = cfg or RunConfig()
    h = cfg.fdStep if h is None else h

    if not 1e-4 <= h <= 1e-1:

        raise ArgumentError(f"Finite-difference step must lie in [1e-4, 1e-1], got {h}")

    if tauFunction is None:

        from .pipelines import EvaluateTau

        def tauFunction(point: float) -> float:

            return EvaluateTau(method, point, kappa, cfg, errorEstimate=False).value

    offsets = (-2, -1, 0, 1, 2)
    samples = {offset: tauFunction(s + offset * h) for offset in offsets}

    for offset, value in samples.items():

        if not value > 0:

            raise NonPositiveTauError(
                "tau is not positive where its logarithm is needed",
                {"s": s + offset * h, "tau": value, "method": method},
            )

    logs = {offset: math.log(value) for offset, value in samples.items()}
    fine = (logs[1] - 2.0 * logs[0] + logs[-1]) / h**2
    coarse = (logs[2] - 2.0 * logs[0] + logs[-2]) / (4.0 * h**2)

    return (4.0 * fine - coarse) / 3.0
