# PyPainleveTau/calibration.py

"""
Calibration
===========

Pins the conventions that the determinant formulas leave implicit: the
s-axis scale between the Widom and Airy determinants, the closure sign of the
seed integral, the coefficient family and the recursion constant of the
symbolic engine.

Key Classes
-----------
- ``CalibrationReport`` : Calibrated configuration and the residual of every decision.

Key Functions
-------------
- ``CalibrateScale`` : Scale ``c`` with ``τ_widom(s) = τ_airy(c·s)``.
- ``CalibrateConventions`` : All conventions in one pass.
"""

import logging
from dataclasses import dataclass

from scipy.optimize import minimize_scalar

from .airy_fredholm import TauAiry
from .config import RunConfig
from .errors import CalibrationError
from .minor_expansion import SelectBasisFamily
from .progress import TrackTask
from .special_functions import DetermineClosureSign
from .symbolic_airy_algebra import DetermineRecursionStep
from .widom_determinant import TauWidom

logger = logging.getLogger(__name__)

PROBE_S = (-2.0, -1.0, 0.0, 1.0, 2.0)
SCALE_CANDIDATES = (1.0, 2.0 ** (2.0 / 3.0), 2.0 ** (-2.0 / 3.0))
DEGENERATE_KAPPA = 0.5
CALIBRATION_LIMIT = 1e-4
REFINEMENT_WINDOW = 0.03


@dataclass(frozen=True)
class CalibrationReport:
    """
    Outcome of ``CalibrateConventions``.

    Attributes
    ----------
    config : RunConfig
        Input configuration with the calibrated conventions applied.
    scaleResidual : float
        ``max |τ_widom(s) − τ_airy(c·s)|`` over the probe grid.
    closureSign : int
        Sign in ``C′ = ±(A − C)`` for the literal seed ``∫ e^ν/(1 + w)``.
    closureResidual : float
        Finite-difference residual of that sign.
    familyResiduals : dict[int, float]
        Truncated-determinant mismatch of each coefficient family.
    recursionResidual : float
        Relative residual of the chosen recursion constant.
    """

    config: RunConfig
    scaleResidual: float
    closureSign: int
    closureResidual: float
    familyResiduals: dict[int, float]
    recursionResidual: float


def CalibrateScale(
    cfg: RunConfig | None = None,
    probeS: tuple[float, ...] = PROBE_S,
    kappa: float | None = None,
) -> tuple[float, float]:
    """
    Scale ``c`` minimizing ``max_s |τ_widom(s) − τ_airy(c·s)|``.

    The best of ``{1, 2^{2/3}, 2^{−2/3}}`` is refined by a bounded scalar
    minimization within 3% of it.

    Parameters
    ----------
    cfg : RunConfig or None, optional
        Quadrature settings.
    probeS : tuple[float, ...], optional
        Probe points on the Widom axis.
    kappa : float or None, optional
        Probe amplitude; ``cfg.kappa`` when None, and 0.5 if that is zero.

    Returns
    -------
    tuple[float, float]
        ``(c, residual)``.

    Raises
    ------
    CalibrationError
        If the residual exceeds ``1e-4``.
    """

    cfg = cfg or RunConfig()
    kappa = cfg.kappa if kappa is None else kappa

    if kappa == 0.0:

        kappa = DEGENERATE_KAPPA

    widomValues = [TauWidom(s, kappa, cfg, errorEstimate=False).value for s in probeS]

    def Residual(c: float) -> float:

        return max(
            abs(value - TauAiry(c * s, kappa, cfg, errorEstimate=False).value)
            for s, value in zip(probeS, widomValues)
        )

    scores = {c: Residual(c) for c in SCALE_CANDIDATES}
    best = min(scores, key=scores.get)
    refined = minimize_scalar(
        Residual,
        bounds=(best * (1.0 - REFINEMENT_WINDOW), best * (1.0 + REFINEMENT_WINDOW)),
        method="bounded",
        options={"xatol": 1e-12},
    )

    if refined.success and refined.fun < scores[best]:

        best, residual = float(refined.x), float(refined.fun)

    else:

        residual = scores[best]

    logger.debug(f"Scale candidates {scores}; chose c={best!r} with residual {residual:.3e}")

    if residual > CALIBRATION_LIMIT:

        raise CalibrationError(
            "No s-axis scale reconciles the Widom and Airy determinants",
            {"bestScale": best, "residual": residual, "kappa": kappa},
        )

    return best, residual


def CalibrateConventions(cfg: RunConfig | None = None, quiet: bool = False) -> CalibrationReport:
    """
    Determine every convention and return the calibrated configuration.

    Steps: closure sign of the literal seed, coefficient family, recursion
    constant and operator order for that family, s-axis scale.
    """

    cfg = cfg or RunConfig()

    with TrackTask("Calibrating conventions", 4, quiet) as Advance:

        closureSign, closureResidual = DetermineClosureSign(cfg, sigma=1)
        Advance(stage="closure")

        family = SelectBasisFamily(cfg)
        cfg = cfg.Replace(sigmaC=family.sigma)
        Advance(stage="family")

        step, order, recursionResidual = DetermineRecursionStep(cfg)
        cfg = cfg.Replace(recursionStep=str(step), operatorOrder=order)
        Advance(stage="recursion")

        scaleC, scaleResidual = CalibrateScale(cfg)
        cfg = cfg.Replace(scaleC=scaleC)
        Advance(stage="scale")

    return CalibrationReport(
        config=cfg,
        scaleResidual=scaleResidual,
        closureSign=closureSign,
        closureResidual=closureResidual,
        familyResiduals=family.residuals,
        recursionResidual=recursionResidual,
    )
