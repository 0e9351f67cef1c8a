# PyPainleveTau/pipelines.py

"""
Pipelines
=========

Dispatch between the three τ evaluations and grid scans over ``s``.

Key Functions
-------------
- ``EvaluateTau`` : τ by method name.
- ``ScanGrid`` : Increasing ``s`` grid between two end points.
- ``ScanTau`` : τ on a grid, evaluated concurrently, returned in grid order.
"""

import math
from concurrent.futures import ThreadPoolExecutor, as_completed

import numpy as np

from .airy_fredholm import TauAiry, TauResult
from .config import VALID_METHODS, RunConfig
from .errors import ArgumentError
from .minor_expansion import TauMinor
from .progress import TrackTask
from .widom_determinant import TauWidom


def EvaluateTau(
    method: str,
    s: float,
    kappa: float,
    cfg: RunConfig | None = None,
    errorEstimate: bool = True,
) -> TauResult:
    """
    Evaluate τ with the named pipeline.

    Parameters
    ----------
    method : str
        ``airy``, ``widom`` or ``minor``.
    s : float
        Deformation parameter on the pipeline's own axis.
    kappa : float
        ``|κ| ≤ 1``.
    cfg : RunConfig or None, optional
        Settings; defaults when None.
    errorEstimate : bool, optional
        Request the pipeline's error estimate.

    Returns
    -------
    TauResult
        The pipeline result.

    Examples
    --------
    >>> EvaluateTau("widom", 1.0, 0.0).value
    1.0
    """

    cfg = cfg or RunConfig()

    if method == "airy":

        return TauAiry(s, kappa, cfg, errorEstimate=errorEstimate)

    if method == "widom":

        return TauWidom(s, kappa, cfg, errorEstimate=errorEstimate)

    if method == "minor":

        return TauMinor(s, kappa, cfg=cfg, errorEstimate=errorEstimate)

    raise ArgumentError(f"Invalid method: {method!r}\n\nValid methods: {VALID_METHODS}")


def ScanGrid(sMin: float, sMax: float, step: float) -> np.ndarray:
    """
    Points ``sMin, sMin + step, …`` up to ``sMax`` (inclusive within rounding).

    Examples
    --------
    >>> ScanGrid(1.0, 1.0, 0.5).tolist()
    [1.0]
    """

    if not (math.isfinite(sMin) and math.isfinite(sMax)) or sMin > sMax:

        raise ArgumentError(f"Scan range must satisfy s_min <= s_max, got [{sMin}, {sMax}]")

    if not step > 0:

        raise ArgumentError(f"Scan step must be positive, got {step}")

    count = int(math.floor((sMax - sMin) / step + 1e-9)) + 1

    return sMin + step * np.arange(count)


def ScanTau(
    sValues: np.ndarray,
    cfg: RunConfig | None = None,
    workers: int | None = None,
    quiet: bool = False,
) -> list[TauResult]:
    """
    τ at every point of ``sValues`` with ``cfg.method`` and ``cfg.kappa``.

    Points are evaluated on a thread pool; results come back in input order.
    """

    cfg = cfg or RunConfig()
    points = [float(s) for s in sValues]
    results: list[TauResult | None] = [None] * len(points)
    taskName = f"Scanning tau ({cfg.method})"

    with TrackTask(taskName, len(points), quiet) as Advance, ThreadPoolExecutor(workers) as executor:

        futures = {
            executor.submit(EvaluateTau, cfg.method, s, cfg.kappa, cfg): index
            for index, s in enumerate(points)
        }

        for future in as_completed(futures):

            results[futures[future]] = future.result()
            Advance()

    return results
