# PyPainleveTau/widom_determinant.py

"""
Widom-Constant Determinant
==========================

``τ_widom(s, κ) = det(1 − a₁₂ b₂₁)`` built from the integrable kernels on the two
shifted vertical lines:

- ``a₁₂(z, w) = −κ e^{ν(w)} / (2πi (w − z))``, ``z`` on ``Re = +ε``, ``w`` on ``Re = −ε``,
- ``b₂₁(w, z) = +κ e^{−ν(z)} / (2πi (z − w))``.

The default discretization uses the symmetrized kernels ``F``/``G`` carrying
``e^{±ν/2}`` on both sides; it differs from the raw one by a diagonal similarity.
The result equals the Airy-kernel determinant at ``2^{−2/3}·s``.

Key Classes
-----------
- ``KernelMatrix`` : A discretized off-diagonal kernel.

Key Functions
-------------
- ``ThetaOffDiag`` : Off-diagonal Cauchy transforms of the jumps.
- ``KernelF`` / ``KernelG`` : Symmetrized kernels.
- ``BuildKernelMatrices`` : Discretized ``a₁₂`` and ``b₂₁``.
- ``TauWidom`` : The determinant.
- ``HSNormSq`` : Squared Hilbert–Schmidt norms of ``a₁₂`` and ``b₂₁``.
- ``VerifyCollapse`` : Double-integral versus single-contour action of ``a₁₂``.
"""

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .airy_fredholm import CheckKappa, TauResult
from .config import RunConfig
from .contour_quadrature import (
    CheckOffContour,
    Contour,
    ContourIntegral,
    ImaginaryAxisGrid,
    VerticalContour,
)
from .determinants import LogDeterminant
from .errors import ArgumentError
from .special_functions import PhaseNu

VALID_KERNELS = ["a12", "b21"]
VALID_FORMS = ["schur", "block"]
VALID_HS_FORMS = ["symmetrized", "raw"]


@dataclass(frozen=True, eq=False)
class KernelMatrix:
    """
    Discretized kernel ``entries[j, k] = K(row_j, col_k)·μ_k``.

    Row and column contours lie on opposite sides of the imaginary axis.
    """

    rowContour: Contour
    colContour: Contour
    entries: np.ndarray
    kappa: float
    s: float
    symmetrized: bool = True


def _Contours(s: float, cfg: RunConfig, m: int | None = None) -> tuple[Contour, Contour]:

    order = m or cfg.quadOrder
    left = VerticalContour("left", cfg.eps, s, order, cfg.tailTol)
    right = VerticalContour("right", cfg.eps, s, order, cfg.tailTol)

    return left, right


def ThetaOffDiag(
    z: complex | np.ndarray, s: float, cfg: RunConfig | None = None
) -> tuple[complex | np.ndarray, complex | np.ndarray]:
    """
    Off-diagonal entries of Θ at ``z``.

    ``theta2_12 = κ ∫_{Re w=−ε} e^{ν(w,s)}/(w − z) dw/2πi`` and
    ``theta1_21 = −κ ∫_{Re w=+ε} e^{−ν(w,s)}/(w − z) dw/2πi``.

    Returns
    -------
    tuple
        ``(theta1_21, theta2_12)``, scalars for scalar ``z``.

    Raises
    ------
    ContourCollisionError
        If ``z`` lies on either contour.
    """

    cfg = cfg or RunConfig()
    kappa = CheckKappa(cfg.kappa)
    left, right = _Contours(s, cfg)
    points = np.atleast_1d(np.asarray(z, dtype=complex))
    CheckOffContour(points, left)
    CheckOffContour(points, right)

    leftValues = np.exp(PhaseNu(left.nodes, s, cfg.signNu))[None, :] / (
        left.nodes[None, :] - points[:, None]
    )
    rightValues = np.exp(-PhaseNu(right.nodes, s, cfg.signNu))[None, :] / (
        right.nodes[None, :] - points[:, None]
    )
    theta2 = kappa * ContourIntegral(leftValues, left)
    theta1 = -kappa * ContourIntegral(rightValues, right)

    if np.ndim(z) == 0:

        return complex(theta1[0]), complex(theta2[0])

    return theta1, theta2


def KernelF(z, w, s: float, signNu: int = 1):
    """``F(z, w) = e^{(ν(w) − ν(z))/2} / (2πi (w − z))``, ``z`` right, ``w`` left."""

    return np.exp(0.5 * (PhaseNu(w, s, signNu) - PhaseNu(z, s, signNu))) / (
        2j * np.pi * (w - z)
    )


def KernelG(z, w, s: float, signNu: int = 1):
    """``G(z, w) = e^{(ν(z) − ν(w))/2} / (2πi (w − z))``, ``z`` left, ``w`` right."""

    return np.exp(0.5 * (PhaseNu(z, s, signNu) - PhaseNu(w, s, signNu))) / (
        2j * np.pi * (w - z)
    )


def BuildKernelMatrices(
    s: float,
    kappa: float,
    cfg: RunConfig | None = None,
    symmetrized: bool = True,
    m: int | None = None,
) -> tuple[KernelMatrix, KernelMatrix]:
    """
    Discretize ``a₁₂`` (right rows, left columns) and ``b₂₁`` (left rows, right columns).

    Parameters
    ----------
    s, kappa : float
        Parameters.
    cfg : RunConfig or None, optional
        Supplies ``eps``, ``quadOrder``, ``tailTol`` and ``signNu``.
    symmetrized : bool, optional
        ``e^{±ν/2}`` split (default) or raw ``e^{ν}``, ``e^{−ν}`` kernels.
    m : int or None, optional
        Overrides ``cfg.quadOrder``.

    Returns
    -------
    tuple[KernelMatrix, KernelMatrix]
        ``(a, b)`` with ``det(I − a @ b) = τ_widom``.
    """

    cfg = cfg or RunConfig()
    kappa = CheckKappa(kappa)
    left, right = _Contours(s, cfg, m)
    z = right.nodes[:, None]
    w = left.nodes[None, :]

    if symmetrized:

        aKernel = -kappa * KernelF(z, w, s, cfg.signNu)
        bKernel = kappa * KernelG(w.T, z.T, s, cfg.signNu)

    else:

        aKernel = -kappa * np.exp(PhaseNu(w, s, cfg.signNu)) / (2j * np.pi * (w - z))
        bKernel = kappa * np.exp(-PhaseNu(z.T, s, cfg.signNu)) / (2j * np.pi * (z.T - w.T))

    a = KernelMatrix(right, left, aKernel * left.weights[None, :], kappa, float(s), symmetrized)
    b = KernelMatrix(left, right, bKernel * right.weights[None, :], kappa, float(s), symmetrized)

    return a, b


def _TauWidomValue(
    s: float, kappa: float, cfg: RunConfig, form: str, symmetrized: bool, m: int
) -> tuple[float, float]:

    a, b = BuildKernelMatrices(s, kappa, cfg, symmetrized, m)
    size = a.entries.shape[0]

    if form == "schur":

        matrix = np.eye(size) - a.entries @ b.entries

    else:

        matrix = np.block(
            [
                [np.eye(size), -a.entries],
                [-b.entries, np.eye(b.entries.shape[0])],
            ]
        )

    phase, logAbs = LogDeterminant(matrix)
    magnitude = math.exp(logAbs)

    return phase.real * magnitude, abs(phase.imag) * magnitude


def TauWidom(
    s: float,
    kappa: float,
    cfg: RunConfig | None = None,
    form: str = "schur",
    symmetrized: bool = True,
    errorEstimate: bool = True,
) -> TauResult:
    """
    Widom-constant determinant ``det(1 − a₁₂ b₂₁)``.

    Parameters
    ----------
    s : float
        Deformation parameter.
    kappa : float
        ``|κ| ≤ 1``.
    cfg : RunConfig or None, optional
        Supplies ``eps``, ``quadOrder``, ``tailTol`` and ``signNu``.
    form : str, optional
        ``schur`` (``m×m`` determinant, default) or ``block`` (``2m×2m``
        determinant of ``[[I, −a], [−b, I]]``).
    symmetrized : bool, optional
        Use the ``F``/``G`` kernels (default) or the raw ones.
    errorEstimate : bool, optional
        Compare against half the contour order.

    Returns
    -------
    TauResult
        ``method="widom"``; ``imagResidual`` is the discarded imaginary part.

    Examples
    --------
    >>> TauWidom(1.0, 0.0).value
    1.0
    """

    cfg = cfg or RunConfig()
    kappa = CheckKappa(kappa)

    if form not in VALID_FORMS:

        raise ArgumentError(f"Invalid determinant form: {form!r}\n\nValid forms: {VALID_FORMS}")

    m = cfg.quadOrder
    value, imagResidual = _TauWidomValue(s, kappa, cfg, form, symmetrized, m)
    estimate = 0.0

    if errorEstimate and kappa != 0.0:

        coarse, _ = _TauWidomValue(s, kappa, cfg, form, symmetrized, max(m // 2, 1))
        estimate = abs(value - coarse)

    return TauResult(
        value=value,
        imagResidual=imagResidual,
        method="widom",
        s=float(s),
        kappa=kappa,
        errorEstimate=estimate,
        config=cfg.Snapshot(),
    )


def HSNormSq(
    which: str,
    s: float,
    cfg: RunConfig | None = None,
    kappa: float | None = None,
    form: str = "symmetrized",
    m: int | None = None,
) -> float:
    """
    Squared Hilbert–Schmidt norm ``∫∫ |kernel|² |dz||dw|`` of ``a₁₂`` or ``b₂₁``.

    The symmetrized kernels decay in both variables and are summed over both
    truncated contours. For the raw kernels the integral along the line where
    the kernel has only Cauchy decay is done exactly,
    ``∫ |dz| / |w − z|² = π/(2ε)``, and the other by quadrature.

    Parameters
    ----------
    which : str
        ``a12`` or ``b21``.
    s : float
        Deformation parameter.
    cfg : RunConfig or None, optional
        Contour settings; ``cfg.kappa`` when ``kappa`` is None.
    kappa : float or None, optional
        Overrides ``cfg.kappa``.
    form : str, optional
        ``symmetrized`` (default) or ``raw``.
    m : int or None, optional
        Overrides ``cfg.quadOrder``.

    Returns
    -------
    float
        ``κ²`` times the kernel-only integral.
    """

    cfg = cfg or RunConfig()
    kappa = CheckKappa(cfg.kappa if kappa is None else kappa)

    if which not in VALID_KERNELS:

        raise ArgumentError(f"Invalid kernel: {which!r}\n\nValid kernels: {VALID_KERNELS}")

    if form not in VALID_HS_FORMS:

        raise ArgumentError(f"Invalid norm form: {form!r}\n\nValid forms: {VALID_HS_FORMS}")

    left, right = _Contours(s, cfg, m)

    if form == "symmetrized":

        z = right.nodes[:, None]
        w = left.nodes[None, :]
        kernel = KernelF(z, w, s, cfg.signNu) if which == "a12" else KernelG(w, z, s, cfg.signNu)
        measure = np.abs(right.weights)[:, None] * np.abs(left.weights)[None, :]
        base = float(np.sum(np.abs(kernel) ** 2 * measure))

    else:

        crossIntegral = math.pi / (2.0 * cfg.eps)

        if which == "a12":

            density = np.exp(2.0 * PhaseNu(left.nodes, s, cfg.signNu).real)
            lineWeights = np.abs(left.weights)

        else:

            density = np.exp(-2.0 * PhaseNu(right.nodes, s, cfg.signNu).real)
            lineWeights = np.abs(right.weights)

        base = crossIntegral * float(density @ lineWeights) / (4.0 * math.pi**2)

    return kappa**2 * base


def _DefaultTestFunction(w: np.ndarray) -> np.ndarray:

    return 1.0 / (w - 1.0) ** 2


def VerifyCollapse(
    s: float,
    kappa: float,
    zSamples: tuple[complex, ...] = (0.5 + 0.25j, 1.5 - 1.0j, -2.0 + 0.5j),
    cfg: RunConfig | None = None,
    testFunction: Callable[[np.ndarray], np.ndarray] | None = None,
    m: int | None = None,
) -> float:
    """
    Compare the double-integral and single-contour actions of ``a₁₂``.

    The double integral
    ``−κ ∫_{iℝ} dw/2πi f(w) ∫_{Re λ=−ε} dλ/2πi e^{ν(λ)} / ((λ − z)(λ − w))``
    collapses, for ``f`` analytic and decaying left of the imaginary axis, to
    ``κ ∫_{Re λ=−ε} e^{ν(λ)} f(λ) / (λ − z) dλ/2πi``, which is ``−a₁₂ f``.

    Parameters
    ----------
    s, kappa : float
        Parameters.
    zSamples : tuple of complex, optional
        Evaluation points off both contours.
    cfg : RunConfig or None, optional
        Contour settings.
    testFunction : callable or None, optional
        ``f``; defaults to ``1/(w − 1)²``.
    m : int or None, optional
        Overrides ``cfg.quadOrder`` on both contours.

    Returns
    -------
    float
        Maximal absolute deviation over ``zSamples``.
    """

    cfg = cfg or RunConfig()
    kappa = CheckKappa(kappa)
    testFunction = testFunction or _DefaultTestFunction
    order = m or cfg.quadOrder
    left = VerticalContour("left", cfg.eps, s, order, cfg.tailTol)
    axis = ImaginaryAxisGrid(order)
    points = np.atleast_1d(np.asarray(zSamples, dtype=complex))
    CheckOffContour(points, left)
    CheckOffContour(points, axis)

    lam = left.nodes
    phase = np.exp(PhaseNu(lam, s, cfg.signNu))
    axisValues = testFunction(axis.nodes)[None, :] / (lam[:, None] - axis.nodes[None, :])
    inner = ContourIntegral(axisValues, axis)
    cauchy = 1.0 / (lam[None, :] - points[:, None])

    double = -kappa * ContourIntegral(phase[None, :] * inner[None, :] * cauchy, left)
    single = kappa * ContourIntegral(phase[None, :] * testFunction(lam)[None, :] * cauchy, left)

    return float(np.max(np.abs(double - single)))
