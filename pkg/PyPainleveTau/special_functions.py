# PyPainleveTau/special_functions.py

"""
Special Functions
=================

The Airy function, the exponential phase ``ν(w, s) = s·w − (4/3)w³`` and the seed
contour integrals from which every minor-expansion coefficient is generated:

- ``A(s)  = ∫ e^{ν} dw/2πi`` over ``Re w = −ε`` (equal to ``λ Ai(λ s)``, ``λ = 2^{−2/3}``),
- ``C(s)  = ∫ e^{ν}/(1 + σw) dw/2πi``, which obeys ``C′ = σ (A − C)``.

``AiryAi`` is served by ``scipy.special.airy``. ``AiryOracle`` is an independent
extended-precision evaluation (mpmath Maclaurin series for ``|x| ≤ 8``,
asymptotic expansions truncated at the smallest term beyond).

Key Classes
-----------
- ``AiryValue`` : ``Ai`` and ``Ai′`` at one point.

Key Functions
-------------
- ``AiryAi`` : Ai and Ai′ of a real argument.
- ``AiryAiArray`` : Vectorized Ai and Ai′.
- ``AiryOracle`` : Extended-precision Ai and Ai′.
- ``PhaseNu`` : The phase ν(w, s).
- ``SeedA`` / ``SeedAPrime`` / ``SeedASecond`` : A, A′, A″ by contour quadrature.
- ``SeedC`` : The closure seed C.
- ``DetermineClosureSign`` : Finite-difference test of ``C′ = σ (A − C)``.
"""

import logging
import math
from dataclasses import dataclass

import numpy as np
from mpmath import mp
from scipy.special import airy

from .config import RunConfig
from .contour_quadrature import ContourIntegral, VerticalContour
from .errors import ArgumentError, DomainError

logger = logging.getLogger(__name__)

AIRY_MAX_ARGUMENT = 50.0
SEED_MAX_ARGUMENT = 50.0
SERIES_SWITCHOVER = 8.0
AIRY_SCALE = 2.0 ** (-2.0 / 3.0)
VALID_BACKENDS = ["scipy", "series"]


@dataclass(frozen=True)
class AiryValue:
    """Airy function value and derivative at a real point."""

    ai: float
    aiPrime: float


def _CheckAiryArgument(x: float) -> float:

    if isinstance(x, bool) or not isinstance(x, (int, float, np.integer, np.floating)):

        raise TypeError(
            f'Unexpected type for parameter "x". Expected type: float. Given type: {type(x)}'
        )

    x = float(x)

    if not math.isfinite(x) or abs(x) > AIRY_MAX_ARGUMENT:

        raise DomainError(
            f"Airy argument must be finite with |x| <= {AIRY_MAX_ARGUMENT:g}",
            {"x": x},
        )

    return x


def AiryAi(x: float, backend: str = "scipy") -> AiryValue:
    """
    Airy function ``Ai(x)`` and its derivative for real ``x``.

    Parameters
    ----------
    x : float
        Finite argument with ``|x| ≤ 50``.
    backend : str, optional
        ``scipy`` (default) or ``series`` for the extended-precision oracle.

    Returns
    -------
    AiryValue
        ``Ai(x)`` and ``Ai′(x)``.

    Raises
    ------
    DomainError
        If ``x`` is non-finite or out of range.

    Examples
    --------
    >>> from PyPainleveTau import AiryAi
    >>> AiryAi(0.0).ai
    0.3550280538878172
    """

    x = _CheckAiryArgument(x)

    if backend == "series":

        return AiryOracle(x)

    if backend != "scipy":

        raise ArgumentError(f"Invalid Airy backend: {backend!r}\n\nValid backends: {VALID_BACKENDS}")

    ai, aiPrime, _, _ = airy(x)

    return AiryValue(float(ai), float(aiPrime))


def AiryAiArray(x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized ``(Ai(x), Ai′(x))`` with the same domain checks as ``AiryAi``."""

    x = np.asarray(x, dtype=float)

    if not np.all(np.isfinite(x)) or np.any(np.abs(x) > AIRY_MAX_ARGUMENT):

        raise DomainError(
            f"Airy arguments must be finite with |x| <= {AIRY_MAX_ARGUMENT:g}",
            {"min": float(np.min(x)), "max": float(np.max(x))},
        )

    ai, aiPrime, _, _ = airy(x)

    return ai, aiPrime


def _AiryMaclaurin(x) -> tuple:

    c1 = 1 / (mp.cbrt(9) * mp.gamma(mp.mpf(2) / 3))
    c2 = 1 / (mp.cbrt(3) * mp.gamma(mp.mpf(1) / 3))
    cube = x**3

    fTerm, gTerm, fPrimeTerm, gPrimeTerm = mp.mpf(1), x, x * x / 2, mp.mpf(1)
    f, g, fPrime, gPrime = fTerm, gTerm, fPrimeTerm, gPrimeTerm

    for k in range(1, 400):

        fTerm = fTerm * cube / ((3 * k - 1) * (3 * k))
        gTerm = gTerm * cube / ((3 * k) * (3 * k + 1))
        fPrimeTerm = fPrimeTerm * cube / ((3 * k) * (3 * k + 2))
        gPrimeTerm = gPrimeTerm * cube / ((3 * k) * (3 * k - 2))

        f += fTerm
        g += gTerm
        fPrime += fPrimeTerm
        gPrime += gPrimeTerm

        largest = max(abs(fTerm), abs(gTerm), abs(fPrimeTerm), abs(gPrimeTerm))

        if largest <= mp.eps * (1 + abs(f) + abs(g)):

            break

    return c1 * f - c2 * g, c1 * fPrime - c2 * gPrime


def _AsymptoticTerms(zeta) -> tuple[list, list]:
    """``u_k/ζ^k`` and ``v_k/ζ^k`` up to the smallest term."""

    uCoefficient = mp.mpf(1)
    uTerms = [mp.mpf(1)]
    vTerms = [mp.mpf(1)]

    for k in range(1, 200):

        uCoefficient = (
            uCoefficient * (6 * k - 5) * (6 * k - 3) * (6 * k - 1) / ((2 * k - 1) * 216 * k)
        )
        vCoefficient = -uCoefficient * (6 * k + 1) / (6 * k - 1)
        uTerm = uCoefficient / zeta**k
        vTerm = vCoefficient / zeta**k

        if abs(uTerm) >= abs(uTerms[-1]) or abs(vTerm) >= abs(vTerms[-1]):

            break

        uTerms.append(uTerm)
        vTerms.append(vTerm)

        if abs(uTerm) < mp.eps and abs(vTerm) < mp.eps:

            break

    return uTerms, vTerms


def _AiryAsymptoticPositive(x) -> tuple:

    zeta = 2 * x * mp.sqrt(x) / 3
    uTerms, vTerms = _AsymptoticTerms(zeta)
    uSum = mp.fsum((-1) ** k * term for k, term in enumerate(uTerms))
    vSum = mp.fsum((-1) ** k * term for k, term in enumerate(vTerms))
    prefactor = mp.exp(-zeta) / (2 * mp.sqrt(mp.pi))

    return prefactor * uSum / mp.root(x, 4), -prefactor * mp.root(x, 4) * vSum


def _AiryAsymptoticNegative(x) -> tuple:

    z = -x
    zeta = 2 * z * mp.sqrt(z) / 3
    uTerms, vTerms = _AsymptoticTerms(zeta)

    def SplitSums(terms: list) -> tuple:

        even = mp.fsum((-1) ** (k // 2) * term for k, term in enumerate(terms) if k % 2 == 0)
        odd = mp.fsum((-1) ** (k // 2) * term for k, term in enumerate(terms) if k % 2 == 1)

        return even, odd

    uEven, uOdd = SplitSums(uTerms)
    vEven, vOdd = SplitSums(vTerms)
    cosine = mp.cos(zeta - mp.pi / 4)
    sine = mp.sin(zeta - mp.pi / 4)
    root = mp.root(z, 4)
    ai = (cosine * uEven + sine * uOdd) / (mp.sqrt(mp.pi) * root)
    aiPrime = root * (sine * vEven - cosine * vOdd) / mp.sqrt(mp.pi)

    return ai, aiPrime


def AiryOracle(x: float, dps: int = 30) -> AiryValue:
    """
    Extended-precision ``Ai`` and ``Ai′``.

    Sums the two Maclaurin series for ``|x| ≤ 8`` and the asymptotic expansions,
    truncated at their smallest term, for ``|x| > 8``, in mpmath arithmetic with
    ``dps + 20`` working digits; the result is rounded to double.

    Parameters
    ----------
    x : float
        Finite argument with ``|x| ≤ 50``.
    dps : int, optional
        Target decimal digits (default 30).

    Returns
    -------
    AiryValue
        Correctly rounded values up to the asymptotic truncation error
        (relative ``≈ e^{−(4/3)|x|^{3/2}}`` beyond the switchover).
    """

    x = _CheckAiryArgument(x)

    with mp.workdps(dps + 20):

        argument = mp.mpf(x)

        if abs(argument) <= SERIES_SWITCHOVER:

            ai, aiPrime = _AiryMaclaurin(argument)

        elif argument > 0:

            ai, aiPrime = _AiryAsymptoticPositive(argument)

        else:

            ai, aiPrime = _AiryAsymptoticNegative(argument)

        return AiryValue(float(ai), float(aiPrime))


def PhaseNu(w: complex | np.ndarray, s: float, signNu: int = 1) -> complex | np.ndarray:
    """
    Phase ``ν(w, s) = signNu·s·w − (4/3)w³``.

    With ``signNu = +1``, ``∂_w ν = s − 4w²`` and ``∂_s ν = w``; ``e^{ν}`` decays
    like ``exp(−4ε y²)`` on ``Re w = −ε`` and ``e^{−ν}`` on ``Re w = +ε``.

    Examples
    --------
    >>> PhaseNu(1.0, 0.0)
    -1.3333333333333333
    """

    return signNu * s * w - (4.0 / 3.0) * w**3


def _CheckSeedArgument(s: float) -> float:

    if isinstance(s, bool) or not isinstance(s, (int, float, np.integer, np.floating)):

        raise TypeError(
            f'Unexpected type for parameter "s". Expected type: float. Given type: {type(s)}'
        )

    if not math.isfinite(s) or abs(s) > SEED_MAX_ARGUMENT:

        raise DomainError(f"Seed argument must satisfy |s| <= {SEED_MAX_ARGUMENT:g}", {"s": s})

    return float(s)


def _SeedMoment(s: float, cfg: RunConfig | None, multiplier) -> float:

    cfg = cfg or RunConfig()
    s = _CheckSeedArgument(s)
    contour = VerticalContour("left", cfg.eps, s, cfg.quadOrder, cfg.tailTol)
    nodes = contour.nodes
    values = np.exp(PhaseNu(nodes, s, cfg.signNu)) * multiplier(nodes)

    return float(ContourIntegral(values, contour).real)


def SeedA(s: float, cfg: RunConfig | None = None) -> float:
    """
    ``A(s) = ∫_{Re w = −ε} e^{ν(w,s)} dw/2πi``.

    Satisfies ``4A″ = sA`` and equals ``2^{−2/3} Ai(2^{−2/3} s)``.
    """

    return _SeedMoment(s, cfg, lambda w: 1.0)


def SeedAPrime(s: float, cfg: RunConfig | None = None) -> float:
    """``A′(s) = ∫ ∂_sν e^{ν} dw/2πi``."""

    signNu = (cfg or RunConfig()).signNu

    return _SeedMoment(s, cfg, lambda w: signNu * w)


def SeedASecond(s: float, cfg: RunConfig | None = None) -> float:
    """``A″(s) = ∫ w² e^{ν} dw/2πi``."""

    return _SeedMoment(s, cfg, lambda w: w * w)


def SeedC(s: float, cfg: RunConfig | None = None, sigma: int = 1) -> float:
    """
    Closure seed ``C(s) = ∫ e^{ν(w,s)}/(1 + σw) dw/2πi``.

    ``σ = +1`` (default) puts the pole at ``w = −1``; ``σ = −1`` gives
    ``∫ e^{ν}/(1 − w)``, for which ``(1 − ∂_s) C = A``. Both satisfy
    ``C′ = σ (A − C)``.

    Raises
    ------
    ContourCollisionError
        If the contour shift equals 1.
    """

    if sigma not in (1, -1):

        raise ArgumentError(f"Closure sign must be +1 or -1, got {sigma}")

    return _SeedMoment(s, cfg, lambda w: 1.0 / (1.0 + sigma * w))


def DetermineClosureSign(
    cfg: RunConfig | None = None,
    sSamples: tuple[float, ...] = (0.0, 1.0),
    h: float = 1e-4,
    sigma: int = 1,
) -> tuple[int, float]:
    """
    Decide the sign in ``C′ = ±(A − C)`` for the seed ``SeedC(·, sigma)``.

    ``C′`` is taken by central differences with step ``h`` and compared against
    ``±(A − C)`` at every sample point.

    Returns
    -------
    tuple[int, float]
        The sign with the smaller maximal residual, and that residual.
    """

    residuals = {1: 0.0, -1: 0.0}

    for s in sSamples:

        derivative = (SeedC(s + h, cfg, sigma) - SeedC(s - h, cfg, sigma)) / (2.0 * h)
        difference = SeedA(s, cfg) - SeedC(s, cfg, sigma)

        for sign in residuals:

            residuals[sign] = max(residuals[sign], abs(derivative - sign * difference))

    best = min(residuals, key=residuals.get)
    logger.debug(f"Closure sign residuals for sigma={sigma}: {residuals}")

    return best, residuals[best]
