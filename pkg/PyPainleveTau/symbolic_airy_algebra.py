# PyPainleveTau/symbolic_airy_algebra.py

"""
Symbolic Airy Algebra
=====================

Exact arithmetic on combinations ``p(s)·A + q(s)·A′ + r(s)·C`` with rational
polynomial coefficients, closed under ``d/ds`` through

    A″ = (s/4)·A,        C′ = σ·(A − C).

The minor-expansion coefficients are the contour integrals

    I_k(s) = ∫ e^{ν(w,s)} (w − σ)^k / (w + σ)^{k+2} dw/2πi,

generated from ``I_0 = −σ(4∂² − s)C`` by ``I_k = λ/(k+1)·D̃ I_{k−1}`` with
``D̃ = 2(4∂² − s)(∂ − σ)²`` and ``λ = σ/4``. The coefficient pair is
``α_mⁿ = β_nᵐ = κ/(m! n!)·I_{m+n}``. Polynomials are sympy ``Poly`` objects over
``QQ``; floating point enters only in ``EvalSymFn``.

Key Classes
-----------
- ``SymbolicFunction`` : ``p·A + q·A′ + r·C`` with its closure sign.
- ``Coefficient`` : A minor-expansion coefficient in closed form.

Key Functions
-------------
- ``Differentiate`` : Exact ``d/ds``.
- ``ApplyDTilde`` : ``2(∂ − shift)²(4∂² − s)`` in either order.
- ``SeedCoefficient`` : ``I_0`` in the algebra.
- ``IntegralK`` : ``I_k`` in the algebra.
- ``CoeffAlpha`` / ``CoeffBeta`` : Closed-form coefficients.
- ``RecurseInM`` / ``RecurseInN`` : One recursion step in either index.
- ``EvalSymFn`` : Numerical value through the quadrature seeds.
- ``ChiIntegrals`` / ``AlphaQuadratureOracle`` : Direct quadrature of ``I_k``.
- ``DetermineRecursionStep`` : Oracle choice of ``λ`` and the operator order.
- ``PolyCoefficients`` : Ascending exact coefficients of a polynomial.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np
from numpy.polynomial import polynomial
from sympy import Poly, QQ, Rational, Symbol

from .config import PhaseConvention, RunConfig
from .contour_quadrature import ContourIntegral, VerticalContour
from .errors import ArgumentError, DepthGuardError
from .special_functions import PhaseNu, SeedA, SeedAPrime, SeedC

logger = logging.getLogger(__name__)

S = Symbol("s")
MAX_DEPTH = 40
MAX_ORACLE_DEPTH = 12
VALID_ORDERS = ["airy_first", "shift_first"]
VALID_PREFACTORS = ["derived", "printed"]
VALID_SEED_VARIANTS = ["airy", "unit"]
RECURSION_CANDIDATES = [Fraction(sign, d) for d in (1, 2, 4) for sign in (-1, 1)]


def MakePoly(coefficients: list[int | Fraction] | None = None) -> Poly:
    """Polynomial in ``s`` over ``QQ`` from ascending coefficients."""

    coefficients = coefficients or [0]
    descending = [Rational(c.numerator, c.denominator) if isinstance(c, Fraction) else Rational(c)
                  for c in reversed(coefficients)]

    return Poly(descending, S, domain=QQ)


def PolyCoefficients(poly: Poly) -> list[Fraction]:
    """
    Ascending exact coefficients without trailing zeros (``[]`` for zero).

    Examples
    --------
    >>> PolyCoefficients(MakePoly([1, 0, Fraction(1, 4)]))
    [Fraction(1, 1), Fraction(0, 1), Fraction(1, 4)]
    """

    if poly.is_zero:

        return []

    return [Fraction(int(c.p), int(c.q)) for c in reversed(poly.all_coeffs())]


_ZERO = MakePoly([0])
_ONE = MakePoly([1])
_S = MakePoly([0, 1])


@dataclass(frozen=True)
class SymbolicFunction:
    """
    ``p(s)·A(s) + q(s)·A′(s) + r(s)·C(s)``.

    Attributes
    ----------
    p, q, r : Poly
        Coefficients over ``QQ``.
    sigma : int
        Closure sign of ``C``: ``C′ = sigma·(A − C)``.
    """

    p: Poly
    q: Poly
    r: Poly
    sigma: int = -1

    @classmethod
    def A(cls, sigma: int = -1) -> "SymbolicFunction":

        return cls(_ONE, _ZERO, _ZERO, sigma)

    @classmethod
    def APrime(cls, sigma: int = -1) -> "SymbolicFunction":

        return cls(_ZERO, _ONE, _ZERO, sigma)

    @classmethod
    def C(cls, sigma: int = -1) -> "SymbolicFunction":

        return cls(_ZERO, _ZERO, _ONE, sigma)

    @classmethod
    def Zero(cls, sigma: int = -1) -> "SymbolicFunction":

        return cls(_ZERO, _ZERO, _ZERO, sigma)

    def IsZero(self) -> bool:

        return self.p.is_zero and self.q.is_zero and self.r.is_zero

    def _Check(self, other: "SymbolicFunction") -> None:

        if self.sigma != other.sigma:

            raise ArgumentError(
                f"Cannot combine closure signs {self.sigma} and {other.sigma}"
            )

    def __add__(self, other: "SymbolicFunction") -> "SymbolicFunction":

        self._Check(other)

        return SymbolicFunction(self.p + other.p, self.q + other.q, self.r + other.r, self.sigma)

    def __sub__(self, other: "SymbolicFunction") -> "SymbolicFunction":

        self._Check(other)

        return SymbolicFunction(self.p - other.p, self.q - other.q, self.r - other.r, self.sigma)

    def Scale(self, factor: int | Fraction) -> "SymbolicFunction":
        """Multiply by an exact rational."""

        factor = Fraction(factor)
        rational = Rational(factor.numerator, factor.denominator)

        return SymbolicFunction(
            self.p * rational, self.q * rational, self.r * rational, self.sigma
        )

    def MultiplyPoly(self, poly: Poly) -> "SymbolicFunction":
        """Multiply by a polynomial in ``s``."""

        return SymbolicFunction(self.p * poly, self.q * poly, self.r * poly, self.sigma)

    def Coefficients(self) -> dict[str, list[Fraction]]:
        """Ascending exact coefficients of ``p``, ``q`` and ``r``."""

        return {
            "p": PolyCoefficients(self.p),
            "q": PolyCoefficients(self.q),
            "r": PolyCoefficients(self.r),
        }

    def __str__(self) -> str:

        parts = []

        for name, poly in (("A", self.p), ("A'", self.q), ("C", self.r)):

            if not poly.is_zero:

                parts.append(f"({poly.as_expr()})*{name}")

        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class Coefficient:
    """Closed form of ``α_mⁿ`` (or ``β_nᵐ``) without its factor ``κ``."""

    m: int
    n: int
    sym: SymbolicFunction
    kappaPower: int = 1


def Differentiate(f: SymbolicFunction) -> SymbolicFunction:
    """
    Exact ``d/ds`` with ``A″ = (s/4)A`` and ``C′ = σ(A − C)``.

    Examples
    --------
    >>> Differentiate(SymbolicFunction.A()) == SymbolicFunction.APrime()
    True
    """

    if not isinstance(f, SymbolicFunction):

        raise TypeError(
            f'Unexpected type for parameter "f". Expected type: SymbolicFunction. Given type: {type(f)}'
        )

    sigma = f.sigma
    quarter = Rational(1, 4)

    return SymbolicFunction(
        f.p.diff(S) + f.q * _S * quarter + f.r * sigma,
        f.p + f.q.diff(S),
        f.r.diff(S) - f.r * sigma,
        sigma,
    )


def _AiryOperator(f: SymbolicFunction) -> SymbolicFunction:

    return Differentiate(Differentiate(f)).Scale(4) - f.MultiplyPoly(_S)


def _UnitOperator(f: SymbolicFunction) -> SymbolicFunction:

    return Differentiate(Differentiate(f)).Scale(4) - f


def _ShiftOperator(f: SymbolicFunction, shift: int) -> SymbolicFunction:

    first = Differentiate(f)

    return Differentiate(first) - first.Scale(2 * shift) + f.Scale(shift * shift)


def ApplyDTilde(
    f: SymbolicFunction, order: str = "airy_first", shift: int = 1
) -> SymbolicFunction:
    """
    ``D̃ f = 2(∂ − shift)²(4∂² − s) f``.

    Parameters
    ----------
    f : SymbolicFunction
        Operand.
    order : str, optional
        ``airy_first`` applies ``(4∂² − s)`` first (default); ``shift_first``
        applies ``(∂ − shift)²`` first.
    shift : int, optional
        ``+1`` or ``−1``.

    Examples
    --------
    >>> ApplyDTilde(SymbolicFunction.A()).IsZero()
    True
    """

    if order not in VALID_ORDERS:

        raise ArgumentError(f"Invalid operator order: {order!r}\n\nValid orders: {VALID_ORDERS}")

    if order == "airy_first":

        result = _ShiftOperator(_AiryOperator(f), shift)

    else:

        result = _AiryOperator(_ShiftOperator(f, shift))

    return result.Scale(2)


def SeedCoefficient(sigma: int = -1, variant: str = "airy") -> SymbolicFunction:
    """
    ``I_0 = ∫ e^{ν}/(w + σ)² dw/2πi`` as ``−σ(4∂² − s)C``.

    ``variant="unit"`` replaces ``(4∂² − s)`` by ``(4∂² − 1)``; it does not
    reproduce the integral and is kept for comparison.
    """

    if sigma not in (1, -1):

        raise ArgumentError(f"Closure sign must be +1 or -1, got {sigma}")

    if variant not in VALID_SEED_VARIANTS:

        raise ArgumentError(
            f"Invalid seed variant: {variant!r}\n\nValid variants: {VALID_SEED_VARIANTS}"
        )

    operator = _AiryOperator if variant == "airy" else _UnitOperator

    return operator(SymbolicFunction.C(sigma)).Scale(-sigma)


@lru_cache(maxsize=None)
def _DTildePower(k: int, sigma: int, order: str, variant: str) -> SymbolicFunction:

    if k == 0:

        return SeedCoefficient(sigma, variant)

    return ApplyDTilde(_DTildePower(k - 1, sigma, order, variant), order, sigma)


def _CheckIndices(m: int, n: int) -> None:

    for name, value in (("m", m), ("n", n)):

        if isinstance(value, bool) or not isinstance(value, (int, np.integer)):

            raise TypeError(
                f'Unexpected type for parameter "{name}". Expected type: int. Given type: {type(value)}'
            )

        if value < 0:

            raise ArgumentError(f"Index {name} must be nonnegative, got {value}")

    if m + n > MAX_DEPTH:

        raise DepthGuardError(
            f"Coefficient index m+n={m + n} exceeds the supported depth {MAX_DEPTH}"
        )


def IntegralK(
    k: int, convention: PhaseConvention | None = None, variant: str = "airy"
) -> SymbolicFunction:
    """``I_k = λ^k/(k+1)!·D̃^k I_0`` in the algebra."""

    convention = convention or PhaseConvention()
    _CheckIndices(k, 0)
    power = _DTildePower(k, convention.sigmaC, convention.operatorOrder, variant)

    return power.Scale(convention.recursionStep**k / math.factorial(k + 1))


def CoeffAlpha(
    m: int,
    n: int,
    convention: PhaseConvention | None = None,
    prefactor: str = "derived",
    seedVariant: str = "airy",
) -> Coefficient:
    """
    Closed form of ``α_mⁿ / κ``.

    ``derived``: ``λ^{m+n}/(m! n! (m+n+1)!)·D̃^{m+n} I_0``; ``printed`` uses
    ``1/((m!)² n! (m+n+1)!)`` instead.

    Raises
    ------
    DepthGuardError
        If ``m + n > 40``.
    """

    convention = convention or PhaseConvention()
    _CheckIndices(m, n)

    if prefactor not in VALID_PREFACTORS:

        raise ArgumentError(
            f"Invalid prefactor: {prefactor!r}\n\nValid prefactors: {VALID_PREFACTORS}"
        )

    k = m + n
    power = _DTildePower(k, convention.sigmaC, convention.operatorOrder, seedVariant)
    denominator = math.factorial(m) * math.factorial(n) * math.factorial(k + 1)

    if prefactor == "printed":

        denominator *= math.factorial(m)

    return Coefficient(m, n, power.Scale(convention.recursionStep**k / denominator))


def CoeffBeta(
    n: int,
    m: int,
    convention: PhaseConvention | None = None,
    prefactor: str = "derived",
    seedVariant: str = "airy",
) -> Coefficient:
    """Closed form of ``β_nᵐ / κ``; equal to ``α_mⁿ`` for the derived prefactor."""

    coefficient = CoeffAlpha(n, m, convention, prefactor, seedVariant)

    return Coefficient(m, n, coefficient.sym)


def RecurseInM(
    coefficient: Coefficient, convention: PhaseConvention | None = None
) -> Coefficient:
    """``α_{m+1}ⁿ = λ/((m+1)(m+n+2))·D̃ α_mⁿ``."""

    convention = convention or PhaseConvention()
    m, n = coefficient.m, coefficient.n
    _CheckIndices(m + 1, n)
    step = ApplyDTilde(coefficient.sym, convention.operatorOrder, convention.sigmaC)

    return Coefficient(m + 1, n, step.Scale(convention.recursionStep / ((m + 1) * (m + n + 2))))


def RecurseInN(
    coefficient: Coefficient, convention: PhaseConvention | None = None
) -> Coefficient:
    """``α_mⁿ⁺¹ = λ/((n+1)(m+n+2))·D̃ α_mⁿ``."""

    convention = convention or PhaseConvention()
    m, n = coefficient.m, coefficient.n
    _CheckIndices(m, n + 1)
    step = ApplyDTilde(coefficient.sym, convention.operatorOrder, convention.sigmaC)

    return Coefficient(m, n + 1, step.Scale(convention.recursionStep / ((n + 1) * (m + n + 2))))


def _Horner(poly: Poly, s: float) -> float:

    if poly.is_zero:

        return 0.0

    return float(polynomial.polyval(s, [float(c) for c in PolyCoefficients(poly)]))


def EvalSymFn(f: SymbolicFunction, s: float, cfg: RunConfig | None = None) -> float:
    """
    ``p(s)·A(s) + q(s)·A′(s) + r(s)·C(s)`` with quadrature seeds.

    Examples
    --------
    >>> EvalSymFn(SymbolicFunction.Zero(), 1.0)
    0.0
    """

    value = 0.0

    if not f.p.is_zero:

        value += _Horner(f.p, s) * SeedA(s, cfg)

    if not f.q.is_zero:

        value += _Horner(f.q, s) * SeedAPrime(s, cfg)

    if not f.r.is_zero:

        value += _Horner(f.r, s) * SeedC(s, cfg, f.sigma)

    return value


def ChiIntegrals(
    kMax: int, s: float, cfg: RunConfig | None = None, sigma: int | None = None
) -> np.ndarray:
    """
    ``I_k(s) = ∫ e^{ν}(w − σ)^k/(w + σ)^{k+2} dw/2πi`` for ``k = 0..kMax``.

    Returns
    -------
    np.ndarray
        Real parts, length ``kMax + 1``.
    """

    cfg = cfg or RunConfig()
    sigma = cfg.sigmaC if sigma is None else sigma
    contour = VerticalContour("left", cfg.eps, s, cfg.quadOrder, cfg.tailTol)
    w = contour.nodes
    base = np.exp(PhaseNu(w, s, cfg.signNu)) / (w + sigma) ** 2
    ratio = (w - sigma) / (w + sigma)
    powers = ratio[None, :] ** np.arange(kMax + 1)[:, None]

    return np.real(ContourIntegral(powers * base[None, :], contour))


def AlphaQuadratureOracle(
    m: int,
    n: int,
    s: float,
    cfg: RunConfig | None = None,
    kappa: float | None = None,
) -> float:
    """
    ``κ/(m! n!)·I_{m+n}(s)`` by direct quadrature (``m + n ≤ 12``).
    """

    cfg = cfg or RunConfig()
    kappa = cfg.kappa if kappa is None else kappa
    _CheckIndices(m, n)

    if m + n > MAX_ORACLE_DEPTH:

        raise DepthGuardError(
            f"Quadrature oracle supports m+n <= {MAX_ORACLE_DEPTH}, got {m + n}"
        )

    integral = ChiIntegrals(m + n, s, cfg)[-1]

    return kappa * integral / (math.factorial(m) * math.factorial(n))


def DetermineRecursionStep(
    cfg: RunConfig | None = None, sSamples: tuple[float, ...] = (0.5, 1.0, 1.5)
) -> tuple[Fraction, str, float]:
    """
    Choose ``λ`` and the ``D̃`` operator order from the ``(m, n) = (0, 1)`` oracle.

    Every candidate ``λ ∈ {±1, ±1/2, ±1/4}`` and order is scored by
    ``max_s |I_1(s) − λ/2·D̃ I_0(s)| / |I_1(s)|`` with ``I_0, I_1`` by quadrature.

    Returns
    -------
    tuple[Fraction, str, float]
        ``(λ, order, relativeResidual)`` of the best candidate.
    """

    cfg = cfg or RunConfig()
    sigma = cfg.sigmaC
    seed = SeedCoefficient(sigma)
    scores = {}

    for order in VALID_ORDERS:

        image = ApplyDTilde(seed, order, sigma)
        samples = [(ChiIntegrals(1, s, cfg)[1], EvalSymFn(image, s, cfg)) for s in sSamples]

        for step in RECURSION_CANDIDATES:

            scores[(step, order)] = max(
                abs(target - float(step) / 2.0 * value) / abs(target) for target, value in samples
            )

    (step, order), residual = min(scores.items(), key=lambda item: item[1])
    logger.debug(f"Recursion step {step} with order {order}, relative residual {residual:.3e}")

    return step, order, residual
