# PyPainleveTau/minor_expansion.py

"""
Minor Expansion
===============

τ as a sum over Maya diagrams. With ``α, β`` the pairing coefficients of the
Hardy-space basis and ``g`` its diagonal Gram normalization,
``Â = diag(1/g)·α`` and ``B̂ = diag(1/g)·β``, and Cauchy–Binet gives

    det(I − ÂB̂) = Σ_{|p| = |h| = k} (−1)^k det Â[p, h] · det B̂[h, p].

A particle at ``m + ½`` selects row ``m`` of ``Â``, a hole at ``−(n + ½)``
selects column ``n``.

Key Classes
-----------
- ``MayaDiagram`` : Particles and holes on the half-integer lattice.
- ``YoungDiagram`` : Weakly decreasing rows.
- ``CoefficientTable`` : ``α``, ``β`` and the Gram diagonals at one ``(s, κ)``.

Key Functions
-------------
- ``BasisFn`` : Hardy-space basis functions ``e±ⁿ``.
- ``GramDiag`` / ``GramMatrix`` : Inner products of the basis by quadrature.
- ``MayaToYoung`` / ``YoungWeight`` : Path construction and box count.
- ``EnumerateMaya`` : Balanced diagrams in a window.
- ``BuildCoefficientTable`` : Symbolic or quadrature coefficients.
- ``TauMinor`` : The truncated minor expansion.
- ``TauTruncatedDet`` : ``det(I − ÂB̂)`` on the truncation.
- ``SelectBasisFamily`` : Closure family reproducing the Widom determinant.
"""

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterator

import numpy as np

from .airy_fredholm import CheckKappa, TauResult
from .config import RunConfig
from .contour_quadrature import ImaginaryAxisGrid
from .determinants import LogDeterminant
from .errors import ArgumentError, ContourCollisionError
from .symbolic_airy_algebra import MAX_DEPTH, ChiIntegrals, EvalSymFn, IntegralK
from .widom_determinant import TauWidom

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)
MAX_ENUMERATION_K = 6
MAX_ENUMERATION_POSITION = Fraction(21, 2)
MAX_TABLE_SIZE = 64
MAX_MINOR_PAIRS = 4_000_000
GRAM_ORDER = 400
TRUNCATION_RATIO = 1e-6
VALID_SOURCES = ["auto", "symbolic", "quadrature"]
VALID_WEIGHT_KINDS = ["count", "young"]


def _HalfInteger(value: Fraction | float | int) -> Fraction:

    value = Fraction(value)

    if (value - HALF).denominator != 1:

        raise ArgumentError(f"Position {value} is not a half-integer")

    return value


@dataclass(frozen=True)
class MayaDiagram:
    """
    Finite particle and hole sets.

    Attributes
    ----------
    particles : tuple[Fraction, ...]
        Positive half-integers, ascending.
    holes : tuple[Fraction, ...]
        Negative half-integers, ascending.
    """

    particles: tuple[Fraction, ...] = ()
    holes: tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:

        particles = tuple(sorted(_HalfInteger(p) for p in self.particles))
        holes = tuple(sorted(_HalfInteger(h) for h in self.holes))

        if any(p < 0 for p in particles):

            raise ArgumentError(f"Particles must be positive half-integers, got {particles}")

        if any(h > 0 for h in holes):

            raise ArgumentError(f"Holes must be negative half-integers, got {holes}")

        if len(set(particles)) != len(particles) or len(set(holes)) != len(holes):

            raise ArgumentError("Particle and hole positions must be distinct")

        object.__setattr__(self, "particles", particles)
        object.__setattr__(self, "holes", holes)

    @classmethod
    def FromIndices(cls, rows: tuple[int, ...], columns: tuple[int, ...]) -> "MayaDiagram":
        """Particles ``m + ½`` for rows ``m`` and holes ``−(n + ½)`` for columns ``n``."""

        return cls(
            tuple(Fraction(m) + HALF for m in rows),
            tuple(-(Fraction(n) + HALF) for n in columns),
        )

    @property
    def balanced(self) -> bool:

        return len(self.particles) == len(self.holes)

    @property
    def k(self) -> int:

        return len(self.particles)

    def RowIndices(self) -> tuple[int, ...]:

        return tuple(int(p - HALF) for p in self.particles)

    def ColumnIndices(self) -> tuple[int, ...]:

        return tuple(int(-h - HALF) for h in reversed(self.holes))

    def __str__(self) -> str:

        particles = ",".join(str(p) for p in self.particles)
        holes = ",".join(str(h) for h in self.holes)

        return f"{{{particles} | {holes}}}"


@dataclass(frozen=True)
class YoungDiagram:
    """Weakly decreasing positive rows; the empty tuple is the empty diagram."""

    rows: tuple[int, ...] = ()

    def __post_init__(self) -> None:

        rows = tuple(int(r) for r in self.rows)

        if any(r <= 0 for r in rows) or any(a < b for a, b in zip(rows, rows[1:])):

            raise ArgumentError(f"Young rows must be positive and weakly decreasing, got {rows}")

        object.__setattr__(self, "rows", rows)

    @property
    def size(self) -> int:

        return sum(self.rows)


@dataclass(frozen=True, eq=False)
class CoefficientTable:
    """
    Pairing coefficients and Gram normalization at one ``(s, κ)``.

    Attributes
    ----------
    nCut : int
        Truncation size.
    alpha, beta : np.ndarray
        ``nCut × nCut``; ``alpha[m, n] = beta[n, m]``, both include ``κ``.
    gramPlus, gramMinus : np.ndarray
        Positive Gram diagonals of ``e₊ⁿ`` and ``e₋ⁿ``.
    source : str
        ``symbolic`` or ``quadrature``.
    """

    nCut: int
    alpha: np.ndarray
    beta: np.ndarray
    gramPlus: np.ndarray
    gramMinus: np.ndarray
    s: float
    kappa: float
    source: str = "symbolic"
    sigma: int = -1

    @property
    def aHat(self) -> np.ndarray:

        return self.alpha / self.gramPlus[:, None]

    @property
    def bHat(self) -> np.ndarray:

        return self.beta / self.gramMinus[:, None]


def BasisFn(sign: str, n: int, z: complex) -> complex:
    """
    Basis functions of the Hardy spaces on the imaginary axis.

    ``e₊ⁿ(z) = (i/n!)·((1+z)/(z−1))ⁿ/(z−1)`` and
    ``e₋ⁿ(z) = (i/n!)·((z−1)/(z+1))ⁿ/(z+1)``.

    Raises
    ------
    ContourCollisionError
        At the pole ``z = 1`` (``+``) or ``z = −1`` (``−``).

    Examples
    --------
    >>> BasisFn("+", 2, 3.0)
    1j
    """

    if sign not in ("+", "-"):

        raise ArgumentError(f"Basis sign must be '+' or '-', got {sign!r}")

    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 0:

        raise ArgumentError(f"Basis index must be a nonnegative integer, got {n!r}")

    pole = 1.0 if sign == "+" else -1.0

    if np.any(np.asarray(z) == pole):

        raise ContourCollisionError(f"Basis function e{sign}^{n} has a pole at z = {pole:g}")

    if sign == "+":

        value = 1j / math.factorial(n) * ((1.0 + z) / (z - 1.0)) ** n / (z - 1.0)

    else:

        value = 1j / math.factorial(n) * ((z - 1.0) / (z + 1.0)) ** n / (z + 1.0)

    return value


def GramMatrix(sign: str, nMax: int, m: int = GRAM_ORDER) -> np.ndarray:
    """
    ``⟨eⁿ, eᵐ⟩ = ∫ eⁿ(iy)·conj(eᵐ(iy)) dy/2π`` for ``n, m ≤ nMax``.

    Quadrature on the full imaginary axis; returns a Hermitian matrix.
    """

    grid = ImaginaryAxisGrid(m)
    values = np.array([BasisFn(sign, n, grid.nodes) for n in range(nMax + 1)])
    measure = np.real(grid.weights / 1j) / (2.0 * np.pi)

    return (values * measure[None, :]) @ values.conj().T


def GramDiag(sign: str, n: int, cfg: RunConfig | None = None) -> float:
    """
    ``⟨eⁿ, eⁿ⟩`` by quadrature on ``iℝ``; equals ``1/(2(n!)²)``.

    Examples
    --------
    >>> round(GramDiag("+", 0), 12)
    0.5
    """

    cfg = cfg or RunConfig()

    if n > MAX_TABLE_SIZE:

        raise ArgumentError(f"Gram index must not exceed {MAX_TABLE_SIZE}, got {n}")

    return float(GramMatrix(sign, n, max(cfg.quadOrder, GRAM_ORDER))[n, n].real)


def MayaToYoung(diagram: MayaDiagram) -> YoungDiagram:
    """
    Young diagram traced by the path over the lattice.

    Filled positions are the holes and the positive half-integers that carry no
    particle; every other position is empty. Each empty position contributes a
    row equal to the number of filled positions below it.

    Examples
    --------
    >>> MayaToYoung(MayaDiagram((Fraction(5, 2),), (Fraction(-5, 2), Fraction(-1, 2)))).rows
    (4, 1)
    """

    particles = set(diagram.particles)
    holes = diagram.holes
    lowest = min(holes, default=-HALF)
    rows = []

    for particle in diagram.particles:

        seaBelow = int(particle - HALF) - sum(1 for p in particles if p < particle)
        rows.append(seaBelow + len(holes))

    position = -HALF

    while position > lowest:

        if position not in holes:

            rows.append(sum(1 for h in holes if h < position))

        position -= 1

    return YoungDiagram(tuple(sorted((r for r in rows if r > 0), reverse=True)))


def YoungWeight(diagram: MayaDiagram) -> int:
    """Number of boxes of ``MayaToYoung(diagram)``."""

    return MayaToYoung(diagram).size


def _CheckEnumeration(maxK: int, maxPos: Fraction) -> int:

    if not 0 <= maxK <= MAX_ENUMERATION_K:

        raise ArgumentError(f"maxK must lie in [0, {MAX_ENUMERATION_K}], got {maxK}")

    if not 0 < maxPos <= MAX_ENUMERATION_POSITION:

        raise ArgumentError(
            f"maxPos must lie in (0, {MAX_ENUMERATION_POSITION}], got {maxPos}"
        )

    return int(maxPos - HALF) + 1


def IterateMaya(maxK: int, maxPos: Fraction | float) -> Iterator[MayaDiagram]:
    """Balanced diagrams with ``k ≤ maxK`` and positions ``|x| ≤ maxPos``, by increasing ``k``."""

    maxPos = _HalfInteger(maxPos)
    positions = _CheckEnumeration(maxK, maxPos)

    for k in range(min(maxK, positions) + 1):

        for rows in combinations(range(positions), k):

            for columns in combinations(range(positions), k):

                yield MayaDiagram.FromIndices(rows, columns)


def EnumerateMaya(maxK: int, maxPos: Fraction | float) -> list[MayaDiagram]:
    """
    All balanced diagrams up to ``maxK`` excitations in the window ``|x| ≤ maxPos``.

    The count is ``Σ_k C(P, k)²`` with ``P`` admissible positions on each side.

    Examples
    --------
    >>> len(EnumerateMaya(2, Fraction(5, 2)))
    19
    """

    return list(IterateMaya(maxK, maxPos))


def _ResolveSource(source: str, nCut: int) -> str:

    if source not in VALID_SOURCES:

        raise ArgumentError(f"Invalid coefficient source: {source!r}\n\nValid sources: {VALID_SOURCES}")

    if source == "auto":

        return "symbolic" if 2 * (nCut - 1) <= MAX_DEPTH else "quadrature"

    return source


@lru_cache(maxsize=8)
def _GramDiagonal(sign: str, nCut: int) -> np.ndarray:

    diagonal = np.real(np.diag(GramMatrix(sign, nCut - 1))).copy()
    diagonal.setflags(write=False)

    return diagonal


def BuildCoefficientTable(
    s: float,
    kappa: float,
    nCut: int | None = None,
    cfg: RunConfig | None = None,
    source: str = "auto",
) -> CoefficientTable:
    """
    Evaluate ``α_mⁿ = β_nᵐ = κ/(m! n!)·I_{m+n}(s)`` for ``m, n < nCut``.

    Parameters
    ----------
    source : str, optional
        ``symbolic`` evaluates the closed forms, ``quadrature`` integrates
        ``I_k`` directly, ``auto`` (default) uses the symbolic engine while
        ``2(nCut − 1) ≤ 40``.
    """

    cfg = cfg or RunConfig()
    kappa = CheckKappa(kappa)
    nCut = cfg.nCut if nCut is None else nCut

    if not 1 <= nCut <= MAX_TABLE_SIZE:

        raise ArgumentError(f"nCut must lie in [1, {MAX_TABLE_SIZE}], got {nCut}")

    source = _ResolveSource(source, nCut)
    kMax = 2 * (nCut - 1)

    if source == "symbolic":

        convention = cfg.Convention()
        integrals = np.array([EvalSymFn(IntegralK(k, convention), s, cfg) for k in range(kMax + 1)])

    else:

        integrals = ChiIntegrals(kMax, s, cfg)

    factorials = np.array([float(math.factorial(m)) for m in range(nCut)])
    index = np.arange(nCut)
    alpha = kappa * integrals[index[:, None] + index[None, :]] / np.outer(factorials, factorials)

    return CoefficientTable(
        nCut=nCut,
        alpha=alpha,
        beta=alpha.T.copy(),
        gramPlus=_GramDiagonal("+", nCut),
        gramMinus=_GramDiagonal("-", nCut),
        s=float(s),
        kappa=kappa,
        source=source,
        sigma=cfg.sigmaC,
    )


def TauTruncatedDet(
    s: float,
    kappa: float,
    nCut: int | None = None,
    cfg: RunConfig | None = None,
    source: str = "auto",
    table: CoefficientTable | None = None,
) -> float:
    """
    ``det(I − ÂB̂)`` on the ``nCut × nCut`` truncation by dense factorization.

    Examples
    --------
    >>> TauTruncatedDet(1.0, 0.0, 4)
    1.0
    """

    kappa = CheckKappa(kappa)

    if kappa == 0.0:

        return 1.0

    table = table or BuildCoefficientTable(s, kappa, nCut, cfg, source)
    matrix = np.eye(table.nCut) - table.aHat @ table.bHat
    phase, logAbs = LogDeterminant(matrix)

    return phase.real * math.exp(logAbs)


def _ShellTerms(aHat: np.ndarray, bHat: np.ndarray, k: int) -> tuple[np.ndarray, np.ndarray]:
    """``(−1)^k det Â[p, h] det B̂[h, p]`` for all index sets of size ``k``."""

    size = aHat.shape[0]
    subsets = np.array(list(combinations(range(size), k)), dtype=int).reshape(-1, k)
    rows = subsets[:, None, :, None]
    columns = subsets[None, :, None, :]
    minorsA = np.linalg.det(aHat[rows, columns])
    minorsB = np.linalg.det(bHat[rows, columns])
    terms = (-1) ** k * minorsA * minorsB.T
    boxes = subsets.sum(axis=1) + k
    weights = boxes[:, None] + boxes[None, :] - k

    return terms, weights


def TauMinor(
    s: float,
    kappa: float,
    maxWeight: int | None = None,
    nCut: int | None = None,
    cfg: RunConfig | None = None,
    source: str = "auto",
    weightKind: str = "count",
    errorEstimate: bool = True,
) -> TauResult:
    """
    Truncated minor expansion of ``det(I − ÂB̂)``.

    Parameters
    ----------
    s : float
        Deformation parameter.
    kappa : float
        ``|κ| ≤ 1``.
    maxWeight : int or None, optional
        Largest diagram weight kept; ``cfg.maxWeight`` when None.
    nCut : int or None, optional
        Positions ``m + ½`` and ``−(n + ½)`` with ``m, n < nCut``.
    cfg : RunConfig or None, optional
        Supplies the conventions and quadrature settings.
    source : str, optional
        Coefficient source, see ``BuildCoefficientTable``.
    weightKind : str, optional
        ``count`` (weight ``|p| + |h|``, default) or ``young`` (Young boxes).
    errorEstimate : bool, optional
        Report the size of the highest included shell.

    Returns
    -------
    TauResult
        ``method="minor"``.

    Examples
    --------
    >>> TauMinor(1.0, 0.0).value
    1.0
    """

    cfg = cfg or RunConfig()
    kappa = CheckKappa(kappa)
    maxWeight = cfg.maxWeight if maxWeight is None else maxWeight
    nCut = cfg.nCut if nCut is None else nCut

    if maxWeight < 0:

        raise ArgumentError(f"maxWeight must be nonnegative, got {maxWeight}")

    if weightKind not in VALID_WEIGHT_KINDS:

        raise ArgumentError(
            f"Invalid weight kind: {weightKind!r}\n\nValid kinds: {VALID_WEIGHT_KINDS}"
        )

    if kappa == 0.0:

        return TauResult(1.0, 0.0, "minor", float(s), kappa, 0.0, cfg.Snapshot())

    table = BuildCoefficientTable(s, kappa, nCut, cfg, source)
    aHat, bHat = table.aHat, table.bHat
    maxK = min(nCut, maxWeight // 2 if weightKind == "count" else math.isqrt(maxWeight))
    value = 1.0
    lastShell = 0.0
    largestTop = 0.0

    for k in range(1, maxK + 1):

        if math.comb(nCut, k) ** 2 > MAX_MINOR_PAIRS:

            raise ArgumentError(
                f"Minor expansion with nCut={nCut} and k={k} is too large; lower nCut or maxWeight"
            )

        terms, weights = _ShellTerms(aHat, bHat, k)

        if weightKind == "young":

            terms = np.where(weights <= maxWeight, terms, 0.0)

        lastShell = float(np.sum(terms))
        largestTop = float(np.max(np.abs(terms)))
        value += lastShell

    if maxK < nCut and largestTop > TRUNCATION_RATIO * abs(value):

        logger.warning(
            f"Minor expansion truncated at weight {maxWeight} with a top term of {largestTop:.3e} "
            f"(tau = {value:.6e})"
        )

    return TauResult(
        value=value,
        imagResidual=0.0,
        method="minor",
        s=float(s),
        kappa=kappa,
        errorEstimate=abs(lastShell) if errorEstimate else 0.0,
        config=cfg.Snapshot(),
    )


@dataclass(frozen=True)
class BasisFamilyChoice:
    """Residuals of both closure families against the Widom determinant."""

    sigma: int
    residuals: dict[int, float] = field(default_factory=dict)


def SelectBasisFamily(
    cfg: RunConfig | None = None, s: float = 1.0, kappa: float = 0.25, nCut: int = 8
) -> BasisFamilyChoice:
    """
    Closure family ``σ`` whose truncated determinant reproduces ``TauWidom``.

    Coefficients come from quadrature so the choice does not depend on the
    recursion conventions.
    """

    cfg = cfg or RunConfig()
    reference = TauWidom(s, kappa, cfg, errorEstimate=False).value
    residuals = {}

    for sigma in (-1, 1):

        value = TauTruncatedDet(s, kappa, nCut, cfg.Replace(sigmaC=sigma), "quadrature")
        residuals[sigma] = abs(value - reference)

    best = min(residuals, key=residuals.get)
    logger.debug(f"Basis family residuals: {residuals}")

    return BasisFamilyChoice(best, residuals)
