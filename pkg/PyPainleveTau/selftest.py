# PyPainleveTau/selftest.py

"""
Self-Test
=========

Acceptance checks run by ``painlevetau selftest``: cross-determinant identity,
identity case, symbolic coefficients, minor expansion, the Painlevé II
relation, spectral convergence, Hilbert–Schmidt bounds, the contour collapse,
boundary behavior, special functions and combinatorics.

Key Classes
-----------
- ``SelfTestCheck`` : One named check with its tags.
- ``CheckResult`` : Outcome of a check.

Key Functions
-------------
- ``SelectChecks`` : Checks matching a filter string.
- ``RunSelfTest`` : Run checks and collect results.
- ``RenderResults`` : rich table of results.
"""

import math
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np
from rich.table import Table

from .airy_fredholm import TauAiry
from .config import RunConfig
from .errors import PainleveTauError
from .minor_expansion import EnumerateMaya, MayaDiagram, MayaToYoung, TauMinor, TauTruncatedDet
from .pii_ode_oracle import SolvePII, VerifyUSquared
from .pipelines import EvaluateTau
from .progress import TrackTask
from .special_functions import AIRY_SCALE, AiryAi, AiryOracle, SeedA
from .symbolic_airy_algebra import AlphaQuadratureOracle, CoeffAlpha, EvalSymFn
from .widom_determinant import HSNormSq, TauWidom, VerifyCollapse


@dataclass(frozen=True)
class CheckResult:

    name: str
    passed: bool
    detail: str
    elapsed: float


@dataclass(frozen=True)
class SelfTestCheck:

    name: str
    description: str
    tags: tuple[str, ...]
    run: Callable[[RunConfig], tuple[bool, str]]

    def Matches(self, pattern: str | None) -> bool:

        if not pattern:

            return True

        pattern = pattern.lower()
        haystack = [self.name.lower(), self.description.lower(), *self.tags]

        return any(pattern in item for item in haystack)


def _Verdict(error: float, limit: float) -> tuple[bool, str]:

    return bool(error <= limit), f"{error:.3e} (limit {limit:.0e})"


def _CheckCrossDeterminant(cfg: RunConfig) -> tuple[bool, str]:

    error = max(
        abs(
            TauWidom(s, kappa, cfg, errorEstimate=False).value
            - TauAiry(cfg.scaleC * s, kappa, cfg, errorEstimate=False).value
        )
        for s in (-2.0, -1.0, 0.0, 1.0, 2.0)
        for kappa in (0.25, 0.5, 0.9)
    )

    return _Verdict(error, 1e-6)


def _CheckIdentity(cfg: RunConfig) -> tuple[bool, str]:

    values = [EvaluateTau(method, 1.0, 0.0, cfg).value for method in ("airy", "widom", "minor")]

    return all(v == 1.0 for v in values), ", ".join(repr(v) for v in values)


def _CheckCoefficients(cfg: RunConfig) -> tuple[bool, str]:

    kappa = 0.5
    convention = cfg.Convention()
    error = 0.0

    for s in (0.0, 1.0, 2.0):

        for k in range(7):

            for m in range(k + 1):

                symbolic = kappa * EvalSymFn(CoeffAlpha(m, k - m, convention).sym, s, cfg)
                oracle = AlphaQuadratureOracle(m, k - m, s, cfg, kappa)
                error = max(error, abs(symbolic - oracle) / abs(oracle))

    return _Verdict(error, 1e-8)


def _CheckMinorExpansion(cfg: RunConfig) -> tuple[bool, str]:

    identity = max(
        abs(
            TauMinor(1.0, 0.25, 2 * nCut, nCut, cfg, errorEstimate=False).value
            - TauTruncatedDet(1.0, 0.25, nCut, cfg)
        )
        for nCut in (2, 4, 6)
    )
    widom = max(
        abs(
            TauMinor(s, kappa, 8, cfg=cfg, errorEstimate=False).value
            - TauWidom(s, kappa, cfg, errorEstimate=False).value
        )
        for s, kappa in ((1.0, 0.25), (2.0, 0.5))
    )
    passed = identity <= 1e-12 and widom <= 1e-4

    return passed, f"Cauchy-Binet {identity:.3e} (limit 1e-12), widom {widom:.3e} (limit 1e-04)"


def _CheckPainleve(cfg: RunConfig) -> tuple[bool, str]:

    solution = SolvePII(0.5, cfg.odeAnchor, -2.0, cfg.odeTol)
    error = max(
        VerifyUSquared(s, 0.5, cfg, "airy", solution) for s in (-1.0, 0.0, 1.0, 2.0)
    )

    return _Verdict(error, 1e-4)


def _CheckSpectralConvergence(cfg: RunConfig) -> tuple[bool, str]:

    airy = abs(
        TauAiry(0.0, 0.5, cfg.Replace(halfLineOrder=160), errorEstimate=False).value
        - TauAiry(0.0, 0.5, cfg.Replace(halfLineOrder=320), errorEstimate=False).value
    )
    widom = abs(
        TauWidom(0.0, 0.5, cfg.Replace(quadOrder=160), errorEstimate=False).value
        - TauWidom(0.0, 0.5, cfg.Replace(quadOrder=320), errorEstimate=False).value
    )

    return _Verdict(max(airy, widom), 1e-10)


def _CheckHilbertSchmidt(cfg: RunConfig) -> tuple[bool, str]:

    refinement = 0.0
    scaling = 0.0

    for which in ("a12", "b21"):

        coarse = HSNormSq(which, 1.0, cfg, 0.5, m=cfg.quadOrder)
        fine = HSNormSq(which, 1.0, cfg, 0.5, m=2 * cfg.quadOrder)

        if not math.isfinite(fine):

            return False, f"{which} norm is not finite"

        refinement = max(refinement, abs(fine - coarse) / fine)
        unit = HSNormSq(which, 1.0, cfg, 1.0)
        scaling = max(scaling, abs(HSNormSq(which, 1.0, cfg, 0.5) - 0.25 * unit) / unit)

    passed = refinement <= 1e-8 and scaling <= 1e-12

    return passed, f"refinement {refinement:.3e} (limit 1e-08), scaling {scaling:.3e} (limit 1e-12)"


def _CheckCollapse(cfg: RunConfig) -> tuple[bool, str]:

    return _Verdict(VerifyCollapse(1.0, 0.5, cfg=cfg), 1e-8)


def _CheckBoundary(cfg: RunConfig) -> tuple[bool, str]:

    error = max(
        abs(EvaluateTau(method, 8.0, 0.5, cfg, errorEstimate=False).value - 1.0)
        for method in ("airy", "widom", "minor")
    )

    return _Verdict(error, 1e-3)


def _CheckSpecialFunctions(cfg: RunConfig) -> tuple[bool, str]:

    airy = 0.0

    for x in np.linspace(-10.0, 10.0, 81):

        value = AiryAi(float(x))
        oracle = AiryOracle(float(x))
        airy = max(airy, abs(value.ai - oracle.ai), abs(value.aiPrime - oracle.aiPrime))

    seed = max(
        abs(SeedA(float(s), cfg) - AIRY_SCALE * AiryAi(AIRY_SCALE * float(s)).ai)
        for s in np.linspace(-6.0, 10.0, 33)
    )
    passed = airy <= 1e-12 and seed <= 1e-10

    return passed, f"airy {airy:.3e} (limit 1e-12), seed {seed:.3e} (limit 1e-10)"


def _CheckCombinatorics(cfg: RunConfig) -> tuple[bool, str]:

    blue = MayaToYoung(MayaDiagram((Fraction(5, 2),), (Fraction(-5, 2), Fraction(-1, 2)))).rows
    counts = [
        len(EnumerateMaya(maxK, Fraction(7, 2))) == sum(math.comb(4, k) ** 2 for k in range(maxK + 1))
        for maxK in range(4)
    ]
    passed = blue == (4, 1) and all(counts)

    return passed, f"blue example {blue}, counts {'ok' if all(counts) else 'mismatch'}"


SELF_TESTS = [
    SelfTestCheck(
        "cross-determinant",
        "Widom and Airy determinants agree after calibration",
        ("widom", "airy", "calibration"),
        _CheckCrossDeterminant,
    ),
    SelfTestCheck(
        "identity", "tau is 1 at kappa = 0 for every method", ("identity",), _CheckIdentity
    ),
    SelfTestCheck(
        "coefficients",
        "Symbolic coefficients match quadrature",
        ("symbolic", "coefficients"),
        _CheckCoefficients,
    ),
    SelfTestCheck(
        "minor-expansion",
        "Minor expansion equals the truncated determinant and the Widom value",
        ("minor", "cauchy-binet"),
        _CheckMinorExpansion,
    ),
    SelfTestCheck(
        "painleve", "u^2 = -(log tau)'' along the ODE solution", ("ode", "painleve"), _CheckPainleve
    ),
    SelfTestCheck(
        "spectral-convergence",
        "Nystrom spectral convergence",
        ("nystrom", "convergence"),
        _CheckSpectralConvergence,
    ),
    SelfTestCheck(
        "hilbert-schmidt",
        "Hilbert-Schmidt norms are stable and scale with kappa^2",
        ("hilbert-schmidt", "widom"),
        _CheckHilbertSchmidt,
    ),
    SelfTestCheck("collapse", "Contour integral collapse", ("collapse", "widom"), _CheckCollapse),
    SelfTestCheck("boundary", "tau(8, 0.5) is close to 1", ("boundary",), _CheckBoundary),
    SelfTestCheck(
        "special-functions",
        "Airy function and seed integral accuracy",
        ("special", "airy"),
        _CheckSpecialFunctions,
    ),
    SelfTestCheck(
        "combinatorics",
        "Maya to Young conversion and enumeration counts",
        ("maya", "young", "combinatorics"),
        _CheckCombinatorics,
    ),
]


def SelectChecks(pattern: str | None = None) -> list[SelfTestCheck]:
    """Checks whose name, description or tags contain ``pattern`` (case-insensitive)."""

    return [check for check in SELF_TESTS if check.Matches(pattern)]


def RunSelfTest(
    cfg: RunConfig | None = None, pattern: str | None = None, quiet: bool = False
) -> list[CheckResult]:
    """
    Run the selected checks.

    A check raising a ``PainleveTauError`` is recorded as failed with the error
    message as detail.
    """

    cfg = cfg or RunConfig()
    checks = SelectChecks(pattern)
    results = []

    with TrackTask("Running self-test", len(checks), quiet) as Advance:

        for check in checks:

            start = time.perf_counter()

            try:

                passed, detail = check.run(cfg)

            except PainleveTauError as error:

                passed, detail = False, f"{type(error).__name__}: {error}"

            results.append(CheckResult(check.name, passed, detail, time.perf_counter() - start))
            Advance(stage=check.name)

    return results


def RenderResults(results: list[CheckResult]) -> Table:
    """Pass/fail table of ``results``."""

    descriptions = {check.name: check.description for check in SELF_TESTS}
    table = Table(title="PyPainleveTau self-test")
    table.add_column("Check", style="bold")
    table.add_column("Description")
    table.add_column("Result")
    table.add_column("Detail")
    table.add_column("Time (s)", justify="right")

    for result in results:

        verdict = "[green]PASS[/green]" if result.passed else "[red]FAIL[/red]"
        table.add_row(
            result.name,
            descriptions.get(result.name, ""),
            verdict,
            result.detail,
            f"{result.elapsed:.2f}",
        )

    return table
