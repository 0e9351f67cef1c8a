# PyPainleveTau/__init__.py

"""
PyPainleveTau
=============

The Ablowitz–Segur Painlevé II τ-function computed three independent ways: the
Airy-kernel Fredholm determinant, the Widom-constant determinant on two
vertical contours, and a minor expansion over Maya diagrams with exactly
computed coefficients. A Painlevé II ODE solver provides the ``u² = −(log τ)″``
cross-check.

Key Functions
-------------
- ``TauAiry`` : Nyström determinant of the Airy kernel.
- ``TauWidom`` : Widom-constant determinant.
- ``TauMinor`` : Minor expansion over Maya diagrams.
- ``TauTruncatedDet`` : Dense determinant of the truncated coefficient operator.
- ``EvaluateTau`` : τ by method name.
- ``LogTauDds2`` : Second log-derivative of τ.
- ``SolvePII`` : Painlevé II solution from the Airy asymptotics.
- ``VerifyUSquared`` : The ``u² + (log τ)″`` residual.
- ``CoeffAlpha`` / ``CoeffBeta`` : Closed-form expansion coefficients.
- ``MayaToYoung`` / ``EnumerateMaya`` : Diagram combinatorics.
- ``CalibrateConventions`` : Calibrate and return the run configuration.
- ``LoadConfig`` / ``SaveConfig`` : Config file I/O.
"""

from PyPainleveTau.airy_fredholm import AiryKernel, AiryKernelMatrix, LogTauDds2, TauAiry, TauResult
from PyPainleveTau.calibration import CalibrateConventions, CalibrateScale, CalibrationReport
from PyPainleveTau.config import (
    LoadConfig,
    ParseConfigText,
    FormatConfigText,
    PhaseConvention,
    RunConfig,
    SaveConfig,
)
from PyPainleveTau.contour_quadrature import (
    BuildHalfLineGrid,
    ContourIntegral,
    GaussLegendre,
    ImaginaryAxisGrid,
    VerticalContour,
)
from PyPainleveTau.determinants import Determinant, LogDeterminant
from PyPainleveTau.errors import (
    ArgumentError,
    CalibrationError,
    ContourCollisionError,
    ConvergenceError,
    DepthGuardError,
    DomainError,
    FactorizationError,
    NonPositiveTauError,
    NumericalError,
    PainleveTauError,
    PoleEncounteredError,
)
from PyPainleveTau.minor_expansion import (
    BasisFn,
    BuildCoefficientTable,
    CoefficientTable,
    EnumerateMaya,
    GramDiag,
    MayaDiagram,
    MayaToYoung,
    SelectBasisFamily,
    TauMinor,
    TauTruncatedDet,
    YoungDiagram,
    YoungWeight,
)
from PyPainleveTau.pii_ode_oracle import EvaluateU, ODESolution, SolvePII, VerifyUSquared
from PyPainleveTau.pipelines import EvaluateTau, ScanTau
from PyPainleveTau.selftest import RunSelfTest
from PyPainleveTau.special_functions import (
    AiryAi,
    AiryOracle,
    DetermineClosureSign,
    SeedA,
    SeedAPrime,
    SeedASecond,
    SeedC,
)
from PyPainleveTau.symbolic_airy_algebra import (
    AlphaQuadratureOracle,
    ApplyDTilde,
    CoeffAlpha,
    CoeffBeta,
    DetermineRecursionStep,
    Differentiate,
    EvalSymFn,
    RecurseInM,
    RecurseInN,
    SeedCoefficient,
    SymbolicFunction,
)
from PyPainleveTau.widom_determinant import (
    BuildKernelMatrices,
    HSNormSq,
    TauWidom,
    ThetaOffDiag,
    VerifyCollapse,
)

# Define the public API of the package
__all__ = [
    "AiryAi",
    "AiryOracle",
    "SeedA",
    "SeedAPrime",
    "SeedASecond",
    "SeedC",
    "DetermineClosureSign",
    "GaussLegendre",
    "VerticalContour",
    "ImaginaryAxisGrid",
    "BuildHalfLineGrid",
    "ContourIntegral",
    "LogDeterminant",
    "Determinant",
    "AiryKernel",
    "AiryKernelMatrix",
    "TauAiry",
    "TauResult",
    "LogTauDds2",
    "ThetaOffDiag",
    "BuildKernelMatrices",
    "TauWidom",
    "HSNormSq",
    "VerifyCollapse",
    "SymbolicFunction",
    "Differentiate",
    "ApplyDTilde",
    "SeedCoefficient",
    "CoeffAlpha",
    "CoeffBeta",
    "RecurseInM",
    "RecurseInN",
    "EvalSymFn",
    "AlphaQuadratureOracle",
    "DetermineRecursionStep",
    "MayaDiagram",
    "YoungDiagram",
    "CoefficientTable",
    "BasisFn",
    "GramDiag",
    "MayaToYoung",
    "YoungWeight",
    "EnumerateMaya",
    "BuildCoefficientTable",
    "TauMinor",
    "TauTruncatedDet",
    "SelectBasisFamily",
    "ODESolution",
    "SolvePII",
    "EvaluateU",
    "VerifyUSquared",
    "EvaluateTau",
    "ScanTau",
    "CalibrateScale",
    "CalibrateConventions",
    "CalibrationReport",
    "RunSelfTest",
    "RunConfig",
    "PhaseConvention",
    "LoadConfig",
    "SaveConfig",
    "ParseConfigText",
    "FormatConfigText",
    "PainleveTauError",
    "ArgumentError",
    "DomainError",
    "ContourCollisionError",
    "DepthGuardError",
    "NumericalError",
    "ConvergenceError",
    "FactorizationError",
    "PoleEncounteredError",
    "CalibrationError",
    "NonPositiveTauError",
]
