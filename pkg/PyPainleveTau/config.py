# PyPainleveTau/config.py

"""
Run Configuration
=================

Every tunable of the three τ pipelines lives in one frozen ``RunConfig``. The
configuration round-trips bit-exactly through a flat UTF-8 ``key=value`` file
(floats are written with ``repr``), which is also where ``painlevetau calibrate``
persists the calibrated conventions.

Key Classes
-----------
- ``PhaseConvention`` : Frozen sign and scale conventions read by all kernels.
- ``RunConfig`` : All numeric settings of a run.

Key Functions
-------------
- ``DefaultConfigPath`` : Resolve the config file location.
- ``LoadConfig`` : Read a config file (missing file gives the defaults).
- ``SaveConfig`` : Write a config file.
- ``ParseConfigText`` : Parse ``key=value`` text into a ``RunConfig``.
- ``FormatConfigText`` : Render a ``RunConfig`` as ``key=value`` text.
"""

import dataclasses
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .errors import ArgumentError

DEFAULT_SCALE_C = 2.0 ** (-2.0 / 3.0)
CONFIG_ENV_VAR = "PAINLEVETAU_CONFIG"
SIGN_NU_ENV_VAR = "PAINLEVETAU_SIGN_NU"
DEFAULT_CONFIG_NAME = "painlevetau.cfg"

VALID_METHODS = ["airy", "widom", "minor"]
VALID_OPERATOR_ORDERS = ["airy_first", "shift_first"]
VALID_OUTPUT_FORMATS = ["text", "json"]


@dataclass(frozen=True)
class PhaseConvention:
    """
    Conventions shared by every kernel of a run.

    Attributes
    ----------
    signNu : int
        Sign of the ``s·w`` term of ν; +1 is the decaying convention.
    scaleC : float
        s-axis calibration: τ_widom(s) = τ_airy(scaleC·s).
    sigmaC : int
        Closure family of the coefficient seed, C′ = sigmaC·(A − C).
    recursionStep : Fraction
        Constant λ in I_k = λ/(k+1)·D̃ I_{k−1}.
    operatorOrder : str
        ``shift_first`` applies (∂−σ)² before (4∂²−s) inside D̃.
    """

    signNu: int = 1
    scaleC: float = DEFAULT_SCALE_C
    sigmaC: int = -1
    recursionStep: Fraction = Fraction(-1, 4)
    operatorOrder: str = "shift_first"


@dataclass(frozen=True)
class RunConfig:
    """
    Settings of a single run.

    Field names are camelCase in Python and snake_case in the config file
    (``quadOrder`` is stored as ``quad_order``).
    """

    method: str = "airy"
    s: float = 0.0
    kappa: float = 0.5
    quadOrder: int = 200
    halfLineOrder: int = 200
    eps: float = 0.5
    truncation: float = 16.0
    tailTol: float = 1e-18
    maxWeight: int = 8
    nCut: int = 8
    fdStep: float = 1e-2
    scaleC: float = DEFAULT_SCALE_C
    signNu: int = 1
    sigmaC: int = -1
    recursionStep: str = "-1/4"
    operatorOrder: str = "shift_first"
    odeTol: float = 1e-10
    odeAnchor: float = 8.0
    outputFormat: str = "text"

    def Convention(self) -> PhaseConvention:
        """Return the frozen convention carried by this configuration."""

        return PhaseConvention(
            signNu=self.signNu,
            scaleC=self.scaleC,
            sigmaC=self.sigmaC,
            recursionStep=Fraction(self.recursionStep),
            operatorOrder=self.operatorOrder,
        )

    def Replace(self, **changes) -> "RunConfig":
        """Return a validated copy with ``changes`` applied."""

        updated = dataclasses.replace(self, **changes)
        updated.Validate()

        return updated

    def Validate(self) -> None:
        """
        Check every field against the preconditions of the operations it feeds.

        Raises
        ------
        ArgumentError
            If any field is out of range.
        """

        problems = []

        if self.method not in VALID_METHODS:

            problems.append(f"method must be one of {VALID_METHODS}, got {self.method!r}")

        if not math.isfinite(self.s) or abs(self.s) > 50:

            problems.append(f"s must be finite with |s| <= 50, got {self.s}")

        if not math.isfinite(self.kappa) or abs(self.kappa) > 1:

            problems.append(f"kappa must satisfy |kappa| <= 1, got {self.kappa}")

        for name in ("quadOrder", "halfLineOrder"):

            value = getattr(self, name)

            if not 1 <= value <= 2000:

                problems.append(f"{name} must lie in [1, 2000], got {value}")

        if not self.eps > 0 or self.eps == 1:

            problems.append(f"eps must be positive and different from 1, got {self.eps}")

        if not self.truncation > 0:

            problems.append(f"truncation must be positive, got {self.truncation}")

        if not 0 < self.tailTol <= 1e-6:

            problems.append(f"tailTol must lie in (0, 1e-6], got {self.tailTol}")

        if self.maxWeight < 0:

            problems.append(f"maxWeight must be nonnegative, got {self.maxWeight}")

        if not 1 <= self.nCut <= 64:

            problems.append(f"nCut must lie in [1, 64], got {self.nCut}")

        if not 1e-4 <= self.fdStep <= 1e-1:

            problems.append(f"fdStep must lie in [1e-4, 1e-1], got {self.fdStep}")

        if not self.scaleC > 0:

            problems.append(f"scaleC must be positive, got {self.scaleC}")

        if self.signNu not in (1, -1):

            problems.append(f"signNu must be +1 or -1, got {self.signNu}")

        if self.sigmaC not in (1, -1):

            problems.append(f"sigmaC must be +1 or -1, got {self.sigmaC}")

        try:

            if Fraction(self.recursionStep) == 0:

                problems.append("recursionStep must be nonzero")

        except (ValueError, ZeroDivisionError):

            problems.append(f"recursionStep must be a rational, got {self.recursionStep!r}")

        if self.operatorOrder not in VALID_OPERATOR_ORDERS:

            problems.append(
                f"operatorOrder must be one of {VALID_OPERATOR_ORDERS}, got {self.operatorOrder!r}"
            )

        if not self.odeTol > 0:

            problems.append(f"odeTol must be positive, got {self.odeTol}")

        if not self.odeAnchor >= 6:

            problems.append(f"odeAnchor must be at least 6, got {self.odeAnchor}")

        if self.outputFormat not in VALID_OUTPUT_FORMATS:

            problems.append(
                f"outputFormat must be one of {VALID_OUTPUT_FORMATS}, got {self.outputFormat!r}"
            )

        if problems:

            raise ArgumentError(
                "Invalid run configuration:\n\n" + "\n".join(f"- {p}" for p in problems)
            )

    def Snapshot(self) -> dict[str, object]:
        """Return the config as a snake_case dictionary."""

        return {
            _FileKey(field.name): getattr(self, field.name)
            for field in dataclasses.fields(self)
        }


def _FileKey(fieldName: str) -> str:

    return "".join(f"_{ch.lower()}" if ch.isupper() else ch for ch in fieldName)


_FIELDS = {_FileKey(field.name): field for field in dataclasses.fields(RunConfig)}


def _ParseValue(key: str, raw: str) -> object:

    field = _FIELDS[key]

    try:

        if field.type in (int, "int"):

            return int(raw)

        if field.type in (float, "float"):

            return float(raw)

    except ValueError:

        raise ArgumentError(f"Config key {key!r} has malformed value {raw!r}")

    return raw


def _FormatValue(value: object) -> str:

    if isinstance(value, float):

        return repr(value)

    return str(value)


def ParseConfigText(text: str, base: RunConfig | None = None) -> RunConfig:
    """
    Parse flat ``key=value`` text.

    Parameters
    ----------
    text : str
        Config text; blank lines and ``#`` comments are ignored.
    base : RunConfig or None, optional
        Values for keys absent from ``text`` (defaults when None).

    Returns
    -------
    RunConfig
        The validated configuration.

    Raises
    ------
    ArgumentError
        On unknown keys, malformed lines or out-of-range values.
    """

    if not isinstance(text, str):

        raise TypeError(
            f'Unexpected type for parameter "text". Expected type: str. Given type: {type(text)}'
        )

    changes = {}

    for lineNumber, line in enumerate(text.splitlines(), start=1):

        stripped = line.strip()

        if not stripped or stripped.startswith("#"):

            continue

        if "=" not in stripped:

            raise ArgumentError(
                f"Malformed config line {lineNumber}: {line!r}\n\nExpected key=value."
            )

        key, raw = (part.strip() for part in stripped.split("=", 1))

        if key not in _FIELDS:

            raise ArgumentError(
                f"Unknown config key {key!r} on line {lineNumber}.\n\nValid keys:\n"
                + "\n".join(f"- {k}" for k in _FIELDS)
            )

        changes[_FIELDS[key].name] = _ParseValue(key, raw)

    return (base or RunConfig()).Replace(**changes)


def FormatConfigText(cfg: RunConfig) -> str:
    """Render ``cfg`` as ``key=value`` lines."""

    lines = [f"{key}={_FormatValue(value)}" for key, value in cfg.Snapshot().items()]

    return "\n".join(lines) + "\n"


def DefaultConfigPath() -> Path:
    """Config file location: ``$PAINLEVETAU_CONFIG`` or ``./painlevetau.cfg``."""

    envPath = os.environ.get(CONFIG_ENV_VAR)

    if envPath:

        return Path(envPath)

    return Path.cwd() / DEFAULT_CONFIG_NAME


def _ApplyEnvironment(cfg: RunConfig) -> RunConfig:

    rawSign = os.environ.get(SIGN_NU_ENV_VAR)

    if rawSign is None or rawSign.strip() == "":

        return cfg

    try:

        signNu = int(rawSign)

    except ValueError:

        raise ArgumentError(f"{SIGN_NU_ENV_VAR} must be +1 or -1, got {rawSign!r}")

    return cfg.Replace(signNu=signNu)


def LoadConfig(path: Path | str | None = None, applyEnvironment: bool = True) -> RunConfig:
    """
    Load a run configuration.

    Parameters
    ----------
    path : Path, str or None, optional
        File to read; ``DefaultConfigPath()`` when None. A missing file yields
        the defaults.
    applyEnvironment : bool, optional
        Apply the ``PAINLEVETAU_SIGN_NU`` override (default True).

    Returns
    -------
    RunConfig
        The validated configuration.
    """

    if path is not None and not isinstance(path, (str, Path)):

        raise TypeError(
            f'Unexpected type for parameter "path". Expected type: str or pathlib.Path. Given type: {type(path)}'
        )

    configPath = Path(path) if path is not None else DefaultConfigPath()

    if configPath.is_file():

        cfg = ParseConfigText(configPath.read_text(encoding="utf-8"))

    else:

        cfg = RunConfig()

    if applyEnvironment:

        cfg = _ApplyEnvironment(cfg)

    return cfg


def SaveConfig(cfg: RunConfig, path: Path | str | None = None) -> Path:
    """
    Write ``cfg`` to ``path`` (``DefaultConfigPath()`` when None).

    Returns
    -------
    Path
        The file written.
    """

    if not isinstance(cfg, RunConfig):

        raise TypeError(
            f'Unexpected type for parameter "cfg". Expected type: RunConfig. Given type: {type(cfg)}'
        )

    configPath = Path(path) if path is not None else DefaultConfigPath()

    try:

        configPath.write_text(FormatConfigText(cfg), encoding="utf-8")

    except IOError as e:

        raise IOError(f"Failed to write config to '{configPath}': {e}")

    return configPath
