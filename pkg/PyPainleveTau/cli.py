# PyPainleveTau/cli.py

"""
CLI Module for PyPainleveTau
============================

Command-line interface to the three τ pipelines, the Painlevé II oracle, the
coefficient engine, the Maya-diagram enumeration, the convention calibration
and the self-test suite.

Usage:
    After installing the package, use the "painlevetau" command followed by the
    desired subcommand and options.

Subcommands:
    tau        Evaluate τ(s, κ) with one pipeline.
    scan       Evaluate τ on a grid of s and write CSV.
    u          Solve Painlevé II and print u(s), u′(s).
    coeffs     Print the minor-expansion coefficient table.
    maya       List balanced Maya diagrams with their Young diagrams.
    calibrate  Calibrate the conventions and persist them to the config file.
    selftest   Run the acceptance checks.

Exit codes:
    0 success, 1 self-test failure, 2 argument error, 3 numerical failure.

Example:
    painlevetau tau --method airy --s 0 --kappa 0
    painlevetau tau --method widom --s 1 --kappa 0.5 --json
    painlevetau scan --method airy --s-min -2 --s-max 2 --step 0.5 --out tau.csv
    painlevetau u --s 1 --kappa 0.5 --check
    painlevetau maya --max-weight 4 --n-cut 3
    painlevetau calibrate
    painlevetau selftest --filter maya
"""

import argparse
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path

from colorlog import ColoredFormatter
from rich.console import Console
from rich.table import Table

from .calibration import CalibrateConventions
from .config import VALID_METHODS, DefaultConfigPath, LoadConfig, RunConfig, SaveConfig
from .errors import PainleveTauError
from .minor_expansion import HALF, VALID_SOURCES, BuildCoefficientTable, EnumerateMaya, MayaToYoung
from .pii_ode_oracle import EvaluateU, SolvePII, VerifyUSquared
from .pipelines import EvaluateTau, ScanGrid, ScanTau
from .selftest import RenderResults, RunSelfTest
from .symbolic_airy_algebra import IntegralK

# Configure logging
logger = logging.getLogger("PyPainleveTau")
logger.setLevel(logging.INFO)
logger.propagate = False


if not logger.handlers:

    logFormat = (
        "%(log_color)s%(asctime)s - %(levelname)s - %(name)s - "
        "%(funcName)s:%(lineno)d - %(message)s"
    )
    dateFormat = "%Y-%m-%d %H:%M:%S"

    colorScheme = {
        "DEBUG": "cyan",
        "INFO": "green",
        "WARNING": "yellow",
        "ERROR": "red",
        "CRITICAL": "bold_red",
    }

    formatter = ColoredFormatter(
        logFormat,
        datefmt=dateFormat,
        log_colors=colorScheme,
        reset=True,
        style="%",
    )

    consoleHandler = logging.StreamHandler(sys.stdout)
    consoleHandler.setLevel(logging.DEBUG)
    consoleHandler.setFormatter(formatter)

    logger.addHandler(consoleHandler)

console = Console()

CSV_HEADER = "s,tau,err_est,method"

# CLI flag -> RunConfig field, for flags that override the config file.
CONFIG_FLAGS = {
    "method": "method",
    "s": "s",
    "kappa": "kappa",
    "quad_order": "quadOrder",
    "eps": "eps",
    "truncation": "truncation",
    "max_weight": "maxWeight",
    "n_cut": "nCut",
    "fd_step": "fdStep",
}


class CustomFormatter(
    argparse.ArgumentDefaultsHelpFormatter, argparse.RawTextHelpFormatter
):
    """
    Custom formatter combining defaults and raw text.
    """

    pass


def AddCommonArgs(subParser: argparse.ArgumentParser) -> None:
    """
    Add the arguments shared by every subcommand.

    Parameters
    ----------
    subParser : argparse.ArgumentParser
        Subparser object.
    """

    subParser.add_argument(
        "-c",
        "--config",
        type=str,
        metavar="CONFIG_FILE",
        help="Config file to read (default: $PAINLEVETAU_CONFIG or ./painlevetau.cfg).",
    )
    subParser.add_argument(
        "-q",
        "--quiet",
        action="store_true",
        help="Silence progress bars and informational logging.",
    )
    subParser.add_argument(
        "-v",
        "--verbose",
        action="store_true",
        help="Log debug records.",
    )
    subParser.add_argument(
        "-o",
        "--out",
        type=str,
        metavar="OUTPUT_FILE",
        help="Write the result to this file instead of stdout.",
    )
    subParser.add_argument(
        "--json",
        action="store_true",
        help="Print results as JSON.",
    )


def AddPipelineArgs(subParser: argparse.ArgumentParser, withS: bool = True) -> None:
    """
    Add the numeric settings that override the config file.

    Unset flags keep the config file values.
    """

    subParser.add_argument(
        "-m",
        "--method",
        type=str,
        choices=VALID_METHODS,
        help="τ pipeline (config default: airy).",
    )

    if withS:

        subParser.add_argument("--s", type=float, help="Deformation parameter s.")

    subParser.add_argument("--kappa", type=float, help="Ablowitz–Segur parameter κ, |κ| ≤ 1.")
    subParser.add_argument("--quad-order", type=int, help="Nodes per contour.")
    subParser.add_argument("--eps", type=float, help="Contour shift ε.")
    subParser.add_argument("--truncation", type=float, help="Half-line truncation T.")
    subParser.add_argument("--max-weight", type=int, help="Largest Maya-diagram weight kept.")
    subParser.add_argument("--n-cut", type=int, help="Coefficient table size.")
    subParser.add_argument("--fd-step", type=float, help="Finite-difference step h.")


def ResolveConfig(args: argparse.Namespace) -> RunConfig:
    """Config file values overridden by the flags given on the command line."""

    cfg = LoadConfig(args.config)
    changes = {
        field: getattr(args, flag)
        for flag, field in CONFIG_FLAGS.items()
        if getattr(args, flag, None) is not None
    }

    if args.json:

        changes["outputFormat"] = "json"

    return cfg.Replace(**changes)


def SaveOutput(text: str, outputFile: str | None) -> None:
    """
    Print ``text`` or write it to ``outputFile``; a partially written file is removed.

    Raises
    ------
    IOError
        If writing fails.
    """

    if outputFile is None:

        print(text)

        return

    path = Path(outputFile)

    try:

        path.write_text(text + "\n", encoding="utf-8")

    except BaseException as e:

        path.unlink(missing_ok=True)

        raise IOError(f"Failed to write to '{outputFile}': {e}")

    logger.info(f"Output successfully saved to '{outputFile}'.")


def FormatFloat(value: float) -> str:
    """17 significant digits, enough to round-trip a double."""

    return f"{value:.17g}"


def CmdTau(args: argparse.Namespace) -> int:

    cfg = ResolveConfig(args)
    result = EvaluateTau(cfg.method, cfg.s, cfg.kappa, cfg)

    if cfg.outputFormat == "json":

        SaveOutput(json.dumps(result.ToDict(), indent=4), args.out)

    else:

        lines = [f"{key}: {value}" for key, value in result.ToDict().items()]
        SaveOutput("\n".join(lines), args.out)

    return 0


def CmdScan(args: argparse.Namespace) -> int:

    cfg = ResolveConfig(args)
    grid = ScanGrid(args.s_min, args.s_max, args.step)
    results = ScanTau(grid, cfg, workers=args.workers, quiet=args.quiet)
    rows = [CSV_HEADER]
    rows.extend(
        f"{FormatFloat(r.s)},{FormatFloat(r.value)},{FormatFloat(r.errorEstimate)},{r.method}"
        for r in results
    )
    SaveOutput("\n".join(rows), args.out)

    return 0


def CmdU(args: argparse.Namespace) -> int:

    cfg = ResolveConfig(args)
    sEnd = max(-6.0, min(cfg.s - 0.1, 0.0))
    solution = SolvePII(cfg.kappa, cfg.odeAnchor, sEnd, cfg.odeTol)
    u, uPrime = EvaluateU(solution, cfg.s)
    data = {"s": cfg.s, "kappa": cfg.kappa, "u": u, "u_prime": uPrime}

    if args.check:

        data["residual"] = VerifyUSquared(cfg.s, cfg.kappa, cfg, solution=solution)

    if cfg.outputFormat == "json":

        SaveOutput(json.dumps(data, indent=4), args.out)

    else:

        SaveOutput("\n".join(f"{key}: {value}" for key, value in data.items()), args.out)

    return 0


def CmdCoeffs(args: argparse.Namespace) -> int:

    cfg = ResolveConfig(args)
    table = BuildCoefficientTable(cfg.s, cfg.kappa, cfg.nCut, cfg, args.source)
    data = {
        "s": table.s,
        "kappa": table.kappa,
        "n_cut": table.nCut,
        "source": table.source,
        "alpha": table.alpha.tolist(),
        "gram": table.gramPlus.tolist(),
    }

    if args.symbolic:

        convention = cfg.Convention()
        data["integrals"] = {
            str(k): {
                name: [str(c) for c in coefficients]
                for name, coefficients in IntegralK(k, convention).Coefficients().items()
            }
            for k in range(2 * table.nCut - 1)
        }

    if cfg.outputFormat == "json" or args.out:

        SaveOutput(json.dumps(data, indent=4), args.out)

        return 0

    alphaTable = Table(title=f"alpha at s={table.s}, kappa={table.kappa} ({table.source})")
    alphaTable.add_column("m \\ n", style="bold")

    for n in range(table.nCut):

        alphaTable.add_column(str(n), justify="right")

    for m in range(table.nCut):

        alphaTable.add_row(str(m), *(f"{value:.6e}" for value in table.alpha[m]))

    console.print(alphaTable)

    for k, polynomials in data.get("integrals", {}).items():

        console.print(f"I_{k}: p={polynomials['p']} q={polynomials['q']} r={polynomials['r']}")

    return 0


def CmdMaya(args: argparse.Namespace) -> int:

    cfg = ResolveConfig(args)
    maxPos = Fraction(cfg.nCut) - HALF
    diagrams = EnumerateMaya(cfg.maxWeight // 2, maxPos)
    records = [
        {
            "particles": [str(p) for p in d.particles],
            "holes": [str(h) for h in d.holes],
            "young": list(MayaToYoung(d).rows),
        }
        for d in diagrams
    ]

    if cfg.outputFormat == "json" or args.out:

        SaveOutput(json.dumps(records, indent=4), args.out)

        return 0

    table = Table(title=f"{len(records)} balanced Maya diagrams")
    table.add_column("Particles")
    table.add_column("Holes")
    table.add_column("Young rows")

    for record in records:

        table.add_row(
            ", ".join(record["particles"]),
            ", ".join(record["holes"]),
            str(tuple(record["young"])),
        )

    console.print(table)

    return 0


def CmdCalibrate(args: argparse.Namespace) -> int:

    cfg = ResolveConfig(args)
    report = CalibrateConventions(cfg, quiet=args.quiet)
    path = SaveConfig(report.config, args.config or DefaultConfigPath())
    data = {
        "scale_c": report.config.scaleC,
        "scale_residual": report.scaleResidual,
        "closure_sign": report.closureSign,
        "closure_residual": report.closureResidual,
        "sigma_c": report.config.sigmaC,
        "family_residuals": {str(k): v for k, v in report.familyResiduals.items()},
        "recursion_step": report.config.recursionStep,
        "operator_order": report.config.operatorOrder,
        "recursion_residual": report.recursionResidual,
        "config_file": str(path),
    }

    if cfg.outputFormat == "json":

        SaveOutput(json.dumps(data, indent=4), args.out)

    else:

        SaveOutput("\n".join(f"{key}: {value}" for key, value in data.items()), args.out)

    return 0


def CmdSelfTest(args: argparse.Namespace) -> int:

    cfg = ResolveConfig(args)
    results = RunSelfTest(cfg, args.filter, quiet=args.quiet)

    if cfg.outputFormat == "json":

        data = [
            {"name": r.name, "passed": r.passed, "detail": r.detail, "elapsed": r.elapsed}
            for r in results
        ]
        SaveOutput(json.dumps(data, indent=4), args.out)

    else:

        console.print(RenderResults(results))

    return 0 if all(r.passed for r in results) else 1


def BuildParser() -> argparse.ArgumentParser:
    """The argument parser with every subcommand."""

    parser = argparse.ArgumentParser(
        prog="painlevetau",
        description="Evaluate the Ablowitz–Segur Painlevé II τ-function by three independent determinants.",
        formatter_class=CustomFormatter,
    )
    subParsers = parser.add_subparsers(title="Commands", dest="command", required=True)

    # Single evaluation
    parserTau = subParsers.add_parser(
        "tau",
        help="Evaluate τ(s, κ) with one pipeline.",
        description="Evaluate τ(s, κ) with the Airy Fredholm, Widom or minor-expansion pipeline.",
        formatter_class=CustomFormatter,
    )
    AddCommonArgs(parserTau)
    AddPipelineArgs(parserTau)
    parserTau.set_defaults(handler=CmdTau)

    # Grid scan
    parserScan = subParsers.add_parser(
        "scan",
        help="Evaluate τ on a grid of s and write CSV.",
        description="Evaluate τ at s_min, s_min + step, ..., s_max and write `s,tau,err_est,method` rows.",
        formatter_class=CustomFormatter,
    )
    AddCommonArgs(parserScan)
    AddPipelineArgs(parserScan, withS=False)
    parserScan.add_argument("--s-min", type=float, required=True, help="First grid point.")
    parserScan.add_argument("--s-max", type=float, required=True, help="Last grid point.")
    parserScan.add_argument("--step", type=float, required=True, help="Grid spacing.")
    parserScan.add_argument(
        "--workers", type=int, default=None, help="Worker threads (default: executor default)."
    )
    parserScan.set_defaults(handler=CmdScan)

    # Painleve II solution
    parserU = subParsers.add_parser(
        "u",
        help="Solve Painlevé II and print u(s), u′(s).",
        description="Integrate Painlevé II backward from the Airy asymptotics.",
        formatter_class=CustomFormatter,
    )
    AddCommonArgs(parserU)
    AddPipelineArgs(parserU)
    parserU.add_argument(
        "--check",
        action="store_true",
        help="Also report |u² + (log τ)″| with the configured pipeline.",
    )
    parserU.set_defaults(handler=CmdU)

    # Coefficients
    parserCoeffs = subParsers.add_parser(
        "coeffs",
        help="Print the minor-expansion coefficient table.",
        description="Evaluate α_m^n for m, n < n_cut.",
        formatter_class=CustomFormatter,
    )
    AddCommonArgs(parserCoeffs)
    AddPipelineArgs(parserCoeffs)
    parserCoeffs.add_argument(
        "--source", type=str, choices=VALID_SOURCES, default="auto", help="Coefficient source."
    )
    parserCoeffs.add_argument(
        "--symbolic", action="store_true", help="Also print the exact p, q, r polynomials of I_k."
    )
    parserCoeffs.set_defaults(handler=CmdCoeffs)

    # Maya diagrams
    parserMaya = subParsers.add_parser(
        "maya",
        help="List balanced Maya diagrams with their Young diagrams.",
        description="Balanced diagrams with |p| + |h| <= max_weight and positions below n_cut.",
        formatter_class=CustomFormatter,
    )
    AddCommonArgs(parserMaya)
    parserMaya.add_argument("--max-weight", type=int, help="Largest weight |p| + |h|.")
    parserMaya.add_argument("--n-cut", type=int, help="Positions m + 1/2 and -(n + 1/2) with m, n < n_cut.")
    parserMaya.set_defaults(handler=CmdMaya)

    # Calibration
    parserCalibrate = subParsers.add_parser(
        "calibrate",
        help="Calibrate the conventions and persist them.",
        description="Determine the closure sign, coefficient family, recursion constant and s-axis scale, then write the config file.",
        formatter_class=CustomFormatter,
    )
    AddCommonArgs(parserCalibrate)
    AddPipelineArgs(parserCalibrate)
    parserCalibrate.set_defaults(handler=CmdCalibrate)

    # Self-test
    parserSelfTest = subParsers.add_parser(
        "selftest",
        help="Run the acceptance checks.",
        description="Run the acceptance checks and print a pass/fail table.",
        formatter_class=CustomFormatter,
    )
    AddCommonArgs(parserSelfTest)
    parserSelfTest.add_argument(
        "--filter", type=str, help="Only run checks whose name, description or tags contain this text."
    )
    parserSelfTest.set_defaults(handler=CmdSelfTest)

    return parser


def Run(argv: list[str] | None = None) -> int:
    """
    Parse ``argv`` and run the subcommand.

    Returns
    -------
    int
        Exit code: 0 success, 1 self-test failure, 2 argument error,
        3 numerical failure.
    """

    parser = BuildParser()
    args = parser.parse_args(argv)

    if args.verbose:

        logger.setLevel(logging.DEBUG)

    elif args.quiet:

        logger.setLevel(logging.WARNING)

    else:

        logger.setLevel(logging.INFO)

    try:

        return args.handler(args)

    except PainleveTauError as e:

        sys.stderr.write(e.panel)
        logger.debug(f"{type(e).__name__}: {e}", exc_info=True)

        return e.exitCode

    except (TypeError, IOError) as e:

        logger.error(f"Error: {e}", exc_info=args.verbose)

        return 2


def main() -> None:
    """
    CLI entry point.

    Raises
    ------
    SystemExit
        With the exit code of the subcommand.
    """

    if len(sys.argv) == 1:

        BuildParser().print_help(sys.stderr)
        sys.exit(2)

    sys.exit(Run())


if __name__ == "__main__":

    main()
