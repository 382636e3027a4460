"""Command-line interface (CLI) for rhombil."""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path
from typing import Any

from pydantic import ValidationError

from rhombil.config import RHOMBIL_CLAIM_SAMPLES, RHOMBIL_GRID_MAX, RHOMBIL_JOBS, RHOMBIL_SEED
from rhombil.engine import count_tilings
from rhombil.exceptions import BadParameters, OddLength, ParameterOrder, ParityMismatch, RhombilError
from rhombil.formulas import evaluate_formula
from rhombil.lattice import Region, build_region
from rhombil.render import render_region
from rhombil.schemas import CountReport, ExactValue, GridSpec, RegionDocument, RegionSpec, VerdictRecord
from rhombil.utils.logging_config import configure_logging
from rhombil.verify import calibrate_geometry, run_suite, summarize, to_json_lines, verify_family

FAMILIES = ("P", "Pp", "Q", "Qp", "K", "Kp", "H1", "H2", "H3", "H4", "H5", "H6", "H7", "H8", "S")
EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

_USAGE_ERRORS = (BadParameters, OddLength, ParameterOrder, ParityMismatch)


class UsageError(Exception):
    """Arguments parsed but do not describe a valid request."""


def main() -> None:
    """Run the CLI entry point."""
    sys.exit(run())


def run(argv: list[str] | None = None) -> int:
    """Parse ``argv``, dispatch the verb and return the exit code."""
    args = _parse_args(argv)
    if args.verbose:
        configure_logging("DEBUG")
    try:
        return _dispatch(args)
    except KeyboardInterrupt:
        return 130
    except UsageError as exc:
        print(f"Error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValidationError as exc:
        print(f"Error: {_describe_validation(exc)}", file=sys.stderr)
        return EXIT_USAGE
    except _USAGE_ERRORS as exc:
        print(f"Error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (RhombilError, OSError) as exc:
        print(f"Error: {exc}", file=sys.stderr)
        return EXIT_FAILED


def _describe_validation(exc: ValidationError) -> str:
    error = exc.errors()[0]
    message = str(error.get("msg", exc)).removeprefix("Value error, ")
    loc = [str(part) for part in error.get("loc", ()) if isinstance(part, str)]
    return f"--{loc[0]}: {message}" if loc else message


def _dispatch(args: argparse.Namespace) -> int:
    handlers = {
        "count": _cmd_count,
        "formula": _cmd_formula,
        "render": _cmd_render,
        "sweep": _cmd_sweep,
        "verify": _cmd_verify,
        "calibrate": _cmd_calibrate,
    }
    return handlers[args.command](args)


def _spec_from_args(args: argparse.Namespace) -> RegionSpec:
    if args.family is None:
        raise UsageError("--family is required (or pass --from-json)")
    fields: dict[str, Any] = {"family": args.family, "holes": args.holes or ()}
    for name in ("a", "b", "c", "x", "y", "z"):
        value = getattr(args, name)
        if value is not None:
            fields[name] = value
    return RegionSpec(**fields)


def _region_from_args(args: argparse.Namespace) -> tuple[Region, dict[str, Any], str]:
    if args.from_json:
        document = RegionDocument.model_validate_json(Path(args.from_json).read_text(encoding="utf-8"))
        region = Region.from_document(document)
        return region, dict(document.params), document.family
    spec = _spec_from_args(args)
    return build_region(spec), spec.params(), spec.family


def _emit_value(args: argparse.Namespace, report: CountReport) -> None:
    if args.format == "json":
        exclude = None if args.timings else {"elapsed_ms"}
        print(report.model_dump_json(exclude_none=True, exclude=exclude))
        return
    print(report.value)
    if args.timings and report.elapsed_ms is not None:
        print(f"elapsed: {report.elapsed_ms:.3f} ms", file=sys.stderr)


def _cmd_count(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    region, params, family = _region_from_args(args)
    value = count_tilings(region)
    report = CountReport(
        family=family,
        params=params,
        value=ExactValue.of(value),
        cells=len(region),
        oracle=ExactValue.of(value),
        elapsed_ms=round((time.perf_counter() - started) * 1000, 3),
    )
    _emit_value(args, report)
    return EXIT_OK


def _cmd_formula(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    spec = _spec_from_args(args)
    result = evaluate_formula(spec)
    report = CountReport(
        family=spec.family,
        params=spec.params(),
        value=ExactValue.of(result.value),
        formula=ExactValue.of(result.value),
        elapsed_ms=round((time.perf_counter() - started) * 1000, 3),
    )
    _emit_value(args, report)
    return EXIT_OK


def _cmd_render(args: argparse.Namespace) -> int:
    region, _params, _family = _region_from_args(args)
    if args.format == "json":
        print(region.to_document().model_dump_json())
    elif args.format == "svg":
        sys.stdout.write(render_region(region, "svg"))
    else:
        sys.stdout.write(render_region(region, "ascii"))
    return EXIT_OK


def _cmd_sweep(args: argparse.Namespace) -> int:
    if args.family is None:
        raise UsageError("--family is required for sweep")
    if args.family in ("P", "Pp"):
        grid = GridSpec(family=args.family, max_param=args.max)
    elif args.family in ("Q", "Qp", "K", "Kp"):
        grid = GridSpec(family=args.family, hole_lengths=(2, 4), max_entry=args.max)
    elif args.family == "S":
        grid = GridSpec(family="S", max_param=args.max, hole_lengths=(1, 2), max_entry=max(args.max, 1), positive_holes=True)
    else:
        grid = GridSpec(family=args.family, max_param=args.max, max_entry=args.max)
    records = verify_family(grid, jobs=args.jobs, timings=args.timings)
    _emit_records(args, records)
    return EXIT_FAILED if any(r.failed for r in records) else EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    records = run_suite(
        args.suite,
        max_param=args.max,
        samples=args.samples,
        seed=args.seed,
        jobs=args.jobs,
        timings=args.timings,
    )
    _emit_records(args, records)
    return EXIT_FAILED if any(r.failed for r in records) else EXIT_OK


def _emit_records(args: argparse.Namespace, records: list[VerdictRecord]) -> None:
    if args.format == "json":
        sys.stdout.write(to_json_lines(records))
    else:
        sys.stdout.write(summarize(records))


def _cmd_calibrate(args: argparse.Namespace) -> int:
    report = calibrate_geometry()
    if args.format == "json":
        print(report.model_dump_json())
    else:
        for outcome in report.outcomes:
            chosen = outcome.chosen or "UNRESOLVED"
            print(f"{outcome.switch:<26} {chosen:<18} passing={','.join(outcome.passing) or '-'}")
    return EXIT_OK if report.resolved else EXIT_FAILED


def _holes(text: str) -> tuple[int, ...]:
    if not text.strip():
        return ()
    try:
        values = tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc
    if any(v < 0 for v in values):
        raise argparse.ArgumentTypeError(f"hole sizes must be non-negative, got {text!r}")
    return values


def _non_negative(text: str) -> int:
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from exc
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def _positive(text: str) -> int:
    value = _non_negative(text)
    if value == 0:
        raise argparse.ArgumentTypeError("expected a positive integer, got 0")
    return value


def _parse_args(argv: list[str] | None = None) -> argparse.Namespace:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("human", "json", "svg", "ascii"),
        default="human",
        help="Output format.",
    )
    common.add_argument(
        "--timings",
        action="store_true",
        help="Include wall-clock timings in the output.",
    )
    common.add_argument(
        "--verbose",
        "-v",
        action="store_true",
        help="Log debug messages to stderr.",
    )

    region = argparse.ArgumentParser(add_help=False)
    region.add_argument("--family", choices=FAMILIES, default=None, help="Region family.")
    for name in ("a", "b", "c"):
        region.add_argument(f"--{name}", type=_non_negative, default=None, help=f"Halved hexagon parameter {name}.")
    for name in ("x", "y", "z"):
        region.add_argument(f"--{name}", type=_non_negative, default=None, help=f"Side parameter {name}.")
    region.add_argument(
        "--holes",
        type=_holes,
        default=(),
        help='Comma-separated hole sizes or trapezoid sequence (e.g. "1,2,1"); "" for none.',
    )

    grid = argparse.ArgumentParser(add_help=False)
    grid.add_argument("--max", type=_non_negative, default=RHOMBIL_GRID_MAX, help="Largest grid parameter.")
    grid.add_argument("--jobs", type=_positive, default=RHOMBIL_JOBS, help="Worker processes.")

    parser = argparse.ArgumentParser(
        prog="rhombil",
        description="Exact lozenge tiling counts of halved hexagons with triangular holes.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    count = commands.add_parser("count", parents=[common, region], help="Count tilings with the frontier counter.")
    count.add_argument("--from-json", default=None, help="Read the region from a JSON document instead.")

    commands.add_parser("formula", parents=[common, region], help="Evaluate the closed-form product.")

    render = commands.add_parser("render", parents=[common, region], help="Draw a region as ASCII, SVG or JSON.")
    render.add_argument("--from-json", default=None, help="Read the region from a JSON document instead.")

    commands.add_parser("sweep", parents=[common, region, grid], help="Compare formula and count over a family grid.")

    verify = commands.add_parser("verify", parents=[common, grid], help="Run the verification suites.")
    verify.add_argument(
        "--suite",
        choices=("family", "kuo", "ciucu", "claims", "all"),
        default="all",
        help="Which suite to run.",
    )
    verify.add_argument("--seed", type=_non_negative, default=RHOMBIL_SEED, help="Seed for the sampled claims.")
    verify.add_argument("--samples", type=_positive, default=RHOMBIL_CLAIM_SAMPLES, help="Samples per claim.")

    commands.add_parser("calibrate", parents=[common], help="Resolve the reading switches against the counter.")
    return parser.parse_args(argv)


if __name__ == "__main__":
    main()
