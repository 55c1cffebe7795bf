"""
Command-line interface for the syzygy engine.

Every run is determined by verb, target, field and seed. Results go to
stdout in the chosen format; logs go to stderr.
"""

import argparse
import asyncio
import json
import re
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

from . import SyzygyEngine
from .algebra.fields import FieldSpec
from .algebra.groebner import Ideal
from .algebra.polynomial import MonomialOrder
from .config import CommandBuilder, SyzygySettings
from .core.models import (
    BettiTable,
    Command,
    ConditionStatus,
    ReproReport,
    ReproStatus,
)
from .hierarchy.bounds import (
    bound_row,
    canonical_curve_bound,
    curve_bound,
    degree_threshold,
    eligible_tables_e_plus_4,
    extremal_table,
    second_hierarchy_threshold,
)
from .utils.formatting import FORMATS, FormatUtils
from .utils.golden import get_target, target_ids
from .utils.ideal_io import format_ideal, read_ideal_file
from .utils.validation import ValidationUtils
from .varieties.grammar import ConstructionResult


def _add_common_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--field", help="Coefficient field: qq or fp:P (default fp:32003)")
    parser.add_argument("--seed", type=int, help="Random seed (default 0)")
    parser.add_argument("--format", dest="output_format", choices=FORMATS, help="Output format")
    parser.add_argument("--timeout", type=float, help="Timeout in seconds")
    parser.add_argument("--degree-bound", type=int, help="Truncate Gröbner bases at this degree")
    parser.add_argument("--config", help="Settings file (JSON or YAML)")


def create_parser() -> argparse.ArgumentParser:
    """Create the command-line argument parser."""
    parser = argparse.ArgumentParser(
        description="Syzygy engine CLI: Betti tables and quadratic strand bounds",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Ideal of a rational normal scroll
  syzygy-cli construct "S(1,2)" -o scroll.ideal

  # Betti table of a monomial curve, with a CSV copy
  syzygy-cli betti "M(11,10,9,8,7,5,0)" --csv-out table.csv

  # Check a table against the (e=4, k=0, m=3) bound
  syzygy-cli verify "nu(2):x0^4+x1^4-x2^4" --m 3

  # Bound rows and the eligible tables for d = e+4
  syzygy-cli bounds --e 5 --eligible

  # Reproduce every golden table, two at a time
  syzygy-cli reproduce all --jobs 2
        """
    )

    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    construct_parser = subparsers.add_parser("construct", help="Write the ideal of a construction")
    construct_parser.add_argument("spec", help="Construction spec, e.g. 'S(1,2)' or 'pts(3,7,0)'")
    construct_parser.add_argument("-o", "--output", help="Ideal file to write (default stdout)")
    _add_common_arguments(construct_parser)

    resolve_parser = subparsers.add_parser("resolve", help="Minimal resolution with invariants")
    resolve_parser.add_argument("target", help="Ideal file or construction spec")
    resolve_parser.add_argument("--order", choices=["grevlex", "lex"], default="grevlex",
                                help="Monomial order for the Schreyer frame")
    _add_common_arguments(resolve_parser)

    betti_parser = subparsers.add_parser("betti", help="Betti table of an ideal")
    betti_parser.add_argument("target", help="Ideal file or construction spec")
    betti_parser.add_argument("--csv-out", help="Also write the table as CSV to this path")
    _add_common_arguments(betti_parser)

    verify_parser = subparsers.add_parser("verify", help="Check a table against the bounds")
    verify_parser.add_argument("target", help="Table file (csv, kv or grid), ideal file or spec")
    verify_parser.add_argument("--e", type=int, help="Codimension (read from the resolution if omitted)")
    verify_parser.add_argument("--d", type=int, help="Degree (read from the resolution if omitted)")
    verify_parser.add_argument("--k", type=int, default=0, help="Hierarchy level")
    verify_parser.add_argument("--m", type=int, help="Offset (default d-e-1 clamped to [0, e-k])")
    verify_parser.add_argument("--assert", dest="asserted", action="append", default=[],
                               metavar="COND", help="Condition asserted by the caller, e.g. 'A(1,3)'")
    verify_parser.add_argument("--witness", action="append", default=[], metavar="COND",
                               help="Condition known to hold by construction")
    verify_parser.add_argument("--level", action="append", type=int, default=[], metavar="K",
                               help="Declare P(K,·) for the generalized K_p,1 check")
    _add_common_arguments(verify_parser)

    bounds_parser = subparsers.add_parser("bounds", help="Tabulate bounds and closed-form tables")
    bounds_parser.add_argument("--e", type=int, help="Codimension")
    bounds_parser.add_argument("--k", type=int, default=0, help="Hierarchy level")
    bounds_parser.add_argument("--m", type=int, help="Offset (default: every admissible m)")
    bounds_parser.add_argument("--curve", nargs=2, type=int, metavar=("G", "ALPHA"),
                               help="Curve of genus G and degree 2G+1+ALPHA")
    bounds_parser.add_argument("--canonical", type=int, metavar="G", help="Canonical curve of genus G")
    bounds_parser.add_argument("--eligible", action="store_true", help="Eligible tables for d = e+4")
    bounds_parser.add_argument("--extremal", type=int, metavar="M", help="Extremal table for (e, M)")
    bounds_parser.add_argument("--thresholds", action="store_true", help="Degree thresholds d_i")
    _add_common_arguments(bounds_parser)

    reproduce_parser = subparsers.add_parser("reproduce", help="Reproduce golden Betti tables")
    reproduce_parser.add_argument("target", help=f"Target id or 'all' ({', '.join(target_ids())})")
    reproduce_parser.add_argument("--jobs", type=int, help="Targets run in parallel")
    reproduce_parser.add_argument("--truncated", action="store_true",
                                  help="Only compare generators up to degree 3")
    reproduce_parser.add_argument("--in-process", action="store_true", help=argparse.SUPPRESS)
    reproduce_parser.add_argument("--json", action="store_true", help=argparse.SUPPRESS)
    _add_common_arguments(reproduce_parser)

    subparsers.add_parser("version", help="Show version information")

    return parser


def load_settings(args: argparse.Namespace) -> SyzygySettings:
    """Environment settings, then the settings file, then explicit flags."""
    settings = SyzygySettings.from_env()
    if getattr(args, "config", None):
        file_settings = SyzygySettings.from_file(args.config)
        settings = SyzygySettings.from_dict({**settings.to_dict(), **file_settings.to_dict()})
    if getattr(args, "field", None):
        settings.default_field = args.field
    if getattr(args, "seed", None) is not None:
        settings.default_seed = args.seed
    if getattr(args, "output_format", None):
        settings.default_format = args.output_format
    if getattr(args, "timeout", None) is not None:
        settings.timeout_seconds = args.timeout
    if getattr(args, "degree_bound", None) is not None:
        settings.degree_bound = args.degree_bound
    if getattr(args, "jobs", None) is not None:
        settings.parallel_jobs = args.jobs
    if not settings.validate():
        raise ValueError("Settings validation failed")
    return settings


def build_command(args: argparse.Namespace, settings: SyzygySettings) -> Command:
    target = getattr(args, "target", None) or getattr(args, "spec", None) or ""
    command = CommandBuilder().from_settings(settings).verb(args.command).target(target).build()
    ValidationUtils.validate_and_raise(ValidationUtils.validate_command(command), args.command)
    return command


def _load_ideal(
    engine: SyzygyEngine,
    command: Command,
    explicit_field: bool
) -> Ideal:
    path = Path(command.target)
    if path.is_file():
        override = FieldSpec.parse(command.field) if explicit_field else None
        return read_ideal_file(path, override).ideal
    return engine.construct(command.target, FieldSpec.parse(command.field), command.seed).ideal


def run_construct_command(args: argparse.Namespace) -> Dict[str, Any]:
    """Evaluate a construction and write its ideal file."""
    try:
        settings = load_settings(args)
        command = build_command(args, settings)
        engine = SyzygyEngine(settings)
        result: ConstructionResult = engine.construct(command.target)
        text = format_ideal(result.ideal, result.provenance())
        if args.output:
            Path(args.output).write_text(text, encoding="utf-8")
            return {"success": True, "output": f"Wrote {len(result.ideal)} generators to {args.output}"}
        return {"success": True, "output": text.rstrip("\n")}
    except Exception as e:
        return {"error": str(e)}


def run_resolve_command(args: argparse.Namespace) -> Dict[str, Any]:
    """Resolve an ideal and print its table, invariants and self-checks."""
    try:
        settings = load_settings(args)
        command = build_command(args, settings)
        engine = SyzygyEngine(settings)
        ideal = _load_ideal(engine, command, bool(args.field))
        order = MonomialOrder.lex() if args.order == "lex" else None
        result = engine.resolve(ideal, order=order)
        text = FormatUtils.render_resolution(
            result.table, result.invariants, command.output_format, result.checks
        )
        return {"success": True, "output": text}
    except Exception as e:
        return {"error": str(e)}


def run_betti_command(args: argparse.Namespace) -> Dict[str, Any]:
    """Print the Betti table of an ideal, optionally writing a CSV copy."""
    try:
        settings = load_settings(args)
        command = build_command(args, settings)
        engine = SyzygyEngine(settings)
        table = engine.resolve(_load_ideal(engine, command, bool(args.field))).table
        if args.csv_out:
            Path(args.csv_out).write_text(table.to_csv() + "\n", encoding="utf-8")
        return {"success": True, "output": FormatUtils.render_table(table, command.output_format)}
    except Exception as e:
        return {"error": str(e)}


def _is_ideal_file(path: Path) -> bool:
    return any(line.startswith("ring ") for line in path.read_text(encoding="utf-8").splitlines())


def _read_table(path: Path) -> BettiTable:
    text = path.read_text(encoding="utf-8")
    if path.suffix.lower() == ".csv":
        return FormatUtils.parse_table(text, "csv")
    if "betti." in text:
        return FormatUtils.parse_table(text, "kv")
    return FormatUtils.parse_table(text, "grid")


def run_verify_command(args: argparse.Namespace) -> Dict[str, Any]:
    """Verify a table; the exit code carries the verdict."""
    try:
        settings = load_settings(args)
        command = build_command(args, settings)
        engine = SyzygyEngine(settings)
        path = Path(command.target)
        e, d = args.e, args.d
        containments: List[str] = []
        if path.is_file() and not _is_ideal_file(path):
            table = _read_table(path)
            if e is None or d is None:
                return {"error": "--e and --d are required when verifying a stored table"}
        else:
            ideal = _load_ideal(engine, command, bool(args.field))
            result = engine.resolve(ideal)
            table = result.table
            if result.invariants is None:
                return {"error": "Cannot verify the zero ideal"}
            e = result.invariants.codimension if e is None else e
            d = result.invariants.degree if d is None else d
            scroll = re.match(r"\s*D\((\d+),(\d+),", command.target)
            if scroll:
                containments.append(f"contained in S({scroll.group(1)},{scroll.group(2)}) by construction")

        declared = {name: ConditionStatus.ASSERTED for name in args.asserted}
        report = engine.verify(
            table, e, d, args.k, args.m, declared, args.witness, args.level
        )
        report.containments.extend(containments)

        if command.output_format == "kv":
            text = report.to_kv()
        elif command.output_format == "csv":
            lines = ["p,observed,bound,verdict"]
            lines += [f"{c.p},{c.observed},{c.bound},{c.verdict.value}" for c in report.bound_checks]
            text = "\n".join(lines)
        else:
            text = "\n".join([table.to_grid(), report.to_kv()])
        return {"success": True, "output": text, "exit_code": report.exit_code()}
    except Exception as e:
        return {"error": str(e)}


def run_bounds_command(args: argparse.Namespace) -> Dict[str, Any]:
    """Tabulate bound rows, thresholds and closed-form tables."""
    try:
        settings = load_settings(args)
        fmt = settings.default_format
        engine = SyzygyEngine(settings)
        sections = []

        if args.curve:
            hb = curve_bound(*args.curve)
            sections.append(FormatUtils.render_bound_rows({str(hb): bound_row(hb, hb.e)}, fmt))
        if args.canonical is not None:
            hb = canonical_curve_bound(args.canonical)
            sections.append(FormatUtils.render_bound_rows({str(hb): bound_row(hb, hb.e)}, fmt))
        if args.e is not None:
            if args.eligible:
                pair = eligible_tables_e_plus_4(args.e)
                sections.append(FormatUtils.render_table(pair.table_generic, fmt))
                sections.append(FormatUtils.render_table(pair.table_special, fmt))
            if args.extremal is not None:
                sections.append(FormatUtils.render_table(extremal_table(args.e, args.extremal), fmt))
            if args.thresholds:
                values = {f"d_{i}": degree_threshold(args.e, i) for i in range(args.e - 1)}
                if args.e >= 3:
                    values["second_hierarchy"] = second_hierarchy_threshold(args.e)
                sections.append(FormatUtils.render_kv(values))
            if not (args.eligible or args.extremal is not None or args.thresholds):
                sections.append(FormatUtils.render_bound_rows(engine.bounds(args.e, args.k, args.m), fmt))
        if not sections:
            return {"error": "Nothing to tabulate: give --e, --curve or --canonical"}
        return {"success": True, "output": "\n\n".join(sections)}
    except Exception as e:
        return {"error": str(e)}


# -- reproduce --------------------------------------------------------------

def _child_arguments(target_id: str, settings: SyzygySettings, truncated: bool) -> List[str]:
    argv = [
        "-m", "syzygy_python.cli", "reproduce", target_id, "--in-process", "--json",
        "--field", settings.default_field, "--seed", str(settings.default_seed),
    ]
    if settings.degree_bound is not None:
        argv += ["--degree-bound", str(settings.degree_bound)]
    if truncated:
        argv.append("--truncated")
    return argv


async def reproduce_in_subprocess(
    target_id: str,
    settings: SyzygySettings,
    truncated: bool = False
) -> ReproReport:
    """Run one target in its own interpreter, killing it at the timeout."""
    process = await asyncio.create_subprocess_exec(
        sys.executable, *_child_arguments(target_id, settings, truncated),
        stdout=asyncio.subprocess.PIPE,
        stderr=asyncio.subprocess.PIPE,
    )
    try:
        stdout, stderr = await asyncio.wait_for(process.communicate(), settings.timeout_seconds)
    except asyncio.TimeoutError:
        process.kill()
        await process.wait()
        return ReproReport(
            target_id, ReproStatus.TIMEOUT, settings.default_field,
            settings.timeout_seconds, details={"timeout_seconds": f"{settings.timeout_seconds:g}"}
        )
    lines = stdout.decode("utf-8").strip().splitlines()
    if not lines:
        message = stderr.decode("utf-8").strip().splitlines()
        return ReproReport(
            target_id, ReproStatus.ERROR, settings.default_field,
            details={"error": message[-1] if message else f"exit code {process.returncode}"}
        )
    return ReproReport.from_json(lines[-1])  # type: ignore[attr-defined, no-any-return]


async def reproduce_targets(target_list: List[str], settings: SyzygySettings) -> List[ReproReport]:
    """Run targets under a job limit; a heavy target that times out falls back to the truncated check."""
    semaphore = asyncio.Semaphore(settings.parallel_jobs)

    async def run_one(target_id: str) -> ReproReport:
        async with semaphore:
            report = await reproduce_in_subprocess(target_id, settings)
            if report.status is ReproStatus.TIMEOUT and get_target(target_id, settings.golden_dir).heavy:
                fallback = await reproduce_in_subprocess(target_id, settings, truncated=True)
                fallback.details["fallback_after_timeout"] = "true"
                return fallback
            return report

    return list(await asyncio.gather(*(run_one(t) for t in target_list)))


async def run_reproduce_command(args: argparse.Namespace) -> Dict[str, Any]:
    """Reproduce one target or all of them."""
    try:
        settings = load_settings(args)
        if args.in_process:
            engine = SyzygyEngine(settings)
            report = engine.reproduce(args.target, truncated=args.truncated)
            text = report.to_json() if args.json else report.to_kv()  # type: ignore[attr-defined]
            return {"success": True, "output": text, "exit_code": 0 if report.passed else 1}

        if args.target == "all":
            target_list = target_ids()
        else:
            get_target(args.target, settings.golden_dir)
            target_list = [args.target]
        if args.truncated:
            reports = [
                await reproduce_in_subprocess(t, settings, truncated=True) for t in target_list
            ]
        else:
            reports = await reproduce_targets(target_list, settings)
        text = "\n\n".join(r.to_kv() for r in reports)
        failed = [r.target for r in reports if not r.passed]
        return {"success": True, "output": text, "exit_code": 1 if failed else 0}
    except Exception as e:
        return {"error": str(e)}


def run_version_command() -> Dict[str, Any]:
    """Show version information."""
    from . import __version__

    return {
        "success": True,
        "version": __version__,
        "python_version": sys.version,
        "platform": sys.platform
    }


async def main(argv: Optional[List[str]] = None) -> int:
    """Main CLI entry point; returns the exit code."""
    parser = create_parser()
    args = parser.parse_args(argv)

    if not args.command:
        parser.print_help()
        return 0

    if args.command != "version":
        try:
            load_settings(args).setup_logging()
        except Exception as e:
            print(f"Error: {e}", file=sys.stderr)
            return 1

    if args.command == "construct":
        result = run_construct_command(args)
    elif args.command == "resolve":
        result = run_resolve_command(args)
    elif args.command == "betti":
        result = run_betti_command(args)
    elif args.command == "verify":
        result = run_verify_command(args)
    elif args.command == "bounds":
        result = run_bounds_command(args)
    elif args.command == "reproduce":
        result = await run_reproduce_command(args)
    elif args.command == "version":
        result = run_version_command()
    else:
        result = {"error": f"Unknown command: {args.command}"}

    if result.get("error"):
        print(f"Error: {result['error']}", file=sys.stderr)
        return 1
    if args.command == "version":
        print(json.dumps(result, indent=2))
        return 0
    print(result["output"])
    return int(result.get("exit_code", 0))


def cli_main() -> None:
    """Entry point for console script."""
    try:
        sys.exit(asyncio.run(main()))
    except KeyboardInterrupt:
        print("\nInterrupted by user", file=sys.stderr)
        sys.exit(1)
    except Exception as e:
        print(f"Unexpected error: {e}", file=sys.stderr)
        sys.exit(1)


if __name__ == "__main__":
    cli_main()
