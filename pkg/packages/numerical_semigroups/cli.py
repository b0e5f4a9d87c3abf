"""The ``nsg`` command line: analyze, census, build and verify.

Errors are written to stderr as one JSON object ``{"error": ..., "message": ...}``
with exit code 2; a verification run with failures exits with code 1.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import TYPE_CHECKING, NoReturn

import orjson

from numerical_semigroups.core.base import Parity, SemigroupError
from numerical_semigroups.formats.base import (
    AnalysisFormat,
    TableFormat,
    render_analysis,
    render_census,
    render_json,
    render_records,
    render_verify,
)
from numerical_semigroups.logging import configure_logging
from numerical_semigroups.services.analysis import analyze
from numerical_semigroups.services.census import CensusQuery, census
from numerical_semigroups.services.constructors import (
    build_pseudo_sym3,
    build_response,
    build_symmetric_bresinsky,
    build_type3,
    family_sn,
)
from numerical_semigroups.services.verification import SUITE_NAMES, verify
from numerical_semigroups.version import __version__

if TYPE_CHECKING:
    from collections.abc import Sequence

    from numerical_semigroups.services.constructors import Construction

__all__ = ["build_parser", "main"]

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_ERROR = 2


def _emit_error(kind: str, message: str) -> None:
    sys.stderr.write(orjson.dumps({"error": kind, "message": message}).decode() + "\n")


class _Parser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors are machine-readable."""

    def error(self, message: str) -> NoReturn:
        _emit_error("UsageError", f"{self.prog}: {message}")
        raise SystemExit(EXIT_ERROR)


def _int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        msg = f"expected comma-separated integers, got {text!r}"
        raise argparse.ArgumentTypeError(msg) from exc


def _str_list(text: str) -> list[str]:
    return [part.strip() for part in text.split(",") if part.strip()]


def build_parser() -> argparse.ArgumentParser:
    """The ``nsg`` argument parser."""
    parser = _Parser(prog="nsg", description="Numerical semigroups: invariants, families and censuses.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--verbose", action="store_true", help="Log at DEBUG to stderr.")
    commands = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_analyze = commands.add_parser("analyze", help="Invariants, class, RF-matrices and family data.")
    p_analyze.add_argument("gens", nargs="+", type=int, metavar="GEN")
    p_analyze.add_argument(
        "--format", choices=[f.value for f in AnalysisFormat], default=AnalysisFormat.TEXT.value
    )
    p_analyze.add_argument("--rf-cap", type=int, default=None, help="RF-matrices shown per PF element.")

    p_census = commands.add_parser("census", help="Count almost symmetric semigroups by class.")
    p_census.add_argument("--max-gen", type=int, required=True)
    p_census.add_argument("--edim", type=_int_list, required=True, help="e.g. 3,4")
    p_census.add_argument("--parity", choices=[p.value for p in Parity], default=Parity.ODD.value)
    p_census.add_argument(
        "--min-gen", type=int, default=None, help="Smallest generator (default 5 for odd, 2 for any)."
    )
    p_census.add_argument("--format", choices=[f.value for f in TableFormat], default=TableFormat.TABLE.value)
    p_census.add_argument("--classes", type=_str_list, default=None, help="Class labels for --records.")
    p_census.add_argument("--records", type=Path, default=None, help="Write JSON-lines records here.")
    p_census.add_argument("--workers", type=int, default=None, help="Overrides NSG_WORKERS.")

    p_build = commands.add_parser("build", help="Construct a member of a parametrized family.")
    families = p_build.add_subparsers(dest="family", required=True, parser_class=_Parser)
    families.add_parser("type3", help="Almost symmetric type 3, odd alpha_i > 1.").add_argument(
        "--alpha", type=_int_list, required=True, help="a1,a2,a3,a4"
    )
    p_bresinsky = families.add_parser("bresinsky", help="Symmetric non-CI from a_i, b_i.")
    p_bresinsky.add_argument("--a", type=_int_list, required=True, help="a1,a2,a3,a4")
    p_bresinsky.add_argument("--b", type=_int_list, required=True, help="b1,b2,b3,b4")
    families.add_parser("psym3", help="Pseudo-symmetric 3-generated.").add_argument(
        "--abc", type=_int_list, required=True, help="alpha,beta,gamma"
    )
    families.add_parser("sn", help="The S_n family of type 3.").add_argument("--n", type=int, required=True)

    p_verify = commands.add_parser("verify", help="Run the structure-theorem property suites.")
    p_verify.add_argument("--max-gen", type=int, required=True)
    p_verify.add_argument(
        "--suites", type=_str_list, default=None, help=f"Subset of {','.join(SUITE_NAMES)}"
    )
    p_verify.add_argument("--workers", type=int, default=None, help="Overrides NSG_WORKERS.")
    p_verify.add_argument("--format", choices=[f.value for f in AnalysisFormat], default=AnalysisFormat.TEXT.value)
    return parser


def _construct(args: argparse.Namespace) -> Construction:
    if args.family == "type3":
        return build_type3(args.alpha)
    if args.family == "bresinsky":
        return build_symmetric_bresinsky(args.a, args.b)
    if args.family == "psym3":
        if len(args.abc) != 3:
            raise argparse.ArgumentTypeError("--abc needs exactly three integers")
        return build_pseudo_sym3(*args.abc)
    return family_sn(args.n)


def _run(args: argparse.Namespace) -> int:
    if args.command == "analyze":
        report = analyze(args.gens, rf_cap=args.rf_cap)
        text = render_json(report) + "\n" if args.format == AnalysisFormat.JSON else render_analysis(report)
        sys.stdout.write(text)
        return EXIT_OK
    if args.command == "census":
        query = CensusQuery.create(
            max_gen=args.max_gen,
            edim=args.edim,
            parity=args.parity,
            classes=args.classes,
            min_gen=args.min_gen,
        )
        table = census(query, workers=args.workers, with_records=args.records is not None)
        if args.records is not None:
            args.records.write_text(render_records(table.records), encoding="utf-8")
        sys.stdout.write(render_census(table, args.format))
        return EXIT_OK
    if args.command == "build":
        sys.stdout.write(render_json(build_response(_construct(args))) + "\n")
        return EXIT_OK
    result = verify(args.max_gen, suites=args.suites, workers=args.workers)
    text = render_json(result) + "\n" if args.format == AnalysisFormat.JSON else render_verify(result)
    sys.stdout.write(text)
    return EXIT_OK if result.passed else EXIT_FAILED


def main(argv: Sequence[str] | None = None) -> int:
    """Entry point of the ``nsg`` console script."""
    args = build_parser().parse_args(argv)
    configure_logging(verbose=args.verbose)
    try:
        return _run(args)
    except SemigroupError as exc:
        _emit_error(type(exc).__name__, str(exc))
    except argparse.ArgumentTypeError as exc:
        _emit_error("UsageError", str(exc))
    except OSError as exc:
        _emit_error(type(exc).__name__, str(exc))
    return EXIT_ERROR


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
