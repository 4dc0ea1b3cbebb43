# Copyright (c) 2026 The CantorPrimes developers
#
# This file is part of CantorPrimes.
#
# CantorPrimes is free software: you can redistribute it and/or modify it under the
# terms of the GNU General Public License as published by the Free Software
# Foundation, either version 3 of the License, or (at your option) any later
# version.
#
# CantorPrimes is distributed in the hope that it will be useful, but WITHOUT ANY
# WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS FOR
# A PARTICULAR PURPOSE. See the GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License along with
# CantorPrimes. If not, see <https://www.gnu.org/licenses/>.
#

"""
Command line interface: ``cantorprimes <command> [options]``.

Exit codes: 0 on success, 1 for user errors (bad arguments, composite input, unreadable
files), 2 if one of the theory's identities failed, which can only be a bug.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Any

from tqdm import tqdm

import cantorprimes
from cantorprimes.cyclotomic import repunit3
from cantorprimes.enumeration import CantorCertificate, certify, enumerate_cantor_primes, exclusion_report
from cantorprimes.errors import CantorError, InvariantViolation
from cantorprimes.oeis_io import cross_check, load_bfile
from cantorprimes.report import ReportFormat, build_document, render_csv, render_json
from cantorprimes.search import (
    SearchRecord,
    append_record,
    concordance,
    iter_repunit_prime_exponents,
    last_recorded_exponent,
    read_records,
    search_deep_forms,
)
from cantorprimes.ternary_oracle import Stage
from cantorprimes.utils.load_save_config import Settings, resolve_settings
from cantorprimes.utils.plotting import plot_search_records

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s - %(levelname)s - %(message)s"

_STAGES = {"1": Stage.FAILS_FIRST_DIGIT, "2": Stage.FAILS_SECOND_DIGIT, "n": Stage.FAILS_AT_DIGIT}

_CERTIFICATE_COLUMNS = ("p", "is_cantor", "small_special", "q", "K", "form", "offsets", "stage")
_RECORD_COLUMNS = ("s", "j", "digits3", "verdict", "label", "rounds", "witness", "residue_mod4")


class UsageError(CantorError):
    """Raised for invalid command line arguments."""


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


@dataclass
class CommandResult:
    """What a command hands to the renderers."""

    parameters: dict[str, Any]
    results: list[Any]
    columns: Sequence[str]
    human: list[str] = field(default_factory=list)
    rows: list[dict[str, Any]] | None = None


def _int_at_least(minimum: int):
    def parse(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"invalid integer: {text!r}") from None
        if value < minimum:
            raise argparse.ArgumentTypeError(f"expected an integer >= {minimum}, got {value}")
        return value

    return parse


_positive_int = _int_at_least(1)


def _common_options() -> argparse.ArgumentParser:
    common = _ArgumentParser(add_help=False)
    common.add_argument("--format", choices=[kind.value for kind in ReportFormat], default="human")
    common.add_argument("--mr-rounds", type=_positive_int, help="Miller-Rabin rounds above the deterministic limit")
    common.add_argument("--trit-budget", type=_positive_int, help="maximal size of a cyclotomic value in trits")
    common.add_argument("--workers", type=_positive_int, help="worker processes (also CANTOR_SIEVE_THREADS)")
    common.add_argument("--config", metavar="PATH", help="JSON settings file")
    common.add_argument("--timings", action="store_true", help="include elapsed times in search output")
    common.add_argument("--progress", action="store_true", default=None, help="show progress bars on stderr")
    common.add_argument(
        "--log-level", default="WARNING", choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = _ArgumentParser(prog="cantorprimes", description="Exact tools for primes p with 1/p in the Cantor set.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {cantorprimes.__version__}")
    commands = parser.add_subparsers(dest="command", required=True, metavar="command")

    certify_parser = commands.add_parser("certify", parents=[common], help="decide one prime three ways")
    certify_parser.add_argument("p", type=int)

    enumerate_parser = commands.add_parser("enumerate", parents=[common], help="list all Cantor primes up to a limit")
    enumerate_parser.add_argument("--limit", type=_positive_int, required=True)

    exclusions_parser = commands.add_parser(
        "exclusions", parents=[common], help="primes excluded at a given stage of the interval chain"
    )
    exclusions_parser.add_argument("--limit", type=_positive_int, required=True)
    exclusions_parser.add_argument("--stage", choices=list(_STAGES), required=True)

    repunit_parser = commands.add_parser(
        "search-repunit", parents=[common], help="decide Phi_s(3) for every prime s up to a bound"
    )
    repunit_parser.add_argument("--max-s", type=_positive_int, required=True)
    repunit_parser.add_argument("--stream", metavar="PATH", help="append records to a JSON-lines file")
    repunit_parser.add_argument("--resume", action="store_true", help="continue after the last record in --stream")
    repunit_parser.add_argument("--plot", metavar="PATH", help="save a timing plot")

    deep_parser = commands.add_parser("search-deep", parents=[common], help="decide Phi_s(3^(s^j)) for j <= max-j")
    deep_parser.add_argument("--s", type=_positive_int, required=True)
    deep_parser.add_argument("--max-j", type=_int_at_least(0), required=True)
    deep_parser.add_argument("--plot", metavar="PATH", help="save a timing plot")

    crosscheck_parser = commands.add_parser(
        "crosscheck", parents=[common], help="compare computed values with a local OEIS b-file"
    )
    crosscheck_parser.add_argument("--bfile", metavar="PATH", required=True)
    crosscheck_parser.add_argument("--cap", type=_positive_int, required=True)
    crosscheck_parser.add_argument(
        "--against",
        choices=["repunit-exponents", "repunit-primes", "cantor-primes"],
        default="repunit-exponents",
        help="sequence the b-file holds",
    )
    return parser


def _certificate_row(certificate: CantorCertificate) -> dict[str, Any]:
    row = certificate.to_dict()
    exclusion = row.pop("exclusion")
    row["stage"] = None if exclusion is None else exclusion["stage"]
    return row


def _describe(certificate: CantorCertificate) -> list[str]:
    p = certificate.p
    if certificate.small_special:
        return [f"{p}: Cantor prime (1/3 = 0.0222... in base 3)"]
    if not certificate.is_cantor:
        exclusion = certificate.exclusion
        if exclusion is None:
            return [f"{p}: not a Cantor prime"]
        return [f"{p}: not a Cantor prime ({exclusion.stage.value}, non-zero digit {exclusion.failing_digit})"]
    s, j = certificate.form
    return [
        f"{p}: Cantor prime",
        f"  q = {certificate.q}",
        f"  K = {certificate.K}",
        f"  offsets = {' '.join(map(str, certificate.offsets))}",
        f"  p = Phi_{s}(3^({s}^{j}))",
    ]


def _certify(args: argparse.Namespace, settings: Settings) -> CommandResult:
    certificate = certify(args.p)
    return CommandResult(
        {"p": str(args.p)},
        [certificate.to_dict()],
        _CERTIFICATE_COLUMNS,
        _describe(certificate),
        rows=[_certificate_row(certificate)],
    )


def _enumerate(args: argparse.Namespace, settings: Settings) -> CommandResult:
    certificates = enumerate_cantor_primes(args.limit, workers=settings.workers, progress=settings.progress)
    human = [line for certificate in certificates for line in _describe(certificate)[:1]]
    return CommandResult(
        {"limit": args.limit},
        [certificate.to_dict() for certificate in certificates],
        _CERTIFICATE_COLUMNS,
        human,
        rows=[_certificate_row(certificate) for certificate in certificates],
    )


def _exclusions(args: argparse.Namespace, settings: Settings) -> CommandResult:
    primes = exclusion_report(args.limit, _STAGES[args.stage])
    return CommandResult(
        {"limit": args.limit, "stage": _STAGES[args.stage].value},
        [{"p": str(p)} for p in primes],
        ("p",),
        [" ".join(map(str, primes))],
    )


def _record_lines(records: Sequence[SearchRecord], timings: bool) -> list[str]:
    lines = []
    for record in records:
        line = f"s = {record.s}, j = {record.j}, {record.digits3} trits: {record.verdict.label}"
        if timings:
            line += f" [{record.elapsed_ms:.1f} ms]"
        lines.append(line)
    return lines


def _search_output(
    records: list[SearchRecord], parameters: dict[str, Any], args: argparse.Namespace
) -> CommandResult:
    timings = args.timings or args.plot is not None
    if args.plot is not None:
        plot_search_records(records, path=args.plot)
    columns = _RECORD_COLUMNS + (("elapsed_ms",) if args.timings else ())
    return CommandResult(
        parameters,
        [record.to_dict(timings=args.timings) for record in records],
        columns,
        _record_lines(records, timings),
    )


def _search_repunit(args: argparse.Namespace, settings: Settings) -> CommandResult:
    if args.resume and args.stream is None:
        raise UsageError("--resume needs --stream")
    previous: list[SearchRecord] = []
    start_s = 2
    if args.resume and os.path.exists(args.stream):
        previous = [record for record in read_records(args.stream) if record.s <= args.max_s]
        last = last_recorded_exponent(args.stream)
        if last is not None:
            start_s = last + 1
            logger.info("Resuming %s after s = %d", args.stream, last)
    elif args.stream is not None and os.path.exists(args.stream):
        raise UsageError(f"{args.stream} exists; pass --resume to continue it")

    records = list(previous)
    if start_s <= args.max_s:
        iterator = iter_repunit_prime_exponents(args.max_s, settings.mr_rounds, start_s, settings.workers)
        for record in tqdm(iterator, desc="search-repunit", unit="s", disable=not settings.progress):
            if args.stream is not None:
                append_record(args.stream, record)
            records.append(record)

    result = _search_output(records, {"max_s": args.max_s, "mr_rounds": settings.mr_rounds}, args)
    report = concordance(records)
    if report.agrees:
        result.human.append(f"agrees with the published exponents on [7, {report.range_cap}]")
    else:
        result.human.append(
            f"differs from the published exponents: missing {list(report.expected_only)}, "
            f"extra {list(report.computed_only)}"
        )
    return result


def _search_deep(args: argparse.Namespace, settings: Settings) -> CommandResult:
    records = search_deep_forms(
        args.s,
        args.max_j,
        rounds=settings.mr_rounds,
        trit_budget=settings.trit_budget,
        prefilter_bound=settings.prefilter_bound,
    )
    parameters = {
        "s": args.s,
        "max_j": args.max_j,
        "mr_rounds": settings.mr_rounds,
        "trit_budget": settings.trit_budget,
    }
    return _search_output(records, parameters, args)


def _computed_sequence(against: str, cap: int, settings: Settings) -> list[int]:
    if against == "cantor-primes":
        return [certificate.p for certificate in enumerate_cantor_primes(cap, settings.workers, settings.progress)]
    if against == "repunit-exponents":
        records = iter_repunit_prime_exponents(max(cap, 2), settings.mr_rounds, workers=settings.workers)
        return [record.s for record in records if record.is_positive]
    max_s = 2
    while repunit3(max_s + 1) <= cap:
        max_s += 1
    records = iter_repunit_prime_exponents(max_s, settings.mr_rounds, workers=settings.workers)
    return [record.value for record in records if record.is_positive and record.value <= cap]


def _crosscheck(args: argparse.Namespace, settings: Settings) -> CommandResult:
    expected = load_bfile(args.bfile)
    report = cross_check(expected, _computed_sequence(args.against, args.cap, settings), args.cap)
    rows = [{"side": "expected_only", "value": str(value)} for value in report.expected_only]
    rows += [{"side": "computed_only", "value": str(value)} for value in report.computed_only]
    if report.agrees:
        human = [f"{args.bfile} agrees with the computed {args.against} up to {args.cap}"]
    else:
        logger.warning("%s differs from the computed %s up to %d", args.bfile, args.against, args.cap)
        human = [f"only in {args.bfile}: {' '.join(map(str, report.expected_only))}"]
        human.append(f"only computed: {' '.join(map(str, report.computed_only))}")
    parameters = {"bfile": args.bfile, "cap": args.cap, "against": args.against}
    return CommandResult(parameters, rows, ("side", "value"), human)


_COMMANDS = {
    "certify": _certify,
    "enumerate": _enumerate,
    "exclusions": _exclusions,
    "search-repunit": _search_repunit,
    "search-deep": _search_deep,
    "crosscheck": _crosscheck,
}


def _render(command: str, result: CommandResult, kind: ReportFormat) -> str:
    if kind is ReportFormat.JSON:
        return render_json(build_document(command, result.parameters, result.results))
    if kind is ReportFormat.CSV:
        return render_csv(result.columns, result.results if result.rows is None else result.rows)
    return "".join(f"{line}\n" for line in result.human)


def run(argv: Sequence[str] | None = None) -> int:
    """Runs one command and returns its exit code; results go to stdout, diagnostics to stderr."""
    try:
        args = build_parser().parse_args(argv)
        logging.basicConfig(level=args.log_level, format=LOG_FORMAT, stream=sys.stderr)
        settings = resolve_settings(
            args.config,
            mr_rounds=args.mr_rounds,
            trit_budget=args.trit_budget,
            workers=args.workers,
            progress=args.progress,
        )
        result = _COMMANDS[args.command](args, settings)
        sys.stdout.write(_render(args.command, result, ReportFormat(args.format)))
    except SystemExit as ex:
        # --help and --version
        return ex.code if isinstance(ex.code, int) else 0
    except InvariantViolation as ex:
        logger.critical("Internal error: %s", ex)
        print(f"internal error: {ex}", file=sys.stderr)
        return 2
    except (CantorError, OSError) as ex:
        print(f"error: {ex}", file=sys.stderr)
        return 1
    return 0


def main() -> int:
    return run(sys.argv[1:])
