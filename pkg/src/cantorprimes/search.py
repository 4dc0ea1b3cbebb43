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
Bounded searches for primes of the form Phi_s(3**(s**j)).

``j = 0`` gives the base-3 repunit primes R_s; ``j >= 1`` gives deep Cantor prime
candidates. Records can be streamed to an append-only JSON-lines file so a long run can
resume after the last recorded exponent.
"""

from __future__ import annotations

import json
import logging
import os
import time
from collections.abc import Iterable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from os import PathLike
from typing import Any

from tqdm import tqdm

from cantorprimes.cyclotomic import (
    DEFAULT_TRIT_BUDGET,
    BudgetExceeded,
    CongruenceViolation,
    form_trits,
    phi_prime_at,
    require_odd_prime,
)
from cantorprimes.errors import BadArgument, CantorError
from cantorprimes.oeis_io import CrossCheckReport, SequenceEntry, cross_check
from cantorprimes.primality import (
    DEFAULT_MR_ROUNDS,
    PrimalityVerdict,
    Status,
    is_prime,
    iter_primes,
    trial_division,
)

logger = logging.getLogger(__name__)

#: Prime exponents s for which Phi_s(3) is known to be (probably) prime.
KNOWN_POSITIVE_EXPONENTS: tuple[int, ...] = (
    7,
    13,
    71,
    103,
    541,
    1091,
    1367,
    1627,
    4177,
    9011,
    9551,
    36913,
    43063,
    49681,
    57917,
    483611,
    877843,
)

DEFAULT_PREFILTER_BOUND = 10**6


class StreamError(CantorError):
    """Raised, if a record stream contains a line that is not a search record."""


@dataclass(frozen=True)
class SearchRecord:
    """Primality verdict on Phi_s(3**(s**j)); ``digits3`` is its number of trits."""

    s: int
    j: int
    digits3: int
    verdict: PrimalityVerdict
    elapsed_ms: float = 0.0

    @property
    def value(self) -> int:
        return self.verdict.n

    @property
    def residue_mod4(self) -> int:
        return self.verdict.n % 4

    @property
    def is_positive(self) -> bool:
        return self.verdict.is_positive

    def to_dict(self, timings: bool = False) -> dict[str, Any]:
        """JSON-ready view. The value itself is omitted; ``elapsed_ms`` only with ``timings``."""
        data: dict[str, Any] = {
            "s": self.s,
            "j": self.j,
            "digits3": self.digits3,
            "verdict": self.verdict.status.value,
            "label": self.verdict.label,
            "rounds": self.verdict.rounds,
            "witness": None if self.verdict.witness is None else str(self.verdict.witness),
            "residue_mod4": self.residue_mod4,
        }
        if timings:
            data["elapsed_ms"] = round(self.elapsed_ms, 3)
        return data

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> SearchRecord:
        s, j = int(data["s"]), int(data["j"])
        witness = data.get("witness")
        verdict = PrimalityVerdict(
            phi_prime_at(s, 3 ** (s**j)),
            Status(data["verdict"]),
            rounds=data.get("rounds"),
            witness=None if witness is None else int(witness),
        )
        return cls(s, j, int(data["digits3"]), verdict, float(data.get("elapsed_ms", 0.0)))


def known_positive_exponents() -> list[int]:
    return list(KNOWN_POSITIVE_EXPONENTS)


def _timed_verdict(s: int, j: int, rounds: int, prefilter_bound: int | None) -> SearchRecord:
    """Builds Phi_s(3**(s**j)) and decides it, timing the work."""
    start = time.perf_counter()
    value = phi_prime_at(s, 3 ** (s**j))
    verdict = None
    if prefilter_bound is not None and j >= 1 and value > prefilter_bound:
        factor = trial_division(value, prefilter_bound)
        if factor is not None:
            verdict = PrimalityVerdict(value, Status.COMPOSITE, witness=factor)
    if verdict is None:
        verdict = is_prime(value, rounds)
    elapsed_ms = (time.perf_counter() - start) * 1000
    logger.debug("Phi_%d(3^(%d^%d)): %s after %.1f ms", s, s, j, verdict.label, elapsed_ms)
    return SearchRecord(s, j, form_trits(s, j), verdict, elapsed_ms)


def _check_congruence(record: SearchRecord) -> SearchRecord:
    """Every (probable) prime of the form Phi_s(3**(s**j)), s odd, is 1 mod 4."""
    if record.s != 2 and record.is_positive and record.residue_mod4 != 1:
        logger.error("Positive record for s = %d, j = %d is %d mod 4", record.s, record.j, record.residue_mod4)
        raise CongruenceViolation(
            f"Phi_{record.s}(3^({record.s}^{record.j})) is {record.verdict.label} but {record.residue_mod4} mod 4"
        )
    return record


def _repunit_record(s: int, rounds: int) -> SearchRecord:
    return _timed_verdict(s, 0, rounds, None)


def iter_repunit_prime_exponents(
    max_s: int,
    rounds: int = DEFAULT_MR_ROUNDS,
    start_s: int = 2,
    workers: int = 1,
) -> Iterator[SearchRecord]:
    """
    Yields one record per prime start_s <= s <= max_s, in ascending s.

    Candidates are independent; with ``workers`` > 1 they are decided in a process pool
    and still yielded in order.
    """
    if max_s < 2:
        raise BadArgument(f"max_s must be at least 2, got {max_s}")
    exponents = list(iter_primes(start_s, max_s + 1))
    if 3 in exponents:
        logger.info("s = 3 is included: Phi_3(3) = 13 is prime although published lists start at s = 7")
    logger.info("Searching %d prime exponents in [%d, %d]", len(exponents), max(start_s, 2), max_s)
    if workers <= 1:
        for s in exponents:
            yield _check_congruence(_repunit_record(s, rounds))
        return
    with ProcessPoolExecutor(max_workers=workers) as executor:
        for record in executor.map(_repunit_record, exponents, [rounds] * len(exponents)):
            yield _check_congruence(record)


def search_repunit_prime_exponents(
    max_s: int,
    rounds: int = DEFAULT_MR_ROUNDS,
    workers: int = 1,
    progress: bool = False,
) -> list[SearchRecord]:
    """
    Decides Phi_s(3) = R_s for every prime s <= max_s.

    Verdicts above the deterministic limit are probable primes and labelled as such.
    """
    records = list(
        tqdm(
            iter_repunit_prime_exponents(max_s, rounds, workers=workers),
            desc="search-repunit",
            unit="s",
            disable=not progress,
        )
    )
    positives = [record.s for record in records if record.is_positive]
    logger.info("Positive exponents up to %d: %s", max_s, positives)
    return records


def search_deep_forms(
    s: int,
    max_j: int,
    rounds: int = DEFAULT_MR_ROUNDS,
    trit_budget: int = DEFAULT_TRIT_BUDGET,
    prefilter_bound: int | None = DEFAULT_PREFILTER_BOUND,
) -> list[SearchRecord]:
    """
    Decides Phi_s(3**(s**j)) for 0 <= j <= max_j.

    For j >= 1, trial division by the primes below ``prefilter_bound`` runs before the
    probabilistic test.

    Raises:
        BudgetExceeded: if the largest value would need more than ``trit_budget`` trits.
        CongruenceViolation: if a positive verdict falls on a value that is not 1 mod 4.
    """
    require_odd_prime(s)
    if max_j < 0:
        raise BadArgument(f"max_j must be non-negative, got {max_j}")
    if form_trits(s, max_j) - 1 > trit_budget:
        raise BudgetExceeded(
            f"Phi_{s}(3^({s}^{max_j})) needs {form_trits(s, max_j)} trits, budget is {trit_budget}"
        )
    return [_check_congruence(_timed_verdict(s, j, rounds, prefilter_bound)) for j in range(max_j + 1)]


def concordance(records: Iterable[SearchRecord], lower: int = 7) -> CrossCheckReport:
    """
    Compares the positive exponents of a repunit search with the published list.

    Only exponents in [lower, largest searched s] are compared, so the s = 3 hit and the
    unsearched tail of the list are not counted against either side.
    """
    records = [record for record in records if record.j == 0]
    if not records:
        return CrossCheckReport((), (), lower)
    cap = max(record.s for record in records)
    expected = [
        SequenceEntry(index, s) for index, s in enumerate(KNOWN_POSITIVE_EXPONENTS, 1) if s >= lower
    ]
    computed = [record.s for record in records if record.is_positive and record.s >= lower]
    report = cross_check(expected, computed, cap)
    if report.agrees:
        logger.info("Search agrees with the published exponents on [%d, %d]", lower, cap)
    else:
        logger.warning(
            "Search differs from the published exponents: missing %s, extra %s",
            report.expected_only,
            report.computed_only,
        )
    return report


def _complete_tail(path: str | PathLike) -> None:
    """
    Makes the stream end with a newline before anything is appended.

    A last line without newline is kept if it holds a record and cut off otherwise, so a
    torn record from an interrupted run never ends up in the middle of the stream.
    """
    try:
        file = open(path, "rb+")
    except FileNotFoundError:
        return
    with file:
        size = file.seek(0, os.SEEK_END)
        if size == 0:
            return
        file.seek(size - 1)
        if file.read(1) == b"\n":
            return
        file.seek(0)
        data = file.read()
        start = data.rfind(b"\n") + 1
        try:
            SearchRecord.from_dict(json.loads(data[start:]))
        except (ValueError, KeyError, TypeError):
            logger.warning("Dropping incomplete last record in %s", path)
            file.truncate(start)
        else:
            file.write(b"\n")


def append_record(path: str | PathLike, record: SearchRecord) -> None:
    """Appends one record as a JSON line; timings are always stored."""
    _complete_tail(path)
    with open(path, "a", encoding="utf-8") as file:
        file.write(json.dumps(record.to_dict(timings=True), sort_keys=True) + "\n")


def read_records(path: str | PathLike) -> list[SearchRecord]:
    """
    Reads a record stream written by :func:`append_record`.

    A truncated last line, left by an interrupted run, is skipped with a warning.

    Raises:
        StreamError: for any other line that does not hold a record, or if the file is not UTF-8.
    """
    try:
        with open(path, encoding="utf-8") as file:
            text = file.read()
    except UnicodeDecodeError as ex:
        raise StreamError(f"{path} is not UTF-8 text: {ex.reason} at byte {ex.start}") from ex
    lines = [line for line in text.splitlines() if line.strip()]
    records = []
    for line_number, line in enumerate(lines, 1):
        try:
            records.append(SearchRecord.from_dict(json.loads(line)))
        except (ValueError, KeyError, TypeError) as ex:
            if line_number == len(lines):
                logger.warning("Skipping incomplete last record in %s", path)
                break
            raise StreamError(f"{path}, record {line_number}: {ex}") from ex
    return records


def last_recorded_exponent(path: str | PathLike) -> int | None:
    """Largest s recorded in the stream, or None for a missing or empty stream."""
    try:
        records = read_records(path)
    except FileNotFoundError:
        return None
    return max((record.s for record in records), default=None)
