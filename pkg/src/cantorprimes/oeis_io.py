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
Reading OEIS b-files and comparing their values with computed sequences.

A b-file holds one ``index value`` pair per line; lines starting with ``#`` are
comments. Files are supplied locally, nothing is fetched.
"""

from __future__ import annotations

import logging
import re
from collections.abc import Iterable
from dataclasses import dataclass
from os import PathLike

from cantorprimes.errors import CantorError

logger = logging.getLogger(__name__)

_INTEGER = re.compile(r"[+-]?\d+")


class MalformedLine(CantorError):
    """Raised for a data line that is not two integer tokens."""

    def __init__(self, line_number: int, line: str = ""):
        super().__init__(line_number, line)
        self.line_number = line_number
        self.line = line

    def __str__(self) -> str:
        return f"line {self.line_number}: expected 'index value', got {self.line!r}"


class NonMonotonicIndex(CantorError):
    """Raised, if the indices of a b-file do not strictly increase."""

    def __init__(self, line_number: int, index: int, previous: int):
        super().__init__(line_number, index, previous)
        self.line_number = line_number
        self.index = index
        self.previous = previous

    def __str__(self) -> str:
        return f"line {self.line_number}: index {self.index} does not follow {self.previous}"


@dataclass(frozen=True)
class SequenceEntry:
    index: int
    value: int


@dataclass(frozen=True)
class CrossCheckReport:
    """Values up to ``range_cap`` found on one side only."""

    expected_only: tuple[int, ...]
    computed_only: tuple[int, ...]
    range_cap: int

    @property
    def agrees(self) -> bool:
        return not self.expected_only and not self.computed_only


def parse_bfile(text: str | Iterable[str]) -> list[SequenceEntry]:
    """
    Parses b-file content, given as a string or as an iterable of lines (e.g. an open file).

    Raises:
        MalformedLine: for a non-comment, non-blank line that is not two integers.
        NonMonotonicIndex: if an index does not exceed its predecessor.
    """
    lines = text.splitlines() if isinstance(text, str) else text
    entries: list[SequenceEntry] = []
    previous: int | None = None
    for line_number, line in enumerate(lines, 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = stripped.split()
        if len(tokens) != 2 or not all(_INTEGER.fullmatch(token) for token in tokens):
            raise MalformedLine(line_number, stripped)
        index, value = int(tokens[0]), int(tokens[1])
        if previous is not None and index <= previous:
            raise NonMonotonicIndex(line_number, index, previous)
        entries.append(SequenceEntry(index, value))
        previous = index
    return entries


def load_bfile(path: str | PathLike) -> list[SequenceEntry]:
    """
    Reads and parses a b-file.

    Raises:
        MalformedLine: also for a line that is not UTF-8 text.
    """
    with open(path, "rb") as file:
        raw = file.read()
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as ex:
        line_number = raw.count(b"\n", 0, ex.start) + 1
        line = raw.splitlines()[line_number - 1].decode("utf-8", errors="replace")
        raise MalformedLine(line_number, line.strip()) from ex
    entries = parse_bfile(text)
    logger.info("Read %d entries from %s", len(entries), path)
    return entries


def serialize_bfile(entries: Iterable[SequenceEntry], comments: Iterable[str] = ()) -> str:
    lines = [f"# {comment}" for comment in comments]
    lines.extend(f"{entry.index} {entry.value}" for entry in entries)
    return "".join(f"{line}\n" for line in lines)


def cross_check(expected: Iterable[SequenceEntry], computed: Iterable[int], range_cap: int) -> CrossCheckReport:
    """Compares the values of both sides that do not exceed ``range_cap``."""
    expected_values = {entry.value for entry in expected if entry.value <= range_cap}
    computed_values = {value for value in computed if value <= range_cap}
    return CrossCheckReport(
        expected_only=tuple(sorted(expected_values - computed_values)),
        computed_only=tuple(sorted(computed_values - expected_values)),
        range_cap=range_cap,
    )
