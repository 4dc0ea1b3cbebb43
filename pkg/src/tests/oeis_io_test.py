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


from contextlib import nullcontext as does_not_raise
from pathlib import Path

import pytest
from pytest_cases import parametrize

from cantorprimes.oeis_io import (
    MalformedLine,
    NonMonotonicIndex,
    SequenceEntry,
    cross_check,
    load_bfile,
    parse_bfile,
    serialize_bfile,
)

ASSETS = Path(__file__).parent / "assets"


@parametrize(
    "text, entries",
    [
        ("1 13\n2 1093\n", [SequenceEntry(1, 13), SequenceEntry(2, 1093)]),
        ("# comment\n1 7\n", [SequenceEntry(1, 7)]),
        ("\n  \n0 5\n1\t6\n", [SequenceEntry(0, 5), SequenceEntry(1, 6)]),
        ("-2 1\n-1 2\n", [SequenceEntry(-2, 1), SequenceEntry(-1, 2)]),
        ("", []),
    ],
)
def test_parse_bfile(text, entries):
    assert parse_bfile(text) == entries


def test_parse_bfile_big_values():
    value = 3**2000
    assert parse_bfile(f"1 {value}\n")[0].value == value


@parametrize(
    "text, expectation, line_number",
    [
        ("1 thirteen\n", pytest.raises(MalformedLine), 1),
        ("# header\n1 13\n2 5 7\n", pytest.raises(MalformedLine), 3),
        ("1 13\n1 14\n", pytest.raises(NonMonotonicIndex), 2),
        ("1 13\n2 14\n", does_not_raise(), None),
    ],
)
def test_parse_bfile_errors(text, expectation, line_number):
    with expectation as info:
        parse_bfile(text)
    if line_number is not None:
        assert info.value.line_number == line_number


def test_serialize_bfile_parses_back():
    entries = [SequenceEntry(1, 13), SequenceEntry(2, 1093), SequenceEntry(3, 797161)]
    text = serialize_bfile(entries, comments=["base-3 repunit primes"])
    assert text.startswith("# base-3 repunit primes\n")
    assert parse_bfile(text) == entries


def test_load_bfile():
    entries = load_bfile(ASSETS / "b076481.txt")
    assert [entry.value for entry in entries] == [13, 1093, 797161]


def test_load_bfile_not_utf8(tmp_path):
    path = tmp_path / "b.txt"
    path.write_bytes(b"# header\n1 13\n2 \xff\xfe\n")
    with pytest.raises(MalformedLine) as exc_info:
        load_bfile(path)
    assert exc_info.value.line_number == 3


@parametrize(
    "expected, computed, cap, expected_only, computed_only",
    [
        ([13, 1093], [13, 1093, 797161], 2000, (), ()),
        ([13], [757], 1000, (13,), (757,)),
        ([], [], 10, (), ()),
    ],
)
def test_cross_check(expected, computed, cap, expected_only, computed_only):
    entries = [SequenceEntry(index, value) for index, value in enumerate(expected, 1)]
    report = cross_check(entries, computed, cap)
    assert report.expected_only == expected_only
    assert report.computed_only == computed_only
    assert report.agrees == (not expected_only and not computed_only)


def test_cross_check_symmetric():
    left, right = [13, 757, 1093], [13, 1093, 797161]
    forward = cross_check([SequenceEntry(i, v) for i, v in enumerate(left)], right, 10**6)
    backward = cross_check([SequenceEntry(i, v) for i, v in enumerate(right)], left, 10**6)
    assert forward.expected_only == backward.computed_only == (757,)
    assert forward.computed_only == backward.expected_only == (797161,)
