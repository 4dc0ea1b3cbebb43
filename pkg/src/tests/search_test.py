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


import json

import pytest
from pytest_cases import parametrize
from pytest_mock import MockerFixture

import cantorprimes.search as search
from cantorprimes.cyclotomic import BudgetExceeded, CongruenceViolation
from cantorprimes.errors import NotPrime
from cantorprimes.primality import Status
from cantorprimes.search import (
    StreamError,
    append_record,
    concordance,
    iter_repunit_prime_exponents,
    known_positive_exponents,
    last_recorded_exponent,
    read_records,
    search_deep_forms,
    search_repunit_prime_exponents,
)


@pytest.fixture(name="records_to_1627", scope="module")
def fixture_records_to_1627():
    return search_repunit_prime_exponents(1627)


def _positives(records):
    return [record.s for record in records if record.is_positive]


def test_known_positive_exponents():
    exponents = known_positive_exponents()
    assert len(exponents) == 17
    assert exponents[:3] == [7, 13, 71]
    assert exponents[-1] == 877843


@parametrize("max_s, positives", [(20, [3, 7, 13]), (110, [3, 7, 13, 71, 103])])
def test_search_repunit_small(max_s, positives):
    records = search_repunit_prime_exponents(max_s)
    assert _positives(records) == positives
    assert [record.s for record in records] == [s for s in range(2, max_s + 1) if all(s % d for d in range(2, s))]


def test_search_repunit_two():
    (record,) = search_repunit_prime_exponents(2)
    assert (record.s, record.j, record.value) == (2, 0, 4)
    assert record.verdict.status is Status.COMPOSITE


def test_search_repunit_concordance_to_1627(records_to_1627):
    assert [s for s in _positives(records_to_1627) if s >= 7] == [7, 13, 71, 103, 541, 1091, 1367, 1627]
    assert 3 in _positives(records_to_1627)
    assert concordance(records_to_1627).agrees


def test_search_repunit_records(records_to_1627):
    for record in records_to_1627:
        assert record.j == 0
        assert record.digits3 == record.s
        if record.is_positive and record.s > 2:
            assert record.residue_mod4 == 1
    labels = {record.s: record.verdict for record in records_to_1627}
    assert labels[13].status is Status.PRIME
    assert labels[1627].status is Status.PROBABLE_PRIME
    assert labels[1627].rounds == 64


def test_concordance_reports_missing_exponent(records_to_1627):
    records = [record for record in records_to_1627 if record.s != 71]
    report = concordance(records)
    assert report.expected_only == (71,)
    assert report.computed_only == ()


def test_iter_repunit_prime_exponents_resumes():
    records = list(iter_repunit_prime_exponents(30, start_s=14))
    assert [record.s for record in records] == [17, 19, 23, 29]


def test_iter_repunit_prime_exponents_workers():
    serial = list(iter_repunit_prime_exponents(200))
    parallel = list(iter_repunit_prime_exponents(200, workers=2))
    assert [(r.s, r.verdict) for r in parallel] == [(r.s, r.verdict) for r in serial]


def test_search_deep_forms_small():
    records = search_deep_forms(3, 1)
    assert [record.value for record in records] == [13, 757]
    assert all(record.is_positive for record in records)


def test_search_deep_forms_properties():
    records = search_deep_forms(3, 4)
    assert [record.digits3 for record in records] == [3, 7, 19, 55, 163]
    assert records[2].value == 387440173
    for record in records:
        assert record.digits3 == (record.s - 1) * record.s**record.j + 1
        if record.is_positive:
            assert record.value % 4 == 1


def test_search_deep_forms_composite():
    (record,) = search_deep_forms(5, 0)
    assert record.value == 121
    assert record.verdict.status is Status.COMPOSITE
    assert record.verdict.witness == 11


def test_search_deep_forms_prefilter(mocker: MockerFixture):
    spy = mocker.spy(search, "trial_division")
    search_deep_forms(3, 2, prefilter_bound=100)
    # j = 0 never goes through the prefilter
    assert spy.call_count == 2


def test_search_deep_forms_budget():
    with pytest.raises(BudgetExceeded):
        search_deep_forms(3, 6, trit_budget=1000)
    with pytest.raises(NotPrime):
        search_deep_forms(9, 1)


def test_record_to_dict():
    (record,) = search_deep_forms(3, 0)
    data = record.to_dict()
    assert data["verdict"] == "prime"
    assert "elapsed_ms" not in data
    assert "elapsed_ms" in record.to_dict(timings=True)


def test_record_stream(tmp_path):
    path = tmp_path / "search.jsonl"
    assert last_recorded_exponent(path) is None
    records = search_repunit_prime_exponents(20)
    for record in records:
        append_record(path, record)
    restored = read_records(path)
    assert [(r.s, r.verdict) for r in restored] == [(r.s, r.verdict) for r in records]
    assert last_recorded_exponent(path) == 19


def test_record_stream_truncated_tail(tmp_path):
    path = tmp_path / "search.jsonl"
    for record in search_repunit_prime_exponents(7):
        append_record(path, record)
    with open(path, "a", encoding="utf-8") as file:
        file.write('{"s": 11, "j"')
    assert last_recorded_exponent(path) == 7


def test_record_stream_corrupt(tmp_path):
    path = tmp_path / "search.jsonl"
    (record,) = search_repunit_prime_exponents(2)
    path.write_text("not a record\n" + json.dumps(record.to_dict(timings=True)) + "\n", encoding="utf-8")
    with pytest.raises(StreamError):
        read_records(path)


def test_record_stream_append_after_truncated_tail(tmp_path):
    path = tmp_path / "search.jsonl"
    records = search_repunit_prime_exponents(13)
    for record in records[:4]:
        append_record(path, record)
    with open(path, "a", encoding="utf-8") as file:
        file.write('{"s": 11, "j"')
    for record in records[4:]:
        append_record(path, record)
    assert [record.s for record in read_records(path)] == [2, 3, 5, 7, 11, 13]
    assert len(path.read_text(encoding="utf-8").splitlines()) == 6


def test_record_stream_unterminated_record_is_kept(tmp_path):
    path = tmp_path / "search.jsonl"
    first, second = search_repunit_prime_exponents(3)
    path.write_text(json.dumps(first.to_dict(timings=True)), encoding="utf-8")
    append_record(path, second)
    assert [record.s for record in read_records(path)] == [2, 3]


def test_record_stream_not_utf8(tmp_path):
    path = tmp_path / "search.jsonl"
    path.write_bytes(b'{"s": \xff}\n')
    with pytest.raises(StreamError):
        read_records(path)


def test_search_deep_forms_congruence(mocker: MockerFixture, caplog):
    mocker.patch.object(search, "phi_prime_at", return_value=7)
    with pytest.raises(CongruenceViolation):
        search_deep_forms(3, 0)
    assert "3 mod 4" in caplog.text


def test_search_repunit_congruence(mocker: MockerFixture):
    mocker.patch.object(search, "phi_prime_at", return_value=7)
    with pytest.raises(CongruenceViolation):
        list(iter_repunit_prime_exponents(5))
