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


import gmpy2
import pytest
from pytest_cases import parametrize
from pytest_mock import MockerFixture

from cantorprimes.cyclotomic import (
    BudgetExceeded,
    CongruenceViolation,
    cantor_form_value,
    find_cantor_form,
    is_cantor_by_cyclotomic_form,
    phi_prime_at,
    repunit3,
    repunit_split,
    residue_mod4,
)
from cantorprimes.errors import BadArgument, DivisibleByThree, NotPrime
from cantorprimes.primality import is_prime, primes_up_to


def test_repunit3():
    assert repunit3(1) == 1
    assert repunit3(3) == 13
    assert repunit3(7) == 1093
    assert gmpy2.digits(repunit3(20), 3) == "1" * 20
    with pytest.raises(BadArgument):
        repunit3(0)


def test_repunit_split():
    for r in range(1, 13):
        for s in range(1, 13):
            split = repunit_split(r, s)
            assert split.q == r * s
            assert split.R_r * split.cofactor == split.R_q == repunit3(r * s)


def test_repunit_parity_rule():
    for q in range(1, 201):
        assert repunit3(q) % 4 == (0 if q % 2 == 0 else 1)


def test_residue_mod4_is_one_for_odd_primes():
    for s in primes_up_to(97)[1:]:
        for j in range(7):
            assert residue_mod4(s, j) == 1


@parametrize("s, j", [(3, 0), (3, 1), (3, 2), (5, 0), (5, 1), (7, 2), (13, 1)])
def test_residue_mod4_matches_value(s, j):
    form = cantor_form_value(s, j)
    assert form.residue_mod4 == residue_mod4(s, j) == form.value % 4
    assert form.trits == len(gmpy2.digits(form.value, 3))


@parametrize(
    "s, j, expected_exception",
    [(2, 0, BadArgument), (4, 1, NotPrime), (9, 0, NotPrime), (15, 2, NotPrime), (3, -1, BadArgument)],
)
def test_residue_mod4_domain(s, j, expected_exception):
    with pytest.raises(expected_exception):
        residue_mod4(s, j)


def test_phi_prime_at():
    assert phi_prime_at(3, 27) == 757
    assert phi_prime_at(7, 3) == 1093
    assert phi_prime_at(2, 3) == 4
    with pytest.raises(NotPrime):
        phi_prime_at(4, 3)
    with pytest.raises(BadArgument):
        phi_prime_at(3, 1)


def test_cantor_form_value():
    assert cantor_form_value(3, 1).value == 757
    assert cantor_form_value(3, 2).value == 387440173
    with pytest.raises(BudgetExceeded):
        cantor_form_value(3, 4, trit_budget=100)
    with pytest.raises(NotPrime):
        cantor_form_value(9, 0)
    with pytest.raises(BadArgument):
        cantor_form_value(2, 0)


@parametrize("p", [5, 7, 11, 991, 1009, 1097])
def test_find_cantor_form_without_form(p):
    assert find_cantor_form(p) is None


def test_find_cantor_form_inverts_every_small_prime_form():
    found = []
    for s in primes_up_to(13)[1:]:
        j = 0
        while (s - 1) * s**j <= 60:
            form = cantor_form_value(s, j)
            if is_prime(form.value).is_positive:
                assert find_cantor_form(form.value) == (s, j)
                found.append((s, j))
            j += 1
    assert {(3, 0), (3, 1), (7, 0), (13, 0)} <= set(found)


def test_find_cantor_form_rejects_three():
    with pytest.raises(DivisibleByThree):
        find_cantor_form(3)


def test_is_cantor_by_cyclotomic_form():
    assert is_cantor_by_cyclotomic_form(757)
    assert not is_cantor_by_cyclotomic_form(991)


def test_congruence_self_test(mocker: MockerFixture):
    mocker.patch("cantorprimes.cyclotomic.find_cantor_form", return_value=(3, 0))
    with pytest.raises(CongruenceViolation):
        is_cantor_by_cyclotomic_form(7)
