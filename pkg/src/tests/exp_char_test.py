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


import pytest
from pytest_cases import parametrize
from pytest_mock import MockerFixture

import cantorprimes.exp_char as exp_char
from cantorprimes.errors import BadArgument, DivisibleByThree, NotPrime
from cantorprimes.exp_char import (
    extract_K,
    is_cantor_by_exponential_equation,
    is_zero_one_ternary,
    low_trits_of_K,
    multiplicative_order_of_3,
    repetend_from_K,
)
from cantorprimes.primality import iter_primes
from cantorprimes.ternary_oracle import ternary_digits_of_reciprocal


@parametrize("p, q", [(5, 4), (7, 6), (13, 3), (757, 9), (1093, 7), (797161, 13)])
def test_multiplicative_order_of_3(p, q):
    assert multiplicative_order_of_3(p) == q


def test_multiplicative_order_of_3_is_minimal():
    for p in iter_primes(5, 1000):
        q = multiplicative_order_of_3(p)
        assert pow(3, q, p) == 1
        assert all(pow(3, d, p) != 1 for d in range(1, q))


def test_multiplicative_order_of_3_domain():
    with pytest.raises(DivisibleByThree):
        multiplicative_order_of_3(3)
    with pytest.raises(NotPrime):
        multiplicative_order_of_3(4)


@parametrize(
    "p, q, K, offsets",
    [
        (13, 3, 1, (0,)),
        (757, 9, 13, (2, 1, 0)),
        (1093, 7, 1, (0,)),
    ],
)
def test_extract_K_cantor_primes(p, q, K, offsets):
    witness = extract_K(p)
    assert witness.satisfied
    assert (witness.q, witness.K, witness.offsets) == (q, K, offsets)
    assert 2 * p * witness.K + 1 == 3**witness.q
    assert sum(3**d for d in witness.offsets) == witness.K


def test_extract_K_non_cantor_prime():
    witness = extract_K(7)
    assert witness.K == 52
    assert not witness.satisfied
    assert witness.offsets == ()


def test_is_cantor_by_exponential_equation():
    assert is_cantor_by_exponential_equation(757)
    assert not is_cantor_by_exponential_equation(991)
    with pytest.raises(DivisibleByThree):
        is_cantor_by_exponential_equation(3)


def test_low_trits_of_K():
    assert low_trits_of_K(757, 5) == 13
    for p in iter_primes(5, 2000):
        witness = extract_K(p)
        if witness.q >= 5:
            assert low_trits_of_K(p, 5) == witness.K % 3**5


def test_screen_skips_large_powers(mocker: MockerFixture):
    spy = mocker.spy(exp_char, "_solve_for_K")
    # the order of 3 modulo 1000003 is at least 166667
    assert not is_cantor_by_exponential_equation(1_000_003)
    assert spy.call_count == 0


def test_is_zero_one_ternary():
    assert is_zero_one_ternary(13)
    assert is_zero_one_ternary(1)
    assert not is_zero_one_ternary(52)
    with pytest.raises(BadArgument):
        is_zero_one_ternary(0)


@parametrize("p", [13, 757, 1093, 797161])
def test_repetend_from_K(p):
    witness = extract_K(p)
    assert repetend_from_K(witness.K, witness.q) == ternary_digits_of_reciprocal(p).digits
