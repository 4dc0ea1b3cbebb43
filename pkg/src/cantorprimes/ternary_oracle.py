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
Direct membership test: the base-3 repetend of 1/p and the staged exclusion of primes
whose expansion contains a digit 1.
"""

from __future__ import annotations

import enum
import logging
from collections.abc import Iterator
from dataclasses import dataclass

import gmpy2

from cantorprimes.errors import CantorError, DivisibleByThree
from cantorprimes.primality import require_prime, require_prime_above_three

logger = logging.getLogger(__name__)


class BadInterval(CantorError, ValueError):
    """Raised for an empty or non-positive search interval."""


@dataclass(frozen=True)
class TernaryPeriod:
    """One full repetend of 1/p in base 3, starting right after the radix point."""

    p: int
    digits: tuple[int, ...]
    period: int

    @property
    def block(self) -> int:
        """The repetend read as a base-3 integer B, with B * p == 3**period - 1."""
        return int(gmpy2.mpz("".join(map(str, self.digits)), 3))

    @property
    def two_positions(self) -> tuple[int, ...]:
        """1-based positions of the digit 2 within the repetend."""
        return tuple(i for i, digit in enumerate(self.digits, 1) if digit == 2)


class Stage(enum.Enum):
    FAILS_FIRST_DIGIT = "fails-first-digit"
    FAILS_SECOND_DIGIT = "fails-second-digit"
    FAILS_AT_DIGIT = "fails-at-digit"
    PASSES = "passes"


@dataclass(frozen=True)
class ExclusionVerdict:
    """
    Result of walking the interval chain for p.

    ``witness_exponents`` are the gaps k_1, k_2, ... between confirmed 2-digits,
    ``chain`` the matching remainders D_1, D_2, ... with D_n = 3**k_n * D_(n-1) - 2p and
    D_0 = 1. ``failing_digit`` is the index n of the first non-zero digit equal to 1.
    """

    p: int
    stage: Stage
    witness_exponents: tuple[int, ...]
    chain: tuple[int, ...] = ()
    failing_digit: int | None = None

    @property
    def passes(self) -> bool:
        return self.stage is Stage.PASSES


def _trits(p: int) -> Iterator[int]:
    r = 1
    while True:
        r *= 3
        digit, r = divmod(r, p)
        yield digit
        if r == 1:
            return


def iter_reciprocal_trits(p: int) -> Iterator[int]:
    """
    Lazily yields one repetend of 1/p in base 3.

    p = 2 is accepted (1/2 = 0.111...); p = 3 terminates and is refused.
    """
    require_prime(p)
    if p == 3:
        raise DivisibleByThree(p)
    return _trits(p)


def ternary_digits_of_reciprocal(p: int) -> TernaryPeriod:
    """
    Computes one full repetend of 1/p by base-3 long division.

    Starting from remainder 1, each step takes digit = 3r // p and r = 3r mod p; the
    period ends when the remainder returns to 1.
    """
    require_prime_above_three(p)
    digits = bytearray()
    append = digits.append
    r = 1
    while True:
        r *= 3
        digit = r // p
        append(digit)
        r -= digit * p
        if r == 1:
            break
    return TernaryPeriod(p, tuple(digits), len(digits))


def is_reciprocal_in_cantor_set(p: int) -> bool:
    """
    True iff every base-3 digit of 1/p is 0 or 2.

    One period decides membership. 1/3 = 0.0222..., so p = 3 is a member; 1/2 is not.
    """
    require_prime(p)
    if p == 3:
        return True
    return all(digit != 1 for digit in _trits(p))


def power_of_3_in_open_interval(lo: int, hi: int) -> int | None:
    """
    Returns the exponent k with lo < 3**k < hi, or None.

    Raises:
        BadInterval: unless 0 < lo < hi.
    """
    if not 0 < lo < hi:
        raise BadInterval(f"need 0 < lo < hi, got ({lo}, {hi})")
    k, power = 0, 1
    while power <= lo:
        power *= 3
        k += 1
    return k if power < hi else None


_FAILURE_STAGES = {1: Stage.FAILS_FIRST_DIGIT, 2: Stage.FAILS_SECOND_DIGIT}


def exclusion_stage(p: int) -> ExclusionVerdict:
    """
    Walks the nested interval conditions for the non-zero digits of 1/p.

    The n-th non-zero digit is 2 iff some 3**k_n lies in (2p / D, 3p / D) for the
    current remainder D, equivalently 2p < 3**k_n * D < 3p. The walk stops at the first
    failing condition or when the remainder closes the period (D == 1).
    """
    require_prime_above_three(p)
    exponents: list[int] = []
    chain: list[int] = []
    remainder = 1
    while True:
        # 0 < remainder < p, so the scaled bounds stay >= 2
        k = power_of_3_in_open_interval(2 * p // remainder, -(-3 * p // remainder))
        if k is None:
            n = len(exponents) + 1
            logger.debug("%d: non-zero digit %d is 1", p, n)
            return ExclusionVerdict(
                p,
                _FAILURE_STAGES.get(n, Stage.FAILS_AT_DIGIT),
                tuple(exponents),
                tuple(chain),
                failing_digit=n,
            )
        exponents.append(k)
        remainder = 3**k * remainder - 2 * p
        chain.append(remainder)
        if remainder == 1:
            return ExclusionVerdict(p, Stage.PASSES, tuple(exponents), tuple(chain))
