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
The exponential characterization: p > 3 is a Cantor prime iff 2pK + 1 = 3**q with
q the order of 3 modulo p and K a sum of distinct powers of 3.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import gmpy2
from sympy import factorint

from cantorprimes.errors import BadArgument, InvariantViolation
from cantorprimes.primality import require_prime_above_three

logger = logging.getLogger(__name__)

#: Number of low trits of K inspected before K itself is built.
SCREEN_TRITS = 40


@dataclass(frozen=True)
class ExponentialWitness:
    """
    Solution of 2pK + 1 = 3**q for q = ord_p(3).

    ``offsets`` lists the exponents d_1 > d_2 > ... > d_n = 0 with K = sum(3**d_i);
    it is empty unless ``satisfied``.
    """

    p: int
    q: int
    K: int
    offsets: tuple[int, ...]
    satisfied: bool


def _order_of_3(p: int) -> int:
    q = p - 1
    for factor in factorint(p - 1):
        while q % factor == 0 and pow(3, q // factor, p) == 1:
            q //= factor
    return q


def multiplicative_order_of_3(p: int) -> int:
    """
    Smallest q >= 1 with 3**q == 1 (mod p).

    Divides the prime factors of p - 1 out of p - 1 as long as the power stays 1.
    """
    require_prime_above_three(p)
    return _order_of_3(p)


def low_trits_of_K(p: int, m: int) -> int:
    """
    K mod 3**m without building K, valid for q >= m.

    From 2pK = 3**q - 1 it follows that K == -(2p)**-1 (mod 3**m).
    """
    modulus = 3**m
    return -pow(2 * p, -1, modulus) % modulus


def _passes_screen(p: int, q: int) -> bool:
    if q < SCREEN_TRITS:
        return True
    return "2" not in gmpy2.digits(low_trits_of_K(p, SCREEN_TRITS), 3)


def is_zero_one_ternary(K: int) -> bool:
    """True iff every base-3 digit of K is 0 or 1, i.e. K is a sum of distinct powers of 3."""
    if K < 1:
        raise BadArgument(f"K must be positive, got {K}")
    return "2" not in gmpy2.digits(K, 3)


def _offsets(K: int) -> tuple[int, ...]:
    trits = gmpy2.digits(K, 3)
    top = len(trits) - 1
    return tuple(top - i for i, trit in enumerate(trits) if trit == "1")


def _solve_for_K(p: int, q: int) -> int:
    power = 3**q
    K, rest = divmod(power - 1, 2 * p)
    if rest:
        raise InvariantViolation(f"2p = {2 * p} does not divide 3^{q} - 1")
    # redundant with 2pK + 1 = 3^q, kept as a sanity check
    if not K < power:
        raise InvariantViolation(f"K = {K} is not below 3^{q}")
    return K


def extract_K(p: int) -> ExponentialWitness:
    """
    Computes q = ord_p(3) and K = (3**q - 1) / (2p) and tests K for 0/1 trits.

    Raises:
        NotPrime, DivisibleByThree
        InvariantViolation: if the arithmetic identities fail to hold.
    """
    require_prime_above_three(p)
    q = _order_of_3(p)
    K = _solve_for_K(p, q)
    satisfied = _passes_screen(p, q) and is_zero_one_ternary(K)
    offsets = _offsets(K) if satisfied else ()
    if satisfied and offsets[-1] != 0:
        raise InvariantViolation(f"K = {K} for p = {p} is not congruent to 1 mod 3")
    return ExponentialWitness(p, q, K, offsets, satisfied)


def is_cantor_by_exponential_equation(p: int) -> bool:
    """
    True iff 2pK + 1 = 3**q has a solution with K a sum of distinct powers of 3.

    Most primes are rejected on the low trits of K, before 3**q is formed.
    """
    require_prime_above_three(p)
    q = _order_of_3(p)
    if not _passes_screen(p, q):
        logger.debug("%d rejected on the low trits of K", p)
        return False
    return is_zero_one_ternary(_solve_for_K(p, q))


def repetend_from_K(K: int, q: int) -> tuple[int, ...]:
    """
    Digits of 1/p recovered from K: the repetend block equals 2K, padded to q trits.

    Follows from B * p = 3**q - 1 = 2pK for the repetend block B.
    """
    return tuple(int(trit) for trit in gmpy2.digits(2 * K, 3).zfill(q))
