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
Primality services for the searches and characterizations.

Operands below :data:`DETERMINISTIC_LIMIT` are decided exactly with trial division and
a fixed Miller-Rabin witness set; larger operands get ``rounds`` strong-probable-prime
rounds with bases drawn from a generator seeded by the operand itself, so repeated runs
give identical verdicts.
"""

from __future__ import annotations

import enum
import functools
import logging
import math
import random
from collections.abc import Iterator
from dataclasses import dataclass

import gmpy2
import numpy as np

from cantorprimes.errors import BadArgument, DivisibleByThree, NotPrime

logger = logging.getLogger(__name__)

DEFAULT_MR_ROUNDS = 64

#: Every n below this bound is decided by the bases 2, 3, ..., 41.
DETERMINISTIC_LIMIT = 3_317_044_064_679_887_385_961_981

DEFAULT_SEGMENT_SIZE = 1 << 20

_TRIAL_LIMIT = 1000

# (exclusive bound, bases) pairs, smallest sufficient witness set first.
_WITNESS_TABLE: tuple[tuple[int, tuple[int, ...]], ...] = (
    (2_047, (2,)),
    (1_373_653, (2, 3)),
    (25_326_001, (2, 3, 5)),
    (3_215_031_751, (2, 3, 5, 7)),
    (2_152_302_898_747, (2, 3, 5, 7, 11)),
    (3_474_749_660_383, (2, 3, 5, 7, 11, 13)),
    (341_550_071_728_321, (2, 3, 5, 7, 11, 13, 17)),
    (3_825_123_056_546_413_051, (2, 3, 5, 7, 11, 13, 17, 19, 23)),
    (318_665_857_834_031_151_167_461, (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)),
    (DETERMINISTIC_LIMIT, (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)),
)


class Status(enum.Enum):
    PRIME = "prime"
    PROBABLE_PRIME = "probable prime"
    COMPOSITE = "composite"


@dataclass(frozen=True)
class PrimalityVerdict:
    """
    Outcome of a primality test.

    ``Status.PRIME`` only comes from the deterministic path. ``rounds`` is set for
    ``Status.PROBABLE_PRIME``; ``witness`` is a nontrivial divisor of ``n`` for
    ``Status.COMPOSITE`` when one fell out of the test cheaply.
    """

    n: int
    status: Status
    rounds: int | None = None
    witness: int | None = None

    @property
    def is_positive(self) -> bool:
        """True for proven and for probable primes."""
        return self.status is not Status.COMPOSITE

    @property
    def label(self) -> str:
        if self.status is Status.PROBABLE_PRIME:
            return f"probable prime ({self.rounds} rounds)"
        if self.status is Status.COMPOSITE and self.witness is not None:
            return f"composite (divisible by {self.witness})"
        return self.status.value


def _simple_sieve(limit: int) -> np.ndarray:
    """Returns all primes <= limit as an integer array."""
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return np.flatnonzero(flags)


_SMALL_PRIMES: tuple[int, ...] = tuple(_simple_sieve(_TRIAL_LIMIT).tolist())


def iter_primes(start: int, stop: int, segment_size: int = DEFAULT_SEGMENT_SIZE) -> Iterator[int]:
    """
    Yields the primes p with start <= p < stop in ascending order.

    Segmented sieve of Eratosthenes: only the base primes up to sqrt(stop) and one
    segment of flags are held in memory.
    """
    start = max(start, 2)
    if stop <= start:
        return
    base = _simple_sieve(math.isqrt(stop - 1)).tolist()
    for low in range(start, stop, segment_size):
        high = min(low + segment_size, stop)
        flags = np.ones(high - low, dtype=bool)
        for p in base:
            if p * p >= high:
                break
            first = max(p * p, -(-low // p) * p)
            flags[first - low :: p] = False
        yield from (np.flatnonzero(flags) + low).tolist()


def primes_up_to(limit: int) -> tuple[int, ...]:
    """All primes <= limit in ascending order."""
    if limit < 0:
        raise BadArgument(f"limit must be non-negative, got {limit}")
    return tuple(iter_primes(2, limit + 1))


@functools.lru_cache(maxsize=4)
def _trial_primes(bound: int) -> tuple[int, ...]:
    return primes_up_to(bound - 1)


def trial_division(n: int, bound: int) -> int | None:
    """
    Returns the smallest prime factor of n below ``bound``, or None.

    A prime n below ``bound`` is not reported as its own factor.
    """
    m = gmpy2.mpz(n)
    for p in _trial_primes(bound):
        if m % p == 0 and m != p:
            return p
    return None


def _decompose(n: gmpy2.mpz) -> tuple[gmpy2.mpz, int]:
    s = gmpy2.bit_scan1(n - 1)
    return (n - 1) >> s, s


def _strong_round(n: gmpy2.mpz, d: gmpy2.mpz, s: int, base: int) -> tuple[bool, int | None]:
    """
    One Miller-Rabin round for ``base``.

    Returns (passed, factor); factor is set when a nontrivial square root of 1 turned
    up, which splits n.
    """
    x = gmpy2.powmod(base, d, n)
    if x == 1 or x == n - 1:
        return True, None
    for _ in range(s - 1):
        y = gmpy2.powmod(x, 2, n)
        if y == n - 1:
            return True, None
        if y == 1:
            return False, int(gmpy2.gcd(x - 1, n))
        x = y
    # x squared is base^(n-1); x itself is neither 1 nor -1 here
    if gmpy2.powmod(x, 2, n) == 1:
        return False, int(gmpy2.gcd(x - 1, n))
    return False, None


def _composite(n: int, witness: int | None = None) -> PrimalityVerdict:
    return PrimalityVerdict(n, Status.COMPOSITE, witness=witness)


def is_prime(n: int, rounds: int = DEFAULT_MR_ROUNDS) -> PrimalityVerdict:
    """
    Decides primality of n.

    Args:
        n: Non-negative integer of any size.
        rounds: Number of strong-probable-prime rounds above the deterministic limit.

    Returns:
        PrimalityVerdict; PROBABLE_PRIME is never returned below DETERMINISTIC_LIMIT.
    """
    if rounds < 1:
        raise BadArgument(f"rounds must be positive, got {rounds}")
    if n < 2:
        return _composite(n)
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return PrimalityVerdict(n, Status.PRIME) if n == p else _composite(n, p)
    if n < _TRIAL_LIMIT * _TRIAL_LIMIT:
        return PrimalityVerdict(n, Status.PRIME)

    m = gmpy2.mpz(n)
    d, s = _decompose(m)
    if n < DETERMINISTIC_LIMIT:
        bases = next(bases for bound, bases in _WITNESS_TABLE if n < bound)
        for base in bases:
            passed, factor = _strong_round(m, d, s, base)
            if not passed:
                return _composite(n, factor)
        return PrimalityVerdict(n, Status.PRIME)

    rng = random.Random(n)
    for _ in range(rounds):
        passed, factor = _strong_round(m, d, s, rng.randrange(2, n - 1))
        if not passed:
            return _composite(n, factor)
    logger.debug("%d-bit operand passed %d rounds", n.bit_length(), rounds)
    return PrimalityVerdict(n, Status.PROBABLE_PRIME, rounds=rounds)


def require_prime(n: int, rounds: int = DEFAULT_MR_ROUNDS) -> PrimalityVerdict:
    """Returns the verdict for n, raises NotPrime if it is composite."""
    verdict = is_prime(n, rounds)
    if not verdict.is_positive:
        raise NotPrime(n)
    return verdict


def require_prime_above_three(p: int) -> None:
    """Validates the domain of the characterizations: p prime and p > 3."""
    require_prime(p)
    if p == 3:
        raise DivisibleByThree(p)
    if p == 2:
        raise BadArgument("p must be greater than 3")
