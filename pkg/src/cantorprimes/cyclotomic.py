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
Base-3 repunits and cyclotomic values at prime index.

Only the prime-index case is implemented: for prime s, Phi_s(y) = y**(s-1) + ... + y + 1.
A composite index is refused.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import gmpy2
from sympy import divisors

from cantorprimes.errors import BadArgument, CantorError, InvariantViolation
from cantorprimes.primality import is_prime, require_prime, require_prime_above_three

logger = logging.getLogger(__name__)

#: Upper bound on (s - 1) * s**j, the trit length of Phi_s(3**(s**j)) minus one.
DEFAULT_TRIT_BUDGET = 300_000


class BudgetExceeded(CantorError):
    """Raised, if a cyclotomic value would exceed the configured trit budget."""


class CongruenceViolation(InvariantViolation):
    """A value of the form Phi_s(3**(s**j)) was found not congruent to 1 mod 4."""


@dataclass(frozen=True)
class CyclotomicForm:
    s: int
    j: int
    value: int
    residue_mod4: int

    @property
    def trits(self) -> int:
        """Number of base-3 digits of ``value``: (s - 1) * s**j + 1."""
        return form_trits(self.s, self.j)


@dataclass(frozen=True)
class RepunitFactorization:
    """Witness of R_(r*s) = R_r * (3**((s-1)r) + ... + 3**r + 1)."""

    r: int
    s: int
    R_r: int
    cofactor: int
    R_q: int

    @property
    def q(self) -> int:
        return self.r * self.s


def _geometric_sum(y: int, terms: int) -> int:
    return (y**terms - 1) // (y - 1)


def _exact_log(r: int, s: int) -> int | None:
    """j with s**j == r, or None."""
    j = 0
    while r % s == 0:
        r //= s
        j += 1
    return j if r == 1 else None


def form_trits(s: int, j: int) -> int:
    return (s - 1) * s**j + 1


def repunit3(q: int) -> int:
    """The base-3 repunit with q digits, (3**q - 1) / 2."""
    if q < 1:
        raise BadArgument(f"repunit length must be positive, got {q}")
    return (3**q - 1) // 2


def repunit_split(r: int, s: int) -> RepunitFactorization:
    """Factors R_(r*s) through R_r; the product is checked before returning."""
    if r < 1 or s < 1:
        raise BadArgument(f"r and s must be positive, got ({r}, {s})")
    R_r = repunit3(r)
    cofactor = _geometric_sum(3**r, s)
    R_q = repunit3(r * s)
    if R_r * cofactor != R_q:
        raise InvariantViolation(f"R_{r} * cofactor != R_{r * s}")
    return RepunitFactorization(r, s, R_r, cofactor, R_q)


def phi_prime_at(s: int, y: int) -> int:
    """Phi_s(y) = (y**s - 1) / (y - 1) for prime s and y >= 2."""
    require_prime(s)
    if y < 2:
        raise BadArgument(f"y must be at least 2, got {y}")
    return _geometric_sum(y, s)


def require_odd_prime(s: int) -> None:
    require_prime(s)
    if s == 2:
        raise BadArgument("s must be an odd prime")


def residue_mod4(s: int, j: int) -> int:
    """
    Phi_s(3**(s**j)) mod 4 for an odd prime s, by modular arithmetic only.

    3**e mod 4 depends on the parity of e alone, and y**2 == 1 (mod 4) for odd y, so the
    s terms alternate between 1 and y.
    """
    require_odd_prime(s)
    if j < 0:
        raise BadArgument(f"j must be non-negative, got {j}")
    y = pow(3, pow(s, j, 2), 4)
    return ((s + 1) // 2 + (s // 2) * y) % 4


def cantor_form_value(s: int, j: int, trit_budget: int = DEFAULT_TRIT_BUDGET) -> CyclotomicForm:
    """
    Builds Phi_s(3**(s**j)) exactly.

    Raises:
        BudgetExceeded: if (s - 1) * s**j exceeds ``trit_budget``.
    """
    require_odd_prime(s)
    if j < 0:
        raise BadArgument(f"j must be non-negative, got {j}")
    r = s**j
    if (s - 1) * r > trit_budget:
        raise BudgetExceeded(f"Phi_{s}(3^({s}^{j})) needs {(s - 1) * r + 1} trits, budget is {trit_budget}")
    value = _geometric_sum(3**r, s)
    return CyclotomicForm(s, j, value, value % 4)


def find_cantor_form(p: int) -> tuple[int, int] | None:
    """
    Finds (s, j) with Phi_s(3**(s**j)) == p, or None.

    Phi_s(3**r) has exactly r(s - 1) + 1 trits, so (s - 1) * s**j must equal the trit
    count of p minus one; the divisors of that number enumerate every candidate.
    """
    require_prime_above_three(p)
    span = len(gmpy2.digits(p, 3)) - 1
    for divisor in divisors(span):
        s = divisor + 1
        if s % 2 == 0 or not is_prime(s).is_positive:
            continue
        j = _exact_log(span // divisor, s)
        if j is not None and _geometric_sum(3 ** (s**j), s) == p:
            return s, j
    return None


def is_cantor_by_cyclotomic_form(p: int) -> bool:
    """
    True iff p = Phi_s(3**(s**j)) for an odd prime s and j >= 0.

    The congruence p == 1 (mod 4) is checked as a self-test.

    Raises:
        CongruenceViolation: if a matching form is not 1 mod 4.
    """
    form = find_cantor_form(p)
    if form is None:
        return False
    if p % 4 != 1:
        logger.error("p = %d matches form %s but p mod 4 = %d", p, form, p % 4)
        raise CongruenceViolation(f"{p} = Phi_{form[0]}(3^({form[0]}^{form[1]})) is not 1 mod 4")
    return True
