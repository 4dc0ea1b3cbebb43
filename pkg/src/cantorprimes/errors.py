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
Exception roots shared by all cantorprimes modules.

User-facing errors derive from :class:`CantorError`; they describe bad input and map
to exit code 1 on the command line. Theorem-violation traps derive from
:class:`InvariantViolation`; they can only be raised by an implementation bug and map
to exit code 2.
"""

from __future__ import annotations


class CantorError(Exception):
    """Base class for errors caused by invalid input."""


class NotPrime(CantorError, ValueError):
    """Raised, if an argument that has to be prime is not."""

    def __init__(self, n: int):
        super().__init__(n)
        self.n = n

    def __str__(self) -> str:
        return f"{self.n} is not prime"


class DivisibleByThree(CantorError, ValueError):
    """Raised for p = 3, whose reciprocal terminates in base 3."""

    def __init__(self, p: int = 3):
        super().__init__(p)
        self.p = p

    def __str__(self) -> str:
        return f"{self.p} is divisible by three; 1/{self.p} has no base-3 repetend"


class BadArgument(CantorError, ValueError):
    """Raised, if an argument lies outside the domain of an operation."""


class InvariantViolation(Exception):
    """An identity guaranteed by the theory failed to hold. Always a bug."""
