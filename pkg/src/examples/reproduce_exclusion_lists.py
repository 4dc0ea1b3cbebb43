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

# %% Setup

import logging

from cantorprimes.enumeration import certify, enumerate_cantor_primes, exclusion_report
from cantorprimes.ternary_oracle import Stage, exclusion_stage, ternary_digits_of_reciprocal

logging.basicConfig(level=logging.INFO, format="%(asctime)s - %(levelname)s - %(message)s")

# %% Primes without a power of 3 in (2p, 3p): the first non-zero digit of 1/p is a 1.
print(exclusion_report(50, Stage.FAILS_FIRST_DIGIT))

# %% Primes passing the first condition but failing the second one.
# The list starts 11, 31, 37, ...; the first two trits of these primes are 0 or 2.
print(exclusion_report(1009, Stage.FAILS_SECOND_DIGIT))

# %% The interval chain of a Cantor prime closes after one period.
verdict = exclusion_stage(757)
print(verdict.witness_exponents, verdict.chain)
print(ternary_digits_of_reciprocal(757).digits)

# %% Certificates for all Cantor primes up to one million; takes a while.
# The worker processes re-import this script where they are spawned.
if __name__ == "__main__":
    for certificate in enumerate_cantor_primes(10**6, workers=4, progress=True):
        print(certificate.p, certificate.form, certificate.K)

# %% A prime that is rejected at the second digit
print(certify(991))
