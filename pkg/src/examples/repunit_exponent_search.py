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

from matplotlib import pyplot as plt

from cantorprimes.search import (
    concordance,
    search_deep_forms,
    search_repunit_prime_exponents,
)
from cantorprimes.utils.plotting import plot_search_records

logging.basicConfig(level=logging.INFO, format="%(asctime)s - %(levelname)s - %(message)s")

# %% Prime exponents s with Phi_s(3) = (3^s - 1) / 2 prime, up to s = 1627
# The worker processes re-import this script where they are spawned.
if __name__ == "__main__":
    records = search_repunit_prime_exponents(1627, rounds=64, workers=4, progress=True)
    print([record.s for record in records if record.is_positive])
    print(concordance(records))

# %% Time per candidate against its size
if __name__ == "__main__":
    fig, ax = plot_search_records(records)
    plt.show()

# %% Deep forms Phi_3(3^(3^j)); every (probable) prime among them is 1 mod 4
for record in search_deep_forms(3, 6):
    print(record.j, record.digits3, record.verdict.label, record.residue_mod4)
