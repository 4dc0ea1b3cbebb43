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

from __future__ import annotations

import logging
from collections.abc import Iterable
from os import PathLike

import numpy as np
from matplotlib import pyplot as plt

from cantorprimes.search import SearchRecord

logger = logging.getLogger(__name__)


def plot_search_records(
    records: Iterable[SearchRecord],
    fig=None,
    ax=None,
    path: str | PathLike | None = None,
    log_scale: bool = True,
):
    """
    Plots the time spent per candidate against its size in trits.

    Parameters
    ----------
    records : iterable of SearchRecord
        Records of a repunit or deep-form search, with timings.
    fig : matplotlib.figure.Figure, optional
        The figure object. Default is None.
    ax : matplotlib.axes.Axes, optional
        The axis object. Default is None.
    path : str or PathLike, optional
        If given, the figure is saved there and closed.
    log_scale : bool, optional
        Logarithmic time axis. Default is True.

    Returns
    -------
    fig, ax : tuple
        The figure and axis objects for further customization.
    """
    records = list(records)
    if ax is None or fig is None:
        fig, ax = plt.subplots()

    digits3 = np.array([record.digits3 for record in records], dtype=float)
    elapsed = np.array([record.elapsed_ms for record in records], dtype=float)
    positive = np.array([record.is_positive for record in records], dtype=bool)

    ax.scatter(digits3[~positive], elapsed[~positive], s=8, color="tab:gray", label="composite")
    ax.scatter(digits3[positive], elapsed[positive], s=24, color="tab:red", label="(probable) prime")
    for record in records:
        if record.is_positive:
            label = f"s={record.s}" if record.j == 0 else f"s={record.s}, j={record.j}"
            ax.annotate(label, (record.digits3, record.elapsed_ms), fontsize="x-small")
    if log_scale and elapsed.size and np.all(elapsed > 0):
        ax.set_yscale("log")
    ax.set_xlabel("size of candidate (trits)")
    ax.set_ylabel("time (ms)")
    ax.legend()
    fig.tight_layout()
    if path is not None:
        fig.savefig(path)
        plt.close(fig)
        logger.info("Saved plot of %d records to %s", len(records), path)
    return fig, ax
