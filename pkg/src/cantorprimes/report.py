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
Rendering of command results as human-readable text, JSON or CSV.

A JSON report is one document per run, ``{command, parameters, results, version}``,
validated against the packaged ``report`` schema. Output is deterministic: keys are
sorted and no timestamps are added.
"""

from __future__ import annotations

import csv
import enum
import io
import json
from collections.abc import Iterable, Mapping, Sequence
from typing import Any

import jsonschema

import cantorprimes
from cantorprimes.utils.resources import load_schema


class ReportFormat(enum.Enum):
    HUMAN = "human"
    JSON = "json"
    CSV = "csv"


def build_document(command: str, parameters: Mapping[str, Any], results: Sequence[Any]) -> dict[str, Any]:
    return {
        "command": command,
        "parameters": dict(parameters),
        "results": list(results),
        "version": cantorprimes.__version__,
    }


def render_json(document: Mapping[str, Any]) -> str:
    """Serializes a report document; raises jsonschema.ValidationError on a malformed one."""
    jsonschema.validate(document, schema=load_schema("report"))
    return json.dumps(document, indent=2, sort_keys=True) + "\n"


def _cell(value: Any) -> Any:
    if isinstance(value, (list, tuple)):
        return " ".join(map(str, value))
    if isinstance(value, Mapping):
        return json.dumps(value, sort_keys=True)
    return "" if value is None else value


def render_csv(columns: Sequence[str], rows: Iterable[Mapping[str, Any]]) -> str:
    """CSV with a header row; lists are joined by spaces, nested mappings written as JSON."""
    output = io.StringIO()
    writer = csv.DictWriter(output, fieldnames=list(columns), extrasaction="ignore", lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({key: _cell(value) for key, value in row.items()})
    return output.getvalue()
