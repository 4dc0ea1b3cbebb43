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

import functools
import importlib.resources as res
import json
from pathlib import Path
from typing import Any


def import_resources(package: res.Package, ext: str = "*", recursive: bool = True) -> list[Path]:
    """
    Loads resource files from a given package and returns them as list of Path-objects.

    Args:
        package: Package to load the resources from.
        ext: File extension, eg. "*.json". Defaults to "*".
        recursive: Shall resources also load from subdirectories? Defaults to True.

    Returns:
        List of the resources' paths.
    """
    path: Path = res.files(package)
    if recursive:
        return list(path.rglob(ext))
    else:
        return list(path.glob(ext))


@functools.lru_cache
def load_schema(name: str) -> dict[str, Any]:
    """
    Returns the JSON schema ``<name>.json`` shipped in :mod:`cantorprimes.schemas`.

    Raises:
        FileNotFoundError: if no schema of that name is packaged.
    """
    for path in import_resources("cantorprimes.schemas", "*.json", recursive=False):
        if path.stem == name:
            return json.loads(path.read_text(encoding="utf-8"))
    raise FileNotFoundError(f"No schema named '{name}'")
