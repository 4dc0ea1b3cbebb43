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
Settings shared by the library entry points and the command line.

Values are resolved with increasing precedence from the defaults, a JSON settings file,
the environment and explicit overrides.
"""

from __future__ import annotations

import json
import logging
import os
from collections.abc import Mapping
from dataclasses import asdict, dataclass, fields, replace
from os import PathLike
from typing import Any

import jsonschema

from cantorprimes.cyclotomic import DEFAULT_TRIT_BUDGET
from cantorprimes.errors import CantorError
from cantorprimes.primality import DEFAULT_MR_ROUNDS
from cantorprimes.utils.resources import load_schema

logger = logging.getLogger(__name__)

THREADS_ENV_VAR = "CANTOR_SIEVE_THREADS"


class SettingsError(CantorError):
    """Exception is raised, if a settings file cannot be read or fails validation."""


@dataclass(frozen=True)
class Settings:
    mr_rounds: int = DEFAULT_MR_ROUNDS
    trit_budget: int = DEFAULT_TRIT_BUDGET
    workers: int = 1
    prefilter_bound: int = 10**6
    progress: bool = False

    def updated(self, **changes: Any) -> Settings:
        """Returns a copy with the given fields replaced; None values are ignored."""
        return replace(self, **{key: value for key, value in changes.items() if value is not None})


def _validate(data: Any) -> None:
    jsonschema.validate(data, schema=load_schema("settings"))


def load_settings(path: str | PathLike, base: Settings | None = None) -> Settings:
    """
    Loads settings from a JSON file on top of ``base``.

    Args:
        path: Path to the file.
        base: Settings the file overrides. Defaults to ``Settings()``.

    Returns:
        Settings: The merged settings.

    Raises:
        SettingsError: if the file is not UTF-8 JSON or does not match the settings schema.
    """
    with open(path, encoding="utf-8") as file:
        try:
            data = json.load(file)
        except UnicodeDecodeError as ex:
            raise SettingsError(f"{path} is not UTF-8 text: {ex.reason} at byte {ex.start}") from ex
        except json.JSONDecodeError as ex:
            raise SettingsError(f"{path} is not valid JSON: {ex}") from ex
    try:
        _validate(data)
    except jsonschema.ValidationError as ex:
        raise SettingsError(f"{path}: {ex.message}") from ex
    logger.info("Loaded settings from %s", path)
    return (base or Settings()).updated(**data)


def save_settings(settings: Settings, path: str | PathLike) -> None:
    """Stores settings as JSON, readable by :func:`load_settings`."""
    data = asdict(settings)
    _validate(data)
    with open(path, "w", encoding="utf-8") as file:
        json.dump(data, file, indent=4)


def settings_from_env(environ: Mapping[str, str] | None = None) -> dict[str, Any]:
    """
    Reads overrides from the environment.

    Only the worker count is read, from ``CANTOR_SIEVE_THREADS``; a value that is not a
    positive integer is ignored with a warning.
    """
    environ = os.environ if environ is None else environ
    raw = environ.get(THREADS_ENV_VAR)
    if raw is None:
        return {}
    try:
        workers = int(raw)
    except ValueError:
        workers = 0
    if workers < 1:
        logger.warning("Ignoring %s=%r, expected a positive integer", THREADS_ENV_VAR, raw)
        return {}
    return {"workers": workers}


def resolve_settings(
    config_path: str | PathLike | None = None,
    environ: Mapping[str, str] | None = None,
    **overrides: Any,
) -> Settings:
    """Defaults < settings file < environment < overrides. None overrides are skipped."""
    unknown = set(overrides) - {field.name for field in fields(Settings)}
    if unknown:
        raise SettingsError(f"Unknown settings: {', '.join(sorted(unknown))}")
    settings = Settings()
    if config_path is not None:
        settings = load_settings(config_path, settings)
    settings = settings.updated(**settings_from_env(environ))
    return settings.updated(**overrides)
