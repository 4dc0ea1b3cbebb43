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

# The version comes from versioningit for editable installs of cantorprimes.
# For built packages, versioningit's onbuild step replaces __version__'s value
# with a fixed string.


def get_version() -> str:
    from pathlib import Path

    import versioningit

    import cantorprimes

    package_path = Path(cantorprimes.__file__).parent
    try:
        return versioningit.get_version(project_dir=package_path.parent.parent)
    except versioningit.errors.Error:
        # Source tree without git metadata, e.g. an unpacked sdist.
        return "0.0"


__version__ = get_version()
