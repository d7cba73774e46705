# spectra, a finite-scale toolkit for abelian C*-dynamical systems
# Copyright (C) 2024  spectra contributors
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <https://www.gnu.org/licenses/>.


class SpectraError(Exception):
    """Base class of every error raised on purpose by spectra."""
    exit_code = 2


class StructuralError(SpectraError):
    pass


class NumericError(SpectraError):
    pass


class PreconditionError(SpectraError):
    def __init__(self, message: str, defect: float = None):
        if defect is not None:
            message = f'{message} (defect={defect:.3e})'
        super().__init__(message)
        self.defect = defect


class WindowError(SpectraError):
    pass


class DomainError(SpectraError):
    pass


class ConfigError(SpectraError):
    pass


class UsageError(SpectraError):
    pass


class CheckFailed(SpectraError):
    """Raised by commands when a mathematical check did not pass."""
    exit_code = 1
