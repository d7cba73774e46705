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
from dataclasses import dataclass, field
from typing import List

import yaml

from util import default_write, quick_prettytable


@dataclass
class SuiteEntry:
    check: str
    value: float
    threshold: float
    passed: bool


@dataclass
class SuiteReport:
    r"""Outcome of a verification suite; it passes iff every entry passes."""
    suite: str
    entries: List[SuiteEntry] = field(default_factory=list)

    def add(self, check: str, value: float, threshold: float, at_least: bool = False) -> SuiteEntry:
        value = float(value)
        threshold = float(threshold)
        passed = value >= threshold if at_least else value <= threshold
        entry = SuiteEntry(check, value, threshold, bool(passed))
        self.entries.append(entry)
        return entry

    def add_equal(self, check: str, got: int, expected: int) -> SuiteEntry:
        return self.add(check, abs(int(got) - int(expected)), 0)

    def extend(self, other: 'SuiteReport', prefix: str = None):
        for e in other.entries:
            name = e.check if prefix is None else f'{prefix}.{e.check}'
            self.entries.append(SuiteEntry(name, e.value, e.threshold, e.passed))

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)

    def failures(self) -> List[SuiteEntry]:
        return [e for e in self.entries if not e.passed]

    def to_dict(self):
        return {
            'suite': self.suite,
            'passed': self.passed,
            'entries': [{'check': e.check, 'value': e.value, 'threshold': e.threshold, 'passed': e.passed}
                        for e in self.entries],
        }

    def to_yaml(self) -> str:
        return yaml.safe_dump(self.to_dict(), sort_keys=False, allow_unicode=True)

    def write(self, path: str):
        with default_write(path) as f:
            f.write(self.to_yaml())
        return path

    def table(self):
        rows = [['check', 'value', 'threshold', 'passed']]
        for e in self.entries:
            rows.append([e.check, e.value, e.threshold, e.passed])
        return quick_prettytable(rows)
