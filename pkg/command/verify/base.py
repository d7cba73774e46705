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
import logging
import sys

from command.base import BaseSystemCmd
from rc import rc_modulus, write_rc_csv
from suite import SUITES, run_suite
from util import split_names
from util.errors import CheckFailed, UsageError


class VerifyCmd(BaseSystemCmd):
    def __init__(self):
        super().__init__('verify', 'Run a verification suite on a system config and report every residual.')
        self._parser.add_argument('--suite', default='all', choices=list(SUITES) + ['all'],
                                  help='The suite to run.')

    def invoke(self) -> int:
        _, sys_ = self.load_system()
        report = run_suite(sys_, self.args.suite, self.args.seed, self.tol)
        if self.args.out:
            path = self.output_path(f'verify_{self.args.suite}.yaml')
            report.write(path)
            print(report.table(), file=sys.stderr)
            print(f'Report is saved to {path}', file=sys.stderr)
        else:
            sys.stdout.write(report.to_yaml())
        if not report.passed:
            names = ', '.join(e.check for e in report.failures())
            raise CheckFailed(f'Suite {self.args.suite} failed: {names}')
        return 0


class RcModulusCmd(BaseSystemCmd):
    def __init__(self):
        super().__init__('rcmod', 'Write the relative continuity table of a named pair of elements as CSV.')
        self._parser.add_argument('-p', '--pair', required=True, type=str, metavar='p,q',
                                  help='Two element names from the "elements" section of the config.')

    def invoke(self) -> int:
        cfg, sys_ = self.load_system()
        names = split_names(self.args.pair)
        if len(names) != 2:
            raise UsageError(f'--pair needs two names separated by a comma, got "{self.args.pair}"')
        elements = cfg.named_elements()
        for n in names:
            if n not in elements:
                raise UsageError(f'Unknown element "{n}", the config has: {", ".join(elements) or "none"}')
        path = self.output_path(f'rc_{names[0]}_{names[1]}.csv')
        table = rc_modulus(sys_, elements[names[0]], elements[names[1]])
        write_rc_csv(table, path, [f'config: {self.args.config}', f'pair: p={names[0]}, q={names[1]}'])
        logging.info(f'rc table of ({names[0]}, {names[1]}) is saved to {path}')
        print(f'rc table is saved to {path}', file=sys.stderr)
        return 0
