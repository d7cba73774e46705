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
import pytest
import yaml

from suite import SUITES, SuiteReport, run_suite
from util.errors import UsageError


@pytest.mark.parametrize('name', ['trivial_sys', 'swap_sys', 'random_sys'])
def test_all_suites_pass(name, request):
    sys = request.getfixturevalue(name)
    report = run_suite(sys, 'all', seed=1)
    assert report.passed, report.table()
    prefixes = {e.check.split('.')[0] for e in report.entries}
    assert prefixes == set(SUITES)


def test_single_suite_matches_all(random_sys):
    single = run_suite(random_sys, 'module', seed=4)
    everything = run_suite(random_sys, 'all', seed=4)
    picked = [e for e in everything.entries if e.check.startswith('module.')]
    assert [e.value for e in picked] == [e.value for e in single.entries]
    assert single.suite == 'module'


def test_unknown_suite(swap_sys):
    with pytest.raises(UsageError):
        run_suite(swap_sys, 'nope', seed=1)


def test_yaml_is_deterministic(swap_sys):
    first = run_suite(swap_sys, 'rc', seed=9).to_yaml()
    second = run_suite(swap_sys, 'rc', seed=9).to_yaml()
    assert first == second
    data = yaml.safe_load(first)
    assert data['suite'] == 'rc'
    assert data['passed'] is True


def test_report_bookkeeping(tmp_path):
    rep = SuiteReport('demo')
    assert rep.add('small', 1e-12, 1e-9).passed
    assert rep.add('large', 0.5, 0.25, at_least=True).passed
    assert not rep.add_equal('dims', 3, 4).passed
    assert rep.add_equal('same', 2, 2).passed
    assert not rep.passed
    assert [e.check for e in rep.failures()] == ['dims']

    outer = SuiteReport('outer')
    outer.extend(rep, prefix='demo')
    assert [e.check for e in outer.entries] == ['demo.small', 'demo.large', 'demo.dims', 'demo.same']
    assert 'NO' in str(rep.table())

    path = rep.write(str(tmp_path / 'demo.yaml'))
    with open(path, encoding='utf-8') as f:
        assert yaml.safe_load(f)['passed'] is False
