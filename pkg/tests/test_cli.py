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
import json

import pytest
import yaml

from command.manage import main
from conftest import fixture_path


def write_json(path, data) -> str:
    with open(path, 'w', encoding='utf-8') as f:
        json.dump(data, f)
    return str(path)


def test_usage_errors(capsys):
    assert main([]) == 2
    assert main(['nope']) == 2
    assert main(['verify']) == 2
    assert main(['help']) == 0
    assert 'shiftlab' in capsys.readouterr().out
    assert main(['verify', '--help']) == 0


def test_verify_trivial(capsys):
    assert main(['verify', '-c', fixture_path('trivial_z4.json')]) == 0
    out = yaml.safe_load(capsys.readouterr().out)
    assert out['passed'] is True
    assert out['suite'] == 'all'


def test_verify_is_deterministic(capsys):
    args = ['v', '-c', fixture_path('random_z2xz3.json'), '--suite', 'fourier', '-s', '5']
    assert main(args) == 0
    first = capsys.readouterr().out
    assert main(args) == 0
    assert capsys.readouterr().out == first


def test_verify_writes_report(tmp_path):
    out = tmp_path / 'report.yaml'
    assert main(['verify', '-c', fixture_path('swap_z2.json'), '--suite', 'rc', '--out', str(out)]) == 0
    with open(out, encoding='utf-8') as f:
        assert yaml.safe_load(f)['passed'] is True


def test_bad_system_configs(tmp_path):
    non_unitary = write_json(tmp_path / 'bad.json', {
        'group': {'factors': [2]}, 'dim': 1,
        'action': {'kind': 'explicit', 'data': [[[[1, 0]]], [[[2, 0]]]]},
    })
    assert main(['verify', '-c', non_unitary]) == 2
    unknown_key = write_json(tmp_path / 'extra.json', {
        'group': {'factors': [2]}, 'dim': 1, 'action': {'kind': 'trivial'}, 'colour': 'red',
    })
    assert main(['verify', '-c', unknown_key]) == 2
    assert main(['verify', '-c', str(tmp_path / 'missing.json')]) == 2


def test_rcmod(tmp_path):
    out = tmp_path / 'rc.csv'
    assert main(['rcmod', '-c', fixture_path('trivial_z4.json'), '-p', 'id,e11', '--out', str(out)]) == 0
    with open(out, encoding='utf-8') as f:
        text = f.read()
    assert 'pair: p=id, q=e11' in text
    assert main(['rc', '-c', fixture_path('trivial_z4.json'), '-p', 'id,nope', '--out', str(out)]) == 2
    assert main(['rc', '-c', fixture_path('trivial_z4.json'), '-p', 'id', '--out', str(out)]) == 2
    missing = tmp_path / 'no' / 'such' / 'rc.csv'
    assert main(['rc', '-c', fixture_path('trivial_z4.json'), '-p', 'id,e11', '--out', str(missing)]) == 2


def test_shiftlab_sum(tmp_path):
    cfg = write_json(tmp_path / 'lab.json', {'window': 32, 'phi': {'kind': 'basis', 'n': 0}})
    out = tmp_path / 'sum.csv'
    assert main(['shiftlab', 'sum', '-c', cfg, '--out', str(out)]) == 0
    with open(out, encoding='utf-8') as f:
        text = f.read()
    assert 'experiment: sum' in text
    assert 'interior_residual' in text


def test_shiftlab_dichotomy(tmp_path):
    out = tmp_path / 'dichotomy.csv'
    args = ['sl', 'dichotomy', '-c', fixture_path('shift_continuous.json'), '-w', '32', '--grid', '16',
            '--xygrid', '8', '--out', str(out)]
    assert main(args) == 0
    with open(out, encoding='utf-8') as f:
        assert 'd_tilde' in f.read()


def test_shiftlab_twist(tmp_path):
    cfg = write_json(tmp_path / 'twist.json', {
        'window': 32,
        'phi': {'kind': 'basis', 'n': 0},
        'psi': {'kind': 'basis', 'n': 1},
        'delta': {'kind': 'basis', 'n': 0},
    })
    out = tmp_path / 'twist.csv'
    assert main(['sl', 'twist', '-c', cfg, '--grid', '8', '--xygrid', '8', '--out', str(out)]) == 0
    with open(out, encoding='utf-8') as f:
        text = f.read()
    assert 'DP,DQ' in text and 'P,DQ' in text


def test_shiftlab_rejects_bad_input(tmp_path):
    out = str(tmp_path / 'x.csv')
    # bandwidth 32 does not fit a window of 16
    assert main(['sl', 'dichotomy', '-c', fixture_path('shift_step.json'), '-w', '16', '--grid', '8',
                 '--out', out]) == 2
    assert main(['sl', 'dichotomy', '-c', fixture_path('shift_continuous.json'), '-w', '32', '--grid', '4',
                 '--out', out]) == 2
    no_delta = write_json(tmp_path / 'plain.json', {'window': 32, 'phi': {'kind': 'basis', 'n': 0}})
    assert main(['sl', 'twist', '-c', no_delta, '--grid', '8', '--out', out]) == 2
    bad_kind = write_json(tmp_path / 'kind.json', {'window': 32, 'phi': {'kind': 'step'}})
    assert main(['sl', 'sum', '-c', bad_kind, '--out', out]) == 2
    assert main(['sl', 'spiral', '-c', no_delta, '--out', out]) == 2


def test_shiftlab_floor_needs_two_windows(tmp_path):
    cfg = write_json(tmp_path / 'floor.json', {'window': 32, 'phi': {'kind': 'basis', 'n': 0}, 'windows': [32]})
    assert main(['sl', 'floor', '-c', cfg, '--grid', '8', '--xygrid', '8', '--out', str(tmp_path / 'f.csv')]) == 2


def test_proper(capsys, tmp_path):
    assert main(['proper', '-n', '3', '-k', '2']) == 0
    data = yaml.safe_load(capsys.readouterr().out)
    assert data['passed'] is True
    assert data['fixed_dim'] == 2
    assert main(['pa', '-n', '0', '-k', '2']) == 2


def test_translation(tmp_path):
    out = tmp_path / 'translation.csv'
    assert main(['translation', '-w', '16', '--grid', '8', '--xygrid', '8', '--out', str(out)]) == 0
    with open(out, encoding='utf-8') as f:
        text = f.read()
    assert 'C=' in text
    assert main(['tz', '--bump', '-1', '--out', str(out)]) == 2


@pytest.mark.parametrize('cmd', ['verify', 'rcmod', 'shiftlab', 'proper', 'translation', 'help'])
def test_help_of_each_command(cmd):
    assert main([cmd, '--help']) == 0


def header_of(path) -> list:
    with open(path, encoding='utf-8') as f:
        return [line.rstrip('\n') for line in f if line.startswith('#')]


def test_csv_headers_name_their_statement(tmp_path):
    basis = write_json(tmp_path / 'lab.json', {'window': 32, 'phi': {'kind': 'basis', 'n': 0},
                                               'psi': {'kind': 'basis', 'n': 1}, 'delta': {'kind': 'basis', 'n': 0}})
    runs = {
        'rc.csv': ['rcmod', '-c', fixture_path('trivial_z4.json'), '-p', 'id,e11'],
        'sum.csv': ['sl', 'sum', '-c', basis],
        'dichotomy.csv': ['sl', 'dichotomy', '-c', basis, '--grid', '8', '--xygrid', '8'],
        'twist.csv': ['sl', 'twist', '-c', basis, '--grid', '8', '--xygrid', '8'],
        'translation.csv': ['tz', '-w', '16', '--grid', '8', '--xygrid', '8'],
    }
    for name, args in runs.items():
        out = tmp_path / name
        assert main(args + ['--out', str(out)]) == 0, name
        header = header_of(out)
        assert any(line.startswith('# quantity:') for line in header), name
        assert any(line.startswith('# statement:') for line in header), name
