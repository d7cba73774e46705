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
import numpy as np
import numpy.testing as npt
import pandas as pd
import pytest

from conftest import random_element
from dynamics import fourier_coeff
from numeric import adjoint, op_norm
from rc import hereditary_probe, rc_chain_inequality, rc_modulus, rc_property_suite, strict_continuity_modulus, \
    write_rc_csv, InequalityCheck
from util.errors import PreconditionError

E11 = np.diag([1.0, 0.0]).astype(complex)


def test_trivial_action_table(trivial_sys):
    table = rc_modulus(trivial_sys, np.eye(2), E11)
    # F(a, x) = 4 a at x = e and 0 elsewhere
    npt.assert_allclose(table.d, [0, 16, 16, 16], atol=1e-12)
    npt.assert_allclose(table.c1, 0, atol=1e-12)
    npt.assert_allclose(table.c2, [0, 16, 16, 16], atol=1e-12)
    frame = table.to_frame()
    assert list(frame.columns) == ['z_index', 'd', 'c1', 'c2']


def test_modulus_vanishes_at_identity(system, rng):
    a, b = random_element(system, rng), random_element(system, rng)
    table = rc_modulus(system, a, b, num_workers=2)
    s = (system.group.order * op_norm(a) * op_norm(b)) ** 2
    assert table.d[0] <= 1e-12 * s
    assert table.c1[0] <= 1e-12 * s
    assert table.c2[0] <= 1e-12 * s
    assert np.all(table.c1 <= table.d + 1e-10 * s)


def test_adjoint_symmetry(random_sys, rng):
    a, b = random_element(random_sys, rng), random_element(random_sys, rng)
    d = rc_modulus(random_sys, a, b).d
    d_adj = rc_modulus(random_sys, adjoint(b), adjoint(a)).d
    npt.assert_allclose(d_adj, d[random_sys.group.neg_indices()], atol=1e-9 * max(1.0, d.max()))


def spectral_multiplier(sys, rng):
    w = sys.group.element(min(1, sys.group.order - 1))
    return fourier_coeff(sys, random_element(sys, rng), w) / sys.group.order, w


def test_property_suite(system, rng):
    a, b, c = (random_element(system, rng) for _ in range(3))
    m, w = spectral_multiplier(system, rng)
    g = rng.standard_normal(system.group.order)
    report = rc_property_suite(system, a, b, c, m, w, g, samples=4, seed=3)
    for check in report.checks:
        assert check.relative_slack >= -1e-10, check.name
    assert report['adjoint'].equality


def test_property_suite_flags_foreign_multiplier(swap_sys):
    report = rc_property_suite(swap_sys, E11, np.eye(2), E11, E11, 1, np.ones(2))
    assert report['multiplier_left'].precondition is not None
    assert np.isnan(report['multiplier_right'].slack)
    assert not report.holds()
    with pytest.raises(KeyError):
        report['missing']


def test_chain_inequality(system, rng):
    a, b = random_element(system, rng), random_element(system, rng)
    check = rc_chain_inequality(system, a, b)
    s = (system.group.order * max(1.0, op_norm(a)) * max(1.0, op_norm(b))) ** 2
    assert check.holds(1e-10 * s)


def test_hereditary_probe(random_sys, rng):
    x, y = random_element(random_sys, rng), random_element(random_sys, rng)
    b = adjoint(x) @ x
    c = adjoint(y) @ y
    probe = hereditary_probe(random_sys, b / 2, b, c)
    assert probe.contraction_norm == pytest.approx(np.sqrt(0.5), rel=1e-6)
    s = (random_sys.group.order * op_norm(b) * op_norm(c)) ** 2
    assert probe.check.holds(1e-10 * max(1.0, s))
    with pytest.raises(PreconditionError):
        hereditary_probe(random_sys, 2 * b, b, c)
    with pytest.raises(PreconditionError):
        hereditary_probe(random_sys, b, b, -c)


def test_strict_continuity(random_sys, rng):
    a, b = random_element(random_sys, rng), random_element(random_sys, rng)
    s = strict_continuity_modulus(random_sys, a, b)
    assert s.shape == (6,)
    assert s[0] == 0.0


def test_write_csv(trivial_sys, tmp_path):
    path = str(tmp_path / 'rc.csv')
    write_rc_csv(rc_modulus(trivial_sys, np.eye(2), E11), path, ['pair: p=id, q=e11'])
    with open(path, encoding='utf-8') as f:
        lines = f.read().splitlines()
    assert lines[0].startswith('# quantity: relative continuity modulus')
    assert '# pair: p=id, q=e11' in lines
    frame = pd.read_csv(path, comment='#')
    assert frame['z_index'].tolist() == [0, 1, 2, 3]
    assert frame['d'].iloc[0] == 0.0


def test_relative_slack_keeps_moderate_violations():
    check = InequalityCheck('demo', np.array([1.0, 3.0e3]), np.array([1.0, 2.0e3]))
    assert check.slack == pytest.approx(-1.0e3)
    assert check.scale == pytest.approx(3.0e3)
    assert check.relative_slack == pytest.approx(-1.0 / 3.0)
    small = InequalityCheck('small', np.array([1e-3]), np.array([2e-3]))
    assert small.scale == 1.0
    assert small.relative_slack == pytest.approx(1e-3)
