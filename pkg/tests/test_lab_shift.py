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

from conftest import fixture_path
from lab import CircleFunction, ShiftWindow, alpha_window, circle_grid, convergence_table, delta_twist_demo, \
    dichotomy_floor, eps_N, fourier_coeff_shift, laurent, positive_decomposition, rank_one_projection, \
    rc_dichotomy, reverse_cube_bound, shift_sum, shift_sum_residual, twist_commutation_residual, floor_convergence, \
    floor_is_stable, load_lab_config
from util.errors import DomainError, PreconditionError, UsageError, WindowError

EXACT = 1e-10

e0, e1, e_2 = CircleFunction.basis(0), CircleFunction.basis(1), CircleFunction.basis(-2)
PHI = CircleFunction.trig({0: 1, 1: 0.5}, normalize=True)
PSI = CircleFunction.trig({-1: 1, 2: 0.5j}, normalize=True)


def test_basis_function():
    assert e1.bandwidth == 1
    assert e1.coeff(1) == 1 and e1.coeff(0) == 0 and e1.coeff(7) == 0
    npt.assert_allclose(e1.evaluate(circle_grid(8)), circle_grid(8))
    assert e_2.two_norm() == 1.0


def test_step_function():
    f = CircleFunction.step(64)
    assert f.two_norm() == pytest.approx(1.0)
    assert 0 < f.tail < 0.1
    assert abs(f.evaluate(1j) - 1.0) < 0.1
    assert abs(f.evaluate(-1j) + 1.0) < 0.1
    for n in range(-64, 65, 2):
        assert f.coeff(n) == 0


def test_circle_errors():
    with pytest.raises(PreconditionError):
        CircleFunction([0.0]).normalized()
    with pytest.raises(DomainError):
        e1.rotate(2.0)
    with pytest.raises(WindowError):
        ShiftWindow(0)
    with pytest.raises(WindowError):
        CircleFunction.step(0)


def test_conj_and_rotate():
    z = np.exp(0.3j)
    w = circle_grid(16)
    npt.assert_allclose(PSI.conj().evaluate(w), np.conj(PSI.evaluate(w)), atol=1e-12)
    npt.assert_allclose(PSI.rotate(z).evaluate(w), PSI.evaluate(z * w), atol=1e-12)
    assert PSI.sup_bound() >= PSI.sup_norm()


def test_window_operators():
    w = ShiftWindow(6)
    npt.assert_array_equal(laurent(e1, w.indices, w.indices), w.shift_matrix(1))
    P = rank_one_projection(PHI, w)
    npt.assert_allclose(P @ P, P, atol=1e-12)
    for k in [-2, 0, 3]:
        S = w.shift_matrix(k)
        npt.assert_allclose(alpha_window(P, k), S @ P @ S.T, atol=1e-12)


def test_eps_N():
    assert eps_N(e0, PHI) == pytest.approx(1e-9)
    step = CircleFunction.step(8)
    assert eps_N(step, e0) == pytest.approx(10 * step.tail + 1e-9)


def test_shift_sum_of_delta_projection():
    w = ShiftWindow(8)
    P = rank_one_projection(e0, w)
    npt.assert_allclose(shift_sum(P, w, 8), np.eye(w.dim), atol=1e-15)
    with pytest.raises(WindowError):
        shift_sum(rank_one_projection(e1, w), w, 8)


def test_shift_sum_is_laurent():
    phi = CircleFunction.random_trig(4, seed=2)
    assert shift_sum_residual(phi, ShiftWindow(32), 16) <= EXACT
    frame = convergence_table(phi, [16, 32])
    assert frame['K'].tolist() == [8, 16]
    assert (frame['interior_residual'] <= EXACT).all()


@pytest.mark.parametrize('z', list(circle_grid(8)))
def test_fourier_coeff_shift(z):
    rep = fourier_coeff_shift(CircleFunction.random_trig(4, seed=3), z, ShiftWindow(32))
    assert rep.radius == 24
    assert rep.residual <= EXACT


def test_continuous_pair_passes():
    table = rc_dichotomy(PHI, PSI, ShiftWindow(32), zgrid=16, xygrid=8, num_workers=2)
    assert table.all_passed
    assert len(table.frame) == 16
    # z = 1 is the first grid point
    assert table.frame['d_tilde'][0] <= EXACT
    assert table.eps == pytest.approx(1e-9)
    assert any('eps_N' in line for line in table.header_lines())


def test_dichotomy_argument_checks():
    with pytest.raises(UsageError):
        rc_dichotomy(PHI, PSI, ShiftWindow(32), zgrid=4, xygrid=8)
    with pytest.raises(UsageError):
        rc_dichotomy(PHI, PSI, ShiftWindow(32), zgrid=16, xygrid=2)
    with pytest.raises(WindowError):
        rc_dichotomy(CircleFunction.random_trig(9, seed=1), PSI, ShiftWindow(32), zgrid=8, xygrid=8)
    with pytest.raises(PreconditionError):
        rc_dichotomy(CircleFunction.trig({0: 2.0}), PSI, ShiftWindow(32), zgrid=8, xygrid=8)


def test_step_floor_stays_away_from_zero():
    assert dichotomy_floor(CircleFunction.step(16), e0, ShiftWindow(128), zgrid=64, xygrid=8) >= 0.25


def test_basis_pair_floor_is_small():
    floor = dichotomy_floor(e0, e1, ShiftWindow(128), zgrid=64, xygrid=8)
    assert floor < 0.25
    assert floor == pytest.approx(abs(1 - np.exp(2j * np.pi / 64)), rel=1e-6)


def test_floor_convergence_columns():
    frame = floor_convergence(e0, windows=[32, 64], zgrid=8, xygrid=8)
    assert frame['bandwidth'].tolist() == [4, 8]
    assert np.isnan(frame['relative_change'][0])
    assert list(frame.columns) == ['N', 'bandwidth', 'floor', 'relative_change', 'above_floor']
    assert frame['above_floor'].tolist() == (frame['floor'] >= 0.25).tolist()


@pytest.mark.parametrize('z', list(circle_grid(8))[1:])
def test_reverse_cube_on_basis_pair(z):
    rep = reverse_cube_bound(e0, e1, ShiftWindow(16), z)
    npt.assert_allclose(rep.terms, [abs(1 - z)] * 4, atol=1e-12)
    assert rep.lhs == pytest.approx(abs(1 - z) ** 3)
    assert rep.holds


def test_positive_decomposition():
    rep = positive_decomposition([1.0, 0.5, 0.25], [e0, e1, e_2], ShiftWindow(16))
    assert rep.agree
    assert rep.strict_norm == pytest.approx(1.75)
    assert rep.sampled_sup == pytest.approx(1.75)


def test_positive_decomposition_preconditions():
    w = ShiftWindow(16)
    with pytest.raises(PreconditionError):
        positive_decomposition([1.0, 1.0], [e0, PHI], w)
    with pytest.raises(PreconditionError):
        positive_decomposition([1.0, -0.5], [e0, e1], w)
    with pytest.raises(PreconditionError):
        positive_decomposition([1.0], [e0, e1], w)


def test_trivial_twist_keeps_tables():
    rep = delta_twist_demo(e0, PHI, PSI, ShiftWindow(32), zgrid=8, xygrid=8)
    assert set(rep.tables) == {'P,Q', 'DP,DQ', 'P,DQ'}
    base = rep.tables['P,Q'].frame['d_tilde'].to_numpy()
    for name in ['DP,DQ', 'P,DQ']:
        npt.assert_allclose(rep.tables[name].frame['d_tilde'].to_numpy(), base, atol=1e-12)
    assert rep.unimodular_defect <= 1e-12
    assert rep.commutation_residual <= EXACT


def test_strict_twist_rejects_step():
    with pytest.raises(PreconditionError):
        delta_twist_demo(CircleFunction.step(4), PHI, PSI, ShiftWindow(64), zgrid=8, xygrid=8, strict=True)


def test_twist_commutes_with_shift():
    delta = CircleFunction.step(4)
    for n in [-3, 1, 2]:
        assert twist_commutation_residual(delta, PHI, ShiftWindow(16), n) <= EXACT


def test_twisted_table_matches_twisted_pair():
    delta = CircleFunction.step(4)
    w = ShiftWindow(64)
    rep = delta_twist_demo(delta, PHI, PSI, w, zgrid=8, xygrid=8)
    dphi = delta.multiply(PHI).normalized()
    dpsi = delta.multiply(PSI).normalized()
    direct = rc_dichotomy(dphi, dpsi, w, zgrid=8, xygrid=8)
    npt.assert_allclose(rep.tables['DP,DQ'].frame['d_tilde'].to_numpy(), direct.frame['d_tilde'].to_numpy(),
                        atol=1e-12)
    cross = rc_dichotomy(PHI, dpsi, w, zgrid=8, xygrid=8)
    npt.assert_allclose(rep.tables['P,DQ'].frame['d_tilde'].to_numpy(), cross.frame['d_tilde'].to_numpy(),
                        atol=1e-12)


def test_truncated_twist_logs_its_defect(caplog):
    delta = CircleFunction.step(4)
    with caplog.at_level('WARNING'):
        rep = delta_twist_demo(delta, PHI, PSI, ShiftWindow(64), zgrid=8, xygrid=8)
    assert rep.unimodular_defect > 1e-10
    assert any('not unimodular' in r.getMessage() for r in caplog.records if r.levelname == 'WARNING')


def test_positive_decomposition_of_basis_family():
    weights = [2.0 ** -n for n in range(4)]
    family = [CircleFunction.basis(n) for n in range(4)]
    rep = positive_decomposition(weights, family, ShiftWindow(16))
    assert rep.agree
    assert rep.strict_norm == pytest.approx(15 / 8)
    assert rep.sampled_sup == pytest.approx(15 / 8)


def test_floor_is_stable():
    frame = pd.DataFrame({'floor': [0.9, 1.5, 1.55], 'relative_change': [float('nan'), 0.667, 0.033],
                          'above_floor': [True, True, True]})
    assert floor_is_stable(frame, 0.10)
    assert not floor_is_stable(frame, 0.01)
    frame.loc[0, 'above_floor'] = False
    assert not floor_is_stable(frame, 0.10)
    with pytest.raises(UsageError):
        floor_is_stable(frame.iloc[:1], 0.10)


@pytest.mark.slow
def test_step_floor_is_stable_across_windows():
    frame = floor_convergence(e0, windows=[128, 256, 512], zgrid=16, xygrid=8, floor_min=0.25)
    assert frame['bandwidth'].tolist() == [16, 32, 64]
    assert frame['above_floor'].all()
    assert floor_is_stable(frame, 0.10)


@pytest.mark.slow
def test_smooth_pair_vanishes_near_identity():
    phi = CircleFunction.trig({0: 1, 1: 0.1, 8: 0.001}, normalize=True)
    psi = CircleFunction.trig({0: 1, -1: 0.1j}, normalize=True)
    table = rc_dichotomy(phi, psi, ShiftWindow(256), zgrid=64, xygrid=8, num_workers=4)
    assert table.all_passed
    d = table.frame['d_tilde'].to_numpy()
    # index 0 is z = 1, its neighbours are the nearest grid points
    assert max(d[1], d[-1]) <= 0.05 * phi.sup_norm() * psi.sup_norm()


@pytest.mark.slow
def test_bundled_step_twist():
    cfg = load_lab_config(fixture_path('twist.json'))
    delta, phi, psi = cfg.delta.build(), cfg.phi.build(), cfg.psi.build()
    rep = delta_twist_demo(delta, phi, psi, ShiftWindow(cfg.window), zgrid=16, xygrid=8, num_workers=4)
    assert rep.tables['P,Q'].all_passed
    assert rep.tables['DP,DQ'].all_passed
    assert rep.floors['P,DQ'] >= 0.25
    assert rep.unimodular_defect > 1e-10
