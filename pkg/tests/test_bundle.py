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
import pytest

from bundle import build_bundle, bundle_axioms, covariance_check, diagram_check, generators, kappa, \
    kappa_homomorphism, morita_report, random_section, section_from, Section
from conftest import random_element
from group import FiniteAbelianGroup
from numeric import op_norm
from util.errors import StructuralError

E11 = np.diag([1.0, 0.0]).astype(complex)


@pytest.fixture
def swap_bundle(swap_sys):
    return build_bundle(swap_sys, [E11])


@pytest.fixture
def random_bundle(random_sys, rng):
    return build_bundle(random_sys, [random_element(random_sys, rng)])


def test_random_bundle_fills_algebra(random_bundle):
    assert random_bundle.total_dim() == 9
    assert bundle_axioms(random_bundle).max_residual() <= 1e-9


def test_swap_bundle_fibers(swap_bundle):
    assert swap_bundle.fiber_dims() == [1, 1]
    assert swap_bundle.unit_fiber.residual(np.eye(2)) <= 1e-12
    assert swap_bundle.fiber((1,)).residual(np.diag([1.0, -1.0])) <= 1e-12
    assert swap_bundle.algebra.dim == 2
    frame = swap_bundle.fiber_table()
    assert list(frame.columns) == ['x_index', 'fiber_dim']
    assert frame['fiber_dim'].tolist() == [1, 1]


def test_empty_generating_set(swap_sys):
    with pytest.raises(StructuralError):
        build_bundle(swap_sys, [])


def test_section_outside_fibers(swap_bundle):
    with pytest.raises(StructuralError):
        Section(swap_bundle, np.stack([E11, np.zeros((2, 2))]))
    with pytest.raises(StructuralError):
        Section(swap_bundle, np.zeros((3, 2, 2)))


def test_kappa_inverts_fourier(random_bundle, random_sys, rng):
    a = random_element(random_sys, rng)
    npt.assert_allclose(kappa(random_bundle, section_from(random_bundle, a)), a, atol=1e-9 * max(1.0, op_norm(a)))


def test_kappa_of_foreign_section(swap_bundle, swap_sys):
    other = build_bundle(swap_sys, [E11])
    with pytest.raises(StructuralError):
        kappa(other, section_from(swap_bundle, E11))


def test_kappa_homomorphism(random_bundle):
    s1, s2 = random_section(random_bundle, 1), random_section(random_bundle, 2)
    scale = max(1.0, float(np.max(np.abs(s1.values)))) * max(1.0, float(np.max(np.abs(s2.values))))
    rep = kappa_homomorphism(random_bundle, s1, s2)
    assert rep.product <= 1e-8 * scale
    assert rep.adjoint <= 1e-9 * scale


@pytest.mark.parametrize('t', [(1, 0), (0, 1), (1, 2)])
def test_covariance(random_bundle, random_sys, t):
    s = random_section(random_bundle, 5)
    rep = covariance_check(random_sys, random_bundle, s, t)
    assert rep.residual <= 1e-9 * max(1.0, float(np.max(np.abs(s.values))))
    assert rep.dims_agree


def test_covariance_swap(swap_bundle, swap_sys):
    rep = covariance_check(swap_sys, swap_bundle, section_from(swap_bundle, E11), (1,))
    assert rep.residual <= 1e-12
    assert rep.kappa_span_dim == rep.algebra_dim == 2


def test_diagram(random_bundle, random_sys, rng):
    a = random_element(random_sys, rng)
    g = rng.standard_normal(random_sys.group.order)
    scale = random_sys.group.order * max(1.0, op_norm(a)) * max(1.0, float(np.sum(np.abs(g))))
    assert diagram_check(random_sys, random_bundle, a, g) <= 1e-9 * scale


def test_morita(swap_bundle, swap_sys, random_bundle, random_sys):
    for sys, b in [(swap_sys, swap_bundle), (random_sys, random_bundle)]:
        report = morita_report(sys, b)
        assert report.holds(1e-8)
        assert report.rip_dim == b.unit_fiber.dim
        assert report.crossed_dim == sys.group.order * b.algebra.dim
        assert set(report.to_dict()) >= {'rip_dim', 'lip_dim', 'ideal_residual'}


def test_generators():
    assert generators(FiniteAbelianGroup([2, 3])) == [(1, 0), (0, 1)]
    assert generators(FiniteAbelianGroup([1, 4])) == [(0, 1)]


def test_full_algebra_fibers_sum_to_algebra(system):
    bundle = build_bundle(system, system.algebra.basis)
    assert bundle.total_dim() == system.algebra.dim
    assert bundle_axioms(bundle).max_residual() <= 1e-9


def test_trivial_action_has_only_unit_fiber(trivial_sys):
    bundle = build_bundle(trivial_sys, trivial_sys.algebra.basis)
    assert bundle.fiber_dims() == [4, 0, 0, 0]
    rep = covariance_check(trivial_sys, bundle, section_from(bundle, np.eye(2)), (1,))
    assert rep.residual <= 1e-12
    assert rep.dims_agree
