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

from conftest import random_element
from dynamics import fourier_coeff
from hilbert import fourier_via_V, intertwining_residual, lip, lip_symbol, lip_symbol_residual, module_axioms, rip, \
    rip_fixed_residual, rip_fourier_residual, rip_identity_residual, rip_sesquilinearity, ternary_identity, zeta
from numeric import op_norm, psd_defect
from util.errors import PreconditionError


@pytest.fixture
def triple(system, rng):
    return system, random_element(system, rng), random_element(system, rng), random_element(system, rng)


def scale(*mats):
    return float(np.prod([max(1.0, op_norm(m)) for m in mats]))


def test_trivial_rip(trivial_sys, rng):
    a, b = random_element(trivial_sys, rng), random_element(trivial_sys, rng)
    npt.assert_allclose(rip(trivial_sys, a, b), 4 * np.conj(a.T) @ b, atol=1e-12)


def test_rip_identities(triple):
    sys, a, b, c = triple
    n = sys.group.order
    s = n * scale(a, b)
    assert rip_identity_residual(sys, a, b) <= 1e-12 * s
    assert rip_fixed_residual(sys, a, b) <= 1e-12 * s
    assert rip_fourier_residual(sys, a, b) <= 1e-12 * s
    assert rip_sesquilinearity(sys, a, b, c, 0.5 + 2j) <= 1e-12 * n * scale(a, b, c) * 10
    npt.assert_allclose(zeta(sys, a).norm() ** 2, op_norm(rip(sys, a, a)), rtol=1e-10)


def test_module_axioms(triple):
    sys, a, b, c = triple
    m = fourier_coeff(sys, c, sys.group.identity)
    t = sys.group.element(sys.group.order - 1)
    ax = module_axioms(sys, a, m, b, t)
    assert ax.max_residual() <= 1e-10 * sys.group.order * scale(a, a, b, m)


def test_module_axioms_need_fixed_multiplier(swap_sys):
    e11 = np.diag([1.0, 0.0])
    with pytest.raises(PreconditionError):
        module_axioms(swap_sys, np.eye(2), e11, np.eye(2), 1)


def test_ternary_identity(triple):
    sys, a, b, c = triple
    assert ternary_identity(sys, a, b, c) <= 1e-11 * sys.group.order * scale(a, b, c)


def test_fourier_via_dual_unitaries(triple):
    sys, a, b, _ = triple
    for x in sys.group.elements():
        assert fourier_via_V(sys, a, b, x) <= 1e-11 * sys.group.order * scale(a, b)


def test_intertwining(triple, rng):
    sys, a, _, c = triple
    g = rng.standard_normal(sys.group.order)
    assert intertwining_residual(sys, g, c, a) <= 1e-11 * sys.group.order * scale(a, c) * np.sum(np.abs(g))


def test_left_inner_product(triple):
    sys, a, b, _ = triple
    s = sys.group.order * scale(a, b)
    assert lip_symbol_residual(sys, a, b) <= 1e-11 * s
    za, zb = zeta(sys, a), zeta(sys, b)
    assert psd_defect(lip(za, za).as_matrix()) <= 1e-11 * s
    assert (lip(za, zb).adjoint() - lip(zb, za)).norm() <= 1e-11 * s
    npt.assert_allclose(lip_symbol(sys, a, b)[sys.group.identity], a @ np.conj(b.T), atol=1e-12 * s)
