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

import numpy as np
import numpy.testing as npt
import pytest
from pydantic import ValidationError

from conftest import fixture_path, random_element
from dynamics import Symbol, alg_closure, cyclic_shift, diagonal_characters, explicit, fourier_coeff, \
    fourier_coeffs, fourier_product_rules, inverse_fourier, is_fixed_multiplier, load_system_config, \
    one_norm_bracket, polarization_check, random_system, smooth, spectral_residual, support_inequality_defect
from group import FiniteAbelianGroup
from numeric import op_norm, span_of
from util.errors import ConfigError, PreconditionError, StructuralError

E11 = np.diag([1.0, 0.0]).astype(complex)
E22 = np.diag([0.0, 1.0]).astype(complex)


def test_swap_fourier_coefficient(swap_sys):
    npt.assert_allclose(fourier_coeff(swap_sys, E11, 1), np.diag([1.0, -1.0]), atol=1e-12)
    npt.assert_allclose(fourier_coeff(swap_sys, E11, 0), np.eye(2), atol=1e-12)


def test_trivial_action_concentrates_at_identity(trivial_sys, rng):
    a = random_element(trivial_sys, rng)
    coeffs = fourier_coeffs(trivial_sys, a)
    npt.assert_allclose(coeffs[0], 4 * a, atol=1e-12)
    npt.assert_allclose(coeffs[1:], 0, atol=1e-12)


def test_fourier_inversion(system, rng):
    a = random_element(system, rng)
    coeffs = fourier_coeffs(system, a)
    for t in system.group.elements():
        npt.assert_allclose(inverse_fourier(system, coeffs, t), system.alpha(t, a), atol=1e-10)


def test_inverse_fourier_needs_every_coefficient(swap_sys):
    with pytest.raises(StructuralError):
        inverse_fourier(swap_sys, {0: E11}, 0)
    npt.assert_allclose(inverse_fourier(swap_sys, {0: np.eye(2), 1: np.diag([1.0, -1.0])}, 0), E11, atol=1e-12)


SHAPES = [[2], [3], [4], [5], [2, 2], [2, 3], [8], [2, 4], [3, 5], [4, 4]]


@pytest.mark.parametrize('seed', range(20))
def test_inversion_on_seeded_systems(seed):
    group = FiniteAbelianGroup(SHAPES[seed % len(SHAPES)])
    sys = random_system(group, 2 + seed % 5, seed=seed)
    a = random_element(sys, np.random.default_rng(seed))
    coeffs = fourier_coeffs(sys, a)
    worst = max(op_norm(inverse_fourier(sys, coeffs, t) - sys.alpha(t, a)) for t in group.elements())
    assert worst <= 1e-10


def test_coefficients_are_spectral(system, rng):
    a = random_element(system, rng)
    scale = system.group.order * op_norm(a)
    for x in system.group.elements():
        assert spectral_residual(system, fourier_coeff(system, a, x), x) <= 1e-12 * scale


def test_product_rules(system, rng):
    a, b = random_element(system, rng), random_element(system, rng)
    g = system.group
    w = g.element(min(1, g.order - 1))
    for x in g.elements():
        assert fourier_product_rules(system, a, b, x, w).holds(1e-12)


def test_product_rules_reject_foreign_multiplier(swap_sys):
    with pytest.raises(PreconditionError):
        fourier_product_rules(swap_sys, E11, E22, 0, 1, m=E11, w=1)


def test_fixed_multipliers(swap_sys):
    assert is_fixed_multiplier(swap_sys, np.eye(2))
    assert not is_fixed_multiplier(swap_sys, E11)


def test_smooth_with_delta(random_sys, rng):
    a = random_element(random_sys, rng)
    g = random_sys.group
    npt.assert_allclose(smooth(random_sys, a, g.delta(g.identity)), a, atol=1e-12)
    npt.assert_allclose(smooth(random_sys, a, np.ones(g.order)), fourier_coeff(random_sys, a, g.identity),
                        atol=1e-12)


def test_alg_closure_of_projection(swap_sys):
    S = alg_closure(swap_sys, [E11])
    assert S.dim == 2
    assert S.contains(E22)
    assert alg_closure(swap_sys, [np.array([[0, 1], [0, 0]])]).dim == 4


def test_polarization(random_sys, rng):
    a, b = random_element(random_sys, rng), random_element(random_sys, rng)
    rep = polarization_check(random_sys, a, b)
    assert rep.identity_residual <= 1e-10 * op_norm(a) * op_norm(b)
    assert rep.spans_agree


def test_support_inequality(random_sys, rng):
    g = random_sys.group
    f = Symbol.from_map(g, {(0, 0): random_element(random_sys, rng), (1, 2): random_element(random_sys, rng)}, 3)
    assert f.support() == [0, 5]
    assert support_inequality_defect(random_sys, f) <= 1e-10 * float(np.sum(np.abs(f.values))) ** 2


def test_one_norm_bracket(trivial_sys, random_sys, rng):
    a = random_element(trivial_sys, rng)
    lower, upper = one_norm_bracket(trivial_sys, a, 4, 0)
    # the trivial action attains the upper end at phi = 1
    assert lower == pytest.approx(upper)
    b = random_element(random_sys, rng)
    lower, upper = one_norm_bracket(random_sys, b, 4, 0)
    assert op_norm(b) <= lower <= upper
    with pytest.raises(PreconditionError):
        one_norm_bracket(random_sys, b, 0, 0)


def test_random_system_is_seeded():
    g = FiniteAbelianGroup([2, 3])
    npt.assert_array_equal(random_system(g, 3, 5).unitaries(), random_system(g, 3, 5).unitaries())


def test_diagonal_characters():
    g = FiniteAbelianGroup([3])
    sys = diagonal_characters(g, [0, 1, 2])
    npt.assert_allclose(sys.unitary(1), np.diag(g.character_table()[:, 1]), atol=1e-12)


def test_validation_rejects_bad_actions():
    g = FiniteAbelianGroup([2])
    with pytest.raises(StructuralError):
        explicit(g, [np.eye(1), 2 * np.eye(1)])
    # not a homomorphism: u_1 u_1 != u_0
    with pytest.raises(StructuralError):
        explicit(g, [np.eye(2), np.diag([1.0, 1j])])
    # span{E11} is not invariant under the swap
    with pytest.raises(StructuralError):
        cyclic_shift(g, 'explicit', basis=[E11])
    with pytest.raises(StructuralError):
        cyclic_shift(FiniteAbelianGroup([2, 2]))


def test_non_invariant_or_degenerate_algebra():
    g = FiniteAbelianGroup([2])
    with pytest.raises(StructuralError):
        explicit(g, [np.eye(2), np.eye(2)], 'explicit', basis=[E11])


def test_load_fixture_configs():
    cfg = load_system_config(fixture_path('swap_z2.json'))
    sys = cfg.build()
    assert sys.dim == 2 and sys.algebra.dim == 4
    elements = cfg.named_elements()
    assert set(elements) == {'e11', 'swap', 'flip'}
    npt.assert_allclose(elements['e11'], E11)
    rand = load_system_config(fixture_path('random_z2xz3.json')).build()
    assert rand.group == FiniteAbelianGroup([2, 3])


def test_config_errors(tmp_path):
    path = tmp_path / 'bad.json'
    path.write_text(json.dumps({'group': {'factors': [2]}, 'dim': 1, 'action': {'kind': 'trivial'},
                                'colour': 'red'}))
    with pytest.raises(ValidationError):
        load_system_config(str(path))
    path.write_text('{not json')
    with pytest.raises(ConfigError):
        load_system_config(str(path))
    with pytest.raises(ConfigError):
        load_system_config(str(tmp_path / 'missing.json'))
    path.write_text(json.dumps({'group': {'factors': [2]}, 'dim': 1,
                                'action': {'kind': 'explicit', 'data': [[[[1, 0]]], [[[2, 0]]]]}}))
    with pytest.raises(StructuralError):
        load_system_config(str(path)).build()


def test_span_of_algebra_matches_fixture(block_sys):
    assert block_sys.algebra.dim == 5
    assert span_of(block_sys.algebra.basis).dim == 5
