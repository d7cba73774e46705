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
import os

import numpy as np
import pytest

from dynamics import cyclic_shift, random_system, trivial
from group import FiniteAbelianGroup

FIXTURES = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), 'resources', 'fixtures')


def fixture_path(name: str) -> str:
    return os.path.join(FIXTURES, name)


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


@pytest.fixture
def z2xz3():
    return FiniteAbelianGroup([2, 3])


@pytest.fixture
def trivial_sys():
    return trivial(FiniteAbelianGroup([4]), 2)


@pytest.fixture
def swap_sys():
    return cyclic_shift(FiniteAbelianGroup([2]))


@pytest.fixture
def random_sys():
    return random_system(FiniteAbelianGroup([2, 3]), 3, seed=7)


@pytest.fixture
def block_sys():
    return random_system(FiniteAbelianGroup([3]), 3, seed=11, algebra='block', blocks=[1, 2])


@pytest.fixture(params=['trivial', 'swap', 'random', 'block'])
def system(request, trivial_sys, swap_sys, random_sys, block_sys):
    return {'trivial': trivial_sys, 'swap': swap_sys, 'random': random_sys, 'block': block_sys}[request.param]


def random_element(sys, rng) -> np.ndarray:
    basis = sys.algebra.basis
    coeffs = rng.standard_normal(len(basis)) + 1j * rng.standard_normal(len(basis))
    return np.tensordot(coeffs, np.array(basis), axes=(0, 0))
