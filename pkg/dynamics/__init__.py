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

from .system import DynSystem, Symbol, algebra_basis, trivial, cyclic_shift, diagonal_characters, explicit, \
    random_system, ALGEBRA_KINDS
from .fourier import alpha, fourier_coeff, fourier_coeffs, inverse_fourier, spectral_residual, \
    is_fixed_multiplier, fourier_product_rules, FourierRules, smooth, ghat, support_inequality_defect, \
    one_norm_bracket, OneNormBracket
from .closure import alg_closure, polarization_check, PolarizationReport
from .schema import SystemConfig, load_system_config, read_json, to_matrix, from_matrix
