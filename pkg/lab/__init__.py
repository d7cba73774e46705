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
from .circle import CircleFunction, ShiftWindow, check_unimodular, circle_grid, laurent, eps_N
from .shift import rank_one_projection, alpha_window, support_radius, windowed_fourier, shift_sum, \
    interior_residual, shift_sum_residual, convergence_table, multiplier, FourierShiftReport, fourier_coeff_shift, \
    PairCompression, DichotomyTable, rc_dichotomy, dichotomy_floor, floor_convergence, floor_is_stable, CubeReport, \
    reverse_cube_bound, PositiveReport, positive_decomposition, TwistReport, twist_commutation_residual, \
    delta_twist_demo
from .proper import free_action_system, ProperReport, proper_free_action_report, translate, dilate, \
    windowed_translation_fourier, translation_closed_form, TranslationPair, translation_on_Z_report
from .schema import CircleSpec, ShiftLabConfig, load_lab_config
