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

from .bigop import BigOp, ColumnOp
from .regular import pi, lambda_op, rho, big_V, dual_action, convolve, involution
from .laurent import is_laurent, LaurentTest, symbol_of, in_crossed_product, Membership, covariance_defect, \
    v_continuity_modulus, membership_closure_check, ClosureCheck, dual_covariance_residual, \
    covariance_pi_lambda_residual
