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
from dataclasses import dataclass

import numpy as np

from crossed import BigOp, ColumnOp, big_V, lambda_op, pi, rho, symbol_of
from dynamics import DynSystem, Symbol, fourier_coeff, is_fixed_multiplier, smooth, spectral_residual
from group import ScalarFunction
from numeric import adjoint, op_norm
from util.errors import PreconditionError, StructuralError


def zeta(sys: DynSystem, a) -> ColumnOp:
    r"""(zeta(a) v)(t) = alpha_{t^-1}(a) v"""
    return ColumnOp(sys.group, sys.alpha_inv_all(a))


def rip(sys: DynSystem, a, b) -> np.ndarray:
    r"""Right inner product <a, b>_R = sum_t alpha_t(a* b); lands in the fixed multipliers."""
    a = sys.check_mat(a)
    b = sys.check_mat(b)
    return np.sum(sys.alpha_all(adjoint(a) @ b), axis=0)


def lip(T: ColumnOp, S: ColumnOp) -> BigOp:
    r"""Left inner product T S*, block (t, s) = T_t S_s*."""
    if T.group != S.group or T.dim != S.dim:
        raise StructuralError('lip needs column operators of the same system')
    return BigOp(T.group, np.einsum('tij,skj->tsik', T.blocks, np.conj(S.blocks)))


@dataclass
class ModuleAxioms:
    isometry: float
    right_action: float
    left_action: float
    translation: float

    def max_residual(self):
        return max(self.isometry, self.right_action, self.left_action, self.translation)


def module_axioms(sys: DynSystem, a, m, b, t) -> ModuleAxioms:
    r"""
    Residuals of |zeta(a)|^2 = |<a, a>_R|, zeta(a) m = zeta(am),
    pi(b) zeta(a) = zeta(ba) and Lambda_t zeta(a) = zeta(alpha_t(a)).
    """
    m = sys.check_mat(m, 'm')
    if not is_fixed_multiplier(sys, m):
        raise PreconditionError('m does not commute with the action', spectral_residual(sys, m, sys.group.identity))
    za = zeta(sys, a)
    isometry = abs(za.norm() ** 2 - op_norm(rip(sys, a, a)))
    right = (za.times(m) - zeta(sys, sys.check_mat(a) @ m)).norm()
    left = (pi(sys, b) @ za - zeta(sys, sys.check_mat(b) @ a)).norm()
    trans = (lambda_op(sys, t) @ za - zeta(sys, sys.alpha(t, a))).norm()
    return ModuleAxioms(isometry, right, left, trans)


def ternary_identity(sys: DynSystem, a, b, c) -> float:
    r"""|zeta(a) zeta(b)* zeta(c) - zeta(a <b, c>_R)|"""
    za = zeta(sys, a)
    lhs = za.times(zeta(sys, b).adjoint_times(zeta(sys, c)))
    return (lhs - zeta(sys, sys.check_mat(a) @ rip(sys, b, c))).norm()


def rip_identity_residual(sys: DynSystem, a, b) -> float:
    r"""|<a, b>_R - zeta(a)* zeta(b)|"""
    return op_norm(rip(sys, a, b) - zeta(sys, a).adjoint_times(zeta(sys, b)))


def rip_fixed_residual(sys: DynSystem, a, b) -> float:
    return spectral_residual(sys, rip(sys, a, b), sys.group.identity)


def rip_sesquilinearity(sys: DynSystem, a, b, c, lam: complex) -> float:
    right = rip(sys, a, b + lam * c) - rip(sys, a, b) - lam * rip(sys, a, c)
    left = rip(sys, lam * a, b) - np.conj(lam) * rip(sys, a, b)
    return max(op_norm(right), op_norm(left))


def rip_fourier_residual(sys: DynSystem, a, b) -> float:
    r"""<a, b>_R = F(a* b, e)"""
    return op_norm(rip(sys, a, b) - fourier_coeff(sys, adjoint(sys.check_mat(a)) @ b, sys.group.identity))


def fourier_via_V(sys: DynSystem, a, b, x) -> float:
    r"""|zeta(a)* V_x zeta(b) - F(a* b, x)|"""
    vz = big_V(sys, x) @ zeta(sys, b)
    return op_norm(zeta(sys, a).adjoint_times(vz) - fourier_coeff(sys, adjoint(sys.check_mat(a)) @ b, x))


def intertwining_residual(sys: DynSystem, g: ScalarFunction, c, a) -> float:
    r"""rho(t -> g(t) c) zeta(a) = zeta(c a') with a' = sum_t g(t) alpha_t(a)"""
    f = Symbol.from_scalar(sys.group, g, sys.check_mat(c, 'c'))
    lhs = rho(sys, f) @ zeta(sys, a)
    return (lhs - zeta(sys, sys.check_mat(c) @ smooth(sys, a, g))).norm()


def lip_symbol(sys: DynSystem, a, b) -> Symbol:
    r"""r -> a alpha_r(b*)"""
    a = sys.check_mat(a)
    return Symbol(sys.group, a[None, :, :] @ sys.alpha_all(adjoint(sys.check_mat(b))))


def lip_symbol_residual(sys: DynSystem, a, b) -> float:
    T = lip(zeta(sys, a), zeta(sys, b))
    return symbol_of(sys, T).max_diff(lip_symbol(sys, a, b))
