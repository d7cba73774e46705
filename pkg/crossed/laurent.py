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
import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from dynamics import DynSystem, Symbol
from numeric import block_norms, op_norm
from util.errors import PreconditionError, StructuralError
from util.pool import parallel_map
from .bigop import BigOp
from .regular import _ad_each, big_V, convolve, dual_action, involution, lambda_op, pi, rho


@dataclass
class LaurentTest:
    is_laurent: bool
    defect: float
    in_algebra_defect: float

    def __iter__(self):
        return iter((self.is_laurent, self.defect, self.in_algebra_defect))


def _check_op(sys: DynSystem, T: BigOp):
    if T.group != sys.group or T.dim != sys.dim:
        raise StructuralError(f'Operator over {T.group} of size {T.dim} on {sys}')


def covariance_defect(sys: DynSystem, T: BigOp) -> float:
    r"""max_{t,s,r} |k(tr, sr) - alpha_{r^-1}(k(t, s))|"""
    _check_op(sys, T)
    g = sys.group
    n = g.order
    table = g.add_table()
    negs = g.neg_indices()
    flat = T.blocks.reshape(n * n, sys.dim, sys.dim)
    worst = 0.0
    for r in range(n):
        moved = T.blocks[np.ix_(table[:, r], table[:, r])].reshape(n * n, sys.dim, sys.dim)
        expected = _ad_each(sys, np.full(n * n, negs[r]), flat)
        worst = max(worst, float(np.max(block_norms(moved - expected))))
    return worst


def _size(T: BigOp) -> float:
    return max(1.0, float(np.max(block_norms(T.blocks))))


def is_laurent(sys: DynSystem, T: BigOp, tol: float = None) -> LaurentTest:
    r"""
    Laurent test: the kernel is translation covariant, k(tr, sr) =
    alpha_{r^-1}(k(t, s)), and alpha_r(k(r, e)) lies in A for every r.
    Both defects are compared with tol times the largest block norm of T.
    """
    tol = (sys.tol if tol is None else tol) * _size(T)
    defect = covariance_defect(sys, T)
    g = sys.group
    column = T.blocks[:, 0]
    lifted = _ad_each(sys, np.arange(g.order), column)
    in_algebra = max(sys.algebra.residual(m) for m in lifted)
    return LaurentTest(defect <= tol and in_algebra <= tol, defect, in_algebra)


def symbol_of(sys: DynSystem, T: BigOp, tol: float = None) -> Symbol:
    r"""
    f(r) = alpha_r(k(r, e)). Only translation covariance is required here,
    so symbols of rho(f) round trip even when f is not A-valued.
    """
    tol = (sys.tol if tol is None else tol) * _size(T)
    defect = covariance_defect(sys, T)
    if defect > tol:
        raise PreconditionError('Operator is not a Laurent operator', defect)
    return Symbol(sys.group, _ad_each(sys, np.arange(sys.group.order), T.blocks[:, 0]))


@dataclass
class Membership:
    member: bool
    residual: float

    def __iter__(self):
        return iter((self.member, self.residual))


def in_crossed_product(sys: DynSystem, T: BigOp, tol: float = None) -> Membership:
    r"""
    Membership in the reduced crossed product: Laurent with an A-valued
    symbol. The residual is |T - rho(symbol_of(T))| for Laurent T and the
    Laurent defect otherwise.
    """
    base = sys.tol if tol is None else tol
    tol = base * _size(T)
    test = is_laurent(sys, T, base)
    if test.defect > tol:
        return Membership(False, test.defect)
    res = (T - rho(sys, symbol_of(sys, T, base))).norm()
    member = test.in_algebra_defect <= tol and res <= tol
    return Membership(member, res if test.in_algebra_defect <= tol else max(res, test.in_algebra_defect))


def v_continuity_modulus(sys: DynSystem, T: BigOp, num_workers: Optional[int] = None) -> np.ndarray:
    r"""m(x) = |V_x T V_x^-1 - T| over the dual group, in enumeration order."""
    _check_op(sys, T)
    g = sys.group
    chi = g.character_table()

    def _modulus(xi: int) -> float:
        phase = np.conj(chi[xi])[:, None] * chi[xi][None, :]
        diff = (phase[:, :, None, None] - 1.0) * T.blocks
        return BigOp(g, diff).norm()

    values = parallel_map(_modulus, range(g.order), num_workers, desc='V-continuity')
    logging.debug(f'v_continuity_modulus on {sys}: max {max(values):.3e}')
    return np.array(values)


@dataclass
class ClosureCheck:
    product_defect: float
    adjoint_defect: float
    product_residual: float
    adjoint_residual: float


def membership_closure_check(sys: DynSystem, f: Symbol, g: Symbol) -> ClosureCheck:
    r"""Products and adjoints of rho(f), rho(g) stay Laurent and inside the crossed product."""
    tf, tg = rho(sys, f), rho(sys, g)
    prod = tf @ tg
    adj = tf.adjoint()
    return ClosureCheck(covariance_defect(sys, prod), covariance_defect(sys, adj),
                        (prod - rho(sys, convolve(sys, f, g))).norm(),
                        (adj - rho(sys, involution(sys, f))).norm())


def dual_covariance_residual(sys: DynSystem, f: Symbol, x) -> float:
    r"""|V_x rho(f) V_x* - rho(dual_x f)|"""
    v = big_V(sys, x)
    return (v @ rho(sys, f) @ v.adjoint() - rho(sys, dual_action(sys, f, x))).norm()


def covariance_pi_lambda_residual(sys: DynSystem, a, t) -> float:
    r"""|Lambda_t pi(a) Lambda_t* - pi(alpha_t(a))|"""
    lam = lambda_op(sys, t)
    return (lam @ pi(sys, a) @ lam.adjoint() - pi(sys, sys.alpha(t, a))).norm()
