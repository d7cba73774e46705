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
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from crossed import v_continuity_modulus
from dynamics import DynSystem, one_norm_bracket, smooth, spectral_residual
from group import ScalarFunction
from hilbert import lip, zeta
from numeric import adjoint, op_norm, psd_defect
from util.errors import PreconditionError
from .modulus import rc_modulus


@dataclass
class InequalityCheck:
    r"""lhs(z) <= rhs(z) pointwise (or lhs == rhs when ``equality``)."""
    name: str
    lhs: np.ndarray
    rhs: np.ndarray
    equality: bool = False
    precondition: Optional[str] = None

    @property
    def slack(self) -> float:
        if self.precondition is not None:
            return float('nan')
        if self.equality:
            return -float(np.max(np.abs(self.lhs - self.rhs)))
        return float(np.min(self.rhs - self.lhs))

    @property
    def scale(self) -> float:
        return max(1.0, float(np.max(np.abs(self.lhs))), float(np.max(np.abs(self.rhs))))

    @property
    def relative_slack(self) -> float:
        r"""slack over the size of both sides"""
        return self.slack / self.scale

    def holds(self, tol: float = 1e-9) -> bool:
        return self.precondition is None and self.slack >= -tol


def rc_chain_inequality(sys: DynSystem, a, b) -> InequalityCheck:
    r"""
    d_{a*a, b*b}(z) <= |zeta(a)| m_T(z) |zeta(b)| with T = zeta(a) zeta(b)*
    and m_T the V-continuity modulus.
    """
    a = sys.check_mat(a)
    b = sys.check_mat(b)
    za, zb = zeta(sys, a), zeta(sys, b)
    lhs = rc_modulus(sys, adjoint(a) @ a, adjoint(b) @ b).d
    rhs = za.norm() * v_continuity_modulus(sys, lip(za, zb)) * zb.norm()
    return InequalityCheck('chain', lhs, rhs)


@dataclass
class RcPropertyReport:
    checks: List[InequalityCheck] = field(default_factory=list)

    def holds(self, tol: float = 1e-9) -> bool:
        return all(c.holds(tol) for c in self.checks)

    def __getitem__(self, name: str) -> InequalityCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


def rc_property_suite(sys: DynSystem, a, b, c, m, w, g: ScalarFunction, s=None, lam: complex = 2 - 1j,
                      samples: int = 8, seed: int = 0) -> RcPropertyReport:
    r"""
    Pointwise checks over the dual group:

    * additivity: d_{a+b,c} <= d_{a,c} + d_{b,c}
    * adjoint: d_{b*,a*}(z) = d_{a,b}(-z)
    * multiplier: d_{ma,b} <= |m| d_{a,b} and d_{a,bm} <= |m| d_{a,b} for m in M_w
    * smoothing: d_{a',b}(z) <= max_x |g^(x+z) - g^(x)| U(a) U(b) + |g^|_inf d_{a,b}(z)
      with a' = sum_t g(t) alpha_t(a) and U the one-norm upper bracket
    * invariance: d_{alpha_s(a),alpha_s(b)} = d_{a,b}; scaling: d_{lam a,b} = |lam| d_{a,b}
    """
    grp = sys.group
    a, b, c = sys.check_mat(a), sys.check_mat(b), sys.check_mat(c)
    m = sys.check_mat(m, 'm')
    report = RcPropertyReport()
    d_ab = rc_modulus(sys, a, b).d
    d_ac = rc_modulus(sys, a, c).d
    d_bc = rc_modulus(sys, b, c).d
    report.checks.append(InequalityCheck('additivity', rc_modulus(sys, a + b, c).d, d_ac + d_bc))

    d_adj = rc_modulus(sys, adjoint(b), adjoint(a)).d
    report.checks.append(InequalityCheck('adjoint', d_adj, d_ab[grp.neg_indices()], equality=True))

    defect = spectral_residual(sys, m, w)
    if defect > sys.tol * max(1.0, op_norm(m)):
        note = f'm is not in M_{w} (defect {defect:.3e})'
        logging.warning(f'rc_property_suite: {note}')
        report.checks.append(InequalityCheck('multiplier_left', d_ab, d_ab, precondition=note))
        report.checks.append(InequalityCheck('multiplier_right', d_ab, d_ab, precondition=note))
    else:
        nm = op_norm(m)
        report.checks.append(InequalityCheck('multiplier_left', rc_modulus(sys, m @ a, b).d, nm * d_ab))
        report.checks.append(InequalityCheck('multiplier_right', rc_modulus(sys, a, b @ m).d, nm * d_ab))

    gh = grp.ghat(g)
    table = grp.add_table()
    osc = np.array([np.max(np.abs(gh[table[:, z]] - gh)) for z in range(grp.order)])
    ua = one_norm_bracket(sys, a, samples, seed).upper
    ub = one_norm_bracket(sys, b, samples, seed).upper
    rhs = osc * ua * ub + np.max(np.abs(gh)) * d_ab
    report.checks.append(InequalityCheck('smoothing', rc_modulus(sys, smooth(sys, a, g), b).d, rhs))

    s = grp.element(min(1, grp.order - 1)) if s is None else s
    report.checks.append(InequalityCheck('invariance', rc_modulus(sys, sys.alpha(s, a), sys.alpha(s, b)).d, d_ab,
                                         equality=True))
    report.checks.append(InequalityCheck('scaling', rc_modulus(sys, lam * a, b).d, abs(lam) * d_ab,
                                         equality=True))
    return report


def psd_sqrt(m) -> np.ndarray:
    lam, vec = np.linalg.eigh((m + adjoint(m)) / 2)
    return (vec * np.sqrt(np.clip(lam, 0, None))[None, :]) @ adjoint(vec)


@dataclass
class HereditaryProbe:
    contraction_norm: float
    factor_residual: float
    check: InequalityCheck


def hereditary_probe(sys: DynSystem, a, b, c, tol: float = None) -> HereditaryProbe:
    r"""
    For 0 <= a <= b and c >= 0: factor a1 = T b1 (a = a1* a1, b = b1* b1)
    by least squares and compare d_{a,c}(z) with
    |zeta(a1)| |T| m_S(z) |zeta(c1)|, S = zeta(b1) zeta(c1)*.

    Raises PreconditionError when the order relation fails or no
    contraction T reproduces a1.
    """
    tol = sys.tol if tol is None else tol
    a, b, c = sys.check_mat(a), sys.check_mat(b), sys.check_mat(c)
    scale = max(1.0, op_norm(b))
    for name, defect in (('a', psd_defect(a)), ('b - a', psd_defect(b - a)), ('c', psd_defect(c))):
        if defect > tol * scale:
            raise PreconditionError(f'{name} is not positive', defect)
    a1, b1, c1 = psd_sqrt(a), psd_sqrt(b), psd_sqrt(c)
    T = a1 @ np.linalg.pinv(b1, rcond=1e-8)
    residual = op_norm(T @ b1 - a1)
    t_norm = op_norm(T)
    if residual > np.sqrt(tol) * scale or t_norm > 1 + np.sqrt(tol):
        raise PreconditionError(f'No contraction T with a1 = T b1 (|T| = {t_norm:.6f})', residual)
    lhs = rc_modulus(sys, a, c).d
    m_s = v_continuity_modulus(sys, lip(zeta(sys, b1), zeta(sys, c1)))
    rhs = zeta(sys, a1).norm() * t_norm * m_s * zeta(sys, c1).norm()
    return HereditaryProbe(t_norm, residual, InequalityCheck('hereditary', lhs, rhs))
