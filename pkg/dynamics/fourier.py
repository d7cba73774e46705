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
from typing import Mapping, Optional, Sequence, Union

import numpy as np

from group import ScalarFunction
from numeric import adjoint, op_norm, psd_defect
from util.errors import PreconditionError, StructuralError
from .system import DynSystem, Symbol


def alpha(sys: DynSystem, t, a) -> np.ndarray:
    return sys.alpha(t, a)


def fourier_coeffs(sys: DynSystem, a) -> np.ndarray:
    r"""All Fourier coefficients F(a, x) = sum_t <x, t> alpha_t(a), shape (|G|, d, d)."""
    return np.tensordot(sys.group.character_table(), sys.alpha_all(a), axes=(1, 0))


def fourier_coeff(sys: DynSystem, a, x) -> np.ndarray:
    chi = sys.group.character_table()[sys.group.index_of(x)]
    return np.tensordot(chi, sys.alpha_all(a), axes=(0, 0))


def inverse_fourier(sys: DynSystem, coeffs: Union[Mapping, np.ndarray], t) -> np.ndarray:
    r"""(1/|G|) sum_x conj(<x, t>) coeffs[x]; coeffs must cover the whole dual group."""
    g = sys.group
    if isinstance(coeffs, Mapping):
        table = np.zeros((g.order, sys.dim, sys.dim), dtype=complex)
        seen = set()
        for x, c in coeffs.items():
            i = g.index_of(x)
            table[i] = sys.check_mat(c, 'coefficient')
            seen.add(i)
        if len(seen) != g.order:
            missing = [g.element(i) for i in range(g.order) if i not in seen]
            raise StructuralError(f'Fourier coefficients missing at dual elements {missing[:5]}')
    else:
        table = np.asarray(coeffs, dtype=complex)
        if table.shape != (g.order, sys.dim, sys.dim):
            raise StructuralError(f'Expected coefficients of shape {(g.order, sys.dim, sys.dim)}, got {table.shape}')
    weights = np.conj(g.character_table()[:, g.index_of(t)])
    return np.tensordot(weights, table, axes=(0, 0)) * g.dual_haar_weight


def spectral_residual(sys: DynSystem, m, x) -> float:
    r"""max_t |alpha_t(m) - conj(<x, t>) m|; zero iff m lies in M_x."""
    m = sys.check_mat(m, 'm')
    chi = np.conj(sys.group.character_table()[sys.group.index_of(x)])
    diffs = sys.alpha_all(m) - chi[:, None, None] * m[None, :, :]
    return max(op_norm(d) for d in diffs)


def is_fixed_multiplier(sys: DynSystem, m) -> bool:
    return spectral_residual(sys, m, sys.group.identity) <= sys.tol * max(1.0, op_norm(m))


@dataclass
class FourierRules:
    adjoint: float
    left_multiplier: float
    right_multiplier: float
    product: float
    scale: float

    def max_residual(self):
        return max(self.adjoint, self.left_multiplier, self.right_multiplier, self.product)

    def holds(self, tol: float) -> bool:
        return self.max_residual() <= tol * self.scale


def fourier_product_rules(sys: DynSystem, a, b, x, y, m=None, w=None) -> FourierRules:
    r"""
    Residuals of the Fourier coefficient calculus:

    * F(a, x)* = F(a*, -x)
    * m F(a, x) = F(ma, x + w) and F(a, x) m = F(am, x + w) for m in M_w
    * F(a, x) F(b, y) = F(a F(b, y), x + y) = F(F(a, x) b, x + y)

    When m is not given the multiplier F(b, y), which lies in M_y, is used.
    """
    g = sys.group
    a = sys.check_mat(a)
    b = sys.check_mat(b)
    if m is None:
        m, w = fourier_coeff(sys, b, y), y
    else:
        m = sys.check_mat(m, 'm')
        defect = spectral_residual(sys, m, w)
        if defect > sys.tol * max(1.0, op_norm(m)):
            raise PreconditionError(f'm is not in the spectral subspace M_{w}', defect)
    fa = fourier_coeff(sys, a, x)
    fb = fourier_coeff(sys, b, y)
    xw = g.add(x, w)
    xy = g.add(x, y)
    r_adj = op_norm(adjoint(fa) - fourier_coeff(sys, adjoint(a), g.neg(x)))
    r_left = op_norm(m @ fa - fourier_coeff(sys, m @ a, xw))
    r_right = op_norm(fa @ m - fourier_coeff(sys, a @ m, xw))
    lhs = fa @ fb
    r_prod = max(op_norm(lhs - fourier_coeff(sys, a @ fb, xy)),
                 op_norm(lhs - fourier_coeff(sys, fa @ b, xy)))
    scale = max(1.0, g.order ** 2 * (1 + op_norm(a)) * (1 + op_norm(b)) * (1 + op_norm(m)))
    return FourierRules(r_adj, r_left, r_right, r_prod, scale)


def smooth(sys: DynSystem, a, g: ScalarFunction) -> np.ndarray:
    r"""a' = sum_t g(t) alpha_t(a)"""
    vec = sys.group.as_vector(g)
    return np.tensordot(vec, sys.alpha_all(a), axes=(0, 0))


def ghat(sys: DynSystem, g: ScalarFunction, x=None):
    return sys.group.ghat(g, x)


def support_inequality_defect(sys: DynSystem, f: Symbol) -> float:
    r"""psd_defect(|supp f| sum f(t)* f(t) - (sum f)* (sum f))"""
    if f.dim != sys.dim:
        raise StructuralError(f'Symbol of size {f.dim} on a system of dimension {sys.dim}')
    n_supp = len(f.support())
    total = np.sum(f.values, axis=0)
    gram = np.einsum('tji,tjk->ik', np.conj(f.values), f.values)
    return psd_defect(n_supp * gram - adjoint(total) @ total)


@dataclass
class OneNormBracket:
    lower: float
    upper: float

    def __iter__(self):
        return iter((self.lower, self.upper))


def one_norm_bracket(sys: DynSystem, a, samples: int, seed: int) -> OneNormBracket:
    r"""
    Bracket lower <= |a|_1 <= upper where |a|_1 is the norm of the map
    phi -> sum_t phi(t) alpha_t(a) on the unit ball of l_inf(G).

    upper = |G| |a|. The lower end maximises over phi = 1, every character
    (giving |F(a, x)|) and ``samples`` seeded random unimodular vectors.
    """
    if samples < 1:
        raise PreconditionError(f'samples should be >= 1, got {samples}')
    terms = sys.alpha_all(a)
    upper = sys.group.order * op_norm(a)
    rng = np.random.default_rng(seed)
    candidates = [np.ones(sys.group.order, dtype=complex)]
    candidates.extend(sys.group.character_table())
    for _ in range(samples):
        candidates.append(np.exp(2j * np.pi * rng.random(sys.group.order)))
    lower = max(op_norm(np.tensordot(phi, terms, axes=(0, 0))) for phi in candidates)
    # round-off can push lower a hair above upper
    return OneNormBracket(min(lower, upper), upper)
