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
from typing import Dict, List, Mapping, Sequence

import numpy as np
import pandas as pd

from bundle import left_ideal_residual, lip_span
from config import default_config
from dynamics import DynSystem, explicit, fourier_coeff
from group import FiniteAbelianGroup
from hilbert import rip
from numeric import same_subspace, span_of
from util.errors import PreconditionError, WindowError
from .circle import circle_grid


def free_action_system(n: int, k: int) -> DynSystem:
    r"""
    Z_n acting on X = Z_n x {0..k-1} by (i, j) -> (i + t, j), as permutation
    unitaries on C^{nk} (point (i, j) has index i k + j) with the diagonal
    algebra C(X).
    """
    if n < 1 or k < 1:
        raise PreconditionError(f'n and k should be >= 1, got n={n}, k={k}')
    group = FiniteAbelianGroup([n])
    d = n * k
    us = []
    for t in range(n):
        u = np.zeros((d, d))
        for i in range(n):
            for j in range(k):
                u[((i + t) % n) * k + j, i * k + j] = 1.0
        us.append(u)
    return explicit(group, us, 'diagonal')


@dataclass
class ProperReport:
    n: int
    k: int
    fixed_dim: int
    orbit_constancy: float
    rip_dim: int
    rip_in_fixed: float
    fixed_in_rip: float
    lip_dim: int
    crossed_dim: int
    ideal_residual: float

    def holds(self, tol: float = None) -> bool:
        tol = default_config.verify_tol if tol is None else tol
        return (self.fixed_dim == self.k and self.rip_dim == self.k and self.orbit_constancy <= tol
                and self.rip_in_fixed <= tol and self.fixed_in_rip <= tol and self.ideal_residual <= tol)

    def to_dict(self) -> Dict:
        return {k: (int(v) if isinstance(v, (int, np.integer)) else float(v)) for k, v in self.__dict__.items()}


def proper_free_action_report(n: int, k: int) -> ProperReport:
    sys = free_action_system(n, k)
    shape = (sys.dim, sys.dim)
    A = sys.algebra.basis
    e = sys.group.identity
    fixed = span_of([fourier_coeff(sys, f, e) for f in A], shape=shape)
    constancy = 0.0
    for m in fixed.basis:
        diag = np.diag(m).reshape(n, k)
        constancy = max(constancy, float(np.max(np.abs(diag - diag[:1, :]))),
                        float(np.max(np.abs(m - np.diag(np.diag(m))))))
    rips = span_of([rip(sys, f, g) for f in A for g in A], shape=shape)
    _, r1, r2 = same_subspace(rips, fixed)
    L = lip_span(sys, A)
    ideal = left_ideal_residual(sys, L, A)
    report = ProperReport(n, k, fixed.dim, constancy, rips.dim, r1, r2, L.dim, n * len(A), ideal)
    logging.info(f'proper free action: {report}')
    return report


Support = Mapping[int, complex]


def translate(f: Support, s: int) -> Dict[int, complex]:
    return {m + s: v for m, v in f.items()}


def dilate(f: Support, c: int) -> Dict[int, complex]:
    r"""m -> f(m / c) on multiples of c"""
    return {m * c: v for m, v in f.items()}


def _coeff_sum(f: Support, z: complex) -> complex:
    r"""c_f(z) = sum_m f(m) z^-m"""
    return sum(complex(v) * z ** (-m) for m, v in f.items())


def windowed_translation_fourier(f: Support, z: complex, N: int) -> np.ndarray:
    r"""Diagonal of sum_k z^k alpha_k(f) on [-N, N], alpha_k(f)(n) = f(n - k)."""
    ns = np.arange(-N, N + 1)
    out = np.zeros(ns.size, dtype=complex)
    if len(f) == 0:
        return out
    lo, hi = min(f), max(f)
    for k in range(-N - hi, N - lo + 1):
        vals = np.array([complex(f.get(int(n - k), 0.0)) for n in ns])
        out += z ** k * vals
    return out


def translation_closed_form(f: Support, z: complex, N: int) -> np.ndarray:
    r"""z^n c_f(z)"""
    ns = np.arange(-N, N + 1).astype(float)
    return z ** ns * _coeff_sum(f, z)


@dataclass
class TranslationPair:
    left: int
    right: int
    closed_form_residual: float
    lipschitz: float
    table: pd.DataFrame

    @property
    def passed(self) -> bool:
        return bool(self.table['passed'].all())


def _l1(f: Support) -> float:
    return float(sum(abs(complex(v)) for v in f.values()))


def _moment(f: Support) -> float:
    return float(sum(abs(m) * abs(complex(v)) for m, v in f.items()))


def translation_on_Z_report(N: int, supports: Sequence[Support], zgrid: int = None,
                            xygrid: int = None) -> List[TranslationPair]:
    r"""
    Z acting on Z by translation, windowed to [-N, N]. F(f, z) is diagonal
    with entries z^n c_f(z), so d_tilde(z) = max_{x,y} |c_f(xz) c_g(y) - c_f(x) c_g(zy)|
    and d_tilde(z) <= C |1 - z| with C = L_f |g|_1 + |f|_1 L_g,
    L_f = sum |m| |f(m)|, since |z^m - 1| <= |m| |1 - z|.
    """
    zgrid = default_config.lab_zgrid if zgrid is None else zgrid
    xygrid = default_config.lab_xygrid if xygrid is None else xygrid
    for f in supports:
        for m in f:
            if 2 * abs(m) > N:
                raise WindowError(f'support point {m} is outside [-N/2, N/2] for N = {N}')
    zs = circle_grid(zgrid)
    xs = circle_grid(xygrid)
    cache = {}

    def F(i, z):
        key = (i, complex(z))
        if key not in cache:
            cache[key] = windowed_translation_fourier(supports[i], z, N)
        return cache[key]

    res = []
    for i in range(len(supports)):
        for j in range(i, len(supports)):
            f, g = supports[i], supports[j]
            closed = max(float(np.max(np.abs(F(i, x) - translation_closed_form(f, x, N)))) for x in xs)
            C = _moment(f) * _l1(g) + _l1(f) * _moment(g)
            rows = []
            for z in zs:
                d = 0.0
                for x in xs:
                    for y in xs:
                        diff = F(i, x * z) * F(j, y) - F(i, x) * F(j, z * y)
                        d = max(d, float(np.max(np.abs(diff))))
                bound = C * abs(1 - z) + 1e-9
                rows.append({'z_re': z.real, 'z_im': z.imag, 'd_tilde': d, 'bound': bound, 'passed': d <= bound})
            res.append(TranslationPair(i, j, closed, C, pd.DataFrame(rows)))
    return res
