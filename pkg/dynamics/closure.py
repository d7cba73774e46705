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
from typing import List, Sequence

import numpy as np

from numeric import Subspace, adjoint, hs_norm, span_of
from util.errors import NumericError
from .system import DynSystem


def alg_closure(sys: DynSystem, W: Sequence) -> Subspace:
    r"""
    Smallest alpha-invariant *-algebra (as a span) containing W.

    Iterates span <- span + span* + alpha(span) + span.span until the
    dimension stops growing; at most d^2 rounds.
    """
    shape = (sys.dim, sys.dim)
    mats = [sys.check_mat(w, 'W element') for w in W]
    current = span_of(mats + [adjoint(m) for m in mats], shape=shape)
    for rounds in range(sys.dim * sys.dim + 1):
        basis = current.basis
        grown = list(basis)
        for b in basis:
            grown.append(adjoint(b))
            grown.extend(sys.alpha_all(b))
            for c in basis:
                grown.append(b @ c)
        nxt = span_of(grown, shape=shape)
        logging.debug(f'alg_closure round {rounds}: dim {current.dim} -> {nxt.dim}')
        if nxt.dim == current.dim:
            return nxt
        current = nxt
    raise NumericError(f'Algebra closure did not stabilize in {sys.dim * sys.dim} rounds')


@dataclass
class PolarizationReport:
    identity_residual: float
    products_dim: int
    positives_dim: int

    @property
    def spans_agree(self):
        return self.products_dim == self.positives_dim


def polarization_check(sys: DynSystem, a, b) -> PolarizationReport:
    r"""
    a* b = 1/4 sum_k i^-k (a + i^k b)* (a + i^k b), and over the algebra
    basis span{x* y} has the same dimension as span{c* c}.
    """
    a = sys.check_mat(a)
    b = sys.check_mat(b)
    rhs = np.zeros_like(a)
    for k in range(4):
        c = a + (1j ** k) * b
        rhs += (1j ** (-k)) * (adjoint(c) @ c)
    residual = hs_norm(adjoint(a) @ b - rhs / 4)
    basis = sys.algebra.basis
    shape = (sys.dim, sys.dim)
    products = span_of([adjoint(x) @ y for x in basis for y in basis], shape=shape)
    positives: List[np.ndarray] = []
    for i, x in enumerate(basis):
        positives.append(adjoint(x) @ x)
        for y in basis[i + 1:]:
            for k in range(4):
                c = x + (1j ** k) * y
                positives.append(adjoint(c) @ c)
    positives_span = span_of(positives, shape=shape)
    return PolarizationReport(residual, products.dim, positives_span.dim)
