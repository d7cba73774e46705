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

from dynamics import DynSystem
from group import FiniteAbelianGroup
from hilbert import lip_symbol, rip
from numeric import Subspace, same_subspace, span_of
from .fell import FellBundle


def generators(group: FiniteAbelianGroup) -> List[tuple]:
    r"""The unit vector of each cyclic factor."""
    gens = []
    for j, n in enumerate(group.factors):
        if n > 1:
            gens.append(tuple(1 if i == j else 0 for i in range(len(group.factors))))
    return gens


def _symbol_shape(sys: DynSystem):
    return sys.group.order * sys.dim, sys.dim


def lip_span(sys: DynSystem, elements: Sequence) -> Subspace:
    r"""
    Span of the Laurent symbols r -> a alpha_r(b*) of lip(zeta(a), zeta(b)).
    Symbols are stacked into (|G| d) x d matrices; rho is injective so
    this span is isomorphic to the span of the operators.
    """
    shape = _symbol_shape(sys)
    mats = [lip_symbol(sys, a, b).values.reshape(shape) for a in elements for b in elements]
    return span_of(mats, shape=shape)


def left_ideal_residual(sys: DynSystem, L: Subspace, coefficients: Sequence) -> float:
    r"""
    Largest residual of f * l against L for l in an orthonormal basis of L
    and f among delta_e (x) c (c in ``coefficients``) and delta_t (x) I
    (t a generator of G). Those f generate every symbol with values in
    span(coefficients) under convolution.
    """
    g = sys.group
    n, d = g.order, sys.dim
    table = g.add_table()
    negs = g.neg_indices()
    worst = 0.0
    for ell in L.basis:
        values = ell.reshape(n, d, d)
        for c in coefficients:
            worst = max(worst, L.residual((np.asarray(c)[None, :, :] @ values).reshape(n * d, d)))
        for t in generators(g):
            ti = g.index_of(t)
            u = sys.unitary(t)
            # (delta_t (x) I) * l at r is alpha_t(l(r - t))
            shifted = values[table[negs[ti]]]
            moved = u[None, :, :] @ shifted @ np.conj(u.T)[None, :, :]
            worst = max(worst, L.residual(moved.reshape(n * d, d)))
    return worst


@dataclass
class MoritaReport:
    rip_dim: int
    unit_fiber_dim: int
    rip_in_fiber: float
    fiber_in_rip: float
    lip_dim: int
    crossed_dim: int
    ideal_residual: float

    def holds(self, tol: float) -> bool:
        return (self.rip_dim == self.unit_fiber_dim and self.rip_in_fiber <= tol and self.fiber_in_rip <= tol
                and self.ideal_residual <= tol)

    def to_dict(self):
        return {k: (float(v) if isinstance(v, float) else int(v)) for k, v in self.__dict__.items()}


def morita_report(sys: DynSystem, b: FellBundle) -> MoritaReport:
    r"""
    Both inner products on X = zeta(Alg(W)): span{zeta(a)* zeta(b)} against
    the unit fiber B_e, and the lip-span as a left ideal of the symbols
    with values in Alg(W).
    """
    N = b.algebra.basis
    rips = span_of([rip(sys, x, y) for x in N for y in N], shape=(sys.dim, sys.dim))
    _, r1, r2 = same_subspace(rips, b.unit_fiber)
    L = lip_span(sys, N)
    ideal = left_ideal_residual(sys, L, N)
    report = MoritaReport(rips.dim, b.unit_fiber.dim, r1, r2, L.dim, sys.group.order * len(N), ideal)
    logging.info(f'Morita report: {report}')
    return report
