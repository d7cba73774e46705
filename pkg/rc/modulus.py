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
from typing import List, Optional

import numpy as np
import pandas as pd

from dynamics import DynSystem, fourier_coeffs
from group import FiniteAbelianGroup
from numeric import block_norms
from util import write_csv
from util.pool import parallel_map


@dataclass
class RcTable:
    r"""
    Relative continuity table of a pair (p, q) over the dual group:

    * d(z) = max_{x,y} |F(p, x+z) F(q, y) - F(p, x) F(q, z+y)|
    * c1(z) = |F(p, z) F(q, e) - F(p, e) F(q, z)|
    * c2(z) = |F(p, z) F(q, -z) - F(p, e) F(q, e)|
    """
    group: FiniteAbelianGroup
    d: np.ndarray
    c1: np.ndarray
    c2: np.ndarray

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({'z_index': np.arange(self.group.order), 'd': self.d, 'c1': self.c1, 'c2': self.c2})


def _pair_table(group: FiniteAbelianGroup, Fp: np.ndarray, Fq: np.ndarray, num_workers=None) -> np.ndarray:
    table = group.add_table()

    def _d(z: int) -> float:
        # products indexed by (x, y)
        left = np.einsum('xij,yjk->xyik', Fp[table[:, z]], Fq)
        right = np.einsum('xij,yjk->xyik', Fp, Fq[table[z, :]])
        return float(np.max(block_norms(left - right)))

    return np.array(parallel_map(_d, range(group.order), num_workers, desc='rc modulus'))


def rc_modulus(sys: DynSystem, p, q, num_workers: Optional[int] = None) -> RcTable:
    g = sys.group
    Fp = fourier_coeffs(sys, p)
    Fq = fourier_coeffs(sys, q)
    d = _pair_table(g, Fp, Fq, num_workers)
    e = 0
    negs = g.neg_indices()
    c1 = block_norms(Fp @ Fq[e][None, :, :] - Fp[e][None, :, :] @ Fq)
    c2 = block_norms(Fp @ Fq[negs] - (Fp[e] @ Fq[e])[None, :, :])
    logging.debug(f'rc_modulus on {sys}: max d {np.max(d):.3e}')
    return RcTable(g, d, np.asarray(c1), np.asarray(c2))


def strict_continuity_modulus(sys: DynSystem, a, b) -> np.ndarray:
    r"""s(z) = max_x |F(a, z+x) b - F(a, x) b| over the dual group."""
    g = sys.group
    b = sys.check_mat(b)
    Fab = fourier_coeffs(sys, a) @ b[None, :, :]
    table = g.add_table()
    return np.array([float(np.max(block_norms(Fab[table[z, :]] - Fab))) for z in range(g.order)])


def write_rc_csv(table: RcTable, path: str, header_lines: List[str] = None):
    header = ['quantity: relative continuity modulus d(z) = max_{x,y} |F(p,x+z)F(q,y) - F(p,x)F(q,z+y)|',
              'c1(z) = |F(p,z)F(q,e) - F(p,e)F(q,z)|, c2(z) = |F(p,z)F(q,-z) - F(p,e)F(q,e)|',
              'statement: d(e) = 0 and d(z) = d(-z), the pair is relatively continuous when d is small near e',
              f'group: {table.group}']
    return write_csv(path, table.to_frame(), header + list(header_lines or []))
