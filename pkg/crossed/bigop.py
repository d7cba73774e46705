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
import numpy as np

from group import FiniteAbelianGroup, check_same_group
from numeric import op_norm
from util.errors import StructuralError


class ColumnOp:
    r"""
    An operator H -> l2(G, H), v -> (t -> block_t v), stored as an array of
    shape (|G|, d, d) in group enumeration order.
    """

    def __init__(self, group: FiniteAbelianGroup, blocks):
        blocks = np.asarray(blocks, dtype=complex)
        if blocks.ndim != 3 or blocks.shape[0] != group.order or blocks.shape[1] != blocks.shape[2]:
            raise StructuralError(f'A column operator over {group} needs shape ({group.order}, d, d), '
                                  f'got {blocks.shape}')
        self.group = group
        self.blocks = blocks

    @property
    def dim(self):
        return self.blocks.shape[1]

    def block(self, t) -> np.ndarray:
        return self.blocks[self.group.index_of(t)]

    def as_matrix(self) -> np.ndarray:
        return self.blocks.reshape(self.group.order * self.dim, self.dim)

    def norm(self) -> float:
        return op_norm(self.as_matrix())

    def _check(self, other: 'ColumnOp'):
        check_same_group(self.group, other.group)
        if other.dim != self.dim:
            raise StructuralError(f'Column operators of sizes {self.dim} and {other.dim}')

    def adjoint_times(self, other: 'ColumnOp') -> np.ndarray:
        r"""self* other = sum_t block_t* other_t"""
        self._check(other)
        return np.einsum('tji,tjk->ik', np.conj(self.blocks), other.blocks)

    def times(self, m) -> 'ColumnOp':
        return ColumnOp(self.group, self.blocks @ np.asarray(m, dtype=complex))

    def __sub__(self, other: 'ColumnOp'):
        self._check(other)
        return ColumnOp(self.group, self.blocks - other.blocks)

    def __add__(self, other: 'ColumnOp'):
        self._check(other)
        return ColumnOp(self.group, self.blocks + other.blocks)


class BigOp:
    r"""
    An operator on l2(G, H) = C^{|G| d} stored as blocks of shape
    (|G|, |G|, d, d); block (t, s) maps the s-th copy of H to the t-th.
    """

    def __init__(self, group: FiniteAbelianGroup, blocks):
        blocks = np.asarray(blocks, dtype=complex)
        n = group.order
        if blocks.ndim != 4 or blocks.shape[:2] != (n, n) or blocks.shape[2] != blocks.shape[3]:
            raise StructuralError(f'A block operator over {group} needs shape ({n}, {n}, d, d), got {blocks.shape}')
        self.group = group
        self.blocks = blocks

    @property
    def dim(self):
        return self.blocks.shape[2]

    def block(self, t, s) -> np.ndarray:
        return self.blocks[self.group.index_of(t), self.group.index_of(s)]

    def as_matrix(self) -> np.ndarray:
        n, d = self.group.order, self.dim
        return self.blocks.transpose(0, 2, 1, 3).reshape(n * d, n * d)

    @classmethod
    def from_matrix(cls, group: FiniteAbelianGroup, m) -> 'BigOp':
        m = np.asarray(m, dtype=complex)
        n = group.order
        if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] % n != 0:
            raise StructuralError(f'A {m.shape} matrix is not an operator on l2({group}, H)')
        d = m.shape[0] // n
        return cls(group, m.reshape(n, d, n, d).transpose(0, 2, 1, 3))

    @classmethod
    def zeros(cls, group: FiniteAbelianGroup, dim: int) -> 'BigOp':
        return cls(group, np.zeros((group.order, group.order, dim, dim), dtype=complex))

    @classmethod
    def identity(cls, group: FiniteAbelianGroup, dim: int) -> 'BigOp':
        op = cls.zeros(group, dim)
        for i in range(group.order):
            op.blocks[i, i] = np.eye(dim)
        return op

    @classmethod
    def block_diagonal(cls, group: FiniteAbelianGroup, diag) -> 'BigOp':
        diag = np.asarray(diag, dtype=complex)
        op = cls.zeros(group, diag.shape[1])
        idx = np.arange(group.order)
        op.blocks[idx, idx] = diag
        return op

    def norm(self) -> float:
        return op_norm(self.as_matrix())

    def adjoint(self) -> 'BigOp':
        return BigOp(self.group, np.conj(self.blocks.transpose(1, 0, 3, 2)))

    def _check(self, other):
        check_same_group(self.group, other.group)
        if other.dim != self.dim:
            raise StructuralError(f'Operators on l2(G, C^{self.dim}) and l2(G, C^{other.dim})')

    def __matmul__(self, other):
        self._check(other)
        if isinstance(other, ColumnOp):
            return ColumnOp(self.group, np.einsum('tsij,sjk->tik', self.blocks, other.blocks))
        return BigOp(self.group, np.einsum('trij,rsjk->tsik', self.blocks, other.blocks))

    def __add__(self, other: 'BigOp'):
        self._check(other)
        return BigOp(self.group, self.blocks + other.blocks)

    def __sub__(self, other: 'BigOp'):
        self._check(other)
        return BigOp(self.group, self.blocks - other.blocks)

    def scale(self, c: complex) -> 'BigOp':
        return BigOp(self.group, c * self.blocks)

    def corrupted(self, t, s, delta) -> 'BigOp':
        r"""Copy with ``delta`` added to block (t, s)."""
        blocks = self.blocks.copy()
        blocks[self.group.index_of(t), self.group.index_of(s)] += np.asarray(delta, dtype=complex)
        return BigOp(self.group, blocks)
