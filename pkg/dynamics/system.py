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
from typing import List, Mapping, Optional, Sequence, Union

import numpy as np

from config import default_config
from group import FiniteAbelianGroup, check_same_group
from numeric import Subspace, as_mat, adjoint, op_norm, random_unitary, span_of
from util.errors import StructuralError

ALGEBRA_KINDS = ['full', 'diagonal', 'block', 'explicit']


class DynSystem:
    r"""
    A finite C*-dynamical system (A, G, alpha) with alpha_t = Ad(u_t).

    ``unitaries`` is indexed by the enumeration order of ``group``. The
    algebra A is a subspace of d x d matrices; multipliers are carried as
    d x d matrices as well. Construction validates the representation law,
    unitarity, invariance and closure of A and non-degeneracy, raising
    StructuralError on the first violation.
    """

    def __init__(self, group: FiniteAbelianGroup, unitaries: Sequence, algebra: Subspace,
                 tol: float = 1e-9, name: str = 'system'):
        self.group = group
        self.name = name
        self.tol = tol
        us = np.array([as_mat(u) for u in unitaries], dtype=complex)
        if us.shape[0] != group.order:
            raise StructuralError(f'{name}: expected {group.order} unitaries, got {us.shape[0]}')
        if us.ndim != 3 or us.shape[1] != us.shape[2]:
            raise StructuralError(f'{name}: unitaries should be square matrices of one size')
        self.dim = us.shape[1]
        if group.order * self.dim > default_config.max_big_dim:
            raise StructuralError(f'{name}: |G|*d = {group.order * self.dim} exceeds numeric.max_big_dim='
                                  f'{default_config.max_big_dim}')
        if algebra.shape != (self.dim, self.dim):
            raise StructuralError(f'{name}: algebra of {algebra.shape} matrices on C^{self.dim}')
        self._u = us
        self._uh = np.conj(np.transpose(us, (0, 2, 1)))
        self.algebra = algebra
        self._validate()
        self._u.flags.writeable = False
        self._uh.flags.writeable = False

    def __repr__(self):
        return f'DynSystem({self.name}, G={self.group}, d={self.dim}, dim A={self.algebra.dim})'

    def _validate(self):
        eye = np.eye(self.dim)
        e = 0
        if op_norm(self._u[e] - eye) > self.tol:
            raise StructuralError(f'{self.name}: u_e is not the identity')
        for i in range(self.group.order):
            defect = op_norm(self._u[i] @ self._uh[i] - eye)
            if defect > self.tol:
                raise StructuralError(f'{self.name}: u_{self.group.element(i)} is not unitary '
                                      f'(|u u* - I| = {defect:.3e})')
        table = self.group.add_table()
        for i in range(self.group.order):
            for j in range(self.group.order):
                defect = op_norm(self._u[i] @ self._u[j] - self._u[table[i, j]])
                if defect > self.tol:
                    raise StructuralError(f'{self.name}: u_s u_t != u_st at s={self.group.element(i)}, '
                                          f't={self.group.element(j)} (defect {defect:.3e})')
        basis = self.algebra.basis
        if len(basis) == 0:
            raise StructuralError(f'{self.name}: the algebra is zero')
        for b in basis:
            for i in range(self.group.order):
                r = self.algebra.residual(self._u[i] @ b @ self._uh[i])
                if r > self.tol:
                    raise StructuralError(f'{self.name}: the algebra is not invariant under '
                                          f'alpha_{self.group.element(i)} (residual {r:.3e})')
            r = self.algebra.residual(adjoint(b))
            if r > self.tol:
                raise StructuralError(f'{self.name}: the algebra is not closed under adjoint (residual {r:.3e})')
        for b in basis:
            for c in basis:
                r = self.algebra.residual(b @ c)
                if r > self.tol:
                    raise StructuralError(f'{self.name}: the algebra is not closed under products '
                                          f'(residual {r:.3e})')
        # A acts non-degenerately: the ranges of its elements span C^d
        ranges = np.hstack(basis)
        if np.linalg.matrix_rank(ranges, tol=self.tol) < self.dim:
            raise StructuralError(f'{self.name}: the algebra acts degenerately on C^{self.dim}')
        logging.debug(f'Validated {self}')

    def unitary(self, t) -> np.ndarray:
        return self._u[self.group.index_of(t)]

    def unitaries(self) -> np.ndarray:
        return self._u

    def check_mat(self, a, name: str = 'a') -> np.ndarray:
        a = as_mat(a)
        if a.shape != (self.dim, self.dim):
            raise StructuralError(f'{name} should be {self.dim}x{self.dim}, got {a.shape}')
        return a

    def alpha(self, t, a) -> np.ndarray:
        a = self.check_mat(a)
        i = self.group.index_of(t)
        return self._u[i] @ a @ self._uh[i]

    def alpha_all(self, a) -> np.ndarray:
        r"""Array of shape (|G|, d, d) holding alpha_t(a) in enumeration order."""
        a = self.check_mat(a)
        return self._u @ a @ self._uh

    def alpha_inv_all(self, a) -> np.ndarray:
        r"""alpha_{t^-1}(a) for every t."""
        return self.alpha_all(a)[self.group.neg_indices()]

    def same_as(self, other: 'DynSystem'):
        if other is self:
            return
        check_same_group(self.group, other.group)
        if other.dim != self.dim or not np.allclose(other._u, self._u):
            raise StructuralError(f'System mismatch: {self} vs {other}')


class Symbol:
    r"""A map G -> M_d stored as an array of shape (|G|, d, d)."""

    def __init__(self, group: FiniteAbelianGroup, values):
        values = np.asarray(values, dtype=complex)
        if values.ndim != 3 or values.shape[0] != group.order or values.shape[1] != values.shape[2]:
            raise StructuralError(f'A symbol on {group} needs shape ({group.order}, d, d), got {values.shape}')
        self.group = group
        self.values = values

    @property
    def dim(self):
        return self.values.shape[1]

    def __getitem__(self, t) -> np.ndarray:
        return self.values[self.group.index_of(t)]

    def __add__(self, other: 'Symbol'):
        check_same_group(self.group, other.group)
        return Symbol(self.group, self.values + other.values)

    def __sub__(self, other: 'Symbol'):
        check_same_group(self.group, other.group)
        return Symbol(self.group, self.values - other.values)

    def scale(self, c: complex):
        return Symbol(self.group, c * self.values)

    def max_diff(self, other: 'Symbol') -> float:
        check_same_group(self.group, other.group)
        return max(op_norm(d) for d in self.values - other.values)

    def support(self) -> List[int]:
        return [i for i in range(self.group.order) if np.any(self.values[i] != 0)]

    @classmethod
    def zeros(cls, group: FiniteAbelianGroup, dim: int):
        return cls(group, np.zeros((group.order, dim, dim), dtype=complex))

    @classmethod
    def delta(cls, group: FiniteAbelianGroup, t, a):
        r"""delta_t (x) a"""
        a = as_mat(a)
        s = cls.zeros(group, a.shape[0])
        s.values[group.index_of(t)] = a
        return s

    @classmethod
    def from_scalar(cls, group: FiniteAbelianGroup, g, c):
        r"""t -> g(t) c"""
        vec = group.as_vector(g)
        return cls(group, vec[:, None, None] * as_mat(c)[None, :, :])

    @classmethod
    def from_map(cls, group: FiniteAbelianGroup, values: Mapping, dim: int):
        s = cls.zeros(group, dim)
        for t, a in values.items():
            s.values[group.index_of(t)] = as_mat(a)
        return s


def _matrix_units(dim: int, blocks: Optional[Sequence[int]] = None) -> List[np.ndarray]:
    if blocks is None:
        blocks = [dim]
    if sum(blocks) != dim or any(b < 1 for b in blocks):
        raise StructuralError(f'Blocks {list(blocks)} do not partition dimension {dim}')
    units = []
    start = 0
    for b in blocks:
        for i in range(start, start + b):
            for j in range(start, start + b):
                e = np.zeros((dim, dim), dtype=complex)
                e[i, j] = 1.0
                units.append(e)
        start += b
    return units


def algebra_basis(kind: str, dim: int, blocks: Sequence[int] = None, basis: Sequence = None) -> List[np.ndarray]:
    r"""Spanning family of a named algebra in the standard frame of C^d."""
    if kind == 'full':
        return _matrix_units(dim)
    if kind == 'diagonal':
        return _matrix_units(dim, [1] * dim)
    if kind == 'block':
        if blocks is None:
            raise StructuralError('Block algebra needs "blocks"')
        return _matrix_units(dim, blocks)
    if kind == 'explicit':
        if not basis:
            raise StructuralError('Explicit algebra needs a non-empty "basis"')
        return [as_mat(b) for b in basis]
    raise StructuralError(f'Unknown algebra kind "{kind}", available: {ALGEBRA_KINDS}')


def trivial(group: FiniteAbelianGroup, dim: int, algebra: str = 'full', tol: float = 1e-9, **kwargs) -> DynSystem:
    us = [np.eye(dim, dtype=complex)] * group.order
    return DynSystem(group, us, span_of(algebra_basis(algebra, dim, **kwargs)), tol, name='trivial')


def cyclic_shift(group: FiniteAbelianGroup, algebra: str = 'full', tol: float = 1e-9, **kwargs) -> DynSystem:
    r"""u_t e_j = e_{j+t} on C^n for G = Z_n."""
    if len(group.factors) != 1:
        raise StructuralError(f'cyclic-shift needs a cyclic group, got {group}')
    n = group.order
    us = []
    for t in range(n):
        u = np.zeros((n, n), dtype=complex)
        for j in range(n):
            u[(j + t) % n, j] = 1.0
        us.append(u)
    return DynSystem(group, us, span_of(algebra_basis(algebra, n, **kwargs)), tol, name='cyclic-shift')


def diagonal_characters(group: FiniteAbelianGroup, chars: Sequence, algebra: str = 'full', tol: float = 1e-9,
                        **kwargs) -> DynSystem:
    r"""u_t = diag(<x_1, t>, ..., <x_d, t>) for dual elements x_j."""
    if len(chars) == 0:
        raise StructuralError('diagonal-characters needs at least one character')
    chi = group.character_table()
    rows = [group.index_of(x) for x in chars]
    us = [np.diag(chi[rows, i]) for i in range(group.order)]
    return DynSystem(group, us, span_of(algebra_basis(algebra, len(chars), **kwargs)), tol,
                     name='diagonal-characters')


def explicit(group: FiniteAbelianGroup, unitaries: Sequence, algebra: str = 'full', tol: float = 1e-9,
             **kwargs) -> DynSystem:
    us = [as_mat(u) for u in unitaries]
    if len(us) == 0:
        raise StructuralError('explicit action needs unitaries')
    return DynSystem(group, us, span_of(algebra_basis(algebra, us[0].shape[0], **kwargs)), tol, name='explicit')


def random_system(group: FiniteAbelianGroup, dim: int, seed: int, algebra: str = 'full', tol: float = 1e-9,
                  blocks: Sequence[int] = None) -> DynSystem:
    r"""
    u_t = V diag(<x_j, t>) V* with a seeded unitary V and random characters
    x_j. Spans of matrix units are Ad(diag)-invariant, so full, diagonal and
    block algebras conjugated by V are invariant algebras.
    """
    rng = np.random.default_rng(seed)
    v = random_unitary(rng, dim)
    chi = group.character_table()
    rows = rng.integers(0, group.order, size=dim)
    us = [v @ np.diag(chi[rows, i]) @ adjoint(v) for i in range(group.order)]
    if algebra == 'explicit':
        raise StructuralError('random systems support full, diagonal and block algebras')
    basis = [v @ b @ adjoint(v) for b in algebra_basis(algebra, dim, blocks=blocks)]
    return DynSystem(group, us, span_of(basis), tol, name=f'random-{seed}')
