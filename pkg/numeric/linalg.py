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
from typing import List, Sequence, Tuple

import numpy as np

from config import default_config
from util.errors import NumericError, StructuralError


def as_mat(M) -> np.ndarray:
    M = np.asarray(M, dtype=complex)
    if M.ndim != 2:
        raise StructuralError(f'Expected a matrix, got an array of shape {M.shape}')
    return M


def check_finite(M: np.ndarray, name: str = 'matrix'):
    if not np.all(np.isfinite(M)):
        raise NumericError(f'{name} has non-finite entries')
    return M


def adjoint(M) -> np.ndarray:
    return np.conj(M).T


def hermitian_part(M) -> np.ndarray:
    return (M + adjoint(M)) / 2


def hs_inner(A, B) -> complex:
    r"""Hilbert-Schmidt inner product <A, B> = trace(A* B), conjugate linear in A."""
    return complex(np.vdot(A, B))


def hs_norm(A) -> float:
    return float(np.linalg.norm(A))


def op_norm(M) -> float:
    r"""
    Largest singular value.

    A full SVD is used while both dimensions are at most
    numeric.dense_svd_max_dim, power iteration on M* M beyond that.
    """
    M = check_finite(as_mat(M))
    if M.size == 0:
        return 0.0
    if max(M.shape) <= default_config.dense_svd_max_dim:
        return float(np.linalg.norm(M, 2))
    return _power_norm(M)


def _power_norm(M: np.ndarray) -> float:
    tol = default_config.power_iteration_tol
    max_steps = default_config.power_iteration_max_steps
    rng = np.random.default_rng(0)
    v = rng.standard_normal(M.shape[1]) + 1j * rng.standard_normal(M.shape[1])
    v /= np.linalg.norm(v)
    sigma = 0.0
    for step in range(max_steps):
        u = M @ v
        new_sigma = float(np.linalg.norm(u))
        if new_sigma == 0.0:
            return 0.0
        w = adjoint(M) @ u
        v = w / np.linalg.norm(w)
        if abs(new_sigma - sigma) <= tol * new_sigma:
            return new_sigma
        sigma = new_sigma
    logging.warning(f'Power iteration did not reach tol={tol} in {max_steps} steps on a {M.shape} matrix')
    return sigma


def psd_defect(M) -> float:
    r"""max(0, -lambda_min) of the hermitian part; 0 means M >= 0."""
    M = check_finite(as_mat(M))
    if M.shape[0] != M.shape[1]:
        raise StructuralError(f'psd_defect needs a square matrix, got {M.shape}')
    if M.size == 0:
        return 0.0
    lam = np.linalg.eigvalsh(hermitian_part(M))
    return float(max(0.0, -lam[0]))


def commutator_norm(A, B) -> float:
    return op_norm(A @ B - B @ A)


class Subspace:
    r"""
    A subspace of matrices of one shape, stored as an orthonormal basis
    under the Hilbert-Schmidt inner product (rows of ``vectors``).
    """

    def __init__(self, shape: Tuple[int, int], vectors: np.ndarray, tol: float):
        self.shape = tuple(shape)
        self.vectors = np.asarray(vectors, dtype=complex).reshape(-1, self.shape[0] * self.shape[1])
        self.tol = tol

    def __repr__(self):
        return f'Subspace(shape={self.shape}, dim={self.dim})'

    @classmethod
    def zero(cls, shape: Tuple[int, int], tol: float = None):
        return cls(shape, np.zeros((0, shape[0] * shape[1]), dtype=complex),
                   default_config.rank_tol if tol is None else tol)

    @property
    def dim(self) -> int:
        return self.vectors.shape[0]

    @property
    def basis(self) -> List[np.ndarray]:
        return [v.reshape(self.shape) for v in self.vectors]

    def _flat(self, M) -> np.ndarray:
        M = as_mat(M)
        if M.shape != self.shape:
            raise StructuralError(f'Shape mismatch: {M.shape} against a subspace of {self.shape} matrices')
        return M.reshape(-1)

    def coords(self, M) -> np.ndarray:
        return np.conj(self.vectors) @ self._flat(M)

    def project(self, M) -> np.ndarray:
        v = self._flat(M)
        if self.dim == 0:
            return np.zeros(self.shape, dtype=complex)
        return (self.vectors.T @ (np.conj(self.vectors) @ v)).reshape(self.shape)

    def residual(self, M) -> float:
        return hs_norm(as_mat(M) - self.project(M))

    def contains(self, M, tol: float = None) -> bool:
        tol = self.tol if tol is None else tol
        return self.residual(M) <= tol * max(1.0, hs_norm(M))

    def orthonormality_defect(self) -> float:
        if self.dim == 0:
            return 0.0
        gram = np.conj(self.vectors) @ self.vectors.T
        return float(np.max(np.abs(gram - np.eye(self.dim))))


def span_of(mats: Sequence, tol: float = None, shape: Tuple[int, int] = None,
            scale: float = None) -> Subspace:
    r"""
    Orthonormal Hilbert-Schmidt basis of the span of ``mats``.

    The numerical rank counts singular values above tol times a reference
    norm, tol defaulting to numeric.rank_tol. The reference is ``scale`` when
    given, else the largest Hilbert-Schmidt norm among the inputs. Families
    cut from one larger table should pass the norm of that table, otherwise
    a family made only of round-off is kept at full rank.

    :param mats: matrices of one shape
    :param tol: relative rank threshold
    :param shape: required when mats may be empty
    :param scale: reference norm for the rank cut-off
    """
    tol = default_config.rank_tol if tol is None else tol
    mats = [as_mat(m) for m in mats]
    if len(mats) == 0:
        assert shape is not None, 'span_of needs a shape for an empty family'
        return Subspace.zero(shape, tol)
    shape = mats[0].shape if shape is None else tuple(shape)
    for m in mats:
        if m.shape != shape:
            raise StructuralError(f'Shape mismatch in span: {m.shape} vs {shape}')
        check_finite(m)
    stack = np.array([m.reshape(-1) for m in mats])
    local = float(np.max(np.linalg.norm(stack, axis=1)))
    if scale is None:
        scale = local
    elif scale < 0:
        raise StructuralError(f'Reference scale should be non-negative, got {scale}')
    if local == 0.0:
        return Subspace.zero(shape, tol)
    _, s, vh = np.linalg.svd(stack, full_matrices=False)
    rank = int(np.sum(s > tol * max(scale, local)))
    # rows of vh span the row space of stack
    return Subspace(shape, vh[:rank], tol)


def residual(M, S: Subspace) -> float:
    return S.residual(M)


def project(M, S: Subspace) -> np.ndarray:
    return S.project(M)


def subspace_residual(S1: Subspace, S2: Subspace) -> float:
    r"""Largest residual of a basis element of S1 against S2; 0 iff S1 is inside S2."""
    if S1.shape != S2.shape:
        raise StructuralError(f'Shape mismatch: {S1.shape} vs {S2.shape}')
    if S1.dim == 0:
        return 0.0
    return max(S2.residual(b) for b in S1.basis)


def same_subspace(S1: Subspace, S2: Subspace) -> Tuple[bool, float, float]:
    r"""(equal dimension, residual of S1 in S2, residual of S2 in S1)"""
    return S1.dim == S2.dim, subspace_residual(S1, S2), subspace_residual(S2, S1)


def sum_of(S1: Subspace, S2: Subspace) -> Subspace:
    return span_of(S1.basis + S2.basis, tol=S1.tol, shape=S1.shape)


def random_matrix(rng: np.random.Generator, rows: int, cols: int = None) -> np.ndarray:
    cols = rows if cols is None else cols
    return rng.standard_normal((rows, cols)) + 1j * rng.standard_normal((rows, cols))


def random_unitary(rng: np.random.Generator, dim: int) -> np.ndarray:
    q, r = np.linalg.qr(random_matrix(rng, dim))
    phases = np.diag(r) / np.abs(np.diag(r))
    return q * phases[None, :]


def block_norms(stack) -> np.ndarray:
    r"""Operator norms of a stack of matrices (any leading shape)."""
    stack = np.asarray(stack, dtype=complex)
    if stack.size == 0:
        return np.zeros(stack.shape[:-2])
    return np.linalg.norm(stack, ord=2, axis=(-2, -1))
