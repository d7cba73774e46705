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
from typing import Mapping, Sequence, Union

import numpy as np

from util.errors import DomainError, PreconditionError, StructuralError, WindowError

SAMPLES_PER_BAND = 16


class CircleFunction:
    r"""
    Fourier coefficients c_n for n in [-B, B], stored as an array of length
    2B+1 indexed n+B. Truncated series of discontinuous symbols carry the
    two-norm of the discarded tail.
    """

    def __init__(self, coeffs, tail: float = 0.0, label: str = None):
        coeffs = np.asarray(coeffs, dtype=complex).reshape(-1)
        if coeffs.size % 2 != 1:
            raise StructuralError(f'Coefficient arrays should have odd length 2B+1, got {coeffs.size}')
        if not np.all(np.isfinite(coeffs)):
            raise StructuralError('Coefficients should be finite')
        self.coeffs = coeffs
        self.tail = float(tail)
        self.label = label

    def __repr__(self):
        return f'CircleFunction({self.label or "trig"}, B={self.bandwidth}, tail={self.tail:.2e})'

    @property
    def bandwidth(self) -> int:
        return (self.coeffs.size - 1) // 2

    @property
    def frequencies(self) -> np.ndarray:
        return np.arange(-self.bandwidth, self.bandwidth + 1)

    def coeff(self, n: int) -> complex:
        if abs(n) > self.bandwidth:
            return 0j
        return complex(self.coeffs[n + self.bandwidth])

    def padded(self, bandwidth: int) -> np.ndarray:
        if bandwidth < self.bandwidth:
            raise StructuralError(f'Cannot pad bandwidth {self.bandwidth} down to {bandwidth}')
        out = np.zeros(2 * bandwidth + 1, dtype=complex)
        offset = bandwidth - self.bandwidth
        out[offset:offset + self.coeffs.size] = self.coeffs
        return out

    @classmethod
    def basis(cls, n: int):
        r"""e_n(w) = w^n"""
        coeffs = np.zeros(2 * abs(n) + 1, dtype=complex)
        coeffs[n + abs(n)] = 1.0
        return cls(coeffs, label=f'e_{n}')

    @classmethod
    def trig(cls, coeffs: Union[Mapping[int, complex], Sequence], normalize: bool = False, label: str = None):
        r"""From {n: c_n}, or from an odd-length array indexed n+B."""
        if isinstance(coeffs, Mapping):
            if len(coeffs) == 0:
                raise StructuralError('A trigonometric polynomial needs at least one coefficient')
            band = max(abs(int(n)) for n in coeffs)
            arr = np.zeros(2 * band + 1, dtype=complex)
            for n, c in coeffs.items():
                arr[int(n) + band] += complex(c)
        else:
            arr = np.asarray(coeffs, dtype=complex)
        f = cls(arr, label=label)
        return f.normalized() if normalize else f

    @classmethod
    def step(cls, bandwidth: int):
        r"""
        sign(Im w) truncated to [-B, B] and renormalized. Its series is
        sum over odd k of 2/(i pi k) w^k with unit two-norm, so the tail
        two-norm is sqrt(1 - kept energy).
        """
        if bandwidth < 1:
            raise WindowError(f'A step function needs bandwidth >= 1, got {bandwidth}')
        ks = np.arange(-bandwidth, bandwidth + 1)
        coeffs = np.zeros(ks.size, dtype=complex)
        odd = ks % 2 != 0
        coeffs[odd] = 2.0 / (1j * np.pi * ks[odd])
        kept = float(np.sum(np.abs(coeffs) ** 2))
        return cls(coeffs / np.sqrt(kept), tail=np.sqrt(max(0.0, 1.0 - kept)), label=f'step_{bandwidth}')

    @classmethod
    def random_trig(cls, bandwidth: int, seed: int):
        rng = np.random.default_rng(seed)
        size = 2 * bandwidth + 1
        f = cls(rng.standard_normal(size) + 1j * rng.standard_normal(size), label=f'random_{bandwidth}_{seed}')
        return f.normalized()

    def two_norm(self) -> float:
        return float(np.linalg.norm(self.coeffs))

    def one_norm(self) -> float:
        r"""sum |c_n|, a bound on the sup-norm"""
        return float(np.sum(np.abs(self.coeffs)))

    def lipschitz(self) -> float:
        r"""sum |n| |c_n|, a Lipschitz constant in the angle"""
        return float(np.sum(np.abs(self.frequencies) * np.abs(self.coeffs)))

    def normalized(self) -> 'CircleFunction':
        norm = self.two_norm()
        if norm == 0.0:
            raise PreconditionError('Cannot normalize the zero function', 0.0)
        return CircleFunction(self.coeffs / norm, self.tail, self.label)

    def check_normalized(self, tol: float = 1e-12):
        defect = abs(self.two_norm() - 1.0)
        if defect > tol:
            raise PreconditionError(f'{self} should have unit two-norm', defect)

    def evaluate(self, w) -> np.ndarray:
        w = np.asarray(w, dtype=complex)
        powers = w[..., None] ** self.frequencies
        return powers @ self.coeffs

    def sample_count(self, m: int = None) -> int:
        floor = max(SAMPLES_PER_BAND * max(self.bandwidth, 1), 64)
        return floor if m is None else max(m, floor)

    def samples(self, m: int = None) -> np.ndarray:
        m = self.sample_count(m)
        return self.evaluate(circle_grid(m))

    def sup_norm(self, m: int = None) -> float:
        r"""Sampled sup-norm, a lower bound of the true one."""
        return float(np.max(np.abs(self.samples(m))))

    def sup_bound(self, m: int = None) -> float:
        r"""Upper bound of the sup-norm: every point is within pi/m of a sample."""
        m = self.sample_count(m)
        return self.sup_norm(m) + np.pi / m * self.lipschitz()

    def conj(self) -> 'CircleFunction':
        r"""conj(f)(w) has coefficients conj(c_{-n})"""
        return CircleFunction(np.conj(self.coeffs[::-1]), self.tail, self.label and f'conj({self.label})')

    def multiply(self, other: 'CircleFunction') -> 'CircleFunction':
        return CircleFunction(np.convolve(self.coeffs, other.coeffs), self.tail + other.tail)

    def rotate(self, z: complex) -> 'CircleFunction':
        r"""(tau_z f)(w) = f(z w)"""
        check_unimodular(z)
        return CircleFunction(self.coeffs * z ** self.frequencies, self.tail, self.label)

    def __add__(self, other: 'CircleFunction'):
        band = max(self.bandwidth, other.bandwidth)
        return CircleFunction(self.padded(band) + other.padded(band), self.tail + other.tail)

    def __sub__(self, other: 'CircleFunction'):
        band = max(self.bandwidth, other.bandwidth)
        return CircleFunction(self.padded(band) - other.padded(band), self.tail + other.tail)

    def scale(self, c: complex) -> 'CircleFunction':
        return CircleFunction(c * self.coeffs, abs(c) * self.tail, self.label)

    def inner(self, other: 'CircleFunction') -> complex:
        r"""<f, g> = sum conj(f_n) g_n"""
        band = max(self.bandwidth, other.bandwidth)
        return complex(np.vdot(self.padded(band), other.padded(band)))


def check_unimodular(z: complex, tol: float = 1e-12):
    if abs(abs(z) - 1.0) > tol:
        raise DomainError(f'z = {z} is not on the unit circle')


def circle_grid(m: int) -> np.ndarray:
    r"""exp(2 pi i j / m), j = 0..m-1"""
    return np.exp(2j * np.pi * np.arange(m) / m)


class ShiftWindow:
    r"""The coordinates n in [-N, N] of l2(Z), matrix index n + N."""

    def __init__(self, N: int):
        if N < 1:
            raise WindowError(f'A window needs N >= 1, got {N}')
        self.N = int(N)

    def __repr__(self):
        return f'ShiftWindow(N={self.N})'

    @property
    def dim(self) -> int:
        return 2 * self.N + 1

    @property
    def indices(self) -> np.ndarray:
        return np.arange(-self.N, self.N + 1)

    def check_band(self, bandwidth: int, ratio: int = 1, what: str = 'symbol'):
        r"""Require bandwidth <= N / ratio."""
        if bandwidth * ratio > self.N:
            raise WindowError(f'{what} bandwidth {bandwidth} exceeds N/{ratio} for N = {self.N}')

    def interior(self, radius: int) -> slice:
        if radius < 0:
            raise WindowError(f'{self} has no interior of radius {radius}')
        radius = min(radius, self.N)
        return slice(self.N - radius, self.N + radius + 1)

    def vector(self, f: CircleFunction, shift: int = 0) -> np.ndarray:
        r"""Coefficients of U^shift f on the window."""
        if f.bandwidth + abs(shift) > self.N:
            raise WindowError(f'{f} shifted by {shift} does not fit in {self}')
        v = np.zeros(self.dim, dtype=complex)
        start = self.N - f.bandwidth + shift
        v[start:start + f.coeffs.size] = f.coeffs
        return v

    def w_diag(self, z: complex, indices: np.ndarray = None) -> np.ndarray:
        r"""Diagonal of W_z: e_n -> z^n e_n"""
        check_unimodular(z)
        ns = self.indices if indices is None else indices
        return z ** ns.astype(float)

    def shift_matrix(self, k: int) -> np.ndarray:
        r"""U^k truncated to the window, U e_n = e_{n+1}"""
        return np.eye(self.dim, k=-k, dtype=complex)


def laurent(f: CircleFunction, rows: np.ndarray, cols: np.ndarray) -> np.ndarray:
    r"""L[i, j] = c_{i-j} for row indices i and column indices j in Z."""
    diff = rows[:, None] - cols[None, :]
    out = np.zeros(diff.shape, dtype=complex)
    inside = np.abs(diff) <= f.bandwidth
    out[inside] = f.coeffs[diff[inside] + f.bandwidth]
    return out


def eps_N(*fs: CircleFunction) -> float:
    r"""Truncation allowance: 10 times the largest recorded tail, plus 1e-9."""
    tail = max((f.tail for f in fs), default=0.0)
    return 10.0 * tail + 1e-9
