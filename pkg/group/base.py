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
import itertools
from typing import Callable, Dict, Iterable, List, Mapping, Sequence, Tuple, Union

import numpy as np

from util.errors import StructuralError

# Residue tuples stand for both group elements t and dual elements x.
Element = Tuple[int, ...]
ScalarFunction = Union[np.ndarray, Mapping[Element, complex], Callable[[Element], complex], Sequence[complex]]


class FiniteAbelianGroup:
    r"""
    G = Z_{n1} x ... x Z_{nk} together with its dual.

    Elements are enumerated in lexicographic order of residue tuples; every
    array indexed by G in this package follows that order. The dual group is
    identified with G through the pairing exp(2 pi i sum x_j t_j / n_j).
    Haar measure on G is counting measure, the dual Haar measure is 1/|G|
    times counting measure.
    """

    def __init__(self, factors: Iterable[int]):
        factors = tuple(int(n) for n in factors)
        if len(factors) == 0:
            raise StructuralError('A group needs at least one invariant factor, use [1] for the trivial group')
        for n in factors:
            if n < 1:
                raise StructuralError(f'Invariant factors should be >= 1, got {factors}')
        self.factors = factors
        self.order = int(np.prod(factors))
        self._elements: List[Element] = [tuple(e) for e in itertools.product(*[range(n) for n in factors])]
        self._index: Dict[Element, int] = {e: i for i, e in enumerate(self._elements)}
        self._chi = self._build_character_table()
        self._add_table = self._build_add_table()

    def __repr__(self):
        return 'Z' + 'xZ'.join(str(n) for n in self.factors)

    def __eq__(self, other):
        return isinstance(other, FiniteAbelianGroup) and self.factors == other.factors

    def __hash__(self):
        return hash(self.factors)

    def __len__(self):
        return self.order

    @classmethod
    def from_config(cls, cfg: Mapping):
        if 'factors' not in cfg:
            raise StructuralError('Group config should have "factors"')
        return cls(cfg['factors'])

    @property
    def identity(self) -> Element:
        return self._elements[0]

    @property
    def dual_haar_weight(self) -> float:
        return 1.0 / self.order

    def elements(self) -> List[Element]:
        return list(self._elements)

    def element(self, i: int) -> Element:
        return self._elements[i]

    def index_of(self, t) -> int:
        key = self._normalize(t)
        try:
            return self._index[key]
        except KeyError:
            raise StructuralError(f'{t} is not an element of {self}')

    def _normalize(self, t) -> Element:
        if isinstance(t, (int, np.integer)) and len(self.factors) == 1:
            t = (int(t),)
        try:
            key = tuple(int(v) for v in t)
        except TypeError:
            raise StructuralError(f'{t} is not an element of {self}')
        if len(key) != len(self.factors):
            raise StructuralError(f'{t} has {len(key)} residue(s) but {self} has {len(self.factors)} factor(s)')
        return key

    def contains(self, t) -> bool:
        try:
            self.index_of(t)
            return True
        except StructuralError:
            return False

    def add(self, s, t) -> Element:
        return self._elements[self._add_table[self.index_of(s), self.index_of(t)]]

    def neg(self, t) -> Element:
        t = self._elements[self.index_of(t)]
        return tuple((-v) % n for v, n in zip(t, self.factors))

    def sub(self, s, t) -> Element:
        return self.add(s, self.neg(t))

    def add_index(self, i: int, j: int) -> int:
        return int(self._add_table[i, j])

    def neg_index(self, i: int) -> int:
        return self._index[self.neg(self._elements[i])]

    def add_table(self) -> np.ndarray:
        r"""Integer table T with element(T[i, j]) = element(i) + element(j)."""
        return self._add_table

    def neg_indices(self) -> np.ndarray:
        return self._add_table_neg

    def _build_add_table(self):
        residues = np.array(self._elements, dtype=np.int64).reshape(self.order, len(self.factors))
        n = np.array(self.factors, dtype=np.int64)
        summed = (residues[:, None, :] + residues[None, :, :]) % n
        table = np.zeros((self.order, self.order), dtype=np.int64)
        for i in range(self.order):
            for j in range(self.order):
                table[i, j] = self._index[tuple(int(v) for v in summed[i, j])]
        table.flags.writeable = False
        negs = np.array([self._index[tuple(int(v) for v in (-r) % n)] for r in residues], dtype=np.int64)
        negs.flags.writeable = False
        self._add_table_neg = negs
        return table

    def _build_character_table(self):
        residues = np.array(self._elements, dtype=np.int64).reshape(self.order, len(self.factors))
        n = np.array(self.factors, dtype=np.int64)
        # fractional phase computed with integers first to keep roots of unity exact-ish
        phase = np.zeros((self.order, self.order))
        for j, nj in enumerate(n):
            phase += np.mod(np.outer(residues[:, j], residues[:, j]), nj) / nj
        chi = np.exp(2j * np.pi * phase)
        chi.flags.writeable = False
        return chi

    def character_table(self) -> np.ndarray:
        r"""Matrix chi[x, t] = <x, t> indexed by enumeration order."""
        return self._chi

    def pairing(self, x, t) -> complex:
        return complex(self._chi[self.index_of(x), self.index_of(t)])

    def character_sum(self, x) -> complex:
        return complex(np.sum(self._chi[self.index_of(x)]))

    def as_vector(self, g: ScalarFunction) -> np.ndarray:
        r"""
        Coerce a scalar function on G to a complex vector in enumeration order.

        Accepts a vector of length |G|, a mapping element -> value (missing
        elements count as 0) or a callable.
        """
        if isinstance(g, Mapping):
            vec = np.zeros(self.order, dtype=complex)
            for t, v in g.items():
                vec[self.index_of(t)] = v
            return vec
        if callable(g):
            return np.array([g(t) for t in self._elements], dtype=complex)
        vec = np.asarray(g, dtype=complex).reshape(-1)
        if vec.shape[0] != self.order:
            raise StructuralError(f'A function on {self} needs {self.order} values, got {vec.shape[0]}')
        return vec

    def ghat(self, g: ScalarFunction, x=None):
        r"""
        Fourier transform ghat(x) = sum_t conj(<x, t>) g(t).

        Returns the full vector over the dual group when x is None.
        """
        vec = self.as_vector(g)
        full = np.conj(self._chi) @ vec
        if x is None:
            return full
        return complex(full[self.index_of(x)])

    def delta(self, t) -> np.ndarray:
        vec = np.zeros(self.order, dtype=complex)
        vec[self.index_of(t)] = 1.0
        return vec


def pairing(group: FiniteAbelianGroup, x, t) -> complex:
    return group.pairing(x, t)


def character_sum(group: FiniteAbelianGroup, x) -> complex:
    return group.character_sum(x)


def check_same_group(a: FiniteAbelianGroup, b: FiniteAbelianGroup):
    if a != b:
        raise StructuralError(f'Group mismatch: {a} vs {b}')
