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
import json
from typing import Any, Dict, List, Literal, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator

from group import FiniteAbelianGroup
from util import default_read, exists_file
from util.errors import ConfigError, StructuralError
from .system import DynSystem, cyclic_shift, diagonal_characters, explicit, random_system, trivial

# [[ [re, im], ... ], ...]
MatrixData = List[List[Tuple[float, float]]]


def to_matrix(data: MatrixData) -> np.ndarray:
    arr = np.asarray(data, dtype=float)
    if arr.ndim != 3 or arr.shape[2] != 2:
        raise StructuralError(f'A matrix should be nested arrays of [re, im] pairs, got shape {arr.shape}')
    return arr[..., 0] + 1j * arr[..., 1]


def from_matrix(m: np.ndarray) -> MatrixData:
    m = np.asarray(m, dtype=complex)
    return [[[float(v.real), float(v.imag)] for v in row] for row in m]


class _Strict(BaseModel):
    model_config = ConfigDict(extra='forbid')


class GroupModel(_Strict):
    factors: List[int] = Field(min_length=1)

    @field_validator('factors')
    @classmethod
    def _positive(cls, v):
        for n in v:
            if n < 1:
                raise ValueError(f'invariant factors should be >= 1, got {v}')
        return v


class RandomActionData(_Strict):
    seed: int


class ActionModel(_Strict):
    kind: Literal['trivial', 'cyclic-shift', 'diagonal-characters', 'explicit', 'random']
    # diagonal-characters: list of dual elements; explicit: one matrix per group element in
    # enumeration order; random: {"seed": s}
    data: Optional[Any] = None


class AlgebraModel(_Strict):
    kind: Literal['full', 'diagonal', 'block', 'explicit'] = 'full'
    blocks: Optional[List[int]] = None
    basis: Optional[List[MatrixData]] = None


class SystemConfig(_Strict):
    group: GroupModel
    dim: int = Field(ge=1)
    action: ActionModel
    algebra: AlgebraModel = AlgebraModel()
    tol: float = Field(default=1e-9, gt=0)
    elements: Dict[str, MatrixData] = {}

    def build(self) -> DynSystem:
        group = FiniteAbelianGroup(self.group.factors)
        kwargs = {}
        if self.algebra.kind == 'block':
            kwargs['blocks'] = self.algebra.blocks
        if self.algebra.kind == 'explicit':
            kwargs['basis'] = [to_matrix(b) for b in (self.algebra.basis or [])]
        kind = self.action.kind
        data = self.action.data
        if kind == 'trivial':
            sys = trivial(group, self.dim, self.algebra.kind, self.tol, **kwargs)
        elif kind == 'cyclic-shift':
            if self.dim != group.order:
                raise StructuralError(f'cyclic-shift needs dim = |G| = {group.order}, got {self.dim}')
            sys = cyclic_shift(group, self.algebra.kind, self.tol, **kwargs)
        elif kind == 'diagonal-characters':
            if not isinstance(data, list) or len(data) != self.dim:
                raise ConfigError(f'diagonal-characters needs a list of {self.dim} dual elements as data')
            sys = diagonal_characters(group, [tuple(x) if isinstance(x, list) else x for x in data],
                                      self.algebra.kind, self.tol, **kwargs)
        elif kind == 'explicit':
            if not isinstance(data, list):
                raise ConfigError('explicit action needs a list of matrices as data')
            sys = explicit(group, [to_matrix(u) for u in data], self.algebra.kind, self.tol, **kwargs)
        else:
            seed = RandomActionData.model_validate(data).seed
            if self.algebra.kind == 'explicit':
                raise ConfigError('random action supports full, diagonal and block algebras')
            sys = random_system(group, self.dim, seed, self.algebra.kind, self.tol, blocks=self.algebra.blocks)
        if sys.dim != self.dim:
            raise StructuralError(f'dim is {self.dim} but the action acts on C^{sys.dim}')
        return sys

    def named_elements(self) -> Dict[str, np.ndarray]:
        res = {}
        for name, data in self.elements.items():
            m = to_matrix(data)
            if m.shape != (self.dim, self.dim):
                raise StructuralError(f'Element "{name}" should be {self.dim}x{self.dim}, got {m.shape}')
            res[name] = m
        return res


def read_json(path: str) -> str:
    if not exists_file(path):
        raise ConfigError(f'Config file {path} does not exist')
    with default_read(path) as f:
        text = f.read()
    try:
        json.loads(text)
    except json.JSONDecodeError as e:
        raise ConfigError(f'Config file {path} is not valid JSON: {e}')
    return text


def load_system_config(path: str) -> SystemConfig:
    return SystemConfig.model_validate_json(read_json(path))
