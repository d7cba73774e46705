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
from typing import Dict, List, Literal, Optional, Tuple

from pydantic import Field, model_validator

from dynamics.schema import _Strict, read_json
from util.errors import ConfigError
from .circle import CircleFunction, ShiftWindow


class CircleSpec(_Strict):
    kind: Literal['basis', 'trig', 'step', 'random-trig']
    n: Optional[int] = None
    # trig: {"n": [re, im]}
    coeffs: Optional[Dict[str, Tuple[float, float]]] = None
    bandwidth: Optional[int] = None
    seed: Optional[int] = None
    normalize: bool = True

    @model_validator(mode='after')
    def _fields_for_kind(self):
        need = {'basis': ['n'], 'trig': ['coeffs'], 'step': ['bandwidth'], 'random-trig': ['bandwidth', 'seed']}
        for name in need[self.kind]:
            if getattr(self, name) is None:
                raise ValueError(f'a {self.kind} function needs "{name}"')
        return self

    def build(self) -> CircleFunction:
        if self.kind == 'basis':
            return CircleFunction.basis(self.n)
        if self.kind == 'step':
            return CircleFunction.step(self.bandwidth)
        if self.kind == 'random-trig':
            return CircleFunction.random_trig(self.bandwidth, self.seed)
        try:
            coeffs = {int(k): complex(v[0], v[1]) for k, v in self.coeffs.items()}
        except ValueError as e:
            raise ConfigError(f'trig coefficients should be keyed by integers: {e}')
        return CircleFunction.trig(coeffs, normalize=self.normalize, label='trig')


class ShiftLabConfig(_Strict):
    window: int = Field(ge=1)
    zgrid: Optional[int] = None
    xygrid: Optional[int] = None
    phi: CircleSpec
    psi: Optional[CircleSpec] = None
    delta: Optional[CircleSpec] = None
    family: List[CircleSpec] = []
    weights: List[float] = []
    windows: List[int] = []
    strict: bool = False

    def shift_window(self) -> ShiftWindow:
        return ShiftWindow(self.window)


def load_lab_config(path: str) -> ShiftLabConfig:
    return ShiftLabConfig.model_validate_json(read_json(path))
