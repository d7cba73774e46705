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
import argparse
import os
from typing import List, Tuple

from config import default_config
from dynamics import DynSystem, SystemConfig, load_system_config
from util import exists_dir, file_dir, mkdir
from util.errors import UsageError


class BaseCmd:
    def __init__(self, name: str, description: str):
        self._parser = argparse.ArgumentParser(prog=name, description=description)
        self.name = name
        self.description = description
        self.config = default_config
        self.args = None

    def parse_args(self, argv: List[str]):
        self.args = self._parser.parse_args(argv)

    def invoke(self) -> int:
        return 0


class BaseOutputCmd(BaseCmd):
    def __init__(self, name: str, description: str):
        super().__init__(name, description)
        self._parser.add_argument('-o', '--out', type=str, default=None, metavar='path',
                                  help='Output file. Defaults to a file under project_path in config.yaml.')

    def output_path(self, default_name: str) -> str:
        r"""--out when given (its directory must exist), else project_path/default_name."""
        if self.args.out:
            parent = file_dir(self.args.out)
            if parent and not exists_dir(parent):
                raise UsageError(f'Output directory {parent} does not exist')
            return self.args.out
        return os.path.join(mkdir(self.config.project_path), default_name)


class BaseSystemCmd(BaseOutputCmd):
    def __init__(self, name: str, description: str):
        super().__init__(name, description)
        self._parser.add_argument('-c', '--config', required=True, type=str, metavar='json',
                                  help='System config (JSON).')
        self._parser.add_argument('-s', '--seed', type=int, default=0, help='Seed of every random draw.')
        self._parser.add_argument('--tol', type=float, default=None,
                                  help='Verification tolerance. Defaults to verify.tol in config.yaml.')

    @property
    def tol(self) -> float:
        return self.config.verify_tol if self.args.tol is None else self.args.tol

    def load_system(self) -> Tuple[SystemConfig, DynSystem]:
        cfg = load_system_config(self.args.config)
        return cfg, cfg.build()


class BaseGridCmd(BaseOutputCmd):
    def __init__(self, name: str, description: str):
        super().__init__(name, description)
        self._parser.add_argument('-w', '--window', type=int, default=None, metavar='N',
                                  help='Truncation window [-N, N].')
        self._parser.add_argument('-g', '--grid', type=int, default=None,
                                  help='Points of the z grid. Defaults to lab.zgrid in config.yaml.')
        self._parser.add_argument('--xygrid', type=int, default=None,
                                  help='Points of the x and y grids. Defaults to lab.xygrid in config.yaml.')

    @property
    def zgrid(self) -> int:
        return self.config.lab_zgrid if self.args.grid is None else self.args.grid

    @property
    def xygrid(self) -> int:
        return self.config.lab_xygrid if self.args.xygrid is None else self.args.xygrid
