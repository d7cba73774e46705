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

import yaml

from util import default_read, exists_file, mkdir

CONFIG_FILE = './config.yaml'


class SpectraConfig:
    GLOBAL_SEC = 'spectra'
    ENABLE_LOG = False
    CONSOLE_LOG = False
    LOG_PATH = './spectra_out/log'
    LOG_LEVEL = 'ERROR'
    PROJECT_PATH = './spectra_out'
    NUM_WORKERS = 4
    SHOW_PROGRESS = False
    RANK_TOL = 1e-9
    DENSE_SVD_MAX_DIM = 512
    POWER_ITERATION_TOL = 1e-12
    POWER_ITERATION_MAX_STEPS = 5000
    MAX_BIG_DIM = 4096
    VERIFY_TOL = 1e-9
    VERIFY_SAMPLES = 8
    LAB_ZGRID = 64
    LAB_XYGRID = 8
    LAB_FLOOR = 0.25
    LAB_FLOOR_CHANGE = 0.10

    def __init__(self, config_file):
        self.config_file = config_file
        self.log = logging.getLogger(__name__)
        self.cfg = None
        self.reload()

    def reload(self, config_file: str = None):
        try:
            if config_file is None:
                config_file = self.config_file
            if not exists_file(config_file):
                # class defaults apply
                self.cfg = None
                return
            with default_read(config_file) as f:
                cfg = yaml.safe_load(f)
            assert isinstance(cfg, dict) and self.GLOBAL_SEC in cfg, \
                f'Config file {config_file} has no "{self.GLOBAL_SEC}" section'
            self.cfg = cfg
            self.config_file = config_file
        except Exception as e:
            print(f'An error occurred while loading config file ({config_file}):{e}')
            logging.exception(e)
            self.cfg = None

    def __getitem__(self, key: str):
        return self.cfg[self.GLOBAL_SEC].get(key, None)

    def _lookup(self, default, *keys):
        if not self.cfg:
            return default
        node = self.cfg[self.GLOBAL_SEC]
        for k in keys:
            if not isinstance(node, dict) or k not in node:
                return default
            node = node[k]
        return default if node is None else node

    @property
    def enable_log(self):
        return self._lookup(self.ENABLE_LOG, 'log', 'enable')

    @property
    def console_log(self):
        return self._lookup(self.CONSOLE_LOG, 'log', 'console')

    @property
    def log_path(self):
        return self._lookup(self.LOG_PATH, 'log', 'path')

    @property
    def log_level(self):
        return self._lookup(self.LOG_LEVEL, 'log', 'level')

    @property
    def project_path(self):
        return self._lookup(self.PROJECT_PATH, 'project_path')

    @property
    def num_workers(self):
        return int(self._lookup(self.NUM_WORKERS, 'lab', 'num_workers'))

    @property
    def show_progress(self):
        return bool(self._lookup(self.SHOW_PROGRESS, 'lab', 'progress'))

    @property
    def rank_tol(self):
        return float(self._lookup(self.RANK_TOL, 'numeric', 'rank_tol'))

    @property
    def dense_svd_max_dim(self):
        return int(self._lookup(self.DENSE_SVD_MAX_DIM, 'numeric', 'dense_svd_max_dim'))

    @property
    def power_iteration_tol(self):
        return float(self._lookup(self.POWER_ITERATION_TOL, 'numeric', 'power_iteration_tol'))

    @property
    def power_iteration_max_steps(self):
        return int(self._lookup(self.POWER_ITERATION_MAX_STEPS, 'numeric', 'power_iteration_max_steps'))

    @property
    def max_big_dim(self):
        return int(self._lookup(self.MAX_BIG_DIM, 'numeric', 'max_big_dim'))

    @property
    def verify_tol(self):
        return float(self._lookup(self.VERIFY_TOL, 'verify', 'tol'))

    @property
    def verify_samples(self):
        return int(self._lookup(self.VERIFY_SAMPLES, 'verify', 'samples'))

    @property
    def lab_zgrid(self):
        return int(self._lookup(self.LAB_ZGRID, 'lab', 'zgrid'))

    @property
    def lab_xygrid(self):
        return int(self._lookup(self.LAB_XYGRID, 'lab', 'xygrid'))

    @property
    def lab_floor(self):
        return float(self._lookup(self.LAB_FLOOR, 'lab', 'floor'))

    @property
    def lab_floor_change(self):
        return float(self._lookup(self.LAB_FLOOR_CHANGE, 'lab', 'floor_change'))


default_config = SpectraConfig(CONFIG_FILE)
