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
import os.path
import sys
import time

from config import default_config, SpectraConfig
from util import mkdir

FORMAT = '[%(asctime)s][%(filename)s:%(lineno)d, %(thread)d][%(levelname)s]: %(message)s'
DATE_FORMAT = '%Y-%m-%d %H:%M:%S'


def create_log(cfg: SpectraConfig = default_config, fmt: str = FORMAT, datefmt: str = DATE_FORMAT) -> logging.Logger:
    r"""
    Configure the root logger from the ``log`` section of config.yaml.

    The file handler is added only when ``log.enable`` is set; the console
    handler writes to stderr whenever ``log.console`` is set, so stdout
    carries nothing but reports. numpy and other ``warnings`` go through
    the same handlers.
    """
    logger = logging.getLogger()
    logger.setLevel(cfg.log_level)
    formatter = logging.Formatter(fmt, datefmt)
    handlers = []
    if cfg.enable_log:
        mkdir(cfg.log_path)
        log_file = os.path.join(cfg.log_path, time.strftime('SPECTRA_%Y-%m-%d-%H-%M-%S.log'))
        print(f'Log file is saved to {log_file}', file=sys.stderr)
        handlers.append(logging.FileHandler(log_file, encoding='utf-8', delay=True))
    if cfg.console_log:
        handlers.append(logging.StreamHandler(stream=sys.stderr))
    for h in handlers:
        h.setLevel(cfg.log_level)
        h.setFormatter(formatter)
        logger.addHandler(h)
    logging.captureWarnings(True)
    return logger


create_log()
