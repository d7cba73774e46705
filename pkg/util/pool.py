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
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Sequence, TypeVar

import tqdm

from config import default_config

T = TypeVar('T')
R = TypeVar('R')


def parallel_map(fn: Callable[[T], R], items: Sequence[T], num_workers: int = None,
                 desc: str = None) -> List[R]:
    r"""
    Apply ``fn`` to every item on a thread pool.

    Results come back in the order of ``items`` no matter which worker
    finished first, so tables built from them are reproducible.

    :param fn: a pure function of one item
    :param items: work items
    :param num_workers: pool size, defaults to lab.num_workers in config
    :param desc: progress bar label
    :return: list of results aligned with items
    """
    if num_workers is None:
        num_workers = default_config.num_workers
    assert num_workers >= 1, f'num_workers should be greater than 0, got {num_workers}'
    items = list(items)
    if len(items) == 0:
        return []
    results = [None] * len(items)
    pbar = tqdm.tqdm(total=len(items), desc=desc, disable=not default_config.show_progress, leave=False)
    if num_workers == 1 or len(items) == 1:
        for i, item in enumerate(items):
            results[i] = fn(item)
            pbar.update(1)
        pbar.close()
        return results
    logging.debug(f'Dispatching {len(items)} task(s) to {num_workers} worker(s): {desc}')
    with ThreadPoolExecutor(max_workers=num_workers) as executor:
        futures = [executor.submit(fn, item) for item in items]
        for i, future in enumerate(futures):
            results[i] = future.result()
            pbar.update(1)
    pbar.close()
    return results
