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
from typing import Any, List, Sequence

import numpy as np
from prettytable import PrettyTable


def format_cell(v: Any, float_fmt: str = '.3e') -> str:
    if isinstance(v, (bool, np.bool_)):
        return 'yes' if v else 'NO'
    if isinstance(v, (float, np.floating)):
        return format(float(v), float_fmt)
    if isinstance(v, (complex, np.complexfloating)):
        return f'{format(v.real, float_fmt)}{format(v.imag, "+" + float_fmt)}j'
    return str(v)


def quick_prettytable(rows: Sequence[Sequence[Any]], transposed: bool = False, float_fmt: str = '.3e'):
    r"""
    PrettyTable from a header row followed by data rows. Numbers are
    printed with ``float_fmt`` and booleans as yes/NO.

    :param rows: header row, then one row per record
    :param transposed: when true each input row becomes a column
    :param float_fmt: format spec of float and complex cells
    """
    if len(rows) == 0 or len(rows[0]) == 0:
        return PrettyTable()
    if transposed:
        rows = [list(col) for col in zip(*rows)]
    table = PrettyTable([str(h) for h in rows[0]])
    for row in rows[1:]:
        table.add_row([format_cell(v, float_fmt) for v in row])
    for name in table.field_names[1:]:
        table.align[name] = 'r'
    return table


def key_value_table(data: dict, float_fmt: str = '.6e') -> PrettyTable:
    return quick_prettytable([['quantity', 'value']] + [[k, v] for k, v in data.items()], float_fmt=float_fmt)
