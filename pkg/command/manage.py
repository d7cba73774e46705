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
import sys
from io import StringIO
from typing import List

from prettytable import PrettyTable, prettytable
from pydantic import ValidationError

from command import *
from util import assert_not_blank
from util.errors import CheckFailed, SpectraError

_SHORT_NAME_MAP = {}
_REGISTERED_CMDS = {}

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


def exists_cmd(name: str):
    return name in _REGISTERED_CMDS


def register(cmd: BaseCmd, short_name: str = None):
    name = assert_not_blank(cmd.name, 'name')
    if short_name:
        short_name = assert_not_blank(short_name, 'short_name')
        assert not exists_cmd(short_name), f'Existing command {short_name} have been already registered'
        _REGISTERED_CMDS[short_name] = cmd
    assert not exists_cmd(name), f'Existing command {name} have been already registered'
    _REGISTERED_CMDS[name] = cmd
    _SHORT_NAME_MAP[name] = short_name


def all_cmds():
    return list(_SHORT_NAME_MAP.keys())


def execute_cmd(name: str, argv: List[str]) -> int:
    r"""
    Run a registered command and map its outcome to an exit code:
    0 on success, 1 when a check fails, 2 on a usage, config or input
    error. Errors of spectra carry their own code.
    """
    name = assert_not_blank(name, 'name')
    if not exists_cmd(name):
        print(f'Unknown command "{name}", try "help"', file=sys.stderr)
        return EXIT_USAGE
    cmd = _REGISTERED_CMDS[name]
    try:
        cmd.parse_args(argv)
    except SystemExit as e:
        # argparse exits with 0 after --help and 2 after a parse error
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE
    try:
        return cmd.invoke() or EXIT_OK
    except CheckFailed as e:
        logging.error(str(e))
        return EXIT_CHECK_FAILED
    except SpectraError as e:
        logging.error(f'{type(e).__name__}: {e}')
        return e.exit_code
    except ValidationError as e:
        logging.error(f'Invalid config: {e}')
        return EXIT_USAGE
    except Exception:
        logging.exception(f'Command {name} crashed')
        return EXIT_USAGE


class HelpCmd(BaseCmd):
    def __init__(self):
        super().__init__('help', 'Print name and description of each command.')
        self._parser.add_argument('-u', '--usage', action='store_true',
                                  help='Show usage for each command')

    def invoke(self) -> int:
        table = PrettyTable(['Command name', 'Description'])
        table.hrules = prettytable.ALL
        for name in all_cmds():
            cmd = _REGISTERED_CMDS[name]
            description = cmd.description
            if self.args.usage:
                usage = StringIO()
                cmd.__getattribute__('_parser').print_usage(file=usage)
                description += '\n' + usage.getvalue().strip()
            short_name = _SHORT_NAME_MAP.get(name, None)
            append = f' | {short_name}' if short_name else ''
            table.add_row([name + append, description])
        print(table)
        return EXIT_OK


def main(argv: List[str]) -> int:
    if not argv:
        execute_cmd('help', [])
        return EXIT_USAGE
    return execute_cmd(argv[0], argv[1:])


# Finite systems
register(VerifyCmd(), short_name='v')
register(RcModulusCmd(), short_name='rc')

# Labs
register(ShiftLabCmd(), short_name='sl')
register(ProperActionCmd(), short_name='pa')
register(TranslationCmd(), short_name='tz')

# For users
register(HelpCmd(), short_name='h')
