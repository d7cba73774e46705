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
from typing import Dict, List, Tuple

import pandas as pd
import yaml

from command.base import BaseGridCmd, BaseOutputCmd
from lab import circle_grid, convergence_table, delta_twist_demo, dilate, eps_N, floor_convergence, \
    floor_is_stable, fourier_coeff_shift, load_lab_config, positive_decomposition, proper_free_action_report, \
    rc_dichotomy, reverse_cube_bound, translate, translation_on_Z_report, ShiftWindow
from util import key_value_table, write_csv, default_write
from util.errors import CheckFailed, UsageError

EXACT_TOL = 1e-10

# (table, header lines, passed)
Outcome = Tuple[pd.DataFrame, List[str], bool]


class ShiftLabCmd(BaseGridCmd):
    EXPERIMENTS = ['sum', 'fourier', 'dichotomy', 'cube', 'twist', 'positive', 'floor']

    def __init__(self):
        super().__init__('shiftlab', 'Run a truncated bilateral shift experiment and write its table as CSV.')
        self._parser.add_argument('experiment', choices=self.EXPERIMENTS, help='The experiment to run.')
        self._parser.add_argument('-c', '--config', required=True, type=str, metavar='json',
                                  help='Lab config (JSON) naming the circle functions.')
        self.cfg = None
        self.window = None
        self.phi = None
        self.psi = None

    # command line first, then the lab config, then config.yaml
    @property
    def zgrid(self) -> int:
        return self.args.grid or self.cfg.zgrid or self.config.lab_zgrid

    @property
    def xygrid(self) -> int:
        return self.args.xygrid or self.cfg.xygrid or self.config.lab_xygrid

    def invoke(self) -> int:
        self.cfg = load_lab_config(self.args.config)
        self.window = ShiftWindow(self.args.window or self.cfg.window)
        self.phi = self.cfg.phi.build()
        self.psi = self.cfg.psi.build() if self.cfg.psi is not None else self.phi
        exp = self.args.experiment
        logging.info(f'shiftlab {exp}: N={self.window.N}, phi={self.phi!r}, psi={self.psi!r}')

        frame, lines, passed = getattr(self, f'_{exp}')()
        header = [f'experiment: {exp}', f'config: {self.args.config}', f'window: N={self.window.N}',
                  f'phi: {self.phi!r}', f'psi: {self.psi!r}'] + lines
        path = self.output_path(f'shiftlab_{exp}.csv')
        write_csv(path, frame, header)
        print(f'{exp} table is saved to {path}', file=sys.stderr)
        if not passed:
            raise CheckFailed(f'Experiment {exp} did not pass, see {path}')
        return 0

    def _windows(self) -> List[int]:
        N = self.window.N
        return self.cfg.windows or [N, 2 * N, 4 * N]

    def _sum(self) -> Outcome:
        frame = convergence_table(self.phi, self._windows())
        lines = ['quantity: |sum_{|k|<=K} alpha_k(P) - Laurent(|phi|^2)| on |n| <= K - B with K = N/2',
                 'statement: the shifted projections sum strictly to multiplication by |phi|^2',
                 f'eps_N={eps_N(self.phi):.3e}']
        return frame, lines, bool((frame['interior_residual'] <= EXACT_TOL).all())

    def _fourier(self) -> Outcome:
        rows = []
        for z in circle_grid(self.zgrid):
            rep = fourier_coeff_shift(self.phi, z, self.window)
            rows.append({'z_re': z.real, 'z_im': z.imag, 'radius': rep.radius, 'interior_residual': rep.residual})
        frame = pd.DataFrame(rows, columns=['z_re', 'z_im', 'radius', 'interior_residual'])
        lines = ['quantity: |sum_{|k|<=N-B} z^k alpha_k(P) - M_phi W_z M_phi*| on |n| <= N - 2B',
                 'statement: the Fourier coefficient of P at z is M_phi W_z M_phi*',
                 f'zgrid={self.zgrid}, eps_N={eps_N(self.phi):.3e}']
        return frame, lines, bool((frame['interior_residual'] <= EXACT_TOL).all())

    def _dichotomy(self) -> Outcome:
        table = rc_dichotomy(self.phi, self.psi, self.window, self.zgrid, self.xygrid)
        return table.frame, table.header_lines() + [f'floor={table.floor():.6e}'], table.all_passed

    def _cube(self) -> Outcome:
        rows = []
        for z in circle_grid(self.zgrid):
            rep = reverse_cube_bound(self.phi, self.psi, self.window, z)
            rows.append({'z_re': z.real, 'z_im': z.imag, 'lhs': rep.lhs, 'rhs': rep.rhs, 'slack': rep.slack,
                         'eps_N': rep.eps, 'passed': rep.holds})
        frame = pd.DataFrame(rows, columns=['z_re', 'z_im', 'lhs', 'rhs', 'slack', 'eps_N', 'passed'])
        lines = ['quantity: omega(z)^3 against |phi|_inf |psi|_inf times four Fourier product differences',
                 'statement: the reverse cube bound holds at every z',
                 f'zgrid={self.zgrid}']
        return frame, lines, bool(frame['passed'].all())

    def _twist(self) -> Outcome:
        if self.cfg.delta is None:
            raise UsageError('The twist experiment needs "delta" in the lab config')
        delta = self.cfg.delta.build()
        rep = delta_twist_demo(delta, self.phi, self.psi, self.window, self.zgrid, self.xygrid,
                               strict=self.cfg.strict)
        frames = []
        for name, table in rep.tables.items():
            f = table.frame.copy()
            f.insert(0, 'pair', name)
            frames.append(f)
        lines = ['quantity: dichotomy tables of (P, Q), (Delta P, Delta Q) and (P, Delta Q), Delta = Ad(M_delta)',
                 'statement: (Delta P, Delta Q) is relatively continuous with (P, Q), (P, Delta Q) keeps a floor',
                 f'delta: {delta!r}',
                 'floors: ' + ', '.join(f'{k}={v:.6e}' for k, v in rep.floors.items()),
                 f'floor threshold={self.config.lab_floor:g}',
                 f'unimodular_defect={rep.unimodular_defect:.3e}',
                 f'commutation_residual={rep.commutation_residual:.3e}',
                 f'zgrid={self.zgrid}, xygrid={self.xygrid}, eps_N={eps_N(delta, self.phi, self.psi):.3e}']
        passed = all(t.all_passed for t in rep.tables.values()) and rep.commutation_residual <= EXACT_TOL
        return pd.concat(frames, ignore_index=True), lines, passed

    def _positive(self) -> Outcome:
        family = [s.build() for s in self.cfg.family] or [self.phi]
        weights = self.cfg.weights or [1.0] * len(family)
        if len(weights) != len(family):
            raise UsageError(f'{len(weights)} weights for a family of {len(family)} functions')
        rep = positive_decomposition(weights, family, self.window)
        frame = pd.DataFrame([{'sampled_sup': rep.sampled_sup, 'strict_norm': rep.strict_norm,
                               'allowance': rep.allowance, 'agree': rep.agree}])
        lines = ['quantity: sup of sum lambda_n |phi_n|^2 against the windowed strict sum norm',
                 'statement: the strict sum norm equals the sup of sum lambda_n |phi_n|^2',
                 'weights: ' + ', '.join(f'{x:g}' for x in weights),
                 'family: ' + ', '.join(repr(f) for f in family)]
        return frame, lines, rep.agree

    def _floor(self) -> Outcome:
        floor_min, max_change = self.config.lab_floor, self.config.lab_floor_change
        frame = floor_convergence(self.psi, self._windows(), zgrid=self.zgrid, xygrid=self.xygrid,
                                  floor_min=floor_min)
        lines = ['quantity: min d_tilde at the grid neighbours of z = 1 for (step of bandwidth N/8, psi)',
                 'statement: a discontinuous conj(phi) psi keeps d_tilde away from zero near z = 1 at every window',
                 f'zgrid={self.zgrid}, xygrid={self.xygrid}',
                 f'floor threshold={floor_min:g}, max relative change={max_change:g}']
        return frame, lines, floor_is_stable(frame, max_change)


class ProperActionCmd(BaseOutputCmd):
    def __init__(self):
        super().__init__('proper', 'Check Z_n acting freely on Z_n x {0..k-1}: fixed algebra, inner products '
                                   'and the left ideal.')
        self._parser.add_argument('-n', type=int, required=True, help='Order of the cyclic group.')
        self._parser.add_argument('-k', type=int, required=True, help='Number of orbits.')
        self._parser.add_argument('--tol', type=float, default=None,
                                  help='Residual tolerance. Defaults to verify.tol in config.yaml.')

    def invoke(self) -> int:
        n, k = self.args.n, self.args.k
        if n < 1 or k < 1:
            raise UsageError(f'-n and -k should be positive, got n={n}, k={k}')
        tol = self.config.verify_tol if self.args.tol is None else self.args.tol
        rep = proper_free_action_report(n, k)
        passed = rep.holds(tol)
        data = dict(rep.to_dict(), passed=passed)
        text = yaml.safe_dump(data, sort_keys=False)
        if self.args.out:
            path = self.output_path(f'proper_{n}_{k}.yaml')
            with default_write(path) as f:
                f.write(text)
            print(key_value_table(data), file=sys.stderr)
            print(f'Report is saved to {path}', file=sys.stderr)
        else:
            sys.stdout.write(text)
        if not passed:
            raise CheckFailed(f'Free action report for n={n}, k={k} failed')
        return 0


def bump(width: int) -> Dict[int, complex]:
    r"""Tent of height 1 on [-width, width]."""
    return {m: 1.0 - abs(m) / (width + 1) for m in range(-width, width + 1)}


class TranslationCmd(BaseGridCmd):
    def __init__(self):
        super().__init__('translation', 'Z acting on Z by translation: relative continuity of finitely '
                                        'supported functions.')
        self._parser.add_argument('--bump', type=int, default=2, help='Half width of the tent function.')

    def invoke(self) -> int:
        N = self.args.window or 32
        if self.args.bump < 0:
            raise UsageError(f'--bump should be non-negative, got {self.args.bump}')
        f = bump(self.args.bump)
        supports = [f, translate(f, 1), dilate(f, 2)]
        pairs = translation_on_Z_report(N, supports, self.zgrid, self.xygrid)

        lines = [f'quantity: d_tilde(z) for Z acting on Z by translation, window N={N}',
                 'statement: d_tilde(z) <= C |1 - z| for finitely supported functions',
                 'functions: 0 = tent, 1 = tent translated by 1, 2 = tent dilated by 2',
                 f'zgrid={self.zgrid}, xygrid={self.xygrid}']
        frames = []
        for p in pairs:
            fr = p.table.copy()
            fr.insert(0, 'right', p.right)
            fr.insert(0, 'left', p.left)
            frames.append(fr)
            lines.append(f'pair ({p.left},{p.right}): C={p.lipschitz:.6e}, '
                         f'closed_form_residual={p.closed_form_residual:.3e}')
        path = self.output_path('translation.csv')
        write_csv(path, pd.concat(frames, ignore_index=True), lines)
        print(f'translation table is saved to {path}', file=sys.stderr)
        if not all(p.passed and p.closed_form_residual <= 1e-9 for p in pairs):
            raise CheckFailed('Translation moduli exceeded their Lipschitz bound')
        return 0
