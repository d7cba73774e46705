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
from dataclasses import dataclass, field
from typing import Dict, List, Sequence

import numpy as np
import pandas as pd

from config import default_config
from numeric import op_norm
from util.errors import PreconditionError, UsageError, WindowError
from util.pool import parallel_map
from .circle import CircleFunction, ShiftWindow, check_unimodular, circle_grid, eps_N, laurent

MIN_GRID = 8


def rank_one_projection(phi: CircleFunction, w: ShiftWindow) -> np.ndarray:
    r"""
    P[i, j] = c_i conj(c_j). alpha_k(P) = U^k P U^-k with U e_n = e_{n+1}, and
    sum_k z^k alpha_k(P) = M_phi W_z M_phi* with W_z e_n = z^n e_n.
    """
    phi.check_normalized()
    v = w.vector(phi)
    return np.outer(v, np.conj(v))


def alpha_window(T: np.ndarray, k: int) -> np.ndarray:
    r"""U^k T U^-k on the window; entries shifted past the edge are dropped."""
    D = T.shape[0]
    out = np.zeros_like(T)
    if abs(k) >= D:
        return out
    if k >= 0:
        out[k:, k:] = T[:D - k, :D - k]
    else:
        out[:D + k, :D + k] = T[-k:, -k:]
    return out


def support_radius(T: np.ndarray, w: ShiftWindow) -> int:
    r"""Smallest B with T supported on indices |n| <= B."""
    mask = np.any(T != 0, axis=1) | np.any(T != 0, axis=0)
    if not np.any(mask):
        return 0
    return int(np.max(np.abs(w.indices[mask])))


def windowed_fourier(T: np.ndarray, z: complex, w: ShiftWindow, K: int) -> np.ndarray:
    r"""sum_{|k| <= K} z^k alpha_k(T) on the window"""
    check_unimodular(z)
    out = np.zeros_like(T, dtype=complex)
    for k in range(-K, K + 1):
        out += z ** k * alpha_window(T, k)
    return out


def shift_sum(P: np.ndarray, w: ShiftWindow, K: int) -> np.ndarray:
    band = support_radius(P, w)
    if K > w.N - band:
        raise WindowError(f'K = {K} exceeds N - B = {w.N - band}')
    return windowed_fourier(P, 1.0, w, K)


def interior_residual(M: np.ndarray, L: np.ndarray, w: ShiftWindow, radius: int) -> float:
    s = w.interior(radius)
    return op_norm(M[s, s] - L[s, s])


def shift_sum_residual(phi: CircleFunction, w: ShiftWindow, K: int) -> float:
    r"""
    Distance between sum_{|k| <= K} alpha_k(P) and the Laurent matrix of
    |phi|^2 on indices |n| <= K - B, where the truncated sum is complete.
    """
    P = rank_one_projection(phi, w)
    S = shift_sum(P, w, K)
    radius = K - phi.bandwidth
    if radius < 0:
        raise WindowError(f'K = {K} is smaller than the bandwidth {phi.bandwidth}')
    density = phi.conj().multiply(phi)
    return interior_residual(S, laurent(density, w.indices, w.indices), w, radius)


def convergence_table(phi: CircleFunction, windows: Sequence[int]) -> pd.DataFrame:
    rows = []
    for N in windows:
        w = ShiftWindow(N)
        K = N // 2
        rows.append({'N': N, 'K': K, 'interior_residual': shift_sum_residual(phi, w, K)})
    return pd.DataFrame(rows, columns=['N', 'K', 'interior_residual'])


def multiplier(phi: CircleFunction, w: ShiftWindow) -> np.ndarray:
    r"""M_phi with window rows and columns n in [-N-B, N+B]"""
    B = phi.bandwidth
    return laurent(phi, w.indices, np.arange(-w.N - B, w.N + B + 1))


@dataclass
class FourierShiftReport:
    windowed: np.ndarray
    closed_form: np.ndarray
    radius: int
    residual: float


def fourier_coeff_shift(phi: CircleFunction, z: complex, w: ShiftWindow) -> FourierShiftReport:
    r"""
    sum_{|k| <= N-B} z^k alpha_k(P) against M_phi W_z M_phi*, compared on
    indices |n| <= N - 2B.
    """
    check_unimodular(z)
    P = rank_one_projection(phi, w)
    B = phi.bandwidth
    radius = w.N - 2 * B
    if radius < 0:
        raise WindowError(f'{w} is too small for bandwidth {B}')
    windowed = windowed_fourier(P, z, w, w.N - B)
    M = multiplier(phi, w)
    ext = np.arange(-w.N - B, w.N + B + 1)
    closed = (M * z ** ext.astype(float)[None, :]) @ np.conj(M.T)
    return FourierShiftReport(windowed, closed, radius, interior_residual(windowed, closed, w, radius))


class PairCompression:
    r"""
    Interior compression of F(P, x) F(Q, y) = M_L W_x M_h W_y M_R* for
    outer symbols L, R and inner symbol h (h = conj(L) R for rank one
    projections). Rows and columns run over |n| <= N - 2 max(B_L, B_R);
    every entry there equals the untruncated one.
    """

    def __init__(self, left: CircleFunction, inner: CircleFunction, right: CircleFunction, w: ShiftWindow):
        band = max(left.bandwidth, right.bandwidth)
        self.radius = w.N - 2 * band
        if self.radius < 0:
            raise WindowError(f'{w} is too small for outer bandwidth {band}')
        rows = np.arange(-self.radius, self.radius + 1)
        self.middle = np.arange(-self.radius - band, self.radius + band + 1).astype(float)
        self.left, self.inner, self.right = left, inner, right
        self.ML = laurent(left, rows, self.middle.astype(int))
        self.MRh = np.conj(laurent(right, rows, self.middle.astype(int)).T)
        self.C = laurent(inner, self.middle.astype(int), self.middle.astype(int))

    def product(self, x: complex, y: complex) -> np.ndarray:
        return (self.ML * x ** self.middle[None, :]) @ self.C @ (y ** self.middle[:, None] * self.MRh)

    def d_tilde(self, z: complex, xs: np.ndarray, ys: np.ndarray) -> float:
        r"""max over x, y of |M_L W_x (W_z C - C W_z) W_y M_R*|"""
        wz = z ** self.middle
        A = (wz[:, None] - wz[None, :]) * self.C
        worst = 0.0
        for x in xs:
            B = (self.ML * x ** self.middle[None, :]) @ A
            for y in ys:
                worst = max(worst, op_norm((B * y ** self.middle[None, :]) @ self.MRh))
        return worst

    def omega(self, z: complex):
        r"""(sampled, certified) sup of |h(z w) - h(w)|"""
        g = self.inner.rotate(z) - self.inner
        return g.sup_norm(), g.sup_bound()

    def outer_bound(self) -> float:
        return self.left.sup_bound() * self.right.sup_bound()


class DichotomyTable:
    COLUMNS = ['z_re', 'z_im', 'd_tilde', 'omega', 'bound_rhs', 'eps_N', 'passed']

    def __init__(self, frame: pd.DataFrame, eps: float, params: Dict):
        self.frame = frame
        self.eps = eps
        self.params = params

    def __repr__(self):
        return f'DichotomyTable({self.params}, floor={self.floor():.4g}, passed={self.all_passed})'

    @property
    def all_passed(self) -> bool:
        return bool(self.frame['passed'].all())

    def floor(self) -> float:
        r"""Smallest d_tilde at the two grid neighbours of z = 1."""
        d = self.frame['d_tilde'].to_numpy()
        return float(min(d[1], d[-1]))

    def header_lines(self) -> List[str]:
        lines = ['quantity: rc dichotomy modulus of rank one projections on the truncated shift',
                 'statement: d_tilde(z) <= bound_rhs at every z, and it vanishes near z = 1 when h is continuous',
                 'd_tilde(z) = max_{x,y} |F(P,xz)F(Q,y) - F(P,x)F(Q,zy)| on the interior block',
                 'bound_rhs = |phi|_inf |psi|_inf sup|h(zw) - h(w)| + eps_N, h = conj(phi) psi']
        lines.append(', '.join(f'{k}={v}' for k, v in self.params.items()) + f', eps_N={self.eps:.3e}')
        return lines


def _grid(m: int, name: str) -> np.ndarray:
    if m < MIN_GRID:
        raise UsageError(f'{name} grid needs at least {MIN_GRID} points, got {m}')
    return circle_grid(m)


def _pair_table(comp: PairCompression, zs: np.ndarray, xs: np.ndarray, eps: float, params: Dict,
                num_workers: int = None) -> DichotomyTable:
    outer = comp.outer_bound()

    def row(z):
        d = comp.d_tilde(z, xs, xs)
        sampled, certified = comp.omega(z)
        rhs = outer * certified + eps
        return {'z_re': z.real, 'z_im': z.imag, 'd_tilde': d, 'omega': sampled, 'bound_rhs': rhs,
                'eps_N': eps, 'passed': bool(d <= rhs)}

    rows = parallel_map(row, list(zs), num_workers, desc='dichotomy')
    return DichotomyTable(pd.DataFrame(rows, columns=DichotomyTable.COLUMNS), eps, params)


def _check_pair(phi: CircleFunction, psi: CircleFunction, w: ShiftWindow):
    phi.check_normalized()
    psi.check_normalized()
    w.check_band(phi.bandwidth, 4, 'phi')
    w.check_band(psi.bandwidth, 4, 'psi')


def rc_dichotomy(phi: CircleFunction, psi: CircleFunction, w: ShiftWindow, zgrid: int = None, xygrid: int = None,
                 num_workers: int = None) -> DichotomyTable:
    zgrid = default_config.lab_zgrid if zgrid is None else zgrid
    xygrid = default_config.lab_xygrid if xygrid is None else xygrid
    zs = _grid(zgrid, 'z')
    xs = _grid(xygrid, 'x/y')
    _check_pair(phi, psi, w)
    comp = PairCompression(phi, phi.conj().multiply(psi), psi, w)
    params = {'phi': repr(phi), 'psi': repr(psi), 'N': w.N, 'zgrid': zgrid, 'xygrid': xygrid}
    logging.info(f'rc dichotomy {params}')
    return _pair_table(comp, zs, xs, eps_N(phi, psi), params, num_workers)


def dichotomy_floor(phi: CircleFunction, psi: CircleFunction, w: ShiftWindow, zgrid: int = None,
                    xygrid: int = None) -> float:
    r"""min of d_tilde at exp(+-2 pi i / zgrid) without the rest of the table."""
    zgrid = default_config.lab_zgrid if zgrid is None else zgrid
    xygrid = default_config.lab_xygrid if xygrid is None else xygrid
    _grid(zgrid, 'z')
    xs = _grid(xygrid, 'x/y')
    _check_pair(phi, psi, w)
    comp = PairCompression(phi, phi.conj().multiply(psi), psi, w)
    z = np.exp(2j * np.pi / zgrid)
    return min(comp.d_tilde(z, xs, xs), comp.d_tilde(np.conj(z), xs, xs))


def floor_convergence(psi: CircleFunction, windows: Sequence[int] = (128, 256, 512), band_ratio: int = 8,
                      zgrid: int = None, xygrid: int = None, floor_min: float = None) -> pd.DataFrame:
    r"""Floor of (step of bandwidth N/band_ratio, psi) as the window doubles."""
    floor_min = default_config.lab_floor if floor_min is None else floor_min
    rows = []
    prev = None
    for N in windows:
        B = max(1, N // band_ratio)
        floor = dichotomy_floor(CircleFunction.step(B), psi, ShiftWindow(N), zgrid, xygrid)
        change = float('nan') if prev is None else abs(floor - prev) / max(prev, 1e-300)
        rows.append({'N': N, 'bandwidth': B, 'floor': floor, 'relative_change': change,
                     'above_floor': floor >= floor_min})
        prev = floor
    return pd.DataFrame(rows, columns=['N', 'bandwidth', 'floor', 'relative_change', 'above_floor'])


def floor_is_stable(frame: pd.DataFrame, max_change: float = None) -> bool:
    r"""Every floor clears its threshold and the last two windows differ by at most max_change."""
    max_change = default_config.lab_floor_change if max_change is None else max_change
    if len(frame) < 2:
        raise UsageError(f'A floor study needs at least two windows, got {len(frame)}')
    last = float(frame['relative_change'].iloc[-1])
    return bool(frame['above_floor'].all()) and last <= max_change


@dataclass
class CubeReport:
    z: complex
    lhs: float
    rhs: float
    terms: List[float]
    eps: float

    @property
    def slack(self) -> float:
        return self.rhs - self.lhs

    @property
    def holds(self) -> bool:
        return self.slack >= -self.eps


def reverse_cube_bound(phi: CircleFunction, psi: CircleFunction, w: ShiftWindow, z: complex) -> CubeReport:
    r"""
    omega(z)^3 <= |phi|_inf |psi|_inf (t1 + t2 + t3 + t4) with, writing
    E(.) = F(., e) and z' = conj(z):
      t1 = |E(Q)E(P) - F(Q,z')F(P,z)|     t2 = |E(Q)F(P,z) - F(Q,z)E(P)|
      t3 = |F(Q,z')E(P) - E(Q)F(P,z')|    t4 = |E(Q)E(P) - F(Q,z)F(P,z')|
    """
    check_unimodular(z)
    _check_pair(phi, psi, w)
    comp = PairCompression(psi, psi.conj().multiply(phi), phi, w)
    zc = np.conj(z)
    ee = comp.product(1.0, 1.0)
    terms = [op_norm(ee - comp.product(zc, z)),
             op_norm(comp.product(1.0, z) - comp.product(z, 1.0)),
             op_norm(comp.product(zc, 1.0) - comp.product(1.0, zc)),
             op_norm(ee - comp.product(z, zc))]
    h = phi.conj().multiply(psi)
    omega = (h.rotate(z) - h).sup_norm()
    rhs = phi.sup_bound() * psi.sup_bound() * sum(terms)
    return CubeReport(z, omega ** 3, rhs, terms, eps_N(phi, psi))


@dataclass
class PositiveReport:
    sampled_sup: float
    strict_norm: float
    allowance: float

    @property
    def agree(self) -> bool:
        return abs(self.strict_norm - self.sampled_sup) <= self.allowance


def positive_decomposition(lams: Sequence[float], phis: Sequence[CircleFunction], w: ShiftWindow) -> PositiveReport:
    r"""
    T = sum lambda_n P_n. The windowed strict sum of alpha_k(T) has interior
    block equal to a finite section of the Laurent matrix of
    g = sum lambda_n |phi_n|^2, whose norm lies within sum |j| |g_j| / size
    of sup g.
    """
    if len(lams) != len(phis) or len(phis) == 0:
        raise PreconditionError('Need as many weights as functions, and at least one')
    for lam in lams:
        if lam <= 0:
            raise PreconditionError(f'Weights should be positive, got {lam}')
    for i, phi in enumerate(phis):
        phi.check_normalized()
        for j in range(i):
            overlap = abs(phis[j].inner(phi))
            if overlap > 1e-10:
                raise PreconditionError(f'Functions {j} and {i} are not orthogonal', overlap)
    B = max(phi.bandwidth for phi in phis)
    K = w.N - B
    radius = K - B
    if radius < 0:
        raise WindowError(f'{w} is too small for bandwidth {B}')
    T = sum(lam * rank_one_projection(phi, w) for lam, phi in zip(lams, phis))
    density = phis[0].conj().multiply(phis[0]).scale(lams[0])
    for lam, phi in zip(lams[1:], phis[1:]):
        density = density + phi.conj().multiply(phi).scale(lam)
    s = w.interior(radius)
    strict_norm = op_norm(windowed_fourier(T, 1.0, w, K)[s, s])
    m = density.sample_count()
    sampled = float(np.max(density.samples(m).real))
    size = 2 * radius + 1
    allowance = density.lipschitz() / size + np.pi / m * density.lipschitz() + eps_N(*phis)
    return PositiveReport(sampled, strict_norm, allowance)


@dataclass
class TwistReport:
    tables: Dict[str, DichotomyTable]
    unimodular_defect: float
    commutation_residual: float
    floors: Dict[str, float] = field(default_factory=dict)


def twist_commutation_residual(delta: CircleFunction, phi: CircleFunction, w: ShiftWindow, n: int = 1) -> float:
    r"""|Delta(alpha_n(P)) - alpha_n(Delta(P))| with Delta = Ad(M_delta) on the window"""
    if phi.bandwidth + delta.bandwidth + abs(n) > w.N:
        raise WindowError(f'{w} is too small for the twisted projection')
    M = laurent(delta, w.indices, w.indices)
    P = rank_one_projection(phi, w)
    lhs = M @ alpha_window(P, n) @ np.conj(M.T)
    rhs = alpha_window(M @ P @ np.conj(M.T), n)
    return op_norm(lhs - rhs)


def delta_twist_demo(delta: CircleFunction, phi: CircleFunction, psi: CircleFunction, w: ShiftWindow,
                     zgrid: int = None, xygrid: int = None, strict: bool = False,
                     num_workers: int = None) -> TwistReport:
    r"""
    Dichotomy tables for (P, Q), (Delta P, Delta Q) and (P, Delta Q) with
    Delta = Ad(M_delta). Delta P is the projection onto delta phi,
    renormalized after truncation, and the twisted inner symbol is taken from
    the renormalized pair itself. A delta that is not unimodular on the
    samples raises in strict mode and is logged with its defect otherwise.
    """
    zgrid = default_config.lab_zgrid if zgrid is None else zgrid
    xygrid = default_config.lab_xygrid if xygrid is None else xygrid
    zs = _grid(zgrid, 'z')
    xs = _grid(xygrid, 'x/y')
    _check_pair(phi, psi, w)
    defect = float(np.max(np.abs(np.abs(delta.samples()) - 1.0)))
    if strict and defect > 1e-10:
        raise PreconditionError(f'{delta} is not unimodular on the samples', defect)
    if defect > 1e-10:
        logging.warning(f'{delta} is not unimodular on the samples (max ||delta| - 1| = {defect:.3e}), '
                        f'the twisted tables use the truncated symbol as is')
    dphi, dpsi = delta.multiply(phi), delta.multiply(psi)
    dphi, dpsi = dphi.normalized(), dpsi.normalized()
    w.check_band(dphi.bandwidth, 4, 'delta phi')
    w.check_band(dpsi.bandwidth, 4, 'delta psi')
    eps = eps_N(delta, phi, psi)
    params = {'delta': repr(delta), 'phi': repr(phi), 'psi': repr(psi), 'N': w.N, 'zgrid': zgrid,
              'xygrid': xygrid}
    inner = phi.conj().multiply(psi)
    pairs = {
        'P,Q': PairCompression(phi, inner, psi, w),
        'DP,DQ': PairCompression(dphi, dphi.conj().multiply(dpsi), dpsi, w),
        'P,DQ': PairCompression(phi, phi.conj().multiply(dpsi), dpsi, w),
    }
    tables = {}
    for name, comp in pairs.items():
        tables[name] = _pair_table(comp, zs, xs, eps, dict(params, pair=name), num_workers)
    report = TwistReport(tables, defect, twist_commutation_residual(delta, phi, w))
    report.floors = {name: t.floor() for name, t in tables.items()}
    logging.info(f'twist floors: {report.floors}')
    return report
