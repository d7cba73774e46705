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
import numpy as np

from dynamics import DynSystem, Symbol
from util.errors import StructuralError
from .bigop import BigOp


def _check_symbol(sys: DynSystem, f: Symbol):
    if f.group != sys.group or f.dim != sys.dim:
        raise StructuralError(f'Symbol over {f.group} of size {f.dim} on {sys}')


def _ad_each(sys: DynSystem, idx, mats) -> np.ndarray:
    r"""alpha_{element(idx[k])}(mats[k]) for every k"""
    u = sys.unitaries()[idx]
    return u @ mats @ np.conj(np.transpose(u, (0, 2, 1)))


def pi(sys: DynSystem, a) -> BigOp:
    r"""(pi(a) xi)(t) = alpha_{t^-1}(a) xi(t)"""
    return BigOp.block_diagonal(sys.group, sys.alpha_inv_all(a))


def lambda_op(sys: DynSystem, t) -> BigOp:
    r"""(Lambda_t xi)(r) = xi(t^-1 r): block (r, t^-1 r) is the identity."""
    g = sys.group
    ti = g.neg_index(g.index_of(t))
    op = BigOp.zeros(g, sys.dim)
    table = g.add_table()
    for r in range(g.order):
        op.blocks[r, table[ti, r]] = np.eye(sys.dim)
    return op


def rho(sys: DynSystem, f: Symbol) -> BigOp:
    r"""Regular representation: block (t, s) = alpha_{t^-1}(f(t s^-1))."""
    _check_symbol(sys, f)
    g = sys.group
    table = g.add_table()
    negs = g.neg_indices()
    blocks = np.empty((g.order, g.order, sys.dim, sys.dim), dtype=complex)
    for t in range(g.order):
        # t s^-1 for every s
        diff = table[t, negs]
        blocks[t] = _ad_each(sys, np.full(g.order, negs[t]), f.values[diff])
    return BigOp(g, blocks)


def big_V(sys: DynSystem, x) -> BigOp:
    r"""(V_x xi)(t) = conj(<x, t>) xi(t)"""
    g = sys.group
    chi = np.conj(g.character_table()[g.index_of(x)])
    return BigOp.block_diagonal(g, chi[:, None, None] * np.eye(sys.dim)[None, :, :])


def dual_action(sys: DynSystem, f: Symbol, x) -> Symbol:
    r"""(dual_x f)(r) = conj(<x, r>) f(r)"""
    _check_symbol(sys, f)
    chi = np.conj(sys.group.character_table()[sys.group.index_of(x)])
    return Symbol(sys.group, chi[:, None, None] * f.values)


def convolve(sys: DynSystem, f: Symbol, g: Symbol) -> Symbol:
    r"""(f * g)(t) = sum_s f(s) alpha_s(g(s^-1 t))"""
    _check_symbol(sys, f)
    _check_symbol(sys, g)
    grp = sys.group
    table = grp.add_table()
    negs = grp.neg_indices()
    out = np.zeros_like(f.values)
    for s in range(grp.order):
        shifted = g.values[table[negs[s], :]]
        out += f.values[s][None, :, :] @ _ad_each(sys, np.full(grp.order, s), shifted)
    return Symbol(grp, out)


def involution(sys: DynSystem, f: Symbol) -> Symbol:
    r"""f#(t) = alpha_t(f(t^-1)*)"""
    _check_symbol(sys, f)
    grp = sys.group
    flipped = np.conj(np.transpose(f.values[grp.neg_indices()], (0, 2, 1)))
    return Symbol(grp, _ad_each(sys, np.arange(grp.order), flipped))
