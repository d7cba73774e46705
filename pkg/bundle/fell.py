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
from dataclasses import dataclass
from typing import List, Sequence

import numpy as np
import pandas as pd

from crossed import pi
from dynamics import DynSystem, alg_closure, fourier_coeffs, smooth, spectral_residual
from group import ScalarFunction
from numeric import Subspace, adjoint, op_norm, span_of
from util.errors import NumericError, StructuralError


class FellBundle:
    r"""
    Spectral Fell bundle of an action: B_x = span{F(a, x) : a in hull}
    where hull is the spectrally invariant hull of W and W*. ``fibers`` is
    indexed by the dual group enumeration.
    """

    def __init__(self, sys: DynSystem, generating_set: List[np.ndarray], hull: Subspace, fibers: List[Subspace]):
        self.sys = sys
        self.generating_set = generating_set
        self.hull = hull
        self.fibers = fibers
        self._algebra = None

    def __repr__(self):
        return f'FellBundle(G={self.sys.group}, fiber dims={self.fiber_dims()})'

    def fiber(self, x) -> Subspace:
        return self.fibers[self.sys.group.index_of(x)]

    @property
    def unit_fiber(self) -> Subspace:
        return self.fibers[0]

    def fiber_dims(self) -> List[int]:
        return [f.dim for f in self.fibers]

    def total_dim(self) -> int:
        return sum(self.fiber_dims())

    @property
    def algebra(self) -> Subspace:
        r"""Alg(W): the smallest alpha-invariant *-algebra span containing W."""
        if self._algebra is None:
            self._algebra = alg_closure(self.sys, self.generating_set)
        return self._algebra

    def fiber_table(self) -> pd.DataFrame:
        return pd.DataFrame({'x_index': np.arange(self.sys.group.order), 'fiber_dim': self.fiber_dims()})


def spectral_hull(sys: DynSystem, W: Sequence) -> Subspace:
    r"""
    Span of the spectrally invariant hull of W and W*: closed under
    a -> F(b, x) a and a -> a F(b, x) for members b. At most d^2 rounds.
    """
    shape = (sys.dim, sys.dim)
    mats = [sys.check_mat(w, 'W element') for w in W]
    current = span_of(mats + [adjoint(m) for m in mats], shape=shape)
    for rounds in range(sys.dim * sys.dim + 1):
        if current.dim == 0:
            return current
        basis = current.basis
        coeffs = np.concatenate([fourier_coeffs(sys, b) for b in basis])
        grown = list(basis)
        for a in basis:
            grown.extend(coeffs @ a[None, :, :])
            grown.extend(a[None, :, :] @ coeffs)
        nxt = span_of(grown, shape=shape)
        logging.debug(f'spectral_hull round {rounds}: dim {current.dim} -> {nxt.dim}')
        if nxt.dim == current.dim:
            return nxt
        current = nxt
    raise NumericError(f'Spectral hull did not stabilize in {sys.dim * sys.dim} rounds')


def build_bundle(sys: DynSystem, W: Sequence) -> FellBundle:
    if len(W) == 0:
        raise StructuralError('The generating set W should not be empty')
    W = [sys.check_mat(w, 'W element') for w in W]
    hull = spectral_hull(sys, W)
    shape = (sys.dim, sys.dim)
    tables = [fourier_coeffs(sys, a) for a in hull.basis]
    # one cut-off for every fiber, taken from the whole coefficient table
    scale = max((float(np.linalg.norm(t)) for t in tables), default=0.0)
    fibers = []
    for x in range(sys.group.order):
        fibers.append(span_of([t[x] for t in tables], shape=shape, scale=scale))
    bundle = FellBundle(sys, W, hull, fibers)
    logging.info(f'Built {bundle}')
    return bundle


@dataclass
class BundleAxioms:
    product: float
    adjoint: float
    spectral: float

    def max_residual(self):
        return max(self.product, self.adjoint, self.spectral)


def bundle_axioms(b: FellBundle) -> BundleAxioms:
    r"""
    Largest residuals of u v in B_{x+y} and u* in B_{-x} over fiber basis
    pairs, and of the spectral law alpha_t(u) = conj(<x, t>) u.
    """
    g = b.sys.group
    table = g.add_table()
    negs = g.neg_indices()
    prod, adj, spec = 0.0, 0.0, 0.0
    for x in range(g.order):
        for u in b.fibers[x].basis:
            adj = max(adj, b.fibers[negs[x]].residual(adjoint(u)))
            spec = max(spec, spectral_residual(b.sys, u, g.element(x)))
            for y in range(g.order):
                target = b.fibers[table[x, y]]
                for v in b.fibers[y].basis:
                    prod = max(prod, target.residual(u @ v))
    return BundleAxioms(prod, adj, spec)


class Section:
    r"""A map x -> s(x) in B_x, stored as an array (|G|, d, d)."""

    def __init__(self, bundle: FellBundle, values, check: bool = True):
        values = np.asarray(values, dtype=complex)
        g = bundle.sys.group
        d = bundle.sys.dim
        if values.shape != (g.order, d, d):
            raise StructuralError(f'A section needs shape {(g.order, d, d)}, got {values.shape}')
        self.bundle = bundle
        self.values = values
        if check:
            tol = bundle.sys.tol
            for x in range(g.order):
                r = bundle.fibers[x].residual(values[x])
                if r > tol * max(1.0, op_norm(values[x])):
                    raise StructuralError(f'Section value at {g.element(x)} is not in its fiber (residual {r:.3e})')

    def __getitem__(self, x) -> np.ndarray:
        return self.values[self.bundle.sys.group.index_of(x)]


def section_from(b: FellBundle, a) -> Section:
    r"""x -> F(a, x)"""
    return Section(b, fourier_coeffs(b.sys, a))


def random_section(b: FellBundle, seed: int) -> Section:
    rng = np.random.default_rng(seed)
    values = np.zeros((b.sys.group.order, b.sys.dim, b.sys.dim), dtype=complex)
    for x, fiber in enumerate(b.fibers):
        for v in fiber.basis:
            values[x] += complex(rng.standard_normal(), rng.standard_normal()) * v
    return Section(b, values, check=False)


def kappa(b: FellBundle, s: Section) -> np.ndarray:
    r"""kappa(s) = (1/|G|) sum_x s(x)"""
    if s.bundle is not b:
        raise StructuralError('Section belongs to another bundle')
    return np.sum(s.values, axis=0) * b.sys.group.dual_haar_weight


def dual_action_section(b: FellBundle, s: Section, t) -> Section:
    r"""(beta_t s)(x) = conj(<x, t>) s(x)"""
    g = b.sys.group
    chi = np.conj(g.character_table()[:, g.index_of(t)])
    return Section(b, chi[:, None, None] * s.values, check=False)


def section_convolution(b: FellBundle, s1: Section, s2: Section) -> Section:
    r"""(s1 * s2)(x) = (1/|G|) sum_y s1(y) s2(x - y)"""
    g = b.sys.group
    table = g.add_table()
    negs = g.neg_indices()
    out = np.zeros_like(s1.values)
    for x in range(g.order):
        out[x] = np.einsum('yij,yjk->ik', s1.values, s2.values[table[x, negs]])
    return Section(b, out * g.dual_haar_weight, check=False)


def section_adjoint(b: FellBundle, s: Section) -> Section:
    r"""s*(x) = s(-x)*"""
    flipped = s.values[b.sys.group.neg_indices()]
    return Section(b, np.conj(np.transpose(flipped, (0, 2, 1))), check=False)


@dataclass
class KappaHomomorphism:
    product: float
    adjoint: float


def kappa_homomorphism(b: FellBundle, s1: Section, s2: Section) -> KappaHomomorphism:
    prod = op_norm(kappa(b, section_convolution(b, s1, s2)) - kappa(b, s1) @ kappa(b, s2))
    adj = op_norm(kappa(b, section_adjoint(b, s1)) - adjoint(kappa(b, s1)))
    return KappaHomomorphism(prod, adj)


@dataclass
class CovarianceReport:
    residual: float
    kappa_span_dim: int
    algebra_dim: int

    @property
    def dims_agree(self):
        return self.kappa_span_dim == self.algebra_dim


def covariance_check(sys: DynSystem, b: FellBundle, s: Section, t) -> CovarianceReport:
    r"""
    |alpha_t(kappa(s)) - kappa(beta_t s)|, together with the dimension of
    span{kappa(sections)} (the direct sum of the fibers) against Alg(W).
    """
    residual = op_norm(sys.alpha(t, kappa(b, s)) - kappa(b, dual_action_section(b, s, t)))
    everything = [v for f in b.fibers for v in f.basis]
    span = span_of(everything, shape=(sys.dim, sys.dim))
    return CovarianceReport(residual, span.dim, b.algebra.dim)


def fourier_unitary(sys: DynSystem) -> np.ndarray:
    r"""(F xi)(x) = |G|^{-1/2} sum_t conj(<x, t>) xi(t), as a (|G| d) x (|G| d) matrix."""
    g = sys.group
    return np.kron(np.conj(g.character_table()) / np.sqrt(g.order), np.eye(sys.dim))


def dual_regular(sys: DynSystem, x) -> np.ndarray:
    r"""Left regular representation of the dual group on l2(G^): (lambda_x xi)(y) = xi(y - x)."""
    g = sys.group
    xi = g.index_of(x)
    lam = np.zeros((g.order, g.order))
    table = g.add_table()
    for y in range(g.order):
        lam[table[xi, y], y] = 1.0
    return lam


def diagram_check(sys: DynSystem, b: FellBundle, a, g: ScalarFunction) -> float:
    r"""|F pi(a') F* - (1/|G|) sum_x lambda_x (x) eta(x)| with a' = smooth(a, g), eta(x) = F(a', x)."""
    a_smooth = smooth(sys, a, g)
    eta = fourier_coeffs(sys, a_smooth)
    fmat = fourier_unitary(sys)
    lhs = fmat @ pi(sys, a_smooth).as_matrix() @ adjoint(fmat)
    rhs = np.zeros_like(lhs)
    for x in range(sys.group.order):
        rhs += np.kron(dual_regular(sys, sys.group.element(x)), eta[x])
    return op_norm(lhs - rhs * sys.group.dual_haar_weight)
