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
from typing import Callable, Dict

import numpy as np

from bundle import build_bundle, bundle_axioms, covariance_check, diagram_check, kappa_homomorphism, \
    morita_report, random_section
from config import default_config
from crossed import covariance_pi_lambda_residual, dual_covariance_residual, in_crossed_product, \
    membership_closure_check, rho, symbol_of
from dynamics import DynSystem, Symbol, fourier_coeff, fourier_coeffs, fourier_product_rules, inverse_fourier, \
    one_norm_bracket, polarization_check, spectral_residual, support_inequality_defect
from hilbert import fourier_via_V, intertwining_residual, lip, lip_symbol_residual, module_axioms, rip_fixed_residual, \
    rip_fourier_residual, rip_identity_residual, rip_sesquilinearity, ternary_identity, zeta
from numeric import adjoint, op_norm, psd_defect
from rc import hereditary_probe, rc_chain_inequality, rc_modulus, rc_property_suite
from util.errors import UsageError
from .report import SuiteReport


class SuiteContext:
    r"""Seeded random elements of the algebra and the group shared by every suite."""

    def __init__(self, sys: DynSystem, seed: int, tol: float = None, samples: int = None):
        self.sys = sys
        self.seed = seed
        self.tol = default_config.verify_tol if tol is None else tol
        self.samples = default_config.verify_samples if samples is None else samples
        self.rng = np.random.default_rng(seed)
        self.a = self.element()
        self.b = self.element()
        self.c = self.element()
        self.g = self.rng.standard_normal(sys.group.order) + 1j * self.rng.standard_normal(sys.group.order)
        self.w = sys.group.element(min(1, sys.group.order - 1))
        # F(r, e) commutes with the action, F(r, w) lies in M_w
        self.m_fixed = fourier_coeff(sys, self.element(), sys.group.identity) * sys.group.dual_haar_weight
        self.m_w = fourier_coeff(sys, self.element(), self.w) * sys.group.dual_haar_weight

    def element(self) -> np.ndarray:
        basis = self.sys.algebra.basis
        coeffs = self.rng.standard_normal(len(basis)) + 1j * self.rng.standard_normal(len(basis))
        return np.tensordot(coeffs, np.array(basis), axes=(0, 0))

    def symbol(self) -> Symbol:
        return Symbol(self.sys.group, np.array([self.element() for _ in range(self.sys.group.order)]))

    def scaled(self, value: float, *mats) -> float:
        r"""value relative to the size of the inputs"""
        return value / max(1.0, *(op_norm(m) for m in mats))


def fourier_suite(ctx: SuiteContext) -> SuiteReport:
    sys, tol = ctx.sys, ctx.tol
    g = sys.group
    rep = SuiteReport('fourier')
    coeffs = fourier_coeffs(sys, ctx.a)
    roundtrip = max(op_norm(inverse_fourier(sys, coeffs, t) - sys.alpha(t, ctx.a)) for t in g.elements())
    rep.add('inverse_fourier', ctx.scaled(roundtrip, ctx.a), tol)
    spectral = max(spectral_residual(sys, coeffs[i], g.element(i)) for i in range(g.order))
    rep.add('spectral_subspace', ctx.scaled(spectral, ctx.a) / g.order, tol)
    worst = 0.0
    for x in g.elements():
        rules = fourier_product_rules(sys, ctx.a, ctx.b, x, ctx.w, ctx.m_w, ctx.w)
        worst = max(worst, rules.max_residual() / rules.scale)
    rep.add('product_rules', worst, tol)
    pol = polarization_check(sys, ctx.a, ctx.b)
    rep.add('polarization_identity', ctx.scaled(pol.identity_residual, ctx.a, ctx.b) /
            max(1.0, op_norm(ctx.a) * op_norm(ctx.b)), tol)
    rep.add_equal('polarization_spans', pol.products_dim, pol.positives_dim)
    rep.add('support_inequality', ctx.scaled(support_inequality_defect(sys, ctx.symbol()), ctx.a) /
            (g.order * op_norm(ctx.a)), tol)
    lower, upper = one_norm_bracket(sys, ctx.a, ctx.samples, ctx.seed)
    rep.add('one_norm_bracket', lower - upper, tol)
    return rep


def module_suite(ctx: SuiteContext) -> SuiteReport:
    sys, tol = ctx.sys, ctx.tol
    rep = SuiteReport('module')
    scale = max(1.0, op_norm(ctx.a) * op_norm(ctx.b) * sys.group.order)
    ax = module_axioms(sys, ctx.a, ctx.m_fixed, ctx.b, ctx.w)
    rep.add('module_axioms', ax.max_residual() / scale / max(1.0, op_norm(ctx.m_fixed)), tol)
    rep.add('ternary_identity', ternary_identity(sys, ctx.a, ctx.b, ctx.c) /
            (scale * max(1.0, op_norm(ctx.c))), tol)
    rep.add('rip_identity', rip_identity_residual(sys, ctx.a, ctx.b) / scale, tol)
    rep.add('rip_fixed', rip_fixed_residual(sys, ctx.a, ctx.b) / scale, tol)
    rep.add('rip_sesquilinear', rip_sesquilinearity(sys, ctx.a, ctx.b, ctx.c, 2 - 1j) /
            (scale * max(1.0, op_norm(ctx.c))), tol)
    rep.add('rip_fourier', rip_fourier_residual(sys, ctx.a, ctx.b) / scale, tol)
    via_v = max(fourier_via_V(sys, ctx.a, ctx.b, x) for x in sys.group.elements())
    rep.add('fourier_via_V', via_v / scale, tol)
    rep.add('intertwining', intertwining_residual(sys, ctx.g, ctx.c, ctx.a) /
            (scale * max(1.0, op_norm(ctx.c)) * max(1.0, float(np.sum(np.abs(ctx.g))))), tol)
    rep.add('lip_symbol', lip_symbol_residual(sys, ctx.a, ctx.b) / scale, tol)
    za, zb = zeta(sys, ctx.a), zeta(sys, ctx.b)
    rep.add('lip_positive', psd_defect(lip(za, za).as_matrix()) / scale, tol)
    rep.add('lip_adjoint', (lip(za, zb).adjoint() - lip(zb, za)).norm() / scale, tol)
    return rep


def crossed_suite(ctx: SuiteContext) -> SuiteReport:
    sys, tol = ctx.sys, ctx.tol
    g = sys.group
    rep = SuiteReport('crossed')
    f, h = ctx.symbol(), ctx.symbol()
    fscale = max(1.0, max(op_norm(v) for v in f.values) * g.order)
    rep.add('symbol_round_trip', symbol_of(sys, rho(sys, f)).max_diff(f) / fscale, tol)
    T = lip(zeta(sys, ctx.a), zeta(sys, ctx.b))
    tscale = max(1.0, T.norm())
    rep.add('rho_of_symbol', (rho(sys, symbol_of(sys, T)) - T).norm() / tscale, tol)
    member, residual = in_crossed_product(sys, T)
    rep.add('lip_in_crossed_product', residual / tscale if member else float('inf'), tol)
    dual = max(dual_covariance_residual(sys, f, x) for x in g.elements())
    rep.add('dual_covariance', dual / fscale, tol)
    cov = max(covariance_pi_lambda_residual(sys, ctx.a, t) for t in g.elements())
    rep.add('pi_lambda_covariance', ctx.scaled(cov, ctx.a), tol)
    closure = membership_closure_check(sys, f, h)
    hscale = max(1.0, max(op_norm(v) for v in h.values) * g.order)
    rep.add('closure_product_laurent', closure.product_defect / (fscale * hscale), tol)
    rep.add('closure_adjoint_laurent', closure.adjoint_defect / fscale, tol)
    rep.add('closure_product_symbol', closure.product_residual / (fscale * hscale), tol)
    rep.add('closure_adjoint_symbol', closure.adjoint_residual / fscale, tol)
    return rep


def rc_suite(ctx: SuiteContext) -> SuiteReport:
    sys, tol = ctx.sys, ctx.tol
    rep = SuiteReport('rc')
    scale = max(1.0, (op_norm(ctx.a) * op_norm(ctx.b) * sys.group.order) ** 2)
    table = rc_modulus(sys, ctx.a, ctx.b)
    rep.add('d_at_identity', table.d[0] / scale, tol)
    rep.add('c1_at_identity', table.c1[0] / scale, tol)
    rep.add('c2_at_identity', table.c2[0] / scale, tol)
    props = rc_property_suite(sys, ctx.a, ctx.b, ctx.c, ctx.m_w, ctx.w, ctx.g, samples=ctx.samples, seed=ctx.seed)
    for check in props.checks:
        rep.add(f'property_{check.name}', -check.relative_slack if check.precondition is None else float('inf'), tol)
    chain = rc_chain_inequality(sys, ctx.a, ctx.b)
    rep.add('chain_inequality', -chain.relative_slack, tol)
    b = adjoint(ctx.b) @ ctx.b
    c = adjoint(ctx.c) @ ctx.c
    probe = hereditary_probe(sys, b / 2, b, c)
    rep.add('hereditary_contraction', probe.contraction_norm, 1 + np.sqrt(tol))
    rep.add('hereditary_bound', -probe.check.relative_slack, tol)
    return rep


def fell_suite(ctx: SuiteContext) -> SuiteReport:
    sys, tol = ctx.sys, ctx.tol
    rep = SuiteReport('fell')
    b = build_bundle(sys, sys.algebra.basis)
    rep.add_equal('fiber_dims_sum', b.total_dim(), sys.algebra.dim)
    ax = bundle_axioms(b)
    rep.add('axiom_product', ax.product, tol)
    rep.add('axiom_adjoint', ax.adjoint, tol)
    rep.add('axiom_spectral', ax.spectral, tol)
    s1, s2 = random_section(b, ctx.seed), random_section(b, ctx.seed + 1)
    sscale = max(1.0, float(np.max(np.abs(s1.values))) * float(np.max(np.abs(s2.values))) * sys.dim)
    hom = kappa_homomorphism(b, s1, s2)
    rep.add('kappa_product', hom.product / sscale, tol)
    rep.add('kappa_adjoint', hom.adjoint / sscale, tol)
    cov = covariance_check(sys, b, s1, ctx.w)
    rep.add('kappa_covariance', cov.residual / sscale, tol)
    rep.add_equal('kappa_span_dim', cov.kappa_span_dim, cov.algebra_dim)
    rep.add('diagram', ctx.scaled(diagram_check(sys, b, ctx.a, ctx.g), ctx.a) /
            max(1.0, float(np.sum(np.abs(ctx.g)))), tol)
    mr = morita_report(sys, b)
    rep.add_equal('morita_dims', mr.rip_dim, mr.unit_fiber_dim)
    rep.add('morita_rip_in_fiber', mr.rip_in_fiber, tol)
    rep.add('morita_fiber_in_rip', mr.fiber_in_rip, tol)
    rep.add('morita_left_ideal', mr.ideal_residual, tol)
    return rep


SUITES: Dict[str, Callable[[SuiteContext], SuiteReport]] = {
    'fourier': fourier_suite,
    'module': module_suite,
    'crossed': crossed_suite,
    'rc': rc_suite,
    'fell': fell_suite,
}


def run_suite(sys: DynSystem, name: str, seed: int, tol: float = None) -> SuiteReport:
    if name != 'all' and name not in SUITES:
        raise UsageError(f'Unknown suite "{name}", expected one of {", ".join(list(SUITES) + ["all"])}')
    names = list(SUITES) if name == 'all' else [name]
    report = SuiteReport(name)
    for n in names:
        logging.info(f'Running suite {n} on {sys} with seed {seed}')
        # each suite draws from its own generator so "all" repeats the single-suite numbers
        part = SUITES[n](SuiteContext(sys, seed, tol))
        if name == 'all':
            report.extend(part, prefix=n)
        else:
            report = part
    return report
