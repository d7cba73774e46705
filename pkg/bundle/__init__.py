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
from .fell import FellBundle, spectral_hull, build_bundle, BundleAxioms, bundle_axioms, Section, section_from, \
    random_section, kappa, dual_action_section, section_convolution, section_adjoint, KappaHomomorphism, \
    kappa_homomorphism, CovarianceReport, covariance_check, fourier_unitary, dual_regular, diagram_check
from .morita import generators, lip_span, left_ideal_residual, MoritaReport, morita_report
