#
# Copyright (C) 2026 The ksmodel Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#

import math

from ksmodel.runners.host import asserts
from ksmodel.runners.host import base_test
from ksmodel.testcases.host.verification import verification_base
from ksmodel.utils.python.model import ks_single
from ksmodel.utils.python.quadrature import great_circle
from ksmodel.utils.python.quadrature import sphere_grid

GRID_TOLERANCE = 2e-3
CONTOUR_TOLERANCE = 1e-10
CONVERGENCE_LEVELS = (16, 64, 256)


class QuadratureVerification(verification_base.VerificationTestBase):
    """Sphere grid, Monte Carlo and great-circle routes to the same
    integrals."""
    stream_id = 2

    @base_test.invariant("grid vs MC")
    def testGridMatchesMonteCarlo(self):
        pairs = self.randomPairs(self.sampleCount(5, 2), 0)
        n = self.sampleCount(10**6, 10**5)
        band = self.familySigma(len(pairs))
        deviations = []
        for i, (n_a, n_b) in enumerate(pairs):
            integrand = ks_single.overlap_integrand(n_a, n_b)
            grid = sphere_grid.integrate_sphere_grid(
                integrand, self.n_theta, 4 * self.n_theta, pole=n_a)
            estimate = ks_single.overlap_numeric(n_a, n_b, method="mc",
                                                 n_samples=n,
                                                 rng=self.getRng(1, i),
                                                 workers=self.workers)
            deviations.append(abs(grid - estimate.value))
            asserts.assertAlmostEqual(
                estimate.value, grid,
                band * estimate.std_error + GRID_TOLERANCE)
        self.recordWorst("max_deviation", deviations)

    @base_test.invariant("Stokes")
    def testStokesEquivalence(self):
        pairs = self.randomPairs(self.sampleCount(20, 5), 2)
        contour = []
        surface = []
        for n_a, n_b in pairs:
            expected = math.pi * ks_single.overlap_closed(n_a, n_b)
            contour.append(abs(
                great_circle.lune_contour_flux(n_a, n_b, n_a) - expected))
            surface.append(abs(
                sphere_grid.lune_flux(n_a, n_b, n_a, self.n_theta) -
                expected) / math.pi)
        asserts.assertLessEqual(self.recordWorst("max_contour_error", contour),
                                CONTOUR_TOLERANCE)
        asserts.assertLessEqual(self.recordWorst("max_surface_error", surface),
                                GRID_TOLERANCE)

    @base_test.invariant("grid convergence")
    def testGridConvergence(self):
        pairs = self.randomPairs(10, 3)
        errors = []
        for n_theta in CONVERGENCE_LEVELS:
            errors.append(math.fsum(
                abs(ks_single.overlap_numeric(n_a, n_b, n_theta=n_theta) -
                    ks_single.overlap_closed(n_a, n_b))
                for n_a, n_b in pairs) / len(pairs))
        self.addMeasurement("mean_errors", errors)
        for coarse, fine in zip(errors, errors[1:]):
            asserts.assertLess(fine, coarse, "error did not decrease")
