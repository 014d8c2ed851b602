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

import numpy as np

from ksmodel.runners.host import asserts
from ksmodel.runners.host import base_test
from ksmodel.runners.host import keys
from ksmodel.testcases.host.verification import verification_base
from ksmodel.utils.python.geometry import sphere
from ksmodel.utils.python.model import ks_single

NORMALIZATION_TOLERANCE = 1e-3
BORN_TOLERANCE = 2e-3
SYMMETRY_TOLERANCE = 4e-3
EQUATOR_POINTS = 360


def _equator_points(axis_index):
    """Points on the equator of a coordinate axis, with exact zeros."""
    t = np.linspace(0.0, 2.0 * math.pi, EQUATOR_POINTS, endpoint=False)
    points = np.zeros((EQUATOR_POINTS, 3))
    points[:, (axis_index + 1) % 3] = np.cos(t)
    points[:, (axis_index + 2) % 3] = np.sin(t)
    return points


class KsSingleVerification(verification_base.VerificationTestBase):
    """Single-qubit densities, hemisphere indicators and the Born rule.

    Attributes:
        debug_equator_double_count: bool, evaluate event outcomes with the
            analytic Theta(0) = 1 on both indicators.
    """
    stream_id = 3

    def setUpClass(self):
        self.debug_equator_double_count = self.getUserParam(
            keys.ConfigKeys.KEY_DEBUG_EQUATOR_DOUBLE_COUNT,
            default_value=False)

    @base_test.invariant("normalization")
    def testNormalization(self):
        axes = self.randomVectors(self.sampleCount(100, 10), 0)
        worst = self.recordWorst("max_error", [
            abs(ks_single.SubensembleDensity(axis).normalization(
                self.n_theta) - 1.0) for axis in axes
        ])
        asserts.assertLessEqual(worst, NORMALIZATION_TOLERANCE)

    @base_test.invariant("equator completeness")
    def testEquatorCompleteness(self):
        """Every hidden variable gets exactly one outcome per setting."""
        double_counted = 0
        for index, axis in enumerate(sphere.AXES):
            outcomes = ks_single.dichotomic_outcome_many(
                axis, _equator_points(index),
                analytic_equator=self.debug_equator_double_count)
            double_counted += int(np.sum(outcomes == 0))
        points = sphere.sample_uniform_sphere_array(self.getRng(1), 10000)
        axis = self.randomVectors(1, 2)[0]
        off_equator = (ks_single.chi_many(axis, 1, points) +
                       ks_single.chi_many(axis, -1, points))
        self.addMeasurement("double_counted", double_counted)
        self.addMeasurement("off_equator_violations",
                            int(np.sum(off_equator != 1.0)))
        asserts.assertEqual(double_counted, 0,
                            "equator points fall in both hemispheres")
        asserts.assertTrue(np.all(off_equator == 1.0),
                           "chi+ + chi- != 1 off the equator")

    @base_test.invariant("Born rule")
    def testBornRule(self):
        pairs = self.randomPairs(self.sampleCount(100, 10), 3)
        deviations = []
        for n_a, n_b in pairs:
            for sign in (1, -1):
                deviations.append(abs(
                    ks_single.overlap_numeric(n_a, n_b, sign,
                                              n_theta=self.n_theta) -
                    ks_single.overlap_closed(n_a, n_b, sign)))
        asserts.assertLessEqual(self.recordWorst("max_grid_error",
                                                 deviations), BORN_TOLERANCE)

    @base_test.invariant("Born rule MC")
    def testBornRuleMonteCarlo(self):
        pairs = self.randomPairs(self.sampleCount(10, 2), 4)
        n = self.sampleCount(10**6, 10**5)
        band = self.familySigma(len(pairs))
        for i, (n_a, n_b) in enumerate(pairs):
            estimate = ks_single.overlap_numeric(n_a, n_b, method="mc",
                                                 n_samples=n,
                                                 rng=self.getRng(5, i),
                                                 workers=self.workers)
            asserts.assertWithinSigma(estimate.value,
                                      ks_single.overlap_closed(n_a, n_b),
                                      estimate.std_error, band)

    @base_test.invariant("I_ab symmetry")
    def testOverlapSymmetry(self):
        pairs = self.randomPairs(self.sampleCount(100, 10), 3)
        for n_a, n_b in pairs:
            asserts.assertEqual(ks_single.overlap_closed(n_a, n_b),
                                ks_single.overlap_closed(n_b, n_a))
        worst = self.recordWorst("max_numeric_asymmetry", [
            abs(ks_single.overlap_numeric(n_a, n_b, n_theta=self.n_theta) -
                ks_single.overlap_numeric(n_b, n_a, n_theta=self.n_theta))
            for n_a, n_b in pairs
        ])
        asserts.assertLessEqual(worst, SYMMETRY_TOLERANCE)

    @base_test.invariant("Malus")
    def testSingleSideMalus(self):
        """Outcomes drawn under rho_u average to u . a."""
        cases = self.randomPairs(self.sampleCount(10, 3), 6)
        n = self.sampleCount(10**6, 10**5)
        band = self.familySigma(len(cases))
        for i, (u, n_a) in enumerate(cases):
            estimate = ks_single.sampled_average(u, n_a, n, self.getRng(7, i),
                                                 self.workers)
            asserts.assertWithinSigma(estimate.value, u.dot(n_a),
                                      estimate.std_error, band)
