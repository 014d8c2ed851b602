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

import numpy as np

from ksmodel.runners.host import asserts
from ksmodel.runners.host import base_test
from ksmodel.testcases.host.verification import verification_base
from ksmodel.utils.python.model import ks_two
from ksmodel.utils.python.quantum import qm_reference

EXACT_TOLERANCE = 1e-12
CORRELATION_TOLERANCE = 5e-3
MALUS_TOLERANCE = 2e-3
MASS_TOLERANCE = 2e-2
SINGLET_MASS = 4.0


class KsTwoVerification(verification_base.VerificationTestBase):
    """Two-qubit distributions: mass, Malus' law, factorization and the
    correlation routes."""
    stream_id = 5

    @base_test.invariant("mass=4")
    def testSingletMass(self):
        settings = self.randomPairs(self.sampleCount(20, 5), 0)
        for n_a, n_b in settings:
            asserts.assertEqual(
                ks_two.singlet_distribution(n_a, n_b).mass(), SINGLET_MASS)
        n_a, n_b = settings[0]
        brute_force = ks_two.mass_numeric(ks_two.singlet_distribution(n_a,
                                                                      n_b))
        self.addMeasurement("mass_numeric", brute_force)
        asserts.assertAlmostEqual(brute_force, SINGLET_MASS, MASS_TOLERANCE)

    @base_test.invariant("Malus")
    def testMalusGrid(self):
        vectors = self.randomVectors(4 * self.sampleCount(50, 5), 1)
        deviations = []
        for i in range(0, len(vectors), 4):
            u, v, n_a, n_b = vectors[i:i + 4]
            a_bar, b_bar = ks_two.malus_averages(u, v, n_a, n_b,
                                                 n_theta=self.n_theta)
            deviations.append(abs(a_bar - u.dot(n_a)))
            deviations.append(abs(b_bar - v.dot(n_b)))
        asserts.assertLessEqual(self.recordWorst("max_error", deviations),
                                MALUS_TOLERANCE)

    @base_test.invariant("Malus MC")
    def testMalusMonteCarlo(self):
        count = self.sampleCount(5, 2)
        vectors = self.randomVectors(4 * count, 2)
        n = self.sampleCount(10**6, 10**5)
        band = self.familySigma(2 * count)
        for i in range(count):
            u, v, n_a, n_b = vectors[4 * i:4 * i + 4]
            a_bar, b_bar = ks_two.malus_averages(u, v, n_a, n_b, method="mc",
                                                 n_samples=n,
                                                 rng=self.getRng(3, i),
                                                 workers=self.workers)
            asserts.assertWithinSigma(a_bar.value, u.dot(n_a),
                                      a_bar.std_error, band)
            asserts.assertWithinSigma(b_bar.value, v.dot(n_b),
                                      b_bar.std_error, band)

    @base_test.invariant("factorization")
    def testFactorization(self):
        """The joint average under rho_uv is the product A * B."""
        count = self.sampleCount(5, 2)
        vectors = self.randomVectors(4 * count, 4)
        n = self.sampleCount(10**6, 10**5)
        band = self.familySigma(count)
        for i in range(count):
            u, v, n_a, n_b = vectors[4 * i:4 * i + 4]
            joint = ks_two.pair_correlation_numeric(u, v, n_a, n_b,
                                                    method="mc", n_samples=n,
                                                    rng=self.getRng(5, i),
                                                    workers=self.workers)
            asserts.assertWithinSigma(joint.value,
                                      u.dot(n_a) * v.dot(n_b),
                                      joint.std_error, band)

    @base_test.invariant("singlet correlation")
    def testSingletCorrelation(self):
        settings = self.randomPairs(self.sampleCount(50, 5), 6)
        closed = []
        grid = []
        for n_a, n_b in settings:
            f = ks_two.singlet_distribution(n_a, n_b)
            expected = -n_a.dot(n_b)
            closed.append(abs(ks_two.correlation_closed(f, n_a, n_b) -
                              expected))
            grid.append(abs(ks_two.correlation_numeric(
                f, n_a, n_b, n_theta=self.n_theta).value - expected))
        asserts.assertLessEqual(self.recordWorst("max_closed_error", closed),
                                EXACT_TOLERANCE)
        asserts.assertLessEqual(self.recordWorst("max_grid_error", grid),
                                CORRELATION_TOLERANCE)

    @base_test.invariant("singlet correlation MC")
    def testSingletCorrelationMonteCarlo(self):
        settings = self.randomPairs(self.sampleCount(5, 2), 7)
        n = self.sampleCount(10**6, 10**5)
        band = self.familySigma(len(settings))
        for i, (n_a, n_b) in enumerate(settings):
            result = ks_two.correlation_numeric(
                ks_two.singlet_distribution(n_a, n_b), n_a, n_b,
                method="mc", n=n, rng=self.getRng(8, i),
                workers=self.workers)
            asserts.assertWithinSigma(result.value, -n_a.dot(n_b),
                                      result.std_error, band)

    @base_test.invariant("route equivalence")
    def testRouteEquivalence(self):
        """F_ab, the single term F_a and the tensor -I agree."""
        singlet_tensor = ks_two.distribution_from_tensor(-np.eye(3))
        deviations = []
        for n_a, n_b in self.randomPairs(self.sampleCount(20, 5), 9):
            routes = (ks_two.singlet_distribution(n_a, n_b),
                      ks_two.single_term_distribution(n_a), singlet_tensor)
            for f in routes:
                deviations.append(abs(
                    ks_two.correlation_numeric(
                        f, n_a, n_b, n_theta=self.n_theta).value +
                    n_a.dot(n_b)))
                asserts.assertAlmostEqual(ks_two.correlation_closed(f, n_a,
                                                                    n_b),
                                          -n_a.dot(n_b), EXACT_TOLERANCE)
        asserts.assertLessEqual(self.recordWorst("max_grid_error",
                                                 deviations),
                                CORRELATION_TOLERANCE)

    def generateBellStates(self):
        self.runGeneratedTests(self._checkBellState,
                               list(qm_reference.BELL_KINDS),
                               name_func=lambda kind: "testBellState_" + kind,
                               invariant_label="Bell-state distributions")

    def _checkBellState(self, kind):
        f = ks_two.bell_distribution(kind)
        tensor = qm_reference.bell_tensor(kind)
        settings = self.randomPairs(self.sampleCount(10, 3), 10)
        deviations = []
        for n_a, n_b in settings:
            expected = tensor.correlation(n_a, n_b)
            asserts.assertAlmostEqual(ks_two.correlation_closed(f, n_a, n_b),
                                      expected, EXACT_TOLERANCE)
            deviations.append(abs(ks_two.correlation_numeric(
                f, n_a, n_b, n_theta=self.n_theta).value - expected))
        asserts.assertLessEqual(self.recordWorst("max_grid_error",
                                                 deviations),
                                CORRELATION_TOLERANCE)

    @base_test.invariant("linearity")
    def testTensorLinearity(self):
        rng = self.getRng(11)
        t1 = rng.uniform(9).reshape(3, 3) * 2.0 - 1.0
        t2 = rng.uniform(9).reshape(3, 3) * 2.0 - 1.0
        deviations = []
        for n_a, n_b in self.randomPairs(self.sampleCount(20, 5), 12):
            combined = ks_two.correlation_closed(
                ks_two.distribution_from_tensor(0.5 * t1 + 0.25 * t2), n_a,
                n_b)
            separate = (0.5 * ks_two.correlation_closed(
                ks_two.distribution_from_tensor(t1), n_a, n_b) +
                        0.25 * ks_two.correlation_closed(
                            ks_two.distribution_from_tensor(t2), n_a, n_b))
            deviations.append(abs(combined - separate))
        asserts.assertLessEqual(self.recordWorst("max_deviation", deviations),
                                EXACT_TOLERANCE)

    @base_test.invariant("ensemble marginal")
    def testEnsembleMarginal(self):
        """Diagnostic: int F_ab (u . a) = 1 - a . b."""
        n_a, n_b = self.randomPairs(1, 13)[0]
        f = ks_two.singlet_distribution(n_a, n_b)
        closed = ks_two.ensemble_marginal(f, n_a, ks_two.SIDE_A)
        numeric = ks_two.ensemble_marginal_numeric(f, n_a, ks_two.SIDE_A,
                                                   self.n_theta)
        self.addMeasurement("closed", closed)
        self.addMeasurement("numeric", numeric)
        asserts.assertAlmostEqual(closed, 1.0 - n_a.dot(n_b), EXACT_TOLERANCE)
        asserts.assertAlmostEqual(numeric, closed, CORRELATION_TOLERANCE)
