#!/usr/bin/env python
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
import unittest

import mock
import numpy as np

from ksmodel.runners.host import errors
from ksmodel.runners.host import utils
from ksmodel.utils.python.geometry import rng_stream
from ksmodel.utils.python.geometry import sphere
from ksmodel.utils.python.quadrature import monte_carlo
from ksmodel.utils.python.quadrature import sphere_grid


class MonteCarloTest(unittest.TestCase):
    """Unit tests for monte_carlo module"""

    def testConstantIsExact(self):
        """Tests that f = 1 gives 4 pi with zero error."""
        estimate = monte_carlo.integrate_sphere_mc(
            sphere_grid.constant(1.0), 10**5, rng_stream.RngStream(0))
        self.assertEqual(estimate.value, 4 * math.pi)
        self.assertEqual(estimate.std_error, 0.0)
        self.assertEqual(estimate.n_samples, 10**5)

    def testHemisphere(self):
        """Tests the hemisphere area within 3 sigma."""
        axis = sphere.UnitVector(1.0, 1.0, 1.0, normalize=True).asArray()
        estimate = monte_carlo.integrate_sphere_mc(
            lambda p: sphere.heaviside(p.dot(axis)), 10**6,
            rng_stream.RngStream(1))
        self.assertTrue(estimate.withinSigma(2 * math.pi), estimate)
        self.assertGreater(estimate.std_error, 0.0)

    def testQuadraticAgainstGrid(self):
        """Tests int (l.a)(l.b) against the grid oracle."""
        a = sphere.UnitVector(0.3, 0.1, -0.9, normalize=True).asArray()
        b = sphere.UnitVector(-0.5, 0.8, 0.2, normalize=True).asArray()
        integrand = sphere_grid.SphereIntegrand(
            lambda p: p.dot(a) * p.dot(b))
        oracle = sphere_grid.integrate_sphere_grid(integrand, 16, 32)
        estimate = monte_carlo.integrate_sphere_mc(integrand, 10**6,
                                                   rng_stream.RngStream(2))
        self.assertTrue(estimate.withinSigma(oracle), estimate)

    def testWorkerCountInvariant(self):
        """Tests that the estimate does not depend on the worker count."""
        integrand = sphere_grid.SphereIntegrand(lambda p: p[:, 0]**2)
        serial = monte_carlo.integrate_sphere_mc(
            integrand, 200000, rng_stream.RngStream(3), workers=1)
        parallel = monte_carlo.integrate_sphere_mc(
            integrand, 200000, rng_stream.RngStream(3), workers=4)
        self.assertEqual(serial.value, parallel.value)
        self.assertEqual(serial.std_error, parallel.std_error)

    def testTooFewSamples(self):
        """Tests the minimum sample count."""
        with self.assertRaises(errors.IntegrationError):
            monte_carlo.integrate_sphere_mc(sphere_grid.constant(1.0), 999,
                                            rng_stream.RngStream(0))

    def testBlocksUseSpawnedStreams(self):
        """Tests that block i draws from child stream i."""
        stream = rng_stream.RngStream(4)
        seen = []

        def _block(child, size):
            seen.append((child.key, size))
            return monte_carlo.RunningMoments.fromValues(np.ones(size))

        with mock.patch.object(
                monte_carlo.utils, "concurrent_exec",
                side_effect=utils.concurrent_exec) as concurrent_exec:
            monte_carlo.run_blocks(_block, 25, stream, workers=3,
                                   block_size=10)
        self.assertEqual(concurrent_exec.call_args[0][2], 3)
        self.assertEqual(sorted(seen),
                         [((0, 0), 10), ((0, 1), 10), ((0, 2), 5)])

    def testFamilySigma(self):
        """Tests the family-wise band multiple."""
        self.assertAlmostEqual(monte_carlo.family_sigma(1), 3.0, places=9)
        self.assertGreater(monte_carlo.family_sigma(100), 4.0)
        self.assertLess(monte_carlo.family_sigma(100), 5.0)
        with self.assertRaises(errors.IntegrationError):
            monte_carlo.family_sigma(0)


class RunningMomentsTest(unittest.TestCase):
    """Unit tests for RunningMoments"""

    def testMergeMatchesDirect(self):
        """Tests that merged blocks match a one-shot computation."""
        values = np.linspace(-2.0, 5.0, 101)**3
        merged = monte_carlo.merge_all(
            monte_carlo.RunningMoments.fromValues(chunk)
            for chunk in np.array_split(values, 7))
        self.assertEqual(merged.count, 101)
        self.assertAlmostEqual(merged.mean, np.mean(values), places=10)
        self.assertAlmostEqual(merged.variance(), np.var(values, ddof=1),
                               delta=1e-9 * np.var(values))

    def testEstimateScale(self):
        """Tests the scaled estimate and its error."""
        moments = monte_carlo.RunningMoments.fromValues([1.0, -1.0, 1.0, -1.0])
        estimate = moments.estimate(4.0)
        self.assertEqual(estimate.value, 0.0)
        self.assertAlmostEqual(estimate.std_error,
                               4.0 * math.sqrt(4.0 / 3.0 / 4.0))

    def testEstimateValidation(self):
        """Tests that a negative error is rejected."""
        with self.assertRaises(errors.IntegrationError):
            monte_carlo.Estimate(1.0, -0.1, 10)
        self.assertEqual(
            monte_carlo.Estimate(1.0, 0.5, 10).scaled(-2.0).getDict(),
            {"value": -2.0, "std_error": 1.0, "n_samples": 10})


if __name__ == "__main__":
    unittest.main()
