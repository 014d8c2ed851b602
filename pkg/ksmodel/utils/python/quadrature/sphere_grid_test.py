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

import numpy as np

from ksmodel.runners.host import errors
from ksmodel.utils.python.geometry import rng_stream
from ksmodel.utils.python.geometry import sphere
from ksmodel.utils.python.quadrature import sphere_grid


class SphereGridTest(unittest.TestCase):
    """Unit tests for sphere_grid module"""

    def testWeightsSumToArea(self):
        """Tests that the weights add up to 4 pi."""
        _, weights = sphere_grid.local_grid(16, 32)
        self.assertAlmostEqual(np.sum(weights), 4 * math.pi, delta=1e-12)

    def testConstant(self):
        """Tests the sphere area."""
        value = sphere_grid.integrate_sphere_grid(sphere_grid.constant(1.0),
                                                  64, 128)
        self.assertAlmostEqual(value, 4 * math.pi, delta=1e-10)

    def testAlignedHemisphere(self):
        """Tests the hemisphere area and the cosine-weighted hemisphere."""
        axis = sphere.E_Z.asArray()
        area = sphere_grid.integrate_sphere_grid(
            lambda p: sphere.heaviside(p.dot(axis)), 512, 1024)
        self.assertAlmostEqual(area, 2 * math.pi, delta=1e-3)
        flux = sphere_grid.integrate_sphere_grid(
            lambda p: p.dot(axis) * sphere.heaviside(p.dot(axis)), 512, 1024)
        self.assertAlmostEqual(flux, math.pi, delta=1e-3)

    def testRotatedPoleHemisphere(self):
        """Tests that a pole-aligned grid integrates any hemisphere."""
        pole = sphere.UnitVector(0.2, -0.7, 0.3, normalize=True)
        axis = pole.asArray()
        flux = sphere_grid.integrate_sphere_grid(
            lambda p: p.dot(axis) * sphere.heaviside(p.dot(axis)), 64, 128,
            pole=pole)
        self.assertAlmostEqual(flux, math.pi, delta=1e-10)

    def testSmoothQuadratic(self):
        """Tests int (l.a)(l.b) dS = (4 pi / 3) a.b."""
        a = sphere.UnitVector(1.0, 2.0, 3.0, normalize=True)
        b = sphere.UnitVector(-1.0, 0.5, 2.0, normalize=True)
        value = sphere_grid.integrate_sphere_grid(
            lambda p: p.dot(a.asArray()) * p.dot(b.asArray()), 16, 32)
        self.assertAlmostEqual(value, 4 * math.pi / 3 * a.dot(b), delta=1e-12)

    def testResolutionTooSmall(self):
        """Tests the minimum resolution."""
        with self.assertRaises(errors.IntegrationError):
            sphere_grid.integrate_sphere_grid(sphere_grid.constant(1.0), 4, 16)
        with self.assertRaises(errors.IntegrationError):
            sphere_grid.integrate_sphere_grid(sphere_grid.constant(1.0), 16, 4)

    def testEvaluateSinglePoint(self):
        """Tests scalar evaluation and broadcasting."""
        integrand = sphere_grid.SphereIntegrand(lambda p: p[:, 2] * 2.0)
        self.assertEqual(integrand.evaluate(sphere.E_Z), 2.0)
        self.assertEqual(sphere_grid.constant(3.0).evaluate(sphere.E_X), 3.0)


class LuneFluxTest(unittest.TestCase):
    """Unit tests for lune_flux"""

    def testEqualAxes(self):
        """Tests n_a = n_b = field_axis gives the hemisphere flux."""
        axis = sphere.UnitVector(0.1, 0.2, -0.9, normalize=True)
        self.assertAlmostEqual(sphere_grid.lune_flux(axis, axis, axis),
                               math.pi, delta=1e-3)

    def testOrthogonalAxes(self):
        """Tests the quarter-sphere lune."""
        self.assertAlmostEqual(
            sphere_grid.lune_flux(sphere.E_X, sphere.E_Y, sphere.E_X),
            math.pi / 2, delta=1e-3)

    def testAntiparallel(self):
        """Tests the empty lune."""
        self.assertEqual(
            sphere_grid.lune_flux(sphere.E_Z, -sphere.E_Z, sphere.E_Z), 0.0)

    def testRandomPairs(self):
        """Tests flux / pi against (1 + a.b) / 2 for random pairs."""
        vectors = sphere.random_unit_vectors(rng_stream.RngStream(21), 10)
        for n_a, n_b in zip(vectors[0::2], vectors[1::2]):
            value = sphere_grid.lune_flux(n_a, n_b, n_a, n_theta=256)
            self.assertAlmostEqual(value / math.pi, (1 + n_a.dot(n_b)) / 2,
                                   delta=2e-3)


if __name__ == "__main__":
    unittest.main()
