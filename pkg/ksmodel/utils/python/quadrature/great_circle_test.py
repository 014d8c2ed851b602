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

from ksmodel.runners.host import errors
from ksmodel.utils.python.geometry import rng_stream
from ksmodel.utils.python.geometry import sphere
from ksmodel.utils.python.quadrature import great_circle
from ksmodel.utils.python.quadrature import sphere_grid


class GreatCircleTest(unittest.TestCase):
    """Unit tests for great_circle module"""

    def setUp(self):
        """Builds a fixed pair of settings."""
        self.n_a = sphere.UnitVector(0.4, -0.2, 0.7, normalize=True)
        self.n_b = sphere.UnitVector(-0.6, 0.3, 0.1, normalize=True)

    def testCircumference(self):
        """Tests that g = 1 gives 2 pi."""
        value = great_circle.line_integral_great_circle(
            self.n_a, lambda r, t: 1.0, 16)
        self.assertAlmostEqual(value, 2 * math.pi, delta=1e-10)

    def testBivectorEqualsPole(self):
        """Tests that r x dr/ds equals the pole along its equator."""
        value = great_circle.line_integral_great_circle(
            self.n_a, great_circle.bivector_integrand(self.n_a), 32)
        self.assertAlmostEqual(value, 2 * math.pi, delta=1e-10)

    def testBivectorProjection(self):
        """Tests the constant-bivector closed form 2 pi a.b."""
        value = great_circle.line_integral_great_circle(
            self.n_a, great_circle.bivector_integrand(self.n_b), 32)
        self.assertAlmostEqual(value, 2 * math.pi * self.n_a.dot(self.n_b),
                               delta=1e-8)

    def testUnitTangents(self):
        """Tests that the arc-length parameterization has unit speed."""
        value = great_circle.line_integral_great_circle(
            self.n_b, lambda r, t: (t * t).sum(axis=1) + (r * t).sum(axis=1),
            64)
        self.assertAlmostEqual(value, 2 * math.pi, delta=1e-10)

    def testTooFewSteps(self):
        """Tests the minimum step count."""
        with self.assertRaises(errors.IntegrationError):
            great_circle.line_integral_great_circle(self.n_a,
                                                    lambda r, t: 1.0, 8)

    def testArc(self):
        """Tests the arc length and the start-point check."""
        start = sphere.rotation_to_pole(self.n_a).frameAxes()[0]
        self.assertAlmostEqual(
            great_circle.line_integral_arc(self.n_a, start, 1.25,
                                           lambda r, t: 1.0, 16),
            1.25, delta=1e-12)
        with self.assertRaises(errors.GeometryError):
            great_circle.line_integral_arc(self.n_a, self.n_a, 1.0,
                                           lambda r, t: 1.0, 16)

    def testHemisphereContourFlux(self):
        """Tests both orientations of the hemisphere boundary."""
        north = great_circle.hemisphere_contour_flux(self.n_a, 1, self.n_b)
        south = great_circle.hemisphere_contour_flux(self.n_a, -1, self.n_b)
        self.assertAlmostEqual(north, math.pi * self.n_a.dot(self.n_b),
                               delta=1e-10)
        self.assertAlmostEqual(south, -north, delta=1e-10)
        with self.assertRaises(errors.DichotomicValueError):
            great_circle.hemisphere_contour_flux(self.n_a, 0, self.n_b)

    def testLuneContourMatchesClosedForm(self):
        """Tests the Stokes route against (1 + a.b) / 2."""
        vectors = sphere.random_unit_vectors(rng_stream.RngStream(12), 40)
        for n_a, n_b in zip(vectors[0::2], vectors[1::2]):
            value = great_circle.lune_contour_flux(n_a, n_b, n_a) / math.pi
            self.assertAlmostEqual(value, (1 + n_a.dot(n_b)) / 2, delta=1e-10)

    def testLuneContourMatchesSurface(self):
        """Tests the contour route against surface quadrature."""
        field = sphere.UnitVector(0.0, 1.0, 1.0, normalize=True)
        contour = great_circle.lune_contour_flux(self.n_a, self.n_b, field)
        surface = sphere_grid.lune_flux(self.n_a, self.n_b, field,
                                        n_theta=256)
        self.assertAlmostEqual(contour, surface, delta=2e-3)

    def testLuneContourDegenerate(self):
        """Tests equal and antiparallel hemispheres."""
        self.assertAlmostEqual(
            great_circle.lune_contour_flux(self.n_a, self.n_a, self.n_a),
            math.pi, delta=1e-10)
        self.assertEqual(
            great_circle.lune_contour_flux(self.n_a, -self.n_a, self.n_a),
            0.0)


if __name__ == "__main__":
    unittest.main()
