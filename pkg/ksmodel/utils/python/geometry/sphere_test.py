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
from scipy import stats

from ksmodel.runners.host import errors
from ksmodel.utils.python.geometry import rng_stream
from ksmodel.utils.python.geometry import sphere

N_SAMPLES = 10**6


class UnitVectorTest(unittest.TestCase):
    """Unit tests for UnitVector and spherical coordinates"""

    def testFromSpherical(self):
        """Tests the standard embedding at the poles and on the equator."""
        np.testing.assert_allclose(
            sphere.from_spherical(0.0, 0.0).asArray(), [0, 0, 1], atol=1e-15)
        np.testing.assert_allclose(
            sphere.from_spherical(math.pi / 2, 0.0).asArray(), [1, 0, 0],
            atol=1e-15)
        np.testing.assert_allclose(
            sphere.from_spherical(math.pi / 2, math.pi / 2).asArray(),
            [0, 1, 0], atol=1e-15)

    def testFromSphericalOutOfRange(self):
        """Tests that out-of-range angles are rejected."""
        with self.assertRaises(errors.GeometryError):
            sphere.from_spherical(-0.1, 0.0)
        with self.assertRaises(errors.GeometryError):
            sphere.from_spherical(math.pi + 0.1, 0.0)
        with self.assertRaises(errors.GeometryError):
            sphere.from_spherical(1.0, 2 * math.pi)

    def testToSphericalInverts(self):
        """Tests that to_spherical inverts from_spherical."""
        vector = sphere.from_spherical(1.1, 4.0)
        theta, phi = sphere.to_spherical(vector)
        self.assertAlmostEqual(theta, 1.1, places=12)
        self.assertAlmostEqual(phi, 4.0, places=12)

    def testNonUnitRejected(self):
        """Tests that a non-unit vector needs normalize=True."""
        with self.assertRaises(errors.GeometryError):
            sphere.UnitVector(1.0, 1.0, 0.0)
        with self.assertRaises(errors.GeometryError):
            sphere.UnitVector(0.0, 0.0, 0.0, normalize=True)
        with self.assertRaises(errors.GeometryError):
            sphere.UnitVector(float("nan"), 0.0, 1.0, normalize=True)
        vector = sphere.UnitVector(3.0, 0.0, 4.0, normalize=True)
        self.assertAlmostEqual(vector.x, 0.6, places=15)
        self.assertAlmostEqual(vector.z, 0.8, places=15)

    def testImmutable(self):
        """Tests that the backing array cannot be written."""
        with self.assertRaises(ValueError):
            sphere.E_Z.asArray()[0] = 1.0

    def testEqualityAndNegation(self):
        """Tests ==, hashing and unary minus."""
        self.assertEqual(-sphere.E_Z, sphere.UnitVector(0.0, 0.0, -1.0))
        self.assertEqual(len({sphere.E_X, sphere.UnitVector(1, 0, 0)}), 1)
        self.assertNotEqual(sphere.E_X, sphere.E_Y)

    def testInPlane(self):
        """Tests polarizer directions measured from +z toward +x."""
        self.assertTrue(sphere.in_plane(0.0).isClose(sphere.E_Z))
        self.assertTrue(sphere.in_plane(math.pi / 2).isClose(sphere.E_X))
        self.assertTrue(
            sphere.in_plane(math.pi / 2, sphere.E_Z,
                            sphere.E_Y).isClose(sphere.E_Y))
        with self.assertRaises(errors.GeometryError):
            sphere.in_plane(0.1, sphere.E_Z, sphere.E_Z)

    def testHeaviside(self):
        """Tests Theta(0) = 1."""
        np.testing.assert_array_equal(
            sphere.heaviside(np.array([-1.0, 0.0, -0.0, 2.0])),
            [0.0, 1.0, 1.0, 1.0])


class RotationTest(unittest.TestCase):
    """Unit tests for rotation_to_pole"""

    def testNorthPoleIsIdentity(self):
        """Tests that the north pole yields the identity."""
        rotation = sphere.rotation_to_pole(sphere.E_Z)
        np.testing.assert_array_equal(rotation.matrix, np.eye(3))

    def testSouthPole(self):
        """Tests the rotation by pi about the x axis for the south pole."""
        rotation = sphere.rotation_to_pole(-sphere.E_Z)
        np.testing.assert_array_equal(rotation.matrix,
                                      np.diag([1.0, -1.0, -1.0]))

    def testRandomPoles(self):
        """Tests orthogonality, orientation and the pole image."""
        rng = rng_stream.RngStream(3)
        for pole in sphere.random_unit_vectors(rng, 200):
            rotation = sphere.rotation_to_pole(pole)
            self.assertLess(rotation.orthogonalityError(), 1e-12)
            self.assertAlmostEqual(rotation.determinant(), 1.0, delta=1e-12)
            image = rotation.rotate(sphere.E_Z)
            self.assertAlmostEqual(image.dot(pole), 1.0, delta=1e-12)

    def testFramePointsMatchesRotation(self):
        """Tests that the per-row frame agrees with the matrix form."""
        rng = rng_stream.RngStream(4)
        poles = sphere.sample_uniform_sphere_array(rng, 20)
        local = sphere.sample_uniform_sphere_array(rng, 20)
        world = sphere.frame_points(poles, local)
        for pole, point, expected in zip(poles, local, world):
            rotation = sphere.rotation_to_pole(
                sphere.UnitVector.fromArray(pole, normalize=True))
            np.testing.assert_allclose(rotation.apply(point), expected,
                                       atol=1e-12)

    def testUniformInvariantUnderRotation(self):
        """Tests that rotated uniform samples keep zero mean."""
        rng = rng_stream.RngStream(5)
        pole = sphere.UnitVector(1.0, -2.0, 0.5, normalize=True)
        rotated = sphere.rotation_to_pole(pole).apply(
            sphere.sample_uniform_sphere_array(rng, N_SAMPLES))
        sigma = (1.0 / math.sqrt(3.0)) / math.sqrt(N_SAMPLES)
        for mean in rotated.mean(axis=0):
            self.assertLess(abs(mean), 3 * sigma)


class SamplerTest(unittest.TestCase):
    """Statistical tests of the seeded samplers"""

    def testUniformSphereMoments(self):
        """Tests first moments, <z^2> and the hemisphere fraction."""
        points = sphere.sample_uniform_sphere_array(
            rng_stream.RngStream(0), N_SAMPLES)
        np.testing.assert_allclose(np.sum(points * points, axis=1), 1.0,
                                   atol=1e-12)
        sigma = (1.0 / math.sqrt(3.0)) / math.sqrt(N_SAMPLES)
        for mean in points.mean(axis=0):
            self.assertLess(abs(mean), 3 * sigma)
        z2_sigma = math.sqrt(4.0 / 45.0) / math.sqrt(N_SAMPLES)
        self.assertLess(abs(np.mean(points[:, 2]**2) - 1.0 / 3.0),
                        3 * z2_sigma)
        fraction = np.mean(points[:, 2] >= 0.0)
        self.assertLess(abs(fraction - 0.5), 3 * 0.5 / math.sqrt(N_SAMPLES))

    def testCosineHemisphere(self):
        """Tests support, mean of v.pole and the c^2 CDF law."""
        pole = sphere.UnitVector(0.3, -0.4, 0.5, normalize=True)
        points = sphere.sample_cosine_hemisphere_array(
            pole, rng_stream.RngStream(1), N_SAMPLES)
        dots = pole.dot(points)
        self.assertTrue(np.all(dots >= 0.0))
        sigma = math.sqrt(1.0 / 18.0) / math.sqrt(N_SAMPLES)
        self.assertLess(abs(np.mean(dots) - 2.0 / 3.0), 3 * sigma)
        statistic = stats.kstest(np.clip(dots, 0.0, 1.0),
                                 lambda c: c * c).statistic
        self.assertLess(statistic, 0.002)

    def testUniformHemisphereSupport(self):
        """Tests that hemisphere samples are strictly inside."""
        pole = -sphere.E_Y
        points = sphere.sample_uniform_hemisphere_array(
            pole, rng_stream.RngStream(2), 10000)
        self.assertTrue(np.all(pole.dot(points) > 0.0))
        self.assertLess(abs(np.mean(pole.dot(points)) - 0.5), 0.02)

    def testScalarSamplers(self):
        """Tests the single-vector samplers."""
        rng = rng_stream.RngStream(9)
        vector = sphere.sample_uniform_sphere(rng)
        self.assertIsInstance(vector, sphere.UnitVector)
        sample = sphere.sample_cosine_hemisphere(sphere.E_X, rng)
        self.assertGreaterEqual(sample.dot(sphere.E_X), 0.0)

    def testReproducible(self):
        """Tests that equal streams give equal samples."""
        first = sphere.sample_uniform_sphere_array(rng_stream.RngStream(8), 10)
        second = sphere.sample_uniform_sphere_array(rng_stream.RngStream(8),
                                                    10)
        np.testing.assert_array_equal(first, second)


if __name__ == "__main__":
    unittest.main()
