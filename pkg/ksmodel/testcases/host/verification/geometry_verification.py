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
from scipy import stats

from ksmodel.runners.host import asserts
from ksmodel.runners.host import base_test
from ksmodel.runners.host import const
from ksmodel.testcases.host.verification import verification_base
from ksmodel.utils.python.geometry import sphere

# KS statistic bound at a false-alarm rate of 1e-4: sqrt(ln(2 / 1e-4) / 2).
_KS_COEFFICIENT = math.sqrt(math.log(2.0 / 1e-4) / 2.0)


class GeometryVerification(verification_base.VerificationTestBase):
    """Unit vectors, rotations and hemisphere samplers."""
    stream_id = 1

    @base_test.invariant("unit norm")
    def testUnitNorms(self):
        n = self.sampleCount(10**5, 10**4)
        points = sphere.sample_uniform_sphere_array(self.getRng(0, 0), n)
        rotation = sphere.rotation_to_pole(self.randomVectors(1, 0, 1)[0])
        self.addMeasurement("orthogonality_error",
                            rotation.orthogonalityError())
        arrays = (
            points,
            sphere.frame_points(
                points,
                sphere.sample_local_cosine_hemisphere(self.getRng(0, 2), n)),
            rotation.apply(points),
        )
        worst = self.recordWorst("max_norm_error", [
            float(np.max(np.abs(np.linalg.norm(a, axis=1) - 1.0)))
            for a in arrays
        ])
        asserts.assertLessEqual(worst, const.UNIT_NORM_TOLERANCE)
        asserts.assertLessEqual(rotation.orthogonalityError(),
                                const.UNIT_NORM_TOLERANCE)

    @base_test.invariant("cosine hemisphere law")
    def testCosineHemisphere(self):
        n = self.sampleCount(10**6, 10**5)
        pole = self.randomVectors(1, 1)[0]
        dots = pole.dot(sphere.sample_cosine_hemisphere_array(
            pole, self.getRng(2), n))
        self.addMeasurement("min_dot", float(dots.min()))
        asserts.assertLess(0.0, float(dots.min()),
                           "sample on or below the equator")
        asserts.assertWithinSigma(float(dots.mean()), 2.0 / 3.0,
                                  math.sqrt(1.0 / 18.0 / n),
                                  self.familySigma(2))
        statistic = stats.kstest(np.clip(dots, 0.0, 1.0),
                                 lambda c: c * c).statistic
        self.addMeasurement("ks_statistic", float(statistic))
        asserts.assertLess(statistic, _KS_COEFFICIENT / math.sqrt(n))

    @base_test.invariant("rotation invariance")
    def testRotatedUniformSamples(self):
        n = self.sampleCount(10**6, 10**5)
        rotation = sphere.rotation_to_pole(self.randomVectors(1, 3)[0])
        points = rotation.apply(
            sphere.sample_uniform_sphere_array(self.getRng(4), n))
        means = points.mean(axis=0)
        self.addMeasurement("means", [float(m) for m in means])
        band = self.familySigma(3)
        for mean in means:
            asserts.assertWithinSigma(float(mean), 0.0,
                                      math.sqrt(1.0 / 3.0 / n), band)
