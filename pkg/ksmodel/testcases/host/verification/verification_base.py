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

from ksmodel.runners.host import base_test
from ksmodel.utils.python.geometry import sphere
from ksmodel.utils.python.quadrature import monte_carlo


class VerificationTestBase(base_test.BaseTestClass):
    """Base class of the verification suites.

    Adds seeded corpora of random settings. Every corpus is drawn from the
    suite's own stream, so selecting checks with a filter does not change
    the cases the remaining checks see.
    """

    def randomVectors(self, count, *key):
        """Returns `count` uniform UnitVectors from the stream of key."""
        return sphere.random_unit_vectors(self.getRng(*key), count)

    def randomPairs(self, count, *key):
        vectors = self.randomVectors(2 * count, *key)
        return list(zip(vectors[0::2], vectors[1::2]))

    def familySigma(self, n_checks):
        """Band multiple for n_checks statistical checks run together."""
        return monte_carlo.family_sigma(n_checks)

    def recordWorst(self, name, deviations):
        """Adds the largest deviation as a measurement and returns it."""
        worst = max(deviations) if deviations else 0.0
        self.addMeasurement(name, float(worst))
        return worst
