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
from ksmodel.utils.python.quantum import qm_reference

BELL_TABLE = {
    qm_reference.PSI_MINUS: (-1.0, -1.0, -1.0),
    qm_reference.PSI_PLUS: (1.0, 1.0, -1.0),
    qm_reference.PHI_PLUS: (1.0, -1.0, 1.0),
    qm_reference.PHI_MINUS: (-1.0, 1.0, 1.0),
}
EXACT_TOLERANCE = 1e-12


class QmReferenceVerification(verification_base.VerificationTestBase):
    """The quantum-mechanical correlation oracle."""
    stream_id = 4

    def randomState(self, *key):
        values = self.getRng(*key).uniform(8) - 0.5
        return qm_reference.TwoQubitState(values[:4] + 1j * values[4:],
                                          normalize=True)

    def generateBellTable(self):
        self.runGeneratedTests(self._checkBellTensor, sorted(BELL_TABLE),
                               name_func=lambda kind: "testBellTensor_" +
                               kind,
                               invariant_label="Bell-state table")

    def _checkBellTensor(self, kind):
        tensor = qm_reference.bell_tensor(kind)
        self.addMeasurement("diagonal", list(tensor.diagonal()))
        deviation = float(np.max(np.abs(tensor.matrix -
                                        np.diag(BELL_TABLE[kind]))))
        asserts.assertAlmostEqual(deviation, 0.0, EXACT_TOLERANCE)

    @base_test.invariant("|E| <= 1")
    def testCorrelationBound(self):
        count = self.sampleCount(100, 10)
        settings = self.randomPairs(count, 0)
        worst = 0.0
        largest_singular = 0.0
        for i, (n_a, n_b) in enumerate(settings):
            tensor = qm_reference.correlation_tensor(self.randomState(1, i))
            worst = max(worst, abs(tensor.correlation(n_a, n_b)))
            largest_singular = max(largest_singular,
                                   float(tensor.singularValues()[0]))
        self.addMeasurement("max_abs_correlation", worst)
        self.addMeasurement("max_singular_value", largest_singular)
        asserts.assertLessEqual(largest_singular, 1.0 + EXACT_TOLERANCE)
        asserts.assertLessEqual(worst, 1.0 + EXACT_TOLERANCE)

    @base_test.invariant("bilinearity")
    def testBilinearity(self):
        tensor = qm_reference.correlation_tensor(self.randomState(2))
        a1, a2, b = self.randomVectors(3, 3)
        combined = tensor.matrix.dot(b.asArray()).dot(
            0.3 * a1.asArray() - 0.7 * a2.asArray())
        separate = (0.3 * tensor.correlation(a1, b) -
                    0.7 * tensor.correlation(a2, b))
        self.addMeasurement("deviation", abs(combined - separate))
        asserts.assertAlmostEqual(combined, separate, EXACT_TOLERANCE)

    @base_test.invariant("mixtures")
    def testMixtureTensor(self):
        states = [self.randomState(4, i) for i in range(3)]
        weights = (0.2, 0.5, 0.3)
        mixed = qm_reference.mixture_tensor(list(zip(weights, states)))
        expected = sum(w * qm_reference.correlation_tensor(s).matrix
                       for w, s in zip(weights, states))
        deviation = float(np.max(np.abs(mixed.matrix - expected)))
        self.addMeasurement("deviation", deviation)
        asserts.assertAlmostEqual(deviation, 0.0, EXACT_TOLERANCE)
