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
from ksmodel.testcases.host.verification import verification_base
from ksmodel.utils.python.experiment import event_simulator
from ksmodel.utils.python.geometry import sphere
from ksmodel.utils.python.inequality import inequality_utils
from ksmodel.utils.python.inequality import settings_plan
from ksmodel.utils.python.model import ks_two

CAP_COS = 0.99
CAP_BIAS = 0.01


class ExperimentVerification(verification_base.VerificationTestBase):
    """Event-level simulation and estimation."""
    stream_id = 7

    def _simulate(self, plan, n, key, workers=None):
        workers = self.workers if workers is None else workers
        return event_simulator.run_batches(ks_two.singlet_distribution, plan,
                                           n, self.getRng(*key), workers)

    @base_test.invariant("estimator consistency")
    def testEstimatorConsistency(self):
        settings = self.randomPairs(self.sampleCount(20, 3), 0)
        n = self.sampleCount(10**6, 10**4)
        band = self.familySigma(len(settings))
        for i, (n_a, n_b) in enumerate(settings):
            summary, = event_simulator.estimate_plan(
                self._simulate(settings_plan.single_setting_plan(n_a, n_b),
                               n, (1, i)))
            asserts.assertWithinSigma(summary.correlation, -n_a.dot(n_b),
                                      summary.std_error, band)

    @base_test.invariant("reproducibility")
    def testReproducibility(self):
        plan = settings_plan.standard_chsh_plan()
        n = self.sampleCount(10**5, 10**4)
        runs = [self._simulate(plan, n, (2,), workers)
                for workers in (1, 4)]
        runs.append(self._simulate(plan, n, (2,), 1))
        reference = runs[0]
        for other in runs[1:]:
            asserts.assertEqual(len(other), len(reference))
            for left, right in zip(reference, other):
                asserts.assertTrue(
                    np.array_equal(left.lambda1, right.lambda1) and
                    np.array_equal(left.lambda2, right.lambda2) and
                    np.array_equal(left.outcome_a, right.outcome_a) and
                    np.array_equal(left.outcome_b, right.outcome_b),
                    "event streams differ")
        summaries = [[s.getDict() for s in event_simulator.estimate_plan(run)]
                     for run in runs]
        asserts.assertEqual(summaries[1], summaries[0])

    @base_test.invariant("conditional Malus")
    def testConditionalMalus(self):
        n_a = sphere.E_X
        u0 = sphere.in_plane(0.5)
        batches = self._simulate(
            settings_plan.single_setting_plan(n_a, sphere.E_Z),
            self.sampleCount(10**6, 2 * 10**5), (3,))
        mean, std_error, count = event_simulator.conditional_marginal(
            batches, u0, CAP_COS)
        self.addMeasurement("cap_trials", count)
        asserts.assertAlmostEqual(mean, u0.dot(n_a),
                                  3.0 * std_error + CAP_BIAS)

    @base_test.invariant("CHSH events")
    def testEventChsh(self):
        summaries = event_simulator.estimate_plan(self._simulate(
            settings_plan.standard_chsh_plan(), self.sampleCount(10**6,
                                                                 10**5),
            (4,)))
        value = inequality_utils.chsh_value(
            dict((s.setting_label, s.correlation) for s in summaries))
        std_error = math.sqrt(math.fsum(s.std_error**2 for s in summaries))
        self.addMeasurement("chsh", value)
        self.addMeasurement("std_error", std_error)
        asserts.assertWithinSigma(value, 2.0 * math.sqrt(2.0), std_error)
