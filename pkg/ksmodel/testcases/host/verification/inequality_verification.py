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

import itertools
import math

from ksmodel.runners.host import asserts
from ksmodel.runners.host import base_test
from ksmodel.testcases.host.verification import verification_base
from ksmodel.utils.python.inequality import inequality_utils
from ksmodel.utils.python.inequality import settings_plan
from ksmodel.utils.python.model import ks_two
from ksmodel.utils.python.quantum import qm_reference

EXACT_TOLERANCE = 1e-12
# Upper edge of the violation interval: 2 * asin(1 / pi).
VIOLATION_EDGE_DEG = math.degrees(2.0 * math.asin(1.0 / math.pi))
PEAK_MARGIN = 1.0 / math.pi**2
SCAN_DEGREES = range(1, 90)


class InequalityVerification(verification_base.VerificationTestBase):
    """Dichotomic identities, Leggett-type scans and CHSH."""
    stream_id = 6

    def setUpClass(self):
        self.model = inequality_utils.model_correlation_function(
            ks_two.singlet_distribution)
        self.qm = inequality_utils.qm_correlation_function(
            qm_reference.bell_state(qm_reference.PSI_MINUS))

    @base_test.invariant("dichotomic identity")
    def testDichotomicIdentity(self):
        for a, b in itertools.product((1, -1), repeat=2):
            lower, product, upper = inequality_utils.dichotomic_identity(a, b)
            asserts.assertEqual(lower, product)
            asserts.assertEqual(upper, product)

    @base_test.invariant("subensemble bounds")
    def testSubensembleBounds(self):
        count = self.sampleCount(10**4, 10**3)
        vectors = self.randomVectors(4 * count, 0)
        failures = 0
        for i in range(0, len(vectors), 4):
            lower, mid, upper = inequality_utils.subensemble_bounds(
                *vectors[i:i + 4])
            if not lower <= mid <= upper:
                failures += 1
        self.addMeasurement("quadruples", count)
        self.addMeasurement("failures", failures)
        asserts.assertEqual(failures, 0)

    @base_test.invariant("model matches QM")
    def testModelMatchesQm(self):
        for phi in (math.radians(d) for d in (5, 20, 45, 90, 135)):
            asserts.assertAlmostEqual(
                inequality_utils.leggett_lhs(self.model, phi),
                inequality_utils.leggett_lhs(self.qm, phi), EXACT_TOLERANCE)
        plan = settings_plan.standard_chsh_plan()
        asserts.assertAlmostEqual(
            inequality_utils.chsh_report(self.model, plan).lhs,
            inequality_utils.chsh_report(self.qm, plan).lhs, EXACT_TOLERANCE)

    @base_test.invariant("CHSH")
    def testChsh(self):
        report = inequality_utils.chsh_report(
            self.model, settings_plan.standard_chsh_plan())
        self.addMeasurement("chsh", report.lhs)
        asserts.assertAlmostEqual(report.lhs, 2.0 * math.sqrt(2.0),
                                  EXACT_TOLERANCE)
        asserts.assertTrue(report.violated, "local bound not exceeded")

    @base_test.invariant("Leggett violation")
    def testLeggettViolation(self):
        reports = inequality_utils.leggett_scan(
            self.model, [math.radians(d) for d in SCAN_DEGREES],
            workers=self.workers)
        summary = inequality_utils.summarize_scan(reports)
        self.addMeasurement("summary", summary.getDict())
        self.addTableToResult(
            "scan", [["phi_deg", "lhs", "margin"]] +
            [[d, r.lhs, r.margin] for d, r in zip(SCAN_DEGREES, reports)])
        asserts.assertTrue(summary.n_violations > 0, "no violation found")
        asserts.assertAlmostEqual(summary.last_violation_deg,
                                  VIOLATION_EDGE_DEG, 1.0)
        asserts.assertAlmostEqual(summary.peak_margin, PEAK_MARGIN, 1e-3)

    @base_test.invariant("noncontextual control")
    def testNoncontextualControl(self):
        control = inequality_utils.model_correlation_function(
            ks_two.noncontextual_distribution())
        reports = inequality_utils.leggett_scan(
            control, [math.radians(d) for d in SCAN_DEGREES],
            workers=self.workers)
        summary = inequality_utils.summarize_scan(reports)
        self.addMeasurement("n_violations", summary.n_violations)
        asserts.assertEqual(summary.n_violations, 0)
        asserts.assertFalse(
            inequality_utils.chsh_report(
                control, settings_plan.standard_chsh_plan()).violated,
            "control violates CHSH")
