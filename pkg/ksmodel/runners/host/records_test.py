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

import json
import unittest

import numpy as np

from ksmodel.runners.host import records
from ksmodel.runners.host import signals

E = records.TestResultEnums


def _record(name, result, invariant=None):
    record = records.TestResultRecord(name, "SuiteTest", invariant)
    if result == E.TEST_RESULT_PASS:
        record.testPass()
    elif result == E.TEST_RESULT_FAIL:
        record.testFail(signals.TestFailure("off by one", {"delta": 1}))
    elif result == E.TEST_RESULT_SKIP:
        record.testSkip(signals.TestSkip("quick mode"))
    else:
        record.testError(ValueError("boom"))
    return record


class TestResultRecordTest(unittest.TestCase):
    """Unit tests for TestResultRecord"""

    def testFailureCarriesSignalDetails(self):
        """Tests details and extras copied from the signal."""
        record = _record("testA", E.TEST_RESULT_FAIL, "Malus")
        d = record.getDict()
        self.assertEqual(d[E.RECORD_RESULT], "FAIL")
        self.assertEqual(d[E.RECORD_DETAILS], "off by one")
        self.assertEqual(d[E.RECORD_EXTRAS], {"delta": 1})
        self.assertEqual(d[E.RECORD_INVARIANT], "Malus")

    def testMeasurements(self):
        """Tests that numpy scalars are stored as plain numbers."""
        record = _record("testA", E.TEST_RESULT_PASS)
        record.addMeasurement("mass", np.float64(4.0))
        record.addMeasurement("n", np.int64(3))
        self.assertEqual(record.measurements, {"mass": 4.0, "n": 3})
        self.assertIs(type(record.measurements["mass"]), float)
        json.loads(record.jsonString())

    def testAddErrorMarksError(self):
        """Tests that an error in a procedure function overrides PASS."""
        record = _record("testA", E.TEST_RESULT_PASS)
        record.addError("onPass", RuntimeError("hook failed"))
        self.assertEqual(record.result, "ERROR")
        self.assertEqual(record.extra_errors, {"onPass": "hook failed"})


class TestResultTest(unittest.TestCase):
    """Unit tests for TestResult"""

    def testSummary(self):
        """Tests the counts and the Passed flag."""
        result = records.TestResult()
        for name, kind in (("testA", E.TEST_RESULT_PASS),
                           ("testB", E.TEST_RESULT_SKIP)):
            result.requested.append(records.TestResultRecord(name,
                                                             "SuiteTest"))
            result.addRecord(_record(name, kind))
        self.assertEqual(result.summaryDict(), {
            "Requested": 2,
            "Executed": 2,
            "Passed": 1,
            "Failed": 0,
            "Skipped": 1,
            "Error": 0,
        })
        self.assertTrue(result.passedAll)
        result.addRecord(_record("testC", E.TEST_RESULT_FAIL))
        self.assertFalse(result.passedAll)

    def testAddRecordReplacesSameCheck(self):
        """Tests that re-adding a check replaces the previous record."""
        result = records.TestResult()
        result.addRecord(_record("testA", E.TEST_RESULT_FAIL))
        result.addRecord(_record("testA", E.TEST_RESULT_PASS))
        self.assertEqual(len(result.executed), 1)
        self.assertEqual(len(result.failed), 0)
        self.assertEqual(len(result.passed), 1)

    def testAddMergesAndReportsNonExecuted(self):
        """Tests '+' and the ERROR record for a check that never ran."""
        first = records.TestResult()
        first.addRecord(_record("testA", E.TEST_RESULT_PASS))
        second = records.TestResult()
        second.requested.append(records.TestResultRecord("testB",
                                                         "SuiteTest"))
        total = first + second
        self.assertEqual(len(total.executed), 2)
        self.assertEqual(len(total.error), 1)
        self.assertFalse(total.passedAll)
        with self.assertRaises(TypeError):
            first + 1

    def testFailClass(self):
        """Tests that a setup failure is reported."""
        result = records.TestResult()
        result.failClass("SuiteTest", RuntimeError("no setup"))
        document = result.getDict()
        self.assertEqual(document["Class Errors"], "SuiteTest: no setup")
        self.assertFalse(document["Passed"])

    def testReportIsDeterministic(self):
        """Tests that equal runs serialize to identical JSON."""
        texts = []
        for _ in range(2):
            result = records.TestResult()
            record = _record("testA", E.TEST_RESULT_PASS, "mass=4")
            record.addMeasurement("mass", 4.0)
            result.addRecord(record)
            texts.append(result.jsonString())
        self.assertEqual(texts[0], texts[1])
        self.assertEqual(
            json.loads(texts[0])["Results"][0]["Measurements"], {"mass": 4.0})


if __name__ == "__main__":
    unittest.main()
