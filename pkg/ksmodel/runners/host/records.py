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
"""This module is where all the record definitions and record containers live.

Records carry no wall-clock times, so a verification report depends only on
the run configuration.
"""

import json
import logging

from ksmodel.runners.host import signals


class TestResultEnums(object):
    """Enums used for TestResultRecord class.

    Includes the tokens to mark test result with, and the string names for each
    field in TestResultRecord.
    """

    RECORD_NAME = "Test Name"
    RECORD_CLASS = "Test Class"
    RECORD_INVARIANT = "Invariant"
    RECORD_RESULT = "Result"
    RECORD_MEASUREMENTS = "Measurements"
    RECORD_EXTRAS = "Extras"
    RECORD_EXTRA_ERRORS = "Extra Errors"
    RECORD_DETAILS = "Details"
    RECORD_TABLES = "Tables"
    TEST_RESULT_PASS = "PASS"
    TEST_RESULT_FAIL = "FAIL"
    TEST_RESULT_SKIP = "SKIP"
    TEST_RESULT_ERROR = "ERROR"


class TestResultRecord(object):
    """A record that holds the information of one verification check.

    Attributes:
        test_name: A string representing the name of the check.
        test_class: A string, the suite the check belongs to.
        invariant: A string, the human-readable invariant label, or None.
        result: Test result, PASS/FAIL/SKIP/ERROR.
        measurements: A dict of measured values, name -> json value.
        extras: User defined extra information of the test result.
        details: A string explaining the details of the test case.
        tables: A dict of 2-dimensional lists containing tabular results.
    """

    def __init__(self, t_name, t_class=None, invariant=None):
        self.test_name = t_name
        self.test_class = t_class
        self.invariant = invariant
        self.result = None
        self.measurements = {}
        self.extras = None
        self.details = None
        self.extra_errors = {}
        self.tables = {}

    @property
    def fullname(self):
        return "%s.%s" % (self.test_class, self.test_name)

    def isSameTestCase(self, record):
        return self.fullname == record.fullname

    def _testEnd(self, result, e):
        """Class internal function to signal the end of a check.

        Args:
            result: One of the TEST_RESULT enums in TestResultEnums.
            e: A test termination signal (usually an exception object). It can
                be any exception instance or of any subclass of
                ksmodel.runners.host.signals.TestSignal.
        """
        self.result = result
        if isinstance(e, signals.TestSignal):
            self.details = e.details
            self.extras = e.extras
        elif e:
            self.details = str(e)

    def testPass(self, e=None):
        self._testEnd(TestResultEnums.TEST_RESULT_PASS, e)

    def testFail(self, e=None):
        """To mark the check as failed in this record.

        Args:
            e: An exception object, usually a signals.TestFailure.
        """
        self._testEnd(TestResultEnums.TEST_RESULT_FAIL, e)

    def testSkip(self, e=None):
        self._testEnd(TestResultEnums.TEST_RESULT_SKIP, e)

    def testError(self, e=None):
        self._testEnd(TestResultEnums.TEST_RESULT_ERROR, e)

    def addError(self, tag, e):
        """Add extra error happened during a check and mark the result as
        ERROR.

        Args:
            tag: A string describing where this error came from, e.g. 'onPass'.
            e: An exception object.
        """
        self.result = TestResultEnums.TEST_RESULT_ERROR
        self.extra_errors[tag] = str(e)

    def addMeasurement(self, name, value):
        """Stores a measured value so it is reported whatever the outcome.

        Args:
            name: string.
            value: A json-serializable value; numpy scalars are converted.
        """
        if hasattr(value, "item"):
            value = value.item()
        if name in self.measurements:
            logging.warning("Overwrite measurement %s", name)
        self.measurements[name] = value

    def addTable(self, name, rows):
        """Add a table as part of the test result.

        Args:
            name: The table name.
            rows: A 2-dimensional list which contains the data.
        """
        if name in self.tables:
            logging.warning("Overwrite table %s", name)
        self.tables[name] = rows

    def __str__(self):
        d = self.getDict()
        return ", ".join("%s = %s" % (k, v) for k, v in sorted(d.items()))

    def __repr__(self):
        """This returns a short string representation of the record."""
        return "%s %s %s" % (self.test_class, self.test_name, self.result)

    def getDict(self):
        """Gets a dictionary representating the content of this class.

        Returns:
            A dictionary representating the content of this class.
        """
        d = {}
        d[TestResultEnums.RECORD_NAME] = self.test_name
        d[TestResultEnums.RECORD_CLASS] = self.test_class
        d[TestResultEnums.RECORD_INVARIANT] = self.invariant
        d[TestResultEnums.RECORD_RESULT] = self.result
        d[TestResultEnums.RECORD_MEASUREMENTS] = self.measurements
        d[TestResultEnums.RECORD_EXTRAS] = self.extras
        d[TestResultEnums.RECORD_DETAILS] = self.details
        d[TestResultEnums.RECORD_EXTRA_ERRORS] = self.extra_errors
        d[TestResultEnums.RECORD_TABLES] = self.tables
        return d

    def jsonString(self):
        return json.dumps(self.getDict(), sort_keys=True)


def _merge_unique_keep_order(*lists):
    seen = set()
    merged = []
    for records in lists:
        for record in records:
            if id(record) not in seen:
                seen.add(id(record))
                merged.append(record)
    return merged


class TestResult(object):
    """A class that contains metrics of a verification run.

    This class is essentially a container of TestResultRecord objects.

    Attributes:
        self.requested: A list of records for checks requested by user.
        self.failed: A list of records for checks failed.
        self.executed: A list of records for checks that were actually executed.
        self.passed: A list of records for checks passed.
        self.skipped: A list of records for checks skipped.
        self.error: A list of records for checks with error result token.
        self.class_errors: A list of strings, the errors that occurred during
                            class setup.
    """

    def __init__(self):
        self.requested = []
        self.failed = []
        self.executed = []
        self.passed = []
        self.skipped = []
        self.error = []
        self.class_errors = []

    def __add__(self, r):
        """Overrides '+' operator for TestResult class.

        The add operator merges two TestResult objects by concatenating all of
        their lists together.

        Args:
            r: another instance of TestResult to be added

        Returns:
            A TestResult instance that's the sum of two TestResult instances.
        """
        if not isinstance(r, TestResult):
            raise TypeError("Operand %s of type %s is not a TestResult." %
                            (r, type(r)))
        r.reportNonExecutedRecord()
        sum_result = TestResult()
        for name in sum_result.__dict__:
            setattr(sum_result, name,
                    list(getattr(self, name)) + list(getattr(r, name)))
        return sum_result

    def getNonPassingRecords(self, non_executed=True, failed=True,
                             skipped=False, error=True):
        """Returns a list of non-passing records.

        Args:
            non_executed: bool, whether to include non-executed results
            failed: bool, whether to include failed results
            skipped: bool, whether to include skipped results
            error: bool, whether to include error results
        """
        return ((self.getNonExecutedRecords() if non_executed else []) +
                (self.failed if failed else []) +
                (self.skipped if skipped else []) +
                (self.error if error else []))

    def getNonExecutedRecords(self):
        """Returns a list of records that were requested but not executed."""
        return [
            requested for requested in self.requested
            if not any(requested.isSameTestCase(executed)
                       for executed in self.executed)
        ]

    def reportNonExecutedRecord(self):
        """Adds an ERROR record for every requested check that did not run."""
        for requested in self.getNonExecutedRecords():
            requested.testError(
                "Unknown error: check requested but not executed.")
            self.executed.append(requested)
            self.error.append(requested)

    def removeRecord(self, record):
        """Removes every record with the same test and class name."""
        for records in (self.failed, self.executed, self.passed,
                        self.skipped, self.error):
            records[:] = [r for r in records if not r.isSameTestCase(record)]

    def addRecord(self, record):
        """Adds a record to the results.

        A record is considered executed once it's added to the test result.
        """
        self.removeRecord(record)
        self.executed.append(record)
        if record.result == TestResultEnums.TEST_RESULT_FAIL:
            self.failed.append(record)
        elif record.result == TestResultEnums.TEST_RESULT_SKIP:
            self.skipped.append(record)
        elif record.result == TestResultEnums.TEST_RESULT_PASS:
            self.passed.append(record)
        else:
            self.error.append(record)

    def failClass(self, class_name, e):
        """Add a record to indicate a suite setup has failed and no check
        in the suite was executed.

        Args:
            class_name: A string that is the name of the failed suite.
            e: An exception object.
        """
        self.class_errors.append("%s: %s" % (class_name, e))
        record = TestResultRecord("setUpClass", class_name)
        record.testError(e)
        self.executed.append(record)
        self.error.append(record)

    def skipClass(self, class_name, reason):
        """Add a record to indicate all checks in the suite are skipped.

        Args:
            class_name: A string that is the name of the skipped suite.
            reason: A string that is the reason for skipping.
        """
        record = TestResultRecord("skipClass", class_name)
        record.testSkip(signals.TestSkip(reason))
        self.executed.append(record)
        self.skipped.append(record)

    @property
    def passedAll(self):
        """True when nothing failed, errored or went unexecuted."""
        return not self.getNonPassingRecords()

    def getDict(self):
        """Returns the verify report document.

        Format:
            {
                "Results": [{<record 1>}, {<record 2>}, ...],
                "Summary": <summary dict>,
                "Class Errors": <string or None>,
                "Passed": <bool>
            }
        """
        records = _merge_unique_keep_order(self.executed, self.failed,
                                           self.passed, self.skipped,
                                           self.error)
        return {
            "Results": [record.getDict() for record in records],
            "Summary": self.summaryDict(),
            "Class Errors": ("\n".join(self.class_errors)
                             if self.class_errors else None),
            "Passed": self.passedAll,
        }

    def jsonString(self):
        return json.dumps(self.getDict(), indent=4, sort_keys=True)

    def summary(self):
        """Gets a string that summarizes the stats of this test result.

        Format of the string is:
            Error <int>, Executed <int>, ...
        """
        l = ["%s %d" % (k, v) for k, v in self.summaryDict().items()]
        # Sort the list so the order is the same every time.
        return ", ".join(sorted(l))

    @property
    def progressStr(self):
        """Gets a string that shows progress, x/n."""
        return "%s/%s" % (len(self.executed) + 1, len(self.requested))

    def summaryDict(self):
        """Gets a dictionary that summarizes the stats of this test result.

        Returns:
            A dictionary with the stats of this test result.
        """
        d = {}
        d["Requested"] = len(self.requested)
        d["Executed"] = len(self.executed)
        d["Passed"] = len(self.passed)
        d["Failed"] = len(self.failed)
        d["Skipped"] = len(self.skipped)
        d["Error"] = len(self.error)
        return d
