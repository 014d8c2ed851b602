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
import os
import shutil
import tempfile
import unittest

import jsonschema
import mock

from ksmodel.runners.host import errors
from ksmodel.utils.python.reporting import report_file_utils


def _summary(label="ab"):
    return {
        "setting_label": label,
        "n_trials": 4,
        "counts": {"pp": 1, "pm": 1, "mp": 1, "mm": 1},
        "correlation": 0.0,
        "std_error": 1.0,
        "mass": 4.0,
        "seed": 7,
    }


class ReportFileUtilsTest(unittest.TestCase):
    """Unit tests for report_file_utils module"""

    def setUp(self):
        """Creates a scratch destination directory."""
        self.tmp_dir = tempfile.mkdtemp()
        self.util = report_file_utils.ReportFileUtil(self.tmp_dir)

    def tearDown(self):
        shutil.rmtree(self.tmp_dir)

    def testConvertReportPath(self):
        """Tests relative and absolute destinations."""
        self.assertEqual(self.util._ConvertReportPath("a.json"),
                         os.path.join(self.tmp_dir, "a.json"))
        self.assertEqual(self.util._ConvertReportPath("/x/y.json"),
                         "/x/y.json")

    def testJsonStringIsDeterministic(self):
        """Tests sorted keys, indent 4 and the trailing newline."""
        text = report_file_utils.jsonString({"b": 1, "a": [1, 2]})
        self.assertEqual(text, '{\n    "a": [\n        1,\n        2\n    ],'
                         '\n    "b": 1\n}\n')

    def testSaveJsonValidates(self):
        """Tests that a valid document is written and read back."""
        path = self.util.SaveJson([_summary()], "summary.json",
                                  report_file_utils.SCHEMA_RUN_SUMMARY)
        with open(path) as f:
            self.assertEqual(json.load(f), [_summary()])

    def testSaveJsonRejectsInvalidDocument(self):
        """Tests that a schema violation propagates and nothing is written."""
        document = [_summary()]
        document[0]["counts"]["pp"] = -1
        with self.assertRaises(jsonschema.ValidationError):
            self.util.SaveJson(document, "summary.json",
                               report_file_utils.SCHEMA_RUN_SUMMARY)
        self.assertFalse(
            os.path.exists(os.path.join(self.tmp_dir, "summary.json")))

    def testSaveCsv(self):
        """Tests the CSV header and rows."""
        path = self.util.SaveCsv(["phi_deg", "lhs"], [[1.0, 3.9], [2.0, 3.8]],
                                 "scan.csv")
        with open(path) as f:
            self.assertEqual(f.read(), "phi_deg,lhs\n1.0,3.9\n2.0,3.8\n")

    def testCreatesParentDirectories(self):
        """Tests that missing parent directories are created."""
        path = self.util.SaveCsv(["x"], [], os.path.join("sub", "x.csv"))
        self.assertTrue(os.path.isfile(path))

    def testWriteFailure(self):
        """Tests that an OS error becomes KsIOError with the path."""
        with mock.patch("ksmodel.utils.python.reporting.report_file_utils."
                        "open", create=True, side_effect=OSError(13,
                                                                 "denied")):
            with self.assertRaises(errors.KsIOError) as context:
                self.util.SaveCsv(["x"], [], "x.csv")
        self.assertEqual(context.exception.path,
                         os.path.join(self.tmp_dir, "x.csv"))

    def testAllSchemasLoad(self):
        """Tests that every published schema is itself valid."""
        for name in (report_file_utils.SCHEMA_VERIFY_REPORT,
                     report_file_utils.SCHEMA_CORRELATION,
                     report_file_utils.SCHEMA_INEQUALITY,
                     report_file_utils.SCHEMA_RUN_SUMMARY):
            schema = report_file_utils._loadSchema(name)
            jsonschema.Draft7Validator.check_schema(schema)


if __name__ == "__main__":
    unittest.main()
