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
"""Deterministic JSON and CSV report files.

Every JSON document is checked against its published schema under
ksmodel/schemas/ before it is written.
"""

import csv
import functools
import io
import json
import logging
import os

import jsonschema

from ksmodel.runners.host import errors
from ksmodel.runners.host import utils

SCHEMA_DIR = os.path.normpath(
    os.path.join(os.path.dirname(os.path.abspath(__file__)), os.pardir,
                 os.pardir, os.pardir, "schemas"))

SCHEMA_VERIFY_REPORT = "verify_report"
SCHEMA_CORRELATION = "correlation"
SCHEMA_INEQUALITY = "inequality"
SCHEMA_RUN_SUMMARY = "run_summary"


@functools.lru_cache(maxsize=None)
def _loadSchema(schema_name):
    path = os.path.join(SCHEMA_DIR, "%s.schema.json" % schema_name)
    with open(path, "r") as f:
        return json.load(f)


def validateJson(document, schema_name):
    """Validates a document against ksmodel/schemas/<name>.schema.json.

    Raises:
        jsonschema.ValidationError: the document does not match.
    """
    jsonschema.validate(instance=document, schema=_loadSchema(schema_name))


def jsonString(document):
    """Serializes with indent 4, sorted keys and a trailing newline."""
    return json.dumps(document, indent=4, sort_keys=True) + "\n"


def csvString(header, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


class ReportFileUtil(object):
    """Utility class for report file saving.

    Attributes:
        _destination_dir: string, directory relative file names resolve
                          against; None keeps them as given.
    """

    def __init__(self, destination_dir=None):
        self._destination_dir = (utils.abs_path(destination_dir)
                                 if destination_dir is not None else None)

    def _ConvertReportPath(self, file_name):
        """Returns the destination path of a report file."""
        if self._destination_dir is None or os.path.isabs(file_name):
            return utils.abs_path(file_name)
        return os.path.join(self._destination_dir, file_name)

    def _PushReportFile(self, text, dest_path):
        parent_dir = os.path.dirname(dest_path)
        try:
            if parent_dir:
                utils.create_dir(parent_dir)
            with open(dest_path, "w", newline="") as f:
                f.write(text)
        except (IOError, OSError) as e:
            raise errors.KsIOError(dest_path, e.strerror or str(e))
        logging.info("Wrote report %s", dest_path)
        return dest_path

    def SaveJson(self, document, file_name, schema_name=None):
        """Validates and writes a JSON report.

        Args:
            document: a json-serializable object.
            file_name: string, file name or path.
            schema_name: string, the schema to validate against, or None.

        Returns:
            string, the destination path.

        Raises:
            errors.KsIOError: the file can not be written.
        """
        if schema_name:
            validateJson(document, schema_name)
        return self._PushReportFile(jsonString(document),
                                    self._ConvertReportPath(file_name))

    def SaveCsv(self, header, rows, file_name):
        """Writes a CSV report with a header row."""
        return self._PushReportFile(csvString(header, rows),
                                    self._ConvertReportPath(file_name))
