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
import os
import shutil
import tempfile
import unittest

from ksmodel.runners.host import config_parser
from ksmodel.runners.host import errors
from ksmodel.runners.host import keys

K = keys.ConfigKeys


class ConfigParserTest(unittest.TestCase):
    """Unit tests for config_parser module"""

    def setUp(self):
        """Creates a scratch directory for config files."""
        self.tmp_dir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmp_dir)

    def _writeConfig(self, text):
        path = os.path.join(self.tmp_dir, "run.cfg")
        with open(path, "w") as f:
            f.write(text)
        return path

    def testDefaults(self):
        """Tests the documented defaults."""
        config = config_parser.build_run_config()
        self.assertEqual(config[K.KEY_METHOD], "closed")
        self.assertEqual(config[K.KEY_N_THETA], 512)
        self.assertEqual(config[K.KEY_N_SAMPLES], 1000000)
        self.assertEqual(config[K.KEY_TRIALS], 1000000)
        self.assertEqual(config[K.KEY_SEED], 0)
        self.assertEqual(config[K.KEY_WORKERS], 1)
        self.assertFalse(config[K.KEY_QUICK])
        self.assertEqual(config[K.KEY_STATE], "singlet")
        self.assertEqual(config[K.KEY_BOUND], "two_plane")

    def testDefaultConfigIsACopy(self):
        """Tests that callers can not alter the defaults."""
        config_parser.GetDefaultConfig()[K.KEY_INCLUDE_FILTER].append("x")
        self.assertEqual(config_parser.GetDefaultConfig()[K.KEY_INCLUDE_FILTER],
                         [])

    def testLoadConfigFile(self):
        """Tests comments, blank lines, whitespace and coercion."""
        path = self._writeConfig("# a comment\n\n"
                                 "  trials = 1e6  \n"
                                 "quick=yes # trailing comment\n"
                                 "phi_step = 0.5\n"
                                 "include_filter = Malus*, Mass*\n"
                                 "state = psi+\n")
        values = config_parser.load_config_file(path)
        self.assertEqual(values, {
            K.KEY_TRIALS: 1000000,
            K.KEY_QUICK: True,
            K.KEY_PHI_STEP: 0.5,
            K.KEY_INCLUDE_FILTER: ["Malus*", "Mass*"],
            K.KEY_STATE: "psi+",
        })

    def testMalformedLinesNameTheLine(self):
        """Tests missing '=', unknown keys and bad values."""
        for text in ("seed 3\n", "\ncolour = red\n", "\n\ntrials = 2.5\n"):
            path = self._writeConfig(text)
            with self.assertRaises(errors.USERError) as context:
                config_parser.load_config_file(path)
            line_number = text.count("\n")
            self.assertIn(":%d:" % line_number, str(context.exception))

    def testMissingFile(self):
        """Tests that an unreadable file raises KsIOError."""
        with self.assertRaises(errors.KsIOError):
            config_parser.load_config_file(
                os.path.join(self.tmp_dir, "missing.cfg"))

    def testLayering(self):
        """Tests defaults < config file < flags; None flags do not
        override."""
        config = config_parser.build_run_config(
            {K.KEY_SEED: 5, K.KEY_WORKERS: 3},
            {K.KEY_SEED: 9, K.KEY_WORKERS: None})
        self.assertEqual(config[K.KEY_SEED], 9)
        self.assertEqual(config[K.KEY_WORKERS], 3)

    def testValidation(self):
        """Tests the range checks."""
        for values in ({K.KEY_TRIALS: 0}, {K.KEY_N_THETA: 4},
                       {K.KEY_N_SAMPLES: 10}, {K.KEY_WORKERS: 0},
                       {K.KEY_SEED: -1}, {K.KEY_SEED: 2**64},
                       {K.KEY_METHOD: "simpson"}, {K.KEY_FORMAT: "xml"}):
            with self.assertRaises(errors.USERError):
                config_parser.build_run_config(cli_values=values)

    def testPhis(self):
        """Tests the inclusive scan range in radians."""
        config = config_parser.build_run_config()
        phis = config.phis()
        self.assertEqual(len(phis), 89)
        self.assertAlmostEqual(phis[0], math.radians(1.0))
        self.assertAlmostEqual(phis[-1], math.radians(89.0))
        config = config_parser.build_run_config(cli_values={
            K.KEY_PHI_START: 0.0,
            K.KEY_PHI_STOP: 1.0,
            K.KEY_PHI_STEP: 0.1,
        })
        self.assertEqual(len(config.phis()), 11)

    def testEmptyScanRange(self):
        """Tests that an empty or ill-stepped range is a usage error."""
        for values in ({K.KEY_PHI_START: 10.0, K.KEY_PHI_STOP: 5.0},
                       {K.KEY_PHI_STEP: 0.0}):
            config = config_parser.build_run_config(cli_values=values)
            with self.assertRaises(errors.USERError):
                config.phis()


if __name__ == "__main__":
    unittest.main()
