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

import unittest

import numpy as np

from ksmodel.runners.host import errors
from ksmodel.utils.python.geometry import rng_stream


class RngStreamTest(unittest.TestCase):
    """Unit tests for rng_stream module"""

    def testSameSeedSameSequence(self):
        """Tests that (seed, stream_id) fully determines the variates."""
        first = rng_stream.RngStream(7, 3).uniform(1000)
        second = rng_stream.RngStream(7, 3).uniform(1000)
        np.testing.assert_array_equal(first, second)

    def testDifferentStreamsDiffer(self):
        """Tests that sibling streams are distinct."""
        first = rng_stream.RngStream(7, 0).uniform(100)
        second = rng_stream.RngStream(7, 1).uniform(100)
        self.assertFalse(np.array_equal(first, second))

    def testSpawnIndependentOfParentCounter(self):
        """Tests that a child does not depend on draws made by its parent."""
        parent = rng_stream.RngStream(11)
        before = parent.spawn(2).uniform(50)
        parent.uniform(1234)
        after = parent.spawn(2).uniform(50)
        np.testing.assert_array_equal(before, after)
        self.assertEqual(parent.spawn(2).key, (0, 2))
        self.assertEqual(parent.spawn(2).stream_id, (0, 2))
        self.assertEqual(parent.stream_id, 0)

    def testCounter(self):
        """Tests that the counter tracks the number of draws."""
        stream = rng_stream.RngStream(1)
        stream.uniform()
        stream.uniform(10)
        self.assertEqual(stream.counter, 11)

    def testRange(self):
        """Tests that variates lie in [0, 1)."""
        values = rng_stream.RngStream(5).uniform(10000)
        self.assertTrue(np.all(values >= 0.0))
        self.assertTrue(np.all(values < 1.0))

    def testInvalidSeed(self):
        """Tests that negative and oversized seeds are rejected."""
        with self.assertRaises(errors.USERError):
            rng_stream.RngStream(-1)
        with self.assertRaises(errors.USERError):
            rng_stream.RngStream(2**64)
        with self.assertRaises(errors.USERError):
            rng_stream.RngStream(1.5)
        rng_stream.RngStream(2**64 - 1)

    def testBlockSizes(self):
        """Tests the worker-independent partition of samples."""
        self.assertEqual(rng_stream.block_sizes(10, 4), [4, 4, 2])
        self.assertEqual(rng_stream.block_sizes(8, 4), [4, 4])
        self.assertEqual(rng_stream.block_sizes(3, 4), [3])
        self.assertEqual(rng_stream.block_sizes(0, 4), [])


if __name__ == "__main__":
    unittest.main()
