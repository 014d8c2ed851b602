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
"""Assertions for verification suites.

Every assertion raises a signal from the signals module instead of a bare
AssertionError, so base_test can turn it into a report record.
"""

import math
import unittest

from ksmodel.runners.host import signals


class _ProxyTest(unittest.TestCase):
    def runTest(self):
        pass


_pyunit_proxy = _ProxyTest()


def assertEqual(first, second, msg=None, extras=None):
    """Assert first == second, otherwise fail the test.

    Args:
        first, second: The arguments that will be tested for equality.
        msg: A string that adds additional info about the failure.
        extras: An optional field for extra information to be included in
                test result.
    """
    try:
        _pyunit_proxy.assertEqual(first, second)
    except AssertionError as e:
        my_msg = str(e)
        if msg:
            my_msg = "%s %s" % (my_msg, msg)
        fail(my_msg, extras=extras)


def assertTrue(expr, msg, extras=None):
    """Assert an expression evaluates to True, otherwise fail the test."""
    if not expr:
        fail(msg, extras)


def assertFalse(expr, msg, extras=None):
    """Assert an expression evaluates to False, otherwise fail the test."""
    if expr:
        fail(msg, extras)


def assertLess(first, second, msg=None, extras=None):
    """Assert first < second, otherwise fail the test."""
    if not first < second:
        my_msg = "%r not less than %r" % (first, second)
        if msg:
            my_msg = "%s %s" % (my_msg, msg)
        fail(my_msg, extras=extras)


def assertLessEqual(first, second, msg=None, extras=None):
    """Assert first <= second, otherwise fail the test."""
    if not first <= second:
        my_msg = "%r not less than or equal to %r" % (first, second)
        if msg:
            my_msg = "%s %s" % (my_msg, msg)
        fail(my_msg, extras=extras)


def assertAlmostEqual(measured, expected, delta, msg=None, extras=None):
    """Assert |measured - expected| <= delta.

    Args:
        measured: float, the computed value.
        expected: float, the reference value.
        delta: float, the allowed absolute deviation.
        msg: A string that adds additional info about the failure.
        extras: An optional field for extra information to be included in
                test result.

    Raises:
        signals.ToleranceFailure if the deviation exceeds delta or either
        value is not finite.
    """
    deviation = abs(measured - expected)
    if not (math.isfinite(measured) and deviation <= delta):
        my_msg = "%.12g != %.12g within %.3g (deviation %.3g)" % (
            measured, expected, delta, deviation)
        if msg:
            my_msg = "%s %s" % (my_msg, msg)
        raise signals.ToleranceFailure(my_msg, measured, expected, delta,
                                       extras)


def assertWithinSigma(measured, expected, std_error, n_sigma=3.0, msg=None,
                      extras=None):
    """Assert a statistical estimate agrees with a reference value.

    The band is n_sigma * std_error. A zero standard error requires exact
    agreement up to floating point rounding.

    Args:
        measured: float, the estimate.
        expected: float, the reference value.
        std_error: float, the standard error reported with the estimate.
        n_sigma: float, width of the band in standard errors.
        msg: A string that adds additional info about the failure.
        extras: An optional field for extra information to be included in
                test result.
    """
    band = n_sigma * std_error
    if band == 0:
        band = 1e-12 * max(1.0, abs(expected))
    assertAlmostEqual(measured, expected, band, msg=msg, extras=extras)


def skip(reason, extras=None):
    """Skip a test case.

    Raises:
        signals.TestSkip is raised to mark a test case as skipped.
    """
    raise signals.TestSkip(reason, extras)


def skipIf(expr, reason, extras=None):
    """Skip a test case if expression evaluates to True."""
    if expr:
        skip(reason, extras)


def fail(msg, extras=None):
    """Explicitly fail a test case.

    Raises:
        signals.TestFailure is raised to mark a test case as failed.
    """
    raise signals.TestFailure(msg, extras)

