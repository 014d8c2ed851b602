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


class KsModelError(Exception):
    """Raised for general ksmodel exceptions."""


class BaseTestError(KsModelError):
    """Raised for exceptions that occured in BaseTestClass."""


class USERError(KsModelError):
    """Raised when a problem is caused by user mistake, e.g. wrong command,
    misformatted config, unknown state name, empty scan range etc.
    """


class KsIOError(KsModelError):
    """Raised when a file can not be read or written.

    Attributes:
        path: string, the path that caused the failure.
    """

    def __init__(self, path, reason):
        super(KsIOError, self).__init__("%s: %s" % (path, reason))
        self.path = path


class GeometryError(KsModelError, ValueError):
    """Raised for non-unit vectors and out-of-range spherical angles."""


class IntegrationError(KsModelError, ValueError):
    """Raised when a quadrature or Monte Carlo resolution is too small."""


class DichotomicValueError(KsModelError, ValueError):
    """Raised when a sign or an outcome is not one of -1, +1."""


class StateError(KsModelError, ValueError):
    """Raised for unnormalized states, unknown Bell states and invalid
    correlation tensors.
    """


class DistributionError(KsModelError, ValueError):
    """Raised for invalid polarization distributions or mixture weights."""


class InequalityError(KsModelError, ValueError):
    """Raised for invalid inequality arguments, e.g. a relative angle out of
    range or an empty scan.
    """


class EventFormatError(KsModelError, ValueError):
    """Raised when an event file row is malformed.

    Attributes:
        line_number: int, 1-based line of the offending row in the file.
    """

    def __init__(self, line_number, reason):
        super(EventFormatError, self).__init__(
            "line %d: %s" % (line_number, reason))
        self.line_number = line_number


class SimulationError(KsModelError):
    """Raised when event records can not be simulated or summarized."""
