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
"""Event-level records and per-setting summaries."""

import logging
import math

from ksmodel.runners.host import errors
from ksmodel.utils.python.geometry import sphere

CSV_HEADER = ("trial_id", "setting_label", "ax", "ay", "az", "bx", "by", "bz",
              "ux", "uy", "uz", "vx", "vy", "vz", "l1x", "l1y", "l1z", "l2x",
              "l2y", "l2z", "A", "B", "mass")

# Slack for lambda . pole >= 0 after the frame rotation.
SUPPORT_TOLERANCE = 1e-12

_VECTOR_FIELDS = ("n_a", "n_b", "u", "v", "lambda1", "lambda2")


def format_real(value):
    """Formats a float with 17 significant digits, enough to round trip."""
    return "%.16e" % value


class EventRecord(object):
    """One simulated trial.

    Attributes:
        trial_id: int, unique within a run.
        setting_label: str.
        n_a, n_b: UnitVector, the polarizer settings.
        u, v: UnitVector, the pair's polarizations.
        lambda1, lambda2: UnitVector, the hidden variables.
        outcome_a, outcome_b: int, +1 or -1.
        mass: float, total mass of the distribution the pair came from.
    """

    def __init__(self, trial_id, setting_label, n_a, n_b, u, v, lambda1,
                 lambda2, outcome_a, outcome_b, mass):
        self.trial_id = trial_id
        self.setting_label = setting_label
        self.n_a = n_a
        self.n_b = n_b
        self.u = u
        self.v = v
        self.lambda1 = lambda1
        self.lambda2 = lambda2
        self.outcome_a = outcome_a
        self.outcome_b = outcome_b
        self.mass = mass

    def validate(self):
        """Checks the outcome and support invariants.

        Raises:
            DichotomicValueError: an outcome is not +1 or -1.
            SimulationError: a hidden variable lies outside its hemisphere,
                or the mass is not positive.
        """
        for name in ("outcome_a", "outcome_b"):
            value = getattr(self, name)
            if isinstance(value, bool) or value not in (1, -1):
                raise errors.DichotomicValueError(
                    "%s must be +1 or -1, got %r" % (name, value))
        if self.lambda1.dot(self.u) < -SUPPORT_TOLERANCE:
            raise errors.SimulationError("lambda1 . u < 0 in trial %d" %
                                         self.trial_id)
        if self.lambda2.dot(self.v) < -SUPPORT_TOLERANCE:
            raise errors.SimulationError("lambda2 . v < 0 in trial %d" %
                                         self.trial_id)
        if not self.mass > 0.0:
            raise errors.SimulationError("mass must be positive, got %r" %
                                         self.mass)
        return self

    def toRow(self):
        """Returns the CSV row, in CSV_HEADER order, as strings."""
        row = [str(self.trial_id), self.setting_label]
        for name in _VECTOR_FIELDS:
            row.extend(format_real(c) for c in getattr(self, name).asTuple())
        row.extend([str(self.outcome_a), str(self.outcome_b),
                    format_real(self.mass)])
        return row

    @classmethod
    def fromRow(cls, row):
        """Parses a CSV row. Raises ValueError on malformed fields."""
        if len(row) != len(CSV_HEADER):
            raise ValueError("expected %d fields, got %d" %
                             (len(CSV_HEADER), len(row)))
        reals = [float(x) for x in row[2:20]]
        vectors = [sphere.UnitVector(*reals[3 * k:3 * k + 3])
                   for k in range(len(_VECTOR_FIELDS))]
        return cls(int(row[0]), row[1], *vectors,
                   outcome_a=int(row[20]), outcome_b=int(row[21]),
                   mass=float(row[22]))

    def __eq__(self, other):
        if not isinstance(other, EventRecord):
            return NotImplemented
        return self.toRow() == other.toRow()

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __repr__(self):
        return "EventRecord(%d, %r, A=%d, B=%d)" % (
            self.trial_id, self.setting_label, self.outcome_a, self.outcome_b)


class RunSummary(object):
    """Counts and the estimated correlation for one setting.

    Attributes:
        setting_label: str.
        n_trials: int.
        counts: dict with keys pp, pm, mp, mm.
        correlation: float, mass * mean(A * B).
        std_error: float, mass * sample sigma / sqrt(n).
        mass: float.
        seed: int or None.
    """

    COUNT_KEYS = ("pp", "pm", "mp", "mm")

    def __init__(self, setting_label, counts, mass, seed=None):
        self.setting_label = setting_label
        self.counts = dict((key, int(counts.get(key, 0)))
                           for key in self.COUNT_KEYS)
        self.n_trials = sum(self.counts.values())
        if self.n_trials < 1:
            raise errors.SimulationError("a summary needs at least one trial")
        self.mass = float(mass)
        self.seed = seed
        n = self.n_trials
        mean = float(self.counts["pp"] + self.counts["mm"] -
                     self.counts["pm"] - self.counts["mp"]) / n
        self.correlation = self.mass * mean
        if n > 1:
            variance = max(0.0, (1.0 - mean * mean) * n / (n - 1.0))
            self.std_error = self.mass * math.sqrt(variance / n)
        else:
            self.std_error = 0.0
        if self.out_of_physical_range:
            logging.warning("Setting %s: estimated correlation %.6f lies "
                            "outside [-1, 1]", setting_label,
                            self.correlation)

    @property
    def out_of_physical_range(self):
        return abs(self.correlation) > 1.0

    def getDict(self):
        return {
            "setting_label": self.setting_label,
            "n_trials": self.n_trials,
            "counts": dict(self.counts),
            "correlation": self.correlation,
            "std_error": self.std_error,
            "mass": self.mass,
            "seed": self.seed,
            "out_of_physical_range": self.out_of_physical_range,
        }

    @classmethod
    def fromDict(cls, document):
        return cls(document["setting_label"], document["counts"],
                   document["mass"], document.get("seed"))

    def __repr__(self):
        return "RunSummary(%r, n=%d, E=%r +- %r)" % (
            self.setting_label, self.n_trials, self.correlation,
            self.std_error)
