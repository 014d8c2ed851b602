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
"""Fixed-settings measurement plans.

A plan is an ordered list of labelled (n_a, n_b) polarizer pairs. Settings
stay fixed for the whole run of a plan.
"""

import math

from ksmodel.runners.host import errors
from ksmodel.utils.python.geometry import sphere

LEGGETT_LABELS = ("E11", "E22", "E23")
CHSH_LABELS = ("ab", "ab2", "a2b", "a2b2")


class SettingPair(object):
    """One labelled pair of polarizer settings.

    Attributes:
        label: str.
        n_a, n_b: UnitVector.
    """

    def __init__(self, label, n_a, n_b):
        if not label or "," in label:
            raise errors.USERError("invalid setting label %r" % (label,))
        self.label = label
        self.n_a = n_a
        self.n_b = n_b

    def getDict(self):
        return {
            "label": self.label,
            "a": list(self.n_a.asTuple()),
            "b": list(self.n_b.asTuple()),
        }

    def __repr__(self):
        return "SettingPair(%r, %r, %r)" % (self.label, self.n_a, self.n_b)


class SettingsPlan(object):
    """An ordered list of SettingPairs, optionally tagged with phi.

    Attributes:
        pairs: tuple of SettingPair.
        phi: float or None, the scan angle in radians.
        name: str, the plan kind.
    """

    def __init__(self, pairs, phi=None, name="custom"):
        self.pairs = tuple(pairs)
        if not self.pairs:
            raise errors.USERError("a settings plan needs at least one pair")
        labels = [pair.label for pair in self.pairs]
        if len(set(labels)) != len(labels):
            raise errors.USERError("duplicate setting labels in %r" % labels)
        self.phi = phi
        self.name = name

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self):
        return len(self.pairs)

    def labels(self):
        return [pair.label for pair in self.pairs]

    def pair(self, label):
        for pair in self.pairs:
            if pair.label == label:
                return pair
        raise KeyError(label)

    def getDict(self):
        result = {
            "name": self.name,
            "pairs": [pair.getDict() for pair in self.pairs],
        }
        if self.phi is not None:
            result["phi_deg"] = math.degrees(self.phi)
        return result


def single_setting_plan(n_a, n_b, label="ab"):
    return SettingsPlan([SettingPair(label, n_a, n_b)], name="single")


def leggett_plan(phi):
    """Two-plane plan for the Leggett-type inequality.

    In the x-z plane the settings sit at -phi/2 and +phi/2 from +z (E11);
    in the y-z plane likewise (E22). E23 uses the aligned pair (a2, a2).

    Args:
        phi: float, relative angle in [0, pi] radians.
    """
    if not 0.0 <= phi <= math.pi:
        raise errors.InequalityError("phi=%r outside [0, pi]" % phi)
    a1 = sphere.in_plane(-phi / 2, sphere.E_Z, sphere.E_X)
    b1 = sphere.in_plane(phi / 2, sphere.E_Z, sphere.E_X)
    a2 = sphere.in_plane(-phi / 2, sphere.E_Z, sphere.E_Y)
    b2 = sphere.in_plane(phi / 2, sphere.E_Z, sphere.E_Y)
    return SettingsPlan([
        SettingPair("E11", a1, b1),
        SettingPair("E22", a2, b2),
        SettingPair("E23", a2, a2),
    ], phi=phi, name="leggett_two_plane")


def chsh_plan(a, a2, b, b2):
    return SettingsPlan([
        SettingPair("ab", a, b),
        SettingPair("ab2", a, b2),
        SettingPair("a2b", a2, b),
        SettingPair("a2b2", a2, b2),
    ], name="chsh")


def standard_chsh_plan():
    """Coplanar x-z settings a=0, a'=90, b=45, b'=135 degrees from +z."""
    return chsh_plan(sphere.in_plane(0.0), sphere.in_plane(math.pi / 2),
                     sphere.in_plane(math.pi / 4),
                     sphere.in_plane(3 * math.pi / 4))
