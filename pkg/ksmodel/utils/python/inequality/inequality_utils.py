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
"""Leggett-type and CHSH evaluators.

A correlation function E is any callable E(n_a, n_b) -> float. Factories for
the model and the quantum reference are provided, so both can be pushed
through the same plans and bounds.
"""

import logging
import math

from ksmodel.runners.host import const
from ksmodel.runners.host import errors
from ksmodel.runners.host import utils
from ksmodel.utils.python.inequality import settings_plan
from ksmodel.utils.python.model import ks_two
from ksmodel.utils.python.quantum import qm_reference

CHSH_LOCAL_BOUND = 2.0
DEFAULT_LEGGETT_BOUND = "two_plane"


def _check_dichotomic(value, name):
    if isinstance(value, bool) or value not in (1, -1):
        raise errors.DichotomicValueError("%s must be +1 or -1, got %r" %
                                          (name, value))
    return int(value)


def dichotomic_identity(a, b):
    """Returns (-1 + |a + b|, a * b, 1 - |a - b|) for a, b in {-1, +1}."""
    a = _check_dichotomic(a, "a")
    b = _check_dichotomic(b, "b")
    return (-1 + abs(a + b), a * b, 1 - abs(a - b))


def subensemble_bounds(u, v, n_a, n_b):
    """Bounds on the subensemble correlation from the dichotomic identities.

    With A = u . a and B = v . b (Malus' law) and the factorized
    correlation A * B, returns (-1 + |A + B|, A * B, 1 - |A - B|).
    """
    a_bar = u.dot(n_a)
    b_bar = v.dot(n_b)
    return (-1.0 + abs(a_bar + b_bar), a_bar * b_bar,
            1.0 - abs(a_bar - b_bar))


def leggett_bound(phi):
    """Returns 4 - (4 / pi) |sin(phi / 2)| for phi in [0, pi]."""
    if not 0.0 <= phi <= math.pi:
        raise errors.InequalityError("phi=%r outside [0, pi]" % phi)
    return 4.0 - (4.0 / math.pi) * abs(math.sin(phi / 2.0))


LEGGETT_BOUNDS = {
    DEFAULT_LEGGETT_BOUND: leggett_bound,
}


def get_bound(name):
    """Looks up a Leggett-type bound by name."""
    try:
        return LEGGETT_BOUNDS[name]
    except KeyError:
        raise errors.InequalityError("unknown Leggett bound %r; known: %s" %
                                     (name, ", ".join(sorted(LEGGETT_BOUNDS))))


class InequalityReport(object):
    """The verdict of one inequality evaluation.

    Attributes:
        kind: str, "leggett" or "chsh".
        lhs: float.
        bound: float.
        margin: float, lhs - bound.
        violated: bool, margin > 0.
        correlations: dict, setting label -> correlation.
        plan: SettingsPlan.
        phi: float or None, radians.
        bound_name: str.
    """

    def __init__(self, kind, lhs, bound, correlations, plan, phi=None,
                 bound_name=None):
        self.kind = kind
        self.lhs = float(lhs)
        self.bound = float(bound)
        self.margin = self.lhs - self.bound
        self.violated = self.margin > 0.0
        self.correlations = dict(correlations)
        self.plan = plan
        self.phi = phi
        self.bound_name = bound_name

    def getDict(self):
        result = {
            "kind": self.kind,
            "lhs": self.lhs,
            "bound": self.bound,
            "margin": self.margin,
            "violated": self.violated,
            "correlations": self.correlations,
            "plan": self.plan.getDict(),
        }
        if self.phi is not None:
            result["phi_deg"] = math.degrees(self.phi)
        if self.bound_name is not None:
            result["bound_name"] = self.bound_name
        return result

    def __repr__(self):
        return "InequalityReport(%s, lhs=%r, bound=%r, violated=%r)" % (
            self.kind, self.lhs, self.bound, self.violated)


def _for_stream(correlation_function, index):
    for_stream = getattr(correlation_function, "forStream", None)
    return correlation_function if for_stream is None else for_stream(index)


def _evaluate_plan(correlation_function, plan):
    values = {}
    for index, pair in enumerate(plan):
        e = _for_stream(correlation_function, index)
        values[pair.label] = float(e(pair.n_a, pair.n_b))
    return values


def leggett_lhs(correlation_function, phi):
    """Returns |E11(phi) + E23(0)| + |E22(phi) + E23(0)| on the two-plane
    plan."""
    return leggett_report(correlation_function, phi).lhs


def leggett_report(correlation_function, phi, bound=DEFAULT_LEGGETT_BOUND):
    """Evaluates the Leggett-type inequality at one relative angle.

    Args:
        correlation_function: callable(n_a, n_b) -> float.
        phi: float, radians in [0, pi].
        bound: str, a key of LEGGETT_BOUNDS.

    Returns:
        InequalityReport.
    """
    bound_func = get_bound(bound)
    plan = settings_plan.leggett_plan(phi)
    values = _evaluate_plan(correlation_function, plan)
    lhs = (abs(values["E11"] + values["E23"]) +
           abs(values["E22"] + values["E23"]))
    return InequalityReport("leggett", lhs, bound_func(phi), values, plan,
                            phi=phi, bound_name=bound)


def leggett_scan(correlation_function, phis, bound=DEFAULT_LEGGETT_BOUND,
                 workers=1):
    """Evaluates the inequality at every phi, in input order.

    Raises:
        InequalityError: phis is empty.
    """
    phis = list(phis)
    if not phis:
        raise errors.InequalityError("leggett scan needs at least one phi")
    get_bound(bound)
    reports = utils.concurrent_exec(
        leggett_report,
        [(_for_stream(correlation_function, index), phi, bound)
         for index, phi in enumerate(phis)], workers)
    logging.info("Leggett scan over %d angles: %d violations", len(reports),
                 sum(1 for report in reports if report.violated))
    return reports


class ScanSummary(object):
    """Violation interval and peak margin of a scan.

    Attributes:
        n_points: int.
        n_violations: int.
        first_violation_deg, last_violation_deg: float or None.
        peak_margin: float.
        peak_phi_deg: float.
    """

    def __init__(self, reports):
        violated = [r for r in reports if r.violated]
        peak = max(reports, key=lambda r: r.margin)
        self.n_points = len(reports)
        self.n_violations = len(violated)
        self.first_violation_deg = (math.degrees(violated[0].phi)
                                    if violated else None)
        self.last_violation_deg = (math.degrees(violated[-1].phi)
                                   if violated else None)
        self.peak_margin = peak.margin
        self.peak_phi_deg = math.degrees(peak.phi)

    def getDict(self):
        return {
            "n_points": self.n_points,
            "n_violations": self.n_violations,
            "first_violation_deg": self.first_violation_deg,
            "last_violation_deg": self.last_violation_deg,
            "peak_margin": self.peak_margin,
            "peak_phi_deg": self.peak_phi_deg,
        }


def summarize_scan(reports):
    if not reports:
        raise errors.InequalityError("cannot summarize an empty scan")
    return ScanSummary(reports)


def chsh(correlation_function, a, a2, b, b2):
    """Returns |E(a,b) - E(a,b')| + |E(a',b) + E(a',b')|."""
    return chsh_report(correlation_function,
                       settings_plan.chsh_plan(a, a2, b, b2)).lhs


def chsh_value(correlations):
    """Combines correlations labelled ab, ab2, a2b, a2b2 into the CHSH lhs."""
    try:
        return (abs(correlations["ab"] - correlations["ab2"]) +
                abs(correlations["a2b"] + correlations["a2b2"]))
    except KeyError as e:
        raise errors.InequalityError("CHSH needs setting %s" % e)


def chsh_report(correlation_function, plan):
    """Evaluates CHSH on a plan labelled ab, ab2, a2b, a2b2."""
    values = _evaluate_plan(correlation_function, plan)
    return InequalityReport("chsh", chsh_value(values), CHSH_LOCAL_BOUND,
                            values, plan)


def model_correlation_function(source, method=const.METHOD_CLOSED,
                               **numeric_options):
    """Builds E(n_a, n_b) from the hidden-variable model.

    Args:
        source: a PolarizationDistribution (settings-independent), or a
            callable (n_a, n_b) -> PolarizationDistribution for contextual
            distributions such as ks_two.singlet_distribution.
        method: "closed", "grid" or "mc".
        numeric_options: passed to ks_two.correlation_numeric.

    Returns:
        ModelCorrelationFunction.
    """
    return ModelCorrelationFunction(source, method, **numeric_options)


class ModelCorrelationFunction(object):
    """E(n_a, n_b) of the hidden-variable model.

    With an rng option, forStream(index) returns the same function drawing
    from child stream index. Plans and scans evaluate pair i on child i, so
    Monte Carlo estimates of different setting pairs are independent.

    Attributes:
        source: callable (n_a, n_b) -> PolarizationDistribution.
        method: str.
        numeric_options: dict passed to ks_two.correlation_numeric.
    """

    def __init__(self, source, method=const.METHOD_CLOSED, **numeric_options):
        if isinstance(source, ks_two.PolarizationDistribution):
            distribution = source
            source = lambda n_a, n_b: distribution
        self.source = source
        self.method = method
        self.numeric_options = numeric_options

    def forStream(self, index):
        rng = self.numeric_options.get("rng")
        if rng is None:
            return self
        options = dict(self.numeric_options, rng=rng.spawn(index))
        return ModelCorrelationFunction(self.source, self.method, **options)

    def __call__(self, n_a, n_b):
        f = self.source(n_a, n_b)
        if self.method == const.METHOD_CLOSED:
            return ks_two.correlation_closed(f, n_a, n_b)
        return ks_two.correlation_numeric(f, n_a, n_b, self.method,
                                          **self.numeric_options).value


def qm_correlation_function(state):
    """Builds E(n_a, n_b) from the quantum reference for a pure state."""
    tensor = qm_reference.correlation_tensor(state)
    return lambda n_a, n_b: min(1.0, max(-1.0, tensor.correlation(n_a, n_b)))
