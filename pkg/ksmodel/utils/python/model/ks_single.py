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
"""Single-qubit hidden-variable model.

A pure state with Bloch vector n_a is represented by the subensemble density
rho_a(l) = (l . n_a) / pi on the hemisphere around n_a. A measurement along
n_b is decided by the hemisphere indicators chi_b^+ and chi_b^-, with the
Heaviside convention Theta(0) = 1. The overlap integral of rho_a with
chi_b^+ reproduces the Born rule (1 + n_a . n_b) / 2.

Analytic functions follow Theta(0) = 1 literally, so on the equator of an
axis both indicators are 1 and the outcome is 0. Event simulation uses the
dichotomic tie-break chi^- = 1 - chi^+ instead.
"""

import logging
import math

import numpy as np

from ksmodel.runners.host import const
from ksmodel.runners.host import errors
from ksmodel.utils.python.geometry import sphere
from ksmodel.utils.python.quadrature import great_circle
from ksmodel.utils.python.quadrature import monte_carlo
from ksmodel.utils.python.quadrature import sphere_grid


def check_sign(sign):
    """Returns sign as int if it is +1 or -1."""
    if isinstance(sign, bool) or sign not in (1, -1):
        raise errors.DichotomicValueError("sign must be +1 or -1, got %r" %
                                          (sign,))
    return int(sign)


def density(axis, lam):
    """Returns rho_axis(lam) = (lam . axis) / pi on the hemisphere, else 0."""
    projection = lam.dot(axis)
    return projection / math.pi if projection >= 0.0 else 0.0


def density_many(axis, points):
    projection = axis.dot(points)
    return np.where(projection >= 0.0, projection / math.pi, 0.0)


def chi(axis, sign, lam):
    """Returns Theta(lam . (sign * axis)) with Theta(0) = 1."""
    sign = check_sign(sign)
    return 1 if sign * lam.dot(axis) >= 0.0 else 0


def chi_many(axis, sign, points):
    return sphere.heaviside(check_sign(sign) * axis.dot(points))


def outcome(axis, lam):
    """Returns chi^+ - chi^-: +1, -1, or 0 on the equator of axis."""
    return chi(axis, 1, lam) - chi(axis, -1, lam)


def outcome_many(axis, points):
    return chi_many(axis, 1, points) - chi_many(axis, -1, points)


def dichotomic_outcome_many(axis, points, analytic_equator=False):
    """Outcomes used by the event simulator.

    Args:
        axis: UnitVector, the polarizer setting.
        points: (N, 3) array of hidden variables.
        analytic_equator: bool. When set, chi^- is evaluated analytically
            instead of as 1 - chi^+, so equator points yield 0. Only the
            verification harness sets this, to expose the double count.

    Returns:
        int8 ndarray of +1 and -1 (and 0 if analytic_equator).
    """
    chi_plus = chi_many(axis, 1, points)
    if analytic_equator:
        chi_minus = chi_many(axis, -1, points)
    else:
        chi_minus = 1.0 - chi_plus
    return (chi_plus - chi_minus).astype(np.int8)


def overlap_closed(n_a, n_b, sign_b=1):
    """Returns (1 + sign_b * n_a . n_b) / 2.

    For sign_b = +1 this is cos^2(theta_ab / 2); for -1, sin^2(theta_ab / 2).
    """
    return 0.5 * (1.0 + check_sign(sign_b) * n_a.dot(n_b))


class SubensembleDensity(object):
    """The density rho_a of the state with Bloch vector `axis`.

    Attributes:
        axis: UnitVector.
    """

    def __init__(self, axis):
        self.axis = axis

    def evaluate(self, lam):
        return density(self.axis, lam)

    def evaluateMany(self, points):
        return density_many(self.axis, points)

    def integrand(self):
        return sphere_grid.SphereIntegrand(self.evaluateMany,
                                           name="rho(%r)" % (self.axis,))

    def normalization(self, n_theta=const.DEFAULT_N_THETA):
        """Integrates the density over S^2 on a grid aligned to the axis."""
        return sphere_grid.integrate_sphere_grid(self.integrand(), n_theta,
                                                 2 * n_theta, pole=self.axis)

    def sample(self, rng, n=None):
        """Draws hidden variables with this density.

        Returns:
            A UnitVector if n is None, else an (n, 3) array.
        """
        if n is None:
            return sphere.sample_cosine_hemisphere(self.axis, rng)
        return sphere.sample_cosine_hemisphere_array(self.axis, rng, n)

    def __repr__(self):
        return "SubensembleDensity(%r)" % (self.axis,)


class CharacteristicFunction(object):
    """The indicator chi^sign of the hemisphere around sign * axis.

    Attributes:
        axis: UnitVector.
        sign: int, +1 or -1.
    """

    def __init__(self, axis, sign=1):
        self.axis = axis
        self.sign = check_sign(sign)

    def evaluate(self, lam):
        return chi(self.axis, self.sign, lam)

    def evaluateMany(self, points):
        return chi_many(self.axis, self.sign, points)

    def integrand(self):
        return sphere_grid.SphereIntegrand(
            self.evaluateMany, name="chi(%r, %+d)" % (self.axis, self.sign))

    def __repr__(self):
        return "CharacteristicFunction(%r, %+d)" % (self.axis, self.sign)


def overlap_integrand(n_a, n_b, sign_b=1):
    """Returns the integrand rho_a * chi_b^sign_b."""
    rho = SubensembleDensity(n_a)
    indicator = CharacteristicFunction(n_b, sign_b)
    return sphere_grid.SphereIntegrand(
        lambda points: rho.evaluateMany(points) * indicator.evaluateMany(
            points),
        name="overlap")


def overlap_numeric(n_a, n_b, sign_b=1, method=const.METHOD_GRID,
                    n_theta=const.DEFAULT_N_THETA,
                    n_samples=const.DEFAULT_N_SAMPLES, rng=None, workers=1):
    """Integrates rho_a * chi_b^sign_b over S^2.

    Args:
        n_a, n_b: UnitVector.
        sign_b: +1 or -1.
        method: "grid" or "mc".
        n_theta: int, grid resolution; the grid is aligned to n_a and uses
            4 * n_theta azimuth nodes.
        n_samples: int, MC sample count.
        rng: RngStream, required for "mc".
        workers: int, MC threads.

    Returns:
        float for "grid", Estimate for "mc".
    """
    integrand = overlap_integrand(n_a, n_b, sign_b)
    if method == const.METHOD_GRID:
        return sphere_grid.integrate_sphere_grid(integrand, n_theta,
                                                 4 * n_theta, pole=n_a)
    if method == const.METHOD_MC:
        if rng is None:
            raise errors.IntegrationError("method mc needs an RngStream")
        return monte_carlo.integrate_sphere_mc(integrand, n_samples, rng,
                                               workers)
    raise errors.IntegrationError("unknown method %r" % (method,))


def overlap_contour(n_a, n_b, sign_b=1, n_steps=64):
    """Evaluates the overlap through its boundary integral.

    Uses the flux of n_a through the lune N_a & N_{sign_b n_b}, divided by
    pi.
    """
    pole_b = n_b if check_sign(sign_b) == 1 else -n_b
    return great_circle.lune_contour_flux(n_a, pole_b, n_a, n_steps) / math.pi


def sampled_average(u, n_a, n_samples, rng, workers=1):
    """Mean of outcome(n_a, lambda) with lambda drawn from rho_u.

    This is Malus' law for one side: the expectation is u . n_a.

    Returns:
        Estimate.
    """
    if n_samples < 1:
        raise errors.IntegrationError("n_samples must be >= 1")

    def _block(stream, size):
        points = sphere.sample_cosine_hemisphere_array(u, stream, size)
        return monte_carlo.RunningMoments.fromValues(
            dichotomic_outcome_many(n_a, points))

    result = monte_carlo.run_blocks(_block, n_samples, rng, workers).estimate()
    logging.debug("Sampled <A> for u=%r, a=%r: %r", u, n_a, result)
    return result
