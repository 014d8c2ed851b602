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
"""Deterministic product-rule integration on S^2.

Nodes are Gauss-Legendre in cos(theta), one panel per hemisphere when
n_theta is even, times a uniform periodic rule in phi offset by half a step.
The node set is optionally rotated so that a chosen pole becomes the grid's
north pole; a hemisphere indicator around that pole then coincides with a
panel boundary and is integrated as accurately as a smooth function.
"""

import functools
import logging
import math

import numpy as np
from numpy.polynomial import legendre

from ksmodel.runners.host import const
from ksmodel.runners.host import errors
from ksmodel.utils.python.geometry import sphere


class SphereIntegrand(object):
    """A real function on S^2, evaluated on (N, 3) arrays of points.

    Attributes:
        name: str, used in log lines and reports.
    """

    def __init__(self, func, name=None):
        """Initializes the integrand.

        Args:
            func: callable mapping an (N, 3) float64 array to an (N,) array,
                or to a scalar that is broadcast.
            name: optional label.
        """
        self._func = func
        self.name = name or getattr(func, "__name__", "integrand")

    def evaluateMany(self, points):
        points = np.asarray(points, dtype=float)
        values = np.asarray(self._func(points), dtype=float)
        return np.broadcast_to(values, (points.shape[0],))

    def evaluate(self, point):
        """Evaluates at a single UnitVector."""
        return float(self.evaluateMany(point.asArray()[np.newaxis, :])[0])

    def __call__(self, points):
        return self.evaluateMany(points)

    def __repr__(self):
        return "SphereIntegrand(%s)" % self.name


def constant(value):
    return SphereIntegrand(lambda points: value, name="constant(%r)" % value)


def _check_resolution(n_theta, n_phi):
    if n_theta < const.MIN_N_THETA:
        raise errors.IntegrationError("n_theta=%d below minimum %d" %
                                      (n_theta, const.MIN_N_THETA))
    if n_phi < const.MIN_N_PHI:
        raise errors.IntegrationError("n_phi=%d below minimum %d" %
                                      (n_phi, const.MIN_N_PHI))


def _cos_theta_rule(n_theta):
    """Gauss-Legendre nodes and weights on [-1, 1], split at 0 if even."""
    if n_theta % 2:
        return legendre.leggauss(n_theta)
    nodes, weights = legendre.leggauss(n_theta // 2)
    upper = 0.5 * (nodes + 1.0)
    return (np.concatenate((upper - 1.0, upper)),
            np.concatenate((0.5 * weights, 0.5 * weights)))


@functools.lru_cache(maxsize=8)
def local_grid(n_theta, n_phi):
    """Returns read-only (points, weights) of the unrotated grid.

    Args:
        n_theta: int, number of Gauss-Legendre nodes in cos(theta).
        n_phi: int, number of azimuth nodes at 2 pi (j + 1/2) / n_phi.

    Returns:
        (points, weights): (n_theta * n_phi, 3) and (n_theta * n_phi,)
        arrays. The weights sum to 4 pi.
    """
    _check_resolution(n_theta, n_phi)
    cos_theta, theta_weights = _cos_theta_rule(n_theta)
    sin_theta = np.sqrt(1.0 - cos_theta * cos_theta)
    phi = 2.0 * math.pi * (np.arange(n_phi) + 0.5) / n_phi
    points = np.stack((np.outer(sin_theta, np.cos(phi)),
                       np.outer(sin_theta, np.sin(phi)),
                       np.outer(cos_theta, np.ones(n_phi))),
                      axis=-1).reshape(-1, 3)
    weights = np.outer(theta_weights,
                       np.full(n_phi, 2.0 * math.pi / n_phi)).ravel()
    points.setflags(write=False)
    weights.setflags(write=False)
    return points, weights


def grid_nodes(n_theta, n_phi, pole=None):
    """Returns (points, weights), rotated so the grid pole is `pole`."""
    points, weights = local_grid(n_theta, n_phi)
    if pole is not None:
        points = sphere.rotation_to_pole(pole).apply(points)
    return points, weights


def integrate_sphere_grid(f, n_theta, n_phi=None, pole=None):
    """Integrates f over S^2 with the product rule.

    Args:
        f: SphereIntegrand, or a plain callable on (N, 3) arrays.
        n_theta: int >= 8.
        n_phi: int >= 8; defaults to 2 * n_theta.
        pole: optional UnitVector the grid is aligned to. Pass the axis of a
            hemisphere indicator in f to integrate it without aliasing.

    Returns:
        float, sum of f(node) * weight.

    Raises:
        IntegrationError: resolution below the minimum.
    """
    if n_phi is None:
        n_phi = 2 * n_theta
    if not isinstance(f, SphereIntegrand):
        f = SphereIntegrand(f)
    points, weights = grid_nodes(n_theta, n_phi, pole)
    return float(np.dot(f.evaluateMany(points), weights))


def lune_flux(n_a, n_b, field_axis, n_theta=const.DEFAULT_N_THETA,
              n_phi=None):
    """Integrates (field_axis . lambda) over the lune N_a & N_b.

    N_a is the closed hemisphere lambda . n_a >= 0. The grid is aligned to
    n_a, so only the n_b boundary is resolved by the grid itself; n_phi
    defaults to 4 * n_theta for that reason.

    Args:
        n_a, n_b, field_axis: UnitVector.
        n_theta: int >= 8.
        n_phi: optional int >= 8.

    Returns:
        float. 0.0 for antiparallel hemispheres, whose lune is empty.
    """
    if n_a.dot(n_b) <= -1.0 + const.UNIT_NORM_TOLERANCE:
        logging.debug("Antiparallel hemispheres %r, %r: empty lune", n_a, n_b)
        return 0.0
    if n_phi is None:
        n_phi = 4 * n_theta
    a, b, field = n_a.asArray(), n_b.asArray(), field_axis.asArray()

    def _lune_integrand(points):
        return (np.dot(points, field) * sphere.heaviside(np.dot(points, a)) *
                sphere.heaviside(np.dot(points, b)))

    return integrate_sphere_grid(
        SphereIntegrand(_lune_integrand, name="lune_flux"), n_theta, n_phi,
        pole=n_a)
