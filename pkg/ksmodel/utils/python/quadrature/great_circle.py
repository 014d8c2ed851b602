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
"""Line integrals along great circles and their arcs.

Curves are parameterized by arc length s. Along any great circle the
bivector r x dr/ds is constant and equal to the circle's pole, so by Stokes'
theorem the flux of a constant field through a region bounded by great-circle
arcs reduces to half the line integral of (r x dr/ds) . field along the
boundary.
"""

import logging
import math

import numpy as np
from numpy.polynomial import legendre

from ksmodel.runners.host import const
from ksmodel.runners.host import errors
from ksmodel.utils.python.geometry import sphere


def _check_steps(n_steps):
    if n_steps < const.MIN_LINE_STEPS:
        raise errors.IntegrationError("n_steps=%d below minimum %d" %
                                      (n_steps, const.MIN_LINE_STEPS))


def _evaluate(g, points, tangents):
    values = np.asarray(g(points, tangents), dtype=float)
    return np.broadcast_to(values, (points.shape[0],))


def line_integral_great_circle(pole, g, n_steps=64):
    """Integrates g along the equator of `pole`.

    The circle is traversed counterclockwise as seen from `pole`, starting
    at the first frame axis of rotation_to_pole(pole). The periodic
    trapezoid rule is used, which is spectrally accurate for smooth g.

    Args:
        pole: UnitVector.
        g: callable(points, tangents) on (N, 3) arrays returning (N,) values
            (or a scalar).
        n_steps: int >= 16.

    Returns:
        float.
    """
    _check_steps(n_steps)
    rotation = sphere.rotation_to_pole(pole)
    e1, e2 = rotation.matrix[:, 0], rotation.matrix[:, 1]
    s = 2.0 * math.pi * np.arange(n_steps) / n_steps
    cos_s, sin_s = np.cos(s)[:, np.newaxis], np.sin(s)[:, np.newaxis]
    points = cos_s * e1 + sin_s * e2
    tangents = -sin_s * e1 + cos_s * e2
    return float(
        np.sum(_evaluate(g, points, tangents)) * 2.0 * math.pi / n_steps)


def line_integral_arc(pole, start, length, g, n_steps=64):
    """Integrates g along an arc of the equator of `pole`.

    The arc starts at `start` and runs counterclockwise about `pole` for
    `length` radians. Gauss-Legendre nodes are used on [0, length].

    Args:
        pole: UnitVector.
        start: UnitVector on the equator of pole.
        length: float in [0, 2 pi].
        g: callable(points, tangents) as for line_integral_great_circle.
        n_steps: int >= 16, number of nodes.

    Raises:
        GeometryError: start is not on the equator or length out of range.
    """
    _check_steps(n_steps)
    if abs(start.dot(pole)) > const.UNIT_NORM_TOLERANCE:
        raise errors.GeometryError("arc start %r is not on the equator of %r"
                                   % (start, pole))
    if not 0.0 <= length <= 2.0 * math.pi:
        raise errors.GeometryError("arc length %r outside [0, 2 pi]" % length)
    e1 = start.asArray()
    e2 = np.cross(pole.asArray(), e1)
    nodes, weights = legendre.leggauss(n_steps)
    s = 0.5 * length * (nodes + 1.0)
    cos_s, sin_s = np.cos(s)[:, np.newaxis], np.sin(s)[:, np.newaxis]
    points = cos_s * e1 + sin_s * e2
    tangents = -sin_s * e1 + cos_s * e2
    return float(
        np.dot(_evaluate(g, points, tangents), weights) * 0.5 * length)


def bivector_integrand(field_axis):
    """Returns g(r, t) = (r x t) . field_axis."""
    field = field_axis.asArray()

    def _bivector(points, tangents):
        return np.dot(np.cross(points, tangents), field)

    return _bivector


def hemisphere_contour_flux(axis, sign, field_axis, n_steps=64):
    """Flux of a constant field through the hemisphere of sign * axis.

    Evaluated as half the boundary integral of the bivector; for sign = -1
    the equator of `axis` is traversed clockwise as seen from `axis`.

    Returns:
        float, pi * sign * (axis . field_axis) up to rounding.
    """
    if sign not in (1, -1):
        raise errors.DichotomicValueError("sign must be +1 or -1, got %r" %
                                          (sign,))
    pole = axis if sign == 1 else -axis
    return 0.5 * line_integral_great_circle(
        pole, bivector_integrand(field_axis), n_steps)


def lune_contour_flux(n_a, n_b, field_axis, n_steps=64):
    """Flux of a constant field through the lune N_a & N_b, via Stokes.

    The boundary of the lune is the half of C_a inside N_b followed by the
    half of C_b inside N_a. The two halves meet at the antipodal points
    P1 = unit(n_b x n_a) and P2 = -P1.

    Args:
        n_a, n_b, field_axis: UnitVector.
        n_steps: int >= 16, nodes per arc.

    Returns:
        float. Equal hemispheres give the hemisphere flux; antiparallel ones
        give 0.0.
    """
    cross = np.cross(n_b.asArray(), n_a.asArray())
    norm = math.sqrt(float(cross.dot(cross)))
    if norm <= const.UNIT_NORM_TOLERANCE:
        if n_a.dot(n_b) > 0.0:
            return hemisphere_contour_flux(n_a, 1, field_axis, n_steps)
        logging.debug("Antiparallel hemispheres %r, %r: empty lune", n_a, n_b)
        return 0.0
    p1 = sphere.UnitVector.fromArray(cross, normalize=True)
    g = bivector_integrand(field_axis)
    arc_a = line_integral_arc(n_a, p1, math.pi, g, n_steps)
    arc_b = line_integral_arc(n_b, -p1, math.pi, g, n_steps)
    return 0.5 * (arc_a + arc_b)
