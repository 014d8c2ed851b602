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
"""Unit vectors on S^2, frames, and seeded samplers.

A single UnitVector type serves as hidden variable, polarization and
polarizer setting. Array-valued helpers take and return (N, 3) float64
arrays whose rows are unit vectors; they are what the numeric engines use.
"""

import math

import numpy as np

from ksmodel.runners.host import const
from ksmodel.runners.host import errors

TWO_PI = 2.0 * math.pi


class UnitVector(object):
    """An immutable direction on the unit sphere.

    Attributes:
        x, y, z: float, direction cosines with x^2 + y^2 + z^2 = 1.
    """

    __slots__ = ("_xyz",)

    def __init__(self, x, y, z, normalize=False):
        xyz = np.array([x, y, z], dtype=float)
        if not np.all(np.isfinite(xyz)):
            raise errors.GeometryError("non-finite components %r" % (xyz,))
        norm = math.sqrt(float(xyz.dot(xyz)))
        if normalize:
            if norm == 0.0:
                raise errors.GeometryError("cannot normalize the zero vector")
            xyz = xyz / norm
        elif abs(norm - 1.0) > const.UNIT_NORM_TOLERANCE:
            raise errors.GeometryError(
                "vector (%r, %r, %r) has norm %r, not 1" % (x, y, z, norm))
        xyz.setflags(write=False)
        self._xyz = xyz

    @classmethod
    def fromArray(cls, values, normalize=False):
        values = np.asarray(values, dtype=float)
        if values.shape != (3,):
            raise errors.GeometryError("expected 3 components, got shape %r" %
                                       (values.shape,))
        return cls(values[0], values[1], values[2], normalize=normalize)

    @property
    def x(self):
        return float(self._xyz[0])

    @property
    def y(self):
        return float(self._xyz[1])

    @property
    def z(self):
        return float(self._xyz[2])

    def asArray(self):
        """Returns the read-only float64 array (x, y, z)."""
        return self._xyz

    def asTuple(self):
        return (self.x, self.y, self.z)

    def dot(self, other):
        """Scalar product with a UnitVector, a 3-vector or an (N, 3) array."""
        if isinstance(other, UnitVector):
            return float(self._xyz.dot(other._xyz))
        return np.dot(np.asarray(other, dtype=float), self._xyz)

    def cross(self, other):
        """Returns the cross product as a plain ndarray."""
        return np.cross(self._xyz, _as_array(other))

    def angleTo(self, other):
        """Returns the angle in radians between two directions."""
        return math.acos(min(1.0, max(-1.0, self.dot(other))))

    def isClose(self, other, tolerance=const.UNIT_NORM_TOLERANCE):
        return bool(np.all(np.abs(self._xyz - _as_array(other)) <= tolerance))

    def __neg__(self):
        return UnitVector(-self._xyz[0], -self._xyz[1], -self._xyz[2])

    def __eq__(self, other):
        if not isinstance(other, UnitVector):
            return NotImplemented
        return bool(np.array_equal(self._xyz, other._xyz))

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(self.asTuple())

    def __repr__(self):
        return "UnitVector(%r, %r, %r)" % self.asTuple()


def _as_array(value):
    if isinstance(value, UnitVector):
        return value.asArray()
    return np.asarray(value, dtype=float)


E_X = UnitVector(1.0, 0.0, 0.0)
E_Y = UnitVector(0.0, 1.0, 0.0)
E_Z = UnitVector(0.0, 0.0, 1.0)
AXES = (E_X, E_Y, E_Z)


def heaviside(values):
    """Heaviside step with the convention Theta(0) = 1.

    Args:
        values: float or ndarray.

    Returns:
        float64 ndarray (or 0-d array) of 0.0 and 1.0.
    """
    return np.where(np.asarray(values) >= 0.0, 1.0, 0.0)


def from_spherical(theta, phi):
    """Returns (sin t cos p, sin t sin p, cos t).

    Args:
        theta: float, polar angle in [0, pi] radians.
        phi: float, azimuth in [0, 2 pi) radians.

    Raises:
        GeometryError: an angle is outside its range.
    """
    if not 0.0 <= theta <= math.pi:
        raise errors.GeometryError("theta=%r outside [0, pi]" % theta)
    if not 0.0 <= phi < TWO_PI:
        raise errors.GeometryError("phi=%r outside [0, 2 pi)" % phi)
    sin_t = math.sin(theta)
    return UnitVector(sin_t * math.cos(phi), sin_t * math.sin(phi),
                      math.cos(theta), normalize=True)


def to_spherical(vector):
    """Returns (theta, phi) with theta in [0, pi] and phi in [0, 2 pi)."""
    theta = math.acos(min(1.0, max(-1.0, vector.z)))
    phi = math.atan2(vector.y, vector.x)
    if phi < 0.0:
        phi += TWO_PI
    if phi >= TWO_PI:
        phi = 0.0
    return theta, phi


def in_plane(angle, first=E_Z, second=E_X):
    """Returns cos(angle) * first + sin(angle) * second, normalized.

    With the defaults this is the polarizer direction at `angle` radians
    from +z toward +x.

    Raises:
        GeometryError: first and second are not orthogonal.
    """
    if abs(first.dot(second)) > const.UNIT_NORM_TOLERANCE:
        raise errors.GeometryError("plane axes %r and %r are not orthogonal" %
                                   (first, second))
    values = (math.cos(angle) * first.asArray() +
              math.sin(angle) * second.asArray())
    return UnitVector.fromArray(values, normalize=True)


class Rotation(object):
    """A proper rotation of R^3, stored as a read-only 3x3 matrix."""

    def __init__(self, matrix):
        matrix = np.array(matrix, dtype=float)
        if matrix.shape != (3, 3):
            raise errors.GeometryError("rotation must be 3x3")
        matrix.setflags(write=False)
        self.matrix = matrix

    def apply(self, points):
        """Rotates an (N, 3) array of points (or a single 3-vector)."""
        return np.dot(np.asarray(points, dtype=float), self.matrix.T)

    def rotate(self, vector):
        """Rotates a UnitVector."""
        return UnitVector.fromArray(self.matrix.dot(vector.asArray()),
                                    normalize=True)

    def frameAxes(self):
        """Returns the images of e_x, e_y, e_z as UnitVectors."""
        return tuple(
            UnitVector.fromArray(self.matrix[:, i], normalize=True)
            for i in range(3))

    def determinant(self):
        return float(np.linalg.det(self.matrix))

    def orthogonalityError(self):
        """Returns max |R^T R - I|."""
        return float(np.max(np.abs(self.matrix.T.dot(self.matrix) -
                                   np.eye(3))))


def _pole_frames(poles):
    """Returns (e1, e2) arrays completing each pole to a right-handed frame.

    Branchless construction, continuous everywhere except across z = 0
    where the sign flips. The north pole gets (e_x, e_y); the south pole
    gets (e_x, -e_y), i.e. a rotation by pi about the x axis.
    """
    x, y, z = poles[:, 0], poles[:, 1], poles[:, 2]
    sign = np.copysign(1.0, z)
    a = -1.0 / (sign + z)
    b = x * y * a
    e1 = np.column_stack((1.0 + sign * x * x * a, sign * b, -sign * x))
    e2 = np.column_stack((b, sign + y * y * a, -y))
    return e1, e2


def rotation_to_pole(pole):
    """Returns the rotation taking (0, 0, 1) to `pole`.

    Args:
        pole: UnitVector.

    Returns:
        A Rotation whose columns are (e1, e2, pole).
    """
    poles = pole.asArray()[np.newaxis, :]
    e1, e2 = _pole_frames(poles)
    return Rotation(np.column_stack((e1[0], e2[0], poles[0])))


def frame_points(poles, local_points):
    """Maps pole-frame points to world coordinates, one pole per row.

    Args:
        poles: (N, 3) array of unit poles, or a single UnitVector.
        local_points: (N, 3) array of points in the frame where the pole
            is (0, 0, 1).

    Returns:
        An (N, 3) array.
    """
    local_points = np.asarray(local_points, dtype=float)
    if isinstance(poles, UnitVector):
        return rotation_to_pole(poles).apply(local_points)
    e1, e2 = _pole_frames(poles)
    return (local_points[:, 0:1] * e1 + local_points[:, 1:2] * e2 +
            local_points[:, 2:3] * poles)


def _local_points(cos_theta, phi):
    sin_theta = np.sqrt(np.maximum(0.0, 1.0 - cos_theta * cos_theta))
    return np.column_stack((sin_theta * np.cos(phi), sin_theta * np.sin(phi),
                            cos_theta))


def sample_uniform_sphere_array(rng, n):
    """Draws n points uniformly w.r.t. surface measure.

    Uses z uniform in [-1, 1) and an independent uniform azimuth
    (Archimedes' hat-box theorem).
    """
    cos_theta = 2.0 * rng.uniform(n) - 1.0
    phi = TWO_PI * rng.uniform(n)
    return _local_points(cos_theta, phi)


def sample_uniform_sphere(rng):
    return UnitVector.fromArray(sample_uniform_sphere_array(rng, 1)[0],
                                normalize=True)


def sample_local_hemisphere(rng, n):
    """Uniform points on the open northern hemisphere z > 0 of the frame."""
    cos_theta = 1.0 - rng.uniform(n)
    phi = TWO_PI * rng.uniform(n)
    return _local_points(cos_theta, phi)


def sample_local_cosine_hemisphere(rng, n):
    """Cosine-weighted points on z > 0 of the frame: cos theta = sqrt(xi)."""
    cos_theta = np.sqrt(1.0 - rng.uniform(n))
    phi = TWO_PI * rng.uniform(n)
    return _local_points(cos_theta, phi)


def sample_uniform_hemisphere_array(pole, rng, n):
    """Draws n points uniformly on the hemisphere around `pole`."""
    return frame_points(pole, sample_local_hemisphere(rng, n))


def sample_cosine_hemisphere_array(pole, rng, n):
    """Draws n points with density (v . pole) / pi on pole's hemisphere.

    Every returned row v satisfies v . pole > 0.
    """
    return frame_points(pole, sample_local_cosine_hemisphere(rng, n))


def sample_cosine_hemisphere(pole, rng):
    return UnitVector.fromArray(sample_cosine_hemisphere_array(pole, rng,
                                                               1)[0],
                                normalize=True)


def random_unit_vectors(rng, count):
    """Returns `count` uniform random UnitVectors, e.g. for test corpora."""
    return [
        UnitVector.fromArray(row, normalize=True)
        for row in sample_uniform_sphere_array(rng, count)
    ]

