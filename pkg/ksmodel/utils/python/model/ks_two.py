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
"""Two-qubit contextual hidden-variable model.

A pair with polarizations (u, v) carries hidden variables (l1, l2) with the
factorized density rho_u(l1) rho_v(l2). Polarizations are drawn from a
distribution F(u, v) that may depend on both settings. F is kept as a finite
list of weighted hemisphere-indicator products

    w * chi(axis_u, sign_u, u) * chi(axis_v, sign_v, v) / pi^2

so that the correlation integral E_ab = int F(u, v) (u . a)(v . b) du dv
separates term by term. Each term has mass 4 w; F is never renormalized
unless a caller asks for it.
"""

import logging
import math

import numpy as np

from ksmodel.runners.host import const
from ksmodel.runners.host import errors
from ksmodel.utils.python.geometry import sphere
from ksmodel.utils.python.model import ks_single
from ksmodel.utils.python.quadrature import monte_carlo
from ksmodel.utils.python.quadrature import sphere_grid
from ksmodel.utils.python.quantum import qm_reference

PI_SQ = math.pi * math.pi
SIDE_A = "A"
SIDE_B = "B"
SIDES = (SIDE_A, SIDE_B)

# Resolution of the brute-force product grid over (l_u, l_v).
PAIR_GRID_N_THETA = 64
PAIR_GRID_CHUNK = 512


def _check_side(side):
    side = str(side).upper()
    if side not in SIDES:
        raise errors.DistributionError("side must be A or B, got %r" % side)
    return side


class PolarizationTerm(object):
    """One weighted indicator product of a PolarizationDistribution.

    Attributes:
        weight: float >= 0.
        axis_u, axis_v: UnitVector.
        sign_u, sign_v: int, +1 or -1.
    """

    def __init__(self, weight, axis_u, sign_u, axis_v, sign_v):
        weight = float(weight)
        if not math.isfinite(weight) or weight < 0.0:
            raise errors.DistributionError("term weight must be >= 0, got %r"
                                           % weight)
        self.weight = weight
        self.axis_u = axis_u
        self.sign_u = ks_single.check_sign(sign_u)
        self.axis_v = axis_v
        self.sign_v = ks_single.check_sign(sign_v)

    def poleU(self):
        return self.axis_u if self.sign_u == 1 else -self.axis_u

    def poleV(self):
        return self.axis_v if self.sign_v == 1 else -self.axis_v

    def mass(self):
        return 4.0 * self.weight

    def evaluate(self, lam_u, lam_v):
        return (self.weight * ks_single.chi(self.axis_u, self.sign_u, lam_u) *
                ks_single.chi(self.axis_v, self.sign_v, lam_v) / PI_SQ)

    def evaluateMany(self, points_u, points_v):
        """Evaluates at paired rows of two (N, 3) arrays."""
        return (self.weight *
                ks_single.chi_many(self.axis_u, self.sign_u, points_u) *
                ks_single.chi_many(self.axis_v, self.sign_v, points_v) / PI_SQ)

    def evaluateGrid(self, points_u, points_v):
        """Evaluates at every (row of points_u, row of points_v) pair."""
        return (self.weight / PI_SQ) * np.outer(
            ks_single.chi_many(self.axis_u, self.sign_u, points_u),
            ks_single.chi_many(self.axis_v, self.sign_v, points_v))

    def correlation(self, n_a, n_b):
        return (self.weight * self.sign_u * self.sign_v *
                n_a.dot(self.axis_u) * n_b.dot(self.axis_v))

    def marginal(self, n, side):
        if _check_side(side) == SIDE_A:
            return 2.0 * self.weight * self.sign_u * n.dot(self.axis_u)
        return 2.0 * self.weight * self.sign_v * n.dot(self.axis_v)

    def scaled(self, factor):
        return PolarizationTerm(self.weight * factor, self.axis_u, self.sign_u,
                                self.axis_v, self.sign_v)

    def swapped(self):
        return PolarizationTerm(self.weight, self.axis_v, self.sign_v,
                                self.axis_u, self.sign_u)

    def key(self):
        return (self.weight, self.axis_u.asTuple(), self.sign_u,
                self.axis_v.asTuple(), self.sign_v)

    def getDict(self):
        return {
            "weight": self.weight,
            "axis_u": list(self.axis_u.asTuple()),
            "sign_u": self.sign_u,
            "axis_v": list(self.axis_v.asTuple()),
            "sign_v": self.sign_v,
        }

    def __repr__(self):
        return "PolarizationTerm(%r, %r, %+d, %r, %+d)" % (
            self.weight, self.axis_u, self.sign_u, self.axis_v, self.sign_v)


class PolarizationDistribution(object):
    """A nonnegative distribution F(u, v) made of indicator-product terms.

    Attributes:
        terms: tuple of PolarizationTerm.
    """

    def __init__(self, terms=()):
        self.terms = tuple(terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def isEmpty(self):
        return not self.terms

    def totalWeight(self):
        return math.fsum(term.weight for term in self.terms)

    def mass(self):
        """Returns int F du dv = 4 * sum of weights."""
        return 4.0 * self.totalWeight()

    def evaluate(self, lam_u, lam_v):
        return math.fsum(term.evaluate(lam_u, lam_v) for term in self.terms)

    def evaluateMany(self, points_u, points_v):
        total = np.zeros(np.asarray(points_u).shape[0])
        for term in self.terms:
            total += term.evaluateMany(points_u, points_v)
        return total

    def evaluateGrid(self, points_u, points_v):
        total = np.zeros((np.asarray(points_u).shape[0],
                          np.asarray(points_v).shape[0]))
        for term in self.terms:
            total += term.evaluateGrid(points_u, points_v)
        return total

    def scaled(self, factor):
        if not factor >= 0.0:
            raise errors.DistributionError("scale factor must be >= 0, got %r"
                                           % factor)
        return PolarizationDistribution(t.scaled(factor) for t in self.terms)

    def normalized(self):
        """Returns F / mass(F), a probability distribution over (u, v)."""
        mass = self.mass()
        if mass <= 0.0:
            raise errors.DistributionError("cannot normalize a zero-mass "
                                           "distribution")
        return self.scaled(1.0 / mass)

    def swapped(self):
        """Exchanges the two parties."""
        return PolarizationDistribution(t.swapped() for t in self.terms)

    def isEquivalent(self, other):
        """True if both hold the same multiset of terms."""
        return (sorted(t.key() for t in self.terms) ==
                sorted(t.key() for t in other.terms))

    def getDict(self):
        return {
            "terms": [term.getDict() for term in self.terms],
            "mass": self.mass(),
        }

    def __repr__(self):
        return "PolarizationDistribution(%r)" % (list(self.terms),)


class PairDensity(object):
    """The factorized subensemble density rho_u(l1) * rho_v(l2)."""

    def __init__(self, u, v):
        self.u = u
        self.v = v
        self.rho_u = ks_single.SubensembleDensity(u)
        self.rho_v = ks_single.SubensembleDensity(v)

    def evaluate(self, lam1, lam2):
        return self.rho_u.evaluate(lam1) * self.rho_v.evaluate(lam2)

    def evaluateMany(self, points1, points2):
        return (self.rho_u.evaluateMany(points1) *
                self.rho_v.evaluateMany(points2))

    def normalization(self, n_theta=const.DEFAULT_N_THETA):
        return (self.rho_u.normalization(n_theta) *
                self.rho_v.normalization(n_theta))

    def sample(self, rng, n):
        """Returns (l1, l2) arrays drawn from the two cosine hemispheres."""
        return self.rho_u.sample(rng, n), self.rho_v.sample(rng, n)

    def __repr__(self):
        return "PairDensity(%r, %r)" % (self.u, self.v)


class ModelCorrelation(object):
    """A correlation value and how it was obtained.

    Attributes:
        value: float.
        method: str, "closed", "grid" or "mc".
        std_error: float, 0 for deterministic methods.
        n_samples: int or None.
    """

    def __init__(self, value, method, std_error=0.0, n_samples=None):
        self.value = float(value)
        self.method = method
        self.std_error = float(std_error)
        self.n_samples = n_samples

    def getDict(self):
        result = {
            "value": self.value,
            "method": self.method,
            "std_error": self.std_error,
        }
        if self.n_samples is not None:
            result["n_samples"] = self.n_samples
        return result

    def __repr__(self):
        return "ModelCorrelation(%r, %r, std_error=%r)" % (
            self.value, self.method, self.std_error)


def singlet_distribution(n_a, n_b):
    """F_ab = (chi_a^+(u) chi_a^-(v) + chi_b^-(u) chi_b^+(v)) / (2 pi^2)."""
    return PolarizationDistribution((
        PolarizationTerm(0.5, n_a, 1, n_a, -1),
        PolarizationTerm(0.5, n_b, -1, n_b, 1),
    ))


def single_term_distribution(n_a):
    """F_a = chi_a^+(u) chi_a^-(v) / pi^2; its correlation is -a . b."""
    return PolarizationDistribution((PolarizationTerm(1.0, n_a, 1, n_a,
                                                      -1),))


def _as_tensor(t):
    if isinstance(t, qm_reference.CorrelationTensor):
        return t
    return qm_reference.CorrelationTensor(t)


def distribution_from_tensor(t):
    """Builds F with E_ab = a^T t b.

    One term (|t_ij|, e_i, +1, e_j, sign t_ij) per nonzero entry, row-major.

    Args:
        t: CorrelationTensor or 3x3 array-like.
    """
    matrix = _as_tensor(t).matrix
    terms = []
    for i in range(3):
        for j in range(3):
            entry = float(matrix[i, j])
            if entry != 0.0:
                terms.append(
                    PolarizationTerm(abs(entry), sphere.AXES[i], 1,
                                     sphere.AXES[j], 1 if entry > 0 else -1))
    return PolarizationDistribution(terms)


def state_distribution(state):
    return distribution_from_tensor(qm_reference.correlation_tensor(state))


def bell_distribution(kind):
    return state_distribution(qm_reference.bell_state(kind))


def noncontextual_distribution(t=None):
    """A fixed-axis F scaled to unit mass; axes do not depend on settings.

    Args:
        t: tensor whose fixed-axis distribution is used; defaults to the
            singlet tensor -I.
    """
    if t is None:
        t = -np.eye(3)
    return distribution_from_tensor(t).normalized()


def mixed_state_distribution(components):
    """Concatenates weighted component distributions.

    Args:
        components: list of (weight, PolarizationDistribution), weights
            nonnegative and summing to 1.

    Raises:
        DistributionError: a weight is negative or the weights do not sum
            to 1.
    """
    components = list(components)
    weights = [float(weight) for weight, _ in components]
    if not weights:
        raise errors.DistributionError("mixture needs at least one component")
    if min(weights) < 0.0:
        raise errors.DistributionError("mixture weights must be >= 0: %r" %
                                       (weights,))
    if abs(math.fsum(weights) - 1.0) > 1e-12:
        raise errors.DistributionError("mixture weights must sum to 1: %r" %
                                       (weights,))
    terms = []
    for weight, distribution in components:
        if weight > 0.0:
            terms.extend(distribution.scaled(weight).terms)
    return PolarizationDistribution(terms)


def correlation_closed(f, n_a, n_b):
    """Sum over terms of w * s_u * s_v * (a . axis_u)(b . axis_v)."""
    return math.fsum(term.correlation(n_a, n_b) for term in f.terms)


def ensemble_marginal(f, n, side):
    """int F(u, v) (u . n) du dv for side A, or (v . n) for side B."""
    side = _check_side(side)
    return math.fsum(term.marginal(n, side) for term in f.terms)


def _projection_integral(pole, n, n_theta):
    """int Theta(l . pole) (l . n) dl on a grid aligned to pole."""
    pole_array, n_array = pole.asArray(), n.asArray()

    def _projection(points):
        return np.dot(points, n_array) * sphere.heaviside(
            np.dot(points, pole_array))

    return sphere_grid.integrate_sphere_grid(_projection, n_theta,
                                             2 * n_theta, pole=pole)


def _hemisphere_area(pole, n_theta):
    return sphere_grid.integrate_sphere_grid(
        lambda points: sphere.heaviside(np.dot(points, pole.asArray())),
        n_theta, 2 * n_theta, pole=pole)


def _correlation_grid(f, n_a, n_b, n_theta):
    cache = {}

    def _factor(pole, n):
        key = (pole.asTuple(), n.asTuple())
        if key not in cache:
            cache[key] = _projection_integral(pole, n, n_theta)
        return cache[key]

    return math.fsum(term.weight / PI_SQ * _factor(term.poleU(), n_a) *
                     _factor(term.poleV(), n_b) for term in f.terms)


def sample_polarizations(f, rng, n):
    """Draws (u, v) from F / mass(F).

    The term index is drawn with probability proportional to its weight,
    then u and v uniformly on the term's two hemispheres.

    Returns:
        (index, u, v): int array of term indices and two (n, 3) arrays.

    Raises:
        DistributionError: F has zero mass.
    """
    weights = np.array([term.weight for term in f.terms], dtype=float)
    if weights.size == 0 or weights.sum() <= 0.0:
        raise errors.DistributionError("cannot sample a zero-mass "
                                       "distribution")
    cumulative = np.cumsum(weights)
    picks = rng.uniform(n) * cumulative[-1]
    index = np.minimum(np.searchsorted(cumulative, picks, side="right"),
                       weights.size - 1)
    local_u = sphere.sample_local_hemisphere(rng, n)
    local_v = sphere.sample_local_hemisphere(rng, n)
    u = np.empty_like(local_u)
    v = np.empty_like(local_v)
    for k, term in enumerate(f.terms):
        mask = index == k
        if np.any(mask):
            u[mask] = sphere.frame_points(term.poleU(), local_u[mask])
            v[mask] = sphere.frame_points(term.poleV(), local_v[mask])
    return index, u, v


def _correlation_mc(f, n_a, n_b, n, rng, workers):
    mass = f.mass()
    if mass <= 0.0:
        logging.debug("Zero-mass distribution: correlation is 0")
        return ModelCorrelation(0.0, const.METHOD_MC, 0.0, n)
    a, b = n_a.asArray(), n_b.asArray()

    def _block(stream, size):
        _, u, v = sample_polarizations(f, stream, size)
        return monte_carlo.RunningMoments.fromValues(
            np.dot(u, a) * np.dot(v, b))

    estimate = monte_carlo.run_blocks(_block, n, rng, workers).estimate(mass)
    return ModelCorrelation(estimate.value, const.METHOD_MC,
                            estimate.std_error, n)


def correlation_numeric(f, n_a, n_b, method=const.METHOD_GRID, n=None,
                        n_theta=const.DEFAULT_N_THETA, rng=None, workers=1):
    """Evaluates E_ab = int F(u, v) (u . a)(v . b) du dv numerically.

    Args:
        f: PolarizationDistribution.
        n_a, n_b: UnitVector settings.
        method: "grid" (each term as a product of two pole-aligned S^2
            integrals) or "mc" (samples from F / mass, times the mass).
            "closed" is accepted and returns correlation_closed.
        n: int, MC sample count; defaults to 10^6.
        n_theta: int, grid resolution.
        rng: RngStream, required for "mc".
        workers: int, MC threads.

    Returns:
        ModelCorrelation.
    """
    if method == const.METHOD_CLOSED:
        return ModelCorrelation(correlation_closed(f, n_a, n_b), method)
    if method == const.METHOD_GRID:
        return ModelCorrelation(_correlation_grid(f, n_a, n_b, n_theta),
                                method)
    if method == const.METHOD_MC:
        if rng is None:
            raise errors.IntegrationError("method mc needs an RngStream")
        n = const.DEFAULT_N_SAMPLES if n is None else n
        if n < const.MIN_MC_SAMPLES:
            raise errors.IntegrationError("n=%d below minimum %d" %
                                          (n, const.MIN_MC_SAMPLES))
        return _correlation_mc(f, n_a, n_b, n, rng, workers)
    raise errors.IntegrationError("unknown method %r" % (method,))


def ensemble_marginal_numeric(f, n, side, n_theta=const.DEFAULT_N_THETA):
    """Grid cross-check of ensemble_marginal."""
    side = _check_side(side)
    total = []
    for term in f.terms:
        if side == SIDE_A:
            projection = _projection_integral(term.poleU(), n, n_theta)
            area = _hemisphere_area(term.poleV(), n_theta)
        else:
            projection = _projection_integral(term.poleV(), n, n_theta)
            area = _hemisphere_area(term.poleU(), n_theta)
        total.append(term.weight / PI_SQ * projection * area)
    return math.fsum(total)


def integrate_pair_grid(kernel, n_theta=PAIR_GRID_N_THETA, n_phi=None):
    """Brute-force integral over S^2 x S^2 on a product grid.

    Args:
        kernel: callable(points_1, points_2) -> (len(points_1),
            len(points_2)) array of integrand values at every pair.
        n_theta: int, per-sphere resolution.
        n_phi: int, per-sphere azimuth nodes; defaults to 2 * n_theta.

    Returns:
        float.
    """
    if n_phi is None:
        n_phi = 2 * n_theta
    points, weights = sphere_grid.grid_nodes(n_theta, n_phi)
    partial = []
    for start in range(0, points.shape[0], PAIR_GRID_CHUNK):
        stop = start + PAIR_GRID_CHUNK
        block = kernel(points[start:stop], points)
        partial.append(float(weights[start:stop].dot(block.dot(weights))))
    return math.fsum(partial)


def mass_numeric(f, n_theta=PAIR_GRID_N_THETA, n_phi=None):
    """Integrates F over (l_u, l_v) on the unaligned product grid."""
    return integrate_pair_grid(f.evaluateGrid, n_theta, n_phi)


def malus_averages(u, v, n_a, n_b, method=const.METHOD_GRID,
                   n_theta=const.DEFAULT_N_THETA,
                   n_samples=const.DEFAULT_N_SAMPLES, rng=None, workers=1):
    """Returns the subensemble averages (A, B) under rho_u * rho_v.

    Since rho_uv factorizes, A = int rho_u(l1) A(l1) dl1 times
    int rho_v = 1, and likewise for B.

    Returns:
        (float, float) for "grid", (Estimate, Estimate) for "mc".
    """
    if method == const.METHOD_GRID:
        pair = PairDensity(u, v)
        norm_u = pair.rho_u.normalization(n_theta)
        norm_v = pair.rho_v.normalization(n_theta)
        return (_malus_grid(u, n_a, n_theta) * norm_v,
                _malus_grid(v, n_b, n_theta) * norm_u)
    if method == const.METHOD_MC:
        if rng is None:
            raise errors.IntegrationError("method mc needs an RngStream")
        return (ks_single.sampled_average(u, n_a, n_samples, rng.spawn(0),
                                          workers),
                ks_single.sampled_average(v, n_b, n_samples, rng.spawn(1),
                                          workers))
    raise errors.IntegrationError("unknown method %r" % (method,))


def _malus_grid(pole, n, n_theta):
    rho = ks_single.SubensembleDensity(pole)
    integrand = sphere_grid.SphereIntegrand(
        lambda points: rho.evaluateMany(points) * ks_single.outcome_many(
            n, points), name="malus")
    return sphere_grid.integrate_sphere_grid(integrand, n_theta, 4 * n_theta,
                                             pole=pole)


def pair_correlation_numeric(u, v, n_a, n_b, method=const.METHOD_GRID,
                             n_theta=PAIR_GRID_N_THETA,
                             n_samples=const.DEFAULT_N_SAMPLES, rng=None,
                             workers=1):
    """Integrates rho_uv(l1, l2) A(l1) B(l2) without using factorization.

    "grid" evaluates the integrand at every node pair of a product grid;
    "mc" averages A * B over joint samples of (l1, l2).

    Returns:
        float for "grid", Estimate for "mc".
    """
    pair = PairDensity(u, v)
    if method == const.METHOD_GRID:

        def _kernel(points_1, points_2):
            left = (pair.rho_u.evaluateMany(points_1) *
                    ks_single.outcome_many(n_a, points_1))
            right = (pair.rho_v.evaluateMany(points_2) *
                     ks_single.outcome_many(n_b, points_2))
            return np.outer(left, right)

        return integrate_pair_grid(_kernel, n_theta)
    if method == const.METHOD_MC:
        if rng is None:
            raise errors.IntegrationError("method mc needs an RngStream")

        def _block(stream, size):
            lam1, lam2 = pair.sample(stream, size)
            return monte_carlo.RunningMoments.fromValues(
                (ks_single.dichotomic_outcome_many(n_a, lam1) *
                 ks_single.dichotomic_outcome_many(n_b, lam2)).astype(float))

        return monte_carlo.run_blocks(_block, n_samples, rng,
                                      workers).estimate()
    raise errors.IntegrationError("unknown method %r" % (method,))
