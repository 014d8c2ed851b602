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
"""Seeded Monte Carlo estimation with standard errors.

Work is cut into fixed-size blocks; block i always draws from child stream
i of the caller's RngStream and block statistics are merged in block order.
The estimate therefore depends on (seed, n, block size) and not on the
number of workers.
"""

import logging
import math

import numpy as np
from scipy import stats

from ksmodel.runners.host import const
from ksmodel.runners.host import errors
from ksmodel.runners.host import utils
from ksmodel.utils.python.geometry import rng_stream
from ksmodel.utils.python.geometry import sphere
from ksmodel.utils.python.quadrature import sphere_grid

SPHERE_AREA = 4.0 * math.pi


class Estimate(object):
    """A Monte Carlo value with its standard error.

    Attributes:
        value: float.
        std_error: float >= 0, from the sample variance.
        n_samples: int.
    """

    def __init__(self, value, std_error, n_samples):
        if not std_error >= 0.0:
            raise errors.IntegrationError("std_error must be >= 0, got %r" %
                                          std_error)
        self.value = float(value)
        self.std_error = float(std_error)
        self.n_samples = int(n_samples)

    def scaled(self, factor):
        return Estimate(self.value * factor, self.std_error * abs(factor),
                        self.n_samples)

    def withinSigma(self, expected, n_sigma=3.0, slack=0.0):
        """True if |value - expected| <= n_sigma * std_error + slack."""
        return abs(self.value - expected) <= n_sigma * self.std_error + slack

    def getDict(self):
        return {
            "value": self.value,
            "std_error": self.std_error,
            "n_samples": self.n_samples,
        }

    def __repr__(self):
        return "Estimate(value=%r, std_error=%r, n_samples=%d)" % (
            self.value, self.std_error, self.n_samples)


class RunningMoments(object):
    """Count, mean and sum of squared deviations of a sample.

    Two instances merge exactly with the pairwise update of Chan et al., so
    block results can be combined in a fixed order.
    """

    def __init__(self, count=0, mean=0.0, m2=0.0):
        self.count = count
        self.mean = mean
        self.m2 = m2

    @classmethod
    def fromValues(cls, values):
        values = np.asarray(values, dtype=float)
        if values.size == 0:
            return cls()
        mean = float(np.mean(values))
        deviations = values - mean
        return cls(values.size, mean, float(np.dot(deviations, deviations)))

    def merge(self, other):
        if other.count == 0:
            return RunningMoments(self.count, self.mean, self.m2)
        if self.count == 0:
            return RunningMoments(other.count, other.mean, other.m2)
        count = self.count + other.count
        delta = other.mean - self.mean
        mean = self.mean + delta * other.count / count
        m2 = (self.m2 + other.m2 +
              delta * delta * self.count * other.count / count)
        return RunningMoments(count, mean, m2)

    def variance(self):
        """Unbiased sample variance; 0 for fewer than two values."""
        if self.count < 2:
            return 0.0
        return self.m2 / (self.count - 1)

    def estimate(self, scale=1.0):
        """Returns scale * mean with its standard error."""
        std_error = 0.0
        if self.count:
            std_error = math.sqrt(self.variance() / self.count)
        return Estimate(scale * self.mean, abs(scale) * std_error, self.count)


def merge_all(moments):
    total = RunningMoments()
    for item in moments:
        total = total.merge(item)
    return total


def run_blocks(block_func, n, rng, workers=1, block_size=const.BLOCK_SIZE):
    """Runs block_func over a worker-independent partition of n samples.

    Args:
        block_func: callable(stream, size) -> RunningMoments.
        n: int, total number of samples.
        rng: RngStream; block i uses rng.spawn(i).
        workers: int, threads to use.
        block_size: int, samples per block.

    Returns:
        The merged RunningMoments.
    """
    sizes = rng_stream.block_sizes(n, block_size)
    params = [(rng.spawn(i), size) for i, size in enumerate(sizes)]
    return merge_all(utils.concurrent_exec(block_func, params, workers))


def integrate_sphere_mc(f, n, rng, workers=1, block_size=const.BLOCK_SIZE):
    """Estimates the integral of f over S^2 from uniform samples.

    Args:
        f: SphereIntegrand, or a plain callable on (N, 3) arrays.
        n: int >= 1000.
        rng: RngStream.
        workers: int.
        block_size: int.

    Returns:
        Estimate with value 4 pi mean(f) and std_error 4 pi s / sqrt(n).

    Raises:
        IntegrationError: n below the minimum.
    """
    if n < const.MIN_MC_SAMPLES:
        raise errors.IntegrationError("n=%d below minimum %d" %
                                      (n, const.MIN_MC_SAMPLES))
    if not isinstance(f, sphere_grid.SphereIntegrand):
        f = sphere_grid.SphereIntegrand(f)

    def _block(stream, size):
        points = sphere.sample_uniform_sphere_array(stream, size)
        return RunningMoments.fromValues(f.evaluateMany(points))

    result = run_blocks(_block, n, rng, workers, block_size).estimate(
        SPHERE_AREA)
    logging.debug("MC %s: %r", f.name, result)
    return result


def family_sigma(n_checks, n_sigma=3.0):
    """Returns the band multiple for a family of n_checks statistical checks.

    The family-wise two-sided false-alarm rate equals that of a single
    n_sigma check (Bonferroni).
    """
    if n_checks < 1:
        raise errors.IntegrationError("n_checks must be >= 1")
    alpha = 2.0 * stats.norm.sf(n_sigma)
    return float(stats.norm.isf(alpha / (2.0 * n_checks)))
