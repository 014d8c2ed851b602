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

import logging

import numpy as np

from ksmodel.runners.host import errors

MAX_SEED = 2**64 - 1


def _check_index(value, name):
    if (isinstance(value, bool) or not isinstance(value, (int, np.integer))
            or value < 0):
        raise errors.USERError("%s must be a non-negative integer, got %r" %
                               (name, value))
    return int(value)


class RngStream(object):
    """A seeded, splittable stream of uniform variates.

    A stream is identified by (seed, key). The key is a tuple of
    non-negative integers; children made by spawn() extend the parent's key,
    so the same (seed, key) reproduces the same variates on any platform and
    in any thread. Streams are never shared between workers: a parallel
    caller spawns one child per block of work.

    The generator is numpy's Philox counter-based bit generator seeded by a
    SeedSequence whose spawn_key is the stream key.

    Attributes:
        seed: int, the 64-bit run seed.
        stream_id: int for a root stream, the full key tuple for children.
        counter: int, number of variates drawn so far.
    """

    def __init__(self, seed, stream_id=0):
        seed = _check_index(seed, "seed")
        if seed > MAX_SEED:
            raise errors.USERError("seed must be below 2**64, got %d" % seed)
        if isinstance(stream_id, tuple):
            key = tuple(_check_index(k, "stream_id") for k in stream_id)
        else:
            key = (_check_index(stream_id, "stream_id"),)
        self.seed = seed
        self._key = key
        self.counter = 0
        sequence = np.random.SeedSequence(entropy=seed, spawn_key=key)
        self._generator = np.random.Generator(np.random.Philox(sequence))

    @property
    def stream_id(self):
        return self._key[0] if len(self._key) == 1 else self._key

    @property
    def key(self):
        return self._key

    def uniform(self, size=None):
        """Draws uniform variates in [0, 1).

        Args:
            size: int or None. None draws a single float.

        Returns:
            A float, or a float64 ndarray of shape (size,).
        """
        self.counter += 1 if size is None else int(size)
        return self._generator.random(size)

    def spawn(self, index):
        """Returns the child stream with the given index.

        The child depends only on (seed, key, index), never on how many
        variates the parent has drawn.
        """
        index = _check_index(index, "index")
        return RngStream(self.seed, self._key + (index,))

    def __repr__(self):
        return "RngStream(seed=%d, key=%r, counter=%d)" % (
            self.seed, self._key, self.counter)


def block_sizes(n, block_size):
    """Splits n items into consecutive blocks of at most block_size.

    The partition depends on n and block_size only, never on the number of
    workers, so block i always owns the same trials.

    Returns:
        A list of ints summing to n.
    """
    if n <= 0:
        return []
    full, rest = divmod(n, block_size)
    sizes = [block_size] * full
    if rest:
        sizes.append(rest)
    logging.debug("Partitioned %d samples into %d blocks of <= %d", n,
                  len(sizes), block_size)
    return sizes
