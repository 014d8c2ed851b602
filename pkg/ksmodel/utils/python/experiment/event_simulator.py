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
"""Event-level simulation of the fixed-settings experiment.

Per trial: a term of F is picked with probability proportional to its
weight, u and v are drawn uniformly on the term's hemispheres, the hidden
variables lambda1 and lambda2 are drawn from the cosine densities around u
and v, and each side reports the dichotomic outcome of its setting.

Since F is not normalized, the correlation is estimated as
mass(F) * mean(A * B) with pairs drawn from F / mass(F).

Trials are generated in blocks. Block b of setting s uses the stream
rng.spawn(s).spawn(b), and trial ids are s * n + k, so the event stream is
identical for any worker count.
"""

import logging

import numpy as np

from ksmodel.runners.host import const
from ksmodel.runners.host import errors
from ksmodel.runners.host import utils
from ksmodel.utils.python.experiment import event_record
from ksmodel.utils.python.geometry import rng_stream
from ksmodel.utils.python.geometry import sphere
from ksmodel.utils.python.model import ks_single
from ksmodel.utils.python.model import ks_two


class EventBatch(object):
    """A block of simulated trials for one setting, held as arrays.

    Attributes:
        setting_label: str.
        n_a, n_b: UnitVector.
        mass: float.
        trial_id: int64 array of shape (N,).
        term: int array, the index of the term each pair came from.
        u, v, lambda1, lambda2: (N, 3) float arrays.
        outcome_a, outcome_b: int8 arrays of +1 and -1.
    """

    def __init__(self, setting_label, n_a, n_b, mass, trial_id, term, u, v,
                 lambda1, lambda2, outcome_a, outcome_b):
        self.setting_label = setting_label
        self.n_a = n_a
        self.n_b = n_b
        self.mass = mass
        self.trial_id = trial_id
        self.term = term
        self.u = u
        self.v = v
        self.lambda1 = lambda1
        self.lambda2 = lambda2
        self.outcome_a = outcome_a
        self.outcome_b = outcome_b

    def __len__(self):
        return len(self.trial_id)

    def counts(self):
        """Returns the pp, pm, mp, mm outcome counts."""
        a_plus = self.outcome_a > 0
        b_plus = self.outcome_b > 0
        return {
            "pp": int(np.count_nonzero(a_plus & b_plus)),
            "pm": int(np.count_nonzero(a_plus & ~b_plus)),
            "mp": int(np.count_nonzero(~a_plus & b_plus)),
            "mm": int(np.count_nonzero(~a_plus & ~b_plus)),
        }

    def records(self):
        """Yields the batch as EventRecords, in trial order."""
        for k in range(len(self)):
            yield event_record.EventRecord(
                int(self.trial_id[k]), self.setting_label, self.n_a,
                self.n_b, sphere.UnitVector.fromArray(self.u[k]),
                sphere.UnitVector.fromArray(self.v[k]),
                sphere.UnitVector.fromArray(self.lambda1[k]),
                sphere.UnitVector.fromArray(self.lambda2[k]),
                int(self.outcome_a[k]), int(self.outcome_b[k]), self.mass)


def _distribution_for(source, pair):
    if isinstance(source, ks_two.PolarizationDistribution):
        f = source
    else:
        f = source(pair.n_a, pair.n_b)
    if not f.mass() > 0.0:
        raise errors.DistributionError(
            "cannot simulate setting %s: distribution has zero mass" %
            pair.label)
    return f


def simulate_block(f, pair, stream, first_trial, size,
                   analytic_equator=False):
    """Simulates `size` trials of one setting from one stream.

    Draw order: term index, u, v, lambda1, lambda2.

    Returns:
        EventBatch.
    """
    term, u, v = ks_two.sample_polarizations(f, stream, size)
    lambda1 = sphere.frame_points(
        u, sphere.sample_local_cosine_hemisphere(stream, size))
    lambda2 = sphere.frame_points(
        v, sphere.sample_local_cosine_hemisphere(stream, size))
    outcome_a = ks_single.dichotomic_outcome_many(pair.n_a, lambda1,
                                                  analytic_equator)
    outcome_b = ks_single.dichotomic_outcome_many(pair.n_b, lambda2,
                                                  analytic_equator)
    trial_id = np.arange(first_trial, first_trial + size, dtype=np.int64)
    return EventBatch(pair.label, pair.n_a, pair.n_b, f.mass(), trial_id,
                      term, u, v, lambda1, lambda2, outcome_a, outcome_b)


def run_batches(source, plan, n, rng, workers=1,
                block_size=const.BLOCK_SIZE, analytic_equator=False):
    """Simulates n trials for every setting of a plan.

    Args:
        source: PolarizationDistribution, or a callable (n_a, n_b) ->
            PolarizationDistribution for contextual distributions.
        plan: SettingsPlan; settings stay fixed for all n trials.
        n: int >= 1, trials per setting.
        rng: RngStream, the run stream.
        workers: int, threads.
        block_size: int, trials per block.
        analytic_equator: bool, see ks_single.dichotomic_outcome_many.

    Returns:
        A list of EventBatch, setting by setting, blocks in trial order.

    Raises:
        USERError: n < 1.
        DistributionError: a setting's distribution has zero mass.
    """
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 1:
        raise errors.USERError("number of trials must be >= 1, got %r" % (n,))
    sizes = rng_stream.block_sizes(n, block_size)
    params = []
    for s, pair in enumerate(plan):
        f = _distribution_for(source, pair)
        setting_stream = rng.spawn(s)
        first = s * n
        for b, size in enumerate(sizes):
            params.append((f, pair, setting_stream.spawn(b), first, size,
                           analytic_equator))
            first += size
    logging.info("Simulating %d trials for %d settings in %d blocks", n,
                 len(plan), len(params))
    return utils.concurrent_exec(simulate_block, params, workers)


def run_trials(source, plan, n, rng, workers=1, block_size=const.BLOCK_SIZE,
               analytic_equator=False):
    """Yields the EventRecords of run_batches in trial_id order."""
    for batch in run_batches(source, plan, n, rng, workers, block_size,
                             analytic_equator):
        for record in batch.records():
            yield record


def estimate_correlation(events, seed=None):
    """Summarizes the events of one setting.

    Args:
        events: iterable of EventRecord or EventBatch, all for one setting.
        seed: int or None, recorded in the summary.

    Returns:
        RunSummary.

    Raises:
        SimulationError: no events, or events from more than one setting
            or distribution mass.
    """
    label = None
    mass = None
    counts = dict((key, 0) for key in event_record.RunSummary.COUNT_KEYS)
    for item in events:
        if isinstance(item, EventBatch):
            item_counts = item.counts()
        else:
            item_counts = {
                ("p" if item.outcome_a > 0 else "m") +
                ("p" if item.outcome_b > 0 else "m"): 1
            }
        if label is None:
            label, mass = item.setting_label, item.mass
        elif item.setting_label != label:
            raise errors.SimulationError(
                "mixed settings %r and %r in one estimate" %
                (label, item.setting_label))
        elif item.mass != mass:
            raise errors.SimulationError("mixed masses %r and %r" %
                                         (mass, item.mass))
        for key, value in item_counts.items():
            counts[key] += value
    if label is None:
        raise errors.SimulationError("no events to estimate from")
    return event_record.RunSummary(label, counts, mass, seed)


def estimate_plan(batches, seed=None):
    """Returns one RunSummary per setting, in first-seen order."""
    grouped = {}
    order = []
    for batch in batches:
        if batch.setting_label not in grouped:
            grouped[batch.setting_label] = []
            order.append(batch.setting_label)
        grouped[batch.setting_label].append(batch)
    return [estimate_correlation(grouped[label], seed) for label in order]


def conditional_marginal(batches, u0, cap_cos):
    """Averages outcome_a over trials whose u lies in a cap around u0.

    Used to check Malus' law at event level.

    Args:
        batches: list of EventBatch for one setting.
        u0: UnitVector, the cap center.
        cap_cos: float, trials with u . u0 >= cap_cos are kept.

    Returns:
        (mean, std_error, count).
    """
    selected = np.concatenate([
        batch.outcome_a[u0.dot(batch.u) >= cap_cos].astype(float)
        for batch in batches
    ])
    count = selected.size
    if count < 2:
        raise errors.SimulationError("only %d trials in the cap" % count)
    return (float(selected.mean()),
            float(selected.std(ddof=1) / np.sqrt(count)), count)
