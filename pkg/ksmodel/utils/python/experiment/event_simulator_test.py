#!/usr/bin/env python
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

import math
import unittest

import mock
import numpy as np

from ksmodel.runners.host import errors
from ksmodel.runners.host import utils
from ksmodel.utils.python.experiment import event_simulator
from ksmodel.utils.python.geometry import rng_stream
from ksmodel.utils.python.geometry import sphere
from ksmodel.utils.python.inequality import inequality_utils
from ksmodel.utils.python.inequality import settings_plan
from ksmodel.utils.python.model import ks_two

_TRIALS = 200000


def _single(n_a, n_b):
    return settings_plan.single_setting_plan(n_a, n_b)


def _estimate(plan, seed, n=_TRIALS, source=ks_two.singlet_distribution):
    batches = event_simulator.run_batches(source, plan, n,
                                          rng_stream.RngStream(seed))
    return event_simulator.estimate_plan(batches, seed)


class RunBatchesTest(unittest.TestCase):
    """Unit tests for event generation"""

    def testAlignedSettings(self):
        """Tests E = -1 within 3 sigma for n_a = n_b."""
        summary, = _estimate(_single(sphere.E_Z, sphere.E_Z), 11)
        self.assertLess(abs(summary.correlation + 1.0),
                        3.0 * summary.std_error)
        self.assertEqual(summary.mass, 4.0)

    def testOrthogonalSettings(self):
        """Tests E = 0 within 3 sigma for a 90 degree angle."""
        summary, = _estimate(_single(sphere.E_Z, sphere.E_X), 12)
        self.assertLess(abs(summary.correlation), 3.0 * summary.std_error)

    def testSixtyDegrees(self):
        """Tests E = -0.5 within 3 sigma for a 60 degree angle."""
        summary, = _estimate(
            _single(sphere.E_Z, sphere.in_plane(math.radians(60))), 13)
        self.assertLess(abs(summary.correlation + 0.5),
                        3.0 * summary.std_error)
        self.assertEqual(summary.seed, 13)
        self.assertEqual(summary.n_trials, _TRIALS)

    def testSupportInvariants(self):
        """Tests outcomes are +-1 and hidden variables lie on their
        hemispheres."""
        n_a = sphere.UnitVector(0.3, -0.4, 0.5, normalize=True)
        n_b = sphere.UnitVector(-0.6, 0.2, 0.1, normalize=True)
        batch, = event_simulator.run_batches(ks_two.singlet_distribution,
                                             _single(n_a, n_b), 5000,
                                             rng_stream.RngStream(2))
        self.assertTrue(np.all(np.abs(batch.outcome_a) == 1))
        self.assertTrue(np.all(np.abs(batch.outcome_b) == 1))
        support_a = np.sum(batch.lambda1 * batch.u, axis=1)
        support_b = np.sum(batch.lambda2 * batch.v, axis=1)
        self.assertTrue(np.all(support_a >= -1e-12))
        self.assertTrue(np.all(support_b >= -1e-12))
        for record in batch.records():
            record.validate()

    def testPolarizationsOnTermHemispheres(self):
        """Tests that u and v lie on the hemispheres of their term."""
        f = ks_two.singlet_distribution(sphere.E_Z, sphere.E_X)
        batch, = event_simulator.run_batches(f, _single(sphere.E_Z,
                                                        sphere.E_X), 5000,
                                             rng_stream.RngStream(4))
        for k, term in enumerate(f.terms):
            mask = batch.term == k
            self.assertTrue(np.any(mask))
            self.assertGreaterEqual(term.poleU().dot(batch.u[mask]).min(),
                                    -1e-12)
            self.assertGreaterEqual(term.poleV().dot(batch.v[mask]).min(),
                                    -1e-12)

    def testTrialIds(self):
        """Tests trial ids s * n + k across blocks and settings."""
        plan = settings_plan.standard_chsh_plan()
        batches = event_simulator.run_batches(
            ks_two.singlet_distribution, plan, 2500, rng_stream.RngStream(1),
            block_size=1000)
        self.assertEqual([len(b) for b in batches], [1000, 1000, 500] * 4)
        ids = np.concatenate([b.trial_id for b in batches])
        np.testing.assert_array_equal(ids, np.arange(4 * 2500))
        self.assertEqual([b.setting_label for b in batches[::3]],
                         list(settings_plan.CHSH_LABELS))

    def testWorkerCountDoesNotChangeEvents(self):
        """Tests identical events with 1 and 4 workers."""
        plan = settings_plan.standard_chsh_plan()
        runs = []
        for workers in (1, 4):
            with mock.patch.object(
                    event_simulator.utils,
                    "concurrent_exec",
                    side_effect=utils.concurrent_exec) as concurrent_exec:
                runs.append(event_simulator.run_batches(
                    ks_two.singlet_distribution, plan, 3000,
                    rng_stream.RngStream(77), workers=workers,
                    block_size=700))
            self.assertEqual(concurrent_exec.call_args[0][2], workers)
        for first, second in zip(*runs):
            for name in ("trial_id", "term", "u", "v", "lambda1", "lambda2",
                         "outcome_a", "outcome_b"):
                np.testing.assert_array_equal(getattr(first, name),
                                              getattr(second, name))

    def testRejectsZeroTrials(self):
        """Tests that n must be at least 1."""
        for n in (0, -3, 1.5):
            with self.assertRaises(errors.USERError):
                event_simulator.run_batches(ks_two.singlet_distribution,
                                            _single(sphere.E_Z, sphere.E_Z),
                                            n, rng_stream.RngStream(0))

    def testRejectsZeroMass(self):
        """Tests that a zero-mass distribution can not be simulated."""
        with self.assertRaises(errors.DistributionError):
            event_simulator.run_batches(ks_two.PolarizationDistribution([]),
                                        _single(sphere.E_Z, sphere.E_Z), 10,
                                        rng_stream.RngStream(0))

    def testRunTrials(self):
        """Tests that run_trials yields the batches' records in order."""
        plan = _single(sphere.E_Z, sphere.E_Y)
        records = list(event_simulator.run_trials(
            ks_two.singlet_distribution, plan, 300, rng_stream.RngStream(5),
            block_size=128))
        self.assertEqual([r.trial_id for r in records], list(range(300)))
        batches = event_simulator.run_batches(
            ks_two.singlet_distribution, plan, 300, rng_stream.RngStream(5),
            block_size=128)
        self.assertEqual(records, [r for b in batches for r in b.records()])


class EstimateCorrelationTest(unittest.TestCase):
    """Unit tests for the correlation estimator"""

    def setUp(self):
        """Simulates a small two-setting run."""
        plan = settings_plan.SettingsPlan([
            settings_plan.SettingPair("ab", sphere.E_Z, sphere.E_X),
            settings_plan.SettingPair("aa", sphere.E_Z, sphere.E_Z),
        ])
        self.batches = event_simulator.run_batches(
            ks_two.singlet_distribution, plan, 1000, rng_stream.RngStream(8))

    def testRecordsMatchBatches(self):
        """Tests that records and batches give the same summary."""
        batch = self.batches[0]
        from_records = event_simulator.estimate_correlation(batch.records())
        from_batch = event_simulator.estimate_correlation([batch])
        self.assertEqual(from_records.getDict(), from_batch.getDict())

    def testRejectsMixedSettings(self):
        """Tests that records of two settings are rejected."""
        with self.assertRaises(errors.SimulationError):
            event_simulator.estimate_correlation(self.batches)

    def testRejectsEmpty(self):
        """Tests that an empty record set is rejected."""
        with self.assertRaises(errors.SimulationError):
            event_simulator.estimate_correlation([])

    def testEstimatePlan(self):
        """Tests one summary per setting in plan order."""
        summaries = event_simulator.estimate_plan(self.batches, seed=8)
        self.assertEqual([s.setting_label for s in summaries], ["ab", "aa"])
        self.assertEqual([s.n_trials for s in summaries], [1000, 1000])


class EventLevelPhysicsTest(unittest.TestCase):
    """Unit tests of the model's predictions at event level"""

    def testChsh(self):
        """Tests the CHSH value 2 sqrt(2) within 3 sigma."""
        summaries = _estimate(settings_plan.standard_chsh_plan(), 21,
                              n=100000)
        value = inequality_utils.chsh_value(
            dict((s.setting_label, s.correlation) for s in summaries))
        sigma = math.sqrt(sum(s.std_error**2 for s in summaries))
        self.assertLess(abs(value - 2.0 * math.sqrt(2.0)), 3.0 * sigma)

    def testConditionalMalus(self):
        """Tests mean(A) = u0 . a for pairs with u in a small cap."""
        n_a = sphere.E_X
        u0 = sphere.in_plane(0.5)
        batches = event_simulator.run_batches(
            ks_two.single_term_distribution(sphere.E_Z),
            _single(n_a, sphere.E_Z), _TRIALS, rng_stream.RngStream(31))
        mean, std_error, count = event_simulator.conditional_marginal(
            batches, u0, 0.99)
        self.assertGreater(count, 1000)
        self.assertLess(abs(mean - u0.dot(n_a)), 3.0 * std_error + 0.01)

    def testNoncontextualSource(self):
        """Tests a settings-independent source with unit mass."""
        f = ks_two.noncontextual_distribution()
        summary, = _estimate(_single(sphere.E_Z, sphere.E_Z), 17,
                             source=f)
        self.assertAlmostEqual(summary.mass, 1.0, places=12)
        self.assertLess(abs(summary.correlation + 1.0 / 12.0),
                        3.0 * summary.std_error)


if __name__ == "__main__":
    unittest.main()
