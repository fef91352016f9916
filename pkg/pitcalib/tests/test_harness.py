#
# PitCalib - empirical PIT calibration library.
#
# Copyright (C) 2026 by PitCalib Team
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.
#

"""
Tests for Monte Carlo harness.
"""

import os
from unittest import mock

import numpy as np

from pitcalib.error import ConfigError, SampleError, TieError, \
    ExperimentError
from pitcalib.harness import Regime, create_config, derive_seed, \
    configured_threads, dispersion_profile, pearson_correlation, \
    run_donsker, summarize_donsker, run_fixed_reference, \
    run_independent_reference, run_rolling_window, run_ladder, \
    run_decomposition, decomposition_stats, _replicate, _rolling_rep
from pitcalib.induced import NORMAL
from pitcalib.pit import sort_reference, estimate_percentile
from pitcalib import const

import unittest


class ConfigTestCase(unittest.TestCase):
    """
    Experiment configuration tests.
    """
    def test_defaults(self):
        """
        Test default experiment configuration
        """
        config = create_config(Regime.FIXED)
        self.assertEqual(252, config.n)
        self.assertEqual(252, config.m)
        self.assertEqual(2000, config.reps)
        self.assertEqual('normal', config.distribution)
        self.assertEqual(42, config.master_seed)
        self.assertFalse(config.heterogeneous)


    def test_invalid(self):
        """
        Test invalid experiment configuration
        """
        f = lambda **kw: create_config(Regime.FIXED, **kw)
        self.assertRaises(ConfigError, f, n=1)
        self.assertRaises(ConfigError, f, m=0)
        self.assertRaises(ConfigError, f, reps=0)
        self.assertRaises(ConfigError, f, master_seed=-1)
        self.assertRaises(ConfigError, f, distribution='cauchy')
        self.assertRaises(ConfigError, f, heterogeneous=True)
        self.assertRaises(ConfigError, create_config, 'bootstrap')


    def test_heterogeneous(self):
        """
        Test heterogeneous configuration of independent-reference regime
        """
        config = create_config(Regime.INDEPENDENT, heterogeneous=True)
        self.assertTrue(config.heterogeneous)


    def test_threads(self):
        """
        Test number of threads from environment variable
        """
        with mock.patch.dict(os.environ, {const.THREADS_ENV: '3'}):
            self.assertEqual(3, configured_threads())
        with mock.patch.dict(os.environ, {const.THREADS_ENV: 'abc'}):
            self.assertEqual(1, configured_threads())
        with mock.patch.dict(os.environ, {const.THREADS_ENV: '0'}):
            self.assertEqual(1, configured_threads())
        with mock.patch.dict(os.environ, clear=True):
            self.assertEqual(1, configured_threads())



class SeedTestCase(unittest.TestCase):
    """
    Random number generator stream tests.
    """
    def test_deterministic(self):
        """
        Test deriving identical streams
        """
        a = derive_seed(42, 3).random(5)
        b = derive_seed(42, 3).random(5)
        self.assertTrue(np.array_equal(a, b))


    def test_independent(self):
        """
        Test deriving different streams
        """
        a = derive_seed(42, 3).random(5)
        self.assertFalse(np.array_equal(a, derive_seed(42, 4).random(5)))
        self.assertFalse(np.array_equal(a, derive_seed(43, 3).random(5)))
        self.assertFalse(np.array_equal(a, derive_seed(42, 3, 1).random(5)))


    def test_uncorrelated(self):
        """
        Test correlation of streams of consecutive replications
        """
        a = derive_seed(42, 0).random(10000)
        b = derive_seed(42, 1).random(10000)
        self.assertTrue(abs(pearson_correlation(a, b)) < 0.05)



class StatisticsTestCase(unittest.TestCase):
    """
    Dispersion profile and correlation tests.
    """
    def test_profile(self):
        """
        Test dispersion profile
        """
        profile = dispersion_profile([[0.0, 0.2], [1.0, 0.4]], scale=2.0)
        np.testing.assert_allclose([0.5, 0.3], profile.rank_means)
        np.testing.assert_allclose(
            [np.sqrt(0.5), np.sqrt(0.02)], profile.rank_stds
        )
        np.testing.assert_allclose(
            2 * profile.rank_stds, profile.rescaled_stds
        )


    def test_profile_constant(self):
        """
        Test dispersion profile of constant order statistics
        """
        profile = dispersion_profile(np.full((5, 3), 0.5))
        self.assertEqual([0.0, 0.0, 0.0], list(profile.rank_stds))


    def test_profile_single(self):
        """
        Test dispersion profile of single replication
        """
        self.assertRaises(SampleError, dispersion_profile, [[0.1, 0.2]])


    def test_correlation(self):
        """
        Test Pearson correlation
        """
        self.assertAlmostEqual(
            0.98198, pearson_correlation([1, 2, 3], [1, 2, 4]), places=5
        )
        self.assertAlmostEqual(-1, pearson_correlation([1, 2, 3], [3, 2, 1]))
        self.assertAlmostEqual(1, pearson_correlation([1, 5, 2], [1, 5, 2]))


    def test_correlation_invalid(self):
        """
        Test Pearson correlation of invalid samples
        """
        self.assertRaises(SampleError, pearson_correlation, [1, 1], [1, 2])
        self.assertRaises(SampleError, pearson_correlation, [1, 2], [1, 2, 3])
        self.assertRaises(SampleError, pearson_correlation, [1], [1])



class ReplicateTestCase(unittest.TestCase):
    """
    Replication retry tests.
    """
    def test_retry(self):
        """
        Test retrying replication after tie collision
        """
        config = create_config(Regime.FIXED, reps=1)
        f = mock.Mock(side_effect=[TieError('tie'), 'result'])

        result, retries = _replicate(f, config, NORMAL, 0)
        self.assertEqual('result', result)
        self.assertEqual(1, retries)
        self.assertEqual(2, f.call_count)


    def test_retry_limit(self):
        """
        Test replication failure after retry limit
        """
        config = create_config(Regime.FIXED, reps=1)
        f = mock.Mock(side_effect=TieError('tie'))

        self.assertRaises(ExperimentError, _replicate, f, config, NORMAL, 0)
        self.assertEqual(const.MAX_RETRIES + 1, f.call_count)



class DonskerTestCase(unittest.TestCase):
    """
    Donsker study tests.
    """
    def test_donsker(self):
        """
        Test Donsker study profile
        """
        config = create_config(Regime.EXACT, n=20, reps=100)
        profile = run_donsker(config)
        self.assertEqual(20, len(profile.rank_means))
        self.assertTrue(np.all(np.diff(profile.rank_means) > 0))
        np.testing.assert_allclose(
            np.sqrt(20) * profile.rank_stds, profile.rescaled_stds
        )

        summary = summarize_donsker(config, profile)
        self.assertIsNone(summary.correlation_ks)
        self.assertIsNone(summary.rejection_rate_05)
        self.assertIsNone(summary.rejection_rate_two_05)
        self.assertTrue(0 <= summary.profile_sup_gap < 0.2)
        self.assertEqual((), summary.runs)


    def test_regime(self):
        """
        Test Donsker study with wrong regime
        """
        config = create_config(Regime.FIXED, n=20, reps=10)
        self.assertRaises(ConfigError, run_donsker, config)



class ExperimentTestCase(unittest.TestCase):
    """
    Monte Carlo experiments tests.
    """
    def test_fixed(self):
        """
        Test fixed-reference experiment
        """
        config = create_config(Regime.FIXED, n=32, m=16, reps=20)
        summary = run_fixed_reference(config)

        self.assertEqual(config, summary.config)
        self.assertEqual(list(range(20)), [r.rep_index for r in summary.runs])
        self.assertEqual(16, len(summary.profile_exact.rank_stds))
        self.assertEqual(0, summary.appendix_bound_violations)
        self.assertTrue(-1 <= summary.correlation_ks <= 1)
        self.assertTrue(0 <= summary.rejection_rate_05 <= 1)

        p_two = [r.ks_two_sample.p_value for r in summary.runs]
        self.assertEqual(
            np.mean(np.array(p_two) < 0.05), summary.rejection_rate_two_05
        )

        run = summary.runs[0]
        self.assertEqual(16, run.ks_empirical.n_eff)
        self.assertAlmostEqual(16 * 32 / 48, run.ks_two_sample.n_eff)
        self.assertIsNotNone(run.ks_grid)
        self.assertTrue(np.all(np.diff(run.sorted_empirical) >= 0))


    def test_deterministic(self):
        """
        Test repeating experiment with the same configuration
        """
        config = create_config(Regime.FIXED, n=16, m=8, reps=10)
        a = run_fixed_reference(config)
        b = run_fixed_reference(config)
        for ra, rb in zip(a.runs, b.runs):
            self.assertTrue(np.array_equal(ra.sorted_empirical, rb.sorted_empirical))
            self.assertEqual(ra.ks_two_sample, rb.ks_two_sample)
        self.assertEqual(a.correlation_ks, b.correlation_ks)


    def test_threads(self):
        """
        Test experiment results not depending on number of threads
        """
        config = create_config(Regime.INDEPENDENT, n=16, m=8, reps=12)
        a = run_independent_reference(config)
        with mock.patch.dict(os.environ, {const.THREADS_ENV: '3'}):
            b = run_independent_reference(config)

        for ra, rb in zip(a.runs, b.runs):
            self.assertEqual(ra.rep_index, rb.rep_index)
            self.assertTrue(np.array_equal(ra.sorted_empirical, rb.sorted_empirical))
        self.assertEqual(a.correlation_ks, b.correlation_ks)
        self.assertEqual(a.profile_sup_gap, b.profile_sup_gap)


    def test_independent(self):
        """
        Test independent-reference experiment
        """
        config = create_config(Regime.INDEPENDENT, n=32, m=16, reps=10)
        summary = run_independent_reference(config)
        self.assertEqual(10, len(summary.runs))
        self.assertIsNone(summary.runs[0].ks_two_sample)
        self.assertIsNone(summary.runs[0].ks_grid)
        self.assertIsNone(summary.rejection_rate_two_05)
        self.assertEqual(0, summary.appendix_bound_violations)
        np.testing.assert_allclose(
            summary.profile_empirical.rank_stds,
            summary.profile_empirical.rescaled_stds
        )


    def test_heterogeneous(self):
        """
        Test independent-reference experiment with observations of
        different scale
        """
        config = create_config(
            Regime.INDEPENDENT, n=32, m=16, reps=10, heterogeneous=True
        )
        summary = run_independent_reference(config)
        self.assertEqual(16, len(summary.profile_empirical.rank_means))


    def test_rolling(self):
        """
        Test rolling-window experiment
        """
        config = create_config(Regime.ROLLING, n=32, m=16, reps=10)
        summary = run_rolling_window(config)
        self.assertEqual(10, len(summary.runs))
        self.assertIsNone(summary.runs[0].ks_two_sample)


    def test_rolling_single(self):
        """
        Test rolling-window replication with single evaluated observation
        """
        config = create_config(Regime.ROLLING, n=16, m=1, reps=1)
        p, phat, _, _ = _rolling_rep(config, NORMAL, derive_seed(42, 0))

        z = NORMAL.sampler(derive_seed(42, 0), 17)
        est = estimate_percentile(sort_reference(z[:16]), z[16])
        self.assertEqual(1, len(phat))
        self.assertAlmostEqual(est.value, phat[0], places=15)
        self.assertAlmostEqual(NORMAL.cdf(z[16]), p[0], places=15)


    def test_warnings(self):
        """
        Test counting monotonicity warnings
        """
        config = create_config(
            Regime.FIXED, n=16, m=32, reps=5, distribution='uniform'
        )
        with self.assertLogs('pitcalib.harness', level='WARNING'):
            summary = run_fixed_reference(config)
        self.assertTrue(sum(r.warnings for r in summary.runs) > 0)


    def test_regime(self):
        """
        Test experiment with wrong regime
        """
        config = create_config(Regime.ROLLING, n=16, m=8, reps=5)
        self.assertRaises(ConfigError, run_fixed_reference, config)
        self.assertRaises(ConfigError, run_independent_reference, config)


    def test_ladder(self):
        """
        Test running experiment for ladder of evaluated sample sizes
        """
        config = create_config(Regime.ROLLING, n=16, reps=5)
        result = run_ladder(config, ms=(4, 8))
        self.assertEqual([4, 8], list(result))
        self.assertEqual(8, result[8].config.m)
        self.assertEqual(4, len(result[4].profile_empirical.rank_means))

        config = create_config(Regime.EXACT, n=16, reps=5)
        self.assertRaises(ConfigError, run_ladder, config)


    def test_decomposition(self):
        """
        Test decomposition study
        """
        config = create_config(Regime.FIXED, n=32, m=16, reps=6)
        study = run_decomposition(config, grid_size=32)
        self.assertEqual(6, len(study.sup_total))
        self.assertTrue(np.all(
            study.sup_total <= study.sup_sampling + study.sup_reference + 1e-12
        ))

        stats = decomposition_stats(study)
        self.assertEqual(['sampling', 'reference', 'total'], list(stats))
        mean, std = stats['total']
        self.assertAlmostEqual(np.mean(study.sup_total), mean)


# vim: sw=4:et:ai
