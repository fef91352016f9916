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
Fixed-reference regime integration tests.
"""

import numpy as np

from pitcalib.harness import Regime, create_config, run_fixed_reference
from pitcalib.ks import ks_one_sample_uniform, ks_two_sample
from pitcalib import const

import unittest


class FixedReferenceTestCase(unittest.TestCase):
    """
    Fixed-reference regime tests with m = n = 252.
    """
    @classmethod
    def setUpClass(cls):
        config = create_config(Regime.FIXED, n=252, m=252, reps=2000)
        cls.summary = run_fixed_reference(config)


    def test_exact_p_values(self):
        """
        Test uniformity of p-values of exact percentiles
        """
        p = [r.ks_exact.p_value for r in self.summary.runs]
        outcome = ks_one_sample_uniform(np.clip(p, 1e-12, 1 - 1e-12))
        self.assertTrue(outcome.p_value > 0.01, outcome)


    def test_bound(self):
        """
        Test difference of grid restricted and two-sample statistics
        """
        limit = 1 / 252 + 2 / 253
        for r in self.summary.runs:
            d = abs(r.ks_grid.statistic - r.ks_two_sample.statistic)
            self.assertTrue(d <= limit + 1e-12, r.rep_index)
        self.assertEqual(0, self.summary.appendix_bound_violations)


    def test_statistics_distribution(self):
        """
        Test agreement of distributions of one-sample statistic of
        percentile estimates and two-sample statistic
        """
        d_one = [r.ks_empirical.statistic for r in self.summary.runs]
        d_two = [r.ks_two_sample.statistic for r in self.summary.runs]
        # sampling noise of 2000 vs 2000 statistics reaches 0.043 at 5%
        # level, atoms of two-sample statistic on 1/252 lattice add to it
        d = ks_two_sample(d_one, d_two).statistic
        self.assertTrue(d <= 0.07, d)


    def test_dispersion(self):
        """
        Test rescaled dispersion of percentile estimates
        """
        exact = self.summary.profile_exact
        emp = self.summary.profile_empirical
        t = np.arange(1, 253) / 253
        central = (t > const.CENTRAL_LOW) & (t < const.CENTRAL_HIGH)

        ratio = emp.rescaled_stds[central] / exact.rank_stds[central]
        self.assertTrue(np.all(np.abs(ratio - 1) <= 0.1), ratio)

        # unscaled dispersion follows (1 / m + 1 / n) ** 0.5 law
        inflation = emp.rank_stds[central] / exact.rank_stds[central]
        s = np.sqrt(2)
        self.assertTrue(np.all((inflation >= 0.9 * s) & (inflation <= 1.1 * s)))


    def test_rejection_rate(self):
        """
        Test rejection rate of one-sample test of percentile estimates
        """
        self.assertTrue(self.summary.rejection_rate_05 > 0.15)


    def test_two_sample_rejection_rate(self):
        """
        Test rejection rate of two-sample test below the rate of
        one-sample test of percentile estimates
        """
        rate = self.summary.rejection_rate_two_05
        self.assertTrue(rate <= 0.08, rate)
        self.assertTrue(rate < self.summary.rejection_rate_05)


# vim: sw=4:et:ai
