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
Basic Usage
-----------

The PitCalib library exports its main API via ``pitcalib`` module.

An empirical percentile of a value is estimated against an ordered
reference sample created with :func:`~pitcalib.sort_reference`
function::

    >>> import pitcalib
    >>> sample = pitcalib.sort_reference([0.0, 1.0, -1.0])
    >>> pitcalib.estimate_percentile(sample, 0.5)
    PitEstimate(value=0.625, region='interior', segment=2, warning=False)

The percentile estimates of many values are calibrated with
Kolmogorov-Smirnov statistic against the uniform distribution::

    >>> outcome = pitcalib.ks_one_sample_uniform([0.1, 0.5, 0.9])
    >>> round(outcome.statistic, 4)
    0.2333

and the two-sample statistic of evaluated and reference samples::

    >>> pitcalib.ks_two_sample([0.5], [-1.0, 0.0, 1.0]).statistic
    0.6666666666666666

Monte Carlo Experiments
-----------------------
Monte Carlo experiment is configured with :func:`~pitcalib.create_config`
function and executed with the function of its regime::

    >>> config = pitcalib.create_config(
    ...     pitcalib.Regime.FIXED, n=64, m=32, reps=20
    ... )
    >>> summary = pitcalib.run_fixed_reference(config)
    >>> len(summary.runs)
    20
    >>> len(summary.profile_empirical.rank_stds)
    32
    >>> summary.appendix_bound_violations
    0
"""

from .pit import sort_reference, estimate_percentile, estimate_batch, \
    percentiles, invert_percentile
from .ks import ks_one_sample_uniform, ks_two_sample, ks_grid_statistic, \
    kolmogorov_sf, bound_check
from .induced import get_distribution, induced_cdf, decomposition_terms
from .harness import Regime, create_config, run_donsker, \
    run_fixed_reference, run_independent_reference, run_rolling_window, \
    run_ladder, run_decomposition

__version__ = '0.1.0'

__all__ = [
    'sort_reference', 'estimate_percentile', 'estimate_batch', 'percentiles',
    'invert_percentile', 'ks_one_sample_uniform', 'ks_two_sample',
    'ks_grid_statistic', 'kolmogorov_sf', 'bound_check', 'get_distribution',
    'induced_cdf', 'decomposition_terms', 'Regime', 'create_config',
    'run_donsker', 'run_fixed_reference', 'run_independent_reference',
    'run_rolling_window', 'run_ladder', 'run_decomposition',
]

# vim: sw=4:et:ai
