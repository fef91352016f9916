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
Kolmogorov-Smirnov Statistics
-----------------------------
The uniformity of percentile estimates is tested with Kolmogorov-Smirnov
statistics

one-sample
    Two-sided distance :math:`\\sup_p |F_m(p) - p|` between empirical
    distribution function of percentiles and the uniform distribution.
grid restricted
    The distance :math:`\\max_i |\\hat{p}_{(i)} - i / m|`, which evaluates
    the two-sample statistic on the grid of evaluated observations only.
two-sample
    Distance :math:`\\max_z |F_m(z) - G_n(z)|` over the pooled sample
    points of two samples.

The p-values are calculated with the survival function of the Kolmogorov
distribution. Since the grid restricted statistic is a diagnostic
statistic, its p-value is always one.

Example
~~~~~~~
    >>> ks_one_sample_uniform([0.1, 0.5, 0.9])     # doctest:+ELLIPSIS
    KsOutcome(statistic=0.2333..., n_eff=3, mode='one-sample-uniform', p_value=...)
    >>> ks_two_sample([0.2, 0.8], [0.5]).statistic
    0.5
"""

from collections import namedtuple
import logging
import math

import numpy as np

from .error import SampleError
from .pit import sort_reference, percentiles
from . import const

logger = logging.getLogger(__name__)


class Mode(object):
    """
    Kolmogorov-Smirnov statistic mode.
    """
    ONE_SAMPLE = 'one-sample-uniform'
    TWO_SAMPLE = 'two-sample'
    GRID = 'grid-restricted'


KsOutcome = namedtuple('KsOutcome', 'statistic n_eff mode p_value')
KsOutcome.__doc__ = """
Kolmogorov-Smirnov test outcome.

:var statistic: Value of the statistic, the maximal distance.
:var n_eff: Effective sample size, `m` for one-sample modes and
    `m * n / (m + n)` for two-sample mode.
:var mode: Statistic mode, see :class:`Mode`.
:var p_value: Asymptotic p-value.
"""

BoundReport = namedtuple('BoundReport', 'd_grid d_two gap m n warning')
BoundReport.__doc__ = """
Comparison of grid restricted and two-sample statistics.

:var d_grid: Grid restricted statistic of percentile estimates.
:var d_two: Two-sample statistic.
:var gap: Difference `d_two - d_grid`.
:var m: Size of evaluated sample.
:var n: Size of reference sample.
:var warning: True if any percentile estimate has monotonicity warning.
"""


def _unit_values(values):
    """
    Sort values, which have to be in (0, 1).
    """
    v = np.sort(np.asarray(values, dtype=float))
    if v.ndim != 1 or len(v) == 0:
        raise SampleError('empty sample')
    if not (v[0] > 0 and v[-1] < 1):
        raise SampleError('sample values outside of (0, 1)')
    return v


def _finite_values(values):
    v = np.sort(np.asarray(values, dtype=float))
    if v.ndim != 1 or len(v) == 0:
        raise SampleError('empty sample')
    if not np.all(np.isfinite(v)):
        raise SampleError('sample has non-finite values')
    return v


def ecdf_eval(sorted_values, t):
    """
    Evaluate empirical distribution function at point `t`.

    >>> ecdf_eval([1, 2, 3], 2.0)
    0.6666666666666666

    :param sorted_values: Sample sorted in ascending order.
    :param t: Evaluation point.
    """
    v = np.asarray(sorted_values, dtype=float)
    if len(v) == 0:
        raise SampleError('empty sample')
    return int(np.searchsorted(v, t, side='right')) / len(v)


def kolmogorov_sf(lam):
    """
    Calculate survival function of the Kolmogorov distribution

        .. math::

            Q(\\lambda) = 2 \\sum_{k \\ge 1} (-1)^{k - 1} e^{-2 k^2 \\lambda^2}

    For :math:`\\lambda < 1` the series converges slowly and complement of
    the equivalent series

        .. math::

            K(\\lambda) = \\frac{\\sqrt{2 \\pi}}{\\lambda} \\sum_{k \\ge 1}
                e^{-(2k - 1)^2 \\pi^2 / (8 \\lambda^2)}

    is used instead. The series are truncated when a term is smaller than
    `1e-12` or after 100 terms.

    :param lam: Non-negative argument.
    """
    if lam < 0:
        raise SampleError('negative argument of Kolmogorov distribution')
    if lam == 0:
        return 1.0

    tol = const.KS_SERIES_TOLERANCE
    s = 0.0
    if lam < 1:
        z = -math.pi ** 2 / (8 * lam ** 2)
        for k in range(1, const.KS_SERIES_MAX_TERMS + 1):
            t = math.exp((2 * k - 1) ** 2 * z)
            s += t
            if t < tol:
                break
        p = 1 - math.sqrt(2 * math.pi) / lam * s
    else:
        z = -2 * lam ** 2
        sign = 1
        for k in range(1, const.KS_SERIES_MAX_TERMS + 1):
            t = math.exp(z * k ** 2)
            s += sign * t
            sign = -sign
            if t < tol:
                break
        p = 2 * s

    return min(max(p, 0.0), 1.0)


def ks_one_sample_uniform(values):
    """
    Calculate one-sample Kolmogorov-Smirnov statistic against the uniform
    distribution.

    The p-value is calculated with small sample correction of the
    statistic, :math:`(\\sqrt{m} + 0.12 + 0.11 / \\sqrt{m}) D`.

    :param values: Values in (0, 1).
    """
    v = _unit_values(values)
    m = len(v)
    i = np.arange(1, m + 1)
    d = float(max(np.max(i / m - v), np.max(v - (i - 1) / m)))

    sm = math.sqrt(m)
    p = kolmogorov_sf((sm + const.KS_CORR_A + const.KS_CORR_B / sm) * d)
    return KsOutcome(d, m, Mode.ONE_SAMPLE, p)


def ks_grid_statistic(phat_values):
    """
    Calculate grid restricted statistic
    :math:`\\max_i |\\hat{p}_{(i)} - i / m|`.

    The p-value is not meaningful for this statistic and is set to one.

    :param phat_values: Percentile estimates in (0, 1).
    """
    v = _unit_values(phat_values)
    m = len(v)
    d = float(np.max(np.abs(v - np.arange(1, m + 1) / m)))
    return KsOutcome(d, m, Mode.GRID, 1.0)


def ks_two_sample(xs, ys):
    """
    Calculate two-sample Kolmogorov-Smirnov statistic.

    Both empirical distribution functions are evaluated at the pooled
    sample points.

    :param xs: First sample.
    :param ys: Second sample.
    """
    x = _finite_values(xs)
    y = _finite_values(ys)
    m = len(x)
    n = len(y)

    z = np.concatenate([x, y])
    f = np.searchsorted(x, z, side='right') / m
    g = np.searchsorted(y, z, side='right') / n
    d = float(np.max(np.abs(f - g)))

    n_eff = m * n / (m + n)
    p = kolmogorov_sf(math.sqrt(n_eff) * d)
    return KsOutcome(d, n_eff, Mode.TWO_SAMPLE, p)


def bound_limits(m, n):
    """
    Calculate limits of the bracket
    `lo <= D_two - D_grid <= hi` for sample sizes `m` and `n`.

    :param m: Size of evaluated sample.
    :param n: Size of reference sample.
    """
    slack = const.BOUND_SLACK_N / (n + 1)
    return -slack, 1 / m + slack


def bound_check(xs, ys):
    """
    Compare grid restricted statistic of percentile estimates of `xs`
    relative to reference sample `ys` with two-sample statistic of `xs`
    and `ys`.

    :param xs: Evaluated sample.
    :param ys: Reference sample.
    """
    sample = sort_reference(ys)
    x = _finite_values(xs)
    phat, warning = percentiles(sample.values, x)

    d_grid = ks_grid_statistic(phat).statistic
    d_two = ks_two_sample(x, sample.values).statistic
    report = BoundReport(
        d_grid, d_two, d_two - d_grid, len(x), sample.size, bool(np.any(warning))
    )

    if __debug__:
        logger.debug('bound check: {}'.format(report))

    return report


def bound_holds(report):
    """
    Check if the difference of the statistics is within the bracket

        .. math::

            -2 / (n + 1) \\le D_{m,n} - D_m \\le 1 / m + 2 / (n + 1)

    :param report: Bound check report.
    """
    lo, hi = bound_limits(report.m, report.n)
    tol = const.BOUND_TOLERANCE
    return lo - tol <= report.gap <= hi + tol


# vim: sw=4:et:ai
