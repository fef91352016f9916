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
Empirical Percentiles
---------------------
An observation `x` is assigned an empirical percentile relative to
a reference sample `y_1, ..., y_n`. The order statistics of the reference
sample :math:`y_{(1)} < ... < y_{(n)}` get plotting positions

    .. math::

        \\tilde{p}_i = i / (n + 1)

and values between the order statistics are interpolated linearly. Below
the smallest and above the largest order statistic logistic tails are
used

    .. math::

        \\hat{p}(x) = r^{x / y_{(1)}} / (1 + r^{x / y_{(1)}})

        \\hat{p}(x) = 1 - s^{x / y_{(n)}} / (1 + s^{x / y_{(n)}})

where :math:`r = \\tilde{p}_1 / (1 - \\tilde{p}_1)` and
:math:`s = (1 - \\tilde{p}_n) / \\tilde{p}_n`. Both tails are continuous
at the sample extremes and both odds are equal to :math:`1 / n`.

The tails are monotone only when :math:`y_{(1)} < 0 < y_{(n)}`, which is
the usual case for profit and loss data. Outside of this regime the tail
formulas are still evaluated, but the estimate is flagged with
monotonicity warning. An estimate is always clamped to
:math:`[\\epsilon, 1 - \\epsilon]`.

Example
~~~~~~~
    >>> sample = sort_reference([1.0, -1.0, 0.0])
    >>> estimate_percentile(sample, 0.5)
    PitEstimate(value=0.625, region='interior', segment=2, warning=False)
    >>> round(estimate_percentile(sample, -2.0).value, 12)
    0.1
    >>> invert_percentile(sample, 0.625)
    0.5
"""

from collections import namedtuple
import logging
import math

import numpy as np
from scipy.special import expit

from .error import SampleError, TieError, SingularTailError, \
    InversionError, BatchError
from .ft import recurse_while, bisect_solve
from . import const

logger = logging.getLogger(__name__)


class Region(object):
    """
    Region of empirical percentile estimate.

    LOWER_TAIL
        Observation below smallest order statistic.
    INTERIOR
        Observation between two order statistics (inclusive).
    UPPER_TAIL
        Observation above largest order statistic.
    """
    LOWER_TAIL = 'lower-tail'
    INTERIOR = 'interior'
    UPPER_TAIL = 'upper-tail'


OrderedSample = namedtuple('OrderedSample', 'values size')
OrderedSample.__doc__ = """
Reference sample sorted in ascending order.

:var values: Order statistics (read-only array).
:var size: Size of the sample.
"""

PitEstimate = namedtuple('PitEstimate', 'value region segment warning')
PitEstimate.__doc__ = """
Empirical percentile estimate.

:var value: Percentile estimate in (0, 1).
:var region: Region of the estimate, see :class:`Region`.
:var segment: Index `k` of interior segment `[y(k), y(k + 1)]` (starting
    with one), null for tails.
:var warning: Monotonicity warning flag, set when tail formula is applied
    outside of its monotone regime.
"""


def format_region(estimate):
    """
    Format region of percentile estimate, i.e. `interior(2)`.

    :param estimate: Percentile estimate.
    """
    if estimate.region == Region.INTERIOR:
        return '{}({})'.format(estimate.region, estimate.segment)
    return estimate.region


def sort_reference(values):
    """
    Create ordered reference sample.

    :param values: Collection of reference sample values.
    """
    y = np.array(values, dtype=float)
    if y.ndim != 1:
        raise SampleError('reference sample has to be one dimensional')
    if len(y) < 2:
        raise SampleError('reference sample too small')
    if not np.all(np.isfinite(y)):
        raise SampleError('reference sample has non-finite values')

    y.sort()
    if np.any(np.diff(y) == 0):
        raise TieError('reference sample has tied values')

    y.setflags(write=False)
    return OrderedSample(y, len(y))


def plotting_positions(n):
    """
    Calculate plotting positions `i / (n + 1)` for `i = 1, ..., n`.

    >>> plotting_positions(3)
    array([0.25, 0.5 , 0.75])

    :param n: Size of reference sample.
    """
    if n < 2:
        raise SampleError('reference sample too small')
    return np.arange(1, n + 1) / (n + 1)


def log_odds(n):
    """
    Logarithm of tail odds :math:`r = s = 1 / n` for sample of size `n`.

    :param n: Size of reference sample.
    """
    return -math.log(n)


def _interpolate(x, y_lo, y_hi, k, n):
    """
    Interpolate linearly between plotting positions of order statistics
    `y(k)` and `y(k + 1)`.
    """
    d = y_hi - y_lo
    return (y_hi - x) / d * (k / (n + 1)) + (x - y_lo) / d * ((k + 1) / (n + 1))


def _clamp(value):
    return min(max(value, const.EPSILON), 1 - const.EPSILON)


def estimate_percentile(sample, x):
    """
    Estimate empirical percentile of value `x` relative to reference
    sample.

    :param sample: Ordered reference sample.
    :param x: Value to estimate empirical percentile for.
    """
    x = float(x)
    if not math.isfinite(x):
        raise SampleError('non-finite value: {}'.format(x))

    y = sample.values
    n = sample.size
    y1 = float(y[0])
    yn = float(y[-1])

    segment = None
    if x < y1:
        if y1 == 0:
            raise SingularTailError('tail formula singular: y(1) = 0')
        value = float(expit(x / y1 * log_odds(n)))
        region = Region.LOWER_TAIL
        warning = y1 > 0
    elif x > yn:
        if yn == 0:
            raise SingularTailError('tail formula singular: y(n) = 0')
        value = float(expit(-(x / yn * log_odds(n))))
        region = Region.UPPER_TAIL
        warning = yn < 0
    else:
        segment = min(int(np.searchsorted(y, x, side='right')), n - 1)
        value = _interpolate(x, float(y[segment - 1]), float(y[segment]), segment, n)
        region = Region.INTERIOR
        warning = False

    if __debug__ and warning:
        logger.debug('tail monotonicity warning: x={}, y(1)={}, y(n)={}'.format(
            x, y1, yn
        ))

    return PitEstimate(_clamp(value), region, segment, warning)


def estimate_batch(sample, xs):
    """
    Estimate empirical percentiles of collection of values.

    The order of values is preserved. On error, :class:`BatchError` with
    index of failing value is raised.

    :param sample: Ordered reference sample.
    :param xs: Collection of values.
    """
    result = []
    for i, x in enumerate(xs):
        try:
            result.append(estimate_percentile(sample, x))
        except (SampleError, SingularTailError) as ex:
            raise BatchError(i, ex) from ex
    return tuple(result)


def percentiles(refs, xs):
    """
    Estimate empirical percentiles for an array of values.

    The reference is either single ordered sample (1-dimensional array),
    against which all values are evaluated, or 2-dimensional array with
    one ordered reference sample per row, against which the value of the
    same index is evaluated.

    The estimates are exactly the values of :func:`estimate_percentile`.
    Tuple of estimates array and monotonicity warnings array is returned.

    :param refs: Ordered reference sample(s).
    :param xs: Array of values.
    """
    xs = np.asarray(xs, dtype=float)
    refs = np.asarray(refs, dtype=float)
    n = refs.shape[-1]
    assert n >= 2

    if refs.ndim == 1:
        k = np.searchsorted(refs, xs, side='right')
        refs = refs[np.newaxis, :]
        rows = np.zeros(len(xs), dtype=int)
    else:
        assert refs.shape[0] == len(xs), refs.shape
        k = np.count_nonzero(refs <= xs[:, np.newaxis], axis=1)
        rows = np.arange(len(xs))

    y1 = refs[rows, 0]
    yn = refs[rows, -1]
    lower = xs < y1
    upper = xs > yn

    if np.any(lower & (y1 == 0)) or np.any(upper & (yn == 0)):
        raise SingularTailError('tail formula singular: sample extreme is 0')

    seg = np.clip(k, 1, n - 1)
    y_lo = refs[rows, seg - 1]
    y_hi = refs[rows, seg]
    d = y_hi - y_lo
    value = (y_hi - xs) / d * (seg / (n + 1)) + (xs - y_lo) / d * ((seg + 1) / (n + 1))

    lr = log_odds(n)
    with np.errstate(divide='ignore', invalid='ignore'):
        value = np.where(lower, expit(xs / y1 * lr), value)
        value = np.where(upper, expit(-(xs / yn * lr)), value)

    warning = (lower & (y1 > 0)) | (upper & (yn < 0))
    return np.clip(value, const.EPSILON, 1 - const.EPSILON), warning


def _tail_bracket(f, start, step, u, outward):
    """
    Expand geometrically a range from `start` outwards, until percentile
    estimate `f` passes value `u`.

    Tuple `(lo, hi)` is returned, so `f(lo) <= u <= f(hi)`.
    """
    sign = -1 if outward < 0 else 1
    beyond = (lambda x: f(x) > u) if sign < 0 else (lambda x: f(x) < u)

    next_f = lambda x, step: (x + sign * step, 2 * step)
    inv_f = lambda x, step: beyond(x)

    x, step = recurse_while(
        inv_f, next_f, start, step, limit=const.INV_MAX_ITER
    )
    end = x + sign * step
    if beyond(end):
        raise InversionError(
            'cannot bracket percentile {} (non-monotone tail?)'.format(u)
        )

    if __debug__:
        logger.debug('tail bracket: {} - {}'.format(x, end))

    return (end, x) if sign < 0 else (x, end)


def invert_percentile(sample, u):
    """
    Find value `x`, which empirical percentile estimate is `u`.

    The interior segments are inverted in closed form. The tails are
    inverted with bisection on a range expanded geometrically from the
    sample extreme.

    :param sample: Ordered reference sample.
    :param u: Percentile value in (0, 1).
    """
    u = float(u)
    if not 0 < u < 1:
        raise InversionError('percentile {} outside of (0, 1)'.format(u))

    y = sample.values
    n = sample.size
    p1 = 1 / (n + 1)
    pn = n / (n + 1)

    if p1 <= u <= pn:
        k = min(max(int(u * (n + 1)), 1), n - 1)
        pk = k / (n + 1)
        dp = (k + 1) / (n + 1) - pk
        return float(y[k - 1] + (u - pk) / dp * (y[k] - y[k - 1]))

    if not const.EPSILON <= u <= 1 - const.EPSILON:
        raise InversionError('percentile {} beyond estimate clamp'.format(u))

    f = lambda x: estimate_percentile(sample, x).value
    if u < p1:
        start = float(y[0])
        outward = -1
    else:
        start = float(y[-1])
        outward = 1

    if start == 0:
        raise SingularTailError('tail formula singular: sample extreme is 0')

    lo, hi = _tail_bracket(f, start, abs(start), u, outward)
    return bisect_solve(
        f, lo, hi, u, const.INV_TOLERANCE, const.INV_MAX_ITER
    )


def invert_percentiles(sample, us):
    """
    Invert percentile estimates for an array of values.

    Values within the interior segments are inverted at once, the tail
    values one by one with :func:`invert_percentile`.

    :param sample: Ordered reference sample.
    :param us: Array of percentile values in (0, 1).
    """
    us = np.asarray(us, dtype=float)
    if np.any((us <= 0) | (us >= 1)):
        raise InversionError('percentiles outside of (0, 1)')

    y = sample.values
    n = sample.size
    k = np.clip((us * (n + 1)).astype(int), 1, n - 1)
    pk = k / (n + 1)
    dp = (k + 1) / (n + 1) - pk
    x = y[k - 1] + (us - pk) / dp * (y[k] - y[k - 1])

    tails = np.flatnonzero((us < 1 / (n + 1)) | (us > n / (n + 1)))
    for i in tails:
        x[i] = invert_percentile(sample, us[i])
    return x


# vim: sw=4:et:ai
