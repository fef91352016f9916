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
Functional helpers for iterative numerical searches.
"""

import logging

logger = logging.getLogger(__name__)


def _as_args(value):
    return value if isinstance(value, tuple) else (value, )


def recurse_while(predicate, f, *args, limit=None):
    """
    Step with function `f` from starting arguments while the predicate
    accepts the step result.

    Last accepted result is returned, or starting arguments if the first
    step is rejected. With `limit` set, at most `limit` steps are accepted.

    :param predicate: Predicate function accepting a step result.
    :param f: Step function.
    :param *args: Starting arguments.
    :param limit: Maximum number of accepted steps.
    """
    current = args
    count = 0
    while limit is None or count < limit:
        candidate = _as_args(f(*current))
        if not predicate(*candidate):
            break
        current = candidate
        count += 1

        if __debug__:
            logger.debug('step {} accepted: {}'.format(count, current))

    return current if len(current) > 1 else current[0]


def bisect_solve(f, lo, hi, target, tol, max_iter):
    """
    Find `x` in range `lo <= x <= hi` for which `f(x)` equals target
    value within tolerance.

    The function `f` has to be non-decreasing on the range and
    `f(lo) <= target <= f(hi)` has to hold. The search stops when
    `|f(x) - target| <= tol` or after `max_iter` iterations, in which case
    the middle of the last range is returned.

    >>> x = bisect_solve(lambda x: x * x, 0, 2, 2, 1e-12, 200)
    >>> round(x, 9)
    1.414213562

    :param f: Non-decreasing function.
    :param lo: Start of the range.
    :param hi: End of the range.
    :param target: Target value of `f`.
    :param tol: Absolute tolerance in the value of `f`.
    :param max_iter: Maximum number of iterations.
    """
    assert lo <= hi, '{} vs. {}'.format(lo, hi)

    x = (lo + hi) / 2
    for k in range(max_iter):
        x = (lo + hi) / 2
        v = f(x)
        if abs(v - target) <= tol:
            break
        if v < target:
            lo = x
        else:
            hi = x

    if __debug__:
        logger.debug('bisect solve: x={}, iterations={}'.format(x, k + 1))

    return x


# vim: sw=4:et:ai
