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
Induced Distribution
--------------------
For a fixed reference sample, the percentile estimate :math:`\\hat{p}(x)`
is a deterministic, increasing function of `x`. The distribution of
:math:`\\hat{p}(X)` is then

    .. math::

        \\tilde{F}(u) = P(\\hat{p}(X) \\le u) = F(\\hat{p}^{-1}(u))

where `F` is the true distribution of `X`. Since the reference sample is
random, the induced distribution :math:`\\tilde{F}` is random as well.

The empirical distribution function :math:`F_m` of `m` percentile
estimates deviates from the uniform distribution :math:`F_U` by

    .. math::

        F_m - F_U = (F_m - \\tilde{F}) + (\\tilde{F} - F_U)

The first term is sampling fluctuation of order :math:`m^{-1/2}`, the
second term is reference sample error of order :math:`n^{-1/2}`.

Example
~~~~~~~
    >>> from pitcalib.pit import sort_reference
    >>> sample = sort_reference([0.25, 0.5, 0.75])
    >>> induced_cdf(sample, UNIFORM, 0.625)
    0.625
"""

from collections import namedtuple
import logging

import numpy as np
from scipy.stats import norm, uniform

from .error import ConfigError, SampleError
from .pit import invert_percentile, invert_percentiles
from . import const

logger = logging.getLogger(__name__)


TrueDistribution = namedtuple('TrueDistribution', 'name cdf quantile sampler')
TrueDistribution.__doc__ = """
Known, true distribution of observations.

:var name: Distribution name.
:var cdf: Cumulative distribution function.
:var quantile: Quantile function, inverse of `cdf`.
:var sampler: Function `f(rng, size)` drawing array of observations with
    random number generator `rng`.
"""

DecompositionResult = namedtuple(
    'DecompositionResult', 'grid term_sampling term_reference total'
)
DecompositionResult.__doc__ = """
Decomposition of deviation of empirical distribution function of
percentile estimates from the uniform distribution.

:var grid: Evaluation points in (0, 1).
:var term_sampling: Sampling term :math:`F_m - \\tilde{F}` on the grid.
:var term_reference: Reference term :math:`\\tilde{F} - F_U` on the grid.
:var total: Total deviation :math:`F_m - F_U` on the grid.
"""


NORMAL = TrueDistribution(
    'normal', norm.cdf, norm.ppf, lambda rng, size: rng.standard_normal(size)
)
UNIFORM = TrueDistribution(
    'uniform', uniform.cdf, uniform.ppf, lambda rng, size: rng.random(size)
)

DISTRIBUTIONS = {d.name: d for d in (NORMAL, UNIFORM)}


def get_distribution(name):
    """
    Get true distribution by its name.

    :param name: Distribution name, i.e. `normal`.
    """
    try:
        return DISTRIBUTIONS[name]
    except KeyError:
        raise ConfigError('Unknown distribution: {}'.format(name))


def scaled_normal(scale):
    """
    Create zero mean normal distribution with standard deviation `scale`.

    With array of scales, each observation has its own distribution.

    :param scale: Standard deviation or array of standard deviations.
    """
    return TrueDistribution(
        'normal({})'.format(scale),
        lambda x: norm.cdf(x, scale=scale),
        lambda u: norm.ppf(u, scale=scale),
        lambda rng, size: scale * rng.standard_normal(size),
    )


def default_grid(size=const.GRID_SIZE):
    """
    Create grid of `size` equally spaced points in open interval (0, 1).

    >>> default_grid(4)
    array([0.125, 0.375, 0.625, 0.875])

    :param size: Number of grid points.
    """
    return (np.arange(size) + 0.5) / size


def induced_cdf(sample, dist, u):
    """
    Evaluate induced distribution of percentile estimates at `u`.

    The percentile estimates have to be monotone for the reference
    sample.

    :param sample: Ordered reference sample.
    :param dist: True distribution of observations.
    :param u: Value in (0, 1).
    """
    return float(dist.cdf(invert_percentile(sample, u)))


def decomposition_terms(sample, dist, phat_values, grid):
    """
    Decompose deviation of empirical distribution function of percentile
    estimates from the uniform distribution into sampling and reference
    sample terms.

    :param sample: Ordered reference sample.
    :param dist: True distribution of observations.
    :param phat_values: Percentile estimates in (0, 1).
    :param grid: Sorted evaluation points in (0, 1).
    """
    grid = np.asarray(grid, dtype=float)
    ph = np.sort(np.asarray(phat_values, dtype=float))
    if len(ph) == 0:
        raise SampleError('empty sample')

    if len(grid) == 0:
        empty = np.empty(0)
        return DecompositionResult(grid, empty, empty, empty)

    assert np.all(np.diff(grid) >= 0), 'grid has to be sorted'

    f_m = np.searchsorted(ph, grid, side='right') / len(ph)
    f_tilde = np.asarray(dist.cdf(invert_percentiles(sample, grid)), dtype=float)

    return DecompositionResult(
        grid, f_m - f_tilde, f_tilde - grid, f_m - grid
    )


def sup_norms(result):
    """
    Calculate sup norms of the decomposition terms over the grid.

    Tuple `(sampling, reference, total)` is returned.

    :param result: Decomposition result.
    """
    if len(result.grid) == 0:
        return 0.0, 0.0, 0.0
    return tuple(
        float(np.max(np.abs(t)))
        for t in (result.term_sampling, result.term_reference, result.total)
    )


# vim: sw=4:et:ai
