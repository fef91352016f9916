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
Monte Carlo Harness
-------------------
The harness repeats percentile estimation experiments for various regimes
of reference samples

exact
    Order statistics of uniform samples (Donsker's theorem in finite
    samples).
fixed-reference
    All evaluated observations are ranked against one common reference
    sample.
independent-reference
    Each evaluated observation is ranked against its own, fresh reference
    sample.
rolling-window
    Each evaluated observation is ranked against the preceding `n`
    observations.

Each replication uses its own random number generator stream derived from
master seed and replication index, therefore the results do not depend on
the order or parallelism of replications execution.

Example
~~~~~~~
    >>> config = create_config(Regime.FIXED, m=32, reps=50)
    >>> summary = run_fixed_reference(config)
    >>> len(summary.runs)
    50
    >>> -1 <= summary.correlation_ks <= 1
    True
"""

from collections import namedtuple, OrderedDict
import logging
import math
import os

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view
from joblib import Parallel, delayed

from .error import ConfigError, SampleError, TieError, SingularTailError, \
    ExperimentError
from .induced import get_distribution, decomposition_terms, default_grid, \
    scaled_normal, sup_norms
from .ks import ks_one_sample_uniform, ks_two_sample, ks_grid_statistic, \
    bound_holds, BoundReport
from .pit import sort_reference, percentiles
from . import const

logger = logging.getLogger(__name__)


class Regime(object):
    """
    Regime of reference samples.
    """
    EXACT = 'exact'
    FIXED = 'fixed-reference'
    INDEPENDENT = 'independent-reference'
    ROLLING = 'rolling-window'

    ALL = (EXACT, FIXED, INDEPENDENT, ROLLING)


RegimeConfig = namedtuple(
    'RegimeConfig', 'regime n m reps distribution master_seed heterogeneous'
)
RegimeConfig.__doc__ = """
Configuration of Monte Carlo experiment.

:var regime: Regime of reference samples, see :class:`Regime`.
:var n: Size of reference sample.
:var m: Size of evaluated sample.
:var reps: Number of replications.
:var distribution: Name of true distribution of observations.
:var master_seed: Master seed of random number generator streams.
:var heterogeneous: Draw each observation and its reference sample from
    normal distribution with its own scale (independent-reference regime
    only).
"""

RunRecord = namedtuple(
    'RunRecord',
    'rep_index ks_exact ks_empirical ks_two_sample ks_grid sorted_exact'
    ' sorted_empirical warnings retries'
)
RunRecord.__doc__ = """
Results of single replication.

:var rep_index: Replication index.
:var ks_exact: One-sample statistic of exact percentiles.
:var ks_empirical: One-sample statistic of percentile estimates.
:var ks_two_sample: Two-sample statistic of evaluated and reference
    samples (fixed-reference regime only, null otherwise).
:var ks_grid: Grid restricted statistic of percentile estimates
    (fixed-reference regime only, null otherwise).
:var sorted_exact: Order statistics of exact percentiles.
:var sorted_empirical: Order statistics of percentile estimates.
:var warnings: Number of estimates with monotonicity warning.
:var retries: Number of retries of the replication.
"""

DispersionProfile = namedtuple(
    'DispersionProfile', 'rank_means rank_stds rescaled_stds'
)
DispersionProfile.__doc__ = """
Per rank dispersion of order statistics across replications.

:var rank_means: Mean of order statistic of each rank.
:var rank_stds: Standard deviation of order statistic of each rank.
:var rescaled_stds: Rescaled standard deviations.
"""

ExperimentSummary = namedtuple(
    'ExperimentSummary',
    'config profile_exact profile_empirical correlation_ks'
    ' rejection_rate_05 rejection_rate_two_05 profile_sup_gap'
    ' appendix_bound_violations runs'
)
ExperimentSummary.__doc__ = """
Summary of Monte Carlo experiment.

:var config: Experiment configuration.
:var profile_exact: Dispersion profile of exact percentiles.
:var profile_empirical: Dispersion profile of percentile estimates.
:var correlation_ks: Correlation between one-sample statistics of exact
    percentiles and percentile estimates.
:var rejection_rate_05: Fraction of replications with one-sample p-value
    of percentile estimates below 0.05.
:var rejection_rate_two_05: Fraction of replications with two-sample p-value
    below 0.05, `None` for regimes without two-sample statistic.
:var profile_sup_gap: Maximum over ranks of difference between rescaled
    standard deviation of percentile estimates and standard deviation of
    exact percentiles.
:var appendix_bound_violations: Number of replications violating the
    bracket of difference between two-sample and grid restricted
    statistics.
:var runs: Results of replications.
"""

DecompositionStudy = namedtuple(
    'DecompositionStudy', 'config sup_sampling sup_reference sup_total'
)
DecompositionStudy.__doc__ = """
Sup norms of decomposition terms for each replication.

:var config: Experiment configuration.
:var sup_sampling: Sup norms of sampling term.
:var sup_reference: Sup norms of reference sample term.
:var sup_total: Sup norms of total deviation.
"""


def create_config(regime, n=const.DEFAULT_N, m=const.DEFAULT_M,
        reps=const.DEFAULT_REPS, distribution=const.DEFAULT_DIST,
        master_seed=const.DEFAULT_SEED, heterogeneous=False):
    """
    Create and validate Monte Carlo experiment configuration.

    :param regime: Regime of reference samples.
    :param n: Size of reference sample.
    :param m: Size of evaluated sample.
    :param reps: Number of replications.
    :param distribution: Name of true distribution.
    :param master_seed: Master seed.
    :param heterogeneous: Use scaled normal distribution per observation.
    """
    config = RegimeConfig(
        regime, n, m, reps, distribution, master_seed, heterogeneous
    )
    validate_config(config)
    return config


def validate_config(config):
    """
    Validate Monte Carlo experiment configuration.

    `ConfigError` is raised if configuration is invalid.

    :param config: Experiment configuration.
    """
    if config.regime not in Regime.ALL:
        raise ConfigError('Unknown regime: {}'.format(config.regime))
    if config.n < 2:
        raise ConfigError('Reference sample size has to be at least 2')
    if config.m < 1:
        raise ConfigError('Evaluated sample size has to be at least 1')
    if config.reps < 1:
        raise ConfigError('Number of replications has to be at least 1')
    if config.master_seed < 0:
        raise ConfigError('Master seed has to be non-negative')
    if config.heterogeneous and config.regime != Regime.INDEPENDENT:
        raise ConfigError(
            'Heterogeneous distributions supported by independent-reference'
            ' regime only'
        )
    get_distribution(config.distribution)


def _check_regime(config, regime):
    validate_config(config)
    if config.regime != regime:
        raise ConfigError('Expected {} regime, got {}'.format(
            regime, config.regime
        ))


def derive_seed(master_seed, rep_index, attempt=0):
    """
    Create random number generator for replication.

    The stream state is mixed from master seed, replication index and
    retry attempt number with `numpy.random.SeedSequence`, so streams are
    independent and identical across runs.

    :param master_seed: Master seed.
    :param rep_index: Replication index.
    :param attempt: Retry attempt number.
    """
    seq = np.random.SeedSequence(master_seed, spawn_key=(rep_index, attempt))
    return np.random.Generator(np.random.PCG64(seq))


def configured_threads():
    """
    Get number of threads for replications from `PIT_CALIB_THREADS`
    environment variable (default is 1).
    """
    value = os.environ.get(const.THREADS_ENV)
    if not value:
        return 1
    try:
        threads = int(value)
    except ValueError:
        threads = 0
    if threads < 1:
        logger.warning('invalid {} value: {}'.format(const.THREADS_ENV, value))
        threads = 1
    return threads


def dispersion_profile(matrix, scale=1.0):
    """
    Calculate per rank dispersion of order statistics.

    Each row of the matrix holds order statistics of one replication.

    :param matrix: Matrix of order statistics, replications x ranks.
    :param scale: Rescaling factor of standard deviations.
    """
    a = np.asarray(matrix, dtype=float)
    if a.ndim != 2:
        raise SampleError('order statistics matrix has to be rectangular')
    if a.shape[0] < 2:
        raise SampleError('at least 2 replications required')

    means = a.mean(axis=0)
    stds = a.std(axis=0, ddof=1)
    return DispersionProfile(means, stds, stds * scale)


def pearson_correlation(a, b):
    """
    Calculate Pearson product-moment correlation.

    >>> round(pearson_correlation([1, 2, 3], [1, 2, 4]), 5)
    0.98198

    :param a: First sample.
    :param b: Second sample.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if len(a) != len(b) or len(a) < 2:
        raise SampleError('samples of equal length of at least 2 required')

    da = a - a.mean()
    db = b - b.mean()
    sa = np.dot(da, da)
    sb = np.dot(db, db)
    if sa == 0 or sb == 0:
        raise SampleError('zero variance sample')

    r = float(np.dot(da, db) / math.sqrt(sa * sb))
    return min(max(r, -1.0), 1.0)


def _exact(p):
    # true cdf can round to 0 or 1 far in the tails
    return np.clip(p, const.EPSILON, 1 - const.EPSILON)


def _check_ties(refs):
    if np.any(np.diff(refs, axis=-1) == 0):
        raise TieError('reference sample has tied values')


def _fixed_rep(config, dist, rng):
    y = dist.sampler(rng, config.n)
    x = dist.sampler(rng, config.m)
    sample = sort_reference(y)
    phat, warning = percentiles(sample.values, x)
    p = _exact(dist.cdf(x))
    extra = (ks_two_sample(x, y), ks_grid_statistic(phat))
    return p, phat, warning, extra


def _scales(m):
    return 0.5 + 1.5 * np.arange(m) / max(m - 1, 1)


def _independent_rep(config, dist, rng):
    m, n = config.m, config.n
    if config.heterogeneous:
        sigma = _scales(m)
        z = rng.standard_normal((m, n + 1)) * sigma[:, np.newaxis]
        x = z[:, 0]
        refs = z[:, 1:]
        p = _exact(scaled_normal(sigma).cdf(x))
    else:
        x = dist.sampler(rng, m)
        refs = dist.sampler(rng, m * n).reshape(m, n)
        p = _exact(dist.cdf(x))

    refs = np.sort(refs, axis=1)
    _check_ties(refs)
    phat, warning = percentiles(refs, x)
    return p, phat, warning, (None, None)


def _rolling_rep(config, dist, rng):
    m, n = config.m, config.n
    z = dist.sampler(rng, n + m)
    # window i holds z[i:i + n] and evaluates z[n + i]
    refs = np.sort(sliding_window_view(z[:-1], n), axis=1)
    _check_ties(refs)
    x = z[n:]
    phat, warning = percentiles(refs, x)
    p = _exact(dist.cdf(x))
    return p, phat, warning, (None, None)


def _replicate(f, config, dist, rep_index):
    """
    Execute replication function `f`, retrying it with next derived stream
    on tie collisions.

    Tuple of replication result and number of retries is returned.
    """
    for attempt in range(const.MAX_RETRIES + 1):
        rng = derive_seed(config.master_seed, rep_index, attempt)
        try:
            return f(config, dist, rng), attempt
        except (TieError, SingularTailError) as ex:
            logger.warning('replication {} retry {}: {}'.format(
                rep_index, attempt + 1, ex
            ))

    raise ExperimentError('replication {} failed after {} retries'.format(
        rep_index, const.MAX_RETRIES
    ))


def _run_record(f, config, dist, rep_index):
    (p, phat, warning, (two, grid)), retries = _replicate(
        f, config, dist, rep_index
    )
    return RunRecord(
        rep_index,
        ks_one_sample_uniform(p),
        ks_one_sample_uniform(phat),
        two,
        grid,
        np.sort(p),
        np.sort(phat),
        int(np.count_nonzero(warning)),
        retries,
    )


def _run_reps(f, config, *args):
    """
    Execute replication function `f` for each replication index.

    The results are returned in replication index order.
    """
    threads = configured_threads()
    if __debug__:
        logger.debug('{} replications, threads={}'.format(config.reps, threads))

    if threads > 1:
        return Parallel(n_jobs=threads, prefer='threads')(
            delayed(f)(*args, i) for i in range(config.reps)
        )
    return [f(*args, i) for i in range(config.reps)]


def summarize(config, runs):
    """
    Summarize replications of Monte Carlo experiment.

    :param config: Experiment configuration.
    :param runs: Collection of replication results.
    """
    m, n = config.m, config.n
    scale = 1.0
    if config.regime == Regime.FIXED:
        scale = math.sqrt(1 / m) / math.sqrt(1 / m + 1 / n)

    exact = dispersion_profile([r.sorted_exact for r in runs])
    empirical = dispersion_profile([r.sorted_empirical for r in runs], scale)

    d_exact = [r.ks_exact.statistic for r in runs]
    d_emp = [r.ks_empirical.statistic for r in runs]
    p_emp = np.array([r.ks_empirical.p_value for r in runs])
    p_two = np.array([
        r.ks_two_sample.p_value for r in runs if r.ks_two_sample is not None
    ])

    violations = sum(
        1 for r in runs
        if r.ks_two_sample is not None and not bound_holds(BoundReport(
            r.ks_grid.statistic, r.ks_two_sample.statistic,
            r.ks_two_sample.statistic - r.ks_grid.statistic, m, n, False
        ))
    )

    warnings = sum(r.warnings for r in runs)
    if warnings:
        logger.warning('{} percentile estimates with monotonicity warning'
            .format(warnings))

    return ExperimentSummary(
        config,
        exact,
        empirical,
        pearson_correlation(d_exact, d_emp),
        float(np.mean(p_emp < const.ALPHA)),
        float(np.mean(p_two < const.ALPHA)) if len(p_two) else None,
        float(np.max(np.abs(empirical.rescaled_stds - exact.rank_stds))),
        violations,
        tuple(runs),
    )


def run_donsker(config):
    """
    Calculate dispersion profile of order statistics of uniform samples of
    size `n`.

    The standard deviations are rescaled by :math:`\\sqrt{n}`.

    :param config: Experiment configuration with exact regime.
    """
    _check_regime(config, Regime.EXACT)

    def f(config, dist, rng):
        return np.sort(rng.random(config.n))

    rows = _run_reps(
        lambda *args: _replicate(*args)[0], config, f, config, None
    )
    return dispersion_profile(rows, math.sqrt(config.n))


def summarize_donsker(config, profile):
    """
    Summarize dispersion profile of Donsker study.

    The profile is used for both exact and empirical constructions. The
    profile gap is maximum over ranks of difference between rescaled
    standard deviation and :math:`\\sqrt{t(1 - t)}`, where `t = i / (n + 1)`.

    :param config: Experiment configuration with exact regime.
    :param profile: Dispersion profile rescaled by :math:`\\sqrt{n}`.
    """
    n = len(profile.rescaled_stds)
    t = np.arange(1, n + 1) / (n + 1)
    gap = float(np.max(np.abs(profile.rescaled_stds - np.sqrt(t * (1 - t)))))
    return ExperimentSummary(
        config, profile, profile, None, None, None, gap, 0, ()
    )


def _run(f, config, regime):
    _check_regime(config, regime)
    dist = get_distribution(config.distribution)
    runs = _run_reps(_run_record, config, f, config, dist)
    summary = summarize(config, runs)
    logger.info('{} experiment: n={}, m={}, reps={}, correlation={:.4f},'
        ' rejection rate={:.4f}'.format(
            regime, config.n, config.m, config.reps, summary.correlation_ks,
            summary.rejection_rate_05
        ))
    return summary


def run_fixed_reference(config):
    """
    Run experiment with all observations ranked against one common
    reference sample.

    :param config: Experiment configuration with fixed-reference regime.
    """
    return _run(_fixed_rep, config, Regime.FIXED)


def run_independent_reference(config):
    """
    Run experiment with each observation ranked against its own reference
    sample.

    :param config: Experiment configuration with independent-reference
        regime.
    """
    return _run(_independent_rep, config, Regime.INDEPENDENT)


def run_rolling_window(config):
    """
    Run experiment with each observation ranked against the preceding `n`
    observations.

    :param config: Experiment configuration with rolling-window regime.
    """
    return _run(_rolling_rep, config, Regime.ROLLING)


RUNNERS = {
    Regime.FIXED: run_fixed_reference,
    Regime.INDEPENDENT: run_independent_reference,
    Regime.ROLLING: run_rolling_window,
}


def run_ladder(config, ms=const.M_LADDER):
    """
    Run experiment for each evaluated sample size.

    Ordered dictionary of experiment summaries keyed with evaluated sample
    size is returned.

    :param config: Experiment configuration.
    :param ms: Collection of evaluated sample sizes.
    """
    try:
        runner = RUNNERS[config.regime]
    except KeyError:
        raise ConfigError('No ladder for {} regime'.format(config.regime))
    return OrderedDict((m, runner(config._replace(m=m))) for m in ms)


def run_decomposition(config, grid_size=const.GRID_SIZE):
    """
    Calculate sup norms of decomposition terms of deviation of percentile
    estimates from the uniform distribution for each replication of
    fixed-reference experiment.

    :param config: Experiment configuration with fixed-reference regime.
    :param grid_size: Number of evaluation points.
    """
    _check_regime(config, Regime.FIXED)
    dist = get_distribution(config.distribution)
    grid = default_grid(grid_size)

    def f(config, dist, rng):
        y = dist.sampler(rng, config.n)
        x = dist.sampler(rng, config.m)
        sample = sort_reference(y)
        phat, _ = percentiles(sample.values, x)
        return sup_norms(decomposition_terms(sample, dist, phat, grid))

    norms = _run_reps(
        lambda *args: _replicate(*args)[0], config, f, config, dist
    )
    s, r, t = (np.array(v) for v in zip(*norms))
    return DecompositionStudy(config, s, r, t)


def decomposition_stats(study):
    """
    Calculate mean and standard deviation of sup norms of decomposition
    terms across replications.

    Ordered dictionary keyed with term name is returned, each value being
    a tuple of mean and standard deviation.

    :param study: Decomposition study.
    """
    terms = (
        ('sampling', study.sup_sampling),
        ('reference', study.sup_reference),
        ('total', study.sup_total),
    )
    ddof = 1 if len(study.sup_total) > 1 else 0
    return OrderedDict(
        (k, (float(np.mean(v)), float(np.std(v, ddof=ddof))))
        for k, v in terms
    )


# vim: sw=4:et:ai
