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
PitCalib command line interface.

The `pit-calib` command provides subcommands to

- run Monte Carlo experiments and save the reports (``donsker``,
  ``fixed-ref``, ``indep-ref``, ``rolling``, ``decompose``)
- estimate percentiles of values against a reference sample (``pit``)
- calculate Kolmogorov-Smirnov statistics of samples (``ks``)
- check the bracket of difference between two-sample and grid restricted
  statistics on random instances (``bound-sweep``)

Diagnostics are written to standard error, the data to files or standard
output.
"""

import argparse
import logging
import os.path
import sys

from .error import PitError, SampleError, TieError
from .harness import Regime, create_config, derive_seed, run_donsker, \
    summarize_donsker, run_decomposition, decomposition_stats, RUNNERS
from .induced import DISTRIBUTIONS
from .ks import ks_one_sample_uniform, ks_two_sample, bound_check, \
    bound_holds
from .output import write_profile_csv, write_runs_csv, write_summary_json, \
    write_decomposition_json
from .pit import sort_reference, estimate_percentile, format_region
from . import const

logger = logging.getLogger(__name__)


def _int_type(low):
    def parse(value):
        try:
            v = int(value)
        except ValueError:
            raise argparse.ArgumentTypeError(
                'invalid integer value: {!r}'.format(value)
            )
        if v < low:
            raise argparse.ArgumentTypeError(
                'value has to be at least {}: {}'.format(low, v)
            )
        return v
    return parse


def _add_experiment_args(parser, reps=const.DEFAULT_REPS):
    parser.add_argument(
        '--n', type=_int_type(2), default=const.DEFAULT_N,
        help='reference sample size (default %(default)s)'
    )
    parser.add_argument(
        '--m', type=_int_type(1), default=const.DEFAULT_M,
        help='evaluated sample size (default %(default)s)'
    )
    parser.add_argument(
        '--reps', type=_int_type(1), default=reps,
        help='number of replications (default %(default)s)'
    )
    parser.add_argument(
        '--seed', type=_int_type(0), default=const.DEFAULT_SEED,
        help='master seed (default %(default)s)'
    )
    parser.add_argument(
        '--dist', choices=sorted(DISTRIBUTIONS), default=const.DEFAULT_DIST,
        help='true distribution (default %(default)s)'
    )
    parser.add_argument(
        '--out', default='.', metavar='DIR',
        help='output directory (default current directory)'
    )
    parser.add_argument(
        '--full', action='store_true', default=False,
        help='include replication results in summary file'
    )


def create_parser():
    """
    Create command line arguments parser.
    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        '-v', '--verbose', action='store_true', default=argparse.SUPPRESS,
        help='log debug messages'
    )

    parser = argparse.ArgumentParser(
        prog='pit-calib',
        description='PitCalib - empirical PIT calibration tools',
        parents=[common],
    )
    sub = parser.add_subparsers(dest='command', metavar='command')
    sub.required = True

    p = sub.add_parser(
        'donsker', parents=[common],
        help='dispersion of order statistics of uniform samples'
    )
    # --m and --dist are accepted, but uniform samples of size n are used
    _add_experiment_args(p, const.DEFAULT_REPS_DONSKER)
    p.set_defaults(func=cmd_donsker)

    p = sub.add_parser(
        'fixed-ref', parents=[common],
        help='experiment with common reference sample'
    )
    _add_experiment_args(p)
    p.set_defaults(func=cmd_experiment, regime=Regime.FIXED)

    p = sub.add_parser(
        'indep-ref', parents=[common],
        help='experiment with independent reference samples'
    )
    _add_experiment_args(p)
    p.add_argument(
        '--heterogeneous', action='store_true', default=False,
        help='use normal distribution with different scale per observation'
    )
    p.set_defaults(func=cmd_experiment, regime=Regime.INDEPENDENT)

    p = sub.add_parser(
        'rolling', parents=[common],
        help='experiment with rolling window reference samples'
    )
    _add_experiment_args(p)
    p.set_defaults(func=cmd_experiment, regime=Regime.ROLLING)

    p = sub.add_parser(
        'decompose', parents=[common],
        help='sup norms of decomposition terms of percentile estimates'
    )
    _add_experiment_args(p)
    p.add_argument(
        '--grid-size', type=_int_type(1), default=const.GRID_SIZE,
        help='number of evaluation points (default %(default)s)'
    )
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser(
        'pit', parents=[common],
        help='estimate percentiles against reference sample'
    )
    p.add_argument('reference', help='reference sample file, one value per line')
    p.add_argument('x', nargs='+', type=float, help='values to evaluate')
    p.set_defaults(func=cmd_pit)

    p = sub.add_parser(
        'ks', parents=[common],
        help='Kolmogorov-Smirnov statistic of one or two samples'
    )
    p.add_argument(
        'files', nargs='+', metavar='file',
        help='sample file, one value per line; one file for one-sample test'
        ' against uniform distribution, two files for two-sample test'
    )
    p.set_defaults(func=cmd_ks)

    p = sub.add_parser(
        'bound-sweep', parents=[common],
        help='check two-sample and grid statistics bracket'
    )
    p.add_argument(
        '--max-m', type=_int_type(1), default=32,
        help='maximum evaluated sample size (default %(default)s)'
    )
    p.add_argument(
        '--max-n', type=_int_type(2), default=32,
        help='maximum reference sample size (default %(default)s)'
    )
    p.add_argument(
        '--trials', type=_int_type(1), default=10000,
        help='number of random instances (default %(default)s)'
    )
    p.add_argument(
        '--seed', type=_int_type(0), default=const.DEFAULT_SEED,
        help='master seed (default %(default)s)'
    )
    p.set_defaults(func=cmd_bound_sweep)

    return parser


def parse_args(argv=None):
    """
    Parse command line arguments.

    Usage error exits with nonzero code.

    :param argv: Command line arguments (default from `sys.argv`).
    """
    parser = create_parser()
    args = parser.parse_args(argv)
    if args.command == 'ks' and len(args.files) > 2:
        parser.error('ks: at most two sample files allowed')
    return args


def read_values(path):
    """
    Read real values from a file, one value per line.

    Blank lines are skipped.

    :param path: Path of the file.
    """
    values = []
    with open(path, encoding='utf-8') as f:
        for i, line in enumerate(f, 1):
            line = line.strip()
            if not line:
                continue
            try:
                values.append(float(line))
            except ValueError:
                raise SampleError('{}:{}: invalid value {!r}'.format(
                    path, i, line
                ))
    if not values:
        raise SampleError('{}: empty sample'.format(path))
    return values


def output_prefix(args):
    """
    Get path prefix of report files of experiment command.

    :param args: Parsed command line arguments.
    """
    m = args.n if args.command == 'donsker' else args.m
    name = '{}_n{}_m{}_s{}'.format(args.command, args.n, m, args.seed)
    return os.path.join(args.out, name)


def _write_reports(args, summary, runs=True):
    os.makedirs(args.out, exist_ok=True)
    prefix = output_prefix(args)
    files = [prefix + '.profile.csv']
    write_profile_csv(
        summary.profile_exact, summary.profile_empirical, files[-1]
    )
    if runs:
        files.append(prefix + '.runs.csv')
        write_runs_csv(summary.runs, files[-1])
    files.append(prefix + '.summary.json')
    write_summary_json(summary, files[-1], full=args.full)

    for fn in files:
        print(fn)


def cmd_donsker(args):
    """
    Run Donsker study and save its reports.
    """
    config = create_config(
        Regime.EXACT, n=args.n, m=args.n, reps=args.reps,
        master_seed=args.seed
    )
    summary = summarize_donsker(config, run_donsker(config))
    logger.info('profile gap: {:.6f}'.format(summary.profile_sup_gap))
    _write_reports(args, summary, runs=False)
    return 0


def cmd_experiment(args):
    """
    Run Monte Carlo experiment and save its reports.
    """
    config = create_config(
        args.regime, n=args.n, m=args.m, reps=args.reps,
        distribution=args.dist, master_seed=args.seed,
        heterogeneous=getattr(args, 'heterogeneous', False),
    )
    summary = RUNNERS[args.regime](config)
    _write_reports(args, summary)
    return 0


def cmd_decompose(args):
    """
    Run decomposition study and save its summary.
    """
    config = create_config(
        Regime.FIXED, n=args.n, m=args.m, reps=args.reps,
        distribution=args.dist, master_seed=args.seed
    )
    study = run_decomposition(config, args.grid_size)
    os.makedirs(args.out, exist_ok=True)
    fn = output_prefix(args) + '.summary.json'
    write_decomposition_json(study, decomposition_stats(study), fn)
    print(fn)
    return 0


def cmd_pit(args):
    """
    Print percentile estimate, region and monotonicity warning of each
    value.
    """
    sample = sort_reference(read_values(args.reference))
    for x in args.x:
        est = estimate_percentile(sample, x)
        line = '{:.12g} {}'.format(est.value, format_region(est))
        if est.warning:
            line += ' warning'
        print(line)
    return 0


def cmd_ks(args):
    """
    Print Kolmogorov-Smirnov statistic, effective sample size and p-value.
    """
    samples = [read_values(fn) for fn in args.files]
    if len(samples) == 1:
        outcome = ks_one_sample_uniform(samples[0])
    else:
        outcome = ks_two_sample(*samples)

    print('mode: {}'.format(outcome.mode))
    print('statistic: {:.12g}'.format(outcome.statistic))
    print('n_eff: {:.12g}'.format(outcome.n_eff))
    print('p-value: {:.12g}'.format(outcome.p_value))
    return 0


def cmd_bound_sweep(args):
    """
    Check two-sample and grid statistics bracket on random instances.

    Instances with monotonicity warning or tied values are skipped.
    """
    violations = skipped = 0
    for trial in range(args.trials):
        rng = derive_seed(args.seed, trial)
        m = int(rng.integers(1, args.max_m + 1))
        n = int(rng.integers(2, args.max_n + 1))
        xs = rng.standard_normal(m)
        ys = rng.standard_normal(n)
        try:
            report = bound_check(xs, ys)
        except TieError:
            skipped += 1
            continue

        if report.warning:
            skipped += 1
        elif not bound_holds(report):
            violations += 1
            logger.warning('bound violated: {}'.format(report))

    print('trials: {}'.format(args.trials))
    print('violations: {}'.format(violations))
    print('skipped: {}'.format(skipped))
    return 0


def main(argv=None):
    """
    Run `pit-calib` command.

    Exit code is returned.

    :param argv: Command line arguments (default from `sys.argv`).
    """
    args = parse_args(argv)
    verbose = getattr(args, 'verbose', False)
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.DEBUG if verbose else logging.INFO,
        format='%(levelname)s %(name)s: %(message)s',
    )
    try:
        return args.func(args)
    except (PitError, OSError) as ex:
        print('pit-calib: error: {}'.format(ex), file=sys.stderr)
        return 1


# vim: sw=4:et:ai
