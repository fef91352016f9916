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
PitCalib report records, functions and coroutines.

The implemented functions and coroutines

- convert dispersion profiles and replication results into report rows
- save report rows in CSV files
- save experiment summaries in JSON files

Real numbers are formatted with 17 significant digits, so the values
parsed from a report equal the values in memory. The files are UTF-8
encoded and use LF line endings.
"""

from collections import namedtuple, OrderedDict
import csv
import json
import logging
import os

from .error import ReportError, SampleError
from .flow import coroutine, feed

logger = logging.getLogger(__name__)


PROFILE_HEADER = (
    'rank', 't', 'mean_exact', 'std_exact', 'mean_emp', 'std_emp',
    'std_emp_rescaled'
)
RUNS_HEADER = ('rep', 'd_exact', 'p_exact', 'd_emp', 'p_emp', 'd_two', 'p_two')

ProfileRow = namedtuple('ProfileRow', ' '.join(PROFILE_HEADER))
ProfileRow.__doc__ = """
Dispersion of order statistic of a rank.

:var rank: Rank of order statistic.
:var t: Expected value of uniform order statistic, `rank / (m + 1)`.
:var mean_exact: Mean of exact percentile order statistic.
:var std_exact: Standard deviation of exact percentile order statistic.
:var mean_emp: Mean of percentile estimate order statistic.
:var std_emp: Standard deviation of percentile estimate order statistic.
:var std_emp_rescaled: Rescaled standard deviation of percentile estimate
    order statistic.
"""

RunRow = namedtuple('RunRow', ' '.join(RUNS_HEADER))
RunRow.__doc__ = """
Statistics of a replication.

:var rep: Replication index.
:var d_exact: One-sample statistic of exact percentiles.
:var p_exact: P-value of one-sample statistic of exact percentiles.
:var d_emp: One-sample statistic of percentile estimates.
:var p_emp: P-value of one-sample statistic of percentile estimates.
:var d_two: Two-sample statistic or null.
:var p_two: P-value of two-sample statistic or null.
"""


def format_value(v):
    """
    Format report value.

    >>> format_value(0.1)
    '0.10000000000000001'
    >>> format_value(3)
    '3'
    >>> format_value(None)
    ''

    :param v: Integer, real number or null.
    """
    if v is None:
        return ''
    if isinstance(v, int):
        return str(v)
    return '{:.17g}'.format(v)


def profile_rows(exact, empirical):
    """
    Convert pair of dispersion profiles into profile rows.

    :param exact: Dispersion profile of exact percentiles.
    :param empirical: Dispersion profile of percentile estimates.
    """
    m = len(exact.rank_means)
    if len(empirical.rank_means) != m:
        raise SampleError('profiles of different length')

    for i in range(m):
        yield ProfileRow(
            i + 1, (i + 1) / (m + 1),
            float(exact.rank_means[i]), float(exact.rank_stds[i]),
            float(empirical.rank_means[i]), float(empirical.rank_stds[i]),
            float(empirical.rescaled_stds[i]),
        )


def run_rows(runs):
    """
    Convert replication results into run rows.

    :param runs: Collection of replication results.
    """
    for r in runs:
        two = r.ks_two_sample
        yield RunRow(
            r.rep_index,
            float(r.ks_exact.statistic), float(r.ks_exact.p_value),
            float(r.ks_empirical.statistic), float(r.ks_empirical.p_value),
            None if two is None else float(two.statistic),
            None if two is None else float(two.p_value),
        )


@coroutine
def csv_writer(f, header, target=None):
    """
    Write report rows into a CSV file.

    :param f: File object.
    :param header: CSV file header.
    :param target: Optional coroutine to forward report rows to.
    """
    fcsv = csv.writer(f, lineterminator='\n')
    fcsv.writerow(header)

    while True:
        row = yield
        fcsv.writerow([format_value(v) for v in row])
        if target:
            target.send(row)


def _write(destination, write):
    """
    Open destination file, call `write` function with the file object and
    return size of the file in bytes.
    """
    try:
        with open(destination, 'w', encoding='utf-8', newline='') as f:
            write(f)
        size = os.path.getsize(destination)
    except OSError as ex:
        raise ReportError('cannot write {}: {}'.format(
            destination, ex
        )) from ex

    if __debug__:
        logger.debug('{} written, {} bytes'.format(destination, size))
    return size


def write_profile_csv(exact, empirical, destination):
    """
    Write pair of dispersion profiles into CSV file.

    Number of bytes written is returned.

    :param exact: Dispersion profile of exact percentiles.
    :param empirical: Dispersion profile of percentile estimates.
    :param destination: Path of CSV file.
    """
    rows = list(profile_rows(exact, empirical))
    return _write(
        destination, lambda f: feed(csv_writer(f, PROFILE_HEADER), rows)
    )


def write_runs_csv(runs, destination):
    """
    Write replication results into CSV file.

    Two-sample columns are empty when the regime has no two-sample
    statistic.

    Number of bytes written is returned.

    :param runs: Collection of replication results.
    :param destination: Path of CSV file.
    """
    rows = list(run_rows(runs))
    return _write(
        destination, lambda f: feed(csv_writer(f, RUNS_HEADER), rows)
    )


def _float(v):
    return None if v is None else float(v)


def summary_data(summary, full=False):
    """
    Convert experiment summary into ordered dictionary for JSON
    serialization.

    :param summary: Experiment summary.
    :param full: Include replication results.
    """
    data = OrderedDict((
        ('config', OrderedDict(summary.config._asdict())),
        ('correlation_ks', _float(summary.correlation_ks)),
        ('rejection_rate_05', _float(summary.rejection_rate_05)),
        ('profile_sup_gap', _float(summary.profile_sup_gap)),
        ('appendix_bound_violations', int(summary.appendix_bound_violations)),
    ))
    if full:
        data['rejection_rate_two_05'] = _float(summary.rejection_rate_two_05)
        data['runs'] = [
            OrderedDict(r._asdict()) for r in run_rows(summary.runs)
        ]
    return data


def _write_json(data, destination):
    def write(f):
        json.dump(data, f, indent=2, allow_nan=False)
        f.write('\n')
    return _write(destination, write)


def write_summary_json(summary, destination, full=False):
    """
    Write experiment summary into JSON file.

    Number of bytes written is returned.

    :param summary: Experiment summary.
    :param destination: Path of JSON file.
    :param full: Include replication results.
    """
    return _write_json(summary_data(summary, full), destination)


def write_decomposition_json(study, stats, destination):
    """
    Write decomposition study summary into JSON file.

    Number of bytes written is returned.

    :param study: Decomposition study.
    :param stats: Mean and standard deviation of sup norms of decomposition
        terms, see :func:`pitcalib.harness.decomposition_stats`.
    :param destination: Path of JSON file.
    """
    data = OrderedDict([('config', OrderedDict(study.config._asdict()))])
    for k, (mean, std) in stats.items():
        data[k] = OrderedDict((('mean', mean), ('std', std)))
    return _write_json(data, destination)


# vim: sw=4:et:ai
