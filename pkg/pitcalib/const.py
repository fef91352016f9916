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

# clamp for percentile estimates, p in [EPSILON, 1 - EPSILON]
EPSILON = 1e-12

# tail inversion
INV_TOLERANCE = 1e-10
INV_MAX_ITER = 200

# Kolmogorov series truncation
KS_SERIES_TOLERANCE = 1e-12
KS_SERIES_MAX_TERMS = 100

# small sample correction of one-sample p-values,
# lambda = (sqrt(n) + KS_CORR_A + KS_CORR_B / sqrt(n)) * D
KS_CORR_A = 0.12
KS_CORR_B = 0.11

#
# defaults follow the Monte Carlo protocol of 252 observations in the
# reference sample, 2000 replications (1000 for the Donsker study) and
# standard normal data
#
DEFAULT_N = 252
DEFAULT_M = 252
DEFAULT_REPS = 2000
DEFAULT_REPS_DONSKER = 1000
DEFAULT_SEED = 42
DEFAULT_DIST = 'normal'

M_LADDER = (32, 64, 126, 252)

GRID_SIZE = 512

# replication retries on tie collisions
MAX_RETRIES = 10

# nominal level of the rejection rate
ALPHA = 0.05

# central ranks, 0.2 < t < 0.8
CENTRAL_LOW = 0.2
CENTRAL_HIGH = 0.8

# bracket of difference of two-sample and grid statistics, -2 / (n + 1) <= D_two - D_grid <= 1 / m + 2 / (n + 1)
BOUND_SLACK_N = 2
BOUND_TOLERANCE = 1e-12

THREADS_ENV = 'PIT_CALIB_THREADS'

# vim: sw=4:et:ai
