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
PitCalib exception classes.
"""

class PitError(Exception):
    pass


class ConfigError(PitError):
    pass


class SampleError(PitError):
    pass


class TieError(SampleError):
    pass


class SingularTailError(PitError):
    pass


class InversionError(PitError):
    pass


class ExperimentError(PitError):
    pass


class ReportError(PitError):
    pass


class BatchError(PitError):
    """
    Error of an element of a batch of computations.

    :var index: Index of the failing element.
    """
    def __init__(self, index, error):
        super().__init__('element {}: {}'.format(index, error))
        self.index = index


# vim: sw=4:et:ai
