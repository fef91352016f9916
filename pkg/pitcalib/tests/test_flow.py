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
Test for PitCalib data flow processing functions and coroutines.
"""

from pitcalib.flow import coroutine, feed

from .tools import collect

import unittest


class CollectTestCase(unittest.TestCase):
    """
    Data collecting coroutine tests.
    """
    def test_collect(self):
        """
        Test collecting data sent to a coroutine
        """
        data = []
        c = collect(data)
        c.send(1)
        c.send(2)
        self.assertEqual([1, 2], data)



class FeedTestCase(unittest.TestCase):
    """
    Coroutine feeding tests.
    """
    def test_feed(self):
        """
        Test feeding coroutine with values
        """
        data = []
        k = feed(collect(data), range(3))
        self.assertEqual(3, k)
        self.assertEqual([0, 1, 2], data)


    def test_feed_close(self):
        """
        Test closing coroutine after feeding it
        """
        closed = []

        @coroutine
        def sink():
            try:
                while True:
                    yield
            finally:
                closed.append(True)

        k = feed(sink(), [])
        self.assertEqual(0, k)
        self.assertEqual([True], closed)


    def test_coroutine_name(self):
        """
        Test coroutine decorator preserving function name
        """
        @coroutine
        def sink():
            while True:
                yield

        self.assertEqual('sink', sink.__name__)


# vim: sw=4:et:ai
