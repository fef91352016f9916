#!/usr/bin/env python3
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

from setuptools import setup, find_packages

import pitcalib

setup(
    name='pitcalib',
    version=pitcalib.__version__,
    description='PitCalib - empirical PIT calibration library',
    author='PitCalib Team',
    setup_requires = ['setuptools_git >= 1.0',],
    packages=find_packages('.'),
    scripts=('bin/pit-calib',),
    include_package_data=True,
    long_description=\
"""\
PitCalib is Python library to estimate empirical percentiles of
observations relative to reference samples, test their calibration with
Kolmogorov-Smirnov statistics and study the calibration with Monte Carlo
experiments for fixed, independent and rolling window reference samples.
""",
    classifiers=[
        'License :: OSI Approved :: GNU General Public License v3 or later (GPLv3+)',
        'Programming Language :: Python :: 3',
        'Development Status :: 4 - Beta',
    ],
    keywords='probability integral transform kolmogorov smirnov backtesting',
    license='GPL',
    install_requires=['numpy >= 1.20', 'scipy >= 1.6', 'joblib >= 1.0'],
    test_suite='nose.collector',
)

# vim: sw=4:et:ai
