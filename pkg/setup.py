#!/usr/bin/python
# vim: set fileencoding=utf-8 :
# Copyright (C) 2026 The qts developers
#
#    This program is free software; you can redistribute it and/or modify
#    it under the terms of the GNU General Public License as published by
#    the Free Software Foundation; either version 2 of the License, or
#    (at your option) any later version.
#
#    This program is distributed in the hope that it will be useful,
#    but WITHOUT ANY WARRANTY; without even the implied warranty of
#    MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#    GNU General Public License for more details.
#
#    You should have received a copy of the GNU General Public License
#    along with this program; if not, please see
#    <http://www.gnu.org/licenses/>
# END OF COPYRIGHT #

import os
import re
from setuptools import setup, find_packages


def fetch_version():
    """Get the version from qts/version.py"""
    with open(os.path.join('qts', 'version.py')) as f:
        match = re.search(r'^qts_version\s*=\s*"([^"]+)"', f.read(), re.M)
    return match.group(1) if match else "0.0"


def readme():
    with open('README') as file:
        return file.read()

setup(name = "qts",
      version = fetch_version(),
      author = 'The qts developers',
      description = 'Phase-space, photon-number and well-solver analysis of '
                    'coherent-state superpositions',
      license = 'GPLv2+',
      long_description = readme(),
      classifiers = [
          'Environment :: Console',
          'Programming Language :: Python :: 3',
          'Topic :: Scientific/Engineering :: Physics',
          'Operating System :: POSIX :: Linux',
      ],
      packages = find_packages(exclude=['tests', 'tests.*']),
      data_files = [("/etc/qts/", ["qts.conf"]),],
      install_requires = ["six", "numpy>=1.17", "scipy>=1.6"],
      tests_require = ['nose2', 'coverage>=2.85', 'mpmath'],
      entry_points = {
          'console_scripts': [ 'qts = qts.scripts.supercommand:supercommand' ],
      },
)
