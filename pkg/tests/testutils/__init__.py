# vim: set fileencoding=utf-8 :
"""Helpers shared by the qts tests"""

from .. import context

import numpy as np

from . qtslogtester import QtsLogTester
from . capture import capture_stderr, capture_stdout

__all__ = ['QtsLogTester', 'capture_stderr', 'capture_stdout',
           'nearest', 'assert_peaks_near']


def nearest(values, target):
    """The element of values closest to target"""
    values = np.asarray(values, dtype=float)
    return float(values[np.argmin(np.abs(values - target))])


def assert_peaks_near(testcase, peaks, targets, tol):
    """Check there is one peak within tol of every target"""
    for target in targets:
        found = nearest(peaks, target)
        testcase.assertLessEqual(abs(found - target), tol,
                                 "No peak near %g in %s" % (target, peaks))
