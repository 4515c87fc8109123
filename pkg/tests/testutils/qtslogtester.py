# vim: set fileencoding=utf-8 :
"""Capture what qts logs at warning level and above"""

import re
from six import StringIO

import qts.log


class QtsLogTester(object):
    """
    Mixin for test cases that need to look at the log
    """
    def __init__(self):
        self._log = None
        self._loghandler = None
        self._saved_handlers = []

    def _capture_log(self, capture=True):
        """Start or stop capturing warnings and errors"""
        if capture:
            assert self._log is None, "Log capture already started"
            qts.log.initialize()
            self._log = StringIO()
            self._loghandler = qts.log.QtsStreamHandler(self._log, False)
            self._loghandler.addFilter(qts.log.QtsFilter([qts.log.WARNING,
                                                          qts.log.ERROR]))
            self._saved_handlers = list(qts.log.LOGGER.handlers)
            for hdl in self._saved_handlers:
                qts.log.LOGGER.removeHandler(hdl)
            qts.log.LOGGER.addHandler(self._loghandler)
        else:
            assert self._log is not None, "Log capture not started"
            qts.log.LOGGER.removeHandler(self._loghandler)
            for hdl in self._saved_handlers:
                qts.log.LOGGER.addHandler(hdl)
            self._saved_handlers = []
            self._loghandler.close()
            self._loghandler = None
            self._log.close()
            self._log = None

    def _get_log(self):
        self._log.seek(0)
        return self._log.readlines()

    def _check_log_empty(self):
        output = self._get_log()
        self.assertEqual(output, [], "Log is not empty: %s" % output)

    def _check_log(self, linenum, regex):
        """Check that line linenum of the log matches regex"""
        if self._log is None:
            raise Exception("BUG in unittests: no log captured!")
        log = self._get_log()
        self.assertLess(linenum, len(log), "Not enough log lines: %d" % len(log))
        output = log[linenum].strip()
        self.assertTrue(re.match(regex, output),
                        "Log entry '%s' doesn't match '%s'" % (output, regex))

    def _log_matches(self, regex):
        """Whether any captured line matches regex"""
        return any(re.match(regex, line.strip()) for line in self._get_log())

    def _clear_log(self):
        if self._log is not None:
            self._log.seek(0)
            self._log.truncate()
