# vim: set fileencoding=utf-8 :
#
# (C) 2026 The qts developers
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
#
"""Colored logging for the qts library and commands"""

import os
import sys
import logging
from logging import DEBUG, INFO, WARNING, ERROR, CRITICAL

# Initialize default logger
LOGGER = logging.getLogger(__name__)

COLORS = dict([('none', 0)] + list(zip(['black', 'red', 'green', 'yellow', 'blue',
                                        'magenta', 'cyan', 'white'], range(30, 38))))
DEFAULT_COLOR_SCHEME = {DEBUG: COLORS['cyan'],
                        INFO: COLORS['green'],
                        WARNING: COLORS['yellow'],
                        ERROR: COLORS['red'],
                        CRITICAL: COLORS['red']}

COLOR_MODES = ('on', 'off', 'auto')


def color_mode(color):
    """
    Map a color setting onto one of 'on', 'off' or 'auto'

    >>> color_mode(True)
    'on'
    >>> color_mode('Auto')
    'auto'
    >>> color_mode(None)
    'off'
    >>> color_mode('sometimes')
    Traceback (most recent call last):
    ...
    ValueError: Invalid color mode 'sometimes'
    """
    if color is True:
        return 'on'
    if color is False or color is None:
        return 'off'
    mode = str(color).lower()
    if mode not in COLOR_MODES:
        raise ValueError("Invalid color mode '%s'" % color)
    return mode


class QtsFilter(object):
    """Only pass records of the given levels"""
    def __init__(self, levels):
        self._levels = levels

    def filter(self, record):
        return record.levelno in self._levels


class QtsStreamHandler(logging.StreamHandler):
    """Stream handler adding ANSI colors on terminals"""

    COLOR_SEQ = "\033[%dm"
    OFF_SEQ = "\033[0m"

    def __init__(self, stream=None, color='auto'):
        logging.StreamHandler.__init__(self, stream)
        self._color = color_mode(color)
        self._color_scheme = DEFAULT_COLOR_SCHEME.copy()
        msg_fmt = "%(color)s%(name)s:%(levelname)s: %(message)s%(coloroff)s"
        self.setFormatter(logging.Formatter(fmt=msg_fmt))

    def set_color(self, color):
        self._color = color_mode(color)

    def set_color_scheme(self, color_scheme=None):
        self._color_scheme = DEFAULT_COLOR_SCHEME.copy()
        self._color_scheme.update(color_scheme or {})

    def set_format(self, fmt):
        self.setFormatter(logging.Formatter(fmt=fmt))

    def _use_color(self):
        if self._color == 'on':
            return True
        if self._color == 'auto' and hasattr(self.stream, 'isatty'):
            dumb = os.getenv("TERM") == "dumb"
            return self.stream.isatty() and not dumb
        return False

    def format(self, record):
        record.color = record.coloroff = ""
        if self._use_color():
            record.color = self.COLOR_SEQ % self._color_scheme[record.levelno]
            record.coloroff = self.OFF_SEQ
        record.levelname = record.levelname.lower()
        return logging.StreamHandler.format(self, record)


class QtsLogger(logging.Logger):
    """Logger sending info to stdout and problems to stderr"""

    def __init__(self, name, *args, **kwargs):
        logging.Logger.__init__(self, name, *args, **kwargs)
        self.default_handlers = []

    def init_default_handlers(self, color='auto'):
        self.default_handlers = [QtsStreamHandler(sys.stdout, color),
                                 QtsStreamHandler(sys.stderr, color)]
        self.default_handlers[0].addFilter(QtsFilter([DEBUG, INFO]))
        self.default_handlers[1].addFilter(QtsFilter([WARNING, ERROR,
                                                      CRITICAL]))
        for hdlr in self.default_handlers:
            self.addHandler(hdlr)
        # Our handlers already print everything
        self.propagate = False

    def set_color(self, color):
        for hdlr in self.default_handlers:
            hdlr.set_color(color)

    def set_color_scheme(self, color_scheme=None):
        for hdlr in self.default_handlers:
            hdlr.set_color_scheme(color_scheme)

    def set_format(self, fmt):
        for hdlr in self.default_handlers:
            hdlr.set_format(fmt)


def err(msg):
    """Logs a message with level ERROR on the qts logger"""
    LOGGER.error(msg)

def warn(msg):
    """Logs a message with level WARNING on the qts logger"""
    LOGGER.warning(msg)

def info(msg):
    """Logs a message with level INFO on the qts logger"""
    LOGGER.info(msg)

def debug(msg):
    """Logs a message with level DEBUG on the qts logger"""
    LOGGER.debug(msg)

def _parse_color_scheme(color_scheme=""):
    """
    Parse a 'debug:info:warning:error' color scheme

    >>> sorted(_parse_color_scheme('').items())
    []
    >>> _parse_color_scheme('blue:31:red:magenta')[INFO]
    31
    >>> _parse_color_scheme('red:green')
    Traceback (most recent call last):
    ...
    ValueError: Number of color fields in color scheme not 4
    """
    scheme = {}
    if not color_scheme:
        return scheme
    levels = (DEBUG, INFO, WARNING, ERROR)
    colors = color_scheme.split(':')
    if len(colors) != len(levels):
        raise ValueError("Number of color fields in color scheme not %d"
                         % len(levels))

    for level, color in zip(levels, colors):
        try:
            scheme[level] = int(color)
        except ValueError:
            if color.lower() in COLORS:
                scheme[level] = COLORS[color.lower()]
    return scheme

def getLogger(*args, **kwargs):
    """Get a logger that uses the qts handlers"""
    if not issubclass(logging.getLoggerClass(), QtsLogger):
        logging.setLoggerClass(QtsLogger)
    color = kwargs.pop('color', 'auto')
    logger = logging.getLogger(*args, **kwargs)
    if hasattr(logger, 'default_handlers') and not logger.default_handlers:
        logger.init_default_handlers(color)
    return logger

def setup(color, verbose, color_scheme=""):
    """Basic logger setup"""
    if not isinstance(LOGGER, QtsLogger):
        initialize()

    LOGGER.set_color(color)
    LOGGER.set_color_scheme(_parse_color_scheme(color_scheme))
    LOGGER.setLevel(DEBUG if verbose else INFO)

def initialize():
    """Initialize the logger module"""
    global LOGGER
    LOGGER = getLogger("qts")

# vim:et:ts=4:sw=4:et:sts=4:ai:set list listchars=tab\:»·,trail\:·:
