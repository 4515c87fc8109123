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
"""Format numbers and parse numeric command line values"""

import math

from qts.errors import QtsError

#: printf style format of every number written to a data file
NUMBER_FORMAT = '%.12g'


def format_number(value):
    """
    Format a number with twelve significant digits

    >>> format_number(1.0)
    '1'
    >>> format_number(0.1 + 0.2)
    '0.3'
    >>> format_number(-1.0/3)
    '-0.333333333333'
    >>> format_number(1.1109e-2)
    '0.011109'
    """
    return NUMBER_FORMAT % value


def format_list(values):
    """
    Format a sequence of numbers as a comma separated list

    >>> format_list([4, -4, 7.5])
    '4,-4,7.5'
    >>> format_list([])
    ''
    """
    return ','.join(format_number(value) for value in values)


def parse_float(text, what='value'):
    """
    Parse a finite float

    >>> parse_float('2.5')
    2.5
    >>> parse_float('nan', 'depth')
    Traceback (most recent call last):
    ...
    qts.errors.QtsError: Invalid depth 'nan': not a finite number
    >>> parse_float('two')
    Traceback (most recent call last):
    ...
    qts.errors.QtsError: Invalid value 'two': not a number
    """
    try:
        value = float(text)
    except (TypeError, ValueError):
        raise QtsError("Invalid %s '%s': not a number" % (what, text))
    if not math.isfinite(value):
        raise QtsError("Invalid %s '%s': not a finite number" % (what, text))
    return value


def parse_floats(text, what='list'):
    """
    Parse a comma separated list of floats

    >>> parse_floats('2,-2')
    [2.0, -2.0]
    >>> parse_floats(' 4, -4 ,7 ')
    [4.0, -4.0, 7.0]
    >>> parse_floats('')
    Traceback (most recent call last):
    ...
    qts.errors.QtsError: Invalid list '': empty
    """
    fields = [field.strip() for field in text.split(',')]
    if not text.strip():
        raise QtsError("Invalid %s '%s': empty" % (what, text))
    return [parse_float(field, what) for field in fields]


def parse_range(text):
    """
    Parse a 'min:max:count' range specification

    @param text: the range as given on the command line
    @type text: C{str}
    @return: lower bound, upper bound and number of samples
    @rtype: C{tuple} of (C{float}, C{float}, C{int})

    >>> parse_range('-8:8:401')
    (-8.0, 8.0, 401)
    >>> parse_range('0:1')
    Traceback (most recent call last):
    ...
    qts.errors.QtsError: Invalid range '0:1': expected min:max:count
    >>> parse_range('1:0:10')
    Traceback (most recent call last):
    ...
    qts.errors.QtsError: Invalid range '1:0:10': min must be below max
    >>> parse_range('0:1:1')
    Traceback (most recent call last):
    ...
    qts.errors.QtsError: Invalid range '0:1:1': need at least 2 samples
    """
    fields = text.split(':')
    if len(fields) != 3:
        raise QtsError("Invalid range '%s': expected min:max:count" % text)
    low = parse_float(fields[0], 'range minimum')
    high = parse_float(fields[1], 'range maximum')
    try:
        count = int(fields[2])
    except ValueError:
        raise QtsError("Invalid range '%s': count must be an integer" % text)
    if low >= high:
        raise QtsError("Invalid range '%s': min must be below max" % text)
    if count < 2:
        raise QtsError("Invalid range '%s': need at least 2 samples" % text)
    return low, high, count


def parse_interval(text):
    """
    Parse a 'min:max' interval

    >>> parse_interval('-13:13')
    (-13.0, 13.0)
    >>> parse_interval('3:-3')
    Traceback (most recent call last):
    ...
    qts.errors.QtsError: Invalid interval '3:-3': min must be below max
    """
    fields = text.split(':')
    if len(fields) != 2:
        raise QtsError("Invalid interval '%s': expected min:max" % text)
    low = parse_float(fields[0], 'interval minimum')
    high = parse_float(fields[1], 'interval maximum')
    if low >= high:
        raise QtsError("Invalid interval '%s': min must be below max" % text)
    return low, high


def format_range(low, high, count):
    """
    Inverse of L{parse_range}

    >>> format_range(-8.0, 8.0, 401)
    '-8:8:401'
    """
    return '%s:%s:%d' % (format_number(low), format_number(high), count)

# vim:et:ts=4:sw=4:et:sts=4:ai:set list listchars=tab\:»·,trail\:·:
