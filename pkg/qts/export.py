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
"""Write data files, reports and the run manifest"""

import datetime
import os
import os.path

import numpy as np
from six.moves import configparser

import qts.log
from qts.errors import QtsError
from qts.format import NUMBER_FORMAT, format_number

MANIFEST_NAME = 'manifest.txt'


def write_csv(path, columns, names):
    """
    Write equally long columns as comma separated values with a header line

    @param path: file to write
    @type path: C{str}
    @param columns: the data columns
    @type columns: C{list} of sequences
    @param names: the column names
    @type names: C{list} of C{str}
    @return: number of rows written
    @rtype: C{int}
    """
    if len(columns) != len(names):
        raise QtsError("Got %d columns but %d names for %s" %
                       (len(columns), len(names), path))
    data = np.column_stack([np.asarray(col, dtype=float) for col in columns])
    try:
        np.savetxt(path, data, fmt=NUMBER_FORMAT, delimiter=',',
                   header=','.join(names), comments='')
    except (IOError, OSError) as err:
        raise QtsError("Error writing %s: %s" % (path, err))
    qts.log.debug("Wrote %d rows to '%s'" % (len(data), path))
    return len(data)


def read_csv(path):
    """
    Read a file written by L{write_csv}

    @return: column names and the data as a 2D array
    @rtype: C{tuple}
    """
    try:
        with open(path) as csv:
            names = csv.readline().strip().split(',')
        data = np.loadtxt(path, delimiter=',', skiprows=1, ndmin=2)
    except (IOError, OSError, ValueError) as err:
        raise QtsError("Error reading %s: %s" % (path, err))
    return names, data


def _format_value(value):
    if isinstance(value, float):
        return format_number(value)
    if isinstance(value, (list, tuple)):
        return ' '.join(_format_value(v) for v in value)
    return str(value)


def write_report(path, items):
    """
    Write (key, value) pairs as a 'key = value' block

    @param items: the entries in output order
    @type items: C{list} of C{tuple}
    """
    try:
        with open(path, 'w') as report:
            for key, value in items:
                report.write("%s = %s\n" % (key, _format_value(value)))
    except (IOError, OSError) as err:
        raise QtsError("Error writing %s: %s" % (path, err))
    qts.log.debug("Wrote report '%s'" % path)


def read_report(path):
    """Parse a file written by L{write_report} into a dict"""
    entries = {}
    try:
        with open(path) as report:
            for line in report:
                if '=' in line:
                    key, value = line.split('=', 1)
                    entries[key.strip()] = value.strip()
    except (IOError, OSError) as err:
        raise QtsError("Error reading %s: %s" % (path, err))
    return entries


def timestamp():
    """
    UTC time of the run, honouring SOURCE_DATE_EPOCH for reproducible output

    >>> os.environ['SOURCE_DATE_EPOCH'] = '0'
    >>> timestamp()
    '1970-01-01T00:00:00Z'
    >>> del os.environ['SOURCE_DATE_EPOCH']
    """
    epoch = os.environ.get('SOURCE_DATE_EPOCH')
    if epoch:
        when = datetime.datetime(1970, 1, 1) + datetime.timedelta(seconds=int(epoch))
    else:
        when = datetime.datetime.utcnow()
    return when.strftime('%Y-%m-%dT%H:%M:%SZ')


class Manifest(object):
    """
    Index of the files a run produced, one INI section per file

    @ivar outdir: directory holding the outputs and the manifest
    """
    def __init__(self, outdir, command, parameters=None):
        self.outdir = outdir
        self.parser = configparser.RawConfigParser()
        self.parser.add_section('run')
        self.parser.set('run', 'command', command)
        self.parser.set('run', 'timestamp', timestamp())
        for key, value in (parameters or []):
            self.parser.set('run', key, _format_value(value))

    def path(self, name):
        return os.path.join(self.outdir, name)

    def add(self, name, description, **params):
        """Record an output file and the parameters it was made with"""
        if self.parser.has_section(name):
            raise QtsError("Output '%s' written twice" % name)
        self.parser.add_section(name)
        self.parser.set(name, 'description', description)
        for key in sorted(params):
            self.parser.set(name, key, _format_value(params[key]))

    @property
    def outputs(self):
        return [s for s in self.parser.sections() if s != 'run']

    def write(self):
        path = self.path(MANIFEST_NAME)
        try:
            with open(path, 'w') as manifest:
                self.parser.write(manifest)
        except (IOError, OSError) as err:
            raise QtsError("Error writing %s: %s" % (path, err))
        qts.log.info("Wrote %d outputs to '%s'" % (len(self.outputs), self.outdir))
        return path

    @classmethod
    def read(klass, outdir):
        """Load a manifest as a plain RawConfigParser"""
        parser = configparser.RawConfigParser()
        if not parser.read(os.path.join(outdir, MANIFEST_NAME)):
            raise QtsError("No manifest in %s" % outdir)
        return parser

# vim:et:ts=4:sw=4:et:sts=4:ai:set list listchars=tab\:»·,trail\:·:
