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
"""Command line and config file option parsing for the qts commands"""

from optparse import OptionParser, OptionGroup, Option, OptionValueError
from six.moves import configparser
from copy import copy
import os.path

try:
    from qts.version import qts_version
except ImportError:
    qts_version = "[Unknown version]"
import qts.log
from qts.errors import QtsError
from qts.format import parse_range, parse_interval, parse_floats


def expand_path(option, opt, value):
    value = os.path.expandvars(value)
    return os.path.expanduser(value)

def check_tristate(option, opt, value):
    try:
        return qts.log.color_mode(value)
    except ValueError:
        raise OptionValueError(
            "option %s: invalid value: %r (use on, off or auto)" % (opt, value))

def check_range(option, opt, value):
    # An empty value leaves the choice to the command
    if not value:
        return None
    try:
        return parse_range(value)
    except QtsError as err:
        raise OptionValueError("option %s: %s" % (opt, err))

def check_interval(option, opt, value):
    if not value:
        return None
    try:
        return parse_interval(value)
    except QtsError as err:
        raise OptionValueError("option %s: %s" % (opt, err))

def check_floatlist(option, opt, value):
    try:
        return parse_floats(value)
    except QtsError as err:
        raise OptionValueError("option %s: %s" % (opt, err))


class QtsOption(Option):
    TYPES = Option.TYPES + ('path', 'tristate', 'range', 'interval', 'floatlist')
    TYPE_CHECKER = copy(Option.TYPE_CHECKER)
    TYPE_CHECKER['path'] = expand_path
    TYPE_CHECKER['tristate'] = check_tristate
    TYPE_CHECKER['range'] = check_range
    TYPE_CHECKER['interval'] = check_interval
    TYPE_CHECKER['floatlist'] = check_floatlist


class QtsOptionParser(OptionParser):
    """
    Handles commandline options and parsing of config files

    @ivar command: the qts command we store the options for
    @type command: string
    @ivar config: current configuration parameters
    @type config: dict
    @cvar defaults: defaults value of an option if not in the config file or
        given on the command line
    @type defaults: dict
    @cvar help: help messages
    @type help: dict
    @cvar def_config_files: config files we parse
    @type def_config_files: dict (path, name)
    """
    defaults = {'qrange'       : '',
                'prange'       : '-8:8:401',
                'nmax'         : '0',
                'out'          : '.',
                'tol'          : '1e-12',
                'points'       : '4001',
                'domain'       : '',
                'max-iter'     : '500',
                'depth'        : '2.5',
                'balance'      : 'True',
                'color'        : 'auto',
                'color-scheme' : '',
                }
    help = {'qrange':
                ("Position sampling 'min:max:count', default is to cover "
                 "the outermost amplitude by five position widths"),
            'prange':
                "Momentum sampling 'min:max:count', default is '%(prange)s'",
            'nmax':
                ("Photon number truncation, 0 picks the smallest value "
                 "satisfying the tail rule, default is '%(nmax)s'"),
            'out':
                "Output directory, default is '%(out)s'",
            'tol':
                ("Residual tolerance of the ground state solver, "
                 "default is '%(tol)s'"),
            'points':
                ("Number of finite difference grid points (odd), "
                 "default is '%(points)s'"),
            'domain':
                ("Solver domain 'min:max', default is six position units "
                 "beyond the outermost well"),
            'max-iter':
                ("Maximum number of inverse iteration steps, "
                 "default is '%(max-iter)s'"),
            'depth':
                "Depth of the calibrated Gaussian wells, default is '%(depth)s'",
            'balance':
                ("Adjust the outer well depth until the ground state weight "
                 "matches the target, default is '%(balance)s'"),
            'color':
                "Whether to use colored output, default is '%(color)s'",
            'color-scheme':
                ("Colors to use in output (when color is enabled), format "
                 "is '<debug>:<info>:<warning>:<error>', e.g. "
                 "'cyan:34::'. Numerical values and color names are "
                 "accepted, empty fields imply the default color. "
                 "Default is '%(color-scheme)s'"),
           }

    def_config_files = {'/etc/qts/qts.conf': 'system',
                        '~/.qts.conf':       'global',
                        '.qts.conf':         'local'}

    @classmethod
    def get_config_files(klass, no_local=False):
        """
        Get list of config files from the I{QTS_CONF_FILES} environment
        variable.

        @param no_local: don't return the per-directory configuration file
        @type no_local: C{bool}
        @return: list of config files we need to parse
        @rtype: C{list}

        >>> conf_backup = os.getenv('QTS_CONF_FILES')
        >>> if conf_backup is not None: del os.environ['QTS_CONF_FILES']
        >>> homedir = os.path.expanduser("~")
        >>> files = QtsOptionParser.get_config_files()
        >>> [file.replace(homedir, 'HOME') for file in files]
        ['/etc/qts/qts.conf', 'HOME/.qts.conf', '.qts.conf']
        >>> files = QtsOptionParser.get_config_files(no_local=True)
        >>> [file.replace(homedir, 'HOME') for file in files]
        ['/etc/qts/qts.conf', 'HOME/.qts.conf']
        >>> os.environ['QTS_CONF_FILES'] = 'test1:test2'
        >>> QtsOptionParser.get_config_files()
        ['test1', 'test2']
        >>> del os.environ['QTS_CONF_FILES']
        >>> if conf_backup is not None: os.environ['QTS_CONF_FILES'] = conf_backup
        """
        envvar = os.environ.get('QTS_CONF_FILES')
        files = envvar.split(':') if envvar else list(klass.def_config_files.keys())
        files = [os.path.expanduser(fname) for fname in files]
        if no_local:
            files = [fname for fname in files if fname.startswith('/')]
        return files

    def parse_config_files(self):
        """
        Parse the possible config files and set appropriate values
        default values
        """
        parser = configparser.RawConfigParser()
        self.config = dict(self.__class__.defaults)
        parsed = parser.read(self.get_config_files())
        for filename in parsed:
            qts.log.debug("Read config file '%s'" % filename)
        self.config.update(dict(parser.defaults()))

        # Command specific settings win over [DEFAULT]
        if parser.has_section(self.command):
            self.config.update(dict(parser.items(self.command, raw=True)))

    def __init__(self, command, usage=None):
        """
        @param command: the command to build the config parser for
        @type command: C{str}
        @param usage: a usage description
        @type usage: C{str}
        """
        self.command = command
        self.config = {}
        self.parse_config_files()
        self.valid_options = []

        OptionParser.__init__(self, option_class=QtsOption,
                              prog="qts %s" % self.command,
                              usage=usage, version='%s %s' % (self.command,
                                                              qts_version))

    def _is_boolean(self, **kwargs):
        return kwargs.get('action') in ['store_true', 'store_false']

    def _get_bool_default(self, option_name):
        """
        Get default for boolean options, handling both 'foo = False'
        and 'no-foo = True'
        """
        if option_name.startswith('no-'):
            pos, neg = option_name[3:], option_name
        else:
            pos, neg = option_name, "no-%s" % option_name

        if pos in self.config:
            default, negate = self.config[pos], False
        else:
            default, negate = self.config[neg], True

        if default.lower() in ["true", "1", "yes", "on"]:
            val = True
        elif default.lower() in ["false", "0", "no", "off"]:
            val = False
        else:
            raise ValueError("Boolean options must be True or False, "
                             "got '%s' for '%s'" % (default, option_name))
        return not val if negate else val

    def get_default(self, option_name, **kwargs):
        """get the default value"""
        if self._is_boolean(**kwargs):
            return self._get_bool_default(option_name)
        return self.config[option_name]

    def add_config_file_option(self, option_name, help=None, **kwargs):
        """
        Set a option for the command line parser, the default is read
        from the config file

        @param option_name: name of the option
        @type option_name: C{str}
        @param help: help text
        @type help: C{str}
        """
        if not help:
            help = self.help[option_name]
        self.valid_options.append(option_name)
        OptionParser.add_option(self, "--%s" % option_name,
                                default=self.get_default(option_name, **kwargs),
                                help=help % self.config, **kwargs)

    def get_config_file_value(self, option_name):
        """
        Query a single config file value.

        @param option_name: the config file option to look up
        @type option_name: string
        @returns: The config file option value or C{None} if it doesn't exist
        @rtype: C{str} or C{None}
        """
        return self.config.get(option_name)


class QtsOptionGroup(OptionGroup):
    def add_config_file_option(self, option_name, dest, help=None, **kwargs):
        """
        Set a option for the command line parser, the default is read
        from the config file

        @param option_name: name of the option
        @type option_name: C{str}
        @param dest: where to store this option
        @type dest: C{str}
        @param help: help text
        @type help: C{str}
        """
        if not help:
            help = self.parser.help[option_name]
        self.parser.valid_options.append(option_name)
        OptionGroup.add_option(self, "--%s" % option_name,
                               dest=dest,
                               default=self.parser.get_default(option_name, **kwargs),
                               help=help % self.parser.config, **kwargs)

    def add_boolean_config_file_option(self, option_name, dest):
        self.add_config_file_option(option_name=option_name, dest=dest,
                                    action="store_true")
        neg_help = "negates '--%s'" % option_name
        self.add_config_file_option(option_name="no-%s" % option_name,
                                    dest=dest, help=neg_help,
                                    action="store_false")

# vim:et:ts=4:sw=4:et:sts=4:ai:set list listchars=tab\:»·,trail\:·:
