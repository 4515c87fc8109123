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
"""Option handling and run logic shared by all qts commands"""

import os
import os.path

from six.moves import configparser

import qts.log
from qts.config import QtsOptionParser, QtsOptionGroup
from qts.errors import QtsError
from qts.export import Manifest
from qts.format import format_list, format_number
from qts.states import SuperpositionSpec, min_nmax, preset
from qts.wellsolver import SolverConfig
from qts.wigner import PhaseSpaceGrid

COMMANDS = ('wigner', 'marginals', 'pnd', 'envelope', 'well', 'all')


class RunConfig(object):
    """
    A validated command line

    @ivar command: the command to run
    @ivar spec: the state to analyse
    @type spec: L{qts.states.SuperpositionSpec}
    @ivar source: how the state was given, for the manifest
    """
    def __init__(self, command, spec, source, options):
        self.command = command
        self.spec = spec
        self.source = source
        self.qrange = options.qrange
        self.prange = options.prange
        self.nmax = options.nmax
        self.out = options.out
        self.tol = options.tol
        self.points = options.points
        self.domain = options.domain
        self.max_iter = options.max_iter
        self.depth = options.depth
        self.balance = options.balance
        self.verbose = options.verbose
        self.color = options.color
        self.color_scheme = options.color_scheme

    def grid(self):
        """Phase-space grid, the state's default unless qrange is given"""
        grid = PhaseSpaceGrid.default_for(self.spec)
        qrange = self.qrange or (grid.q_min, grid.q_max, grid.num_q)
        return PhaseSpaceGrid.from_ranges(qrange, self.prange)

    def photon_nmax(self):
        """
        The requested truncation, raised to the tail rule if it is too
        small or not given
        """
        needed = min_nmax(self.spec.mu_max)
        if not self.nmax:
            return needed
        if self.nmax < needed:
            qts.log.warn("nmax %d too small for amplitude %g, using %d" %
                         (self.nmax, self.spec.mu_max, needed))
            return needed
        return self.nmax

    def solver_config(self):
        kwargs = dict(points=self.points, tol=self.tol, max_iter=self.max_iter)
        if self.domain:
            return SolverConfig(self.domain, **kwargs)
        return SolverConfig.for_spec(self.spec, **kwargs)

    def parameters(self):
        """(key, value) pairs describing the run for the manifest"""
        grid = self.grid()
        return [('state', self.source),
                ('amplitudes', format_list(self.spec.amplitudes)),
                ('coefficients', format_list(self.spec.coeffs)),
                ('qrange', grid.qrange()),
                ('prange', grid.prange()),
                ('nmax', self.nmax),
                ('tol', self.tol),
                ('points', self.points),
                ('domain', ':'.join(format_number(x) for x in self.domain)
                 if self.domain else 'auto'),
                ('max-iter', self.max_iter),
                ('depth', self.depth),
                ('balance', self.balance)]

    def __repr__(self):
        return "<RunConfig %s %s>" % (self.command, self.source)


def build_parser(name):
    try:
        parser = QtsOptionParser(command=name,
                                 usage='%prog [options] - analyse a coherent-state superposition')
    except configparser.Error as err:
        qts.log.err(err)
        return None

    state_group = QtsOptionGroup(parser, "state options",
                                 "exactly one of --preset or --amps")
    grid_group = QtsOptionGroup(parser, "grid options",
                                "phase space and photon number sampling")
    solver_group = QtsOptionGroup(parser, "solver options",
                                  "well calibration and ground state solver")
    parser.add_option_group(state_group)
    parser.add_option_group(grid_group)
    parser.add_option_group(solver_group)

    state_group.add_option("--preset", action="append", dest="presets",
                           metavar="NAME",
                           help="named state: Y1, Y2, Y3, vacuum, even-cat(a), "
                                "odd-cat(a), qts(a,b), odd-qts(a,b)")
    state_group.add_option("--amps", action="append", dest="amps",
                           type="floatlist", metavar="LIST",
                           help="comma separated real coherent amplitudes")
    state_group.add_option("--coeffs", action="append", dest="coeffs",
                           type="floatlist", metavar="LIST",
                           help="comma separated real coefficients, default all 1")
    grid_group.add_config_file_option(option_name="qrange", dest="qrange",
                                      type="range")
    grid_group.add_config_file_option(option_name="prange", dest="prange",
                                      type="range")
    grid_group.add_config_file_option(option_name="nmax", dest="nmax",
                                      type="int")
    solver_group.add_config_file_option(option_name="tol", dest="tol",
                                        type="float")
    solver_group.add_config_file_option(option_name="points", dest="points",
                                        type="int")
    solver_group.add_config_file_option(option_name="domain", dest="domain",
                                        type="interval")
    solver_group.add_config_file_option(option_name="max-iter", dest="max_iter",
                                        type="int")
    solver_group.add_config_file_option(option_name="depth", dest="depth",
                                        type="float")
    solver_group.add_boolean_config_file_option(option_name="balance",
                                                dest="balance")
    parser.add_config_file_option(option_name="out", dest="out", type="path")
    parser.add_option("-v", "--verbose", action="store_true", dest="verbose",
                      default=False, help="verbose command execution")
    parser.add_config_file_option(option_name="color", dest="color",
                                  type='tristate')
    parser.add_config_file_option(option_name="color-scheme",
                                  dest="color_scheme")
    return parser


def _state_from_options(parser, options):
    presets = options.presets or []
    amps = options.amps or []
    coeffs = options.coeffs or []
    if len(presets) + len(amps) > 1:
        parser.error("conflicting state options, give exactly one of "
                     "--preset or --amps")
    if not presets and not amps:
        parser.error("no state given, use --preset or --amps")
    if len(coeffs) > 1:
        parser.error("--coeffs given more than once")
    if coeffs and not amps:
        parser.error("--coeffs needs --amps")

    try:
        if presets:
            return preset(presets[0]), presets[0]
        spec = SuperpositionSpec.from_lists(amps[0],
                                            coeffs[0] if coeffs else None)
    except QtsError as err:
        parser.error(str(err))
    source = "amps %s" % format_list(spec.amplitudes)
    if coeffs:
        source += " coeffs %s" % format_list(spec.coeffs)
    return spec, source


def _check_options(parser, options):
    if options.nmax < 0:
        parser.error("--nmax must not be negative")
    if not options.tol > 0.0:
        parser.error("--tol must be positive")
    if options.points < 3 or options.points % 2 == 0:
        parser.error("--points must be odd and at least 3")
    if options.max_iter < 1:
        parser.error("--max-iter must be at least 1")
    if not options.depth > 0.0:
        parser.error("--depth must be positive")


def parse_args(argv, command=None):
    """
    Parse a command line into a L{RunConfig}

    Usage errors exit with status 2.

    @param argv: the command line, argv[0] being the command name
    @type argv: C{list} of C{str}
    @param command: the command, taken from argv[0] if not given
    @type command: C{str}
    @return: the config or C{None} if the config files are broken
    @rtype: L{RunConfig}
    """
    command = command or os.path.basename(argv[0]).replace('qts-', '')
    if command not in COMMANDS:
        raise QtsError("Unknown command '%s'" % command)
    parser = build_parser(command)
    if not parser:
        return None
    (options, args) = parser.parse_args(argv[1:])
    if args:
        parser.error("unexpected arguments: %s" % ' '.join(args))
    _check_options(parser, options)
    spec, source = _state_from_options(parser, options)
    return RunConfig(command, spec, source, options)


def _make_outdir(path):
    if not os.path.isdir(path):
        try:
            os.makedirs(path)
        except OSError as err:
            raise QtsError("Cannot create output directory '%s': %s" %
                           (path, err.strerror))
    if not os.access(path, os.W_OK):
        raise QtsError("Output directory '%s' not writable" % path)


def import_runner(command):
    return __import__('qts.scripts.%s' % command, fromlist='run', level=0)


def run(config):
    """
    Run the analysis of config and write its outputs plus the manifest

    @return: exit status
    @rtype: C{int}
    """
    try:
        _make_outdir(config.out)
        manifest = Manifest(config.out, config.command, config.parameters())
        import_runner(config.command).run(config, manifest)
        manifest.write()
    except (QtsError, IOError, OSError, configparser.Error) as err:
        if str(err):
            qts.log.err(err)
        return 1
    return 0


def main(argv, command):
    qts.log.initialize()

    config = parse_args(argv, command)
    if not config:
        return 1

    qts.log.setup(config.color, config.verbose, config.color_scheme)
    try:
        return run(config)
    except KeyboardInterrupt:
        qts.log.err("Interrupted. Aborting.")
        return 1

# vim:et:ts=4:sw=4:et:sts=4:ai:set list listchars=tab\:»·,trail\:·:
