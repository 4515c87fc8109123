#!/usr/bin/python
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
"""Supercommand for all qts commands"""

from __future__ import print_function

import glob
import os
import re
import sys

# common/ holds shared code and this module is the dispatcher,
# neither is a command:
invalid_modules = ['common', 'supercommand']


def usage():
    print("""
Usage:
    qts <command> [<args>]

The commands are:

    wigner     - sample the Wigner function on a phase-space grid
    marginals  - position and momentum marginal distributions
    pnd        - photon-number distribution
    envelope   - continuous photon-number envelope and its extrema
    well       - ground state of Gaussian wells centred on the amplitudes
    all        - all of the above for one state

Use '--list-cmds' to list all available commands.
""")


def version(prog):
    try:
        from qts.version import qts_version
    except ImportError:
        qts_version = '[Unknown version]'
    print("%s %s" % (os.path.basename(prog), qts_version))


def import_command(cmd):
    """
    Import the module that implements the given command

    >>> import_command('common')
    Traceback (most recent call last):
    ...
    ImportError: Illegal module name common
    """
    if (not re.match(r'^[a-z][a-z0-9_]+$', cmd) or
            cmd in invalid_modules):
        raise ImportError('Illegal module name %s' % cmd)
    return __import__('qts.scripts.%s' % cmd, fromlist='main', level=0)


def pymod_to_cmd(mod):
    """
    >>> pymod_to_cmd('/x/y/z/marginals.py')
    'marginals'
    """
    return os.path.basename(mod.rsplit('.', 1)[0])


def get_available_commands(path):
    cmds = []
    for f in glob.glob(os.path.join(path, '*.py')):
        if os.path.basename(f) in ['__init__.py', 'supercommand.py']:
            continue
        cmds.append((pymod_to_cmd(f), f))
    return cmds


def list_available_commands():
    mod = __import__('qts.scripts', fromlist='main', level=0)
    path = os.path.dirname(mod.__file__)

    print("Available commands in %s\n" % path)
    cmds = sorted(get_available_commands(path))
    maxlen = max(len(cmd[0]) for cmd in cmds)
    for cmd in cmds:
        mod = import_command(cmd[0])
        print("    %s - %s" % (cmd[0].rjust(maxlen), mod.__doc__))
    print('')


def supercommand(argv=None):
    argv = argv or sys.argv

    if len(argv) < 2:
        usage()
        return 1

    cmd = argv[1]
    args = argv[1:]

    if cmd in ['--help', '-h']:
        usage()
        return 0
    elif cmd == 'help' and len(args) > 1:
        # help <command> shows the command's own help
        cmd = args[1]
        args = [cmd, '--help']
    elif cmd == 'help':
        usage()
        return 0
    elif cmd in ['--version', 'version']:
        version(argv[0])
        return 0
    elif cmd in ['--list-cmds', 'list-cmds']:
        list_available_commands()
        return 0

    try:
        module = import_command(cmd)
    except ImportError as e:
        print("'%s' is not a valid command." % cmd, file=sys.stderr)
        usage()
        if '--verbose' in args:
            print(e, file=sys.stderr)
        return 2

    return module.main(args)

if __name__ == '__main__':
    sys.exit(supercommand())

# vim:et:ts=4:sw=4:et:sts=4:ai:set list listchars=tab\:»·,trail\:·:
