# vim: set fileencoding=utf-8 :
"""Test L{qts.config} and the config file handling of the commands"""

from . import context

import os
import unittest

from qts.config import QtsOptionParser, QtsOptionGroup
from qts.scripts.common import build_parser, parse_args
from .testutils import QtsLogTester


class TestConfigParser(unittest.TestCase, QtsLogTester):
    def __init__(self, methodName='runTest'):
        unittest.TestCase.__init__(self, methodName)
        QtsLogTester.__init__(self)

    def setUp(self):
        self.conffiles_save = os.environ.get('QTS_CONF_FILES')
        self.confname = os.path.join(context.datadir, 'qts.conf')
        self.assertTrue(os.stat(self.confname))
        os.environ['QTS_CONF_FILES'] = self.confname
        self._capture_log(True)

    def tearDown(self):
        if self.conffiles_save is None:
            del os.environ['QTS_CONF_FILES']
        else:
            os.environ['QTS_CONF_FILES'] = self.conffiles_save
        self._capture_log(False)

    def test_default(self):
        """A value only in the default section is seen by all commands"""
        for cmd in ['wigner', 'marginals', 'envelope', 'well', 'all']:
            parser = QtsOptionParser(cmd)
            self.assertEqual(parser.config['nmax'], '140')
            self.assertEqual(parser.config['prange'], '-4:4:81')
        self._check_log_empty()

    def test_command_override(self):
        """A value in a command section overrides the default"""
        self.assertEqual(QtsOptionParser('pnd').config['nmax'], '150')
        self.assertEqual(QtsOptionParser('well').config['points'], '2001')
        self.assertEqual(QtsOptionParser('wigner').config['points'], '4001')

    def test_builtin_defaults(self):
        parser = QtsOptionParser('wigner')
        self.assertEqual(parser.config['tol'], '1e-12')
        self.assertEqual(parser.config['qrange'], '')

    def test_get_config_file_value(self):
        parser = QtsOptionParser('pnd')
        self.assertEqual(parser.get_config_file_value('nmax'), '150')
        self.assertEqual(parser.get_config_file_value('doesnotexist'), None)

    def test_param_list(self):
        parser = QtsOptionParser('wigner')
        grid_group = QtsOptionGroup(parser, "grid options", "sampling")
        parser.add_option_group(grid_group)
        grid_group.add_config_file_option(option_name="qrange", dest="qrange",
                                          type="range")
        parser.add_config_file_option(option_name="color", dest="color",
                                      type='tristate')
        self.assertIn('qrange', parser.valid_options)
        self.assertIn('color', parser.valid_options)
        self.assertNotIn('prange', parser.valid_options)

    def test_all_options(self):
        parser = build_parser('well')
        for name in ['qrange', 'prange', 'nmax', 'tol', 'points', 'domain',
                     'max-iter', 'depth', 'balance', 'no-balance', 'out',
                     'color', 'color-scheme']:
            self.assertIn(name, parser.valid_options)

    def test_typed_values(self):
        """Config values reach the commands converted"""
        config = parse_args(['pnd', '--preset', 'Y1'])
        self.assertEqual(config.nmax, 150)
        self.assertEqual(config.prange, (-4.0, 4.0, 81))
        self.assertEqual(config.color, 'off')
        self.assertIsNone(config.qrange)
        self.assertTrue(config.balance)

        config = parse_args(['well', '--preset', 'Y3'])
        self.assertFalse(config.balance)
        self.assertEqual(config.points, 2001)
        config = parse_args(['well', '--preset', 'Y3', '--balance',
                             '--points=801'])
        self.assertTrue(config.balance)
        self.assertEqual(config.points, 801)

    def test_grid_from_config(self):
        grid = parse_args(['wigner', '--preset', 'Y1']).grid()
        self.assertEqual(grid.prange(), '-4:4:81')
        self.assertEqual(grid.qrange(), '-12:12:601')
