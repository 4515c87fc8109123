# vim: set fileencoding=utf-8 :
"""Run the commands end to end"""

from . import context

import filecmp
import unittest

from qts.export import MANIFEST_NAME, Manifest, read_csv, read_report
from qts.format import parse_floats
from qts.wellsolver import BOUNDARY_DECAY
import qts.scripts.all
import qts.scripts.pnd
import qts.scripts.well
import qts.scripts.wigner
from .testutils import QtsLogTester, assert_peaks_near

ALL_OUTPUTS = ['envelope.csv', 'momentum.csv', 'pnd.csv', 'position.csv',
               'well_report.txt', 'wigner.csv']


def tearDownModule():
    context.teardown()


class TestRun(unittest.TestCase, QtsLogTester):

    def __init__(self, methodName='runTest'):
        unittest.TestCase.__init__(self, methodName)
        QtsLogTester.__init__(self)

    def setUp(self):
        self._capture_log(True)

    def tearDown(self):
        self._capture_log(False)

    def test_all(self):
        """All outputs plus the manifest, reproducible from run to run"""
        first = context.new_tmpdir('all')
        second = context.new_tmpdir('all')
        for outdir in (first, second):
            ret = qts.scripts.all.main(['all', '--preset', 'Y1',
                                        '--out', outdir.path])
            self.assertEqual(ret, 0)
        self.assertEqual(first.listdir(), sorted(ALL_OUTPUTS + [MANIFEST_NAME]))
        match, mismatch, errors = filecmp.cmpfiles(first.path, second.path,
                                                   ALL_OUTPUTS, shallow=False)
        self.assertEqual(mismatch + errors, [])

        manifest = Manifest.read(first.path)
        self.assertEqual(manifest.get('run', 'command'), 'all')
        self.assertEqual(manifest.get('run', 'state'), 'Y1')
        self.assertEqual(sorted(s for s in manifest.sections() if s != 'run'),
                         ALL_OUTPUTS)
        self.assertEqual(manifest.get('pnd.csv', 'humps'), '16 48')
        for name in ('position.csv', 'momentum.csv'):
            names, _ = read_csv(first.join(name))
            self.assertEqual(names, ['coordinate', 'density'])

    def test_wigner(self):
        outdir = context.new_tmpdir('wigner')
        ret = qts.scripts.wigner.main(['wigner', '--preset', 'even-cat(2)',
                                       '--qrange=-6:6:61', '--prange=-6:6:41',
                                       '--out', outdir.path])
        self.assertEqual(ret, 0)
        names, data = read_csv(outdir.join('wigner.csv'))
        self.assertEqual(names, ['q', 'p', 'w'])
        self.assertEqual(data.shape, (61 * 41, 3))
        # q major order, origin in the middle
        self.assertEqual(tuple(data[30 * 41 + 20, :2]), (0.0, 0.0))
        self.assertAlmostEqual(data[30 * 41 + 20, 2], 0.318309886184, places=9)
        self.assertEqual(Manifest.read(outdir.path).get('wigner.csv', 'rows'),
                         str(61 * 41))

    def test_pnd_bump(self):
        outdir = context.new_tmpdir('pnd')
        ret = qts.scripts.pnd.main(['pnd', '--preset', 'Y1', '--nmax', '100',
                                    '--out', outdir.path])
        self.assertEqual(ret, 0)
        self.assertTrue(self._log_matches(".*nmax 100 too small for amplitude 7, "
                                          "using 135"))
        names, data = read_csv(outdir.join('pnd.csv'))
        self.assertEqual(names, ['n', 'probability'])
        self.assertEqual(len(data), 136)
        self.assertAlmostEqual(data[:, 1].sum(), 1.0, places=10)

    def test_well(self):
        outdir = context.new_tmpdir('well')
        ret = qts.scripts.well.main(['well', '--preset', 'Y3',
                                     '--out', outdir.path])
        self.assertEqual(ret, 0)
        report = read_report(outdir.join('well_report.txt'))
        self.assertGreaterEqual(float(report['fidelity']), 0.9)
        self.assertEqual(report['curvature'], '4')
        self.assertLess(float(report['boundary_amplitude']), BOUNDARY_DECAY)
        step = float(report['field_step'])
        peaks = [float(p) for p in report['peaks'].split()]
        assert_peaks_near(self, peaks, (-6.0, -2.0, 2.0, 6.0), step)
        self.assertEqual(parse_floats(report['centers'].replace(' ', ',')),
                         [-6.0, -2.0, 2.0, 6.0])
        for name in ('potential.csv', 'wavefunction.csv'):
            _, data = read_csv(outdir.join(name))
            self.assertEqual(len(data), 4001)

    def test_vacuum(self):
        """The vacuum runs through every analysis"""
        outdir = context.new_tmpdir('vacuum')
        ret = qts.scripts.all.main(['all', '--preset', 'vacuum', '--out', outdir.path])
        self.assertEqual(ret, 0)
        manifest = Manifest.read(outdir.path)
        self.assertEqual(manifest.get('envelope.csv', 'extrema'), '')
        self.assertEqual(manifest.get('pnd.csv', 'humps'), '0')
        self.assertLess(float(manifest.get('pnd.csv', 'closed_form_deviation')), 1e-12)
        names, data = read_csv(outdir.join('envelope.csv'))
        at_zero = data[(data[:, 0] == 0.0) & (data[:, 3] == 1.0)]
        self.assertEqual(at_zero[0, 1], 0.5)

    def test_runtime_error(self):
        """A state the envelope cannot handle fails before writing anything"""
        outdir = context.new_tmpdir('fail')
        ret = qts.scripts.all.main(['all', '--amps', '1,2', '--out', outdir.path])
        self.assertEqual(ret, 1)
        self.assertEqual(outdir.listdir(), [])
        self.assertTrue(self._log_matches(".*Not a two-doublet state.*"))

    def test_bad_outdir(self):
        outdir = context.new_tmpdir('file')
        with open(outdir.join('taken'), 'w') as f:
            f.write('x')
        ret = qts.scripts.pnd.main(['pnd', '--preset', 'Y2',
                                    '--out', outdir.join('taken')])
        self.assertEqual(ret, 1)
        self.assertTrue(self._log_matches(".*Cannot create output directory.*"))
