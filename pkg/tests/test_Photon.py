# vim: set fileencoding=utf-8 :
"""Test L{qts.photon}"""

from . import context

import math
import unittest

import mpmath
import numpy as np
import scipy.special

from qts.photon import (PhotonDistribution, PhotonError, cat_pnd, digamma,
                        envelope, envelope_derivative, envelope_extrema,
                        envelope_samples, inter_poissonian,
                        inter_poissonian_discrepancy, poisson_moments,
                        poisson_pnd, qts_pnd, qts_pnd_closed_form)
from qts.states import EVEN, ODD, StateError, min_nmax, preset


class TestDistribution(unittest.TestCase):
    """Distributions from the Fock expansion"""

    def test_normalized(self):
        for name in ('Y1', 'Y2', 'Y3', 'odd-qts(2,6)', 'even-cat(3)', 'vacuum'):
            spec = preset(name)
            dist = qts_pnd(spec, min_nmax(spec.mu_max))
            self.assertAlmostEqual(dist.total(), 1.0, places=10, msg=name)
            self.assertGreaterEqual(np.min(dist.probs), 0.0)

    def test_parity_zeros(self):
        even = qts_pnd(preset('Y1'), 135)
        self.assertEqual(even.parity, EVEN)
        self.assertLess(np.max(even.probs[1::2]), 1e-15)
        odd = qts_pnd(preset('odd-qts(2,6)'), 112)
        self.assertEqual(odd.parity, ODD)
        self.assertLess(np.max(odd.probs[0::2]), 1e-15)

    def test_odd_cat_parity(self):
        dist = qts_pnd(preset('odd-cat(2)'), 64)
        self.assertLess(np.max(dist.probs[0::2]), 1e-15)

    def test_truncation_too_small(self):
        self.assertRaises(StateError, qts_pnd, preset('Y1'), 100)

    def test_closed_form(self):
        for alpha, beta, parity in ((4, 7, EVEN), (1, 6, EVEN), (2, 6, EVEN),
                                    (2, 6, ODD), (0.5, 3, ODD)):
            spec = preset('%s(%g,%g)' % ('odd-qts' if parity == ODD else 'qts',
                                         alpha, beta))
            nmax = min_nmax(beta)
            fock = qts_pnd(spec, nmax)
            closed = qts_pnd_closed_form(alpha, beta, nmax, parity)
            np.testing.assert_allclose(closed.probs, fock.probs, atol=1e-12)

    def test_cat(self):
        for parity, name in ((EVEN, 'even-cat(2)'), (ODD, 'odd-cat(2)')):
            closed = cat_pnd(2.0, parity, 64)
            np.testing.assert_allclose(closed.probs,
                                       qts_pnd(preset(name), 64).probs,
                                       atol=1e-12)
        self.assertRaises(PhotonError, cat_pnd, 0.0, ODD, 64)

    def test_humps(self):
        for name, humps in (('Y1', [16, 48]), ('Y2', [0, 36]), ('Y3', [4, 36])):
            spec = preset(name)
            self.assertEqual(qts_pnd(spec, min_nmax(spec.mu_max)).humps(),
                             humps, name)

    def test_humps_without_parity(self):
        dist = PhotonDistribution([0.1, 0.3, 0.2, 0.25, 0.15])
        self.assertEqual(dist.humps(), [1, 3])

    def test_even_is_twice_envelope(self):
        fock = qts_pnd(preset('Y3'), 112)
        ns = np.arange(0, 113, 2)
        np.testing.assert_allclose(fock.probs[0::2],
                                   2.0 * envelope(2, 6, ns), atol=1e-12)

    def test_poisson_moments(self):
        for alpha in (1, 2, 4, 6, 7):
            mean, var = poisson_moments(alpha)
            self.assertAlmostEqual(mean, alpha ** 2, places=9)
            self.assertAlmostEqual(var, alpha ** 2, places=9)

    def test_moments(self):
        mean, var = poisson_moments(3.0)
        self.assertAlmostEqual(mean, 9.0, places=9)
        self.assertAlmostEqual(var, 9.0, places=9)
        dist = PhotonDistribution(poisson_pnd(3.0, np.arange(100)))
        self.assertAlmostEqual(dist.mandel_q(), 0.0, places=8)

    def test_cat_is_not_poissonian(self):
        """The even cat bunches, the odd cat anti-bunches at small amplitude"""
        self.assertGreater(qts_pnd(preset('even-cat(1)'), 64).mandel_q(), 0.0)
        self.assertLess(qts_pnd(preset('odd-cat(1)'), 64).mandel_q(), 0.0)

    def test_invalid(self):
        self.assertRaises(PhotonError, PhotonDistribution, [1.0], 'weird')
        self.assertRaises(PhotonError, PhotonDistribution([1.0]).mandel_q)
        self.assertRaises(PhotonError, poisson_pnd, 2.0, -1)
        self.assertRaises(PhotonError, inter_poissonian, 4, 7, 2.5)


class TestEnvelope(unittest.TestCase):
    """The envelope continued to real photon numbers"""

    def test_integer_values(self):
        ns = np.arange(0, 136, 2)
        poissonian = envelope(4, 7, ns, include_interference=False)
        cross = inter_poissonian(4, 7, ns)
        np.testing.assert_allclose(2.0 * envelope(4, 7, ns),
                                   2.0 * poissonian + cross, atol=1e-14)

    def _central_difference(self, alpha, beta, ns, with_cross, h=1e-3):
        """Five point central difference of the envelope"""
        def f(n):
            return envelope(alpha, beta, n, EVEN, with_cross)
        return (f(ns - 2 * h) - 8 * f(ns - h) + 8 * f(ns + h) - f(ns + 2 * h)) / (12 * h)

    def test_derivative(self):
        """Analytic slope against finite differences over n in [0.5, 120]"""
        ns = np.linspace(0.5, 120.0, 957)
        for alpha, beta in ((4, 7), (1, 6), (2, 6)):
            for with_cross in (True, False):
                exact = envelope_derivative(alpha, beta, ns, with_cross)
                numeric = self._central_difference(alpha, beta, ns, with_cross)
                # absolute floor near the extrema where the slope vanishes
                scale = np.maximum(np.abs(numeric), 1e-3 * np.max(np.abs(exact)))
                error = np.max(np.abs(exact - numeric) / scale)
                self.assertLessEqual(error, 1e-6, "%g,%g %s" % (alpha, beta, with_cross))

    def test_derivative_high_precision(self):
        """Slope at the Y1 extrema and in the tail against mpmath"""
        def value(n):
            a2, b2 = mpmath.mpf(16), mpmath.mpf(49)
            poissonian = 0.5 * (mpmath.exp(-a2) * a2 ** n + mpmath.exp(-b2) * b2 ** n)
            cross = mpmath.exp(-(a2 + b2) / 2) * mpmath.mpf(28) ** n
            return (poissonian + cross) / mpmath.gamma(n + 1)

        norm = preset('Y1').norm
        for n in (0.5, 15.5, 30.04, 48.5, 100.0):
            exact = float(envelope_derivative(4, 7, n, True))
            with mpmath.workdps(30):
                reference = float(4 / norm * mpmath.diff(value, mpmath.mpf(n)))
            self.assertLessEqual(abs(exact - reference), 1e-10 * abs(reference) + 1e-15,
                                 "n = %g" % n)

    def test_extrema(self):
        kinds = ['maximum', 'minimum', 'maximum']
        table = (((4, 7), (15.50, 30.04, 48.50), (15.50, 29.73, 48.50)),
                 ((1, 6), (0.46, 10.14, 35.50), (0.46, 9.95, 35.50)),
                 ((2, 6), (3.49, 15.00, 35.50), (3.49, 14.77, 35.50)))
        for (alpha, beta), with_cross, without in table:
            for flag, expected in ((True, with_cross), (False, without)):
                found = envelope_extrema(alpha, beta, include_interference=flag)
                self.assertEqual([kind for _, kind in found], kinds)
                for (n, _), target in zip(found, expected):
                    self.assertAlmostEqual(n, target, delta=0.02,
                                           msg="%g,%g %s" % (alpha, beta, flag))

    def test_interference_shift(self):
        """The cross term moves the extrema by less than half a photon"""
        for alpha, beta in ((4, 7), (1, 6), (2, 6)):
            with_cross = envelope_extrema(alpha, beta, include_interference=True)
            without = envelope_extrema(alpha, beta, include_interference=False)
            self.assertEqual(len(with_cross), len(without))
            for (n1, _), (n2, _) in zip(with_cross, without):
                self.assertLess(abs(n1 - n2), 0.5)

    def test_extrema_are_zeros(self):
        for n, _ in envelope_extrema(2, 6):
            self.assertLess(abs(float(envelope_derivative(2, 6, n, True))), 1e-10)

    def test_samples(self):
        samples = envelope_samples(4, 7, [0.0, 15.5, 30.0])
        self.assertEqual(len(samples), 3)
        self.assertEqual(samples[1].n, 15.5)
        self.assertAlmostEqual(samples[1].value, float(envelope(4, 7, 15.5)))
        self.assertGreater(samples[0].derivative, 0.0)

    def test_vacuum(self):
        """Both doublets at the origin give the vacuum, P(0) = 1"""
        np.testing.assert_allclose(envelope(0, 0, [0.0, 1.0, 2.5]), [0.5, 0.0, 0.0])
        self.assertEqual(envelope_extrema(0, 0), [])
        dist = qts_pnd_closed_form(0, 0, 10)
        self.assertAlmostEqual(dist[0], 1.0, places=15)
        self.assertEqual(dist.total(), dist[0])

    def test_printed_cross_term_differs(self):
        self.assertGreater(inter_poissonian_discrepancy(4, 7, 135), 1.0)


class TestDigamma(unittest.TestCase):

    points = [0.01, 0.3, 0.5, 1.0, 1.4616321449683622, 2.5, 7.0, 9.99,
              10.0, 16.5, 120.0, 1e4]

    def test_against_scipy(self):
        np.testing.assert_allclose(digamma(self.points),
                                   scipy.special.digamma(self.points),
                                   rtol=1e-13, atol=1e-13)

    def test_against_mpmath(self):
        for x in (0.25, 3.75, 42.0):
            self.assertAlmostEqual(digamma(x), float(mpmath.digamma(x)),
                                   places=13)

    def test_recurrence(self):
        xs = np.array([0.2, 1.7, 9.5, 31.0])
        np.testing.assert_allclose(digamma(xs + 1.0), digamma(xs) + 1.0 / xs,
                                   rtol=1e-13)

    def test_recurrence_range(self):
        xs = np.linspace(0.05, 199.0, 400)
        np.testing.assert_allclose(digamma(xs + 1.0) - digamma(xs), 1.0 / xs,
                                   rtol=0, atol=1e-12)

    def test_reflection(self):
        for x in (0.1, 0.3, 0.45, 0.8):
            self.assertAlmostEqual(digamma(1.0 - x) - digamma(x),
                                   math.pi / math.tan(math.pi * x), places=11)

    def test_scalar(self):
        self.assertIsInstance(digamma(3), float)
        self.assertEqual(digamma([3.0]).shape, (1,))

    def test_domain(self):
        for bad in (0.0, -2.5, float('nan'), float('inf')):
            self.assertRaises(PhotonError, digamma, bad)
