# vim: set fileencoding=utf-8 :
"""Test L{qts.states}"""

from . import context

import math
import unittest

import numpy as np
from scipy.integrate import trapezoid

from qts.states import (SuperpositionSpec, StateError, EVEN, ODD, NONE,
                        cat_spec, coherent_wavefunction, fock_amplitudes,
                        gram_matrix, min_nmax, normalization, overlap,
                        position_wavefunction, preset, qts_parameters,
                        qts_spec, sample_wavefunction)


class TestSuperpositionSpec(unittest.TestCase):

    def test_parity(self):
        """Mirror symmetric coefficients decide the parity"""
        self.assertEqual(cat_spec(2, EVEN).parity, EVEN)
        self.assertEqual(cat_spec(2, ODD).parity, ODD)
        self.assertEqual(qts_spec(4, 7, ODD).parity, ODD)
        self.assertEqual(SuperpositionSpec([(1, 1), (2, 1)]).parity, NONE)
        self.assertEqual(SuperpositionSpec([(0, 1)]).parity, EVEN)

    def test_symmetric_on_line(self):
        self.assertTrue(preset('Y1').is_symmetric_on_line())
        self.assertFalse(SuperpositionSpec([(1, 1), (-2, 1)]).is_symmetric_on_line())

    def test_invalid(self):
        self.assertRaises(StateError, SuperpositionSpec, [])
        self.assertRaises(StateError, SuperpositionSpec, [(1, 0), (2, 0)])
        self.assertRaises(StateError, SuperpositionSpec, [(float('nan'), 1)])
        self.assertRaises(StateError, SuperpositionSpec.from_lists, [1, 2], [1])

    def test_equality(self):
        self.assertEqual(qts_spec(4, 7), preset('Y1'))
        self.assertNotEqual(qts_spec(4, 7), qts_spec(4, 7, ODD))
        self.assertEqual(len(set([qts_spec(2, 6), preset('Y3')])), 1)

    def test_mu_max(self):
        self.assertEqual(preset('Y2').mu_max, 6.0)


class TestNormalization(unittest.TestCase):

    def test_overlap(self):
        self.assertEqual(overlap(1.5, 1.5), 1.0)
        self.assertAlmostEqual(overlap(1, -1), math.exp(-2), places=15)

    def test_gram_matrix(self):
        gram = gram_matrix(preset('Y1'))
        self.assertEqual(gram.shape, (4, 4))
        np.testing.assert_allclose(np.diag(gram), 1.0)
        np.testing.assert_allclose(gram, gram.T)
        self.assertAlmostEqual(gram[0, 2], math.exp(-4.5), places=15)

    def test_cat_norm(self):
        """N = 2 +- 2 exp(-2 alpha**2) for cat states"""
        for alpha in (0.3, 1.0, 2.0):
            self.assertAlmostEqual(cat_spec(alpha, EVEN).norm,
                                   2 + 2 * math.exp(-2 * alpha ** 2), places=13)
            self.assertAlmostEqual(cat_spec(alpha, ODD).norm,
                                   2 - 2 * math.exp(-2 * alpha ** 2), places=13)

    def test_qts_norm(self):
        """Four unit terms, six distinct pairs"""
        a, b = 4.0, 7.0
        expected = 4 + 2 * (math.exp(-2 * a * a) + math.exp(-2 * b * b) +
                            2 * math.exp(-0.5 * (a - b) ** 2) +
                            2 * math.exp(-0.5 * (a + b) ** 2))
        self.assertAlmostEqual(preset('Y1').norm, expected, places=13)

    def test_unnormalizable(self):
        self.assertRaises(StateError, cat_spec, 0.0, ODD)
        self.assertRaises(StateError, SuperpositionSpec, [(1.0, 2.0), (1.0, -2.0)])
        self.assertAlmostEqual(normalization(SuperpositionSpec([(0.0, 3.0)])), 9.0)

    def test_mirror_and_order(self):
        """N depends on the set of terms, not on their sign or order"""
        spec = SuperpositionSpec.from_lists([1.0, -2.5, 3.0, 0.5], [1.0, -0.5, 2.0, 0.3])
        norm = normalization(spec)
        flipped = SuperpositionSpec([(-mu, c) for mu, c in spec.terms])
        self.assertAlmostEqual(normalization(flipped), norm, places=13)
        for order in ((3, 2, 1, 0), (1, 3, 0, 2)):
            permuted = SuperpositionSpec([spec.terms[i] for i in order])
            self.assertAlmostEqual(normalization(permuted), norm, places=13)


class TestWavefunction(unittest.TestCase):

    def test_coherent_normalized(self):
        qs = np.linspace(-10, 10, 4001)
        self.assertAlmostEqual(trapezoid(coherent_wavefunction(1.5, qs) ** 2, qs),
                               1.0, places=12)

    def test_position_wavefunction_normalized(self):
        qs = np.linspace(-15, 15, 6001)
        for name in ('Y1', 'Y2', 'Y3', 'odd-cat(1)', 'vacuum'):
            psi = position_wavefunction(preset(name), qs)
            self.assertAlmostEqual(trapezoid(psi ** 2, qs), 1.0, places=10,
                                   msg=name)

    def test_scalar(self):
        value = position_wavefunction(preset('vacuum'), 0.0)
        self.assertIsInstance(value, float)
        self.assertAlmostEqual(value, (2 / math.pi) ** 0.25, places=15)

    def test_sampled(self):
        xs = np.linspace(-8, 8, 801)
        psi = sample_wavefunction(preset('even-cat(2)'), xs)
        self.assertAlmostEqual(psi.dx, 0.02, places=14)
        self.assertAlmostEqual(psi.norm(), 1.0, places=10)
        np.testing.assert_allclose(psi.values, psi.values[::-1], atol=1e-14)


class TestFock(unittest.TestCase):

    def test_min_nmax(self):
        self.assertEqual(min_nmax(1), 64)
        self.assertEqual(min_nmax(6), 112)
        self.assertEqual(min_nmax(7), 135)
        self.assertEqual(min_nmax(-7), 135)

    def test_truncation_too_small(self):
        self.assertRaises(StateError, fock_amplitudes, preset('Y1'), 130)

    def test_complete(self):
        for name in ('Y1', 'Y2', 'Y3', 'odd-qts(1,6)'):
            spec = preset(name)
            expansion = fock_amplitudes(spec, min_nmax(spec.mu_max))
            self.assertLess(expansion.tail_mass, 1e-10, name)

    def test_weight_grows_with_nmax(self):
        spec = preset('Y3')
        weights = [fock_amplitudes(spec, nmax).weight
                   for nmax in range(min_nmax(spec.mu_max), 200, 7)]
        for a, b in zip(weights, weights[1:]):
            # up to the rounding of a longer sum
            self.assertGreaterEqual(b, a - 4e-16)
        self.assertLessEqual(weights[-1], 1.0 + 1e-12)

    def test_parity_selection(self):
        """Even states have no odd photon numbers and vice versa"""
        even = fock_amplitudes(preset('Y3'), 112).amplitudes
        odd = fock_amplitudes(preset('odd-qts(2,6)'), 112).amplitudes
        self.assertLess(np.max(np.abs(even[1::2])), 1e-15)
        self.assertLess(np.max(np.abs(odd[0::2])), 1e-15)

    def test_coherent_is_poissonian(self):
        expansion = fock_amplitudes(SuperpositionSpec([(2.0, 1.0)]), 64)
        n = np.arange(65)
        poisson = np.array([math.exp(-4.0) * 4.0 ** k / math.factorial(k)
                            for k in n])
        np.testing.assert_allclose(expansion.probabilities(), poisson,
                                   rtol=1e-12, atol=1e-300)


class TestPresets(unittest.TestCase):

    def test_named(self):
        np.testing.assert_array_equal(preset('Y1').amplitudes, [4, -4, 7, -7])
        np.testing.assert_array_equal(preset('y2').amplitudes, [1, -1, 6, -6])
        self.assertEqual(preset('Y3').label, 'Y3')

    def test_parametrised(self):
        self.assertEqual(preset('even-cat(2)'), cat_spec(2, EVEN))
        self.assertEqual(preset('odd-cat:2'), cat_spec(2, ODD))
        self.assertEqual(preset('qts(4,7)'), qts_spec(4, 7))
        self.assertEqual(preset('odd-qts:1,6'), qts_spec(1, 6, ODD))

    def test_unknown(self):
        for name in ('Y4', 'cat', 'qts(1)', 'even-cat(x)', ''):
            self.assertRaises(StateError, preset, name)

    def test_parameters(self):
        self.assertEqual(qts_parameters(preset('Y2')), (1.0, 6.0, EVEN))
        self.assertEqual(qts_parameters(preset('odd-qts(2,6)')), (2.0, 6.0, ODD))
        self.assertEqual(qts_parameters(preset('vacuum')), (0.0, 0.0, EVEN))
        self.assertRaises(StateError, qts_parameters,
                          SuperpositionSpec.from_lists([4, -4, 7, -7], [1, 1, 2, 2]))
