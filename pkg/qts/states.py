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
"""
Superpositions of real-amplitude coherent states on the position line

A coherent state |mu> with real mu is the Gaussian wave packet
<q|mu> = (2/pi)**(1/4) exp(-(q - mu)**2), i.e. a position density with
mean mu and variance 1/4. A L{SuperpositionSpec} holds the terms
(mu_j, c_j) of the unnormalized state sum_j c_j |mu_j>.
"""

import math
import re

import numpy as np
from scipy.integrate import trapezoid
from scipy.special import gammaln

import qts.log
from qts.errors import QtsError

#: Poisson tail mass allowed beyond a Fock truncation
TRUNCATION_TOLERANCE = 1e-12

EVEN = 'even'
ODD = 'odd'
NONE = 'none'

_COHERENT_PREFACTOR = (2.0 / math.pi) ** 0.25


class StateError(QtsError):
    """Problems constructing or expanding a state"""
    pass


class SuperpositionSpec(object):
    """
    A finite superposition sum_j c_j |mu_j> of coherent states

    >>> spec = SuperpositionSpec([(2, 1), (-2, 1)], label='even-cat(2)')
    >>> spec.amplitudes
    array([ 2., -2.])
    >>> spec.parity
    'even'
    >>> len(spec)
    2
    >>> SuperpositionSpec([])
    Traceback (most recent call last):
    ...
    qts.states.StateError: A superposition needs at least one term
    """

    def __init__(self, terms, label=None):
        """
        @param terms: (amplitude, coefficient) pairs
        @type terms: iterable of C{tuple}
        @param label: optional human readable name
        @type label: C{str}
        """
        terms = tuple((float(mu), float(coeff)) for mu, coeff in terms)
        if not terms:
            raise StateError("A superposition needs at least one term")
        for mu, coeff in terms:
            if not (math.isfinite(mu) and math.isfinite(coeff)):
                raise StateError("Amplitudes and coefficients must be finite, "
                                 "got (%r, %r)" % (mu, coeff))
        if not any(coeff != 0.0 for _, coeff in terms):
            raise StateError("At least one coefficient must be nonzero")
        self._terms = terms
        self._label = label
        self._amplitudes = np.array([mu for mu, _ in terms])
        self._coeffs = np.array([coeff for _, coeff in terms])
        self._amplitudes.flags.writeable = False
        self._coeffs.flags.writeable = False
        self._norm = normalization(self)

    @classmethod
    def from_lists(klass, amplitudes, coeffs=None, label=None):
        """
        Build a spec from parallel amplitude and coefficient lists, unit
        coefficients if none are given

        >>> SuperpositionSpec.from_lists([4, -4, 7, -7]).coeffs
        array([1., 1., 1., 1.])
        >>> SuperpositionSpec.from_lists([1, 2], [1])
        Traceback (most recent call last):
        ...
        qts.states.StateError: Got 2 amplitudes but 1 coefficients
        """
        amplitudes = list(amplitudes)
        if coeffs is None:
            coeffs = [1.0] * len(amplitudes)
        coeffs = list(coeffs)
        if len(coeffs) != len(amplitudes):
            raise StateError("Got %d amplitudes but %d coefficients" %
                             (len(amplitudes), len(coeffs)))
        return klass(zip(amplitudes, coeffs), label=label)

    @property
    def terms(self):
        return self._terms

    @property
    def label(self):
        return self._label

    @property
    def amplitudes(self):
        return self._amplitudes

    @property
    def coeffs(self):
        return self._coeffs

    @property
    def norm(self):
        """The normalization constant N = sum_jk c_j c_k <mu_k|mu_j>"""
        return self._norm

    @property
    def mu_max(self):
        return float(np.max(np.abs(self._amplitudes)))

    def _mirror_weights(self):
        """Coefficient sums keyed by amplitude"""
        weights = {}
        for mu, coeff in self._terms:
            weights[mu] = weights.get(mu, 0.0) + coeff
        return weights

    @property
    def parity(self):
        """
        'even' if the state is invariant under mu -> -mu, 'odd' if it
        changes sign and 'none' otherwise
        """
        weights = self._mirror_weights()
        if all(weights.get(-mu, 0.0) == w for mu, w in weights.items()):
            return EVEN
        if all(weights.get(-mu, 0.0) == -w for mu, w in weights.items()):
            return ODD
        return NONE

    def is_symmetric_on_line(self):
        """Whether every amplitude comes with its mirror image"""
        amps = set(self._amplitudes)
        return all(-mu in amps for mu in amps)

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(self._terms)

    def __eq__(self, other):
        if not isinstance(other, SuperpositionSpec):
            return NotImplemented
        return self._terms == other._terms

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self._terms)

    def __repr__(self):
        name = " '%s'" % self._label if self._label else ''
        return "<SuperpositionSpec%s %s>" % (name, list(self._terms))


class SampledWavefunction(object):
    """A real wavefunction sampled on a uniform position grid"""

    def __init__(self, xs, values):
        self.xs = np.asarray(xs, dtype=float)
        self.values = np.asarray(values, dtype=float)
        if self.xs.ndim != 1 or self.xs.shape != self.values.shape:
            raise StateError("Samples and grid must be one dimensional and "
                             "of equal length")
        if len(self.xs) < 3:
            raise StateError("Need at least three samples")

    @property
    def dx(self):
        return (self.xs[-1] - self.xs[0]) / (len(self.xs) - 1)

    def norm(self):
        """Trapezoidal integral of the density"""
        return float(trapezoid(self.values ** 2, self.xs))

    def boundary(self):
        """Largest magnitude at the two ends of the grid"""
        return float(max(abs(self.values[0]), abs(self.values[-1])))


class FockExpansion(object):
    """
    Fock space amplitudes a_n, n = 0..nmax of a normalized state

    @ivar amplitudes: a_n
    @type amplitudes: C{numpy.ndarray}
    @ivar nmax: truncation
    @type nmax: C{int}
    """
    def __init__(self, amplitudes):
        self.amplitudes = np.asarray(amplitudes, dtype=float)
        self.amplitudes.flags.writeable = False
        self.nmax = len(self.amplitudes) - 1

    @property
    def weight(self):
        """sum_n a_n**2"""
        return float(np.sum(self.amplitudes ** 2))

    @property
    def tail_mass(self):
        """Probability missing beyond nmax"""
        return max(0.0, 1.0 - self.weight)

    def probabilities(self):
        return self.amplitudes ** 2


def overlap(mu1, mu2):
    """
    Overlap <mu2|mu1> of two coherent states with real amplitudes

    >>> overlap(3.0, 3.0)
    1.0
    >>> round(overlap(4, 7), 10)
    0.0111089965
    """
    return float(np.exp(-0.5 * (mu1 - mu2) ** 2))


def gram_matrix(spec):
    """Pairwise overlaps of the coherent states of spec"""
    mus = spec.amplitudes
    return np.exp(-0.5 * np.subtract.outer(mus, mus) ** 2)


def normalization(spec):
    """
    Normalization constant N = sum_jk c_j c_k <mu_k|mu_j>

    >>> normalization(SuperpositionSpec([(0.0, 1.0)]))
    1.0
    >>> normalization(SuperpositionSpec([(1.0, 1.0), (1.0, -1.0)]))
    Traceback (most recent call last):
    ...
    qts.states.StateError: Unnormalizable state: Gram sum 0 vanishes
    """
    coeffs = spec.coeffs
    total = float(coeffs @ gram_matrix(spec) @ coeffs)
    # Relative to the largest possible Gram sum (sum |c|)**2
    scale = float(np.sum(np.abs(coeffs))) ** 2
    if total <= 64 * np.finfo(float).eps * scale:
        raise StateError("Unnormalizable state: Gram sum %g vanishes" % total)
    return total


def coherent_wavefunction(mu, q):
    """<q|mu> for a real amplitude mu"""
    return _COHERENT_PREFACTOR * np.exp(-(np.asarray(q, dtype=float) - mu) ** 2)


def position_wavefunction(spec, q):
    """
    Normalized position wavefunction psi(q) = N**(-1/2) sum_j c_j <q|mu_j>

    @param spec: the state
    @type spec: L{SuperpositionSpec}
    @param q: position(s)
    @type q: C{float} or array
    """
    q = np.asarray(q, dtype=float)
    psi = np.zeros_like(q)
    for mu, coeff in spec.terms:
        psi = psi + coeff * coherent_wavefunction(mu, q)
    psi = psi / math.sqrt(spec.norm)
    return float(psi) if psi.ndim == 0 else psi


def sample_wavefunction(spec, xs):
    """Sample the position wavefunction of spec on the grid xs"""
    xs = np.asarray(xs, dtype=float)
    return SampledWavefunction(xs, position_wavefunction(spec, xs))


def min_nmax(mu_max):
    """
    Smallest Fock truncation whose Poisson tail stays below
    L{TRUNCATION_TOLERANCE}

    >>> min_nmax(0)
    64
    >>> min_nmax(7)
    135
    """
    mu_max = abs(mu_max)
    return max(64, int(math.ceil(mu_max ** 2 + 10 * mu_max + 16)))


def fock_amplitudes(spec, nmax):
    """
    Expand spec in the Fock basis

    a_n = N**(-1/2) sum_j c_j exp(-mu_j**2/2) mu_j**n / sqrt(n!)
    evaluated in log space.

    @param spec: the state
    @type spec: L{SuperpositionSpec}
    @param nmax: the truncation
    @type nmax: C{int}
    @rtype: L{FockExpansion}
    """
    needed = min_nmax(spec.mu_max)
    if nmax < needed:
        raise StateError("Truncation too small: nmax %d below %d for "
                         "amplitudes up to %g" % (nmax, needed, spec.mu_max))

    n = np.arange(nmax + 1)
    half_log_fact = 0.5 * gammaln(n + 1)
    amps = np.zeros(nmax + 1)
    for mu, coeff in spec.terms:
        if coeff == 0.0:
            continue
        if mu == 0.0:
            amps[0] += coeff
            continue
        log_mag = -0.5 * mu * mu + n * math.log(abs(mu)) - half_log_fact
        sign = np.where((n % 2 == 1) & (mu < 0), -1.0, 1.0) * math.copysign(1.0, coeff)
        amps += sign * np.exp(log_mag + math.log(abs(coeff)))
    expansion = FockExpansion(amps / math.sqrt(spec.norm))
    qts.log.debug("Fock expansion to n=%d, tail mass %.3g" %
                  (nmax, expansion.tail_mass))
    return expansion


def qts_spec(alpha, beta, parity=EVEN, label=None):
    """
    The tetrachotomous state |alpha> +- |-alpha> + |beta> +- |-beta>

    The odd state uses the alternating pattern (+, -, +, -).

    >>> qts_spec(4, 7).amplitudes
    array([ 4., -4.,  7., -7.])
    >>> qts_spec(1, 6, 'odd').coeffs
    array([ 1., -1.,  1., -1.])
    """
    if parity not in (EVEN, ODD):
        raise StateError("Parity must be '%s' or '%s', not '%s'" %
                         (EVEN, ODD, parity))
    sign = 1.0 if parity == EVEN else -1.0
    return SuperpositionSpec([(alpha, 1.0), (-alpha, sign),
                              (beta, 1.0), (-beta, sign)], label=label)


def cat_spec(alpha, parity=EVEN, label=None):
    """The cat state |alpha> +- |-alpha>"""
    if parity not in (EVEN, ODD):
        raise StateError("Parity must be '%s' or '%s', not '%s'" %
                         (EVEN, ODD, parity))
    sign = 1.0 if parity == EVEN else -1.0
    return SuperpositionSpec([(alpha, 1.0), (-alpha, sign)], label=label)


def qts_parameters(spec):
    """
    Recover (alpha, beta, parity) of a cat or tetrachotomous state

    A cat state gives alpha == beta. The vacuum gives (0, 0, even), for
    which the envelope formulas reduce to the distribution of |0>.
    Otherwise the coefficients must share one magnitude and both
    doublets the same parity with a positive relative sign.

    >>> qts_parameters(qts_spec(4, 7))
    (4.0, 7.0, 'even')
    >>> qts_parameters(cat_spec(2, 'odd'))
    (2.0, 2.0, 'odd')
    >>> qts_parameters(preset('vacuum'))
    (0.0, 0.0, 'even')
    >>> qts_parameters(SuperpositionSpec([(1, 1), (2, 1)]))
    Traceback (most recent call last):
    ...
    qts.states.StateError: Not a two-doublet state: [(1.0, 1.0), (2.0, 1.0)]
    """
    weights = spec._mirror_weights()
    if set(weights) == {0.0}:
        return 0.0, 0.0, EVEN
    parity = spec.parity
    doublets = sorted(mu for mu in weights if mu > 0)
    nonzero = [w for w in weights.values() if w != 0.0]
    ok = (parity in (EVEN, ODD) and 1 <= len(doublets) <= 2 and
          len(nonzero) == 2 * len(doublets) and
          all(weights[mu] == weights[doublets[0]] for mu in doublets) and
          weights[doublets[0]] > 0)
    if not ok:
        raise StateError("Not a two-doublet state: %s" % list(spec.terms))
    alpha, beta = doublets[0], doublets[-1]
    return alpha, beta, parity


#: Named cases, (alpha, beta)
PRESETS = {'Y1': (4.0, 7.0),
           'Y2': (1.0, 6.0),
           'Y3': (2.0, 6.0)}

_PARAM_RE = re.compile(r'^(?P<name>[a-z-]+)\s*(?:\((?P<p1>[^)]*)\)|:(?P<p2>.*))$')


def _preset_args(text, count):
    try:
        values = [float(field) for field in text.split(',')]
    except ValueError:
        values = []
    if len(values) != count or not all(math.isfinite(v) for v in values):
        return None
    return values


def preset(name):
    """
    Look up a named state

    Known names are Y1, Y2, Y3, vacuum, even-cat(a), odd-cat(a),
    qts(a,b) and odd-qts(a,b); parameters may also be given as
    'even-cat:2' or 'qts:4,7'.

    >>> preset('Y3').amplitudes
    array([ 2., -2.,  6., -6.])
    >>> preset('odd-cat:2').coeffs
    array([ 1., -1.])
    >>> preset('vacuum').terms
    ((0.0, 1.0),)
    >>> preset('Y4')
    Traceback (most recent call last):
    ...
    qts.states.StateError: Unknown preset 'Y4'
    """
    key = name.strip()
    if key.upper() in PRESETS:
        alpha, beta = PRESETS[key.upper()]
        return qts_spec(alpha, beta, EVEN, label=key.upper())
    if key.lower() == 'vacuum':
        return SuperpositionSpec([(0.0, 1.0)], label='vacuum')

    match = _PARAM_RE.match(key.lower())
    if match:
        kind = match.group('name')
        text = match.group('p1') if match.group('p1') is not None else match.group('p2')
        if kind in ('even-cat', 'odd-cat', 'cat'):
            args = _preset_args(text, 1)
            if args:
                parity = ODD if kind == 'odd-cat' else EVEN
                return cat_spec(args[0], parity, label=key)
        elif kind in ('qts', 'even-qts', 'odd-qts'):
            args = _preset_args(text, 2)
            if args:
                parity = ODD if kind == 'odd-qts' else EVEN
                return qts_spec(args[0], args[1], parity, label=key)
    raise StateError("Unknown preset '%s'" % name)

# vim:et:ts=4:sw=4:et:sts=4:ai:set list listchars=tab\:»·,trail\:·:
