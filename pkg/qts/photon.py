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
Photon-number statistics of coherent-state superpositions

The distribution of a state is computed by squaring its Fock amplitudes.
For the tetrachotomous state |alpha> +- |-alpha> + |beta> +- |-beta> it
splits into

  P(n) = [1 +- (-1)**n] (4/N) [(p_a(n) + p_b(n))/2 + X(n)]

with the Poisson distributions p_a, p_b of the two doublets and the
inter-Poissonian cross term X(n) = exp(-(a**2 + b**2)/2) (ab)**n / n!.
The bracket, continued to real n through the gamma function, is the
envelope of the distribution.
"""

import math
from collections import namedtuple

import numpy as np
from scipy.optimize import bisect
from scipy.signal import find_peaks
from scipy.special import gammaln, xlogy

import qts.log
from qts.errors import QtsError
from qts.states import EVEN, ODD, NONE, fock_amplitudes, min_nmax, qts_spec


class PhotonError(QtsError):
    """Problems evaluating photon-number statistics"""
    pass


EnvelopeSample = namedtuple('EnvelopeSample', ['n', 'value', 'derivative'])


class PhotonDistribution(object):
    """
    Probabilities P(n) for n = 0..nmax

    @ivar probs: the probabilities
    @type probs: C{numpy.ndarray}
    @ivar parity: 'even', 'odd' or 'none'
    @type parity: C{str}
    """
    def __init__(self, probs, parity=NONE):
        self.probs = np.asarray(probs, dtype=float)
        self.probs.flags.writeable = False
        if parity not in (EVEN, ODD, NONE):
            raise PhotonError("Unknown parity '%s'" % parity)
        self.parity = parity

    @property
    def nmax(self):
        return len(self.probs) - 1

    @property
    def ns(self):
        return np.arange(len(self.probs))

    def __len__(self):
        return len(self.probs)

    def __getitem__(self, n):
        return self.probs[n]

    def total(self):
        return float(np.sum(self.probs))

    def mean(self):
        return float(np.sum(self.ns * self.probs))

    def variance(self):
        mean = self.mean()
        return float(np.sum((self.ns - mean) ** 2 * self.probs))

    def mandel_q(self):
        """(Var n - <n>) / <n>: 0 for Poisson, < 0 sub-Poissonian"""
        mean = self.mean()
        if mean == 0.0:
            raise PhotonError("Mandel Q undefined for vanishing mean")
        return (self.variance() - mean) / mean

    def humps(self, height=1e-14):
        """
        Photon numbers of the local maxima, only looking at the allowed
        parity for parity states
        """
        step = 1 if self.parity == NONE else 2
        start = 1 if self.parity == ODD else 0
        sub = self.probs[start::step]
        # Pad so maxima at the ends count as peaks
        peaks, _ = find_peaks(np.concatenate(([0.0], sub, [0.0])),
                              height=height)
        return [int(start + step * (p - 1)) for p in peaks]


def _parity_factor(n, parity):
    """1 +- (-1)**n, or 1 without parity"""
    n = np.asarray(n)
    if parity == EVEN:
        return np.where(n % 2 == 0, 2.0, 0.0)
    elif parity == ODD:
        return np.where(n % 2 == 1, 2.0, 0.0)
    elif parity == NONE:
        return np.ones(n.shape)
    raise PhotonError("Unknown parity '%s'" % parity)


def _check_photon_numbers(n):
    n = np.asarray(n, dtype=float)
    if np.any(n < 0) or not np.all(np.isfinite(n)):
        raise PhotonError("Photon numbers must be finite and nonnegative")
    return n


def log_poisson(alpha, n):
    """log of exp(-alpha**2) alpha**(2n) / n! for real n >= 0"""
    n = np.asarray(n, dtype=float)
    alpha = abs(alpha)
    return xlogy(2 * n, alpha) - alpha * alpha - gammaln(n + 1)


def poisson_pnd(alpha, n):
    """
    Poisson photon-number distribution of the coherent state |alpha>

    >>> float(poisson_pnd(0, 0)), float(poisson_pnd(0, 3))
    (1.0, 0.0)
    >>> round(float(poisson_pnd(1, 0)), 10)
    0.3678794412
    """
    n = _check_photon_numbers(n)
    return np.exp(log_poisson(alpha, n))


def poisson_moments(alpha, nmax=None):
    """
    Mean and variance of the Poisson distribution, summed over a
    truncated photon-number range

    >>> mean, var = poisson_moments(2)
    >>> round(mean, 10), round(var, 10)
    (4.0, 4.0)
    """
    if nmax is None:
        nmax = min_nmax(alpha)
    dist = PhotonDistribution(poisson_pnd(alpha, np.arange(nmax + 1)))
    return dist.mean(), dist.variance()


def qts_pnd(spec, nmax):
    """
    Photon-number distribution of an arbitrary superposition from its
    Fock amplitudes

    @param spec: the state
    @type spec: L{qts.states.SuperpositionSpec}
    @param nmax: truncation, see L{qts.states.min_nmax}
    @type nmax: C{int}
    @rtype: L{PhotonDistribution}
    """
    expansion = fock_amplitudes(spec, nmax)
    dist = PhotonDistribution(expansion.probabilities(), spec.parity)
    missing = abs(1.0 - dist.total())
    if missing > 1e-10:
        qts.log.warn("Photon-number distribution of %r misses %.3g of "
                     "its mass" % (spec.label or spec, missing))
    return dist


def _doublet_norm(alpha, beta, parity):
    # a cat (alpha == beta) enters the four term formulas twice
    return qts_spec(alpha, beta, parity).norm


def _log_cross(alpha, beta, n):
    """log of exp(-(a**2 + b**2)/2) |ab|**n / n!"""
    a, b = abs(alpha), abs(beta)
    return xlogy(n, a * b) - 0.5 * (a * a + b * b) - gammaln(n + 1)


def inter_poissonian(alpha, beta, n, parity=EVEN):
    """
    Interference term between the two doublets,
    [1 +- (-1)**n] (4/N) exp(-(a**2 + b**2)/2) (ab)**n / n!

    >>> float(inter_poissonian(4, 7, 3))
    0.0
    """
    n = _check_photon_numbers(n)
    if np.any(n != np.floor(n)):
        raise PhotonError("Photon numbers must be integers")
    norm = _doublet_norm(alpha, beta, parity)
    sign = np.where((n % 2 == 1) & (alpha * beta < 0), -1.0, 1.0)
    return (_parity_factor(n.astype(int), parity) * 4.0 / norm * sign *
            np.exp(_log_cross(alpha, beta, n)))


def printed_inter_poissonian(alpha, beta, n, parity=EVEN):
    """
    The cross term with the factor exp(-(a + b)**2/2 + a**2 b**2)
    times the Poisson distribution of amplitude ab, a form of the cross
    term that is often quoted. Kept to report how far it is from
    L{inter_poissonian}.
    """
    n = _check_photon_numbers(n)
    a, b = abs(alpha), abs(beta)
    norm = _doublet_norm(alpha, beta, parity)
    log_term = (-0.5 * (a + b) ** 2 + (a * b) ** 2 + log_poisson(a * b, n))
    with np.errstate(over='ignore'):
        return _parity_factor(n.astype(int), parity) * 4.0 / norm * np.exp(log_term)


def inter_poissonian_discrepancy(alpha, beta, nmax, parity=EVEN):
    """
    Largest deviation of the printed cross term from the derived one,
    relative to the largest derived value
    """
    ns = np.arange(nmax + 1)
    derived = inter_poissonian(alpha, beta, ns, parity)
    printed = printed_inter_poissonian(alpha, beta, ns, parity)
    scale = np.max(np.abs(derived))
    if scale == 0.0:
        return float(np.max(np.abs(printed)))
    with np.errstate(invalid='ignore'):
        return float(np.max(np.abs(printed - derived)) / scale)


def envelope(alpha, beta, n, parity=EVEN, include_interference=True):
    """
    Envelope of the tetrachotomous distribution at real n >= 0

    (4/N) [(p_a(n) + p_b(n))/2 + X(n)], X dropped unless
    include_interference. Amplitudes enter by magnitude.
    """
    n = _check_photon_numbers(n)
    norm = _doublet_norm(alpha, beta, parity)
    value = 0.5 * (np.exp(log_poisson(alpha, n)) + np.exp(log_poisson(beta, n)))
    if include_interference:
        value = value + np.exp(_log_cross(alpha, beta, n))
    return 4.0 / norm * value


def _dlog_poisson(alpha, psi):
    """d/dn log p_a(n) = 2 log a - digamma(n + 1)"""
    if alpha == 0:
        return None
    return 2.0 * math.log(abs(alpha)) - psi


def envelope_derivative(alpha, beta, n, include_interference, parity=EVEN):
    """
    Derivative of L{envelope} with respect to continuous n

    Each term t(n) contributes t(n) d/dn log t(n) where the digamma
    function supplies d/dn log n!.
    """
    n = _check_photon_numbers(n)
    norm = _doublet_norm(alpha, beta, parity)
    psi = digamma(n + 1)
    total = np.zeros(np.shape(n))
    for amp in (alpha, beta):
        # p_0(n) vanishes for n > 0 and is flat in n at 0
        dlog = _dlog_poisson(amp, psi)
        if dlog is not None:
            total = total + 0.5 * np.exp(log_poisson(amp, n)) * dlog
    if include_interference and alpha != 0 and beta != 0:
        dlog = math.log(abs(alpha * beta)) - psi
        total = total + np.exp(_log_cross(alpha, beta, n)) * dlog
    return 4.0 / norm * total


def envelope_samples(alpha, beta, ns, include_interference=True, parity=EVEN):
    """L{EnvelopeSample}s at the given photon numbers"""
    ns = np.asarray(ns, dtype=float)
    values = envelope(alpha, beta, ns, parity, include_interference)
    slopes = envelope_derivative(alpha, beta, ns, include_interference, parity)
    return [EnvelopeSample(float(n), float(v), float(d))
            for n, v, d in zip(ns, values, slopes)]


def envelope_extrema(alpha, beta, include_interference=True, parity=EVEN,
                     n_max=None):
    """
    Locate the extrema of the envelope as zeros of its derivative

    The derivative is scanned at unit steps in n for sign changes, each
    bracket is then refined by bisection.

    @return: (n, 'maximum' | 'minimum') pairs in increasing n
    @rtype: C{list} of C{tuple}
    """
    if n_max is None:
        n_max = min_nmax(max(abs(alpha), abs(beta)))

    def slope(n):
        return float(envelope_derivative(alpha, beta, n, include_interference,
                                         parity))

    extrema = []
    nodes = np.arange(0.0, float(n_max) + 1.0)
    values = [slope(n) for n in nodes]
    for lo, hi, dlo, dhi in zip(nodes[:-1], nodes[1:], values[:-1], values[1:]):
        if dlo == 0.0 and dhi == 0.0:
            # flat, as for the vacuum
            continue
        elif dlo == 0.0:
            root = lo
        elif dlo * dhi < 0.0:
            root = bisect(slope, lo, hi, xtol=1e-12, maxiter=200)
        else:
            continue
        kind = 'maximum' if dlo > 0.0 or (dlo == 0.0 and dhi < 0.0) else 'minimum'
        extrema.append((float(root), kind))
    qts.log.debug("Envelope extrema for alpha=%g beta=%g (interference %s): %s"
                  % (alpha, beta, include_interference, extrema))
    return extrema


def cat_pnd(alpha, parity, nmax):
    """
    Closed form distribution of the cat state |alpha> +- |-alpha>,
    [1 +- (-1)**n] p_a(n) / (1 +- exp(-2 alpha**2))
    """
    ns = np.arange(nmax + 1)
    sign = 1.0 if parity == EVEN else -1.0
    denom = 1.0 + sign * math.exp(-2.0 * alpha * alpha)
    if denom <= 0.0:
        raise PhotonError("Odd cat state with vanishing amplitude")
    probs = _parity_factor(ns, parity) * np.exp(log_poisson(alpha, ns)) / denom
    return PhotonDistribution(probs, parity)


def qts_pnd_closed_form(alpha, beta, nmax, parity=EVEN):
    """
    Closed form distribution of the tetrachotomous state, the parity
    factor times the envelope at integer n
    """
    ns = np.arange(nmax + 1)
    poissonian = envelope(alpha, beta, ns, parity, include_interference=False)
    probs = (_parity_factor(ns, parity) * poissonian +
             inter_poissonian(alpha, beta, ns, parity))
    return PhotonDistribution(probs, parity)


def digamma(x):
    """
    The digamma function, logarithmic derivative of the gamma function

    For x < 10 the recurrence psi(x) = psi(x + 1) - 1/x moves the
    argument up, then the asymptotic series in 1/x**2 is summed.

    >>> round(float(digamma(1.0)), 12)
    -0.577215664902
    >>> round(float(digamma(2.0) - digamma(1.0)), 12)
    1.0
    >>> digamma(0)
    Traceback (most recent call last):
    ...
    qts.photon.PhotonError: Digamma argument outside supported domain x > 0
    """
    scalar = np.ndim(x) == 0
    x = np.atleast_1d(np.array(x, dtype=float))
    if np.any(~np.isfinite(x)) or np.any(x <= 0.0):
        raise PhotonError("Digamma argument outside supported domain x > 0")
    shifted = np.zeros_like(x)
    small = x < 10.0
    while np.any(small):
        shifted[small] -= 1.0 / x[small]
        x[small] += 1.0
        small = x < 10.0
    inv2 = 1.0 / (x * x)
    series = inv2 * (1.0 / 12 - inv2 * (1.0 / 120 - inv2 * (1.0 / 252 - inv2 * (
        1.0 / 240 - inv2 * (1.0 / 132 - inv2 * (691.0 / 32760))))))
    result = np.log(x) - 0.5 / x - series + shifted
    return float(result[0]) if scalar else result

# vim:et:ts=4:sw=4:et:sts=4:ai:set list listchars=tab\:»·,trail\:·:
