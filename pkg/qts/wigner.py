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
Wigner functions of coherent-state superpositions

Every pair of terms (mu_j, mu_k) contributes the kernel

  K = (1/pi) exp(-2 (q - (mu_j + mu_k)/2)**2) exp(-p**2/2) exp(-i p (mu_j - mu_k))

and W = N**-1 sum_jk c_j c_k K. The diagonal kernels are the Gaussians of
the single coherent states, the off-diagonal ones are the interference
fringes centred halfway between two amplitudes.
"""

import math

import numpy as np
from scipy.integrate import trapezoid

import qts.log
from qts.errors import QtsError
from qts.format import format_range

#: Tolerance of the unit integral before a field is flagged
MASS_TOLERANCE = 1e-4
#: Wigner functions in this convention are bounded by 1/pi
WIGNER_BOUND = 1.0 / math.pi


class WignerError(QtsError):
    """Problems evaluating a Wigner function"""
    pass


class PhaseSpaceGrid(object):
    """
    Uniform rectangular grid in (q, p)

    >>> grid = PhaseSpaceGrid(-1.0, 1.0, -2.0, 2.0, 5, 3)
    >>> grid.dq, grid.dp
    (0.5, 2.0)
    >>> grid.qs
    array([-1. , -0.5,  0. ,  0.5,  1. ])
    >>> PhaseSpaceGrid(1.0, -1.0, -2.0, 2.0, 5, 3)
    Traceback (most recent call last):
    ...
    qts.wigner.WignerError: Empty position range [1, -1]
    """
    def __init__(self, q_min, q_max, p_min, p_max, num_q, num_p):
        self.q_min, self.q_max = float(q_min), float(q_max)
        self.p_min, self.p_max = float(p_min), float(p_max)
        self.num_q, self.num_p = int(num_q), int(num_p)
        if not self.q_min < self.q_max:
            raise WignerError("Empty position range [%g, %g]" %
                              (self.q_min, self.q_max))
        if not self.p_min < self.p_max:
            raise WignerError("Empty momentum range [%g, %g]" %
                              (self.p_min, self.p_max))
        if self.num_q < 2 or self.num_p < 2:
            raise WignerError("Need at least two samples per axis, got %dx%d"
                              % (self.num_q, self.num_p))

    @classmethod
    def from_ranges(klass, qrange, prange):
        """Build a grid from two (min, max, count) tuples"""
        return klass(qrange[0], qrange[1], prange[0], prange[1],
                     qrange[2], prange[2])

    @classmethod
    def default_for(klass, spec, num_q=601, num_p=401):
        """
        Cover the outermost amplitude by five position widths and the
        momentum envelope exp(-p**2/2) down to 1e-14
        """
        extent = spec.mu_max + 5.0
        return klass(-extent, extent, -8.0, 8.0, num_q, num_p)

    @classmethod
    def on_nodes(klass, xs, stride, p_min=-8.0, p_max=8.0, num_p=161):
        """
        Positions taken from every stride-th node of a wavefunction grid,
        as L{wigner_numeric} needs them
        """
        count = len(xs) - 1
        if stride < 1 or count % stride:
            raise WignerError("Stride %d does not divide %d grid intervals" %
                              (stride, count))
        return klass(xs[0], xs[-1], p_min, p_max, count // stride + 1, num_p)

    @property
    def qs(self):
        return np.linspace(self.q_min, self.q_max, self.num_q)

    @property
    def ps(self):
        return np.linspace(self.p_min, self.p_max, self.num_p)

    @property
    def dq(self):
        return (self.q_max - self.q_min) / (self.num_q - 1)

    @property
    def dp(self):
        return (self.p_max - self.p_min) / (self.num_p - 1)

    @property
    def shape(self):
        return (self.num_q, self.num_p)

    def qrange(self):
        return format_range(self.q_min, self.q_max, self.num_q)

    def prange(self):
        return format_range(self.p_min, self.p_max, self.num_p)

    def __eq__(self, other):
        if not isinstance(other, PhaseSpaceGrid):
            return NotImplemented
        return self._key() == other._key()

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self._key())

    def _key(self):
        return (self.q_min, self.q_max, self.p_min, self.p_max,
                self.num_q, self.num_p)

    def __repr__(self):
        return "<PhaseSpaceGrid q=%s p=%s>" % (self.qrange(), self.prange())


class WignerField(object):
    """
    Wigner function samples W(q_i, p_j) on a L{PhaseSpaceGrid}

    @ivar grid: the grid
    @ivar values: num_q x num_p samples
    @ivar mass_deficit: the measured integral if it missed unity by more
        than L{MASS_TOLERANCE}, C{None} otherwise
    """
    def __init__(self, grid, values, mass_deficit=None):
        values = np.asarray(values, dtype=float)
        if values.shape != grid.shape:
            raise WignerError("Field of shape %s does not match grid %s" %
                              (values.shape, grid.shape))
        values.flags.writeable = False
        self.grid = grid
        self.values = values
        self._mass_deficit = mass_deficit

    @property
    def mass_deficit(self):
        return self._mass_deficit

    def scaled(self, factor):
        """The field times factor, without a mass flag"""
        return WignerField(self.grid, self.values * factor)

    def integrate(self):
        return integrate(self)

    def negativity_volume(self):
        return negativity_volume(self)

    def within_bounds(self, tol=1e-9):
        """Whether all samples lie in [-1/pi - tol, 1/pi + tol]"""
        return bool(np.max(np.abs(self.values)) <= WIGNER_BOUND + tol)


def cross_kernel(q, p, mu_j, mu_k):
    """
    Wigner kernel of |mu_j><mu_k|

    >>> round(cross_kernel(0.0, 0.0, 0.0, 0.0).real, 5)
    0.31831
    >>> k_jk = cross_kernel(0.3, 1.2, 4, 7)
    >>> abs(k_jk - cross_kernel(0.3, 1.2, 7, 4).conjugate()) < 1e-15
    True
    """
    q = np.asarray(q, dtype=float)
    p = np.asarray(p, dtype=float)
    centre = 0.5 * (mu_j + mu_k)
    value = (np.exp(-2.0 * (q - centre) ** 2 - 0.5 * p ** 2) / math.pi *
             np.exp(-1j * p * (mu_j - mu_k)))
    return complex(value) if value.ndim == 0 else value


def _pair_kernel(qs, ps, mu_j, mu_k):
    """Re K_jk on the grid, as an outer product"""
    centre = 0.5 * (mu_j + mu_k)
    gauss_q = np.exp(-2.0 * (qs - centre) ** 2) / math.pi
    fringe_p = np.exp(-0.5 * ps ** 2) * np.cos(ps * (mu_j - mu_k))
    return np.outer(gauss_q, fringe_p)


def _double_integral(grid, values):
    return float(trapezoid(trapezoid(values, grid.ps, axis=1), grid.qs))


def _checked_field(grid, values, what):
    """A field flagged with its integral when that misses unity"""
    mass = _double_integral(grid, values)
    deficit = None
    if abs(mass - 1.0) > MASS_TOLERANCE:
        qts.log.warn("Mass deficit in %s: grid %r integrates to %.8g" %
                     (what, grid, mass))
        deficit = mass
    return WignerField(grid, values, deficit)


def wigner_closed_form(spec, grid):
    """
    Wigner function of spec from the pairwise kernels

    @param spec: the state
    @type spec: L{qts.states.SuperpositionSpec}
    @param grid: where to sample
    @type grid: L{PhaseSpaceGrid}
    @rtype: L{WignerField}
    """
    qs, ps = grid.qs, grid.ps
    terms = spec.terms
    values = np.zeros(grid.shape)
    for j, (mu_j, c_j) in enumerate(terms):
        values += c_j * c_j * _pair_kernel(qs, ps, mu_j, mu_j)
        for mu_k, c_k in terms[j + 1:]:
            values += 2.0 * c_j * c_k * _pair_kernel(qs, ps, mu_j, mu_k)
    values /= spec.norm
    return _checked_field(grid, values, repr(spec.label or spec))


def _aligned_indices(psi, qs):
    """Indices of the field positions qs among the sample nodes of psi"""
    h = psi.dx
    pos = (qs - psi.xs[0]) / h
    idx = np.rint(pos).astype(int)
    if (np.any(np.abs(pos - idx) > 1e-6) or np.any(idx < 0) or
            np.any(idx >= len(psi.xs))):
        raise WignerError("Field positions are not nodes of the wavefunction "
                          "grid (step %g from %g)" % (h, psi.xs[0]))
    return idx


def wigner_numeric(psi, grid, decay=1e-10, residue=1e-9):
    """
    Wigner transform (1/2pi) int exp(ipx) psi*(q + x/2) psi(q - x/2) dx
    by the trapezoidal rule

    The field positions have to be nodes of the wavefunction grid with
    step h so x runs over the even multiples 2kh. Samples outside the
    wavefunction domain count as zero, x is cut at +-(q_max - q_min).

    @param psi: the sampled wavefunction
    @type psi: L{qts.states.SampledWavefunction}
    @param grid: where to evaluate the field
    @type grid: L{PhaseSpaceGrid}
    @rtype: L{WignerField}
    """
    values = np.asarray(psi.values, dtype=float)
    if psi.boundary() >= decay:
        raise WignerError("Domain too small: wavefunction is %.3g at the "
                          "boundary" % psi.boundary())
    h = psi.dx
    idx = _aligned_indices(psi, grid.qs)
    kmax = int(math.floor((grid.q_max - grid.q_min) / (2.0 * h) + 1e-9))
    ks = np.arange(-kmax, kmax + 1)

    padded = np.concatenate((np.zeros(kmax), values, np.zeros(kmax)))
    plus = padded[(idx + kmax)[:, None] + ks[None, :]]
    minus = padded[(idx + kmax)[:, None] - ks[None, :]]
    weights = np.ones(len(ks))
    weights[0] = weights[-1] = 0.5
    products = plus * minus * weights

    # dx = 2h, 1/(2 pi) * 2h = h/pi
    phases = np.exp(1j * np.outer(2.0 * h * ks, grid.ps))
    field = (h / math.pi) * (products @ phases)
    leftover = float(np.max(np.abs(field.imag)))
    if leftover > residue:
        raise WignerError("Wigner transform has imaginary part %.3g" % leftover)
    qts.log.debug("Numeric Wigner transform on %r, %d x-nodes, imaginary "
                  "residue %.3g" % (grid, len(ks), leftover))
    return _checked_field(grid, field.real, 'numeric transform')


def integrate(field):
    """Trapezoidal double integral, over p first then over q"""
    return _double_integral(field.grid, field.values)


def negativity_volume(field):
    """Integral of the negative part of the field"""
    return _double_integral(field.grid, np.maximum(-field.values, 0.0))

# vim:et:ts=4:sw=4:et:sts=4:ai:set list listchars=tab\:»·,trail\:·:
