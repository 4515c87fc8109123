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
"""Position and momentum marginal distributions"""

import math

import numpy as np
from scipy.integrate import trapezoid
from scipy.signal import find_peaks

import qts.log
from qts.errors import QtsError
from qts.states import position_wavefunction

POSITION = 'position'
MOMENTUM = 'momentum'
AXES = (POSITION, MOMENTUM)


class MarginalError(QtsError):
    """Problems evaluating a marginal distribution"""
    pass


class MarginalCurve(object):
    """
    Density samples along one phase-space axis

    @ivar axis: 'position' or 'momentum'
    @ivar coordinates: sample positions
    @ivar densities: density values
    @ivar mass_deficit: integral of the parent field if that was flagged
    """
    def __init__(self, axis, coordinates, densities, mass_deficit=None):
        if axis not in AXES:
            raise MarginalError("Unknown axis '%s', use one of %s" %
                                (axis, ', '.join(AXES)))
        self.axis = axis
        self.coordinates = np.asarray(coordinates, dtype=float)
        self.densities = np.asarray(densities, dtype=float)
        if self.coordinates.shape != self.densities.shape:
            raise MarginalError("Got %d coordinates for %d densities" %
                                (len(self.coordinates), len(self.densities)))
        self.mass_deficit = mass_deficit

    @property
    def samples(self):
        return list(zip(self.coordinates, self.densities))

    def __len__(self):
        return len(self.coordinates)

    def integrate(self):
        return float(trapezoid(self.densities, self.coordinates))

    def peaks(self, rel_height=0.01):
        return peak_positions(self, rel_height)


def position_marginal(spec, qs):
    """
    pr(q) = |psi(q)|**2, N**-1 (2/pi)**(1/2) (sum_j c_j exp(-(q - mu_j)**2))**2
    """
    qs = np.atleast_1d(np.asarray(qs, dtype=float))
    return MarginalCurve(POSITION, qs, position_wavefunction(spec, qs) ** 2)


def momentum_marginal(spec, ps):
    """
    pr(p) = N**-1 (2 pi)**(-1/2) exp(-p**2/2) |sum_j c_j exp(-i p mu_j)|**2
    """
    ps = np.atleast_1d(np.asarray(ps, dtype=float))
    real = np.zeros_like(ps)
    imag = np.zeros_like(ps)
    for mu, coeff in spec.terms:
        real += coeff * np.cos(ps * mu)
        imag -= coeff * np.sin(ps * mu)
    gauss = np.exp(-0.5 * ps ** 2) / math.sqrt(2.0 * math.pi)
    return MarginalCurve(MOMENTUM, ps, gauss * (real ** 2 + imag ** 2) / spec.norm)


def marginal_from_field(field, axis):
    """
    Integrate a Wigner field over the axis conjugate to axis

    @param field: the field
    @type field: L{qts.wigner.WignerField}
    @param axis: 'position' or 'momentum'
    @type axis: C{str}
    @rtype: L{MarginalCurve}
    """
    grid = field.grid
    if axis == POSITION:
        coords = grid.qs
        densities = trapezoid(field.values, grid.ps, axis=1)
    elif axis == MOMENTUM:
        coords = grid.ps
        densities = trapezoid(field.values, grid.qs, axis=0)
    else:
        raise MarginalError("Unknown axis '%s', use one of %s" %
                            (axis, ', '.join(AXES)))
    if field.mass_deficit is not None:
        qts.log.warn("%s marginal taken from a field with mass %.8g" %
                     (axis.capitalize(), field.mass_deficit))
    return MarginalCurve(axis, coords, densities, field.mass_deficit)


def momentum_nodes(alpha, beta, p_min, p_max):
    """
    Zeros of the even tetrachotomous momentum marginal in [p_min, p_max]

    cos(p a) + cos(p b) = 2 cos(p (a + b)/2) cos(p (a - b)/2), so the
    zeros sit at odd multiples of pi/(a + b) and pi/|a - b|.

    >>> nodes = momentum_nodes(1.0, 1.0, 0.0, 4.0)
    >>> [round(p, 6) for p in nodes]
    [1.570796]
    """
    alpha, beta = abs(alpha), abs(beta)
    nodes = []
    for spacing in (alpha + beta, abs(alpha - beta)):
        if spacing == 0.0:
            continue
        step = math.pi / spacing
        first = int(math.ceil((p_min / step - 1.0) / 2.0))
        last = int(math.floor((p_max / step - 1.0) / 2.0))
        nodes.extend((2 * k + 1) * step for k in range(first, last + 1))
    return sorted(set(nodes))


def peak_positions(curve, rel_height=0.01):
    """
    Coordinates of the local maxima of a curve higher than rel_height
    times its maximum, maxima at the ends included
    """
    densities = curve.densities
    top = float(np.max(densities))
    if top <= 0.0:
        return []
    padded = np.concatenate(([-np.inf], densities, [-np.inf]))
    peaks, _ = find_peaks(padded, height=rel_height * top)
    return [float(curve.coordinates[p - 1]) for p in peaks]

# vim:et:ts=4:sw=4:et:sts=4:ai:set list listchars=tab\:»·,trail\:·:
