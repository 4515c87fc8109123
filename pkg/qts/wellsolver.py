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
Ground states of multi-well Gaussian potentials

The single particle Hamiltonian -1/2 d^2/dx^2 + V(x) (hbar = m = 1) is
discretized with the three-point stencil on a uniform grid with the
wavefunction pinned to zero beyond both ends. The ground state comes from
inverse iteration with LAPACK's tridiagonal LU factorisation and is checked
against a Sturm count of the operator.
"""

import math

import numpy as np
from scipy.integrate import trapezoid
from scipy.linalg import eigh_tridiagonal
from scipy.linalg.lapack import dgttrf, dgttrs
from scipy.optimize import brentq

import qts.log
from qts.errors import QtsError
from qts.marginals import POSITION, marginal_from_field, peak_positions
from qts.states import SampledWavefunction, position_wavefunction
from qts.wigner import PhaseSpaceGrid, wigner_numeric

#: Default well depth
DEFAULT_DEPTH = 2.5
#: Local harmonic curvature V0 gamma / sigma**2, omega = 2
DEFAULT_CURVATURE = 4.0
#: Smallest centre spacing, two position widths of a coherent state
MIN_GAP = 1.0
#: Solver domain reaches this far beyond the outermost centre
DOMAIN_MARGIN = 6.0
#: Centres need this much room to the domain ends
MIN_CLEARANCE = 2.5
#: Barrier to zero-point energy ratio below which we warn
BARRIER_RATIO = 5.0
#: Shift iterations before switching to the Rayleigh quotient
FIXED_SHIFT_STEPS = 3
#: Largest boundary amplitude accepted by the Wigner transform of a solution
BOUNDARY_DECAY = 1e-5


class SolverError(QtsError):
    """Problems setting up or solving a well problem"""
    pass


class WellPotentialSpec(object):
    """
    Gaussian wells -V_k exp(-gamma_k (x - c_k)**2 / (2 sigma**2)) plus an
    optional constant V0 lifting the well bottoms to about zero

    Every well keeps the curvature V0 gamma / sigma**2 so a per-centre
    depth offset d_k gives V_k = V0 + d_k and gamma_k = gamma V0 / V_k. Offsets
    follow the centres in ascending order.

    >>> spec = WellPotentialSpec([-2, 2], 2.5, 1.6)
    >>> round(spec.curvature, 12)
    4.0
    >>> WellPotentialSpec([-2, 2], 2.5, 1.6, depth_offsets=[-3, 0])
    Traceback (most recent call last):
    ...
    qts.wellsolver.SolverError: Well at -2 has non-positive depth -0.5
    """
    def __init__(self, centers, depth=DEFAULT_DEPTH, gamma=None, sigma=1.0,
                 include_center_offset=True, depth_offsets=None):
        self.centers = np.asarray(sorted(float(c) for c in centers))
        if not len(self.centers):
            raise SolverError("Need at least one well")
        self.depth = float(depth)
        self.sigma = float(sigma)
        if self.depth <= 0.0 or self.sigma <= 0.0:
            raise SolverError("Depth and width must be positive, got %g and %g"
                              % (self.depth, self.sigma))
        if gamma is None:
            gamma = DEFAULT_CURVATURE * self.sigma ** 2 / self.depth
        self.gamma = float(gamma)
        if self.gamma <= 0.0:
            raise SolverError("Shape parameter must be positive, got %g" %
                              self.gamma)
        self.include_center_offset = include_center_offset
        if depth_offsets is None:
            depth_offsets = np.zeros(len(self.centers))
        self.depth_offsets = np.asarray(depth_offsets, dtype=float)
        if self.depth_offsets.shape != self.centers.shape:
            raise SolverError("Got %d depth offsets for %d wells" %
                              (len(self.depth_offsets), len(self.centers)))
        for center, depth in zip(self.centers, self.depths):
            if depth <= 0.0:
                raise SolverError("Well at %g has non-positive depth %g" %
                                  (center, depth))

    @property
    def depths(self):
        return self.depth + self.depth_offsets

    @property
    def gammas(self):
        return self.gamma * self.depth / self.depths

    @property
    def curvature(self):
        return self.depth * self.gamma / self.sigma ** 2

    @property
    def extent(self):
        return float(np.max(np.abs(self.centers)))

    def is_symmetric(self):
        """Whether centres and depths mirror about x = 0"""
        mirrored = dict(zip(np.round(self.centers, 12),
                            np.round(self.depth_offsets, 12)))
        return all(mirrored.get(round(-c, 12)) == d
                   for c, d in mirrored.items())

    def with_offsets(self, depth_offsets):
        return WellPotentialSpec(self.centers, self.depth, self.gamma,
                                 self.sigma, self.include_center_offset,
                                 depth_offsets)

    def __repr__(self):
        return ("<WellPotentialSpec centers=%s depths=%s gamma=%g sigma=%g>" %
                (list(self.centers), list(self.depths), self.gamma, self.sigma))


def potential(spec, x):
    """
    Evaluate the well potential

    >>> spec = WellPotentialSpec([-7, -4, 4, 7])
    >>> bool(potential(spec, 5.5) > potential(spec, 4.0))
    True
    >>> bool(abs(potential(spec, 3.0) - potential(spec, -3.0)) < 1e-14)
    True
    """
    x = np.asarray(x, dtype=float)
    values = np.zeros_like(x)
    for center, depth, gamma in zip(spec.centers, spec.depths, spec.gammas):
        values -= depth * np.exp(-gamma * (x - center) ** 2 /
                                 (2.0 * spec.sigma ** 2))
    if spec.include_center_offset:
        values += spec.depth
    return values


def harmonic_potential(omega, x):
    """V = omega**2 x**2 / 2"""
    x = np.asarray(x, dtype=float)
    return 0.5 * omega ** 2 * x ** 2


class TridiagonalOperator(object):
    """
    Real symmetric tridiagonal matrix

    @ivar diagonal: the N diagonal entries
    @ivar offdiag: the N-1 off-diagonal entries
    @ivar dx: grid step the operator was built for
    @ivar potential: potential samples, if known
    """
    def __init__(self, diagonal, offdiag, dx, potential=None):
        self.diagonal = np.asarray(diagonal, dtype=float)
        self.offdiag = np.asarray(offdiag, dtype=float)
        if len(self.offdiag) != len(self.diagonal) - 1:
            raise SolverError("Got %d off-diagonal entries for dimension %d"
                              % (len(self.offdiag), len(self.diagonal)))
        self.dx = float(dx)
        self.potential = (None if potential is None
                          else np.asarray(potential, dtype=float))

    def __len__(self):
        return len(self.diagonal)

    def matvec(self, v):
        out = self.diagonal * v
        out[:-1] += self.offdiag * v[1:]
        out[1:] += self.offdiag * v[:-1]
        return out

    def norm(self):
        """Row sum norm, an upper bound of the spectral norm"""
        sums = np.abs(self.diagonal)
        sums[:-1] += np.abs(self.offdiag)
        sums[1:] += np.abs(self.offdiag)
        return float(np.max(sums))

    def _lower_bound(self):
        return float(np.min(self.diagonal)) - 2.0 * float(np.max(np.abs(self.offdiag))) - 1.0

    def count_below(self, value):
        """Number of eigenvalues below value, by Sturm sequence bisection"""
        lower = self._lower_bound()
        if value <= lower:
            return 0
        found = eigh_tridiagonal(self.diagonal, self.offdiag,
                                 eigvals_only=True, select='v',
                                 select_range=(lower, value))
        return len(found)

    def lowest_eigenvalue(self):
        return float(eigh_tridiagonal(self.diagonal, self.offdiag,
                                      eigvals_only=True, select='i',
                                      select_range=(0, 0))[0])

    def min_potential(self):
        if self.potential is not None:
            return float(np.min(self.potential))
        # diagonal is 1/dx**2 + V and offdiag -1/(2 dx**2)
        return float(np.min(self.diagonal + 2.0 * self.offdiag[0]))

    def is_mirror_symmetric(self):
        scale = max(1.0, float(np.max(np.abs(self.diagonal))))
        return (np.allclose(self.diagonal, self.diagonal[::-1],
                            rtol=0.0, atol=1e-12 * scale) and
                np.allclose(self.offdiag, self.offdiag[::-1],
                            rtol=0.0, atol=1e-12 * scale))

    def rayleigh_quotient(self, v):
        return float(np.dot(v, self.matvec(v)) / np.dot(v, v))


def build_hamiltonian(vs, dx):
    """
    Three-point finite difference Hamiltonian for potential samples vs

    >>> H = build_hamiltonian([0.0, 0.0, 0.0], 1.0)
    >>> H.diagonal, H.offdiag
    (array([1., 1., 1.]), array([-0.5, -0.5]))
    """
    vs = np.asarray(vs, dtype=float)
    if len(vs) < 3:
        raise SolverError("Need at least three grid points, got %d" % len(vs))
    if not dx > 0.0:
        raise SolverError("Grid step must be positive, got %g" % dx)
    kinetic = 1.0 / dx ** 2
    return TridiagonalOperator(kinetic + vs,
                               np.full(len(vs) - 1, -0.5 * kinetic),
                               dx, potential=vs)


class SolverConfig(object):
    """
    Grid and inverse iteration settings

    >>> cfg = SolverConfig((-6, 6), points=5)
    >>> cfg.xs
    array([-6., -3.,  0.,  3.,  6.])
    >>> SolverConfig((-6, 6), points=4)
    Traceback (most recent call last):
    ...
    qts.wellsolver.SolverError: Number of grid points must be odd and at least 3, got 4
    """
    def __init__(self, domain, points=4001, shift=None, tol=1e-12,
                 max_iter=500, max_retries=3):
        self.x_min, self.x_max = float(domain[0]), float(domain[1])
        self.points = int(points)
        if not self.x_min < self.x_max:
            raise SolverError("Empty solver domain [%g, %g]" %
                              (self.x_min, self.x_max))
        if self.points < 3 or self.points % 2 == 0:
            raise SolverError("Number of grid points must be odd and at "
                              "least 3, got %d" % self.points)
        if not tol > 0.0:
            raise SolverError("Tolerance must be positive, got %g" % tol)
        if max_iter < 1:
            raise SolverError("Need at least one iteration, got %d" % max_iter)
        self.shift = shift
        self.tol = float(tol)
        self.max_iter = int(max_iter)
        self.max_retries = int(max_retries)

    @classmethod
    def for_centers(klass, centers, **kwargs):
        """Domain reaching L{DOMAIN_MARGIN} beyond the outermost centre"""
        extent = float(np.max(np.abs(centers))) + DOMAIN_MARGIN
        return klass((-extent, extent), **kwargs)

    @classmethod
    def for_spec(klass, spec, **kwargs):
        return klass.for_centers(spec.amplitudes, **kwargs)

    @property
    def domain(self):
        return (self.x_min, self.x_max)

    @property
    def xs(self):
        xs = np.linspace(self.x_min, self.x_max, self.points)
        if self.x_min == -self.x_max:
            # exact mirror symmetry about the middle node
            xs = 0.5 * (xs - xs[::-1])
        return xs

    @property
    def dx(self):
        return (self.x_max - self.x_min) / (self.points - 1)

    def check_covers(self, centers):
        for center in centers:
            if (center - MIN_CLEARANCE < self.x_min or
                    center + MIN_CLEARANCE > self.x_max):
                raise SolverError("Domain [%g, %g] too small for the well at %g"
                                  % (self.x_min, self.x_max, center))

    def __repr__(self):
        return ("<SolverConfig domain=[%g, %g] points=%d tol=%g>" %
                (self.x_min, self.x_max, self.points, self.tol))


class DiscretizedWavefunction(SampledWavefunction):
    """
    A normalized ground state on the solver grid

    @ivar energy: its eigenvalue
    @ivar iterations: inverse iteration steps used
    @ivar residual: final |Hv - Ev| for unit v
    """
    def __init__(self, xs, values, energy, iterations=0, residual=0.0):
        SampledWavefunction.__init__(self, xs, values)
        self.energy = float(energy)
        self.iterations = iterations
        self.residual = residual

    def asymmetry(self):
        return float(np.max(np.abs(self.values - self.values[::-1])))


def _factor(H, shift):
    dl, d, du, du2, ipiv, info = dgttrf(H.offdiag.copy(), H.diagonal - shift,
                                        H.offdiag.copy())
    if info < 0:
        raise SolverError("Illegal argument %d to the LU factorisation" % -info)
    return (dl, d, du, du2, ipiv), info


def _inverse_iteration(H, cfg, shift, start, symmetric):
    """
    Iterate v <- (H - shift)^-1 v, switching the shift to the Rayleigh
    quotient after L{FIXED_SHIFT_STEPS} steps

    @return: (vector, energy, iterations, residual, converged)
    """
    threshold = cfg.tol * max(1.0, H.norm())
    v = start / np.linalg.norm(start)
    energy = H.rayleigh_quotient(v)
    residual = float('inf')
    for step in range(1, cfg.max_iter + 1):
        if step > FIXED_SHIFT_STEPS:
            shift = energy
        factors, info = _factor(H, shift)
        if info > 0:
            # shift sits on an eigenvalue
            shift -= 1e-6 * max(1.0, abs(shift))
            qts.log.debug("Singular factorisation, shift moved to %.15g" % shift)
            factors, info = _factor(H, shift)
            if info > 0:
                raise SolverError("Singular factorisation at shift %g" % shift)
        w, info = dgttrs(*(factors + (v,)))
        if info != 0 or not np.all(np.isfinite(w)):
            raise SolverError("Tridiagonal solve failed at shift %g" % shift)
        if symmetric:
            w = 0.5 * (w + w[::-1])
        v = w / np.linalg.norm(w)
        energy = H.rayleigh_quotient(v)
        residual = float(np.linalg.norm(H.matvec(v) - energy * v))
        if residual <= threshold:
            return v, energy, step, residual, True
    return v, energy, cfg.max_iter, residual, False


def ground_state(H, cfg):
    """
    Lowest eigenvector of H by shifted inverse iteration

    The start shift is min V - 1 unless cfg.shift is set. A result that
    is not the lowest state by Sturm count gets a new shift just below
    the lowest eigenvalue, at most cfg.max_retries times.

    @param H: the discretized Hamiltonian
    @type H: L{TridiagonalOperator}
    @param cfg: grid and iteration settings
    @type cfg: L{SolverConfig}
    @rtype: L{DiscretizedWavefunction}
    """
    if len(H) != cfg.points:
        raise SolverError("Operator of dimension %d does not match %d grid "
                          "points" % (len(H), cfg.points))
    xs = cfg.xs
    symmetric = H.is_mirror_symmetric()
    shift = cfg.shift if cfg.shift is not None else H.min_potential() - 1.0
    start = np.ones(len(H))
    total = 0
    for attempt in range(cfg.max_retries + 1):
        v, energy, steps, residual, converged = _inverse_iteration(
            H, cfg, shift, start, symmetric)
        total += steps
        if not converged:
            raise SolverError("Inverse iteration did not converge in %d steps, "
                              "last residual %.3g" % (cfg.max_iter, residual))
        margin = max(1e-9, 10.0 * residual)
        below = H.count_below(energy - margin)
        if below == 0:
            break
        lowest = H.lowest_eigenvalue()
        qts.log.debug("Inverse iteration locked on state %d at %.12g, "
                      "re-shifting below %.12g" % (below, energy, lowest))
        shift = lowest - 1e-3 * max(1.0, abs(lowest))
    else:
        raise SolverError("No ground state after %d shifts, last energy %.12g"
                          % (cfg.max_retries, energy))

    if symmetric:
        v = 0.5 * (v + v[::-1])
    if np.sum(v) < 0.0:
        v = -v
    values = v / math.sqrt(cfg.dx) / np.linalg.norm(v)
    qts.log.debug("Ground state energy %.12g after %d steps, residual %.3g" %
                  (energy, total, residual))
    return DiscretizedWavefunction(xs, values, energy, total, residual)


def solve(spec, cfg):
    """Ground state of the well potential spec on the grid of cfg"""
    cfg.check_covers(spec.centers)
    xs = cfg.xs
    return ground_state(build_hamiltonian(potential(spec, xs), cfg.dx), cfg)


def _target_samples(psi, target):
    return position_wavefunction(target, psi.xs)


def fidelity(psi, target):
    """
    |<target|psi>|**2 with both states normalized on the grid of psi

    @param psi: the sampled state
    @type psi: L{qts.states.SampledWavefunction}
    @param target: the reference state
    @type target: L{qts.states.SuperpositionSpec}
    @rtype: C{float}
    """
    ref = _target_samples(psi, target)
    overlap = trapezoid(psi.values * ref, psi.xs)
    norms = trapezoid(psi.values ** 2, psi.xs) * trapezoid(ref ** 2, psi.xs)
    return float(min(1.0, overlap ** 2 / norms))


def inner_weight(psi, radius):
    """Probability of |x| < radius"""
    density = np.where(np.abs(psi.xs) < radius, psi.values ** 2, 0.0)
    return float(trapezoid(density, psi.xs) / psi.norm())


def barrier_ratio(spec, samples=20001):
    """
    Lowest barrier between neighbouring wells, measured from the deepest
    well bottom, in units of the local zero-point energy sqrt(curvature)/2
    """
    centers = spec.centers
    if len(centers) < 2:
        return float('inf')
    bottom = float(np.min(potential(spec, centers)))
    barriers = []
    for left, right in zip(centers[:-1], centers[1:]):
        xs = np.linspace(left, right, samples // (len(centers) - 1))
        barriers.append(float(np.max(potential(spec, xs))))
    return (min(barriers) - bottom) / (0.5 * math.sqrt(spec.curvature))


def _check_gaps(centers):
    gaps = np.diff(np.sort(centers))
    if len(gaps) and np.min(gaps) < MIN_GAP:
        raise SolverError("Amplitudes %s too close, wells merge (gap %g < %g)"
                          % (list(np.sort(centers)), np.min(gaps), MIN_GAP))


def calibrate_wells(target, depth=DEFAULT_DEPTH, sigma=1.0,
                    curvature=DEFAULT_CURVATURE, balance=True, config=None):
    """
    Gaussian wells centred on the amplitudes of target

    The wells share the local curvature so each one holds a ground state
    of coherent-state width. With balance set and two amplitude
    magnitudes, the outer wells get a depth offset so the ground state
    puts the target's weight into the inner ones.

    @param target: the state to reproduce
    @type target: L{qts.states.SuperpositionSpec}
    @param config: solver settings used while balancing
    @type config: L{SolverConfig}
    @rtype: L{WellPotentialSpec}
    """
    if not target.is_symmetric_on_line():
        raise SolverError("Target %r is not symmetric about the origin" % target)
    centers = np.unique(target.amplitudes)
    _check_gaps(centers)
    gamma = curvature * sigma ** 2 / depth
    spec = WellPotentialSpec(centers, depth, gamma, sigma)

    magnitudes = np.unique(np.abs(centers))
    if balance and len(magnitudes) > 2:
        qts.log.warn("Not balancing %d well pairs, only two are supported" %
                     len(magnitudes))
    elif balance and len(magnitudes) == 2:
        spec = _balance(spec, target, magnitudes, config)

    ratio = barrier_ratio(spec)
    if ratio < BARRIER_RATIO:
        qts.log.warn("Barrier only %.3g times the zero-point energy" % ratio)
    return spec


def _balance(spec, target, magnitudes, config):
    cfg = config or SolverConfig.for_centers(spec.centers)
    radius = 0.5 * (magnitudes[0] + magnitudes[1])
    outer = np.abs(spec.centers) == magnitudes[1]
    ref = SampledWavefunction(cfg.xs, position_wavefunction(target, cfg.xs))
    wanted = inner_weight(ref, radius)

    def mismatch(offset):
        psi = solve(spec.with_offsets(np.where(outer, offset, 0.0)), cfg)
        return inner_weight(psi, radius) - wanted

    low, high = -0.5 * spec.depth, 3.0 * spec.depth
    f_low, f_high = mismatch(low), mismatch(high)
    if f_low * f_high > 0.0:
        qts.log.warn("Cannot balance the wells, inner weight %.4g wanted, "
                     "offsets in [%g, %g] give %.4g to %.4g" %
                     (wanted, low, high, f_low + wanted, f_high + wanted))
        return spec
    offset = brentq(mismatch, low, high, xtol=1e-6)
    qts.log.debug("Outer well depth offset %.8g for inner weight %.6g" %
                  (offset, wanted))
    return spec.with_offsets(np.where(outer, offset, 0.0))


def field_stride(cfg, step=0.065):
    """Divisor of the grid intervals giving a field step closest to step"""
    count = cfg.points - 1
    wanted = max(1.0, step / cfg.dx)
    divisors = [d for d in range(1, count + 1) if count % d == 0]
    return min(divisors, key=lambda d: (abs(d - wanted), d))


def ground_state_wigner(psi, stride, p_max=8.0, num_p=161):
    """
    Wigner function of a solver ground state on every stride-th grid node

    The Dirichlet ends only pin the state to about 1e-6 for shallow wells,
    so the boundary check is relaxed to L{BOUNDARY_DECAY}.
    """
    grid = PhaseSpaceGrid.on_nodes(psi.xs, stride, -p_max, p_max, num_p)
    return wigner_numeric(psi, grid, decay=BOUNDARY_DECAY)


def wigner_peaks(field, rel_height=0.01):
    """Peaks of the position marginal of a field"""
    return peak_positions(marginal_from_field(field, POSITION), rel_height)

# vim:et:ts=4:sw=4:et:sts=4:ai:set list listchars=tab\:»·,trail\:·:
