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
"""Solve for the ground state of Gaussian wells centred on a state's amplitudes"""

import sys

import qts.log
from qts.export import write_csv, write_report
from qts.scripts.common import main as common_main
from qts.wellsolver import (barrier_ratio, calibrate_wells, fidelity,
                            field_stride, ground_state_wigner, inner_weight,
                            potential, solve, wigner_peaks)

POTENTIAL_OUTPUT = 'potential.csv'
WAVEFUNCTION_OUTPUT = 'wavefunction.csv'
REPORT_OUTPUT = 'well_report.txt'


def solve_wells(config):
    """
    Calibrate the wells for the configured state and solve them

    @return: the wells, the solver settings and the ground state
    @rtype: C{tuple}
    """
    cfg = config.solver_config()
    wells = calibrate_wells(config.spec, depth=config.depth,
                            balance=config.balance, config=cfg)
    qts.log.info("Solving %r on %r" % (wells, cfg))
    return wells, cfg, solve(wells, cfg)


def report_items(config, wells, cfg, psi):
    """Entries of the well report, the field peaks included"""
    stride = field_stride(cfg)
    field = ground_state_wigner(psi, stride)
    peaks = wigner_peaks(field)
    magnitudes = sorted(set(abs(c) for c in wells.centers))
    items = [('state', config.source),
             ('centers', list(wells.centers)),
             ('depths', list(wells.depths)),
             ('gamma', wells.gamma),
             ('sigma', wells.sigma),
             ('curvature', wells.curvature),
             ('barrier_ratio', barrier_ratio(wells)),
             ('domain', list(cfg.domain)),
             ('points', cfg.points),
             ('energy', psi.energy),
             ('iterations', psi.iterations),
             ('residual', psi.residual),
             ('asymmetry', psi.asymmetry()),
             ('boundary_amplitude', psi.boundary()),
             ('fidelity', fidelity(psi, config.spec))]
    if len(magnitudes) == 2:
        radius = 0.5 * (magnitudes[0] + magnitudes[1])
        items.append(('inner_weight', inner_weight(psi, radius)))
    items += [('field_step', field.grid.dq),
              ('field_integral', field.integrate()),
              ('peaks', peaks)]
    return items


def run(config, manifest, curves=True):
    wells, cfg, psi = solve_wells(config)
    if curves:
        rows = write_csv(manifest.path(POTENTIAL_OUTPUT),
                         [psi.xs, potential(wells, psi.xs)], ['x', 'V'])
        manifest.add(POTENTIAL_OUTPUT, 'Calibrated well potential', rows=rows)
        rows = write_csv(manifest.path(WAVEFUNCTION_OUTPUT),
                         [psi.xs, psi.values], ['x', 'psi'])
        manifest.add(WAVEFUNCTION_OUTPUT, 'Ground state wavefunction',
                     rows=rows, energy=psi.energy)
    items = report_items(config, wells, cfg, psi)
    write_report(manifest.path(REPORT_OUTPUT), items)
    manifest.add(REPORT_OUTPUT, 'Ground state solver report', **dict(
        (key, value) for key, value in items
        if key in ('energy', 'fidelity', 'residual', 'iterations')))
    return dict(items)


def main(argv):
    return common_main(argv, 'well')

if __name__ == '__main__':
    sys.exit(main(sys.argv))

# vim:et:ts=4:sw=4:et:sts=4:ai:set list listchars=tab\:»·,trail\:·:
