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
"""Write the position and momentum marginal distributions of a state"""

import sys

import qts.log
from qts.export import write_csv
from qts.marginals import momentum_marginal, momentum_nodes, position_marginal
from qts.scripts.common import main as common_main
from qts.states import StateError, qts_parameters, EVEN

POSITION_OUTPUT = 'position.csv'
MOMENTUM_OUTPUT = 'momentum.csv'


def _nodes(spec, grid):
    """Exact momentum zeros for even two-doublet states, None otherwise"""
    try:
        alpha, beta, parity = qts_parameters(spec)
    except StateError:
        return None
    if parity != EVEN:
        return None
    return momentum_nodes(alpha, beta, grid.p_min, grid.p_max)


def run(config, manifest):
    grid = config.grid()
    spec = config.spec
    qts.log.info("Marginals of %s" % config.source)

    position = position_marginal(spec, grid.qs)
    rows = write_csv(manifest.path(POSITION_OUTPUT),
                     [position.coordinates, position.densities],
                     ['coordinate', 'density'])
    manifest.add(POSITION_OUTPUT, 'Position marginal |psi(q)|^2',
                 rows=rows, qrange=grid.qrange(),
                 integral=position.integrate(), peaks=position.peaks())

    momentum = momentum_marginal(spec, grid.ps)
    rows = write_csv(manifest.path(MOMENTUM_OUTPUT),
                     [momentum.coordinates, momentum.densities],
                     ['coordinate', 'density'])
    params = dict(rows=rows, prange=grid.prange(),
                  integral=momentum.integrate(), peaks=momentum.peaks())
    nodes = _nodes(spec, grid)
    if nodes is not None:
        params['nodes'] = nodes
    manifest.add(MOMENTUM_OUTPUT, 'Momentum marginal', **params)
    return position, momentum


def main(argv):
    return common_main(argv, 'marginals')

if __name__ == '__main__':
    sys.exit(main(sys.argv))

# vim:et:ts=4:sw=4:et:sts=4:ai:set list listchars=tab\:»·,trail\:·:
