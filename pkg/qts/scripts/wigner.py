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
"""Sample the Wigner function of a state on a phase-space grid"""

import sys

import numpy as np

import qts.log
from qts.export import write_csv
from qts.scripts.common import main as common_main
from qts.wigner import wigner_closed_form

OUTPUT = 'wigner.csv'


def run(config, manifest):
    grid = config.grid()
    qts.log.info("Wigner function of %s on %r" % (config.source, grid))
    field = wigner_closed_form(config.spec, grid)
    qs, ps = np.meshgrid(grid.qs, grid.ps, indexing='ij')
    rows = write_csv(manifest.path(OUTPUT),
                     [qs.ravel(), ps.ravel(), field.values.ravel()],
                     ['q', 'p', 'w'])
    manifest.add(OUTPUT, 'Wigner function samples, q major',
                 rows=rows, qrange=grid.qrange(), prange=grid.prange(),
                 integral=field.integrate(),
                 negative_volume=field.negativity_volume(),
                 minimum=float(np.min(field.values)),
                 maximum=float(np.max(field.values)),
                 mass_flagged=field.mass_deficit is not None)
    return field


def main(argv):
    return common_main(argv, 'wigner')

if __name__ == '__main__':
    sys.exit(main(sys.argv))

# vim:et:ts=4:sw=4:et:sts=4:ai:set list listchars=tab\:»·,trail\:·:
