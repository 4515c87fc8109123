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
"""Write the continuous photon-number envelope of a two-doublet state"""

import sys

import numpy as np

import qts.log
from qts.export import write_csv
from qts.photon import envelope, envelope_derivative, envelope_extrema
from qts.scripts.common import main as common_main
from qts.states import qts_parameters

OUTPUT = 'envelope.csv'
#: photon number step of the envelope samples
STEP = 0.25


def _format_extrema(extrema):
    return ["%s@%.6f" % (kind[:3], n) for n, kind in extrema]


def run(config, manifest):
    alpha, beta, parity = qts_parameters(config.spec)
    nmax = config.photon_nmax()
    qts.log.info("Envelope of %s, alpha=%g beta=%g %s, up to n = %d" %
                 (config.source, alpha, beta, parity, nmax))
    ns = np.arange(0, 4 * nmax + 1) * STEP
    columns = [[], [], [], []]
    params = dict(nmax=nmax, step=STEP, alpha=alpha, beta=beta, parity=parity)
    for interference in (False, True):
        columns[0].append(ns)
        columns[1].append(envelope(alpha, beta, ns, parity, interference))
        columns[2].append(envelope_derivative(alpha, beta, ns, interference,
                                              parity))
        columns[3].append(np.full(len(ns), float(interference)))
        extrema = envelope_extrema(alpha, beta, interference, parity, nmax)
        key = 'extrema_with_interference' if interference else 'extrema'
        params[key] = _format_extrema(extrema)
    rows = write_csv(manifest.path(OUTPUT),
                     [np.concatenate(col) for col in columns],
                     ['n', 'value', 'derivative', 'with_interference'])
    params['rows'] = rows
    manifest.add(OUTPUT, 'Envelope and its derivative in continuous n, '
                 'without and with the doublet interference', **params)
    return params


def main(argv):
    return common_main(argv, 'envelope')

if __name__ == '__main__':
    sys.exit(main(sys.argv))

# vim:et:ts=4:sw=4:et:sts=4:ai:set list listchars=tab\:»·,trail\:·:
