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
"""Write the photon-number distribution of a state"""

import sys

import numpy as np

import qts.log
from qts.export import write_csv
from qts.photon import qts_pnd, qts_pnd_closed_form
from qts.scripts.common import main as common_main
from qts.states import StateError, qts_parameters

OUTPUT = 'pnd.csv'


def _closed_form_deviation(spec, dist):
    """Largest difference to the closed form for two-doublet states"""
    try:
        alpha, beta, parity = qts_parameters(spec)
    except StateError:
        return None
    closed = qts_pnd_closed_form(alpha, beta, dist.nmax, parity)
    return float(np.max(np.abs(closed.probs - dist.probs)))


def run(config, manifest):
    nmax = config.photon_nmax()
    qts.log.info("Photon-number distribution of %s up to n = %d" %
                 (config.source, nmax))
    dist = qts_pnd(config.spec, nmax)
    rows = write_csv(manifest.path(OUTPUT), [dist.ns, dist.probs],
                     ['n', 'probability'])
    params = dict(rows=rows, nmax=nmax, total=dist.total(), mean=dist.mean(),
                  variance=dist.variance(), humps=dist.humps(),
                  parity=dist.parity)
    if dist.mean() > 0.0:
        params['mandel_q'] = dist.mandel_q()
    deviation = _closed_form_deviation(config.spec, dist)
    if deviation is not None:
        params['closed_form_deviation'] = deviation
    manifest.add(OUTPUT, 'Photon-number distribution', **params)
    return dist


def main(argv):
    return common_main(argv, 'pnd')

if __name__ == '__main__':
    sys.exit(main(sys.argv))

# vim:et:ts=4:sw=4:et:sts=4:ai:set list listchars=tab\:»·,trail\:·:
