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
"""Run every analysis of a state: Wigner function, marginals, photon numbers, envelope and well solve"""

import sys

from qts.scripts.common import main as common_main
import qts.scripts.envelope
import qts.scripts.marginals
import qts.scripts.pnd
import qts.scripts.well
import qts.scripts.wigner
from qts.states import qts_parameters


def run(config, manifest):
    # the envelope needs a two-doublet state, fail before writing anything
    qts_parameters(config.spec)
    qts.scripts.wigner.run(config, manifest)
    qts.scripts.marginals.run(config, manifest)
    qts.scripts.pnd.run(config, manifest)
    qts.scripts.envelope.run(config, manifest)
    qts.scripts.well.run(config, manifest, curves=False)


def main(argv):
    return common_main(argv, 'all')

if __name__ == '__main__':
    sys.exit(main(sys.argv))

# vim:et:ts=4:sw=4:et:sts=4:ai:set list listchars=tab\:»·,trail\:·:
