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
"""Phase-space analysis of coherent-state superpositions on the line

qts builds superpositions of real-amplitude coherent states (cat states,
tetrachotomous states, comb states), evaluates their Wigner functions,
marginal and photon-number distributions and reproduces them as ground
states of multi-well potentials.
"""

# vim:et:ts=4:sw=4:et:sts=4:ai:set list listchars=tab\:»·,trail\:·:
