"""Castelnuovo polynomials of a weight, drawn as column charts.

    python3 demos/castelnuovo_tour.py 4 4
"""

import sys

from qhilb.castelnuovo import count, diagram, enumerate_polys, n_membership, to_partition
from qhilb.series import gk_dim_and_multiplicity

n_e, n_o = (int(a) for a in sys.argv[1:3]) if len(sys.argv) >= 3 else (4, 4)

member = n_membership(n_e, n_o)
if member is None:
    sys.exit(f"({n_e}, {n_o}) is not an admissible weight: n_e - (n_e - n_o)^2 < 0")

print(f"weight ({n_e}, {n_o}): {count(n_e, n_o)} polynomials")
print(f"distance l={member.l} above the boundary point k={member.k}, case {member.case}\n")

for s in enumerate_polys(n_e, n_o):
    # every polynomial gives a rank-one ideal of the same GK-dimension
    q = s.char_poly()
    gk, e = gk_dim_and_multiplicity(q)
    print(f"s = {s}")
    print(f"  partition {to_partition(s)}, q = {q}, GK {gk}, e = {e}")
    # even columns are '#', so the chart's '#' count is n_e
    for line in diagram(s).splitlines():
        print("    " + line)
    print()
