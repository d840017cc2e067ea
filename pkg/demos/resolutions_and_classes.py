"""From a Castelnuovo polynomial to its Hilbert series, Betti tables and K_0 class.

Walks through every weight with both entries at most three and prints the
same data the stored table holds, plus the normalized class in K_0.
"""

from qhilb import ktheory
from qhilb.appendix import regenerate
from qhilb.betti import format_resolution
from qhilb.castelnuovo import validate

for row in regenerate():
    s = validate(row.castelnuovo)
    print(f"{tuple(row.invariants)}  s = {s or '0'}")
    print(f"    h = {', '.join(map(str, row.hilbert))}, ...")
    for table in row.resolutions:
        print(f"    0 -> {format_resolution(table)} -> I -> 0")
    x = ktheory.from_char_poly(s.char_poly())
    # normalized classes satisfy r = 1, a = -2b; the invariants are (b - c, -c)
    print(f"    [I] = {x.as_tuple()}, chi(I, I) = {ktheory.self_chi(x)}, graded Ext^1 = {row.ext1}")

# A twist changes the class but not the invariants once normalized again.
x = ktheory.class_of_invariants(3, 2)
for d in (-3, 1, 4):
    shift, y = ktheory.normalize(ktheory.shift(x, d))
    print(f"twist by {d:+d}: normalizing shift {shift:+d} gives back {y.as_tuple()}")
