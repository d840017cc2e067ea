"""Why some members of D(2,2) over F_3 are only semistable.

The residual R = YX' - XY' - I has rank one on the variety and its trace is
-(n_e + n_o).  A vector killed by both X' and Y' is an eigenvector of R with
eigenvalue -1, and so is (dually) a covector killing the images of X and Y.
Either one spans a subrepresentation with theta = 0.  A rank-one R has only
one nonzero eigenvalue, its trace, so this can happen only when
n_e + n_o = 1 mod p, which for dimension vectors up to (2,2,2) is the single
case (2,2) over F_3.
"""

from collections import Counter

from qhilb.fields import GF
from qhilb.moduli import search
from qhilb.quiver import theta_stable_bruteforce

for p in (3, 5):
    F = GF(p)
    for n_e, n_o in [(1, 1), (2, 1), (1, 2), (2, 2)]:
        pts = search(n_e, n_o, F, budget=300, seed=3)
        verdicts = Counter(theta_stable_bruteforce(pt.to_rep0()).value for pt in pts)
        trace = -(n_e + n_o) % p
        print(f"F_{p} ({n_e},{n_o}): tr R = {trace}  {dict(verdicts)}")

# One semistable example, with its two kinds of witnesses
F = GF(3)
for pt in search(2, 2, F, budget=300, seed=3):
    if theta_stable_bruteforce(pt.to_rep0()).value != "stable":
        print("\nX =", pt.X.rows, " Y =", pt.Y.rows)
        print("X' =", pt.Xp.rows, " Y' =", pt.Yp.rows)
        print("common kernel of X', Y':", pt.Xp.vstack(pt.Yp).nullspace())
        print("covectors killing X and Y:", pt.X.hstack(pt.Y).left_nullspace().rows)
        break
