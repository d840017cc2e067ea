"""Random points on the matrix varieties and their tangent spaces.

For each weight, a handful of points over F_101 are found by fixing X, Y and
the left factor of the rank-one residual, which leaves a linear system for
X', Y'.  The Zariski tangent space at each point should have dimension
2(n_e - (n_e - n_o)^2) + n_e^2 + n_o^2 - 1, i.e. the moduli space is smooth of
the expected dimension.
"""

from qhilb.fields import GF
from qhilb.moduli import count_exhaustive, expected_tangent_dim, search, tangent_dim
from qhilb.quiver import ind, membership_C_Hc
from qhilb.ncalgebra import AlgebraSpec

F = GF(101)
HC = AlgebraSpec.hc()

for n_e, n_o in [(1, 0), (1, 1), (2, 1), (1, 2), (2, 2), (3, 2), (2, 3), (3, 3), (4, 2)]:
    pts = search(n_e, n_o, F, budget=8, seed=n_e + 10 * n_o)
    dims = sorted({tangent_dim(p) for p in pts})
    induced = all(membership_C_Hc(ind(p.to_rep0(), HC)) for p in pts)
    print(
        f"({n_e},{n_o}): {len(pts)} points, tangent {dims}, "
        f"expected {expected_tangent_dim(n_e, n_o)}, induced reps in C: {induced}"
    )

# Exhaustive counts for the smallest case: p(p^2 - 1) = |GL_2(F_p)| / (p - 1) * p
for p in (2, 3, 5, 7):
    print(f"#D(1,1)(F_{p}) = {count_exhaustive(1, 1, p)}")
