"""Orbit dimensions of the functionals f_sigma, compared with lengths."""

import numpy as np

from kkpoly.coadjoint import orbit_dim, realize, tangent_matrix
from kkpoly.root_system import build
from kkpoly.weyl import enumerate_involutions, length, parse_perm

P = realize("C", 2)
for r, E in zip(P.system.positive_roots, P.root_vectors):
    print(r.name)
    print(E)

sigma = parse_perm(build("C", 2), "-1,-2")
M = tangent_matrix(sigma)
print("tangent matrix, rows over b, columns over n")
print(M)
print("rank", orbit_dim(sigma), "length", length(sigma), "float rank", np.linalg.matrix_rank(M))

for kind, n in [("A", 3), ("C", 3)]:
    rows = [(str(s), length(s), orbit_dim(s)) for s in enumerate_involutions(build(kind, n))]
    print(kind, n, all(a == b for _, a, b in rows), rows[:4], "...")
