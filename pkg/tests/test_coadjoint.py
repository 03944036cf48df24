import numpy as np
import pytest

from kkpoly.coadjoint import exact_rank, f_of, orbit_dim, realize, tangent_matrix
from kkpoly.root_system import build
from kkpoly.weyl import enumerate_involutions, from_reflection, identity, length, parse_perm


def test_realize_sizes():
    a2 = realize("A", 2)
    assert len(a2.basis_n) == 3 and len(a2.basis_b) == 5
    assert all(M.shape == (3, 3) and np.allclose(M, np.triu(M, 1)) for M in a2.basis_n)
    assert len(realize("C", 2).basis_n) == 4
    assert len(realize("C", 3).basis_b) == 9 + 3
    with pytest.raises(ValueError):
        realize("B", 2)


def test_bracket_of_root_vectors():
    P = realize("A", 2)
    rs = P.system
    E = {r.name: M for r, M in zip(rs.positive_roots, P.root_vectors)}
    assert np.array_equal(E["e1-e2"] @ E["e2-e3"] - E["e2-e3"] @ E["e1-e2"], E["e1-e3"])


@pytest.mark.parametrize("n", [2, 3])
def test_symplectic_root_vectors(n):
    P = realize("C", n)
    m = 2 * n
    J = np.zeros((m, m), dtype=np.int64)
    for k in range(n):
        J[k, m - 1 - k] = 1
        J[m - 1 - k, k] = -1
    for M in P.basis_b:
        assert np.array_equal(M.T @ J + J @ M, np.zeros_like(M))


def test_functional():
    a2 = build("A", 2)
    assert not f_of(identity(a2)).any()
    s = from_reflection(a2, a2.root("e1-e2"))
    assert f_of(s).tolist() == [1, 0, 0]
    c6 = build("C", 6)
    sigma = parse_perm(c6, "-6,-2,5,4,3,-1")
    hot = {r.name for r, x in zip(c6.positive_roots, f_of(sigma)) if x}
    assert hot == {"e1+e6", "2e2", "e3-e5"}


def test_orbit_dim_examples():
    a2 = build("A", 2)
    s = from_reflection(a2, a2.root("e1-e2"))
    assert tangent_matrix(s).shape == (5, 3)
    assert orbit_dim(s) == 1 == length(s)
    assert orbit_dim(identity(a2)) == 0
    c2 = build("C", 2)
    w = parse_perm(c2, "-1,-2")
    assert orbit_dim(w) == 4 == length(w)


@pytest.mark.parametrize("kind,n", [("A", 1), ("A", 2), ("A", 3), ("C", 2), ("C", 3)])
def test_orbit_dim_equals_length(kind, n):
    for s in enumerate_involutions(build(kind, n)):
        M = tangent_matrix(s)
        r = exact_rank(M)
        assert r == length(s)
        assert exact_rank(tangent_matrix(s, sign=-1)) == r
        assert np.array_equal(tangent_matrix(s, projected=True), M)


def test_exact_rank_matches_numpy():
    rng = np.random.default_rng(7)
    for _ in range(30):
        M = rng.integers(-2, 3, size=(6, 5))
        M[:, 4] = M[:, 0] + M[:, 1]
        assert exact_rank(M) == np.linalg.matrix_rank(M)
    assert exact_rank(np.zeros((3, 3), dtype=int)) == 0
