import pytest

from kkpoly.root_system import Kind, build, column_set, reflect, row_col, row_set


@pytest.mark.parametrize("kind,n", [("A", n) for n in range(1, 6)]
                         + [(k, n) for k in "BC" for n in range(2, 6)])
def test_positive_root_count(kind, n):
    rs = build(kind, n)
    expected = n * (n + 1) // 2 if kind == "A" else n * n
    assert len(rs.positive_roots) == expected
    assert all(min(r.alpha) >= 0 for r in rs.positive_roots)
    for i, s in enumerate(rs.simple_roots):
        assert s.alpha == tuple(int(j == i) for j in range(n))


@pytest.mark.parametrize("kind,n", [("A", 0), ("B", 1), ("C", 1), ("A", -2)])
def test_rank_validation(kind, n):
    with pytest.raises(ValueError):
        build(kind, n)


def test_bad_kind():
    with pytest.raises(ValueError):
        build("D", 4)


def test_c2_and_a2_and_b2():
    assert {r.name for r in build("C", 2).positive_roots} == {"e1-e2", "e1+e2", "2e1", "2e2"}
    assert [r.alpha_name for r in build("A", 2).positive_roots] == ["a1", "a1+a2", "a2"]
    b2 = build("B", 2)
    assert b2.simple_roots[1].name == "e2"
    assert build("C", 3).simple_roots[2].name == "2e3"


@pytest.mark.parametrize("kind,n", [("A", 3), ("B", 4), ("C", 4)])
def test_coordinate_round_trip(kind, n):
    rs = build(kind, n)
    for r in rs.positive_roots:
        assert rs.eps_to_alpha(r.eps) == r.alpha
        assert rs.alpha_to_eps(r.alpha) == r.eps
        assert rs.root(r.name) is r


def test_row_col():
    c6 = build("C", 6)
    assert row_col(c6, c6.root("e1+e6")) == (-6, 1)
    c3 = build("C", 3)
    assert row_col(c3, c3.root("2e3")) == (-3, 3)
    b3 = build("B", 3)
    assert row_col(b3, b3.root("e2")) == (0, 2)
    assert row_col(b3, b3.root("e1-e3")) == (3, 1)


def test_columns_partition_positive_roots():
    for kind in "BC":
        rs = build(kind, 4)
        cols = [set(column_set(rs, k)) for k in range(1, 5)]
        assert sum(len(c) for c in cols) == len(rs.positive_roots)
        assert set().union(*cols) == set(rs.positive_roots)
        assert len(cols[0]) == 2 * 4 - 1
        assert all(row_col(rs, r)[0] == -2 for r in row_set(rs, -2))


def test_reflect():
    c2 = build("C", 2)
    got = reflect(c2, c2.root("2e1"), c2.root("e1-e2"))
    assert (got.sign, got.root.name) == (-1, "e1+e2")
    a2 = build("A", 2)
    got = reflect(a2, a2.simple_roots[0], a2.simple_roots[1])
    assert (got.sign, got.root.alpha_name) == (1, "a1+a2")
    b2 = build("B", 2)
    got = reflect(b2, b2.root("e2"), b2.root("e2"))
    assert (got.sign, got.root.name) == (-1, "e2")


def test_kind_enum_accepts_strings():
    assert build(Kind.C, 2) is build("C", 2)
