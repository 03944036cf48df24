import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from kkpoly.root_system import build
from kkpoly.weyl import (
    act_on_root, bruhat_leq, bruhat_leq_subword, compose, enumerate_group,
    enumerate_involutions, from_reflection, from_word, identity, inverse, inversion_set,
    is_descent, label_order, length, longest, parabolic_decompose, parse_perm, rank_matrix,
    reduced_word, rook_matrix, simple_reflection, strict_lower, support,
)

EXAMPLE_RANK_MATRIX = [
    [1, 2, 3, 4, 5, 6, 7, 8],
    [1, 2, 3, 4, 4, 5, 6, 7],
    [1, 2, 3, 4, 4, 5, 5, 6],
    [1, 2, 3, 4, 4, 5, 5, 5],
    [1, 2, 2, 3, 3, 4, 4, 4],
    [1, 2, 2, 3, 3, 3, 3, 3],
    [0, 1, 1, 2, 2, 2, 2, 2],
    [0, 0, 0, 1, 1, 1, 1, 1],
]

SYSTEMS = [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 2), ("C", 3)]


def elements(kind, n):
    images = st.permutations(list(range(1, build(kind, n).dim + 1)))
    if kind == "A":
        return images.map(lambda p: parse_perm(build(kind, n), p))
    signs = st.lists(st.sampled_from([1, -1]), min_size=n, max_size=n)
    return st.tuples(images, signs).map(
        lambda t: parse_perm(build(kind, n), [a * s for a, s in zip(*t)]))


def test_parse_perm_rejects_garbage():
    c3 = build("C", 3)
    for bad in ["1,2", "1,1,2", "1,2,4", "a,b,c"]:
        with pytest.raises(ValueError):
            parse_perm(c3, bad)
    with pytest.raises(ValueError):
        parse_perm(build("A", 2), "-1,2,3")


def test_reflection_images():
    c5 = build("C", 5)
    assert from_reflection(c5, c5.root("e1+e5")).images == (-5, 2, 3, 4, -1)
    assert from_reflection(build("C", 3), build("C", 3).root("2e2")).images == (1, -2, 3)
    a3 = build("A", 3)
    assert from_reflection(a3, a3.simple_roots[0]).images == (2, 1, 3, 4)


def test_product_of_three_reflections():
    c5 = build("C", 5)
    R = lambda name: from_reflection(c5, c5.root(name))
    w = compose(R("e1+e5"), compose(R("2e3"), R("e2-e4")))
    assert w.images == (-5, 4, -3, 2, -1)
    assert w.two_line() == " 1 2  3 4  5\n-5 4 -3 2 -1"


def test_act_on_root():
    c2 = build("C", 2)
    w = parse_perm(c2, "-1,2")
    got = act_on_root(w, c2.root("e1-e2"))
    assert (got.sign, got.root.name) == (-1, "e1+e2")
    w0 = longest(c2)
    assert w0.images == (-1, -2)
    for r in c2.positive_roots:
        assert act_on_root(w0, r) == (-1, r)
        assert act_on_root(identity(c2), r) == (1, r)


def test_lengths():
    c2 = build("C", 2)
    assert length(identity(c2)) == 0
    assert length(from_reflection(c2, c2.root("2e1"))) == 3
    assert length(longest(c2)) == 4
    assert from_word(c2, [2, 1, 2, 1]) == longest(c2)
    assert len(reduced_word(longest(c2))) == 4
    assert reduced_word(identity(c2)) == ()
    a2 = build("A", 2)
    w = from_word(a2, [1, 2, 1])
    assert len(reduced_word(w)) == 3 and from_word(a2, reduced_word(w)) == w


@pytest.mark.parametrize("kind,n", SYSTEMS)
def test_group_sizes_and_longest(kind, n):
    rs = build(kind, n)
    G = list(enumerate_group(rs))
    size = {"A": lambda n: np.prod(range(1, n + 2)), "B": lambda n: 2 ** n * np.prod(range(1, n + 1))}
    size["C"] = size["B"]
    assert len(G) == size[kind](n) == len(set(G))
    assert max(map(length, G)) == len(rs.positive_roots) == length(longest(rs))


def test_involution_counts():
    assert sum(1 for _ in enumerate_involutions(build("A", 2))) == 4
    assert sum(1 for _ in enumerate_group(build("C", 2))) == 8
    for kind in "BC":
        counts = [sum(1 for _ in enumerate_involutions(build(kind, n))) for n in (2, 3, 4)]
        assert counts == [6, 20, 76]
    # i(n) = 2 i(n-1) + 2 (n-1) i(n-2)
    i = {0: 1, 1: 2}
    for n in range(2, 5):
        i[n] = 2 * i[n - 1] + 2 * (n - 1) * i[n - 2]
    assert [i[n] for n in (2, 3, 4)] == [6, 20, 76]


@pytest.mark.parametrize("kind,n", SYSTEMS)
def test_length_is_inversion_count_and_descents(kind, n):
    rs = build(kind, n)
    for w in enumerate_group(rs):
        assert length(w) == len(inversion_set(w)) == len(reduced_word(w))
        assert from_word(rs, reduced_word(w)) == w
        assert length(inverse(w)) == length(w)
        for i in range(1, n + 1):
            ws = compose(w, simple_reflection(rs, i))
            assert length(ws) == length(w) + (-1 if is_descent(w, i) else 1)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SYSTEMS).flatmap(lambda t: st.tuples(elements(*t), elements(*t))))
def test_group_axioms(pair):
    u, v = pair
    rs = u.system
    assert compose(u, inverse(u)) == identity(rs)
    assert compose(inverse(v), inverse(u)) == inverse(compose(u, v))
    # subadditivity and parity of length
    l = length(compose(u, v))
    assert l <= length(u) + length(v)
    assert (l - length(u) - length(v)) % 2 == 0


def test_example_rank_matrix():
    for kind in "BC":
        w = parse_perm(build(kind, 4), "-3,-2,4,-1")
        R = rank_matrix(w)
        assert R.tolist() == EXAMPLE_RANK_MATRIX
        labels = label_order(4, True)
        at = lambda r, c: R[labels.index(r), labels.index(c)]
        assert at(-1, 1) == 0 and at(4, -1) == 5 and at(-4, 4) == 3
        X = rook_matrix(w)
        assert X.sum() == 8 and (X.sum(axis=0) == 1).all() and (X.sum(axis=1) == 1).all()


@pytest.mark.parametrize("kind,n", [("A", 3), ("C", 3)])
def test_rank_matrix_shape(kind, n):
    rs = build(kind, n)
    for w in enumerate_group(rs):
        R = rank_matrix(w)
        m = R.shape[0]
        assert R[0].tolist() == list(range(1, m + 1))
        assert set(np.diff(R, axis=1).ravel()) <= {0, 1}
        assert set((R[:-1] - R[1:]).ravel()) <= {0, 1}


@pytest.mark.parametrize("kind,n", [("A", 2), ("A", 3), ("B", 2), ("C", 2), ("C", 3)])
def test_bruhat_rank_vs_subword(kind, n):
    rs = build(kind, n)
    G = list(enumerate_group(rs))
    for v, w in itertools.product(G, G):
        assert bruhat_leq(v, w) == bruhat_leq_subword(v, w)


def test_bruhat_basics():
    rs = build("C", 3)
    G = list(enumerate_group(rs))
    e, w0 = identity(rs), longest(rs)
    for w in G:
        assert bruhat_leq(e, w) and bruhat_leq(w, w) and bruhat_leq(w, w0)
        # order reversing under w -> w w0
        assert bruhat_leq(compose(w, w0), compose(e, w0))
    R = lambda name: from_reflection(rs, rs.root(name))
    chain = ["e1-e2", "e1-e3", "e1+e3", "e1+e2"]
    for a, b in zip(chain, chain[1:]):
        assert bruhat_leq(R(a), R(b)) and not bruhat_leq(R(b), R(a))


def test_strict_lower_order_on_involutions():
    rs = build("C", 3)
    invs = list(enumerate_involutions(rs))
    for v, w in itertools.product(invs, invs):
        low = bool((strict_lower(rank_matrix(v)) <= strict_lower(rank_matrix(w))).all())
        assert low == bruhat_leq(v, w)


def test_support_examples():
    c6 = build("C", 6)
    sigma = parse_perm(c6, "-6,-2,5,4,3,-1")
    assert {r.name for r in support(sigma)} == {"e1+e6", "2e2", "e3-e5"}
    assert support(identity(c6)) == []
    assert [r.name for r in support(from_reflection(c6, c6.root("e1-e2")))] == ["e1-e2"]
    with pytest.raises(ValueError):
        support(parse_perm(build("A", 2), "2,3,1"))


@pytest.mark.parametrize("kind,n", [("A", 3), ("B", 3), ("C", 4)])
def test_support_reconstructs_involution(kind, n):
    rs = build(kind, n)
    for s in enumerate_involutions(rs):
        w = identity(rs)
        roots = support(s)
        for r in roots:
            w = compose(w, from_reflection(rs, r))
        assert w == s
        for a, b in itertools.combinations(roots, 2):
            assert sum(x * y for x, y in zip(a.eps, b.eps)) == 0


def test_parabolic_examples():
    n = 4
    for kind in "BC":
        rs = build(kind, n)
        J = range(2, n + 1)
        for j in range(2, n + 1):
            w = from_reflection(rs, rs.root(f"e1-e{j}"))
            u, v = parabolic_decompose(w, J)
            assert u == from_word(rs, list(range(j - 1, 0, -1)))
        w = from_reflection(rs, rs.root("2e1" if kind == "C" else "e1"))
        u, _ = parabolic_decompose(w, J)
        assert u == from_word(rs, list(range(1, n)) + [n] + list(range(n - 1, 0, -1)))
        inside = from_word(rs, [2, 3, 4, 3])
        assert parabolic_decompose(inside, J) == (identity(rs), inside)


@pytest.mark.parametrize("kind,n", [("A", 3), ("B", 3)])
def test_parabolic_lengths_add(kind, n):
    rs = build(kind, n)
    J = {2, 3}
    for w in enumerate_group(rs):
        u, v = parabolic_decompose(w, J)
        assert compose(u, v) == w
        assert length(u) + length(v) == length(w)
        assert set(reduced_word(v)) <= J
        assert not any(is_descent(u, j) for j in J)
