"""
Weyl groups of types A, B, C as (signed) permutation groups.

An element is stored by its one-line images ``w(1), ..., w(m)`` where ``m`` is
the number of epsilon coordinates (``rank + 1`` for type A, ``rank`` for B/C);
for B/C the convention ``w(-i) = -w(i)`` is implicit.

>>> from kkpoly.root_system import build
>>> rs = build("C", 5)
>>> w = from_reflection(rs, rs.root("e1+e5")) * from_reflection(rs, rs.root("2e3")) \\
...     * from_reflection(rs, rs.root("e2-e4"))
>>> w.images
(-5, 4, -3, 2, -1)
>>> length(w), w.is_involution()
(13, True)
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

import numpy as np

from .root_system import Kind, Root, RootSystem, SignedRoot, build

__all__ = [
    "GroupElement", "identity", "simple_reflection", "from_reflection",
    "from_word", "parse_perm", "compose", "inverse", "act_on_root", "length",
    "is_descent", "reduced_word", "reduced_words", "rank_matrix", "strict_lower", "label_order",
    "bruhat_leq", "bruhat_leq_subword", "enumerate_group",
    "enumerate_involutions", "support", "parabolic_decompose", "longest",
]


@dataclass(frozen=True)
class GroupElement:
    kind: Kind
    rank: int
    images: tuple[int, ...]

    @property
    def system(self) -> RootSystem:
        return build(self.kind, self.rank)

    def __call__(self, i: int) -> int:
        """Image of a signed index."""
        return self.images[i - 1] if i > 0 else -self.images[-i - 1]

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return compose(self, other)

    def is_involution(self) -> bool:
        return all(self(self(i)) == i for i in range(1, len(self.images) + 1))

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.images, start=1))

    def __str__(self):
        return ",".join(str(x) for x in self.images)

    def __repr__(self):
        return f"GroupElement({self.kind.value}{self.rank}: {self})"

    def two_line(self) -> str:
        top = [str(i) for i in range(1, len(self.images) + 1)]
        bot = [str(x) for x in self.images]
        width = [max(len(a), len(b)) for a, b in zip(top, bot)]
        return "\n".join(
            " ".join(s.rjust(k) for s, k in zip(row, width)) for row in (top, bot)
        )


def _make(rs: RootSystem, images) -> GroupElement:
    return GroupElement(rs.kind, rs.rank, tuple(images))


def _check(images, rs: RootSystem):
    m = rs.dim
    if len(images) != m:
        raise ValueError(f"{rs} elements have {m} images, got {len(images)}")
    if sorted(abs(x) for x in images) != list(range(1, m + 1)):
        raise ValueError(f"{list(images)} is not a signed permutation of 1..{m}")
    if rs.kind is Kind.A and any(x < 0 for x in images):
        raise ValueError("type A elements cannot have negative images")


def parse_perm(rs: RootSystem, text) -> GroupElement:
    """Parse ``"-3,-2,4,-1"`` (or a sequence of ints) into an element."""
    if isinstance(text, str):
        try:
            images = tuple(int(t) for t in text.replace(" ", "").split(",") if t)
        except ValueError as exc:
            raise ValueError(f"cannot parse permutation {text!r}") from exc
    else:
        images = tuple(int(x) for x in text)
    _check(images, rs)
    return _make(rs, images)


def identity(rs: RootSystem) -> GroupElement:
    return _make(rs, range(1, rs.dim + 1))


def _signed_transposition(rs, pairs) -> GroupElement:
    img = list(range(1, rs.dim + 1))
    for a, b in pairs:
        # a -> b, b -> a with the sign convention w(-i) = -w(i)
        img[abs(a) - 1] = b if a > 0 else -b
        img[abs(b) - 1] = a if b > 0 else -a
    return _make(rs, img)


def from_reflection(rs: RootSystem, alpha: Root) -> GroupElement:
    """
    The reflection in a positive root as a signed permutation:
    e_i - e_j -> (i,j)(-i,-j), e_i + e_j -> (i,-j)(-i,j), e_i or 2e_i -> (i,-i).
    """
    nz = [(k + 1, c) for k, c in enumerate(alpha.eps) if c != 0]
    if len(nz) == 1:
        i = nz[0][0]
        img = list(range(1, rs.dim + 1))
        img[i - 1] = -i
        return _make(rs, img)
    (i, _), (j, cj) = nz
    return _signed_transposition(rs, [(i, j if cj < 0 else -j)])


def simple_reflection(rs: RootSystem, i: int) -> GroupElement:
    if not 1 <= i <= rs.rank:
        raise ValueError(f"simple reflection index {i} outside 1..{rs.rank}")
    return from_reflection(rs, rs.simple_roots[i - 1])


def _same_group(u: GroupElement, v: GroupElement):
    if (u.kind, u.rank) != (v.kind, v.rank):
        raise ValueError(f"elements of different groups: {u!r}, {v!r}")


def compose(u: GroupElement, v: GroupElement) -> GroupElement:
    """The product ``uv``, i.e. ``(uv)(i) = u(v(i))``."""
    _same_group(u, v)
    ui = u.images
    img = tuple(ui[x - 1] if x > 0 else -ui[-x - 1] for x in v.images)
    return GroupElement(u.kind, u.rank, img)


def inverse(u: GroupElement) -> GroupElement:
    img = [0] * len(u.images)
    for i, x in enumerate(u.images, start=1):
        img[abs(x) - 1] = i if x > 0 else -i
    return GroupElement(u.kind, u.rank, tuple(img))


def _act_eps(images, eps) -> list[int]:
    out = [0] * len(eps)
    for i, c in enumerate(eps):
        if c:
            x = images[i]
            out[abs(x) - 1] += c if x > 0 else -c
    return out


def act_on_root(w: GroupElement, r: Root) -> SignedRoot:
    """``w(r)`` as a signed positive root; w acts on epsilon coordinates."""
    return w.system.signed_root(_act_eps(w.images, r.eps))


def _is_positive_eps(eps) -> bool:
    for c in eps:
        if c:
            return c > 0
    raise ValueError("zero vector")


def is_descent(w: GroupElement, i: int) -> bool:
    """True iff ``w(alpha_i) < 0``, i.e. ``l(w s_i) < l(w)``."""
    rs = w.system
    return not _is_positive_eps(_act_eps(w.images, rs.simple_roots[i - 1].eps))


@lru_cache(maxsize=200_000)
def _length(kind, rank, images) -> int:
    rs = build(kind, rank)
    return sum(1 for r in rs.positive_roots
               if not _is_positive_eps(_act_eps(images, r.eps)))


def length(w: GroupElement) -> int:
    """Number of positive roots sent to negative roots."""
    return _length(w.kind, w.rank, w.images)


def inversion_set(w: GroupElement) -> list[Root]:
    return [r for r in w.system.positive_roots
            if not _is_positive_eps(_act_eps(w.images, r.eps))]


def from_word(rs: RootSystem, letters: Iterable[int]) -> GroupElement:
    """Product ``s_{j1} s_{j2} ...`` taken left to right."""
    w = identity(rs)
    for j in letters:
        w = compose(w, simple_reflection(rs, j))
    return w


def reduced_word(w: GroupElement) -> tuple[int, ...]:
    """
    A reduced word for ``w``, found by repeatedly stripping the smallest
    right descent.

    >>> rs = build("A", 2)
    >>> reduced_word(from_word(rs, [1, 2, 1]))
    (1, 2, 1)
    """
    rs = w.system
    stripped = []
    while True:
        for i in range(1, rs.rank + 1):
            if is_descent(w, i):
                stripped.append(i)
                w = compose(w, simple_reflection(rs, i))
                break
        else:
            break
    return tuple(reversed(stripped))


def reduced_words(w: GroupElement) -> Iterator[tuple[int, ...]]:
    """
    All reduced words for ``w``, in lexicographic order.

    >>> rs = build("A", 2)
    >>> list(reduced_words(from_word(rs, [1, 2, 1])))
    [(1, 2, 1), (2, 1, 2)]
    """
    rs = w.system
    if w.is_identity():
        yield ()
        return
    # first letters are the left descents, i.e. right descents of w^-1
    winv = inverse(w)
    for i in range(1, rs.rank + 1):
        if is_descent(winv, i):
            rest = compose(simple_reflection(rs, i), w)
            for tail in reduced_words(rest):
                yield (i,) + tail


def longest(rs: RootSystem) -> GroupElement:
    w = identity(rs)
    while True:
        for i in range(1, rs.rank + 1):
            if not is_descent(w, i):
                w = compose(w, simple_reflection(rs, i))
                break
        else:
            return w


def label_order(m: int, signed: bool) -> list[int]:
    """Row/column labels of rook matrices: 1..m, then -m..-1 when signed."""
    labels = list(range(1, m + 1))
    if signed:
        labels += list(range(-m, 0))
    return labels


def _rook_matrix(w: GroupElement) -> np.ndarray:
    signed = w.kind is not Kind.A
    labels = label_order(len(w.images), signed)
    pos = {lab: k for k, lab in enumerate(labels)}
    X = np.zeros((len(labels), len(labels)), dtype=np.int64)
    for j, lab in enumerate(labels):
        X[pos[w(lab)], j] = 1
    return X


def rook_matrix(w: GroupElement) -> np.ndarray:
    """0-1 matrix with a rook at (w(j), j); rows/columns in :func:`label_order`."""
    return _rook_matrix(w)


@lru_cache(maxsize=200_000)
def _rank_matrix(w: GroupElement) -> np.ndarray:
    X = _rook_matrix(w)
    # rooks weakly below row i and weakly left of column j
    R = np.cumsum(np.cumsum(X[::-1, :], axis=0)[::-1, :], axis=1)
    R.setflags(write=False)
    return R


def rank_matrix(w: GroupElement) -> np.ndarray:
    """
    South-West rook counts of ``w``.

    Type B/C: a 2m x 2m matrix with rows and columns labelled 1..m, -m..-1.
    Type A: the unsigned m x m analogue.
    """
    return _rank_matrix(w)


def strict_lower(R: np.ndarray) -> np.ndarray:
    """Entries strictly below the diagonal, zeros elsewhere."""
    return np.tril(R, k=-1)


def bruhat_leq(v: GroupElement, w: GroupElement) -> bool:
    """Bruhat order via entrywise comparison of rank matrices."""
    _same_group(v, w)
    return bool(np.all(rank_matrix(v) <= rank_matrix(w)))


def bruhat_leq_subword(v: GroupElement, w: GroupElement) -> bool:
    """
    Bruhat order by scanning one reduced word of ``w`` from the right.

    If ``s`` is a right descent of ``w`` then ``v <= w`` iff ``vs <= ws``
    (when ``s`` is also a descent of ``v``) or ``v <= ws`` (otherwise), so
    greedily stripping letters decides the question; ``v <= w`` iff ``v``
    has been reduced to the identity at the end.
    """
    _same_group(v, w)
    rs = w.system
    for i in reversed(reduced_word(w)):
        if is_descent(v, i):
            v = compose(v, simple_reflection(rs, i))
    return v.is_identity()


def _signed_key(x: int, m: int) -> int:
    # 1 < 2 < ... < m < -m < ... < -1
    return x if x > 0 else 2 * m + 1 + x


def enumerate_group(rs: RootSystem) -> Iterator[GroupElement]:
    """
    All elements of the Weyl group, lexicographic on image vectors under
    1 < 2 < ... < m < -m < ... < -1.
    """
    for w in _all_images(rs.kind, rs.rank):
        yield GroupElement(rs.kind, rs.rank, w)


@lru_cache(maxsize=None)
def _all_images(kind, rank) -> tuple:
    rs = build(kind, rank)
    m = rs.dim
    if kind is Kind.A:
        return tuple(itertools.permutations(range(1, m + 1)))
    out = []
    for p in itertools.permutations(range(1, m + 1)):
        for signs in itertools.product((1, -1), repeat=m):
            out.append(tuple(s * x for s, x in zip(signs, p)))
    out.sort(key=lambda img: [_signed_key(x, m) for x in img])
    return tuple(out)


def enumerate_involutions(rs: RootSystem) -> Iterator[GroupElement]:
    for w in enumerate_group(rs):
        if w.is_involution():
            yield w


def support(sigma: GroupElement) -> list[Root]:
    """
    The support of an involution: the orthogonal set of positive roots whose
    reflections multiply to ``sigma``. Ordered by column.

    >>> rs = build("C", 6)
    >>> [r.name for r in support(parse_perm(rs, "-6,-2,5,4,3,-1"))]
    ['e1+e6', '2e2', 'e3-e5']
    """
    if not sigma.is_involution():
        raise ValueError(f"{sigma!r} is not an involution")
    rs = sigma.system
    m = len(sigma.images)
    out = []
    for i in range(1, m + 1):
        x = sigma(i)
        eps = [0] * m
        if x == i:
            continue
        if x == -i:
            eps[i - 1] = 2 if rs.kind is Kind.C else 1
        elif abs(x) > i:
            eps[i - 1] = 1
            eps[abs(x) - 1] = -1 if x > 0 else 1
        else:
            continue
        out.append(rs.signed_root(eps).root)
    return out


def parabolic_decompose(w: GroupElement, J: Iterable[int]) -> tuple[GroupElement, GroupElement]:
    """
    Split ``w = u v`` with ``v`` in the parabolic subgroup generated by
    ``{s_j : j in J}`` and ``u`` the minimal length representative of ``w W_J``
    (``u(alpha_j) > 0`` for all j in J). Lengths add.
    """
    J = sorted(set(J))
    rs = w.system
    u = w
    while True:
        for j in J:
            if is_descent(u, j):
                u = compose(u, simple_reflection(rs, j))
                break
        else:
            break
    return u, compose(inverse(u), w)
