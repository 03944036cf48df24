"""
Root systems of types A, B and C.

Roots are stored twice: in the simple-root basis (``alpha``), which is the
coordinate system used for all polynomial arithmetic, and in the standard
epsilon basis (``eps``), where the Weyl group acts by signed permutations.

Type ``A`` of rank n lives in R^(n+1) (roots e_i - e_j), types ``B``/``C`` of
rank n live in R^n.

>>> rs = build("C", 2)
>>> [r.name for r in rs.positive_roots]
['e1-e2', '2e1', 'e1+e2', '2e2']
>>> rs.simple_roots[1].alpha_name
'a2'
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

__all__ = [
    "Kind", "Root", "SignedRoot", "RootSystem",
    "build", "row_col", "reflect", "column_set", "row_set",
]


class Kind(str, Enum):
    A = "A"
    B = "B"
    C = "C"


@dataclass(frozen=True)
class Root:
    """A root, in simple-root and epsilon coordinates."""
    alpha: tuple[int, ...]
    eps: tuple[int, ...] = field(compare=False)

    @property
    def name(self) -> str:
        """Epsilon form, e.g. ``e1-e2``, ``e1+e3``, ``2e2``, ``e3``."""
        return _eps_name(self.eps)

    @property
    def alpha_name(self) -> str:
        """Simple-root form, e.g. ``a1+2*a2``."""
        parts = []
        for i, c in enumerate(self.alpha, start=1):
            if c == 0:
                continue
            mono = f"a{i}" if abs(c) == 1 else f"{abs(c)}*a{i}"
            if not parts:
                parts.append(mono if c > 0 else "-" + mono)
            else:
                parts.append(("+" if c > 0 else "-") + mono)
        return "".join(parts) or "0"

    def __repr__(self):
        return f"Root({self.name})"


class SignedRoot(NamedTuple):
    """``sign * root`` with ``root`` positive."""
    sign: int
    root: Root

    @property
    def name(self) -> str:
        return self.root.name if self.sign > 0 else f"-({self.root.name})"


def _eps_name(eps) -> str:
    nz = [(i + 1, c) for i, c in enumerate(eps) if c != 0]
    if len(nz) == 1:
        i, c = nz[0]
        return f"e{i}" if c == 1 else f"{c}e{i}"
    out = ""
    for i, c in nz:
        sgn = "+" if c > 0 else "-"
        mag = "" if abs(c) == 1 else str(abs(c))
        out += f"{sgn}{mag}e{i}"
    return out.lstrip("+")


@dataclass(frozen=True, eq=False)
class RootSystem:
    """
    Positive and simple roots of a root system of type A, B or C.

    Built via :func:`build`, which caches instances, so identity comparison
    is equality here.
    """
    kind: Kind
    rank: int
    positive_roots: tuple[Root, ...]
    simple_roots: tuple[Root, ...]

    @property
    def dim(self) -> int:
        """Number of epsilon coordinates."""
        return self.rank + 1 if self.kind is Kind.A else self.rank

    @property
    def _by_eps(self) -> dict:
        d = self.__dict__.get("_eps_index")
        if d is None:
            d = {r.eps: r for r in self.positive_roots}
            object.__setattr__(self, "_eps_index", d)
        return d

    def index(self, root: Root) -> int:
        """Position of ``root`` in :attr:`positive_roots`."""
        d = self.__dict__.get("_pos_index")
        if d is None:
            d = {r: k for k, r in enumerate(self.positive_roots)}
            object.__setattr__(self, "_pos_index", d)
        return d[root]

    def eps_to_alpha(self, eps) -> tuple[int, ...]:
        """Change of basis epsilon -> simple roots (integral on the root lattice)."""
        n = self.rank
        partial = []
        s = 0
        for i in range(n):
            s += eps[i]
            partial.append(s)
        if self.kind is Kind.C:
            last = Fraction(partial[-1], 2)
            if last.denominator != 1:
                raise ValueError(f"{eps} is not in the root lattice of C{n}")
            partial[-1] = int(last)
        return tuple(partial)

    def alpha_to_eps(self, alpha) -> tuple[int, ...]:
        n = self.rank
        eps = [0] * self.dim
        for k, c in enumerate(alpha):
            if c == 0:
                continue
            sr = self.simple_roots[k].eps
            for i in range(self.dim):
                eps[i] += c * sr[i]
        assert len(alpha) == n
        return tuple(eps)

    def signed_root(self, eps) -> SignedRoot:
        """Look up ``eps`` (a root, possibly negative) as a signed positive root."""
        eps = tuple(eps)
        r = self._by_eps.get(eps)
        if r is not None:
            return SignedRoot(1, r)
        r = self._by_eps.get(tuple(-c for c in eps))
        if r is None:
            raise ValueError(f"{_eps_name(eps)} is not a root of {self}")
        return SignedRoot(-1, r)

    def root(self, name: str) -> Root:
        """Find a positive root by its epsilon-form name, e.g. ``'e1+e2'``."""
        for r in self.positive_roots:
            if r.name == name:
                return r
        raise KeyError(f"no positive root {name!r} in {self}")

    def __str__(self):
        return f"{self.kind.value}{self.rank}"

    __repr__ = __str__


def _unit(dim, i, c=1):
    v = [0] * dim
    v[i] = c
    return v


@lru_cache(maxsize=None)
def _build(kind: Kind, n: int) -> RootSystem:
    dim = n + 1 if kind is Kind.A else n
    eps_list = []
    if kind is Kind.A:
        for i in range(dim):
            for j in range(i + 1, dim):
                v = _unit(dim, i)
                v[j] = -1
                eps_list.append(v)
    else:
        long_or_short = 2 if kind is Kind.C else 1
        for i in range(n):
            for j in range(i + 1, n):
                v = _unit(dim, i)
                v[j] = -1
                eps_list.append(v)
            eps_list.append(_unit(dim, i, long_or_short))
            for j in reversed(range(i + 1, n)):
                v = _unit(dim, i)
                v[j] = 1
                eps_list.append(v)

    simple_eps = []
    for i in range(n):
        if kind is not Kind.A and i == n - 1:
            simple_eps.append(_unit(dim, i, 2 if kind is Kind.C else 1))
        else:
            v = _unit(dim, i)
            v[i + 1] = -1
            simple_eps.append(v)

    # simple roots first, so eps_to_alpha can be used for the rest
    simple = tuple(
        Root(tuple(1 if k == i else 0 for k in range(n)), tuple(e))
        for i, e in enumerate(simple_eps)
    )
    proto = RootSystem(kind, n, (), simple)
    positive = tuple(Root(proto.eps_to_alpha(e), tuple(e)) for e in eps_list)
    return RootSystem(kind, n, positive, simple)


def build(kind, rank: int) -> RootSystem:
    """
    Root system of the given kind and rank.

    Positive roots are ordered by column (the index ``i`` of the leading
    epsilon), and inside column i as e_i-e_(i+1), ..., e_i-e_n, e_i (or 2e_i),
    e_i+e_n, ..., e_i+e_(i+1).
    """
    kind = Kind(kind)
    if not isinstance(rank, int) or isinstance(rank, bool):
        raise TypeError("rank must be an int")
    if kind is Kind.A and rank < 1:
        raise ValueError(f"type A needs rank >= 1, got {rank}")
    if kind is not Kind.A and rank < 2:
        raise ValueError(f"type {kind.value} needs rank >= 2, got {rank}")
    return _build(kind, rank)


def _require_bc(rs: RootSystem):
    if rs.kind is Kind.A:
        raise ValueError("row/col bookkeeping is defined for types B and C only")


def row_col(rs: RootSystem, r: Root) -> tuple[int, int]:
    """
    The (row, col) pair of a positive root of type B/C.

    row(e_i - e_j) = j, row(e_i + e_j) = -j, row(e_i) = 0, row(2e_i) = -i;
    col is always i.

    >>> rs = build("C", 6)
    >>> row_col(rs, rs.root("e1+e6"))
    (-6, 1)
    """
    _require_bc(rs)
    nz = [(k + 1, c) for k, c in enumerate(r.eps) if c != 0]
    (i, ci) = nz[0]
    if ci <= 0:
        raise ValueError(f"{r} is not positive")
    if len(nz) == 1:
        return (0 if ci == 1 else -i), i
    (j, cj) = nz[1]
    return (j if cj < 0 else -j), i


def column_set(rs: RootSystem, k: int) -> list[Root]:
    return [r for r in rs.positive_roots if row_col(rs, r)[1] == k]


def row_set(rs: RootSystem, k: int) -> list[Root]:
    return [r for r in rs.positive_roots if row_col(rs, r)[0] == k]


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def reflect(rs: RootSystem, alpha: Root, beta: Root) -> SignedRoot:
    """Apply the reflection in ``alpha`` to ``beta``."""
    a, b = alpha.eps, beta.eps
    k = Fraction(2 * _dot(a, b), _dot(a, a))
    assert k.denominator == 1
    k = int(k)
    return rs.signed_root(bi - k * ai for ai, bi in zip(a, b))
