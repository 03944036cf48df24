"""
The nil-Hecke ring: the Q(h)-span of symbols delta_w, w in W, with product
``f delta_v * g delta_w = f v(g) delta_{vw}``, its generators
``x_i = a_i^{-1} (delta_{s_i} - delta_id)`` and the Kostant-Kumar
polynomials

    d_w = (-1)^{l(w)} c_{w,id} prod_{a > 0} a

where ``c_{w,v}`` is the coefficient of delta_v in ``x_w``.

Three independent routes to ``c_{w,v}`` are provided: the delta-basis product
(:func:`x_of`, the main one), the length recursion (:func:`c_recursive`) and
the exponential sum over 0/1 subsequences of a reduced word
(:func:`c_subword_oracle`).

>>> from kkpoly.root_system import build
>>> from kkpoly.weyl import from_word, identity
>>> rs = build("A", 2)
>>> w = from_word(rs, [1, 2, 1])
>>> str(c(w, identity(rs)))
'-1/(a1*a2*(a1+a2))'
>>> str(d(w).value)
'1'
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping, Sequence

from .exactalg import Polynomial, RationalFunction, divide_by_linear, root_form, weyl_act
from .root_system import Root, RootSystem, build
from .weyl import (
    GroupElement, act_on_root, bruhat_leq, compose, enumerate_group, from_reflection,
    from_word, identity, inverse, is_descent, length, reduced_word, simple_reflection,
)

__all__ = [
    "NilHeckeElement", "KKPolynomial", "delta", "x_gen", "multiply", "x_of",
    "c", "c_subword_oracle", "c_recursive", "d", "d_via_rational", "dyer_check",
    "delta_in_x_basis", "root_product", "InvariantError",
]


class InvariantError(AssertionError):
    """An exact computation broke a guaranteed structural property."""


class NilHeckeElement:
    """Finite sum ``sum_v coeffs[v] delta_v`` with nonzero rational coefficients."""
    __slots__ = ("system", "coeffs")

    def __init__(self, rs: RootSystem, coeffs: Mapping[GroupElement, RationalFunction] = ()):
        self.system = rs
        self.coeffs = {v: f for v, f in dict(coeffs).items() if not f.is_zero()}

    def coeff(self, v: GroupElement) -> RationalFunction:
        return self.coeffs.get(v, RationalFunction.zero(self.system.rank))

    def __add__(self, other: "NilHeckeElement") -> "NilHeckeElement":
        out = dict(self.coeffs)
        for v, f in other.coeffs.items():
            out[v] = out[v] + f if v in out else f
        return NilHeckeElement(self.system, out)

    def __neg__(self):
        return NilHeckeElement(self.system, {v: -f for v, f in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, NilHeckeElement):
            return multiply(self, other)
        return NotImplemented

    def __rmul__(self, f):
        # scalar (rational function) on the left
        if isinstance(f, (int, Polynomial, RationalFunction)):
            return NilHeckeElement(self.system, {v: f * g for v, g in self.coeffs.items()})
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, NilHeckeElement):
            return NotImplemented
        return self.system is other.system and self.coeffs == other.coeffs

    def is_zero(self) -> bool:
        return not self.coeffs

    def __repr__(self):
        body = " + ".join(f"({f}) d[{v}]" for v, f in sorted(
            self.coeffs.items(), key=lambda t: (length(t[0]), t[0].images)))
        return f"NilHeckeElement({body or '0'})"


@dataclass(frozen=True)
class KKPolynomial:
    element: GroupElement
    value: Polynomial

    def __str__(self):
        return str(self.value)


def delta(w: GroupElement) -> NilHeckeElement:
    return NilHeckeElement(w.system, {w: RationalFunction.constant(w.rank, 1)})


def x_gen(rs: RootSystem, i: int) -> NilHeckeElement:
    """``x_i = a_i^{-1} (delta_{s_i} - delta_id)``."""
    if not 1 <= i <= rs.rank:
        raise ValueError(f"generator index {i} outside 1..{rs.rank}")
    a = rs.simple_roots[i - 1]
    inv = RationalFunction.constant(rs.rank, 1).divide_by_root(a)
    return NilHeckeElement(rs, {simple_reflection(rs, i): inv, identity(rs): -inv})


def multiply(E: NilHeckeElement, F: NilHeckeElement) -> NilHeckeElement:
    if E.system is not F.system:
        raise ValueError(f"elements of different rings: {E.system} vs {F.system}")
    out: dict = {}
    for v, f in E.coeffs.items():
        for w, g in F.coeffs.items():
            term = f * weyl_act(v, g)
            vw = compose(v, w)
            out[vw] = out[vw] + term if vw in out else term
    return NilHeckeElement(E.system, out)


def root_product(rs: RootSystem) -> Polynomial:
    """Product of all positive roots as a polynomial in the simple roots."""
    return _root_product(rs.kind, rs.rank)


@lru_cache(maxsize=None)
def _root_product(kind, rank) -> Polynomial:
    rs = build(kind, rank)
    out = Polynomial.constant(rank, 1)
    for r in rs.positive_roots:
        out = out * root_form(r)
    return out


@lru_cache(maxsize=None)
def _simple_images(kind, rank, images) -> tuple:
    # v(a_i) for every simple root, as (sign, alpha coords)
    w = GroupElement(kind, rank, images)
    out = []
    for sr in w.system.simple_roots:
        s, r = act_on_root(w, sr)
        out.append((s, r.alpha))
    return tuple(out)


def _right_mult_x(rs: RootSystem, nums: dict, i: int) -> dict:
    """
    Numerators of ``X * x_i`` given numerators of ``X``; every coefficient
    is stored as P / prod(positive roots) with P a polynomial.

    new[v] = -(P_v + P_{v s_i}) / v(a_i)
    """
    n = rs.rank
    # right multiplication by s_i swaps images at i, i+1 (or negates the last)
    def times_si(img):
        img = list(img)
        if i < n or rs.kind.value == "A":
            img[i - 1], img[i] = img[i], img[i - 1]
        else:
            img[i - 1] = -img[i - 1]
        return tuple(img)

    keys = set(nums)
    keys |= {times_si(v) for v in nums}
    out = {}
    for v in keys:
        a = nums.get(v)
        b = nums.get(times_si(v))
        if a is None:
            total = b
        elif b is None:
            total = a
        else:
            total = a + b
        if total.is_zero():
            continue
        sign, alpha = _simple_images(rs.kind, rs.rank, v)[i - 1]
        q, ok = divide_by_linear(total, alpha)
        if not ok:
            raise InvariantError(
                f"numerator for {v} not divisible by {alpha}: Dyer bound violated")
        out[v] = -q if sign > 0 else q
    return out


def _x_numerators(w: GroupElement, word: Sequence[int] | None = None) -> dict:
    rs = w.system
    if word is None:
        word = reduced_word(w)
    nums = {identity(rs).images: root_product(rs)}
    for i in word:
        nums = _right_mult_x(rs, nums, i)
    return nums


def x_of(w: GroupElement, word: Sequence[int] | None = None) -> NilHeckeElement:
    """
    ``x_w`` expanded in the delta basis, computed as the product of ``x_i``
    along a reduced word (``word`` defaults to :func:`reduced_word`).
    """
    rs = w.system
    if word is not None:
        word = tuple(word)
        if from_word(rs, word) != w or len(word) != length(w):
            raise ValueError(f"{word} is not a reduced word for {w!r}")
    nums = _x_numerators(w, word)
    full = list(rs.positive_roots)
    return NilHeckeElement(rs, {
        GroupElement(rs.kind, rs.rank, v): RationalFunction(p, full) for v, p in nums.items()
    })


def c(w: GroupElement, v: GroupElement) -> RationalFunction:
    """Coefficient of delta_v in x_w."""
    if (w.kind, w.rank) != (v.kind, v.rank):
        raise ValueError("elements of different groups")
    p = _x_numerators(w).get(v.images)
    if p is None:
        return RationalFunction.zero(w.rank)
    return RationalFunction(p, w.system.positive_roots)


def c_subword_oracle(word: Sequence[int], v: GroupElement, rs: RootSystem | None = None
                     ) -> RationalFunction:
    """
    ``c_{w,v}`` straight from the defining sum over 0/1 sequences
    (e_1, ..., e_l) with s_{i1}^{e1} ... s_{il}^{el} = v:

        (-1)^l sum prod_k 1 / (s_{i1}^{e1} ... s_{ik}^{ek} a_{ik})

    Exponential in the word length.
    """
    rs = rs or v.system
    word = tuple(word)
    w = from_word(rs, word)
    if len(word) != length(w):
        raise ValueError(f"{word} is not reduced")
    nv = rs.rank
    total = RationalFunction.zero(nv)
    gens = [None] + [simple_reflection(rs, i) for i in range(1, rs.rank + 1)]
    for eps in itertools.product((0, 1), repeat=len(word)):
        g = identity(rs)
        term = RationalFunction.constant(nv, 1)
        for i, e in zip(word, eps):
            if e:
                g = compose(g, gens[i])
            s, r = act_on_root(g, rs.simple_roots[i - 1])
            term = term.divide_by_root(r, s)
        if g == v:
            total = total + term
    return -total if len(word) % 2 else total


def c_recursive(w: GroupElement, v: GroupElement, cache: dict | None = None) -> RationalFunction:
    """
    ``c_{w,v}`` by the right-descent recursion

        c_{w,v} = -v(a_i)^{-1} (c_{ws_i,v} + c_{ws_i,vs_i}),  l(ws_i) < l(w),

    bottoming out at c_{id,v} = [v = id]. ``cache`` is a per-call memo.
    """
    rs = w.system
    if cache is None:
        cache = {}
    key = (w.images, v.images)
    if key in cache:
        return cache[key]
    if w.is_identity():
        out = RationalFunction.constant(rs.rank, 1 if v.is_identity() else 0)
    else:
        i = next(k for k in range(1, rs.rank + 1) if is_descent(w, k))
        s = simple_reflection(rs, i)
        ws = compose(w, s)
        inner = c_recursive(ws, v, cache) + c_recursive(ws, compose(v, s), cache)
        sign, r = act_on_root(v, rs.simple_roots[i - 1])
        out = -inner.divide_by_root(r, sign)
    cache[key] = out
    return out


def d(w: GroupElement) -> KKPolynomial:
    """The Kostant-Kumar polynomial of ``w``."""
    rs = w.system
    p = _x_numerators(w).get(identity(rs).images)
    if p is None:
        raise InvariantError(f"c_(w,id) vanished for {w!r}")
    value = p if length(w) % 2 == 0 else -p
    return KKPolynomial(w, value)


def d_via_rational(w: GroupElement) -> Polynomial:
    """Same as :func:`d` but through normalised rational-function arithmetic."""
    rs = w.system
    f = c(w, identity(rs)) * root_product(rs)
    if not f.is_polynomial():
        raise InvariantError(f"d_w has denominator {f._den_str()} for {w!r}")
    return f.num if length(w) % 2 == 0 else -f.num


def dyer_check(w: GroupElement, v: GroupElement) -> tuple[Polynomial, bool]:
    """
    Multiply ``c_{w,v}`` by the roots ``a > 0`` with ``s_a v <= w``; the
    result ``g_{w,v}`` should be a polynomial.
    """
    if not bruhat_leq(v, w):
        raise ValueError(f"{v!r} is not below {w!r}")
    rs = w.system
    f = c(w, v)
    for r in rs.positive_roots:
        if bruhat_leq(compose(from_reflection(rs, r), v), w):
            f = f * root_form(r)
    return f.num, f.is_polynomial()


def delta_in_x_basis(w: GroupElement) -> dict[GroupElement, RationalFunction]:
    """
    Coefficients ``d_{w,v}`` with ``delta_w = sum_v d_{w,v} x_v``.

    ``x_u = sum_{v <= u} c_{u,v} delta_v`` is triangular for the Bruhat
    order, so the inverse is found by back-substitution on the interval
    [id, w], processed by decreasing length.
    """
    rs = w.system
    interval = [u for u in enumerate_group(rs) if bruhat_leq(u, w)]
    interval.sort(key=lambda u: -length(u))
    x = {u: x_of(u) for u in interval}
    residual = delta(w)
    out: dict = {}
    for u in interval:
        f = residual.coeff(u)
        if f.is_zero():
            continue
        diag = x[u].coeff(u)
        if diag.is_zero():
            raise InvariantError(f"c_(u,u) vanished for {u!r}")
        k = f * _reciprocal(diag)
        out[u] = k
        residual = residual - k * x[u]
    if not residual.is_zero():
        raise InvariantError("triangular inversion left a residual")
    return out


def _reciprocal(f: RationalFunction) -> RationalFunction:
    # diagonal entries c_{u,u} are constants over a product of roots
    if not f.num.is_constant():
        raise InvariantError(f"diagonal coefficient {f} is not a monomial in roots")
    const = Fraction(next(iter(f.num.terms.values())))
    return RationalFunction(f.den_polynomial().scale(1 / const))
