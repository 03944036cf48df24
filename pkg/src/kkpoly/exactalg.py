"""
Exact polynomials and root-denominator rational functions over Q.

Variables are the simple roots a1, ..., an. Coefficients are Python ``int``
when integral and :class:`fractions.Fraction` otherwise, so integer
arithmetic (the common case) stays fast.

Rational functions keep their denominator as a multiset of positive roots.
Every division performed by nil-Hecke computations is by a signed root, so
no multivariate gcd is ever needed: normalisation only tries to cancel each
denominator root against the numerator by exact linear division.

>>> p = Polynomial.linear([1, 0]) * Polynomial.linear([0, 1]) * Polynomial.linear([1, 1])
>>> str(p)
'a1^2*a2 + a1*a2^2'
>>> q, ok = divide_by_linear(p, [1, 0])
>>> ok, str(q)
(True, 'a1*a2 + a2^2')
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .root_system import Root, RootSystem

__all__ = [
    "Polynomial", "RationalFunction", "divide_by_linear", "weyl_act",
    "root_form", "inv_linear",
]


def _norm(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def _fmt_coeff(c) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


class Polynomial:
    """
    Sparse polynomial: ``terms`` maps exponent tuples to nonzero coefficients.

    Treat instances as immutable.
    """
    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping | None = None):
        self.nvars = nvars
        t = {}
        if terms:
            for e, c in terms.items():
                if c:
                    if len(e) != nvars:
                        raise ValueError(f"exponent {e} has wrong length for {nvars} variables")
                    t[tuple(e)] = _norm(c)
        self.terms = t
        self._hash = None

    @classmethod
    def _raw(cls, nvars, terms):
        # trusted constructor: keys are tuples, no zero coefficients
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, nvars: int, c=1) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls._raw(nvars, {})

    @classmethod
    def var(cls, nvars: int, i: int) -> "Polynomial":
        """The variable ``a_i`` (1-based)."""
        e = [0] * nvars
        e[i - 1] = 1
        return cls._raw(nvars, {tuple(e): 1})

    @classmethod
    def linear(cls, coeffs: Sequence) -> "Polynomial":
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            if c:
                e = [0] * n
                e[i] = 1
                terms[tuple(e)] = _norm(c)
        return cls._raw(n, terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and (0,) * self.nvars in self.terms)

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def _same(self, other: "Polynomial"):
        if self.nvars != other.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            self._same(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        t = dict(self.terms)
        for e, c in other.terms.items():
            s = t.get(e, 0) + c
            if s:
                t[e] = _norm(s)
            else:
                t.pop(e, None)
        return Polynomial._raw(self.nvars, t)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Polynomial":
        if not c:
            return Polynomial.zero(self.nvars)
        return Polynomial._raw(self.nvars, {e: _norm(v * c) for e, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        t: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = t.get(e, 0) + c1 * c2
                if s:
                    t[e] = s
                else:
                    del t[e]
        return Polynomial._raw(self.nvars, {e: _norm(c) for e, c in t.items()})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = Polynomial.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.nvars, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def sorted_terms(self) -> list:
        """Terms in descending graded-lex order (a1 > a2 > ... > an)."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                f"a{i}" if k == 1 else f"a{i}^{k}"
                for i, k in enumerate(e, start=1) if k
            )
            if not mono:
                s = _fmt_coeff(c)
            elif c == 1:
                s = mono
            elif c == -1:
                s = "-" + mono
            else:
                s = f"{_fmt_coeff(c)}*{mono}"
            pieces.append(s)
        out = pieces[0]
        for s in pieces[1:]:
            out += " - " + s[1:] if s.startswith("-") else " + " + s
        return out

    def __repr__(self):
        return f"Polynomial({self})"

    def to_json_obj(self) -> dict:
        return {
            "vars": [f"a{i}" for i in range(1, self.nvars + 1)],
            "terms": [{"c": _fmt_coeff(c), "e": list(e)} for e, c in self.sorted_terms()],
        }

    @classmethod
    def from_json_obj(cls, obj) -> "Polynomial":
        n = len(obj["vars"])
        return cls(n, {tuple(t["e"]): Fraction(t["c"]) for t in obj["terms"]})

    def substitute_linear(self, forms: Sequence["Polynomial"]) -> "Polynomial":
        """Replace variable a_i by the linear form ``forms[i-1]``."""
        cache: dict = {}

        def power(i, k):
            key = (i, k)
            if key not in cache:
                cache[key] = forms[i] ** k
            return cache[key]

        out = Polynomial.zero(self.nvars)
        for e, c in self.terms.items():
            term = Polynomial.constant(self.nvars, c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            out = out + term
        return out

    def evaluate(self, point: Sequence) -> Fraction:
        total = Fraction(0)
        for e, c in self.terms.items():
            v = Fraction(c)
            for x, k in zip(point, e):
                if k:
                    v *= Fraction(x) ** k
            total += v
        return total


def _linear_coeffs(L) -> list:
    if isinstance(L, Polynomial):
        if L.degree() != 1 or any(sum(e) != 1 for e in L.terms):
            raise ValueError(f"{L} is not a linear form")
        coeffs = [0] * L.nvars
        for e, c in L.terms.items():
            coeffs[e.index(1)] = c
        return coeffs
    if isinstance(L, Root):
        return list(L.alpha)
    return list(L)


def divide_by_linear(p: Polynomial, L) -> tuple[Polynomial | None, bool]:
    """
    Exact division of ``p`` by a linear form ``L`` (coefficient list, Root or
    degree-1 Polynomial).

    Synthetic division in the leading variable of ``L`` (the smallest index
    with a nonzero coefficient). Returns ``(quotient, True)`` when ``L``
    divides ``p`` and ``(None, False)`` otherwise.
    """
    coeffs = _linear_coeffs(L)
    if len(coeffs) != p.nvars:
        raise ValueError("variable count mismatch")
    if not any(coeffs):
        raise ValueError("cannot divide by the zero form")
    t = next(i for i, c in enumerate(coeffs) if c)
    lead = coeffs[t]
    rest = [(i, c) for i, c in enumerate(coeffs) if c and i != t]

    # bucket monomials by degree in the leading variable
    levels: dict[int, dict] = {}
    for e, c in p.terms.items():
        levels.setdefault(e[t], {})[e] = c
    q: dict = {}
    top = max(levels, default=0)
    int_lead = type(lead) is int
    for d in range(top, 0, -1):
        cur = levels.get(d)
        if not cur:
            continue
        below = levels.setdefault(d - 1, {})
        for e, c in cur.items():
            if not c:
                continue
            if int_lead and type(c) is int:
                qc, r = divmod(c, lead)
                if r:
                    qc = Fraction(c, lead)
            else:
                qc = _norm(Fraction(c) / lead)
            qe = e[:t] + (d - 1,) + e[t + 1:]
            q[qe] = qc
            for i, b in rest:
                ne = qe[:i] + (qe[i] + 1,) + qe[i + 1:]
                s = below.get(ne, 0) - qc * b
                below[ne] = s
    if any(levels.get(0, {}).values()):
        return None, False
    return Polynomial._raw(p.nvars, {e: _norm(c) for e, c in q.items() if c}), True


def root_form(r: Root) -> Polynomial:
    """A positive root as a linear form in the simple roots."""
    return Polynomial.linear(r.alpha)


def _act_matrix(w) -> list[Polynomial]:
    from .weyl import act_on_root  # local import: weyl does not need exactalg
    rs = w.system
    forms = []
    for sr in rs.simple_roots:
        s, r = act_on_root(w, sr)
        forms.append(Polynomial.linear([s * c for c in r.alpha]))
    return forms


def weyl_act(w, p):
    """
    ``w . p`` for a Polynomial or RationalFunction: each simple root a_i is
    replaced by the expansion of ``w(a_i)``.
    """
    if isinstance(p, RationalFunction):
        return p.act(w)
    if p.nvars != w.rank:
        raise ValueError("polynomial and group element live in different systems")
    if p.is_constant():
        return p
    return p.substitute_linear(_act_matrix(w))


class RationalFunction:
    """
    ``num / prod(den)`` where ``den`` is a multiset of positive roots.

    Always normalised: no denominator root divides the numerator, and zero
    has an empty denominator. With these rules the representation is
    canonical, so equality is structural.
    """
    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial, den: Iterable[Root] | Counter = (), *, normalized=False):
        self.num = num
        den = Counter(den)
        if not normalized:
            num, den = _normalize(num, den)
            self.num = num
        self.den = den

    @classmethod
    def constant(cls, nvars, c=1):
        return cls(Polynomial.constant(nvars, c), normalized=True)

    @classmethod
    def zero(cls, nvars):
        return cls(Polynomial.zero(nvars), normalized=True)

    @property
    def nvars(self):
        return self.num.nvars

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return not self.den

    def den_polynomial(self) -> Polynomial:
        out = Polynomial.constant(self.nvars, 1)
        for r, k in self.den.items():
            out = out * root_form(r) ** k
        return out

    def __add__(self, other):
        if isinstance(other, (int, Fraction, Polynomial)):
            other = RationalFunction._lift(self.nvars, other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        lcm = self.den | other.den
        a = self.num * _prod_roots(self.nvars, lcm - self.den)
        b = other.num * _prod_roots(self.nvars, lcm - other.den)
        return RationalFunction(a + b, lcm)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, normalized=True)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Polynomial)):
            other = RationalFunction._lift(self.nvars, other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RationalFunction.zero(self.nvars)
        return RationalFunction(self.num * other.num, self.den + other.den)

    __rmul__ = __mul__

    def divide_by_root(self, r: Root, sign: int = 1) -> "RationalFunction":
        """``self / (sign * r)``."""
        if self.is_zero():
            return self
        num = self.num if sign > 0 else -self.num
        den = self.den.copy()
        den[r] += 1
        return RationalFunction(num, den)

    def act(self, w) -> "RationalFunction":
        from .weyl import act_on_root
        num = weyl_act(w, self.num)
        den = Counter()
        sign = 1
        for r, k in self.den.items():
            s, r2 = act_on_root(w, r)
            den[r2] += k
            if s < 0 and k % 2:
                sign = -sign
        if sign < 0:
            num = -num
        return RationalFunction(num, den, normalized=True)

    @staticmethod
    def _lift(nvars, x):
        if isinstance(x, Polynomial):
            return RationalFunction(x, normalized=True)
        return RationalFunction.constant(nvars, x)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Polynomial)):
            other = RationalFunction._lift(self.nvars, other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, frozenset(self.den.items())))

    def _den_str(self) -> str:
        parts = []
        for r, k in sorted(self.den.items(), key=lambda t: (sum(t[0].alpha), [-a for a in t[0].alpha])):
            s = r.alpha_name
            if "+" in s:
                s = f"({s})"
            parts.append(s if k == 1 else f"{s}^{k}")
        return "*".join(parts)

    def __str__(self):
        if not self.den:
            return str(self.num)
        num = str(self.num)
        if len(self.num.terms) > 1:
            num = f"({num})"
        return f"{num}/({self._den_str()})"

    def __repr__(self):
        return f"RationalFunction({self})"

    def to_json_obj(self) -> dict:
        obj = self.num.to_json_obj()
        obj["den"] = sorted(r.name for r in self.den.elements())
        return obj


def _prod_roots(nvars, multiset: Counter) -> Polynomial:
    out = Polynomial.constant(nvars, 1)
    for r, k in multiset.items():
        for _ in range(k):
            out = out * root_form(r)
    return out


def _normalize(num: Polynomial, den: Counter):
    if num.is_zero():
        return num, Counter()
    den = +den
    for r in list(den):
        while den[r]:
            q, ok = divide_by_linear(num, r.alpha)
            if not ok:
                break
            num = q
            den[r] -= 1
    return num, +den


def inv_linear(f: RationalFunction, rs: RootSystem, form) -> RationalFunction:
    """``f / form`` where ``form`` is plus or minus a positive root of ``rs``."""
    coeffs = tuple(_linear_coeffs(form))
    if not any(coeffs):
        raise ZeroDivisionError("division by the zero form")
    for r in rs.positive_roots:
        if r.alpha == coeffs:
            return f.divide_by_root(r, 1)
        if tuple(-c for c in r.alpha) == coeffs:
            return f.divide_by_root(r, -1)
    raise ValueError(f"{form} is not a signed root of {rs}")
