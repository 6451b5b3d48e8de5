"""
Exact scalars for Temperley-Lieb computations.

Everything lives in the ring Z[q, q^-1, s, s^-1] of integer Laurent polynomials
and its field of fractions.  Type A quantities simply never mention s.

``LaurentPoly`` is a small immutable sparse polynomial keyed by exponent pairs
``(eq, es)``.  ``Scalar`` is a fraction of two such polynomials; internally it is
held as a pair of coprime ordinary polynomials (backed by FLINT) so that long
sums of fractions do not blow up.
"""

from __future__ import annotations

import math
from types import MappingProxyType
from typing import Iterable, Mapping, Union

import flint

Exponent = tuple[int, int]

_CTX = flint.fmpz_mpoly_ctx.get(("q", "s"), "lex")


class ScalarError(ArithmeticError):
    pass


class ZeroInversionError(ScalarError, ZeroDivisionError):
    """Raised when inverting (or dividing by) the zero scalar."""


class ZeroDenominatorError(ScalarError, ZeroDivisionError):
    """Raised when a fraction is built with a zero denominator."""


class LaurentPoly:
    """Immutable integer Laurent polynomial in q and s."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, int] | None = None):
        clean = {}
        if terms:
            for (eq, es), c in terms.items():
                c = int(c)
                if c:
                    clean[(int(eq), int(es))] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _trusted(cls, terms: dict) -> LaurentPoly:
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def monomial(cls, coeff: int = 1, eq: int = 0, es: int = 0) -> LaurentPoly:
        return cls({(eq, es): coeff})

    @classmethod
    def coerce(cls, value: Union[int, LaurentPoly]) -> LaurentPoly:
        if isinstance(value, LaurentPoly):
            return value
        if isinstance(value, int):
            return cls({(0, 0): value})
        raise TypeError(f"cannot interpret {value!r} as a Laurent polynomial")

    @property
    def terms(self) -> Mapping[Exponent, int]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __add__(self, other):
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentPoly._trusted(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._trusted({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        out: dict[Exponent, int] = {}
        for (a, b), c in self._terms.items():
            for (x, y), d in other._terms.items():
                key = (a + x, b + y)
                out[key] = out.get(key, 0) + c * d
        return LaurentPoly._trusted({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers are supported")
        result = LaurentPoly.monomial()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.coerce(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def invert_q(self) -> LaurentPoly:
        """Substitute q -> 1/q."""
        return LaurentPoly._trusted({(-a, b): c for (a, b), c in self._terms.items()})

    def shift(self, dq: int, ds: int) -> LaurentPoly:
        """Multiply by the monomial q^dq s^ds."""
        return LaurentPoly._trusted({(a + dq, b + ds): c for (a, b), c in self._terms.items()})

    def min_exponents(self) -> Exponent:
        if not self._terms:
            raise ValueError("the zero polynomial has no exponents")
        return (min(a for a, _ in self._terms), min(b for _, b in self._terms))

    def content(self) -> int:
        return math.gcd(*self._terms.values()) if self._terms else 0

    def sorted_terms(self) -> list[tuple[Exponent, int]]:
        return sorted(self._terms.items())

    def to_json(self) -> list:
        return [[str(c), a, b] for (a, b), c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data: Iterable) -> LaurentPoly:
        terms: dict[Exponent, int] = {}
        for item in data:
            c, a, b = item
            key = (int(a), int(b))
            if key in terms:
                raise ValueError(f"duplicate exponent {key} in polynomial JSON")
            terms[key] = int(c)
        return cls(terms)

    def format(self, latex: bool = False) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for (a, b), c in sorted(self._terms.items(), key=lambda t: (-t[0][0], -t[0][1])):
            mono = _format_monomial(a, b, latex)
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}{mono}" if latex else f"{mag}*{mono}"
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"LaurentPoly({self.format()!r})"


def _format_monomial(a: int, b: int, latex: bool) -> str:
    parts = []
    for var, e in (("q", a), ("s", b)):
        if e == 0:
            continue
        if e == 1:
            parts.append(var)
        elif latex:
            parts.append(f"{var}^{{{e}}}")
        else:
            parts.append(f"{var}^{e}")
    return "".join(parts) if latex else "*".join(parts)


Q = LaurentPoly.monomial(1, 1, 0)
S = LaurentPoly.monomial(1, 0, 1)


def qint(n: int) -> LaurentPoly:
    """The balanced quantum integer [n] = q^(n-1) + q^(n-3) + ... + q^(1-n)."""
    if n < 0:
        raise ValueError(f"quantum integer [n] is undefined for negative n={n}")
    return LaurentPoly({(n - 1 - 2 * k, 0): 1 for k in range(n)})


def qint_b(n: int) -> LaurentPoly:
    """Type B quantum integer: [0]_s = 1 and [n]_s = q^(n-1) s + q^(1-n) s^-1."""
    if n < 0:
        raise ValueError(f"quantum integer [n]_s is undefined for negative n={n}")
    if n == 0:
        return LaurentPoly.monomial()
    return LaurentPoly({(n - 1, 1): 1, (1 - n, -1): 1})


def _to_flint(p: LaurentPoly) -> tuple[flint.fmpz_mpoly, Exponent]:
    """Split p = q^a s^b * P with P an ordinary polynomial."""
    if not p._terms:
        return _CTX.from_dict({}), (0, 0)
    a, b = p.min_exponents()
    return _CTX.from_dict({(x - a, y - b): c for (x, y), c in p._terms.items()}), (a, b)


def _from_flint(p: flint.fmpz_mpoly, dq: int = 0, ds: int = 0) -> LaurentPoly:
    return LaurentPoly._trusted({(int(a) + dq, int(b) + ds): int(c) for (a, b), c in p.to_dict().items()})


def _monomial_poly(a: int, b: int) -> flint.fmpz_mpoly:
    return _CTX.from_dict({(a, b): 1})


class Scalar:
    """
    An element of Q(q, s), kept as num/den with num, den coprime in Z[q, s].

    The public ``num``/``den`` pair is the canonical Laurent form: den carries
    minimal exponents (0, 0), the joint integer content is 1 and the
    coefficient of den at its lexicographically smallest exponent is positive.
    Equality is tested by cross-multiplication.
    """

    __slots__ = ("_n", "_d")

    def __init__(self, num: Union[int, LaurentPoly] = 0, den: Union[int, LaurentPoly] = 1):
        num = LaurentPoly.coerce(num)
        den = LaurentPoly.coerce(den)
        if den.is_zero():
            raise ZeroDenominatorError("fraction with zero denominator")
        n, (na, nb) = _to_flint(num)
        d, (da, db) = _to_flint(den)
        dq, ds = na - da, nb - db
        # move the leftover monomial to whichever side keeps exponents non-negative
        n = n * _monomial_poly(max(dq, 0), max(ds, 0))
        d = d * _monomial_poly(max(-dq, 0), max(-ds, 0))
        self._n, self._d = _reduce(n, d)

    @classmethod
    def _raw(cls, n, d) -> Scalar:
        x = cls.__new__(cls)
        x._n, x._d = n, d
        return x

    @classmethod
    def coerce(cls, value) -> Scalar:
        if isinstance(value, Scalar):
            return value
        return cls(value)

    @property
    def num(self) -> LaurentPoly:
        return self.canonical()[0]

    @property
    def den(self) -> LaurentPoly:
        return self.canonical()[1]

    def canonical(self) -> tuple[LaurentPoly, LaurentPoly]:
        if self._n.is_zero():
            return LaurentPoly(), LaurentPoly.monomial()
        den = _from_flint(self._d)
        a, b = den.min_exponents()
        return _from_flint(self._n, -a, -b), den.shift(-a, -b)

    def is_zero(self) -> bool:
        return self._n.is_zero()

    def is_one(self) -> bool:
        return self._n == self._d

    def __bool__(self):
        return not self._n.is_zero()

    def __add__(self, other):
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        if self._n.is_zero():
            return other
        if other._n.is_zero():
            return self
        if self._d == other._d:
            return Scalar._raw(*_reduce(self._n + other._n, self._d))
        g = self._d.gcd(other._d)
        left, right = self._d // g, other._d // g
        return Scalar._raw(*_reduce(self._n * right + other._n * left, left * other._d))

    __radd__ = __add__

    def __neg__(self):
        return Scalar._raw(-self._n, self._d)

    def __sub__(self, other):
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        if self._n.is_zero() or other._n.is_zero():
            return ZERO
        g1 = self._n.gcd(other._d)
        g2 = other._n.gcd(self._d)
        n = (self._n // g1) * (other._n // g2)
        d = (self._d // g2) * (other._d // g1)
        return Scalar._raw(*_normalize_sign(n, d))

    __rmul__ = __mul__

    def inv(self) -> Scalar:
        if self._n.is_zero():
            raise ZeroInversionError("cannot invert the zero scalar")
        return Scalar._raw(*_normalize_sign(self._d, self._n))

    def __truediv__(self, other):
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        return Scalar.coerce(other) * self.inv()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inv() ** (-k)
        return Scalar._raw(*_normalize_sign(self._n ** k, self._d ** k))

    def __eq__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            other = Scalar(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self._n * other._d == other._n * self._d

    def __hash__(self):
        # reduced, sign-normalised form is unique, so hashing it agrees with __eq__
        return hash((str(self._n), str(self._d)))

    def to_json(self) -> dict:
        num, den = self.canonical()
        return {"num": num.to_json(), "den": den.to_json()}

    @classmethod
    def from_json(cls, data: Mapping) -> Scalar:
        return cls(LaurentPoly.from_json(data["num"]), LaurentPoly.from_json(data["den"]))

    def format(self, latex: bool = False) -> str:
        num, den = self.canonical()
        if den == 1:
            return num.format(latex)
        if latex:
            return f"\\frac{{{num.format(True)}}}{{{den.format(True)}}}"
        return f"({num.format()})/({den.format()})"

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"Scalar({self.format()!r})"


def _normalize_sign(n, d):
    # den's coefficient at its lexicographically smallest exponent must be positive
    smallest = min(d.to_dict().items())
    if smallest[1] < 0:
        return -n, -d
    return n, d


def _reduce(n, d):
    if n.is_zero():
        return n, _CTX.from_dict({(0, 0): 1})
    g = n.gcd(d)
    if not g.is_one():
        n, d = n // g, d // g
    return _normalize_sign(n, d)


ZERO = Scalar(0)
ONE = Scalar(1)


def canonicalize(num: LaurentPoly, den: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    """Canonical (num, den) Laurent pair for the fraction num/den."""
    return Scalar(num, den).canonical()


def qint_scalar(n: int) -> Scalar:
    return Scalar(qint(n))


def qint_b_scalar(n: int) -> Scalar:
    return Scalar(qint_b(n))


def quantum(flavor: str, n: int) -> Scalar:
    """[n] for type A, [n]_s for type B."""
    if flavor == "A":
        return qint_scalar(n)
    if flavor == "B":
        return qint_b_scalar(n)
    raise ValueError(f"unknown flavor {flavor!r}")


# loop values: plain loop, merging two dots, loop carrying a dot
LOOP = -Scalar(qint(2))
DOT_MERGE = -Scalar(qint_b(1))
DOTTED_LOOP = Scalar(LaurentPoly({(1, -1): 1, (-1, 1): 1}))
