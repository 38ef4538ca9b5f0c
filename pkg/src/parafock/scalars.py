"""Exact scalar arithmetic: rationals, sums of square roots, Pochhammer symbols.

Every number handled here is a rational linear combination

    c1*sqrt(d1) + c2*sqrt(d2) + ...

with the ``c_i`` arbitrary-precision rationals and the ``d_i`` distinct
squarefree positive integers (``d = 1`` encodes the rational part).  Square
roots of distinct squarefree integers are linearly independent over the
rationals, so structural equality of the canonical term list is exact
equality of real numbers.  This ring is closed under the sums, products and
single-radical divisions that matrix-element formulas require; nothing
beyond that (nested radicals, roots of unity) is supported.

Rational numbers are ``fractions.Fraction`` throughout: always reduced,
positive denominator, arbitrary precision.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

Rational = Union[int, Fraction]


@lru_cache(maxsize=None)
def squarefree_split(n: int) -> tuple[int, int]:
    """Split ``n = s*s*r`` with ``r`` squarefree; returns ``(s, r)``.

    Trial division up to sqrt(n); fine for the desk-scale radicands
    produced here (products of small labels, well below 10**6).
    """
    if n <= 0:
        raise ValueError(f"radicand must be positive, got {n}")
    s, r = 1, 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            s *= d ** (e // 2)
            if e % 2:
                r *= d
        d += 1 if d == 2 else 2
    return s, r * n


class RadicalScalar:
    """Canonical sum of rational multiples of square roots of squarefree integers.

    Immutable and hashable; all operations are pure functions, so values can
    be shared freely (including across threads).  Construct from a rational,
    from ``(coefficient, radicand)`` terms, or with :func:`sqrt_rational`.
    """

    __slots__ = ("_terms",)

    _terms: tuple[tuple[int, Fraction], ...]  # (radicand, coefficient), radicand ascending

    def __init__(self, value: Rational = 0):
        c = Fraction(value)
        object.__setattr__(self, "_terms", ((1, c),) if c else ())

    def __setattr__(self, name, value):  # pragma: no cover - guards immutability
        raise AttributeError("RadicalScalar is immutable")

    @classmethod
    def _raw(cls, terms: tuple[tuple[int, Fraction], ...]) -> "RadicalScalar":
        out = cls.__new__(cls)
        object.__setattr__(out, "_terms", terms)
        return out

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[Rational, int]]) -> "RadicalScalar":
        """Build from (coefficient, radicand) pairs; radicands need not be squarefree."""
        acc: dict[int, Fraction] = {}
        for coeff, rad in terms:
            c = Fraction(coeff)
            if not c:
                continue
            s, r = squarefree_split(rad)
            if s != 1:
                c = c * s
            acc[r] = acc.get(r, _F0) + c
        return cls._raw(tuple(sorted((d, c) for d, c in acc.items() if c)))

    @property
    def terms(self) -> tuple[tuple[Fraction, int], ...]:
        """Canonical (coefficient, radicand) pairs, radicand ascending."""
        return tuple((c, d) for d, c in self._terms)

    def is_rational(self) -> bool:
        return all(d == 1 for d, _ in self._terms)

    def as_fraction(self) -> Fraction:
        if not self._terms:
            return _F0
        if len(self._terms) == 1 and self._terms[0][0] == 1:
            return self._terms[0][1]
        raise ValueError(f"not a rational value: {self}")

    # -- ring operations ---------------------------------------------------

    def _coerce(self, other) -> "RadicalScalar | None":
        if isinstance(other, RadicalScalar):
            return other
        if isinstance(other, (int, Fraction)):
            return RadicalScalar(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        acc = dict(self._terms)
        for d, c in o._terms:
            acc[d] = acc.get(d, _F0) + c
        return RadicalScalar._raw(tuple(sorted((d, c) for d, c in acc.items() if c)))

    __radd__ = __add__

    def __neg__(self):
        return RadicalScalar._raw(tuple((d, -c) for d, c in self._terms))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        acc: dict[int, Fraction] = {}
        for d1, c1 in self._terms:
            for d2, c2 in o._terms:
                if d1 == 1:
                    d, c = d2, c1 * c2
                elif d2 == 1:
                    d, c = d1, c1 * c2
                else:
                    # sqrt(d1)*sqrt(d2) = g*sqrt(d1*d2/g^2); squarefree inputs
                    # with g = gcd keep the product squarefree.
                    g = math.gcd(d1, d2)
                    d, c = (d1 // g) * (d2 // g), c1 * c2 * g
                acc[d] = acc.get(d, _F0) + c
        return RadicalScalar._raw(tuple(sorted((d, c) for d, c in acc.items() if c)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division by zero")
            inv = Fraction(1, 1) / Fraction(other)
            return RadicalScalar._raw(tuple((d, c * inv) for d, c in self._terms))
        if isinstance(other, RadicalScalar):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def inverse(self) -> "RadicalScalar":
        """Multiplicative inverse; defined for single-term values only.

        1/(c*sqrt(d)) = sqrt(d)/(c*d).  Multi-term inverses would leave the
        supported ring, and nothing here needs them.
        """
        if len(self._terms) != 1:
            raise ValueError(f"can only invert single-term values, got {self}")
        d, c = self._terms[0]
        return RadicalScalar._raw(((d, Fraction(1, 1) / (c * d)),))

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self):
        return hash(self._terms)

    def __float__(self):
        return sum(float(c) * math.sqrt(d) for d, c in self._terms)

    def to_float(self) -> float:
        """Floating-point value, for human-readable diagnostics only."""
        return float(self)

    # -- rendering ---------------------------------------------------------

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for d, c in self._terms:
            if d == 1:
                body = str(abs(c))
            elif abs(c) == 1:
                body = f"sqrt({d})"
            else:
                body = f"{abs(c)}*sqrt({d})"
            parts.append((c < 0, body))
        out = ("-" if parts[0][0] else "") + parts[0][1]
        for neg, body in parts[1:]:
            out += (" - " if neg else " + ") + body
        return out

    def __repr__(self):
        return f"RadicalScalar({self})"


_F0 = Fraction(0)

ZERO = RadicalScalar(0)
ONE = RadicalScalar(1)


def sqrt_rational(q: Rational) -> RadicalScalar:
    """Exact square root of a nonnegative rational, as a single-term value.

    Raises ValueError on negative input: a negative radicand means some
    matrix-element formula was evaluated outside its validity range.
    """
    q = Fraction(q)
    if q < 0:
        raise ValueError(f"negative radicand: {q}")
    if not q:
        return ZERO
    s, r = squarefree_split(q.numerator * q.denominator)
    return RadicalScalar._raw(((r, Fraction(s, q.denominator)),))


def pochhammer(a: Rational, k: int) -> Fraction:
    """Ascending factorial a*(a+1)*...*(a+k-1), exact; empty product is 1."""
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    a = Fraction(a)
    out = Fraction(1)
    for i in range(k):
        out *= a + i
    return out
