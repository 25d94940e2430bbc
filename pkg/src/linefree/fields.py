"""Exact coefficient arithmetic: Q and real quadratic extensions Q(sqrt n).

Rationals are plain ``fractions.Fraction`` (already canonical).  Elements of
Q(sqrt n) are pairs a + b*sqrt(n) of rationals; arithmetic is closed because
n is a fixed square-free integer >= 2.  Both kinds interoperate with ``int``
and ``Fraction`` through the usual operator protocol, so generic code (e.g.
the dense linear algebra) can stay field-agnostic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Union

from .errors import UnsupportedField

Rational = Union[int, Fraction]
Element = Union[Fraction, "QuadElement"]


def is_square_free(n: int) -> bool:
    if n < 1:
        return False
    d = 2
    while d * d <= n:
        if n % (d * d) == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The coefficient field of an arrangement.

    ``n is None`` means Q; otherwise the field is Q(sqrt n) with n a
    square-free integer >= 2.
    """

    n: int | None = None

    def __post_init__(self):
        if self.n is not None:
            if self.n < 2:
                raise UnsupportedField(f"sqrt({self.n}): need n >= 2")
            if not is_square_free(self.n):
                raise UnsupportedField(f"sqrt({self.n}): n must be square-free")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(None)

    @classmethod
    def quadratic(cls, n: int) -> "FieldSpec":
        return cls(n)

    @property
    def is_quadratic(self) -> bool:
        return self.n is not None

    def zero(self) -> Element:
        return self.element(0)

    def one(self) -> Element:
        return self.element(1)

    def element(self, a: Rational, b: Rational = 0) -> Element:
        """Build a + b*sqrt(n); b must be 0 over the rationals."""
        if self.n is None:
            if b:
                raise UnsupportedField("irrational part over Q")
            return Fraction(a)
        return QuadElement(Fraction(a), Fraction(b), self.n)

    def coerce(self, value) -> Element:
        """Accept int/Fraction/QuadElement and return an element of this field."""
        if isinstance(value, QuadElement):
            if self.n is None:
                if value.b:
                    raise UnsupportedField(f"{value} does not lie in Q")
                return value.a
            if value.n != self.n:
                raise UnsupportedField(f"{value} lies in Q(sqrt {value.n}), not Q(sqrt {self.n})")
            return value
        if isinstance(value, (int, Fraction)):
            return self.element(value)
        raise UnsupportedField(f"cannot interpret {value!r} as an element of {self}")

    def __str__(self):
        return "Q" if self.n is None else f"Q(sqrt {self.n})"


@dataclass(frozen=True)
class QuadElement:
    """a + b*sqrt(n) with rational a, b and square-free n >= 2."""

    a: Fraction
    b: Fraction
    n: int

    def _lift(self, other) -> "QuadElement | None":
        if isinstance(other, QuadElement):
            return other if other.n == self.n else None
        if isinstance(other, (int, Fraction)):
            return QuadElement(Fraction(other), Fraction(0), self.n)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QuadElement(self.a + o.a, self.b + o.b, self.n)

    __radd__ = __add__

    def __neg__(self):
        return QuadElement(-self.a, -self.b, self.n)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QuadElement(self.a - o.a, self.b - o.b, self.n)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QuadElement(
            self.a * o.a + self.n * self.b * o.b,
            self.a * o.b + self.b * o.a,
            self.n,
        )

    __rmul__ = __mul__

    def inverse(self) -> "QuadElement":
        # norm a^2 - n b^2 is nonzero for nonzero elements: sqrt(n) irrational.
        nrm = self.a * self.a - self.n * self.b * self.b
        if not nrm:
            raise ZeroDivisionError("division by zero in quadratic field")
        return QuadElement(self.a / nrm, -self.b / nrm, self.n)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __eq__(self, other):
        if isinstance(other, QuadElement):
            return self.n == other.n and self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return not self.b and self.a == other
        return NotImplemented

    def __hash__(self):
        # Rational-valued elements must hash like the rational they equal.
        if not self.b:
            return hash(self.a)
        return hash((self.a, self.b, self.n))

    def conjugate(self) -> "QuadElement":
        return QuadElement(self.a, -self.b, self.n)

    @property
    def is_rational(self) -> bool:
        return not self.b

    def sort_key(self):
        return (self.a, self.b)

    def __str__(self):
        if not self.b:
            return str(self.a)
        if not self.a:
            return f"{self.b}*sqrt({self.n})"
        return f"{self.a}{'+' if self.b > 0 else ''}{self.b}*sqrt({self.n})"

    def __repr__(self):
        return f"QuadElement({self.a!r}, {self.b!r}, {self.n})"


def sort_key(x: Element):
    """Deterministic (lexicographic, not numeric for quadratic elements) key."""
    if isinstance(x, QuadElement):
        return x.sort_key()
    return (Fraction(x), Fraction(0))


def components(x: Element) -> tuple[Fraction, Fraction]:
    """Split x into (rational part, sqrt-coefficient part)."""
    if isinstance(x, QuadElement):
        return (x.a, x.b)
    return (Fraction(x), Fraction(0))


def perfect_square_root(m: int) -> int | None:
    """Integer square root of m if m is a perfect square, else None."""
    if m < 0:
        return None
    r = isqrt(m)
    return r if r * r == m else None
