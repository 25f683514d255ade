"""Exact arithmetic in the cyclotomic field Q(z) where z is a primitive cube root of unity.

Every coefficient in the workbench lives in this field.  An element is stored
as a + b*z with rational a, b and the reduction rule z**2 = -1 - z.  There is
no floating point anywhere: equality of two scalars is exact equality, and a
check that "passes" passes identically, not approximately.
"""

from __future__ import annotations

from gmpy2 import mpq

_ZERO_Q = mpq(0)
_ONE_Q = mpq(1)


class Scalar:
    """An element a + b*z of Q(z), z**2 + z + 1 = 0.

    Instances are immutable and hashable.  Arithmetic accepts ints and
    Fraction-like values anywhere a Scalar is expected.
    """

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0) -> None:
        object.__setattr__(self, "a", mpq(a))
        object.__setattr__(self, "b", mpq(b))

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    # -- constructors -------------------------------------------------

    @staticmethod
    def coerce(value) -> "Scalar":
        """Turn an int, mpq, or Scalar into a Scalar."""
        if isinstance(value, Scalar):
            return value
        return Scalar(value)

    # -- predicates ----------------------------------------------------

    def is_zero(self) -> bool:
        return self.a == _ZERO_Q and self.b == _ZERO_Q

    def is_rational(self) -> bool:
        return self.b == _ZERO_Q

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other) -> "Scalar":
        other = Scalar.coerce(other)
        return Scalar(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return Scalar(-self.a, -self.b)

    def __sub__(self, other) -> "Scalar":
        other = Scalar.coerce(other)
        return Scalar(self.a - other.a, self.b - other.b)

    def __rsub__(self, other) -> "Scalar":
        return Scalar.coerce(other) - self

    def __mul__(self, other) -> "Scalar":
        other = Scalar.coerce(other)
        # (a1 + b1 z)(a2 + b2 z) = a1 a2 + (a1 b2 + b1 a2) z + b1 b2 z^2
        # and z^2 = -1 - z.
        cross = self.b * other.b
        return Scalar(self.a * other.a - cross,
                      self.a * other.b + self.b * other.a - cross)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        """Multiplicative inverse.

        Uses the norm N(a + b z) = a^2 - a b + b^2, which is nonzero for any
        nonzero element of the field.
        """
        norm = self.a * self.a - self.a * self.b + self.b * self.b
        if norm == _ZERO_Q:
            raise ZeroDivisionError("inverse of zero scalar")
        return Scalar((self.a - self.b) / norm, -self.b / norm)

    def __truediv__(self, other) -> "Scalar":
        return self * Scalar.coerce(other).inverse()

    def __rtruediv__(self, other) -> "Scalar":
        return Scalar.coerce(other) * self.inverse()

    def __pow__(self, n: int) -> "Scalar":
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def galois(self) -> "Scalar":
        """The nontrivial field automorphism z -> z**2 = -1 - z."""
        return Scalar(self.a - self.b, -self.b)

    # -- comparison / hashing -------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, type(_ONE_Q))):
            other = Scalar(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self) -> int:
        return hash((self.a, self.b))

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- serialization ---------------------------------------------------

    def to_json(self) -> list:
        """Four-integer form [a_num, a_den, b_num, b_den]."""
        return [int(self.a.numerator), int(self.a.denominator),
                int(self.b.numerator), int(self.b.denominator)]

    @staticmethod
    def from_json(data) -> "Scalar":
        an, ad, bn, bd = data
        return Scalar(mpq(an, ad), mpq(bn, bd))

    def __repr__(self) -> str:
        if self.b == _ZERO_Q:
            return str(self.a)
        if self.a == _ZERO_Q:
            return f"{self.b}*z" if self.b != _ONE_Q else "z"
        sign = "+" if self.b > 0 else "-"
        babs = abs(self.b)
        bpart = "z" if babs == _ONE_Q else f"{babs}*z"
        return f"{self.a}{sign}{bpart}"


ZERO = Scalar(0)
ONE = Scalar(1)
ZETA = Scalar(0, 1)
ZETA2 = ZETA * ZETA
