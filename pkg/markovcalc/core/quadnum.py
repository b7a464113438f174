"""Exact arithmetic in the quadratic field Q(sqrt 2)."""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from typing import Optional, Tuple, Union

import mpmath

from ..errors import DivisionByZero

RationalLike = Union[int, Fraction]

# Working precision for float conversion; cancellation is removed before mpmath
# sees the operands, so this only has to beat double rounding.
_FLOAT_PREC = 160


def _sign(value: RationalLike) -> int:
    return (value > 0) - (value < 0)


class QuadNum:
    """An element a + b*sqrt(2) of Q(sqrt 2).

    Both coefficients are held as normalized ``Fraction`` objects, so equal
    values always have identical fields and hash alike. Instances are
    immutable.
    """

    __slots__ = ("_a", "_b", "_hash")

    def __init__(self, a: Union[RationalLike, str] = 0, b: Union[RationalLike, str] = 0):
        """Initialize the number.

        Args:
            a: Rational coefficient of 1
            b: Rational coefficient of sqrt(2)
        """
        if type(a) is not Fraction:
            a = Fraction(a)
        if type(b) is not Fraction:
            b = Fraction(b)
        object.__setattr__(self, "_a", a)
        object.__setattr__(self, "_b", b)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("QuadNum is immutable")

    @property
    def a(self) -> Fraction:
        return self._a

    @property
    def b(self) -> Fraction:
        return self._b

    @classmethod
    def coerce(cls, value: Union["QuadNum", RationalLike]) -> "QuadNum":
        """Lift an int or Fraction into the field, passing QuadNum through."""
        if isinstance(value, QuadNum):
            return value
        if isinstance(value, (int, Rational)) and not isinstance(value, bool):
            return cls(value)
        raise TypeError(f"cannot lift {type(value).__name__} into Q(sqrt2)")

    @classmethod
    def sqrt2(cls) -> "QuadNum":
        return cls(0, 1)

    @classmethod
    def from_text(cls, text: str) -> "QuadNum":
        """Parse the textual forms `a` or `a+b*sqrt2` (any constant expression)."""
        from ..expr.parser import parse_constant
        return parse_constant(text)

    # Arithmetic

    def __add__(self, other):
        try:
            other = QuadNum.coerce(other)
        except TypeError:
            return NotImplemented
        return QuadNum(self._a + other._a, self._b + other._b)

    __radd__ = __add__

    def __neg__(self) -> "QuadNum":
        return QuadNum(-self._a, -self._b)

    def __pos__(self) -> "QuadNum":
        return self

    def __sub__(self, other):
        try:
            other = QuadNum.coerce(other)
        except TypeError:
            return NotImplemented
        return QuadNum(self._a - other._a, self._b - other._b)

    def __rsub__(self, other):
        try:
            other = QuadNum.coerce(other)
        except TypeError:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        try:
            other = QuadNum.coerce(other)
        except TypeError:
            return NotImplemented
        if not self._b and not other._b:
            return QuadNum(self._a * other._a)
        return QuadNum(
            self._a * other._a + 2 * self._b * other._b,
            self._a * other._b + self._b * other._a,
        )

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        """The field norm a^2 - 2 b^2; zero only for zero."""
        return self._a * self._a - 2 * self._b * self._b

    def conjugate(self) -> "QuadNum":
        return QuadNum(self._a, -self._b)

    def __truediv__(self, other):
        try:
            other = QuadNum.coerce(other)
        except TypeError:
            return NotImplemented
        if other.is_zero():
            raise DivisionByZero()
        if not other._b:
            return QuadNum(self._a / other._a, self._b / other._a)
        n = other.norm()
        num = self * other.conjugate()
        return QuadNum(num._a / n, num._b / n)

    def __rtruediv__(self, other):
        try:
            other = QuadNum.coerce(other)
        except TypeError:
            return NotImplemented
        return other / self

    def __pow__(self, exponent: int) -> "QuadNum":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return QuadNum(1) / (self ** -exponent)
        result = QuadNum(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __abs__(self) -> "QuadNum":
        return -self if self.sign() < 0 else self

    # Predicates and comparison

    def is_zero(self) -> bool:
        return not self._a and not self._b

    def is_rational(self) -> bool:
        return not self._b

    def sign(self) -> int:
        """Sign of the real value, decided in integers.

        Returns:
            -1, 0 or +1
        """
        sa, sb = _sign(self._a), _sign(self._b)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # opposite signs: compare a^2 against 2 b^2
        lhs = self._a * self._a
        rhs = 2 * self._b * self._b
        return sa if lhs > rhs else sb

    def __eq__(self, other) -> bool:
        if isinstance(other, QuadNum):
            return self._a == other._a and self._b == other._b
        if isinstance(other, (int, Rational)) and not isinstance(other, bool):
            return not self._b and self._a == other
        return NotImplemented

    def _compare(self, other) -> Optional[int]:
        """sign(self - other), or None when other is not a field element."""
        try:
            other = QuadNum.coerce(other)
        except TypeError:
            return None
        if not self._b and not other._b:
            return (self._a > other._a) - (self._a < other._a)
        return QuadNum(self._a - other._a, self._b - other._b).sign()

    def __lt__(self, other) -> bool:
        c = self._compare(other)
        return NotImplemented if c is None else c < 0

    def __le__(self, other) -> bool:
        c = self._compare(other)
        return NotImplemented if c is None else c <= 0

    def __gt__(self, other) -> bool:
        c = self._compare(other)
        return NotImplemented if c is None else c > 0

    def __ge__(self, other) -> bool:
        c = self._compare(other)
        return NotImplemented if c is None else c >= 0

    def __hash__(self) -> int:
        if self._hash is None:
            h = hash(self._a) if not self._b else hash((self._a, self._b))
            object.__setattr__(self, "_hash", h)
        return self._hash

    def __bool__(self) -> bool:
        return not self.is_zero()

    # Conversion

    def floor(self) -> int:
        """Exact floor of a + b*sqrt(2) using integer square roots."""
        if not self._b:
            return math.floor(self._a)
        den = self._a.denominator * self._b.denominator // math.gcd(
            self._a.denominator, self._b.denominator
        )
        num_a = self._a.numerator * (den // self._a.denominator)
        num_b = self._b.numerator * (den // self._b.denominator)
        # floor(sqrt(2 B^2)) is never exact for B != 0
        root = math.isqrt(2 * num_b * num_b)
        n = num_a + root if num_b > 0 else num_a - root - 1
        return n // den

    def ceil(self) -> int:
        return -((-self).floor())

    def to_float(self) -> float:
        """Nearest float64 to a + b*sqrt(2); overflow gives +-inf."""
        if not self._b:
            try:
                return float(self._a)
            except OverflowError:
                return math.copysign(math.inf, _sign(self._a))
        with mpmath.workprec(_FLOAT_PREC):
            root = mpmath.sqrt(2)
            if _sign(self._a) * _sign(self._b) >= 0:
                value = mpmath.mpf(self._a.numerator) / self._a.denominator
                value += mpmath.mpf(self._b.numerator) / self._b.denominator * root
            else:
                # (a^2 - 2b^2) / (a - b sqrt2): denominator terms share a sign
                n = self.norm()
                den = mpmath.mpf(self._a.numerator) / self._a.denominator
                den -= mpmath.mpf(self._b.numerator) / self._b.denominator * root
                value = (mpmath.mpf(n.numerator) / n.denominator) / den
            try:
                return float(value)
            except OverflowError:
                return math.copysign(math.inf, self.sign())

    def __float__(self) -> float:
        return self.to_float()

    def as_pair(self) -> Tuple[Fraction, Fraction]:
        return self._a, self._b

    def to_text(self) -> str:
        """Render as `a` or `a+b*sqrt2` with `p/q` rationals."""
        if not self._b:
            return str(self._a)
        b = str(abs(self._b)) + "*sqrt2"
        if not self._a:
            return b if self._b > 0 else "-" + b
        return f"{self._a}{'+' if self._b > 0 else '-'}{b}"

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"QuadNum({str(self._a)!r}, {str(self._b)!r})"


ZERO = QuadNum(0)
ONE = QuadNum(1)
SQRT2 = QuadNum(0, 1)


def add(p: QuadNum, q: QuadNum) -> QuadNum:
    return p + q


def sub(p: QuadNum, q: QuadNum) -> QuadNum:
    return p - q


def mul(p: QuadNum, q: QuadNum) -> QuadNum:
    return p * q


def div(p: QuadNum, q: QuadNum) -> QuadNum:
    """Exact quotient.

    Raises:
        DivisionByZero: if q is zero
    """
    return p / q


def sign(q: QuadNum) -> int:
    return q.sign()


def is_rational(q: QuadNum) -> bool:
    return q.is_rational()


def to_float(q: QuadNum) -> float:
    return q.to_float()
