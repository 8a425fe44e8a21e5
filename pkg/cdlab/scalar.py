# -*- coding: utf-8 -*-
# ------------------------------------------------------------------------------
#
#   Copyright 2024 cdlab contributors
#
#   Licensed under the Apache License, Version 2.0 (the "License");
#   you may not use this file except in compliance with the License.
#   You may obtain a copy of the License at
#
#       http://www.apache.org/licenses/LICENSE-2.0
#
#   Unless required by applicable law or agreed to in writing, software
#   distributed under the License is distributed on an "AS IS" BASIS,
#   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#   See the License for the specific language governing permissions and
#   limitations under the License.
#
# ------------------------------------------------------------------------------

"""
Exact arithmetic in the ordered field Q(sqrt 2).

A `Scalar` is `p + q*sqrt(2)` with `p` and `q` arbitrary precision rationals.
The literal form used on the wire is `RAT ( (+|-) RAT? s2 )?`, e.g.
`3/2-1/3s2`, `s2`, `-1/2s2`, `0`.
"""

from fractions import Fraction
from functools import total_ordering
from typing import Tuple, Union

from cdlab.errors import DomainError, ParseError


Rational = Union[int, Fraction]
ScalarLike = Union["Scalar", int, Fraction]

_ZERO = Fraction(0)


@total_ordering
class Scalar:
    """An element p + q*sqrt(2) of Q(sqrt 2)."""

    __slots__ = ("_p", "_q")

    def __init__(self, p: Rational = 0, q: Rational = 0) -> None:
        """
        Initialize the scalar.

        :param p: rational part.
        :param q: coefficient of sqrt(2).
        """
        self._p = p if isinstance(p, Fraction) else Fraction(p)
        self._q = q if isinstance(q, Fraction) else Fraction(q)

    @property
    def p(self) -> Fraction:
        """Rational part."""
        return self._p

    @property
    def q(self) -> Fraction:
        """Coefficient of sqrt(2)."""
        return self._q

    @classmethod
    def coerce(cls, value: ScalarLike) -> "Scalar":
        """Turn an int, Fraction or Scalar into a Scalar."""
        if isinstance(value, Scalar):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(value, 0)
        raise TypeError(f"Cannot interpret {value!r} as a Scalar")

    def is_zero(self) -> bool:
        """True iff p = 0 and q = 0."""
        return not self._p and not self._q

    def is_rational(self) -> bool:
        """True iff the sqrt(2) part vanishes."""
        return not self._q

    def field_norm(self) -> Fraction:
        """Return p^2 - 2q^2, the product with the Galois conjugate."""
        return self._p * self._p - 2 * self._q * self._q

    def galois_conjugate(self) -> "Scalar":
        """Return p - q*sqrt(2)."""
        return Scalar(self._p, -self._q)

    def sign(self) -> int:
        """Sign of the real number p + q*sqrt(2), compared exactly."""
        p, q = self._p, self._q
        if p >= 0 and q >= 0:
            return 0 if (not p and not q) else 1
        if p <= 0 and q <= 0:
            return -1
        # opposite signs: the larger square wins
        if p * p > 2 * q * q:
            return 1 if p > 0 else -1
        return 1 if q > 0 else -1

    def __repr__(self) -> str:
        """Debug representation."""
        return f"Scalar({self._p}, {self._q})"

    def __str__(self) -> str:
        """Canonical literal."""
        return format_scalar(self)

    def __hash__(self) -> int:
        """Hash compatible with equality on rationals."""
        if not self._q:
            return hash(self._p)
        return hash((self._p, self._q))

    def __eq__(self, other: object) -> bool:
        """Exact equality."""
        if isinstance(other, Scalar):
            return self._p == other._p and self._q == other._q
        if isinstance(other, (int, Fraction)):
            return not self._q and self._p == other
        return NotImplemented

    def __lt__(self, other: ScalarLike) -> bool:
        """Order via the real embedding."""
        return (Scalar.coerce(other) - self).sign() > 0

    def __bool__(self) -> bool:
        """Non-zero test."""
        return not self.is_zero()

    def __neg__(self) -> "Scalar":
        """Negation."""
        return Scalar(-self._p, -self._q)

    def __add__(self, other: ScalarLike) -> "Scalar":
        """Addition."""
        if isinstance(other, Scalar):
            return Scalar(self._p + other._p, self._q + other._q)
        if isinstance(other, (int, Fraction)):
            return Scalar(self._p + other, self._q)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other: ScalarLike) -> "Scalar":
        """Subtraction."""
        if isinstance(other, Scalar):
            return Scalar(self._p - other._p, self._q - other._q)
        if isinstance(other, (int, Fraction)):
            return Scalar(self._p - other, self._q)
        return NotImplemented

    def __rsub__(self, other: ScalarLike) -> "Scalar":
        """Reflected subtraction."""
        return (-self) + other

    def __mul__(self, other: ScalarLike) -> "Scalar":
        """(p1 + q1 s2)(p2 + q2 s2) = (p1 p2 + 2 q1 q2) + (p1 q2 + p2 q1) s2."""
        if isinstance(other, Scalar):
            p1, q1, p2, q2 = self._p, self._q, other._p, other._q
            if not q1 and not q2:
                return Scalar(p1 * p2, _ZERO)
            if not q2:
                return Scalar(p1 * p2, q1 * p2)
            if not q1:
                return Scalar(p1 * p2, p1 * q2)
            return Scalar(p1 * p2 + 2 * q1 * q2, p1 * q2 + p2 * q1)
        if isinstance(other, (int, Fraction)):
            return Scalar(self._p * other, self._q * other)
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        """
        Return 1 / (p + q s2) = (p - q s2) / (p^2 - 2 q^2).

        :return: the multiplicative inverse.
        :raises DomainError: when the scalar is zero.
        """
        if not self._q:
            if not self._p:
                raise DomainError("Division by zero in Q(sqrt 2)")
            return Scalar(1 / self._p, _ZERO)
        norm = self.field_norm()
        if not norm:
            # unreachable for rationals: sqrt(2) is irrational
            raise DomainError(f"Vanishing field norm for {self!r}")
        return Scalar(self._p / norm, -self._q / norm)

    def __truediv__(self, other: ScalarLike) -> "Scalar":
        """Division."""
        if isinstance(other, (int, Fraction)):
            if not other:
                raise DomainError("Division by zero in Q(sqrt 2)")
            return Scalar(self._p / other, self._q / other)
        if isinstance(other, Scalar):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other: ScalarLike) -> "Scalar":
        """Reflected division."""
        return Scalar.coerce(other) * self.inverse()

    def __float__(self) -> float:
        """Approximate value, for display only."""
        return float(self._p) + float(self._q) * 2**0.5


ZERO = Scalar(0, 0)
ONE = Scalar(1, 0)
SQRT2 = Scalar(0, 1)
INV_SQRT2 = Scalar(0, Fraction(1, 2))


def arith(op: str, x: ScalarLike, y: ScalarLike = 0) -> Scalar:
    """
    Apply a named field operation.

    :param op: one of add, sub, mul, div, neg.
    :param x: left operand.
    :param y: right operand (ignored by neg).
    :return: the exact result.
    :raises ValueError: for an unknown operation.
    """
    a, b = Scalar.coerce(x), Scalar.coerce(y)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    if op == "neg":
        return -a
    raise ValueError(f"Unknown operation `{op}`")


def _read_int(text: str, pos: int) -> Tuple[int, int]:
    """Read a run of decimal digits starting at `pos`."""
    start = pos
    while pos < len(text) and text[pos].isdigit():
        pos += 1
    if pos == start:
        raise ParseError("Expected digits", text, pos)
    return int(text[start:pos]), pos


def _read_rational(text: str, pos: int) -> Tuple[Fraction, int]:
    """Read `INT('/'POSINT)?` (unsigned) starting at `pos`."""
    num, pos = _read_int(text, pos)
    if pos < len(text) and text[pos] == "/":
        den_pos = pos + 1
        den, pos = _read_int(text, den_pos)
        if den == 0:
            raise ParseError("Zero denominator", text, den_pos)
        return Fraction(num, den), pos
    return Fraction(num), pos


def _at_s2(text: str, pos: int) -> bool:
    return text.startswith("s2", pos)


def parse_scalar(text: str) -> Scalar:
    """
    Parse a scalar literal.

    :param text: e.g. `3/2-1/3s2`, `s2`, `-4`.
    :return: the parsed scalar.
    :raises ParseError: on malformed input, reporting the offending position.
    """
    text = text.strip()
    if not text:
        raise ParseError("Empty scalar literal", text, 0)
    pos = 0
    sign = 1
    if text[pos] in "+-":
        sign = -1 if text[pos] == "-" else 1
        pos += 1
    if _at_s2(text, pos):
        pos += 2
        if pos != len(text):
            raise ParseError("Trailing characters", text, pos)
        return Scalar(0, sign)
    value, pos = _read_rational(text, pos)
    if _at_s2(text, pos):
        pos += 2
        if pos != len(text):
            raise ParseError("Trailing characters", text, pos)
        return Scalar(0, sign * value)
    p = sign * value
    if pos == len(text):
        return Scalar(p, 0)
    if text[pos] not in "+-":
        raise ParseError("Expected `+` or `-`", text, pos)
    q_sign = -1 if text[pos] == "-" else 1
    pos += 1
    q = Fraction(1)
    if not _at_s2(text, pos):
        q, pos = _read_rational(text, pos)
    if not _at_s2(text, pos):
        raise ParseError("Expected `s2`", text, pos)
    pos += 2
    if pos != len(text):
        raise ParseError("Trailing characters", text, pos)
    return Scalar(p, q_sign * q)


def format_scalar(x: Scalar) -> str:
    """
    Format a scalar in canonical reduced form.

    :param x: the scalar.
    :return: the literal; zero parts are omitted and zero itself is `0`.
    """
    p, q = x.p, x.q
    if not q:
        return str(p)
    if q == 1:
        q_text = "s2"
    elif q == -1:
        q_text = "-s2"
    else:
        q_text = f"{q}s2"
    if not p:
        return q_text
    if q > 0:
        return f"{p}+{q_text}"
    return f"{p}{q_text}"
