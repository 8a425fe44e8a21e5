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
The bracket calculus.

For a, b in C_n^perp the bracket {a, b} is the element

    (1/sqrt2) (a + b, i_n(-a + b))

of A_{n+1}. Products, inner products and zero-divisor conditions of brackets
are computed here from a and b alone.
"""

from dataclasses import dataclass
from typing import NamedTuple, Tuple

from cdlab.algebra import (
    ComplexScalar,
    Element,
    c_scale,
    c_value,
    cd_mul,
    check_same_level,
    herm_inner,
    i_unit,
    in_c_perp,
    in_h_perp,
    pi_c,
    pi_c_perp,
    tilde_lift,
)
from cdlab.errors import PreconditionError, UsageError
from cdlab.scalar import INV_SQRT2, SQRT2


@dataclass(frozen=True)
class BracketPair:
    """The bracket {a, b} with a, b in C_n^perp."""

    level: int
    a: Element
    b: Element

    def __post_init__(self) -> None:
        """Enforce a, b in C_n^perp."""
        if self.level < 1:
            raise UsageError("Brackets need level >= 1")
        if self.a.level != self.level or self.b.level != self.level:
            raise UsageError(
                f"Bracket at level {self.level} got elements of levels "
                f"{self.a.level} and {self.b.level}"
            )
        if not in_c_perp(self.a) or not in_c_perp(self.b):
            raise PreconditionError("Bracket entries must lie in C_n^perp")

    @classmethod
    def of(cls, a: Element, b: Element) -> "BracketPair":
        """Bracket of two elements of a common level."""
        return cls(check_same_level(a, b), a, b)

    @classmethod
    def left(cls, a: Element) -> "BracketPair":
        """The one-sided bracket {a, 0}."""
        return cls(a.level, a, Element.zero(a.level))

    @classmethod
    def right(cls, b: Element) -> "BracketPair":
        """The one-sided bracket {0, b}."""
        return cls(b.level, Element.zero(b.level), b)

    def __neg__(self) -> "BracketPair":
        """Negation."""
        return BracketPair(self.level, -self.a, -self.b)

    def __add__(self, other: "BracketPair") -> "BracketPair":
        """Brackets are additive in both entries."""
        return BracketPair(self.level, self.a + other.a, self.b + other.b)

    def is_one_sided(self) -> bool:
        """True iff one of the entries vanishes."""
        return self.a.is_zero() or self.b.is_zero()


class ZdConditions(NamedTuple):
    """The four conditions for {a,b}{x,y} = 0."""

    ax_perp_zero: bool
    by_perp_zero: bool
    sum_zero: bool
    c_part_zero: bool

    @property
    def holds(self) -> bool:
        """Conjunction."""
        return (
            self.ax_perp_zero
            and self.by_perp_zero
            and self.sum_zero
            and self.c_part_zero
        )


def to_element(p: BracketPair) -> Element:
    """
    Lift {a, b} to A_{n+1}.

    :param p: the bracket.
    :return: (1/sqrt2)(a + b, i_n(-a + b)).
    """
    i_n = i_unit(p.level)
    first = (p.a + p.b).scale(INV_SQRT2)
    second = cd_mul(i_n, p.b - p.a).scale(INV_SQRT2)
    return Element.from_halves(first, second)


def from_element(z: Element) -> BracketPair:
    """
    Write (x, y) in H_{n+1}^perp as (1/sqrt2){x + i_n y, x - i_n y}.

    :param z: an element of H_{n+1}^perp.
    :return: the bracket with to_element(result) = z.
    :raises PreconditionError: when z is outside H_{n+1}^perp.
    """
    if z.level < 2 or not in_h_perp(z):
        raise PreconditionError("Only elements of H^perp are brackets")
    x, y = z.halves()
    i_y = cd_mul(i_unit(x.level), y)
    return BracketPair(
        x.level, (x + i_y).scale(INV_SQRT2), (x - i_y).scale(INV_SQRT2)
    )


def c_action(alpha: ComplexScalar, p: BracketPair) -> BracketPair:
    """
    Left action of the lift of alpha: alpha~ {a, b} = {alpha* a, alpha b}.

    :param alpha: a value in C_n.
    :param p: the bracket.
    :return: the acted-on bracket.
    """
    return BracketPair(p.level, c_scale(alpha.conj(), p.a), c_scale(alpha, p.b))


def pair_unit(n: int) -> Element:
    """The element (0, i_n) of A_{n+1}."""
    return Element.from_halves(Element.zero(n), i_unit(n))


def _lift_c(v: Element) -> Element:
    """pi_C(v) carried from C_n to C_{n+1}, as an element of A_{n+1}."""
    return tilde_lift(c_value(v)).to_element()


def bracket_mul_terms(p: BracketPair, q: BracketPair) -> Tuple[Element, Element, Element]:
    """
    The three mutually orthogonal summands of {a,b}{x,y}.

    :param p: the left bracket {a, b}.
    :param q: the right bracket {x, y}.
    :return: sqrt2{pi^(ax), pi^(by)}, pi~(xa + by), pi~(ay - xb)(0, i_n).
    """
    if p.level != q.level:
        raise UsageError(f"Level mismatch: {p.level} vs {q.level}")
    a, b, x, y = p.a, p.b, q.a, q.b
    n = p.level
    ax, by = cd_mul(a, x), cd_mul(b, y)
    xa = cd_mul(x, a)
    ay, xb = cd_mul(a, y), cd_mul(x, b)
    perp_term = to_element(BracketPair(n, pi_c_perp(ax), pi_c_perp(by))).scale(SQRT2)
    c_term = _lift_c(xa + by)
    unit_term = cd_mul(_lift_c(ay - xb), pair_unit(n))
    return perp_term, c_term, unit_term


def bracket_mul(p: BracketPair, q: BracketPair) -> Element:
    """
    Product of two brackets, computed from their entries.

    :param p: the left bracket.
    :param q: the right bracket.
    :return: the product in A_{n+1}.
    """
    first, second, third = bracket_mul_terms(p, q)
    return first + second + third


def i_pair_mul(p: BracketPair) -> BracketPair:
    """(0, i_n){a, b} = {b, -a}."""
    return BracketPair(p.level, p.b, -p.a)


def bracket_inner(p: BracketPair, q: BracketPair) -> ComplexScalar:
    """
    Hermitian inner product of two brackets, <a,x>_C* + <b,y>_C lifted to C_{n+1}.

    :param p: the bracket {a, b}.
    :param q: the bracket {x, y}.
    :return: a value in C_{n+1}.
    """
    if p.level != q.level:
        raise UsageError(f"Level mismatch: {p.level} vs {q.level}")
    return tilde_lift(herm_inner(p.a, q.a).conj() + herm_inner(p.b, q.b))


def bracket_zd_conditions(p: BracketPair, q: BracketPair) -> ZdConditions:
    """
    Evaluate the conditions whose conjunction is {a,b}{x,y} = 0.

    :param p: the bracket {a, b}.
    :param q: the bracket {x, y}.
    :return: pi^(ax) = 0, pi^(by) = 0, xa + by = 0, pi_C(ay - xb) = 0.
    """
    if p.level != q.level:
        raise UsageError(f"Level mismatch: {p.level} vs {q.level}")
    a, b, x, y = p.a, p.b, q.a, q.b
    return ZdConditions(
        ax_perp_zero=pi_c_perp(cd_mul(a, x)).is_zero(),
        by_perp_zero=pi_c_perp(cd_mul(b, y)).is_zero(),
        sum_zero=(cd_mul(x, a) + cd_mul(b, y)).is_zero(),
        c_part_zero=pi_c(cd_mul(a, y) - cd_mul(x, b)).is_zero(),
    )
