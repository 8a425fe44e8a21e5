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
Cayley-Dickson algebras A_n over Q(sqrt 2).

An element of A_n = A_{n-1} x A_{n-1} is stored as its 2^n coordinates in the
basis e_0, ..., e_{2^n - 1}; the pair (x, y) puts x in the first half and y in
the second, so i_n = e_{2^(n-1)}. The product is the doubling formula

    (a, b)(c, d) = (ac - d*b, da + bc*)

evaluated through a memoized table of basis products.
"""

import random
import threading
import time
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from cdlab.config import active_config
from cdlab.errors import UsageError
from cdlab.logs import get_logger
from cdlab.scalar import ONE, ZERO, Scalar, ScalarLike


logger = get_logger("cdlab.algebra")


@dataclass(frozen=True)
class Element:
    """An element of A_n in the standard basis."""

    level: int
    coeffs: Tuple[Scalar, ...]

    def __post_init__(self) -> None:
        """Check the coordinate count."""
        if self.level < 0:
            raise UsageError(f"Level must be non-negative, got {self.level}")
        if len(self.coeffs) != 1 << self.level:
            raise UsageError(
                f"A_{self.level} has {1 << self.level} coordinates, got {len(self.coeffs)}"
            )

    @classmethod
    def zero(cls, n: int) -> "Element":
        """The zero element of A_n."""
        return cls(n, (ZERO,) * (1 << n))

    @classmethod
    def basis(cls, n: int, k: int, coeff: ScalarLike = 1) -> "Element":
        """Return coeff * e_k in A_n."""
        size = 1 << n
        if not 0 <= k < size:
            raise UsageError(f"Basis index {k} out of range for A_{n}")
        coeffs = [ZERO] * size
        coeffs[k] = Scalar.coerce(coeff)
        return cls(n, tuple(coeffs))

    @classmethod
    def from_terms(cls, n: int, terms: Dict[int, ScalarLike]) -> "Element":
        """Build sum(c * e_k) from a mapping k -> c."""
        coeffs = [ZERO] * (1 << n)
        for k, c in terms.items():
            if not 0 <= k < len(coeffs):
                raise UsageError(f"Basis index {k} out of range for A_{n}")
            coeffs[k] = coeffs[k] + Scalar.coerce(c)
        return cls(n, tuple(coeffs))

    @classmethod
    def from_halves(cls, x: "Element", y: "Element") -> "Element":
        """Return the pair (x, y) in A_{n+1}."""
        check_same_level(x, y)
        return cls(x.level + 1, x.coeffs + y.coeffs)

    def halves(self) -> Tuple["Element", "Element"]:
        """Split (x, y) in A_n into x, y in A_{n-1}."""
        if self.level == 0:
            raise UsageError("A_0 has no halves")
        h = len(self.coeffs) >> 1
        return (
            Element(self.level - 1, self.coeffs[:h]),
            Element(self.level - 1, self.coeffs[h:]),
        )

    def embed(self, level: int) -> "Element":
        """Include A_n in A_m (m >= n) as x -> (x, 0) repeatedly."""
        if level < self.level:
            raise UsageError(f"Cannot embed A_{self.level} into A_{level}")
        pad = (1 << level) - len(self.coeffs)
        return Element(level, self.coeffs + (ZERO,) * pad)

    @property
    def dim(self) -> int:
        """Real dimension of the ambient algebra."""
        return len(self.coeffs)

    @cached_property
    def support(self) -> Tuple[int, ...]:
        """Indices of the non-zero coordinates."""
        return tuple(k for k, c in enumerate(self.coeffs) if c)

    def is_zero(self) -> bool:
        """True iff every coordinate vanishes."""
        return not self.support

    def __bool__(self) -> bool:
        """Non-zero test."""
        return not self.is_zero()

    def __getitem__(self, k: int) -> Scalar:
        """Coordinate k."""
        return self.coeffs[k]

    def __neg__(self) -> "Element":
        """Negation."""
        return Element(self.level, tuple(-c for c in self.coeffs))

    def __add__(self, other: "Element") -> "Element":
        """Coordinate-wise sum."""
        if not isinstance(other, Element):
            return NotImplemented
        check_same_level(self, other)
        return Element(
            self.level, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other: "Element") -> "Element":
        """Coordinate-wise difference."""
        if not isinstance(other, Element):
            return NotImplemented
        check_same_level(self, other)
        return Element(
            self.level, tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def scale(self, s: ScalarLike) -> "Element":
        """Multiply by a real scalar."""
        s = Scalar.coerce(s)
        if not s:
            return Element.zero(self.level)
        return Element(self.level, tuple(s * c for c in self.coeffs))

    def __mul__(self, other: object) -> "Element":
        """Algebra product with an element, or scaling by a scalar."""
        if isinstance(other, Element):
            return cd_mul(self, other)
        if isinstance(other, (Scalar, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other: object) -> "Element":
        """Scaling by a scalar on the left."""
        if isinstance(other, (Scalar, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __str__(self) -> str:
        """Readable form, e.g. `1/2 e1 - s2 e7`."""
        terms = []
        for k in self.support:
            c = self.coeffs[k]
            if c == 1:
                terms.append(f"e{k}")
            elif c == -1:
                terms.append(f"-e{k}")
            elif c.is_rational() or not c.p:
                terms.append(f"{c} e{k}")
            else:
                terms.append(f"({c}) e{k}")
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")


@dataclass(frozen=True)
class ComplexScalar:
    """The value s + t*i_n in C_n."""

    level: int
    s: Scalar = ZERO
    t: Scalar = ZERO

    def __post_init__(self) -> None:
        """Coerce the parts."""
        object.__setattr__(self, "s", Scalar.coerce(self.s))
        object.__setattr__(self, "t", Scalar.coerce(self.t))

    @classmethod
    def one(cls, n: int) -> "ComplexScalar":
        """The unit 1."""
        return cls(n, ONE, ZERO)

    @classmethod
    def i(cls, n: int) -> "ComplexScalar":
        """The unit i_n."""
        return cls(n, ZERO, ONE)

    def is_zero(self) -> bool:
        """True iff s = t = 0."""
        return not self.s and not self.t

    def conj(self) -> "ComplexScalar":
        """Complex conjugate."""
        return ComplexScalar(self.level, self.s, -self.t)

    def norm_sq(self) -> Scalar:
        """Return s^2 + t^2."""
        return self.s * self.s + self.t * self.t

    def __neg__(self) -> "ComplexScalar":
        """Negation."""
        return ComplexScalar(self.level, -self.s, -self.t)

    def __add__(self, other: "ComplexScalar") -> "ComplexScalar":
        """Sum."""
        return ComplexScalar(self.level, self.s + other.s, self.t + other.t)

    def __sub__(self, other: "ComplexScalar") -> "ComplexScalar":
        """Difference."""
        return ComplexScalar(self.level, self.s - other.s, self.t - other.t)

    def __mul__(self, other: object) -> "ComplexScalar":
        """Product in C_n, or scaling by a real scalar."""
        if isinstance(other, ComplexScalar):
            return ComplexScalar(
                self.level,
                self.s * other.s - self.t * other.t,
                self.s * other.t + self.t * other.s,
            )
        if isinstance(other, (Scalar, int, Fraction)):
            return ComplexScalar(self.level, self.s * other, self.t * other)
        return NotImplemented

    __rmul__ = __mul__

    def to_element(self) -> Element:
        """The element s*1 + t*i_n of A_n."""
        if self.level == 0:
            if self.t:
                raise UsageError("A_0 has no i_0")
            return Element(0, (self.s,))
        return Element.from_terms(self.level, {0: self.s, 1 << (self.level - 1): self.t})

    def __str__(self) -> str:
        """Readable form."""
        if not self.t:
            return str(self.s)
        if not self.s:
            return f"{self.t} i{self.level}"
        return f"{self.s} + ({self.t}) i{self.level}"


def check_same_level(*elements: Element) -> int:
    """
    Require a common level.

    :param elements: the elements to compare.
    :return: the common level.
    :raises UsageError: on a mismatch.
    """
    levels = {x.level for x in elements}
    if len(levels) != 1:
        raise UsageError(f"Level mismatch: {sorted(levels)}")
    return levels.pop()


def _require_i(n: int) -> None:
    if n < 1:
        raise UsageError("A_0 has no i_0; this operation needs level >= 1")


def _basis_product(n: int, i: int, j: int) -> Tuple[int, int]:
    """
    Return (sign, k) with e_i e_j = sign * e_k, straight from the doubling formula.

    :param n: level.
    :param i: left basis index.
    :param j: right basis index.
    :return: sign in {1, -1} and target index.
    """
    if n == 0:
        return 1, 0
    h = 1 << (n - 1)
    if i < h and j < h:
        # (e_i, 0)(e_j, 0) = (e_i e_j, 0)
        return _basis_product(n - 1, i, j)
    if i < h:
        # (e_i, 0)(0, e_j') = (0, e_j' e_i)
        sign, k = _basis_product(n - 1, j - h, i)
        return sign, k + h
    if j < h:
        # (0, e_i')(e_j, 0) = (0, e_i' e_j*)
        sign, k = _basis_product(n - 1, i - h, j)
        return (-sign if j else sign), k + h
    # (0, e_i')(0, e_j') = (-e_j'* e_i', 0)
    sign, k = _basis_product(n - 1, j - h, i - h)
    return (sign if j - h else -sign), k


class MulTable:
    """Signs and target indices of all basis products e_i e_j at one level."""

    def __init__(self, level: int, index: List[int], sign: List[int]) -> None:
        """
        Initialize the table.

        :param level: the level n.
        :param index: flat list, entry i * 2^n + j is k with e_i e_j = +-e_k.
        :param sign: flat list of the matching signs.
        """
        self.level = level
        self.size = 1 << level
        self._index = index
        self._sign = sign

    def product(self, i: int, j: int) -> Tuple[int, int]:
        """Return (sign, k) with e_i e_j = sign * e_k."""
        pos = i * self.size + j
        return self._sign[pos], self._index[pos]

    def __len__(self) -> int:
        """Number of entries."""
        return len(self._index)

    @classmethod
    def build(cls, level: int, previous: Optional["MulTable"] = None) -> "MulTable":
        """
        Build the table for `level` from the one a level below.

        :param level: the level n.
        :param previous: the table for level n - 1 (required for n >= 1).
        :return: the new table.
        """
        if level == 0:
            return cls(0, [0], [1])
        if previous is None or previous.level != level - 1:
            raise UsageError(f"Building A_{level} needs the table of A_{level - 1}")
        size = 1 << level
        h = size >> 1
        index = [0] * (size * size)
        sign = [1] * (size * size)
        for i in range(size):
            for j in range(size):
                if i < h and j < h:
                    s, k = previous.product(i, j)
                elif i < h:
                    s, k = previous.product(j - h, i)
                    k += h
                elif j < h:
                    s, k = previous.product(i - h, j)
                    s, k = (-s if j else s), k + h
                else:
                    s, k = previous.product(j - h, i - h)
                    s = s if j - h else -s
                pos = i * size + j
                index[pos] = k
                sign[pos] = s
        return cls(level, index, sign)

    def verify(self) -> None:
        """
        Check every entry against the direct recursion and the XOR rule.

        :raises AssertionError: when an entry disagrees.
        """
        size = self.size
        for i in range(size):
            for j in range(size):
                expected = _basis_product(self.level, i, j)
                actual = self.product(i, j)
                if actual != expected or actual[1] != i ^ j:
                    raise AssertionError(
                        f"A_{self.level}: e_{i} e_{j} is {actual}, expected {expected}"
                    )


_tables: Dict[int, MulTable] = {}
_tables_lock = threading.Lock()


def mul_table(n: int) -> MulTable:
    """
    Return the memoized, verified multiplication table of A_n.

    :param n: the level.
    :return: the table.
    """
    table = _tables.get(n)
    if table is not None:
        return table
    active_config().check_level(n)
    with _tables_lock:
        for level in range(n + 1):
            if level in _tables:
                continue
            started = time.perf_counter()
            table = MulTable.build(level, _tables.get(level - 1))
            table.verify()
            _tables[level] = table
            logger.info(
                f"Built table for A_{level}: {len(table)} entries in "
                f"{time.perf_counter() - started:.3f}s"
            )
    return _tables[n]


def cd_mul(x: Element, y: Element) -> Element:
    """
    Multiply two elements of A_n.

    :param x: left factor.
    :param y: right factor.
    :return: the product xy.
    """
    n = check_same_level(x, y)
    table = mul_table(n)
    out = [ZERO] * (1 << n)
    ys = [(j, y.coeffs[j]) for j in y.support]
    for i in x.support:
        xi = x.coeffs[i]
        for j, yj in ys:
            s, k = table.product(i, j)
            term = xi * yj
            out[k] = out[k] + term if s > 0 else out[k] - term
    return Element(n, tuple(out))


def _raw_conj(coeffs: Sequence[Scalar]) -> List[Scalar]:
    return [coeffs[0]] + [-c for c in coeffs[1:]]


def _raw_mul(u: Sequence[Scalar], v: Sequence[Scalar]) -> List[Scalar]:
    size = len(u)
    if size == 1:
        return [u[0] * v[0]]
    h = size >> 1
    a, b, c, d = u[:h], u[h:], v[:h], v[h:]
    ac = _raw_mul(a, c)
    dstar_b = _raw_mul(_raw_conj(d), b)
    da = _raw_mul(d, a)
    b_cstar = _raw_mul(b, _raw_conj(c))
    return [p - q for p, q in zip(ac, dstar_b)] + [p + q for p, q in zip(da, b_cstar)]


def raw_cd_mul(x: Element, y: Element) -> Element:
    """
    Multiply by recursing on the doubling formula over whole coordinate vectors.

    Slow; kept as an independent oracle for `cd_mul`.

    :param x: left factor.
    :param y: right factor.
    :return: the product xy.
    """
    n = check_same_level(x, y)
    return Element(n, tuple(_raw_mul(x.coeffs, y.coeffs)))


def conj(x: Element) -> Element:
    """Conjugate: negate every coordinate but the real one."""
    return Element(x.level, tuple(_raw_conj(x.coeffs)))


def re(x: Element) -> Scalar:
    """Real part."""
    return x.coeffs[0]


def im(x: Element) -> Element:
    """Imaginary part x - re(x)."""
    return Element(x.level, (ZERO,) + x.coeffs[1:])


def real_inner(a: Element, b: Element) -> Scalar:
    """
    Return Re(a b*), read off the diagonal of the multiplication table.

    :param a: left argument.
    :param b: right argument.
    :return: the real inner product.
    """
    n = check_same_level(a, b)
    table = mul_table(n)
    total = ZERO
    for i in a.support:
        bi = b.coeffs[i]
        if not bi:
            continue
        s, _ = table.product(i, i)
        # b* has coordinate -b_i for i > 0
        term = a.coeffs[i] * bi
        total = total + term if (s > 0) == (i == 0) else total - term
    return total


def dot(a: Element, b: Element) -> Scalar:
    """Coordinate dot product."""
    check_same_level(a, b)
    total = ZERO
    for i in a.support:
        if b.coeffs[i]:
            total = total + a.coeffs[i] * b.coeffs[i]
    return total


def norm_sq(a: Element) -> Scalar:
    """Return <a, a>_R."""
    return real_inner(a, a)


def herm_inner(a: Element, b: Element) -> ComplexScalar:
    """
    Return the C_n-valued inner product, the projection of a b* onto C_n.

    :param a: left argument.
    :param b: right argument.
    :return: s + t*i_n with s, t the coordinates of 1 and i_n in a b*.
    """
    n = check_same_level(a, b)
    _require_i(n)
    table = mul_table(n)
    h = 1 << (n - 1)
    s_part, t_part = ZERO, ZERO
    for i in a.support:
        ai = a.coeffs[i]
        for target in (0, h):
            j = i ^ target
            bj = b.coeffs[j]
            if not bj:
                continue
            sign, _ = table.product(i, j)
            if j:
                sign = -sign
            term = ai * bj
            if target == 0:
                s_part = s_part + term if sign > 0 else s_part - term
            else:
                t_part = t_part + term if sign > 0 else t_part - term
    return ComplexScalar(n, s_part, t_part)


def pi_c(a: Element) -> Element:
    """Orthogonal projection onto C_n = span{1, i_n}."""
    _require_i(a.level)
    h = 1 << (a.level - 1)
    return Element.from_terms(a.level, {0: a.coeffs[0], h: a.coeffs[h]})


def c_value(a: Element) -> ComplexScalar:
    """pi_C(a) read as a value s + t*i_n of C_n."""
    _require_i(a.level)
    return ComplexScalar(a.level, a.coeffs[0], a.coeffs[1 << (a.level - 1)])


def pi_c_perp(a: Element) -> Element:
    """Orthogonal projection onto C_n^perp."""
    return a - pi_c(a)


def in_c_perp(a: Element) -> bool:
    """True iff a lies in C_n^perp."""
    return pi_c(a).is_zero()


def c_orthogonal(a: Element, b: Element) -> bool:
    """True iff <a, b>_C vanishes."""
    return herm_inner(a, b).is_zero()


def h_indices(n: int) -> Tuple[int, int, int, int]:
    """
    Coordinates of 1, i_{n-1}, i_n and i_{n-1} i_n in A_n.

    :param n: level, at least 2.
    :return: the four indices spanning H_n.
    """
    if n < 2:
        raise UsageError(f"H_n needs level >= 2, got {n}")
    h = 1 << (n - 1)
    q = h >> 1
    return 0, q, h, h + q


def in_h_perp(a: Element) -> bool:
    """True iff the coordinates of 1, i_n, i_{n-1} and i_{n-1} i_n all vanish."""
    return not any(a.coeffs[k] for k in h_indices(a.level))


def i_unit(n: int) -> Element:
    """The element i_n = e_{2^(n-1)}."""
    _require_i(n)
    return Element.basis(n, 1 << (n - 1))


def tilde_lift(alpha: ComplexScalar) -> ComplexScalar:
    """Carry s + t*i_n to s + t*i_{n+1}."""
    return ComplexScalar(alpha.level + 1, alpha.s, alpha.t)


def c_scale(alpha: ComplexScalar, x: Element) -> Element:
    """
    Left multiplication by alpha in C_n.

    :param alpha: the complex scalar.
    :param x: the element.
    :return: alpha * x.
    """
    if alpha.level != x.level:
        raise UsageError(f"Level mismatch: {alpha.level} vs {x.level}")
    return cd_mul(alpha.to_element(), x)


def alternative_witness(a: Element) -> Optional[int]:
    """
    Find a basis index k with a(a e_k) != (aa) e_k.

    :param a: the element.
    :return: the first violating index, or None when a is alternative.
    """
    aa = cd_mul(a, a)
    for k in range(a.dim):
        e_k = Element.basis(a.level, k)
        if cd_mul(a, cd_mul(a, e_k)) != cd_mul(aa, e_k):
            return k
    return None


def is_alternative(a: Element) -> bool:
    """True iff a(ax) = a^2 x for every x."""
    return alternative_witness(a) is None


def anti_hermitian_check(a: Element, x: Element, y: Element) -> bool:
    """
    Check <ax, y>_C = -<x, ay>_C* for a in C_n^perp.

    :param a: an element of C_n^perp.
    :param x: first test vector.
    :param y: second test vector.
    :return: whether the identity holds.
    """
    lhs = herm_inner(cd_mul(a, x), y)
    rhs = -herm_inner(x, cd_mul(a, y)).conj()
    return lhs == rhs


def random_scalar(rng: random.Random, with_sqrt2: bool = False) -> Scalar:
    """
    Sample a small scalar: numerator in [-9, 9], denominator in {1, 2}.

    :param rng: the random source.
    :param with_sqrt2: also sample a sqrt(2) part.
    :return: the scalar.
    """
    p = Fraction(rng.randint(-9, 9), rng.choice((1, 2)))
    q = Fraction(rng.randint(-9, 9), rng.choice((1, 2))) if with_sqrt2 else 0
    return Scalar(p, q)


def random_element(
    rng: random.Random,
    n: int,
    support: Optional[Iterable[int]] = None,
    with_sqrt2: bool = False,
) -> Element:
    """
    Sample an element of A_n.

    :param rng: the random source.
    :param n: the level.
    :param support: restrict the sampled coordinates to these indices.
    :param with_sqrt2: also sample sqrt(2) parts.
    :return: the element.
    """
    indices = range(1 << n) if support is None else support
    return Element.from_terms(n, {k: random_scalar(rng, with_sqrt2) for k in indices})


def random_imaginary(rng: random.Random, n: int) -> Element:
    """Sample an imaginary element of A_n."""
    return random_element(rng, n, range(1, 1 << n))


def random_c_perp(rng: random.Random, n: int) -> Element:
    """Sample an element of C_n^perp."""
    h = 1 << (n - 1)
    return random_element(rng, n, [k for k in range(1 << n) if k not in (0, h)])


def random_complex(rng: random.Random, n: int) -> ComplexScalar:
    """Sample a value in C_n."""
    return ComplexScalar(n, random_scalar(rng), random_scalar(rng))


def sub_rng(seed: int, index: int) -> random.Random:
    """An independent, reproducible random source for trial `index`."""
    return random.Random(seed * 1_000_003 + index)  # nosec
