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

"""Annihilators, images, the quotient b/a and the Eig_2 eigenspace."""

from dataclasses import dataclass
from functools import lru_cache

from cdlab.algebra import (
    Element,
    cd_mul,
    mul_table,
    norm_sq,
    re,
    real_inner,
)
from cdlab.errors import IdentityViolation, PreconditionError
from cdlab.linalg import (
    Matrix,
    Subspace,
    canonicalize,
    is_orthogonal_to,
    nullspace,
    orth_complement,
    project,
    solve_particular,
)
from cdlab.scalar import ZERO


@dataclass(frozen=True)
class AnnReport:
    """The annihilator of an element together with its image."""

    element: Element
    ann: Subspace
    image: Subspace

    @property
    def dim_ann(self) -> int:
        """Dimension of Ann(element)."""
        return self.ann.dim


def max_ann_dim(n: int) -> int:
    """Largest annihilator dimension of a non-zero element of A_n (n >= 4)."""
    return (1 << n) - 4 * n + 4


def left_mult_matrix(a: Element) -> Matrix:
    """
    Matrix of x -> ax; column k holds the coordinates of a e_k.

    :param a: the element.
    :return: the 2^n x 2^n matrix as a list of rows.
    """
    size = a.dim
    table = mul_table(a.level)
    matrix = [[ZERO] * size for _ in range(size)]
    for i in a.support:
        ai = a.coeffs[i]
        for k in range(size):
            sign, r = table.product(i, k)
            matrix[r][k] = matrix[r][k] + ai if sign > 0 else matrix[r][k] - ai
    return matrix


@lru_cache(maxsize=1024)
def ann(a: Element) -> AnnReport:
    """
    The left annihilator {b : ab = 0} and the image aA_n = Ann(a)^perp.

    :param a: the element.
    :return: the report.
    """
    kernel = nullspace(left_mult_matrix(a), a.level)
    return AnnReport(element=a, ann=kernel, image=orth_complement(kernel))


def release_caches() -> None:
    """Drop the memoized annihilators; at levels 6 and up each one holds dense exact matrices."""
    ann.cache_clear()


def image(a: Element) -> Subspace:
    """Im(a) = {ax}, the orthogonal complement of Ann(a)."""
    return ann(a).image


def column_image(a: Element) -> Subspace:
    """Im(a) computed directly as the span of the products a e_k."""
    return canonicalize(
        [cd_mul(a, Element.basis(a.level, k)) for k in range(a.dim)], a.level
    )


def quotient_div(b: Element, a: Element) -> Element:
    """
    The quotient b/a: the unique x orthogonal to Ann(a) with ax = b.

    :param b: the numerator, orthogonal to Ann(a).
    :param a: the denominator.
    :return: b/a.
    :raises PreconditionError: when b is not orthogonal to Ann(a).
    """
    if b.is_zero():
        return Element.zero(a.level)
    if a.is_zero():
        raise PreconditionError("Cannot divide a non-zero element by 0")
    kernel = ann(a).ann
    if not is_orthogonal_to(b, kernel):
        raise PreconditionError("b/a needs b orthogonal to Ann(a)")
    x = solve_particular(left_mult_matrix(a), b)
    if x is None:
        raise PreconditionError("ax = b has no solution")
    return x - project(x, kernel)


def eig2(a: Element) -> Subspace:
    """
    Kernel of L_a^2 + 2|a|^2 Id, i.e. {b : a(ab) = -2|a|^2 b}.

    For unit a this is the space of b with a(ab) = -2b.

    :param a: a non-zero element.
    :return: the eigenspace.
    :raises PreconditionError: for a = 0.
    """
    if a.is_zero():
        raise PreconditionError("Eig_2 needs a non-zero element")
    size = a.dim
    shift = norm_sq(a) * 2
    columns = []
    for k in range(size):
        e_k = Element.basis(a.level, k)
        columns.append(cd_mul(a, cd_mul(a, e_k)) + e_k.scale(shift))
    matrix = [[columns[k].coeffs[r] for k in range(size)] for r in range(size)]
    return nullspace(matrix, a.level)


def c_span(a: Element) -> Subspace:
    """The C_n-span of a, spanned by a and i_n a."""
    n = a.level
    i_n = Element.basis(n, 1 << (n - 1))
    return canonicalize([a, cd_mul(i_n, a)], n)


def quaternion_subalgebra(a1: Element, a2: Element) -> Subspace:
    """
    The real span of 1, a1, a2, a1a2.

    :param a1: an imaginary element.
    :param a2: an imaginary element orthogonal to a1 of the same norm.
    :return: the 4-dimensional subalgebra.
    :raises PreconditionError: when a1, a2 do not qualify.
    :raises IdentityViolation: when the span is not closed under products.
    """
    if re(a1) or re(a2):
        raise PreconditionError("a1 and a2 must be imaginary")
    if real_inner(a1, a2):
        raise PreconditionError("a1 and a2 must be orthogonal")
    if not norm_sq(a1) or norm_sq(a1) != norm_sq(a2):
        raise PreconditionError("a1 and a2 must have equal non-zero norms")
    one = Element.basis(a1.level, 0)
    gens = [one, a1, a2, cd_mul(a1, a2)]
    space = canonicalize(gens, a1.level)
    if space.dim != 4:
        raise IdentityViolation("quaternion-dim", {"dim": space.dim})
    for u in gens:
        for v in gens:
            if not space.contains(cd_mul(u, v)):
                raise IdentityViolation(
                    "quaternion-closure", {"u": str(u), "v": str(v)}
                )
    return space
