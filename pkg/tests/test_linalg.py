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

"""Tests for exact linear algebra."""

import pytest
from hypothesis import given, settings

from cdlab.algebra import Element
from cdlab.annih import left_mult_matrix
from cdlab.errors import UsageError
from cdlab.linalg import (
    Subspace,
    are_c_orthogonal,
    canonicalize,
    coordinate_space,
    intersect,
    is_c_orthogonal_to,
    is_orthogonal_to,
    is_subspace,
    kernel_basis,
    lattice,
    nullspace,
    orth_complement,
    project,
    rank,
    rref,
    solve_particular,
    space_sum,
)
from cdlab.scalar import INV_SQRT2, ONE, SQRT2, ZERO
from tests.conftest import e, elements


def test_canonicalize_examples() -> None:
    """Spans reduce to one canonical basis."""
    assert canonicalize([e(3, 1), e(3, 1, 2)], 3) == coordinate_space(3, [1, 2])
    assert canonicalize([Element.zero(3)], 3).dim == 0
    v = e(3, 1, 5)
    assert canonicalize([v, v.scale(2)], 3).dim == 1
    assert canonicalize([], 3) == Subspace.zero(3)
    with pytest.raises(UsageError):
        canonicalize([])


def test_rref_normalizes_pivots() -> None:
    """Pivot entries become 1, also for sqrt(2) leads."""
    rows, pivots = rref([[SQRT2, ONE], [ZERO, ZERO]], 2)
    assert pivots == [0]
    assert rows == [[ONE, INV_SQRT2]]


def test_nullspace_examples() -> None:
    """Kernels of the identity, the zero map and an invertible left multiplication."""
    identity = [[ONE if i == j else ZERO for j in range(8)] for i in range(8)]
    assert nullspace(identity, 3).dim == 0
    zero = [[ZERO] * 16 for _ in range(16)]
    assert nullspace(zero, 4) == Subspace.full(4)
    assert nullspace(left_mult_matrix(e(3, 1)), 3).dim == 0
    assert rank(identity, 8) == 8
    assert kernel_basis([[ONE, ONE]], 2) == [[-ONE, ONE]]


def test_solve_particular() -> None:
    """e1 x = e3 in A_3 is solved by e2; inconsistent systems give None."""
    assert solve_particular(left_mult_matrix(e(3, 1)), e(3, 3)) == e(3, 2)
    zero = [[ZERO] * 8 for _ in range(8)]
    assert solve_particular(zero, e(3, 1)) is None
    assert solve_particular(zero, Element.zero(3)) == Element.zero(3)


def test_complement_and_projection() -> None:
    """Orthogonal complements and projections onto coordinate spaces."""
    span = coordinate_space(2, [0, 1])
    assert orth_complement(span) == coordinate_space(2, [2, 3])
    assert project(e(2, 0, 1), coordinate_space(2, [0])) == e(2, 0)
    assert project(e(2, 1), Subspace.zero(2)).is_zero()
    assert is_orthogonal_to(e(2, 2), span)
    assert not is_orthogonal_to(e(2, 1, 2), span)


def test_lattice_operations() -> None:
    """Sum, intersection, containment and equality."""
    s = coordinate_space(3, [1, 2])
    t = coordinate_space(3, [2, 3])
    assert lattice("sum", s, t) == coordinate_space(3, [1, 2, 3])
    assert lattice("intersect", s, t) == coordinate_space(3, [2])
    assert lattice("contains", s, e(3, 1, 2)) is True
    assert lattice("contains", s, t) is False
    assert lattice("equals", s, canonicalize([e(3, 1, 2), e(3, 1, -2)], 3)) is True
    with pytest.raises(ValueError):
        lattice("union", s, t)
    with pytest.raises(UsageError):
        lattice("sum", s, coordinate_space(4, [1]))


def test_c_orthogonality_of_spaces() -> None:
    """C-orthogonality needs both the 1 and the i_n components to vanish."""
    s = coordinate_space(3, [1])
    assert is_c_orthogonal_to(e(3, 2), s)
    assert not is_c_orthogonal_to(e(3, 5), s)
    assert is_orthogonal_to(e(3, 5), s)
    assert are_c_orthogonal(s, coordinate_space(3, [2, 3]))


@settings(derandomize=True, max_examples=30)
@given(elements(3), elements(3), elements(3))
def test_canonical_form_is_unique(x: Element, y: Element, z: Element) -> None:
    """The canonical basis depends only on the span."""
    span = canonicalize([x, y, z], 3)
    shuffled = canonicalize([z + x, y, x.scale(3), z], 3)
    assert span == shuffled
    assert all(span.contains(v) for v in (x, y, z))
    assert canonicalize(span.basis(), 3) == span


@settings(derandomize=True, max_examples=30)
@given(elements(3), elements(3), elements(3))
def test_projection_splits(x: Element, y: Element, v: Element) -> None:
    """v = p + q with p in S and q orthogonal to S."""
    space = canonicalize([x, y], 3)
    p = project(v, space)
    assert space.contains(p)
    assert is_orthogonal_to(v - p, space)
    assert space.dim + orth_complement(space).dim == 8


@settings(derandomize=True, max_examples=30)
@given(elements(3), elements(3), elements(3), elements(3))
def test_dimension_formula(a: Element, b: Element, c: Element, d: Element) -> None:
    """dim(S + T) + dim(S cap T) = dim S + dim T."""
    s, t = canonicalize([a, b], 3), canonicalize([c, d], 3)
    assert space_sum(s, t).dim + intersect(s, t).dim == s.dim + t.dim
    assert is_subspace(intersect(s, t), s)
    assert is_subspace(s, space_sum(s, t))
