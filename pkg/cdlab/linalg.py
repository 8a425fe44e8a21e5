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

"""Exact linear algebra over Q(sqrt 2): echelon forms, kernels and subspaces."""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

from cdlab.algebra import Element, check_same_level, herm_inner
from cdlab.errors import UsageError
from cdlab.logs import get_logger
from cdlab.scalar import ONE, ZERO, Scalar


logger = get_logger("cdlab.linalg")

Row = List[Scalar]
Matrix = List[Row]


def rref(rows: Sequence[Sequence[Scalar]], ncols: int) -> Tuple[Matrix, List[int]]:
    """
    Reduce a matrix to reduced row-echelon form.

    Pivots are the first non-zero entry in column order; zero rows are dropped.

    :param rows: the matrix rows.
    :param ncols: number of columns.
    :return: the non-zero reduced rows and their pivot columns.
    """
    work: Matrix = [list(r) for r in rows if any(r)]
    pivots: List[int] = []
    top = 0
    for col in range(ncols):
        if top == len(work):
            break
        pivot_row = next((r for r in range(top, len(work)) if work[r][col]), None)
        if pivot_row is None:
            continue
        work[top], work[pivot_row] = work[pivot_row], work[top]
        row = work[top]
        lead = row[col]
        if lead != ONE:
            inv = lead.inverse()
            row = [c * inv if c else c for c in row]
            work[top] = row
        nonzero = [k for k in range(col, ncols) if row[k]]
        for r, other in enumerate(work):
            if r == top:
                continue
            factor = other[col]
            if not factor:
                continue
            for k in nonzero:
                other[k] = other[k] - factor * row[k]
        pivots.append(col)
        top += 1
    return work[:top], pivots


@dataclass(frozen=True)
class Subspace:
    """A subspace of A_n held as a canonical reduced row-echelon basis."""

    level: int
    rows: Tuple[Tuple[Scalar, ...], ...]
    pivots: Tuple[int, ...]

    @property
    def dim(self) -> int:
        """Dimension."""
        return len(self.rows)

    @property
    def ambient_dim(self) -> int:
        """Dimension of A_n."""
        return 1 << self.level

    def basis(self) -> List[Element]:
        """The canonical basis as elements."""
        return [Element(self.level, row) for row in self.rows]

    def reduce(self, v: Element) -> Element:
        """Return v minus its echelon reduction against the basis rows."""
        coeffs = list(v.coeffs)
        for row, p in zip(self.rows, self.pivots):
            factor = coeffs[p]
            if not factor:
                continue
            for k in range(p, len(coeffs)):
                if row[k]:
                    coeffs[k] = coeffs[k] - factor * row[k]
        return Element(self.level, tuple(coeffs))

    def contains(self, v: Element) -> bool:
        """Membership test."""
        check_same_level(v, Element.zero(self.level))
        return self.reduce(v).is_zero()

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        """The zero subspace of A_n."""
        return cls(n, (), ())

    @classmethod
    def full(cls, n: int) -> "Subspace":
        """All of A_n."""
        return canonicalize([Element.basis(n, k) for k in range(1 << n)], n)


def canonicalize(vectors: Sequence[Element], level: Optional[int] = None) -> Subspace:
    """
    Canonical basis of the span of `vectors`.

    :param vectors: elements of a common level.
    :param level: the level, required when `vectors` is empty.
    :return: the span.
    """
    if vectors:
        n = check_same_level(*vectors)
        if level is not None and level != n:
            raise UsageError(f"Level mismatch: {level} vs {n}")
    elif level is None:
        raise UsageError("Cannot infer the level of an empty span")
    else:
        n = level
    rows, pivots = rref([v.coeffs for v in vectors], 1 << n)
    return Subspace(n, tuple(tuple(r) for r in rows), tuple(pivots))


def _kernel_vectors(rows: Matrix, pivots: List[int], ncols: int) -> List[Row]:
    pivot_set = set(pivots)
    vectors = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [ZERO] * ncols
        v[free] = ONE
        for row, p in zip(rows, pivots):
            if row[free]:
                v[p] = -row[free]
        vectors.append(v)
    return vectors


def kernel_basis(matrix: Sequence[Sequence[Scalar]], ncols: int) -> List[Row]:
    """
    A basis of the kernel of a matrix with any number of columns.

    :param matrix: the rows.
    :param ncols: number of columns.
    :return: one kernel vector per free column.
    """
    rows, pivots = rref(matrix, ncols)
    return _kernel_vectors(rows, pivots, ncols)


def nullspace(matrix: Sequence[Sequence[Scalar]], level: int) -> Subspace:
    """
    Exact kernel of a matrix acting on A_n.

    :param matrix: rows of length 2^level.
    :param level: the level n of the domain.
    :return: the kernel.
    """
    ncols = 1 << level
    rows, pivots = rref(matrix, ncols)
    kernel = canonicalize(
        [Element(level, tuple(v)) for v in _kernel_vectors(rows, pivots, ncols)],
        level,
    )
    logger.debug(f"nullspace on A_{level}: rank {len(pivots)}, kernel dim {kernel.dim}")
    return kernel


def rank(matrix: Sequence[Sequence[Scalar]], ncols: int) -> int:
    """Rank of a matrix."""
    return len(rref(matrix, ncols)[1])


def _solve(
    matrix: Sequence[Sequence[Scalar]], rhs: Sequence[Scalar], ncols: int
) -> Optional[Row]:
    augmented = [list(row) + [b] for row, b in zip(matrix, rhs)]
    rows, pivots = rref(augmented, ncols + 1)
    if pivots and pivots[-1] == ncols:
        return None
    x = [ZERO] * ncols
    for row, p in zip(rows, pivots):
        x[p] = row[ncols]
    return x


def solve_particular(
    matrix: Sequence[Sequence[Scalar]], b: Element, level: Optional[int] = None
) -> Optional[Element]:
    """
    Some x with Mx = b, or None when the system is inconsistent.

    :param matrix: the matrix M, rows indexed like b.
    :param b: the right-hand side.
    :param level: level of the unknown; defaults to the level of b.
    :return: a solution with all free variables zero, or None.
    """
    n = b.level if level is None else level
    solution = _solve(matrix, b.coeffs, 1 << n)
    return None if solution is None else Element(n, tuple(solution))


def orth_complement(space: Subspace) -> Subspace:
    """Orthogonal complement for the real inner product (the coordinate dot product)."""
    return nullspace(space.rows, space.level)


def project(x: Element, space: Subspace) -> Element:
    """
    Orthogonal projection onto a subspace.

    :param x: the element.
    :param space: the target subspace.
    :return: the unique p in `space` with x - p orthogonal to `space`.
    """
    check_same_level(x, Element.zero(space.level))
    if not space.dim:
        return Element.zero(space.level)
    basis = space.rows
    gram = [[_dot(r, s) for s in basis] for r in basis]
    rhs = [_dot(r, x.coeffs) for r in basis]
    coeffs = _solve(gram, rhs, len(basis))
    if coeffs is None:
        raise AssertionError("Gram matrix of a basis is singular")
    out = [ZERO] * space.ambient_dim
    for c, r in zip(coeffs, basis):
        if not c:
            continue
        for k, v in enumerate(r):
            if v:
                out[k] = out[k] + c * v
    return Element(space.level, tuple(out))


def _dot(u: Sequence[Scalar], v: Sequence[Scalar]) -> Scalar:
    total = ZERO
    for a, b in zip(u, v):
        if a and b:
            total = total + a * b
    return total


def space_sum(s: Subspace, t: Subspace) -> Subspace:
    """S + T."""
    _same(s, t)
    return canonicalize(s.basis() + t.basis(), s.level)


def intersect(s: Subspace, t: Subspace) -> Subspace:
    """S cap T, as the kernel of the stacked constraints defining S and T."""
    _same(s, t)
    constraints = list(orth_complement(s).rows) + list(orth_complement(t).rows)
    return nullspace(constraints, s.level)


def is_subspace(s: Subspace, t: Subspace) -> bool:
    """True iff S is contained in T."""
    _same(s, t)
    return all(t.contains(v) for v in s.basis())


def _same(s: Subspace, t: Subspace) -> None:
    if s.level != t.level:
        raise UsageError(f"Level mismatch: {s.level} vs {t.level}")


def lattice(
    op: str, s: Subspace, t: Union[Subspace, Element]
) -> Union[Subspace, bool]:
    """
    Subspace lattice operations.

    :param op: one of sum, intersect, contains, equals.
    :param s: the first subspace.
    :param t: the second subspace; for `contains` an element or a subspace.
    :return: a subspace for sum/intersect, a boolean otherwise.
    :raises ValueError: for an unknown operation.
    """
    if op == "contains":
        if isinstance(t, Element):
            return s.contains(t)
        return is_subspace(t, s)
    if not isinstance(t, Subspace):
        raise UsageError(f"`{op}` needs two subspaces")
    if op == "sum":
        return space_sum(s, t)
    if op == "intersect":
        return intersect(s, t)
    if op == "equals":
        _same(s, t)
        return s == t
    raise ValueError(f"Unknown lattice operation `{op}`")


def is_orthogonal_to(x: Element, space: Subspace) -> bool:
    """Real orthogonality against every canonical basis vector."""
    return all(not _dot(x.coeffs, r) for r in space.rows)


def is_c_orthogonal_to(x: Element, space: Subspace) -> bool:
    """C-orthogonality against every canonical basis vector."""
    return all(herm_inner(x, s).is_zero() for s in space.basis())


def are_c_orthogonal(s: Subspace, t: Subspace) -> bool:
    """True iff every basis vector of S is C-orthogonal to every one of T."""
    _same(s, t)
    return all(is_c_orthogonal_to(u, t) for u in s.basis())


def coordinate_space(n: int, indices: Sequence[int]) -> Subspace:
    """The span of the basis vectors e_k, k in `indices`."""
    return canonicalize([Element.basis(n, k) for k in sorted(set(indices))], n)
