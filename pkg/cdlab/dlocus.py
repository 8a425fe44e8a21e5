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
The D-locus and the annihilators of brackets.

A bracket {a, b} lies in the D-locus when a and b are C-orthogonal, a is
orthogonal to Ann(b) and b is orthogonal to Ann(a). Exactly there the
annihilator of {a, b} is four dimensions larger than Ann(a) + Ann(b).
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import List, NamedTuple, Optional, Tuple

from cdlab.algebra import (
    ComplexScalar,
    Element,
    c_orthogonal,
    c_scale,
    c_value,
    cd_mul,
    dot,
    h_indices,
    herm_inner,
    i_unit,
    in_c_perp,
    norm_sq,
)
from cdlab.annih import ann, eig2, left_mult_matrix, quotient_div
from cdlab.bracket import BracketPair, from_element, to_element
from cdlab.errors import IdentityViolation, PreconditionError, UsageError
from cdlab.linalg import (
    Subspace,
    canonicalize,
    coordinate_space,
    intersect,
    is_c_orthogonal_to,
    is_orthogonal_to,
    kernel_basis,
    nullspace,
    solve_particular,
    space_sum,
)
from cdlab.logs import get_logger
from cdlab.scalar import SQRT2


logger = get_logger("cdlab.dlocus")


@dataclass(frozen=True)
class DlocusReport:  # pylint: disable=too-many-instance-attributes
    """D-locus conditions and annihilator dimensions of a bracket."""

    pair: BracketPair
    in_dlocus: bool
    cond_orth: bool
    cond_a_vs_annb: bool
    cond_b_vs_anna: bool
    dim_ann_a: int
    dim_ann_b: int
    dim_ann_bracket: int

    @property
    def jump(self) -> int:
        """dim Ann{a,b} - dim Ann(a) - dim Ann(b)."""
        return self.dim_ann_bracket - self.dim_ann_a - self.dim_ann_b


def is_dlocus(p: BracketPair) -> DlocusReport:
    """
    Decide D-locus membership and record the annihilator dimensions.

    :param p: the bracket {a, b}.
    :return: the report.
    """
    ann_a, ann_b = ann(p.a).ann, ann(p.b).ann
    cond_orth = c_orthogonal(p.a, p.b)
    cond_a = is_orthogonal_to(p.a, ann_b)
    cond_b = is_orthogonal_to(p.b, ann_a)
    report = DlocusReport(
        pair=p,
        in_dlocus=cond_orth and cond_a and cond_b,
        cond_orth=cond_orth,
        cond_a_vs_annb=cond_a,
        cond_b_vs_anna=cond_b,
        dim_ann_a=ann_a.dim,
        dim_ann_b=ann_b.dim,
        dim_ann_bracket=ann(to_element(p)).dim_ann,
    )
    logger.debug(
        f"D-locus at level {p.level}: {report.in_dlocus}, dims "
        f"{report.dim_ann_a}+{report.dim_ann_b} -> {report.dim_ann_bracket}"
    )
    return report


class ImageConditions(NamedTuple):
    """The D-locus conditions restated through C-orthogonality and images."""

    a_c_orth_annb: bool
    b_c_orth_anna: bool
    a_in_image_b: bool
    b_in_image_a: bool


def dlocus_via_images(p: BracketPair) -> ImageConditions:
    """
    Restate a ⊥ Ann(b) and b ⊥ Ann(a) as C-orthogonality and as solvability of bx = a, ay = b.

    :param p: the bracket {a, b}.
    :return: the four restated conditions.
    """
    a, b = p.a, p.b
    return ImageConditions(
        a_c_orth_annb=is_c_orthogonal_to(a, ann(b).ann),
        b_c_orth_anna=is_c_orthogonal_to(b, ann(a).ann),
        a_in_image_b=solve_particular(left_mult_matrix(b), a) is not None,
        b_in_image_a=solve_particular(left_mult_matrix(a), b) is not None,
    )


def _c_span(z: Element) -> List[Element]:
    return [z, cd_mul(i_unit(z.level), z)]


def dlocus_parts(p: BracketPair) -> Tuple[Subspace, Subspace, Subspace]:
    """
    The three C-orthogonal summands of Ann{a, b} on the D-locus.

    :param p: a bracket in the D-locus with a, b non-zero.
    :return: {Ann a, Ann b}; C-span of {|b|^2 a, -|a|^2 b};
        C-span of {b/a, -a/b} + sqrt2 (0, i_n).
    :raises PreconditionError: off the D-locus or for a zero entry.
    """
    a, b, n = p.a, p.b, p.level
    if a.is_zero() or b.is_zero():
        raise PreconditionError("The D-locus construction needs a, b non-zero")
    if not is_dlocus(p).in_dlocus:
        raise PreconditionError("The bracket is not in the D-locus")
    first = [to_element(BracketPair.left(x)) for x in ann(a).ann.basis()]
    first += [to_element(BracketPair.right(y)) for y in ann(b).ann.basis()]
    second = to_element(BracketPair(n, a.scale(norm_sq(b)), b.scale(-norm_sq(a))))
    third = to_element(BracketPair(n, quotient_div(b, a), -quotient_div(a, b)))
    third = third + Element.basis(n + 1, (1 << n) + (1 << (n - 1)), SQRT2)
    return (
        canonicalize(first, n + 1),
        canonicalize(_c_span(second), n + 1),
        canonicalize(_c_span(third), n + 1),
    )


def ann_dlocus_construct(p: BracketPair) -> Subspace:
    """
    Build Ann{a, b} for a bracket in the D-locus and check it against the nullspace.

    :param p: a bracket in the D-locus with a, b non-zero.
    :return: the annihilator.
    :raises IdentityViolation: when the construction misses the computed annihilator.
    """
    first, second, third = dlocus_parts(p)
    built = space_sum(space_sum(first, second), third)
    computed = ann(to_element(p)).ann
    if built != computed:
        raise IdentityViolation(
            "ann-D-locus", {"built_dim": built.dim, "computed_dim": computed.dim}
        )
    logger.info(f"D-locus annihilator at level {p.level + 1}: dim {built.dim}")
    return built


def c_perp_to(a: Element) -> Subspace:
    """Elements of A_m that are C-orthogonal to 1 and to a."""
    m = a.level
    size = 1 << m
    basis = [Element.basis(m, k) for k in range(size)]
    values = [herm_inner(e, a) for e in basis]
    rows = [
        [e.coeffs[0] for e in basis],
        [e.coeffs[size >> 1] for e in basis],
        [v.s for v in values],
        [v.t for v in values],
    ]
    return nullspace(rows, m)


def ann_special(a: Element, side: str = "left") -> Subspace:
    """
    Annihilator of a one-sided bracket {a, 0} (left) or {0, a} (right).

    :param a: a non-zero element of C_{n-1}^perp, n - 1 >= 3.
    :param side: `left` or `right`.
    :return: the annihilator, checked against the nullspace.
    :raises PreconditionError: when a does not qualify.
    :raises UsageError: for an unknown side.
    :raises IdentityViolation: when the construction misses the computed annihilator.
    """
    if side not in ("left", "right"):
        raise UsageError(f"Unknown side `{side}`")
    if a.level < 3 or a.is_zero() or not in_c_perp(a):
        raise PreconditionError("Need a non-zero element of C^perp at level >= 3")
    ann_part = [
        BracketPair.left(x) if side == "left" else BracketPair.right(x)
        for x in ann(a).ann.basis()
    ]
    free_part = [
        BracketPair.right(y) if side == "left" else BracketPair.left(y)
        for y in c_perp_to(a).basis()
    ]
    built = canonicalize([to_element(q) for q in ann_part + free_part], a.level + 1)
    pair = BracketPair.left(a) if side == "left" else BracketPair.right(a)
    computed = ann(to_element(pair)).ann
    if built != computed:
        raise IdentityViolation(
            "ann-bracket-special",
            {"side": side, "built_dim": built.dim, "computed_dim": computed.dim},
        )
    return built


@lru_cache(maxsize=512)
def a5_span(a: Element) -> Subspace:
    """
    The span of (a_1, -a_2), (a_2, a_1) and Eig_2(a) for a zero-divisor a = (a_1, a_2) of A_4.

    :param a: a zero-divisor of A_4.
    :return: the subspace.
    :raises PreconditionError: unless a is a zero-divisor of A_4.
    """
    if a.level != 4 or ann(a).dim_ann != 4:
        raise PreconditionError("The span criterion applies to zero-divisors of A_4")
    a1, a2 = a.halves()
    span = canonicalize(
        [Element.from_halves(a1, -a2), Element.from_halves(a2, a1)], 4
    )
    return space_sum(span, eig2(a))


def a5_dlocus_test(a: Element, b: Element) -> bool:
    """
    D-locus membership of {a, b} for zero-divisors a, b of A_4 by the span criterion.

    :param a: a zero-divisor (a_1, a_2) of A_4.
    :param b: a zero-divisor of A_4.
    :return: whether b lies in `a5_span(a)`.
    :raises PreconditionError: unless both are zero-divisors of A_4.
    """
    if b.level != 4 or ann(b).dim_ann != 4:
        raise PreconditionError("Both elements must be zero-divisors of A_4")
    return a5_span(a).contains(b)


def vanishing_criterion(p: BracketPair) -> bool:
    """
    Evaluate (beta* - alpha) pi_C(ab) + pi_C(ay - xb) on a real basis of its arguments.

    The expression vanishes for all alpha, beta in C_n, x in Ann(a) and
    y in Ann(b) exactly on the D-locus.

    :param p: the bracket {a, b}.
    :return: whether every basis evaluation is zero.
    """
    a, b, n = p.a, p.b, p.level
    ab = c_value(cd_mul(a, b))
    values = []
    for unit in (ComplexScalar.one(n), ComplexScalar.i(n)):
        values.append(-(unit * ab))
        values.append(unit.conj() * ab)
    values += [-c_value(cd_mul(x, b)) for x in ann(a).ann.basis()]
    values += [c_value(cd_mul(a, y)) for y in ann(b).ann.basis()]
    return all(v.is_zero() for v in values)


def h_perp_space(n: int) -> Subspace:
    """H_n^perp as a coordinate subspace of A_n."""
    excluded = set(h_indices(n))
    return coordinate_space(n, [k for k in range(1 << n) if k not in excluded])


def h_perp_annihilator(p: BracketPair) -> Subspace:
    """
    Ann{a, b} cap H_{n+1}^perp from its parametric form.

    The elements {alpha a + x, beta b + y} with x in Ann(a), y in Ann(b) and
    alpha, beta in C_n that satisfy |a|^2 alpha + |b|^2 beta* = 0 and
    (beta* - alpha) pi_C(ab) + pi_C(ay - xb) = 0.

    :param p: a bracket with a, b non-zero.
    :return: the subspace of A_{n+1}, checked against the nullspace.
    :raises PreconditionError: for a zero entry.
    :raises IdentityViolation: when the two descriptions differ.
    """
    a, b, n = p.a, p.b, p.level
    if a.is_zero() or b.is_zero():
        raise PreconditionError("Need a, b non-zero")
    na, nb = norm_sq(a), norm_sq(b)
    ab = c_value(cd_mul(a, b))
    zero = ComplexScalar(n)
    gens: List[Tuple[BracketPair, ComplexScalar, ComplexScalar]] = []
    for unit in (ComplexScalar.one(n), ComplexScalar.i(n)):
        gens.append((BracketPair.left(c_scale(unit, a)), unit * na, -(unit * ab)))
        gens.append(
            (BracketPair.right(c_scale(unit, b)), unit.conj() * nb, unit.conj() * ab)
        )
    for x in ann(a).ann.basis():
        gens.append((BracketPair.left(x), zero, -c_value(cd_mul(x, b))))
    for y in ann(b).ann.basis():
        gens.append((BracketPair.right(y), zero, c_value(cd_mul(a, y))))
    rows = [
        [g[1].s for g in gens],
        [g[1].t for g in gens],
        [g[2].s for g in gens],
        [g[2].t for g in gens],
    ]
    lifted = [to_element(g[0]) for g in gens]
    vectors = []
    for combo in kernel_basis(rows, len(gens)):
        v = Element.zero(n + 1)
        for c, z in zip(combo, lifted):
            if c:
                v = v + z.scale(c)
        vectors.append(v)
    built = canonicalize(vectors, n + 1)
    computed = intersect(ann(to_element(p)).ann, h_perp_space(n + 1))
    if built != computed:
        raise IdentityViolation(
            "ann-intersect-H-perp",
            {"built_dim": built.dim, "computed_dim": computed.dim},
        )
    return built


def h_perp_decomposition(
    p: BracketPair, z: Element
) -> Optional[Tuple[ComplexScalar, Element, ComplexScalar, Element]]:
    """
    Write z = {alpha a + x, beta b + y} with x in Ann(a) and y in Ann(b).

    :param p: the bracket {a, b} with a, b non-zero.
    :param z: an element of H_{n+1}^perp.
    :return: (alpha, x, beta, y), or None when x or y falls outside the annihilators.
    """
    q = from_element(z)

    def split(u: Element, w: Element) -> Tuple[ComplexScalar, Element]:
        nw = norm_sq(w)
        iw = cd_mul(i_unit(w.level), w)
        alpha = ComplexScalar(w.level, dot(u, w) / nw, dot(u, iw) / nw)
        return alpha, u - c_scale(alpha, w)

    alpha, x = split(q.a, p.a)
    beta, y = split(q.b, p.b)
    if not ann(p.a).ann.contains(x) or not ann(p.b).ann.contains(y):
        return None
    return alpha, x, beta, y


def h_perp_structure_holds(p: BracketPair) -> bool:
    """
    Every basis vector of Ann{a,b} cap H^perp decomposes with |a|^2 alpha + |b|^2 beta* = 0.

    :param p: a bracket with a, b non-zero.
    :return: whether the decomposition exists and satisfies the relation.
    """
    computed = intersect(ann(to_element(p)).ann, h_perp_space(p.level + 1))
    na, nb = norm_sq(p.a), norm_sq(p.b)
    for z in computed.basis():
        parts = h_perp_decomposition(p, z)
        if parts is None:
            return False
        alpha, _, beta, _ = parts
        if not (alpha * na + beta.conj() * nb).is_zero():
            return False
    return True


def prop_d5_test(a: Element, b: Element, c: Element) -> Tuple[bool, bool]:
    """
    Predict D-locus membership of {{a,0},{b,c}} and compare with the direct test.

    :param a: a non-zero element of C_3^perp.
    :param b: an element of C_3^perp.
    :param c: an element of C_3^perp with {b, c} a zero-divisor of A_4.
    :return: (b is C-orthogonal to a and c is in the C-span of a, direct membership).
    :raises PreconditionError: when the inputs do not qualify.
    """
    if a.is_zero():
        raise PreconditionError("a must be non-zero")
    left = to_element(BracketPair.left(a))
    right = to_element(BracketPair.of(b, c))
    if ann(right).dim_ann == 0:
        raise PreconditionError("{b, c} must be a zero-divisor")
    in_c_span = canonicalize(_c_span(a), a.level).contains(c)
    predicted = c_orthogonal(b, a) and in_c_span
    actual = is_dlocus(BracketPair.of(left, right)).in_dlocus
    return predicted, actual


def d5_lemma1_check(a: Element, b: Element, alpha: ComplexScalar) -> bool:
    """
    {a, 0} is orthogonal to Ann{b, alpha a} when b is C-orthogonal to 1 and a.

    :param a: an element of C_n^perp.
    :param b: an element C-orthogonal to 1 and a.
    :param alpha: a value in C_n.
    :return: whether the orthogonality holds.
    :raises PreconditionError: when b does not qualify.
    """
    if not in_c_perp(b) or not c_orthogonal(b, a):
        raise PreconditionError("b must be C-orthogonal to 1 and a")
    target = ann(to_element(BracketPair.of(b, c_scale(alpha, a)))).ann
    return is_orthogonal_to(to_element(BracketPair.left(a)), target)
