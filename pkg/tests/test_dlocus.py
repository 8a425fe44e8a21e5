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

"""Tests for the D-locus and the annihilators of brackets."""

import pytest

from cdlab.algebra import ComplexScalar, Element
from cdlab.annih import ann
from cdlab.bracket import BracketPair, to_element
from cdlab.constructions import stiefel_zero_divisors
from cdlab.dlocus import (
    a5_dlocus_test,
    a5_span,
    ann_dlocus_construct,
    ann_special,
    c_perp_to,
    d5_lemma1_check,
    dlocus_parts,
    dlocus_via_images,
    h_perp_annihilator,
    h_perp_decomposition,
    h_perp_space,
    h_perp_structure_holds,
    is_dlocus,
    prop_d5_test,
    vanishing_criterion,
)
from cdlab.errors import PreconditionError, UsageError
from cdlab.linalg import is_subspace
from tests.conftest import e


def test_octonion_pair_in_dlocus() -> None:
    """{e1, e2} at level 3 has a four dimensional annihilator."""
    report = is_dlocus(BracketPair.of(e(3, 1), e(3, 2)))
    assert report.in_dlocus
    assert (report.dim_ann_a, report.dim_ann_b, report.dim_ann_bracket) == (0, 0, 4)
    assert report.jump == 4


def test_pairs_off_dlocus() -> None:
    """{e1, e1} fails C-orthogonality and {a, 0} fails a orthogonal to Ann(0)."""
    report = is_dlocus(BracketPair.of(e(3, 1), e(3, 1)))
    assert not report.in_dlocus
    assert not report.cond_orth
    assert report.dim_ann_bracket == 0
    report = is_dlocus(BracketPair.left(e(3, 1)))
    assert not report.in_dlocus
    assert report.cond_orth
    assert not report.cond_a_vs_annb
    assert report.dim_ann_b == 8


def test_construct_annihilator_on_dlocus() -> None:
    """The three parts span the computed annihilator."""
    p = BracketPair.of(e(3, 1), e(3, 2))
    built = ann_dlocus_construct(p)
    assert built == ann(to_element(p)).ann
    first, second, third = dlocus_parts(p)
    assert (first.dim, second.dim, third.dim) == (0, 2, 2)


def test_construct_needs_dlocus() -> None:
    """Off the D-locus, or with a zero entry, there is nothing to build."""
    with pytest.raises(PreconditionError):
        dlocus_parts(BracketPair.of(e(3, 1), e(3, 1)))
    with pytest.raises(PreconditionError):
        dlocus_parts(BracketPair.left(e(3, 1)))


def test_sedenion_dlocus() -> None:
    """Stiefel pairs at level 4: the jump is 4 on the D-locus."""
    a, b = e(4, 1, 10), e(4, 4, 15)
    report = is_dlocus(BracketPair.of(a, b))
    assert report.in_dlocus
    assert (report.dim_ann_a, report.dim_ann_b) == (4, 4)
    assert report.dim_ann_bracket == 12
    assert ann_dlocus_construct(report.pair).dim == 12


def test_span_criterion() -> None:
    """b lies in span{(a1, -a2), (a2, a1)} + Eig_2(a) exactly on the D-locus."""
    a = e(4, 1, 10)
    assert a5_dlocus_test(a, e(4, 4, 15))
    assert a5_dlocus_test(a, e(4, 1, -10))
    assert not a5_dlocus_test(a, a)
    assert a5_span(a).dim == 6
    with pytest.raises(PreconditionError):
        a5_dlocus_test(a, e(4, 1))
    with pytest.raises(PreconditionError):
        a5_span(e(3, 1))


@pytest.mark.parametrize("index", [0, 5, 42, 77, 120, 150])
def test_span_criterion_agrees_with_direct_test(index: int) -> None:
    """The span criterion and the orthogonality conditions agree on Stiefel pairs."""
    pool = stiefel_zero_divisors()
    a = pool[index]
    for b in pool[:: 23]:
        direct = is_dlocus(BracketPair.of(a, b)).in_dlocus
        assert a5_dlocus_test(a, b) == direct


def test_vanishing_criterion() -> None:
    """The vanishing expression detects the D-locus."""
    assert vanishing_criterion(BracketPair.of(e(3, 1), e(3, 2)))
    assert not vanishing_criterion(BracketPair.of(e(3, 1), e(3, 1)))


def test_image_conditions() -> None:
    """Orthogonality to Ann(b) restated as C-orthogonality and as a in Im(b)."""
    for p in (
        BracketPair.of(e(4, 1, 10), e(4, 4, 15)),
        BracketPair.of(e(4, 1, 10), e(4, 2, 11)),
        BracketPair.of(e(4, 1, 10), e(4, 3)),
    ):
        report, restated = is_dlocus(p), dlocus_via_images(p)
        assert report.cond_a_vs_annb == restated.a_c_orth_annb == restated.a_in_image_b
        assert report.cond_b_vs_anna == restated.b_c_orth_anna == restated.b_in_image_a


def test_special_annihilators() -> None:
    """Ann{a, 0} and Ann{0, a} for a in C_3^perp."""
    a = e(3, 1)
    assert c_perp_to(a).dim == 4
    assert ann_special(a, "left").dim == 4
    assert ann_special(a, "right").dim == 4
    z = e(4, 1, 10)
    assert ann_special(z, "left").dim == ann(z).dim_ann + 12
    with pytest.raises(UsageError):
        ann_special(a, "up")
    with pytest.raises(PreconditionError):
        ann_special(e(2, 1))
    with pytest.raises(PreconditionError):
        ann_special(Element.zero(3))


def test_h_perp_annihilator() -> None:
    """Ann{a, b} cap H^perp from its parametric form."""
    p = BracketPair.of(e(3, 1), e(3, 2))
    built = h_perp_annihilator(p)
    assert built.dim == 2
    assert is_subspace(built, h_perp_space(4))
    assert h_perp_structure_holds(p)
    for z in built.basis():
        assert h_perp_decomposition(p, z) is not None
    off = BracketPair.of(e(4, 1, 10), e(4, 2, 11))
    report = is_dlocus(off)
    assert not report.in_dlocus
    assert h_perp_annihilator(off).dim == report.dim_ann_a + report.dim_ann_b
    with pytest.raises(PreconditionError):
        h_perp_annihilator(BracketPair.left(e(3, 1)))


def test_h_perp_space() -> None:
    """H_n^perp has codimension 4."""
    assert h_perp_space(4).dim == 12
    assert h_perp_space(5).dim == 28


@pytest.mark.parametrize(
    "b,c,expected",
    [((2,), (1,), True), ((2,), (3,), False), ((2,), (-1,), True), ((3,), (2,), False)],
)
def test_prop_d5(b: tuple, c: tuple, expected: bool) -> None:
    """{{a, 0}, {b, c}} is in the D-locus iff b is C-orthogonal to a and c is in C-span(a)."""
    predicted, actual = prop_d5_test(e(3, 1), e(3, *b), e(3, *c))
    assert predicted == expected
    assert actual == predicted


def test_prop_d5_preconditions() -> None:
    """a must be non-zero and {b, c} a zero-divisor."""
    with pytest.raises(PreconditionError):
        prop_d5_test(Element.zero(3), e(3, 2), e(3, 1))
    with pytest.raises(PreconditionError):
        prop_d5_test(e(3, 1), e(3, 2), e(3, 2))


def test_d5_lemma1() -> None:
    """{a, 0} is orthogonal to Ann{b, alpha a} for b C-orthogonal to 1 and a."""
    assert d5_lemma1_check(e(3, 1), e(3, 2), ComplexScalar(3, 1, 1))
    assert d5_lemma1_check(e(3, 1), e(3, 3, 6), ComplexScalar(3, 0, 2))
    with pytest.raises(PreconditionError):
        d5_lemma1_check(e(3, 1), e(3, 1), ComplexScalar.one(3))
