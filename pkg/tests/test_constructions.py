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

"""Tests for the inductive constructions and the stability probe."""

import pytest

from cdlab.algebra import Element, c_orthogonal, cd_mul, in_h_perp, norm_sq
from cdlab.annih import ann, max_ann_dim
from cdlab.bracket import from_element
from cdlab.constructions import (
    degenerate_search,
    degenerate_subalgebra,
    dugger,
    dugger_element,
    lambda_algebra_table,
    lambda_chain,
    lambda_pair,
    one_sided_family,
    probe_samples,
    stiefel_zero_divisors,
    tcn_probe,
    top_annihilator_element,
    top_dlocus,
    zm_family,
)
from cdlab.dlocus import is_dlocus
from cdlab.errors import PreconditionError, UsageError
from cdlab.scalar import SQRT2, Scalar
from tests.conftest import e


@pytest.mark.parametrize("n", [3, 4, 5])
def test_zm_family(n: int) -> None:
    """Two families of 2^(n-3) elements; distinct members of one family annihilate each other."""
    family = zm_family(n)
    assert len(family.xs) == len(family.ys) == 1 << (n - 3)
    for x in family.xs:
        for y in family.ys:
            assert c_orthogonal(x, y)


def test_zm_family_levels() -> None:
    """The construction starts at level 3."""
    with pytest.raises(UsageError):
        zm_family(2)


@pytest.mark.parametrize("n,dim", [(3, 2), (4, 3), (5, 5)])
def test_degenerate_subalgebra(n: int, dim: int) -> None:
    """1 and the X family span a subalgebra of dimension 1 + 2^(n-3)."""
    assert degenerate_subalgebra(n).dim == dim


@pytest.mark.slow
def test_degenerate_subalgebra_level_6() -> None:
    """Nine dimensions at level 6."""
    assert degenerate_subalgebra(6).dim == 9


def test_lambda_chain() -> None:
    """Each link raises lambda by one and the level by one."""
    chain = lambda_chain(2)
    assert [(p.level, p.lam) for p in chain] == [(3, 1), (4, 2)]
    last = chain[-1]
    assert cd_mul(last.a, cd_mul(last.a, last.b)) == last.b.scale(-2)
    assert norm_sq(last.a) == norm_sq(last.b) == 1
    with pytest.raises(UsageError):
        lambda_chain(0)


@pytest.mark.slow
def test_lambda_pair_level_6() -> None:
    """lambda = 4 at level 6."""
    pair = lambda_pair(4)
    assert (pair.level, pair.lam) == (6, 4)


def test_lambda_algebra_table() -> None:
    """x, y and the normalized product close under multiplication."""
    table = lambda_algebra_table(lambda_pair(2))
    assert table[("x", "y")] == (SQRT2, "z")
    assert table[("z", "z")] == (Scalar(-1), "1")
    assert lambda_pair(2).z_normalization == "ab/sqrt(lambda)"
    table = lambda_algebra_table(lambda_pair(3))
    assert table[("z", "z")] == (Scalar(-3), "1")
    assert table[("y", "z")] == (Scalar(3), "x")
    assert lambda_pair(3).z_normalization == "ab"


@pytest.mark.parametrize("n,side,bracket", [(3, 0, 4), (4, 4, 12)])
def test_top_dlocus(n: int, side: int, bracket: int) -> None:
    """Entries with the largest annihilators, and the bracket jump."""
    report = is_dlocus(top_dlocus(n))
    assert report.in_dlocus
    assert (report.dim_ann_a, report.dim_ann_b) == (side, side)
    assert report.dim_ann_bracket == bracket
    with pytest.raises(UsageError):
        top_dlocus(2)


@pytest.mark.slow
def test_top_dlocus_level_5() -> None:
    """Sixteen dimensional sides at level 5."""
    report = is_dlocus(top_dlocus(5))
    assert (report.dim_ann_a, report.dim_ann_b, report.dim_ann_bracket) == (16, 16, 36)


def test_top_annihilator_element() -> None:
    """The lift at level 5 has an annihilator of dimension 2^5 - 40 + 20."""
    z = top_annihilator_element(5)
    assert ann(z).dim_ann == 12
    assert in_h_perp(z)
    assert not from_element(z).is_one_sided()


@pytest.mark.parametrize("n,dim", [(4, 4), (5, 12)])
def test_dugger(n: int, dim: int) -> None:
    """Ann((i_(n-1), a)) has dimension 2^(n-1) - 4 and the element is not in H^perp."""
    report = dugger(n, Element.basis(n - 1, 1))
    assert report.dim_ann == dim
    assert not in_h_perp(dugger_element(n, Element.basis(n - 1, 1)))


def test_dugger_preconditions() -> None:
    """a must be an alternative unit of C^perp one level down."""
    with pytest.raises(PreconditionError):
        dugger(4, e(3, 1, 2))
    with pytest.raises(PreconditionError):
        dugger(4, e(3, 4))
    with pytest.raises(UsageError):
        dugger(4, e(4, 1))


def test_stiefel_zero_divisors() -> None:
    """168 signed pairs, none repeated."""
    pool = stiefel_zero_divisors()
    assert len(pool) == 168
    assert len(set(pool)) == 168


def test_one_sided_family() -> None:
    """Labelled one-sided brackets one level up."""
    family = one_sided_family(4)
    assert len(family) == 24
    labels = [label for label, _ in family]
    assert labels[:2] == ["{e1+,0}", "{0,e1+}"]
    for _, z in family:
        assert from_element(z).is_one_sided()
        assert ann(z).dim_ann == 4
    assert len(one_sided_family(5)) == 336


def test_probe_samples_are_reproducible() -> None:
    """The same seed draws the same samples."""
    first = probe_samples(4, 10, 7)
    second = probe_samples(4, 10, 7)
    assert [label for label, _ in first] == [label for label, _ in second]
    assert [z for _, z in first] == [z for _, z in second]


def test_probe_level_4() -> None:
    """At level 4 only the top-half statement is tested."""
    report = tcn_probe(4, 0, 24, 0)
    assert report.threshold == max_ann_dim(4)
    assert not report.stable_regime
    assert report.top_half_holds
    assert report.consistent
    assert all(s.dim_ann in (0, 4) for s in report.samples)


def test_probe_arguments() -> None:
    """Levels below 4 and codimensions that are not multiples of 4 are refused."""
    with pytest.raises(UsageError):
        tcn_probe(3, 0, 10, 0)
    with pytest.raises(UsageError):
        tcn_probe(5, 2, 10, 0)
    with pytest.raises(UsageError):
        tcn_probe(5, 16, 10, 0)


@pytest.mark.slow
@pytest.mark.parametrize("c,stable", [(0, True), (4, False)])
def test_probe_level_5(c: int, stable: bool) -> None:
    """Stable at c = 0; at c = 4 the top D-locus lift is a two-sided witness."""
    report = tcn_probe(5, c, 40, 0)
    assert report.stable_regime == stable
    assert report.consistent
    if not stable:
        assert report.witness == "top-dlocus"


def test_degenerate_search() -> None:
    """The greedy family is mutually annihilating and reproducible."""
    report = degenerate_search(4, 60, 0)
    assert report.dim == 1 + len(report.family)
    for u in report.family:
        for v in report.family:
            if u != v:
                assert cd_mul(u, v).is_zero()
    assert degenerate_search(4, 60, 0) == report


@pytest.mark.slow
def test_probe_level_6() -> None:
    """Every sampled element of A_6 with an annihilator of dimension >= 40 is one-sided."""
    report = tcn_probe(6, 4, 12, 0)
    assert report.threshold == 40
    assert report.stable_regime
    assert report.members
    assert report.consistent
    assert report.witness is None
