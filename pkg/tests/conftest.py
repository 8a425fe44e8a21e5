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

"""Shared fixtures and hypothesis strategies."""

from typing import Iterable, Iterator, Optional

import pytest
from hypothesis import strategies as st

from cdlab.algebra import ComplexScalar, Element
from cdlab.config import LabConfig, get_lab_config, set_active_config
from cdlab.scalar import Scalar


rationals = st.fractions(min_value=-12, max_value=12, max_denominator=4)
rational_scalars = st.builds(Scalar, rationals)
scalars = st.builds(Scalar, rationals, rationals)
nonzero_scalars = scalars.filter(bool)


def elements(
    n: int, support: Optional[Iterable[int]] = None, max_terms: int = 6
) -> st.SearchStrategy:
    """Sparse elements of A_n with coordinates drawn from `support`."""
    indices = sorted(range(1 << n) if support is None else support)
    return st.dictionaries(
        st.sampled_from(indices), scalars, max_size=max_terms
    ).map(lambda terms: Element.from_terms(n, terms))


def imaginary_elements(n: int, max_terms: int = 6) -> st.SearchStrategy:
    """Elements with vanishing real part."""
    return elements(n, range(1, 1 << n), max_terms)


def c_perp_elements(n: int, max_terms: int = 6) -> st.SearchStrategy:
    """Elements of C_n^perp."""
    h = 1 << (n - 1)
    return elements(n, [k for k in range(1 << n) if k not in (0, h)], max_terms)


def complex_scalars(n: int) -> st.SearchStrategy:
    """Values of C_n with rational parts."""
    return st.builds(lambda s, t: ComplexScalar(n, s, t), rational_scalars, rational_scalars)


def e(n: int, *indices: int) -> Element:
    """Sum of basis vectors; a negative index -k stands for -e_k."""
    terms = {}
    for k in indices:
        terms[abs(k)] = terms.get(abs(k), 0) + (-1 if k < 0 else 1)
    return Element.from_terms(n, terms)


@pytest.fixture(autouse=True)
def lab_config() -> Iterator[LabConfig]:
    """Install the default profile for every test."""
    config = get_lab_config()
    set_active_config(config)
    yield config
    set_active_config(config)
