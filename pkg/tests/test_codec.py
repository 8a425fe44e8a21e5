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

"""Tests for the wire forms and the inline element syntax."""

import json

import pytest

from cdlab.algebra import ComplexScalar, Element
from cdlab.annih import ann
from cdlab.bracket import BracketPair
from cdlab.codec import (
    bracket_from_json,
    dumps,
    element_from_json,
    parse_document,
    parse_element,
    to_json,
)
from cdlab.constructions import lambda_pair, zm_family
from cdlab.dlocus import is_dlocus
from cdlab.errors import ParseError
from cdlab.scalar import SQRT2, Scalar
from tests.conftest import e


def test_element_wire_form() -> None:
    """Coefficients are scalar literals."""
    x = Element.from_terms(2, {1: Scalar(1, -1), 3: SQRT2})
    assert to_json(x) == {"n": 2, "coeffs": ["0", "1-s2", "0", "s2"]}
    assert element_from_json(to_json(x)) == x
    assert element_from_json({"n": 1, "coeffs": [1, "-1/2"]}) == Element.from_terms(
        1, {0: 1, 1: Scalar(-1) / 2}
    )


@pytest.mark.parametrize(
    "data",
    [
        [],
        {"n": 2},
        {"n": -1, "coeffs": []},
        {"n": True, "coeffs": ["0", "0"]},
        {"n": 1, "coeffs": ["0"]},
        {"n": 1, "coeffs": ["0", 1.5]},
        {"n": 1, "coeffs": ["0", "1/0"]},
    ],
)
def test_malformed_elements(data: object) -> None:
    """Malformed documents are parse errors."""
    with pytest.raises(ParseError):
        element_from_json(data)


def test_bracket_wire_form() -> None:
    """Brackets carry both entries."""
    p = BracketPair.of(e(3, 1), e(3, 2))
    assert bracket_from_json(to_json(p)) == p
    with pytest.raises(ParseError):
        bracket_from_json({"a": to_json(e(3, 1))})


def test_report_wire_forms() -> None:
    """Reports serialize to plain structures."""
    report = to_json(ann(e(4, 1, 10)))
    assert report["dim_ann"] == 4
    assert report["ann"]["dim"] == 4
    assert report["image_dim"] == 12
    dlocus = to_json(is_dlocus(BracketPair.of(e(3, 1), e(3, 2))))
    assert dlocus["in_dlocus"] is True
    assert dlocus["jump"] == 4
    assert to_json(lambda_pair(2))["lambda"] == 2
    assert to_json(lambda_pair(2))["z"] == "ab/sqrt(lambda)"
    assert to_json(zm_family(4))["size"] == 2
    assert to_json(ComplexScalar(3, 1, SQRT2)) == {"n": 3, "s": "1", "t": "s2"}
    with pytest.raises(TypeError):
        to_json(object())


def test_dumps_is_deterministic() -> None:
    """The same value always serializes to the same text."""
    text = dumps(ann(e(4, 1, 10)))
    assert text == dumps(ann(e(4, 1, 10)))
    assert json.loads(text)["dim_ann"] == 4
    assert dumps({"a": 1}) == json.dumps({"a": 1}, indent=2)


@pytest.mark.parametrize(
    "text,terms",
    [
        ("e1+e2", {1: 1, 2: 1}),
        ("1/2 e3 - s2 e7", {3: Scalar(1) / 2, 7: -SQRT2}),
        ("(1+s2) e5", {5: Scalar(1, 1)}),
        ("-e1 - 2e1", {1: -3}),
        ("  3 e0 ", {0: 3}),
        ("0", {}),
    ],
)
def test_parse_element(text: str, terms: dict) -> None:
    """Inline syntax."""
    assert parse_element(text, 3) == Element.from_terms(3, terms)


def test_str_reads_back() -> None:
    """The readable form of an element is valid inline syntax."""
    x = Element.from_terms(4, {1: Scalar(1) / 2, 7: -SQRT2, 9: Scalar(1, 1), 15: -1})
    assert parse_element(str(x), 4) == x


@pytest.mark.parametrize(
    "text,position",
    [
        ("", 0),
        ("e1 e2", 3),
        ("e8", 1),
        ("1/0 e1", 2),
        ("(1+) e1", 3),
        ("(1 e1", 0),
        ("e", 1),
        ("2 x1", 2),
    ],
)
def test_parse_element_errors(text: str, position: int) -> None:
    """Errors point at the offending character."""
    with pytest.raises(ParseError) as excinfo:
        parse_element(text, 3)
    assert excinfo.value.position == position


def test_parse_document() -> None:
    """JSON elements, lists, brackets and inline lines."""
    x, y = e(3, 1), e(3, 2)
    assert parse_document(json.dumps(to_json(x))) == [x]
    assert parse_document(json.dumps([to_json(x), to_json(y)])) == [x, y]
    assert parse_document(json.dumps(to_json(BracketPair.of(x, y)))) == [x, y]
    assert parse_document("e1\ne2", 3) == [x, y]
    assert parse_document("e1; e2\n", 3) == [x, y]


def test_parse_document_errors() -> None:
    """Inline input needs a level; broken JSON reports its position."""
    with pytest.raises(ParseError, match="Inline elements need --n"):
        parse_document("e1")
    with pytest.raises(ParseError):
        parse_document('{"n": 1,')
