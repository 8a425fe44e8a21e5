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
JSON wire forms and the inline element syntax.

Every scalar on the wire is a literal of `cdlab.scalar`. Elements are
`{"n": int, "coeffs": [literal, ...]}`; the inline syntax is a signed sum of
`[SCALAR|(SCALAR)] e INT`, e.g. `e1+e2` or `1/2 e3 - s2 e7`.
"""

import json
import re
from fractions import Fraction
from functools import singledispatch
from typing import Any, Dict, List, Optional, Tuple

from cdlab.algebra import ComplexScalar, Element
from cdlab.annih import AnnReport
from cdlab.bracket import BracketPair
from cdlab.constructions import (
    DegenerateSearchReport,
    LambdaPair,
    ProbeReport,
    ProbeSample,
    ZmFamily,
)
from cdlab.dlocus import DlocusReport
from cdlab.errors import ParseError
from cdlab.linalg import Subspace
from cdlab.scalar import ZERO, Scalar, format_scalar, parse_scalar


JSONLike = Any

_COEFFICIENT = re.compile(r"(\d+)(?:/(\d+))?\s*(s2)?|(s2)")
_INDEX = re.compile(r"\d+")


@singledispatch
def to_json(obj: Any) -> JSONLike:
    """
    Wire form of a laboratory value.

    :param obj: the value.
    :return: a JSON-serializable structure.
    :raises TypeError: for a type without a wire form.
    """
    raise TypeError(f"No JSON form for {type(obj).__name__}")


@to_json.register
def _scalar(obj: Scalar) -> JSONLike:
    return format_scalar(obj)


@to_json.register
def _element(obj: Element) -> JSONLike:
    return {"n": obj.level, "coeffs": [format_scalar(c) for c in obj.coeffs]}


@to_json.register
def _complex(obj: ComplexScalar) -> JSONLike:
    return {"n": obj.level, "s": format_scalar(obj.s), "t": format_scalar(obj.t)}


@to_json.register
def _subspace(obj: Subspace) -> JSONLike:
    return {
        "n": obj.level,
        "dim": obj.dim,
        "basis": [to_json(v) for v in obj.basis()],
    }


@to_json.register
def _ann_report(obj: AnnReport) -> JSONLike:
    return {
        "element": to_json(obj.element),
        "dim_ann": obj.dim_ann,
        "ann": to_json(obj.ann),
        "image_dim": obj.image.dim,
    }


@to_json.register
def _bracket(obj: BracketPair) -> JSONLike:
    return {"n": obj.level, "a": to_json(obj.a), "b": to_json(obj.b)}


@to_json.register
def _dlocus_report(obj: DlocusReport) -> JSONLike:
    return {
        "pair": to_json(obj.pair),
        "in_dlocus": obj.in_dlocus,
        "cond_orth": obj.cond_orth,
        "cond_a_vs_annb": obj.cond_a_vs_annb,
        "cond_b_vs_anna": obj.cond_b_vs_anna,
        "dim_ann_a": obj.dim_ann_a,
        "dim_ann_b": obj.dim_ann_b,
        "dim_ann_bracket": obj.dim_ann_bracket,
        "jump": obj.jump,
    }


@to_json.register
def _zm_family(obj: ZmFamily) -> JSONLike:
    return {
        "n": obj.level,
        "size": len(obj.xs),
        "x": [to_json(v) for v in obj.xs],
        "y": [to_json(v) for v in obj.ys],
        "identities": ["zm-c-perp", "zm-annihilating", "zm-c-orthogonal"],
    }


@to_json.register
def _lambda_pair(obj: LambdaPair) -> JSONLike:
    return {
        "n": obj.level,
        "lambda": obj.lam,
        "a": to_json(obj.a),
        "b": to_json(obj.b),
        "z": obj.z_normalization,
        "identities": [
            "lambda-unit",
            "lambda-c-orthogonal",
            "lambda-a-ab",
            "lambda-b-ba",
            "lambda-anti-commute",
        ],
    }


@to_json.register
def _probe_sample(obj: ProbeSample) -> JSONLike:
    return {
        "label": obj.label,
        "dim_ann": obj.dim_ann,
        "member": obj.member,
        "in_h_perp": obj.in_h_perp,
        "one_sided": obj.one_sided,
        "two_sided": obj.two_sided,
    }


@to_json.register
def _probe_report(obj: ProbeReport) -> JSONLike:
    return {
        "n": obj.level,
        "c": obj.c,
        "threshold": obj.threshold,
        "stable_regime": obj.stable_regime,
        "consistent": obj.consistent,
        "top_half_holds": obj.top_half_holds,
        "witness": obj.witness,
        "members": len(obj.members),
        "samples": [to_json(s) for s in obj.samples],
    }


@to_json.register
def _degenerate_search(obj: DegenerateSearchReport) -> JSONLike:
    return {
        "n": obj.level,
        "trials": obj.trials,
        "seed": obj.seed,
        "dim": obj.dim,
        "family": [to_json(v) for v in obj.family],
    }


def dumps(obj: Any) -> str:
    """Serialize a value (or a structure of wire forms) deterministically."""
    data = obj if isinstance(obj, (dict, list, str, int, bool)) else to_json(obj)
    return json.dumps(data, indent=2)


def element_from_json(data: JSONLike) -> Element:
    """
    Read an element from its wire form.

    :param data: `{"n": int, "coeffs": [literal, ...]}`.
    :return: the element.
    :raises ParseError: when the document is malformed.
    """
    if not isinstance(data, dict) or "n" not in data or "coeffs" not in data:
        raise ParseError("Expected an object with `n` and `coeffs`", str(data), 0)
    n, coeffs = data["n"], data["coeffs"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ParseError("`n` must be a non-negative integer", str(data), 0)
    if not isinstance(coeffs, list) or len(coeffs) != 1 << n:
        raise ParseError(f"`coeffs` must list {1 << n} literals", str(data), 0)
    values = []
    for literal in coeffs:
        if isinstance(literal, int) and not isinstance(literal, bool):
            values.append(Scalar(literal))
        elif isinstance(literal, str):
            values.append(parse_scalar(literal))
        else:
            raise ParseError("Coefficients must be scalar literals", str(literal), 0)
    return Element(n, tuple(values))


def bracket_from_json(data: JSONLike) -> BracketPair:
    """
    Read a bracket from `{"n": int, "a": element, "b": element}`.

    :param data: the document.
    :return: the bracket.
    :raises ParseError: when the document is malformed.
    """
    if not isinstance(data, dict) or "a" not in data or "b" not in data:
        raise ParseError("Expected an object with `a` and `b`", str(data), 0)
    return BracketPair.of(element_from_json(data["a"]), element_from_json(data["b"]))


def _skip(text: str, pos: int) -> int:
    while pos < len(text) and text[pos].isspace():
        pos += 1
    return pos


def _read_coefficient(text: str, pos: int) -> Tuple[Scalar, int]:
    """Read an optional unsigned coefficient at `pos`; a missing one means 1."""
    if pos < len(text) and text[pos] == "(":
        close = text.find(")", pos)
        if close < 0:
            raise ParseError("Unclosed `(`", text, pos)
        inner = text[pos + 1 : close]
        offset = pos + 1 + len(inner) - len(inner.lstrip())
        try:
            value = parse_scalar(inner)
        except ParseError as e:
            raise ParseError("Malformed coefficient", text, offset + e.position) from e
        return value, close + 1
    match = _COEFFICIENT.match(text, pos)
    if match is None:
        return Scalar(1), pos
    num, den, s2_after, s2_alone = match.groups()
    if s2_alone:
        return Scalar(0, 1), match.end()
    if den is not None and int(den) == 0:
        raise ParseError("Zero denominator", text, match.start(2))
    value = Fraction(int(num), int(den) if den else 1)
    return (Scalar(0, value) if s2_after else Scalar(value)), match.end()


def parse_element(text: str, n: int) -> Element:
    """
    Parse the inline syntax, e.g. `e1+e2` or `1/2 e3 - (1+s2) e7`.

    :param text: the expression; `0` is the zero element.
    :param n: the level.
    :return: the element.
    :raises ParseError: on malformed input, with the absolute offending position.
    """
    if text.strip() == "0":
        return Element.zero(n)
    terms: Dict[int, Scalar] = {}
    pos = _skip(text, 0)
    if pos == len(text):
        raise ParseError("Empty element expression", text, pos)
    first = True
    while pos < len(text):
        sign = 1
        if text[pos] in "+-":
            sign = -1 if text[pos] == "-" else 1
            pos = _skip(text, pos + 1)
        elif not first:
            raise ParseError("Expected `+` or `-`", text, pos)
        coeff, pos = _read_coefficient(text, pos)
        pos = _skip(text, pos)
        if pos >= len(text) or text[pos] != "e":
            raise ParseError("Expected `e`", text, pos)
        match = _INDEX.match(text, pos + 1)
        if match is None:
            raise ParseError("Expected a basis index", text, pos + 1)
        k = int(match.group())
        if k >= 1 << n:
            raise ParseError(f"Basis index {k} out of range for A_{n}", text, pos + 1)
        terms[k] = terms.get(k, ZERO) + (coeff if sign > 0 else -coeff)
        pos = _skip(text, match.end())
        first = False
    return Element.from_terms(n, dict(terms))


def parse_document(text: str, n: Optional[int] = None) -> List[Element]:
    """
    Read elements from a JSON document or from inline expressions.

    JSON may be one element, a list of elements, or a bracket object whose
    entries are returned in order. Inline input holds one expression per line
    or per `;`.

    :param text: the document.
    :param n: the level; required for inline input.
    :return: the elements.
    :raises ParseError: when the input is malformed or the level is missing.
    """
    stripped = text.strip()
    if stripped.startswith(("{", "[")):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as e:
            raise ParseError(f"Invalid JSON: {e.msg}", stripped, e.pos) from e
        if isinstance(data, list):
            return [element_from_json(item) for item in data]
        if isinstance(data, dict) and "a" in data and "b" in data:
            pair = bracket_from_json(data)
            return [pair.a, pair.b]
        return [element_from_json(data)]
    if n is None:
        raise ParseError("Inline elements need --n", stripped, 0)
    expressions = [e for e in re.split(r"[;\n]", text) if e.strip()]
    return [parse_element(e, n) for e in expressions]
