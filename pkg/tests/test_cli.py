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

"""Tests for the command line interface."""

import json
from pathlib import Path
from typing import List, Optional

import pytest
from click.testing import CliRunner, Result

from cdlab import __version__, verify
from cdlab.cli import cli
from cdlab.codec import to_json
from cdlab.verify import Check
from tests.conftest import e


def _invoke(args: List[str], stdin: Optional[str] = None) -> Result:
    return CliRunner().invoke(cli, args, input=stdin)


def _json(args: List[str], stdin: Optional[str] = None) -> dict:
    result = _invoke(args + ["--format", "json"], stdin)
    assert result.exit_code == 0, result.output
    return json.loads(result.output)


def test_version() -> None:
    """--version prints the package version."""
    result = _invoke(["--version"])
    assert result.exit_code == 0
    assert __version__ in result.output


def test_mul() -> None:
    """e1 e2 = e3 in A_2, as a table and as JSON."""
    result = _invoke(["mul", "--n", "2", "e1", "e2"])
    assert result.exit_code == 0, result.output
    assert "e3" in result.output
    data = _json(["mul", "--n", "2", "e1", "e2"])
    assert data["product"] == {"n": 2, "coeffs": ["0", "0", "0", "1"]}


def test_conj_and_inner() -> None:
    """Conjugate, norm and inner products."""
    data = _json(["conj", "--n", "3", "e0+e1"])
    assert data["conj"]["coeffs"][:2] == ["1", "-1"]
    assert data["norm_sq"] == "2"
    data = _json(["inner", "--n", "2", "e1", "e3"])
    assert data["hermitian"] == {"n": 2, "s": "0", "t": "1"}
    assert data["c_orthogonal"] is False


def test_ann_from_stdin() -> None:
    """A JSON element on stdin; the level comes from the document."""
    document = json.dumps(to_json(e(4, 1, 10)))
    data = _json(["ann"], stdin=document)
    assert data["dim_ann"] == 4
    assert data["image_dim"] == 12
    result = _invoke(["ann", "--basis"], stdin=document)
    assert result.exit_code == 0
    assert "ann[3]" in result.output


def test_ann_from_file(tmp_path: Path) -> None:
    """--in reads the document from a file and --out writes the report."""
    source, target = tmp_path / "a.txt", tmp_path / "out.json"
    source.write_text("e4 + e9\n", encoding="utf-8")
    result = _invoke(
        ["ann", "--n", "4", "--in", str(source), "--format", "json", "--out", str(target)]
    )
    assert result.exit_code == 0, result.output
    assert json.loads(target.read_text(encoding="utf-8"))["dim_ann"] == 4


def test_bracket_mul() -> None:
    """{0, e1}{e1, 0} = (0, i_3) is not zero; {e1, 0}{0, e2} is."""
    data = _json(["bracket-mul", "--n", "3", "0", "e1", "e1", "0"])
    assert data["zero"] is False
    assert data["product"]["coeffs"][12] == "1"
    data = _json(["bracket-mul", "--n", "3", "e1", "0", "0", "e2"])
    assert data["zero"] is True
    assert all(data["zero_conditions"].values())


def test_dlocus() -> None:
    """Membership, the construction and the span criterion."""
    data = _json(["dlocus", "--n", "3", "--construct", "e1", "e2"])
    assert data["in_dlocus"] is True
    assert data["dim_ann_bracket"] == 4
    assert data["ann"]["dim"] == 4
    data = _json(["dlocus", "--n", "4", "e1+e10", "e4+e15"])
    assert data["span_criterion"] is True
    assert data["in_dlocus"] is True


def test_construct() -> None:
    """Constructions by kind."""
    assert _json(["construct", "lambda", "--n", "4"])["lambda"] == 2
    assert _json(["construct", "zm", "--n", "4"])["size"] == 2
    assert _json(["construct", "topd", "--n", "4"])["dim_ann_bracket"] == 12
    assert _json(["construct", "dugger", "--n", "4"])["dim_ann"] == 4
    assert _json(["construct", "degsub", "--n", "4"])["dim"] == 3
    data = _json(["construct", "degsub", "--n", "4", "--search", "--seed", "1", "--trials", "30"])
    assert data["seed"] == 1
    assert data["dim"] == 1 + len(data["family"])


@pytest.mark.slow
def test_construct_lambda_level_6() -> None:
    """lambda = 4 at level 6."""
    assert _json(["construct", "lambda", "--n", "6"])["lambda"] == 4


def test_probe() -> None:
    """A consistent probe at level 4 exits cleanly."""
    data = _json(["probe-tcn", "--n", "4", "--trials", "24"])
    assert data["consistent"] is True
    assert data["threshold"] == 4


@pytest.mark.parametrize(
    "args",
    [
        ["mul", "e1", "e2"],
        ["mul", "--n", "2", "e1", "x2"],
        ["mul", "--n", "2", "e1"],
        ["mul", "--n", "12", "e1", "e2"],
        ["bracket-mul", "--n", "3", "e4", "e1", "e1", "e1"],
        ["construct", "zm", "--n", "2"],
        ["construct", "dugger", "--n", "4", "--a", "e1+e2"],
        ["probe-tcn", "--n", "5", "--c", "3"],
        ["verify", "no-such-check", "--n", "3"],
        ["mul", "--profile", "nope", "--n", "2", "e1", "e2"],
    ],
)
def test_usage_errors_exit_2(args: List[str]) -> None:
    """Usage, parse and precondition errors exit with code 2."""
    result = _invoke(args)
    assert result.exit_code == 2, result.output


def test_allow_large_lifts_the_cap() -> None:
    """The cap applies unless it is lifted."""
    assert _invoke(["mul", "--profile", "desk", "--n", "7", "e1", "e2"]).exit_code == 2
    result = _invoke(["mul", "--profile", "desk", "--allow-large", "--n", "7", "e1", "e2"])
    assert result.exit_code == 0, result.output


def test_verify_single_check() -> None:
    """One check, as a table and as JSON."""
    result = _invoke(["verify", "table-soundness", "--n", "3"])
    assert result.exit_code == 0, result.output
    assert "pass" in result.output
    data = _json(["verify", "lem-convert", "--n", "3", "--trials", "5"])
    assert [r["status"] for r in data] == ["pass"]
    assert "elapsed" not in data[0]


def test_verify_list() -> None:
    """--list prints every check id."""
    data = _json(["verify", "--list"])
    assert data == verify.verify_registry()


def test_verify_failure_exits_1(monkeypatch: pytest.MonkeyPatch) -> None:
    """A failing check exits with code 1 and prints its witnesses."""
    registry = dict(verify._REGISTRY)  # pylint: disable=protected-access
    registry["always-fails"] = Check(
        "always-fails", "never holds", lambda n, seed, trials: (1, [{"n": n}]), (1, 1)
    )
    monkeypatch.setattr(verify, "_REGISTRY", registry)
    result = _invoke(["verify", "always-fails"])
    assert result.exit_code == 1
    assert "always-fails: {'n': 1}" in result.output


@pytest.mark.slow
def test_verify_all() -> None:
    """The whole registry passes at level 4 with the default seed."""
    result = _invoke(["verify", "all", "--n", "4", "--seed", "0", "--trials", "12"])
    assert result.exit_code == 0, result.output


def test_verify_json_is_byte_identical() -> None:
    """Two runs with the same seed print the same JSON."""
    args = ["verify", "herm-symmetry", "--n", "3", "--seed", "0", "--trials", "6"]
    args += ["--format", "json"]
    first, second = _invoke(args), _invoke(args)
    assert first.exit_code == 0, first.output
    assert first.output == second.output


@pytest.mark.slow
def test_verify_all_json_is_byte_identical() -> None:
    """The full registry at its default counts prints the same JSON twice."""
    args = ["verify", "all", "--n", "4", "--seed", "0", "--format", "json"]
    first, second = _invoke(args), _invoke(args)
    assert first.exit_code == 0, first.output
    assert first.output == second.output
    assert all(r["status"] == "pass" for r in json.loads(first.output))


def test_construct_lambda_reports_z() -> None:
    """The lambda construction says how z is normalized."""
    assert _json(["construct", "lambda", "--n", "4"])["z"] == "ab/sqrt(lambda)"
    assert _json(["construct", "lambda", "--n", "5"])["z"] == "ab"
