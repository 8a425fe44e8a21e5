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

"""Tests for the check registry and its runner."""

import dataclasses
import json
from typing import List

import pytest

from cdlab import verify
from cdlab.annih import ann
from cdlab.codec import dumps
from cdlab.config import LabConfig, set_active_config
from cdlab.constructions import ProbeReport, ProbeSample
from cdlab.errors import IdentityViolation, UsageError
from cdlab.verify import (
    Check,
    VerifyResult,
    get_check,
    register,
    run_check,
    run_checks,
    verify_registry,
)


CHEAP_CHECKS = [
    "scalar-field-axioms",
    "table-soundness",
    "cd-mul-raw-agreement",
    "classical-algebras",
    "real-inner-dot",
    "herm-symmetry",
    "lem-convert",
    "prop-bracket-multiply",
    "thm-bracket-multiply",
    "prop-bracket-zd",
    "lambda-step",
    "thm-D-locus-dichotomy",
    "cor-Zm",
    "lem-Zm",
]


def test_registry_contents() -> None:
    """Every identity family has its checks registered."""
    ids = verify_registry()
    assert ids == sorted(ids)
    for check_id in (
        "prop-bracket-multiply",
        "thm-ann-D-locus",
        "thm-stable-dim-desk",
        "cor-D5",
        "prop-Dugger-ex",
        "lambda-algebra",
        "thm-ann-bracket-bound",
        "lem-D-locus-independent",
        "lem-D5-2",
        *CHEAP_CHECKS,
    ):
        assert check_id in ids
    assert all(get_check(i).statement for i in ids)


def test_unknown_check() -> None:
    """Unknown ids are usage errors, also inside a batch."""
    with pytest.raises(UsageError):
        get_check("no-such-check")
    with pytest.raises(UsageError):
        run_checks(["table-soundness", "no-such-check"], 3, 0, 4)


def test_duplicate_registration() -> None:
    """A check id can only be registered once."""
    with pytest.raises(ValueError):
        register("table-soundness", "again")(lambda n, seed, trials: (0, []))


def test_level_clamping() -> None:
    """Requested levels are clamped to the range of the check."""
    check = Check("clamped", "clamped", lambda n, seed, trials: (0, []), (3, 5))
    assert [check.level_for(n) for n in (1, 4, 8)] == [3, 4, 5]
    assert get_check("scalar-field-axioms").level_for(6) == 0


@pytest.mark.parametrize("check_id", CHEAP_CHECKS)
def test_cheap_checks_pass(check_id: str) -> None:
    """Cheap checks pass at level 3 with a handful of trials."""
    result = run_check(check_id, 3, 0, 6)
    assert result.passed, result.witnesses
    assert result.status == "pass"
    assert result.witnesses == ()


def test_results_are_reproducible() -> None:
    """The same seed gives the same report, timings aside."""
    first = run_checks(["herm-symmetry", "lem-convert"], 3, 5, 6)
    second = run_checks(["lem-convert", "herm-symmetry"], 3, 5, 6)
    assert [r.check_id for r in first] == ["herm-symmetry", "lem-convert"]
    assert dumps([r.to_json() for r in first]) == dumps([r.to_json() for r in second])
    assert "elapsed" not in first[0].to_json()
    assert "elapsed" in first[0].to_json(timings=True)


def test_failures_carry_witnesses(monkeypatch: pytest.MonkeyPatch) -> None:
    """Counterexamples and violated identities become failing results."""

    def failing(n: int, seed: int, trials: int) -> verify.Outcome:
        return trials, [{"n": n, "k": k} for k in range(5)]

    def violated(n: int, seed: int, trials: int) -> verify.Outcome:
        raise IdentityViolation("made-up", {"n": n})

    registry = dict(verify._REGISTRY)  # pylint: disable=protected-access
    registry["always-fails"] = Check("always-fails", "never holds", failing, (2, 2))
    registry["always-violated"] = Check("always-violated", "never holds", violated, (2, 2))
    monkeypatch.setattr(verify, "_REGISTRY", registry)

    result = run_check("always-fails", 4, 0, 7)
    assert not result.passed
    assert result.level == 2
    assert result.trials == 7
    assert len(result.witnesses) == verify.MAX_WITNESSES

    result = run_check("always-violated", 4, 0, 7)
    assert result.status == "fail"
    assert result.witnesses == ({"identity": "made-up", "witness": {"n": 2}},)
    assert json.loads(dumps(result))["status"] == "fail"


def test_result_wire_form() -> None:
    """Results serialize without timings by default."""
    result = VerifyResult("x", "statement", 3, 10, "pass", (), 1.25)
    assert result.to_json() == {
        "check_id": "x",
        "statement": "statement",
        "level": 3,
        "trials": 10,
        "status": "pass",
        "witnesses": [],
    }
    assert result.to_json(timings=True)["elapsed"] == 1.25


@pytest.mark.slow
def test_all_checks_pass_at_level_4() -> None:
    """The whole registry passes with the default seed."""
    results = run_checks(None, 4, 0, 12)
    failed = [(r.check_id, r.witnesses) for r in results if not r.passed]
    assert not failed
    assert len(results) == len(verify_registry())


@pytest.mark.slow
def test_workers_give_the_same_results() -> None:
    """A process pool changes nothing but the timings."""
    serial = run_checks(CHEAP_CHECKS, 3, 1, 6)
    pooled = run_checks(CHEAP_CHECKS, 3, 1, 6, workers=2)
    assert [r.to_json() for r in serial] == [r.to_json() for r in pooled]


def test_trial_floors(monkeypatch: pytest.MonkeyPatch, lab_config: LabConfig) -> None:
    """Without an explicit count a check runs the configured trials, raised to its floor."""
    monkeypatch.delenv("CDLAB_TRIALS", raising=False)
    assert get_check("thm-bracket-multiply").trials_for(None) == 500
    assert get_check("lem-C-conj-linear").trials_for(None) == 1000
    assert get_check("thm-4dim").trials_for(None) == max(200, lab_config.trials)
    assert get_check("thm-4dim").trials_for(12) == 12
    set_active_config(dataclasses.replace(lab_config, trials=50))
    assert get_check("thm-D-locus-dichotomy").trials_for(None) == 200
    assert get_check("cor-D5").trials_for(None) == 100
    assert get_check("herm-symmetry").trials_for(None) == 50


def test_floor_checks_do_not_scale_with_level() -> None:
    """Floored checks run their count at every level of their range."""
    result = run_check("thm-D-locus-dichotomy", 4, 0, 8)
    assert result.passed, result.witnesses
    assert result.trials == 8 + 2


def test_stability_checks_report_classified_samples(monkeypatch: pytest.MonkeyPatch) -> None:
    """The reported count is the number of elements the stability sampler classified."""
    asked: List[int] = []

    def fake_tcn(n: int, c: int, trials: int, seed: int, workers: int = 1) -> ProbeReport:
        asked.append(trials)
        samples = tuple(
            ProbeSample(f"s{k:03d}", 0, True, True, True, False) for k in range(trials // 2 + 1)
        )
        stable = 4 * (n - 1) >= c + 16
        return ProbeReport(n, c, 0, stable, samples, None if stable else "s000", True, True)

    monkeypatch.setattr(verify, "tcn_probe", fake_tcn)
    result = run_check("prop-stability", 6, 0, 200)
    assert result.passed, result.witnesses
    assert asked == [50]
    assert result.trials == 26

    asked.clear()
    result = run_check("thm-stable-dim-desk", 5, 0, 20)
    assert result.passed, result.witnesses
    assert asked == [20, 20, 20]
    assert result.trials == 3 * 11


@pytest.mark.parametrize(
    "check_id, trials",
    [("thm-ann-bracket-bound", 8), ("lem-D-locus-independent", 8), ("lem-D5-2", 16)],
)
def test_bracket_bound_and_lemma_checks(check_id: str, trials: int) -> None:
    """The annihilator bound and the two D-locus lemmas hold at level 3."""
    result = run_check(check_id, 3, 0, trials)
    assert result.passed, result.witnesses
    assert result.trials > 0


def test_annihilator_cache_released(monkeypatch: pytest.MonkeyPatch) -> None:
    """Checks at large levels drop the annihilator cache when they finish."""
    ann.cache_clear()
    run_check("lem-ann-im", 3, 0, 4)
    assert ann.cache_info().currsize > 0
    monkeypatch.setattr(verify, "CACHE_RELEASE_LEVEL", 3)
    run_check("lem-ann-im", 3, 0, 4)
    assert ann.cache_info().currsize == 0


@pytest.mark.slow
@pytest.mark.parametrize(
    "check_id, n, minimum",
    [
        ("lem-C-conj-linear", 4, 1000),
        ("lem-C-bi-conj", 4, 1000),
        ("lem-C-bi-conj2", 4, 1000),
        ("cor-C-proj", 4, 1000),
        ("thm-bracket-multiply", 3, 500),
        ("thm-bracket-multiply", 4, 500),
        ("thm-bracket-multiply", 5, 500),
        ("thm-4dim", 4, 200),
        ("thm-4dim", 5, 200),
        ("thm-4dim", 6, 200),
        ("thm-D-locus-dichotomy", 3, 200),
        ("thm-D-locus-dichotomy", 4, 200),
        ("thm-ann-off-D-locus", 3, 1),
        ("thm-ann-off-D-locus", 4, 1),
        ("lem-top-dim-D-locus", 3, 1),
        ("lem-top-dim-D-locus", 4, 1),
        ("thm-ann-D-locus", 4, 1),
        ("cor-D5", 4, 100),
        ("cor-Zm", 4, 1),
        ("cor-Zm", 5, 1),
        ("cor-Zm", 6, 1),
        ("cor-Zm", 7, 1),
        ("lem-Zm", 6, 1),
        ("lambda-step", 6, 1),
        ("prop-Dugger-ex", 4, 1),
        ("prop-Dugger-ex", 5, 1),
        ("prop-Dugger-ex", 6, 1),
        ("prop-ann-bracket-special", 3, 1),
        ("prop-ann-bracket-special", 4, 1),
        ("prop-stability", 5, 1),
        ("prop-not-stable", 5, 1),
    ],
)
def test_checks_at_default_counts(check_id: str, n: int, minimum: int) -> None:
    """Each check passes at its level with the default trial count."""
    result = run_check(check_id, n, 0)
    assert result.passed, result.witnesses
    assert result.level == n
    assert result.trials >= minimum
