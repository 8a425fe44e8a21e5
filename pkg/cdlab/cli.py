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

"""cdlab CLI module."""
from contextlib import contextmanager
from typing import Any, Callable, Iterator, List, Optional, Sequence, TextIO

import click
from tabulate import tabulate  # type: ignore

from cdlab import __version__
from cdlab.algebra import (
    Element,
    c_orthogonal,
    cd_mul,
    conj,
    herm_inner,
    norm_sq,
    re,
    real_inner,
)
from cdlab.annih import ann, max_ann_dim
from cdlab.bracket import (
    BracketPair,
    bracket_mul,
    bracket_mul_terms,
    bracket_zd_conditions,
)
from cdlab.codec import dumps, parse_document, parse_element, to_json
from cdlab.config import LabConfig, get_lab_config, set_active_config
from cdlab.constructions import (
    degenerate_search,
    degenerate_subalgebra,
    dugger,
    lambda_pair,
    tcn_probe,
    top_dlocus,
    zm_family,
)
from cdlab.dlocus import a5_dlocus_test, ann_dlocus_construct, is_dlocus
from cdlab.errors import (
    DomainError,
    IdentityViolation,
    ParseError,
    PreconditionError,
    UsageError,
)
from cdlab.logs import set_level
from cdlab.verify import get_check, run_checks, verify_registry


FORMATS = ("text", "json")
CONSTRUCTIONS = ("zm", "lambda", "topd", "dugger", "degsub")


class UsageFailure(click.ClickException):
    """Usage, parse and precondition errors; exit code 2."""

    exit_code = 2


@contextmanager
def _handled() -> Iterator[None]:
    """Map laboratory errors onto exit codes."""
    try:
        yield
    except (UsageError, ParseError, PreconditionError, DomainError) as e:
        raise UsageFailure(str(e)) from e
    except IdentityViolation as e:
        raise click.ClickException(f"{e} (witness: {e.witness})") from e


def _lab_options(fn: Callable) -> Callable:
    """Options shared by every command."""
    fn = click.option(
        "--profile",
        type=str,
        help="Configuration profile from configs/lab.json.",
    )(fn)
    fn = click.option(
        "--allow-large",
        is_flag=True,
        default=False,
        help="Lift the level caps.",
    )(fn)
    fn = click.option(
        "-v",
        "--verbose",
        count=True,
        help="Log at INFO (-v) or DEBUG (-vv) on stderr.",
    )(fn)
    fn = click.option(
        "--format",
        "fmt",
        type=click.Choice(FORMATS),
        default="text",
        help="Output format; json is the stable machine interface.",
    )(fn)
    fn = click.option(
        "--out",
        type=click.Path(dir_okay=False, writable=True),
        help="Write the output to this file instead of stdout.",
    )(fn)
    return fn


def _input_options(fn: Callable) -> Callable:
    """Element input: inline expressions, --in FILE, or stdin."""
    fn = click.argument("expressions", nargs=-1)(fn)
    fn = click.option(
        "--in",
        "in_file",
        type=click.File("r"),
        help="Read elements (JSON or inline) from this file instead of stdin.",
    )(fn)
    fn = click.option("--n", type=int, help="Level of the elements.")(fn)
    return fn


def _setup(
    profile: Optional[str],
    allow_large: bool,
    verbose: int,
) -> LabConfig:
    config = get_lab_config(profile)
    if allow_large:
        config = config.with_large()
    set_active_config(config)
    if verbose >= 2:
        set_level("DEBUG")
    elif verbose == 1:
        set_level("INFO")
    else:
        set_level(config.log_level)
    return config


def _read_elements(
    expressions: Sequence[str],
    in_file: Optional[TextIO],
    n: Optional[int],
    count: int,
    config: LabConfig,
) -> List[Element]:
    """
    Read exactly `count` elements of one level.

    :param expressions: inline expressions given as arguments.
    :param in_file: the --in file.
    :param n: the --n level.
    :param count: how many elements the command takes.
    :param config: the configuration in effect.
    :return: the elements.
    :raises UsageError: on a count or level mismatch.
    """
    if expressions:
        if n is None:
            raise UsageError("Inline elements need --n")
        config.check_level(n)
        elements = [parse_element(e, n) for e in expressions]
    else:
        stream = in_file if in_file is not None else click.get_text_stream("stdin")
        elements = parse_document(stream.read(), n)
    if len(elements) != count:
        raise UsageError(f"Expected {count} element(s), got {len(elements)}")
    levels = {e.level for e in elements}
    if len(levels) != 1 or (n is not None and levels != {n}):
        raise UsageError(f"Elements must all lie at level {n if n is not None else 'n'}")
    config.check_level(elements[0].level)
    return elements


def _emit(
    fmt: str,
    out: Optional[str],
    payload: Any,
    rows: Sequence[Sequence[Any]],
    headers: Sequence[str] = ("field", "value"),
    extra: str = "",
) -> None:
    """Write JSON or a text table to --out or stdout."""
    if fmt == "json":
        text = dumps(payload)
    else:
        cells = [[str(cell) for cell in row] for row in rows]
        text = tabulate(cells, headers=headers, tablefmt="grid", disable_numparse=True)
        if extra:
            text = f"{text}\n{extra}"
    if out:
        with open(out, "w", encoding="UTF-8") as file:
            file.write(text + "\n")
    else:
        click.echo(text)


@click.group(name="cdlab")  # type: ignore
@click.version_option(__version__, prog_name="cdlab")
def cli() -> None:
    """Exact experiments in the Cayley-Dickson algebras over Q(sqrt 2)."""


@click.command()
@_input_options
@_lab_options
def mul(  # pylint: disable=too-many-arguments
    expressions: Sequence[str],
    in_file: Optional[TextIO],
    n: Optional[int],
    profile: Optional[str],
    allow_large: bool,
    verbose: int,
    fmt: str,
    out: Optional[str],
) -> None:
    """Multiply two elements: cdlab mul --n 4 "e1+e10" "e2"."""
    with _handled():
        config = _setup(profile, allow_large, verbose)
        a, b = _read_elements(expressions, in_file, n, 2, config)
        product = cd_mul(a, b)
        payload = {"a": to_json(a), "b": to_json(b), "product": to_json(product)}
        rows = [["a", a], ["b", b], ["ab", product]]
        _emit(fmt, out, payload, rows)


@click.command(name="conj")
@_input_options
@_lab_options
def conj_(  # pylint: disable=too-many-arguments
    expressions: Sequence[str],
    in_file: Optional[TextIO],
    n: Optional[int],
    profile: Optional[str],
    allow_large: bool,
    verbose: int,
    fmt: str,
    out: Optional[str],
) -> None:
    """Conjugate an element and report its real part and norm."""
    with _handled():
        config = _setup(profile, allow_large, verbose)
        (a,) = _read_elements(expressions, in_file, n, 1, config)
        c = conj(a)
        payload = {
            "element": to_json(a),
            "conj": to_json(c),
            "re": to_json(re(a)),
            "norm_sq": to_json(norm_sq(a)),
        }
        rows = [["a", a], ["a*", c], ["Re(a)", re(a)], ["|a|^2", norm_sq(a)]]
        _emit(fmt, out, payload, rows)


@click.command()
@_input_options
@_lab_options
def inner(  # pylint: disable=too-many-arguments
    expressions: Sequence[str],
    in_file: Optional[TextIO],
    n: Optional[int],
    profile: Optional[str],
    allow_large: bool,
    verbose: int,
    fmt: str,
    out: Optional[str],
) -> None:
    """Real and Hermitian inner products of two elements."""
    with _handled():
        config = _setup(profile, allow_large, verbose)
        a, b = _read_elements(expressions, in_file, n, 2, config)
        real, herm = real_inner(a, b), herm_inner(a, b)
        payload = {
            "real": to_json(real),
            "hermitian": to_json(herm),
            "c_orthogonal": c_orthogonal(a, b),
        }
        rows = [["<a, b>_R", real], ["<a, b>_C", herm], ["C-orthogonal", c_orthogonal(a, b)]]
        _emit(fmt, out, payload, rows)


@click.command(name="ann")
@click.option("--basis", is_flag=True, default=False, help="List a basis of Ann(a).")
@_input_options
@_lab_options
def ann_(  # pylint: disable=too-many-arguments
    basis: bool,
    expressions: Sequence[str],
    in_file: Optional[TextIO],
    n: Optional[int],
    profile: Optional[str],
    allow_large: bool,
    verbose: int,
    fmt: str,
    out: Optional[str],
) -> None:
    """Annihilator of an element."""
    with _handled():
        config = _setup(profile, allow_large, verbose)
        (a,) = _read_elements(expressions, in_file, n, 1, config)
        report = ann(a)
        rows: List[List[Any]] = [
            ["element", a],
            ["dim_ann", report.dim_ann],
            ["image_dim", report.image.dim],
        ]
        if a.level >= 4:
            rows.append(["bound", max_ann_dim(a.level)])
        if basis:
            rows += [[f"ann[{k}]", v] for k, v in enumerate(report.ann.basis())]
        _emit(fmt, out, report, rows)


@click.command(name="bracket-mul")
@_input_options
@_lab_options
def bracket_mul_(  # pylint: disable=too-many-arguments
    expressions: Sequence[str],
    in_file: Optional[TextIO],
    n: Optional[int],
    profile: Optional[str],
    allow_large: bool,
    verbose: int,
    fmt: str,
    out: Optional[str],
) -> None:
    """Product {a, b}{x, y} of two brackets given as a, b, x, y in C_n^perp."""
    with _handled():
        config = _setup(profile, allow_large, verbose)
        a, b, x, y = _read_elements(expressions, in_file, n, 4, config)
        config.check_level(a.level + 1)
        p, q = BracketPair.of(a, b), BracketPair.of(x, y)
        terms = bracket_mul_terms(p, q)
        product = bracket_mul(p, q)
        conditions = bracket_zd_conditions(p, q)
        payload = {
            "left": to_json(p),
            "right": to_json(q),
            "product": to_json(product),
            "terms": [to_json(t) for t in terms],
            "zero_conditions": conditions._asdict(),
            "zero": conditions.holds,
        }
        rows = [["product", product]]
        rows += [[f"term {k + 1}", t] for k, t in enumerate(terms)]
        rows += [[name, value] for name, value in conditions._asdict().items()]
        rows.append(["zero", conditions.holds])
        _emit(fmt, out, payload, rows)


@click.command()
@click.option(
    "--construct",
    "construct_ann",
    is_flag=True,
    default=False,
    help="On the D-locus, build Ann{a, b} from its three parts.",
)
@_input_options
@_lab_options
def dlocus(  # pylint: disable=too-many-arguments,too-many-locals
    construct_ann: bool,
    expressions: Sequence[str],
    in_file: Optional[TextIO],
    n: Optional[int],
    profile: Optional[str],
    allow_large: bool,
    verbose: int,
    fmt: str,
    out: Optional[str],
) -> None:
    """D-locus membership of the bracket {a, b}."""
    with _handled():
        config = _setup(profile, allow_large, verbose)
        a, b = _read_elements(expressions, in_file, n, 2, config)
        config.check_level(a.level + 1)
        report = is_dlocus(BracketPair.of(a, b))
        payload = to_json(report)
        rows: List[List[Any]] = [
            ["in_dlocus", report.in_dlocus],
            ["C-orthogonal", report.cond_orth],
            ["a orthogonal to Ann(b)", report.cond_a_vs_annb],
            ["b orthogonal to Ann(a)", report.cond_b_vs_anna],
            ["dim Ann(a)", report.dim_ann_a],
            ["dim Ann(b)", report.dim_ann_b],
            ["dim Ann{a, b}", report.dim_ann_bracket],
            ["jump", report.jump],
        ]
        if a.level == 4 and report.dim_ann_a == 4 and report.dim_ann_b == 4:
            criterion = a5_dlocus_test(a, b)
            payload["span_criterion"] = criterion
            rows.append(["span criterion", criterion])
        if construct_ann and report.in_dlocus:
            built = ann_dlocus_construct(report.pair)
            payload["ann"] = to_json(built)
            rows.append(["constructed dim", built.dim])
        _emit(fmt, out, payload, rows)


@click.command()
@click.argument("kind", type=click.Choice(CONSTRUCTIONS))
@click.option("--n", type=int, required=True, help="Level of the construction.")
@click.option(
    "--a",
    "a_expr",
    type=str,
    default="e1",
    help="dugger: the element a of C_(n-1)^perp, inline syntax.",
)
@click.option(
    "--search",
    is_flag=True,
    default=False,
    help="degsub: run the greedy search instead of the Z_m construction.",
)
@click.option("--seed", type=int, help="Seed for the search.")
@click.option("--trials", type=int, help="Candidates for the search.")
@_lab_options
def construct(  # pylint: disable=too-many-arguments,too-many-locals
    kind: str,
    n: int,
    a_expr: str,
    search: bool,
    seed: Optional[int],
    trials: Optional[int],
    profile: Optional[str],
    allow_large: bool,
    verbose: int,
    fmt: str,
    out: Optional[str],
) -> None:
    """Run a construction at level n and print its verified result."""
    with _handled():
        config = _setup(profile, allow_large, verbose)
        rows: List[List[Any]]
        payload: Any
        if kind == "zm":
            family = zm_family(n)
            payload = family
            rows = [["size", len(family.xs)]]
            rows += [[f"x[{k}]", x] for k, x in enumerate(family.xs)]
            rows += [[f"y[{k}]", y] for k, y in enumerate(family.ys)]
        elif kind == "lambda":
            if n < 3:
                raise UsageError("lambda pairs start at level 3")
            pair = lambda_pair(n - 2)
            payload = pair
            rows = [
                ["lambda", pair.lam],
                ["a", pair.a],
                ["b", pair.b],
                ["z", pair.z_normalization],
            ]
        elif kind == "topd":
            report = is_dlocus(top_dlocus(n))
            payload = report
            rows = [
                ["a", report.pair.a],
                ["b", report.pair.b],
                ["dim Ann(a)", report.dim_ann_a],
                ["dim Ann{a, b}", report.dim_ann_bracket],
            ]
        elif kind == "dugger":
            if n < 3:
                raise UsageError("The Dugger element needs level >= 3")
            ann_report = dugger(n, parse_element(a_expr, n - 1))
            payload = ann_report
            rows = [["element", ann_report.element], ["dim_ann", ann_report.dim_ann]]
        elif search:
            result = degenerate_search(
                n,
                trials if trials is not None else config.trials,
                seed if seed is not None else config.seed,
            )
            payload = result
            rows = [["dim", result.dim]]
            rows += [[f"member[{k}]", v] for k, v in enumerate(result.family)]
        else:
            space = degenerate_subalgebra(n)
            payload = space
            rows = [["dim", space.dim]]
            rows += [[f"basis[{k}]", v] for k, v in enumerate(space.basis())]
        _emit(fmt, out, payload, rows)


@click.command(name="probe-tcn")
@click.option("--n", type=int, required=True, help="Sampling level.")
@click.option("--c", "c", type=int, default=0, help="Codimension, a multiple of 4.")
@click.option("--seed", type=int, help="Seed.")
@click.option("--trials", type=int, help="One-sided brackets to sample.")
@click.option("--workers", type=int, help="Process pool size.")
@_lab_options
def probe_tcn(  # pylint: disable=too-many-arguments
    n: int,
    c: int,
    seed: Optional[int],
    trials: Optional[int],
    workers: Optional[int],
    profile: Optional[str],
    allow_large: bool,
    verbose: int,
    fmt: str,
    out: Optional[str],
) -> None:
    """Probe the stability of T^c_(n-1) by sampling elements of A_n."""
    with _handled():
        config = _setup(profile, allow_large, verbose)
        report = tcn_probe(
            n,
            c,
            trials if trials is not None else config.trials,
            seed if seed is not None else config.seed,
            workers if workers is not None else config.workers,
        )
        rows = [
            ["threshold", report.threshold],
            ["stable regime", report.stable_regime],
            ["members", len(report.members)],
            ["samples", len(report.samples)],
            ["witness", report.witness or "-"],
            ["top half holds", report.top_half_holds],
            ["consistent", report.consistent],
        ]
        _emit(fmt, out, report, rows)
        if not report.consistent:
            raise click.ClickException("The samples contradict the expected regime")


@click.command()
@click.argument("target", required=False, default="all")
@click.option("--n", type=int, default=4, help="Requested level; each check clamps it.")
@click.option("--seed", type=int, help="Seed.")
@click.option(
    "--trials",
    type=int,
    help="Trials per check; by default the profile count, raised to each check's floor.",
)
@click.option("--workers", type=int, help="Process pool size.")
@click.option("--timings", is_flag=True, default=False, help="Report elapsed times.")
@click.option("--list", "list_checks", is_flag=True, default=False, help="List check ids.")
@_lab_options
def verify(  # pylint: disable=too-many-arguments,too-many-locals
    target: str,
    n: int,
    seed: Optional[int],
    trials: Optional[int],
    workers: Optional[int],
    timings: bool,
    list_checks: bool,
    profile: Optional[str],
    allow_large: bool,
    verbose: int,
    fmt: str,
    out: Optional[str],
) -> None:
    """Run one registered check, or `all` of them."""
    with _handled():
        config = _setup(profile, allow_large, verbose)
        if list_checks:
            ids = verify_registry()
            rows = [[i, get_check(i).statement] for i in ids]
            _emit(fmt, out, ids, rows, headers=("check_id", "statement"))
            return
        results = run_checks(
            None if target == "all" else [target],
            n,
            seed if seed is not None else config.seed,
            trials,
            workers if workers is not None else config.workers,
        )
        payload = [r.to_json(timings) for r in results]
        headers = ["check_id", "level", "trials", "status"]
        rows = [[r.check_id, r.level, r.trials, r.status] for r in results]
        if timings:
            headers.append("elapsed")
            for row, r in zip(rows, results):
                row.append(f"{r.elapsed:.2f}")
        failed = [r for r in results if not r.passed]
        extra = "\n".join(f"{r.check_id}: {w}" for r in failed for w in r.witnesses)
        _emit(fmt, out, payload, rows, headers=headers, extra=extra)
        if failed:
            raise click.ClickException(
                f"{len(failed)} check(s) failed: {', '.join(r.check_id for r in failed)}"
            )


cli.add_command(mul)
cli.add_command(conj_)
cli.add_command(inner)
cli.add_command(ann_)
cli.add_command(bracket_mul_)
cli.add_command(dlocus)
cli.add_command(construct)
cli.add_command(probe_tcn)
cli.add_command(verify)


if __name__ == "__main__":
    cli()
