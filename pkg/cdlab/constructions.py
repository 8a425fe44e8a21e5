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
Inductive constructions of zero-divisors.

Every construction checks its defining identities while it is built and
raises `IdentityViolation` when one fails.
"""

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from cdlab.algebra import (
    Element,
    c_orthogonal,
    cd_mul,
    i_unit,
    in_c_perp,
    in_h_perp,
    is_alternative,
    norm_sq,
    random_c_perp,
    random_imaginary,
    sub_rng,
)
from cdlab.annih import AnnReport, ann, max_ann_dim
from cdlab.bracket import BracketPair, from_element, to_element
from cdlab.config import LabConfig, active_config, set_active_config
from cdlab.dlocus import c_perp_to, is_dlocus
from cdlab.errors import IdentityViolation, PreconditionError, UsageError
from cdlab.linalg import Subspace, canonicalize
from cdlab.logs import get_logger
from cdlab.scalar import INV_SQRT2, Scalar


logger = get_logger("cdlab.constructions")


def _check_construction_level(n: int, low: int) -> None:
    if n < low:
        raise UsageError(f"Level must be at least {low}, got {n}")
    active_config().check_level(n, construction=True)


@dataclass(frozen=True)
class ZmFamily:
    """Two families X, Y of 2^(n-3) elements of C_n^perp each."""

    level: int
    xs: Tuple[Element, ...]
    ys: Tuple[Element, ...]


def _verify_zm(family: ZmFamily) -> None:
    for name, members in (("X", family.xs), ("Y", family.ys)):
        for i, u in enumerate(members):
            if not in_c_perp(u):
                raise IdentityViolation("zm-c-perp", {"family": name, "index": i})
            for j, v in enumerate(members):
                if i != j and not cd_mul(u, v).is_zero():
                    raise IdentityViolation(
                        "zm-annihilating", {"family": name, "i": i, "j": j}
                    )
    for i, x in enumerate(family.xs):
        for j, y in enumerate(family.ys):
            if not c_orthogonal(x, y):
                raise IdentityViolation("zm-c-orthogonal", {"x": i, "y": j})


@lru_cache(maxsize=None)
def zm_family(n: int) -> ZmFamily:
    """
    Mutually annihilating families of size 2^(n-3) in A_n.

    :param n: the level, at least 3.
    :return: the verified family.
    """
    _check_construction_level(n, 3)
    if n == 3:
        family = ZmFamily(3, (Element.basis(3, 1),), (Element.basis(3, 2),))
    else:
        prev = zm_family(n - 1)
        xs = [to_element(BracketPair.left(x)) for x in prev.xs]
        xs += [to_element(BracketPair.right(y)) for y in prev.ys]
        ys = [to_element(BracketPair.left(y)) for y in prev.ys]
        ys += [to_element(BracketPair.right(x)) for x in prev.xs]
        family = ZmFamily(n, tuple(xs), tuple(ys))
    _verify_zm(family)
    logger.info(f"zm family at level {n}: {len(family.xs)} + {len(family.ys)} members")
    return family


def degenerate_subalgebra(n: int) -> Subspace:
    """
    The subalgebra spanned by 1 and the X family; all products of distinct members vanish.

    :param n: the level, at least 3.
    :return: the subalgebra of dimension 1 + 2^(n-3).
    """
    family = zm_family(n)
    gens = [Element.basis(n, 0)] + list(family.xs)
    space = canonicalize(gens, n)
    for u in gens:
        for v in gens:
            if not space.contains(cd_mul(u, v)):
                raise IdentityViolation("degenerate-closure", {"u": str(u), "v": str(v)})
    return space


@dataclass(frozen=True)
class LambdaPair:
    """Unit, C-orthogonal a, b with a(ab) = -lam b and b(ba) = -lam a."""

    level: int
    a: Element
    b: Element
    lam: int

    @property
    def z_normalization(self) -> str:
        """How `lambda_algebra_table` scales z: `ab/sqrt(lambda)` when the root lies in Q(sqrt 2), else `ab`."""
        return "ab/sqrt(lambda)" if _sqrt_in_field(self.lam) is not None else "ab"


def _verify_lambda(pair: LambdaPair) -> None:
    a, b, lam = pair.a, pair.b, pair.lam
    checks = {
        "lambda-unit": norm_sq(a) == 1 and norm_sq(b) == 1,
        "lambda-c-orthogonal": c_orthogonal(a, b),
        "lambda-a-ab": cd_mul(a, cd_mul(a, b)) == b.scale(-lam),
        "lambda-b-ba": cd_mul(b, cd_mul(b, a)) == a.scale(-lam),
        "lambda-anti-commute": cd_mul(a, b) == -cd_mul(b, a),
    }
    for identity, holds in checks.items():
        if not holds:
            raise IdentityViolation(identity, {"level": pair.level, "lambda": lam})


def lambda_chain(r: int) -> List[LambdaPair]:
    """
    The chain of lambda-pairs up to lambda = r, at levels 3 .. r + 2.

    :param r: the final lambda, at least 1.
    :return: one verified pair per link.
    """
    if r < 1:
        raise UsageError(f"lambda must be positive, got {r}")
    _check_construction_level(r + 2, 3)
    chain = [LambdaPair(3, Element.basis(3, 1), Element.basis(3, 2), 1)]
    _verify_lambda(chain[0])
    while chain[-1].lam < r:
        prev = chain[-1]
        a = to_element(BracketPair.of(prev.a, prev.b)).scale(INV_SQRT2)
        b = to_element(BracketPair.of(prev.b, -prev.a)).scale(INV_SQRT2)
        pair = LambdaPair(prev.level + 1, a, b, prev.lam + 1)
        _verify_lambda(pair)
        chain.append(pair)
    logger.info(f"lambda chain reached {r} at level {r + 2}")
    return chain


def lambda_pair(r: int) -> LambdaPair:
    """The last link of `lambda_chain(r)`."""
    return lambda_chain(r)[-1]


def lambda_algebra_table(pair: LambdaPair) -> Dict[Tuple[str, str], Tuple[Scalar, str]]:
    """
    Multiplication table of the algebra spanned by 1, x = a, y = b, z = ab/sqrt(lam).

    sqrt(lam) lies in Q(sqrt 2) only for lam = k^2 or 2k^2. For any other lam
    the table falls back to the unnormalized z = ab and records xy = z,
    yz = lam x, zx = lam y, z^2 = -lam; `pair.z_normalization` says which
    basis was used.

    :param pair: the lambda pair.
    :return: (u, v) -> (coefficient, basis name) for every product of x, y, z.
    """
    lam = pair.lam
    root = _sqrt_in_field(lam)
    x, y = pair.a, pair.b
    ab = cd_mul(x, y)
    z = ab.scale(Scalar(1) / root) if root is not None else ab
    # squares of z and the structure constants under the chosen normalization
    z_sq = Scalar(-1) if root is not None else Scalar(-lam)
    k_xy = root if root is not None else Scalar(1)
    k_cyc = root if root is not None else Scalar(lam)
    named = {"x": x, "y": y, "z": z}
    expected = {
        ("x", "x"): (Scalar(-1), "1"),
        ("y", "y"): (Scalar(-1), "1"),
        ("z", "z"): (z_sq, "1"),
        ("x", "y"): (k_xy, "z"),
        ("y", "x"): (-k_xy, "z"),
        ("y", "z"): (k_cyc, "x"),
        ("z", "y"): (-k_cyc, "x"),
        ("z", "x"): (k_cyc, "y"),
        ("x", "z"): (-k_cyc, "y"),
    }
    one = Element.basis(pair.level, 0)
    for (u, v), (coeff, target) in expected.items():
        target_element = one if target == "1" else named[target]
        if cd_mul(named[u], named[v]) != target_element.scale(coeff):
            raise IdentityViolation("lambda-algebra", {"u": u, "v": v})
    return expected


def _sqrt_in_field(value: int) -> Optional[Scalar]:
    """Square root of a positive integer when it is p or q*sqrt(2) with p, q integers."""
    for k in range(1, value + 1):
        if k * k == value:
            return Scalar(k)
        if 2 * k * k == value:
            return Scalar(0, k)
        if k * k > value:
            break
    return None


@lru_cache(maxsize=None)
def top_dlocus(n: int) -> BracketPair:
    """
    A bracket {a, b} in the D-locus whose entries have the largest annihilators of A_n.

    :param n: the level of a and b, at least 3.
    :return: the verified bracket; Ann{a, b} has dimension 2^(n+1) - 8n + 12.
    """
    _check_construction_level(n + 1, 4)
    if n == 3:
        pair = BracketPair.of(Element.basis(3, 1), Element.basis(3, 2))
    else:
        prev = top_dlocus(n - 1)
        pair = BracketPair.of(
            to_element(BracketPair.left(prev.a)), to_element(BracketPair.left(prev.b))
        )
    report = is_dlocus(pair)
    expected_side = max_ann_dim(n)
    expected_bracket = (1 << (n + 1)) - 8 * n + 12
    if report.dim_ann_a != expected_side or report.dim_ann_b != expected_side:
        raise IdentityViolation(
            "top-dim-D-locus",
            {"dim_ann_a": report.dim_ann_a, "dim_ann_b": report.dim_ann_b},
        )
    if not report.in_dlocus or report.dim_ann_bracket != expected_bracket:
        raise IdentityViolation(
            "top-dim-D-locus-bracket",
            {"in_dlocus": report.in_dlocus, "dim": report.dim_ann_bracket},
        )
    logger.info(f"top D-locus bracket at level {n}: dim Ann {expected_bracket}")
    return pair


def top_annihilator_element(n: int) -> Element:
    """
    The lift of top_dlocus(n - 1): a two-sided element of A_n with annihilator of dimension 2^n - 8n + 20.

    :param n: the level, at least 4.
    :return: the element.
    """
    return to_element(top_dlocus(n - 1))


def dugger_element(n: int, a: Element) -> Element:
    """The element (i_{n-1}, a) of A_n."""
    return Element.from_halves(i_unit(n - 1), a)


def dugger(n: int, a: Element) -> AnnReport:
    """
    Annihilator of (i_{n-1}, a) for an alternative unit a in C_{n-1}^perp.

    :param n: the level, at least 3.
    :param a: an element of A_{n-1}.
    :return: the annihilator report, checked against {(x, (a i_{n-1}) x) : x C-orthogonal to 1, a}.
    :raises PreconditionError: when a does not qualify.
    """
    _check_construction_level(n, 3)
    if a.level != n - 1:
        raise UsageError(f"a must lie in A_{n - 1}")
    if not in_c_perp(a) or norm_sq(a) != 1 or not is_alternative(a):
        raise PreconditionError("a must be an alternative unit element of C^perp")
    element = dugger_element(n, a)
    report = ann(element)
    c = cd_mul(a, i_unit(n - 1))
    expected = canonicalize(
        [Element.from_halves(x, cd_mul(c, x)) for x in c_perp_to(a).basis()], n
    )
    if report.ann != expected:
        raise IdentityViolation(
            "dugger-form", {"computed": report.dim_ann, "expected": expected.dim}
        )
    if report.dim_ann != (1 << (n - 1)) - 4:
        raise IdentityViolation("dugger-dim", {"dim": report.dim_ann})
    if in_h_perp(element):
        raise IdentityViolation("dugger-not-h-perp", {"level": n})
    return report


def stiefel_zero_divisors() -> List[Element]:
    """All signed-basis zero-divisors (+-e_i, +-e_j), 1 <= i != j <= 7, of A_4."""
    out = []
    for i in range(1, 8):
        for j in range(1, 8):
            if i == j:
                continue
            for si in (1, -1):
                for sj in (1, -1):
                    out.append(
                        Element.from_halves(
                            Element.basis(3, i, si), Element.basis(3, j, sj)
                        )
                    )
    return out


def one_sided_family(n: int) -> List[Tuple[str, Element]]:
    """
    One-sided brackets {s, 0}, {0, s} in A_n, s from the family one level down.

    The family starts from the signed basis of C_3^perp and the Stiefel
    zero-divisors of A_4.

    :param n: the level, at least 4.
    :return: labelled elements.
    """
    if n == 4:
        base = [
            (f"e{k}{'+' if s > 0 else '-'}", Element.basis(3, k, s))
            for k in range(1, 8)
            if k != 4
            for s in (1, -1)
        ]
    elif n == 5:
        base = [(f"stiefel{k:03d}", s) for k, s in enumerate(stiefel_zero_divisors())]
    else:
        base = one_sided_family(n - 1)
    out = []
    for label, s in base:
        out.append((f"{{{label},0}}", to_element(BracketPair.left(s))))
        out.append((f"{{0,{label}}}", to_element(BracketPair.right(s))))
    return out


@dataclass(frozen=True)
class ProbeSample:
    """Classification of one sampled element."""

    label: str
    dim_ann: int
    member: bool
    in_h_perp: bool
    one_sided: bool
    two_sided: bool


@dataclass(frozen=True)
class ProbeReport:  # pylint: disable=too-many-instance-attributes
    """Outcome of a T^c_n probe at level n."""

    level: int
    c: int
    threshold: int
    stable_regime: bool
    samples: Tuple[ProbeSample, ...]
    witness: Optional[str]
    top_half_holds: bool
    consistent: bool

    @property
    def members(self) -> List[ProbeSample]:
        """Samples whose annihilator reaches the threshold."""
        return [s for s in self.samples if s.member]


def _classify(args: Tuple[str, Element, int, LabConfig]) -> ProbeSample:
    label, element, threshold, config = args
    set_active_config(config)
    dim = ann(element).dim_ann
    h_perp = in_h_perp(element)
    one_sided = two_sided = False
    if h_perp and not element.is_zero():
        pair = from_element(element)
        one_sided = pair.is_one_sided()
        two_sided = not one_sided
    sample = ProbeSample(label, dim, dim >= threshold, h_perp, one_sided, two_sided)
    logger.debug(f"probe sample {label}: dim {dim}, member {sample.member}")
    return sample


def probe_samples(n: int, trials: int, seed: int) -> List[Tuple[str, Element]]:
    """
    The labelled elements a probe at level n classifies.

    :param n: the level.
    :param trials: how many one-sided brackets to draw; random rays number trials // 20 + 1.
    :param seed: the seed.
    :return: labelled elements.
    """
    rng = random.Random(seed)  # nosec
    family = one_sided_family(n)
    if trials < len(family):
        family = sorted(rng.sample(family, trials))
    samples = list(family)
    samples.append(("top-dlocus", top_annihilator_element(n)))
    a = Element.basis(n - 1, 1)
    samples.append(("dugger", dugger_element(n, a)))
    for k in range(trials // 20 + 1):
        sub = sub_rng(seed, k)
        samples.append((f"ray{k:03d}", random_imaginary(sub, n)))
        samples.append((f"ray{k:03d}-c-perp", random_c_perp(sub, n)))
    return samples


def tcn_probe(n: int, c: int, trials: int, seed: int, workers: int = 1) -> ProbeReport:
    """
    Sample elements of A_n and test the stability of T^c_{n-1}.

    T^c_n is the set of elements whose annihilator has dimension at least
    2^n - 4n + 4 - c. In the stable regime n - 1 >= c/4 + 4 every sampled
    member must be a one-sided bracket; otherwise a member with both sides
    non-zero is reported as a witness. Sampling can exhibit members but never
    certifies that a stratum is empty.

    :param n: the level, at least 4.
    :param c: the codimension, a multiple of 4 with 0 <= c <= 2^n - 4n.
    :param trials: number of sampled one-sided brackets.
    :param seed: the seed.
    :param workers: size of the process pool.
    :return: the report; `consistent` says whether the samples agree with the regime.
    """
    if n < 4:
        raise UsageError(f"The probe needs level >= 4, got {n}")
    if c % 4 or not 0 <= c <= (1 << n) - 4 * n:
        raise UsageError(f"c must be a multiple of 4 in [0, {(1 << n) - 4 * n}]")
    _check_construction_level(n, 4)
    threshold = max_ann_dim(n) - c
    config = active_config()
    jobs = [(label, z, threshold, config) for label, z in probe_samples(n, trials, seed)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            classified = list(executor.map(_classify, jobs))
    else:
        classified = [_classify(job) for job in jobs]
    samples = tuple(sorted(classified, key=lambda s: s.label))
    stable = 4 * (n - 1) >= c + 16
    members = [s for s in samples if s.member]
    witness = next((s.label for s in members if s.two_sided), None)
    top_half = all(s.in_h_perp for s in samples if s.dim_ann >= 1 << (n - 1))
    if stable:
        consistent = all(s.one_sided for s in members)
    else:
        consistent = witness is not None
    if n == 4:
        consistent = top_half
    logger.info(
        f"probe n={n} c={c}: {len(members)} members of {len(samples)} samples, "
        f"stable regime {stable}, witness {witness}"
    )
    return ProbeReport(
        level=n,
        c=c,
        threshold=threshold,
        stable_regime=stable,
        samples=samples,
        witness=witness,
        top_half_holds=top_half,
        consistent=consistent and top_half,
    )


@dataclass(frozen=True)
class DegenerateSearchReport:
    """Largest mutually annihilating family a greedy search found."""

    level: int
    trials: int
    seed: int
    family: Tuple[Element, ...]

    @property
    def dim(self) -> int:
        """Dimension of the subalgebra spanned by 1 and the family."""
        return 1 + len(self.family)


def degenerate_search(n: int, trials: int, seed: int) -> DegenerateSearchReport:
    """
    Greedily grow a family of imaginary elements whose pairwise products all vanish.

    Candidates are signed basis vectors and signed sums of two basis vectors.
    The report carries no claim beyond the sampled candidates.

    :param n: the level, at least 3.
    :param trials: number of candidates drawn.
    :param seed: the seed.
    :return: the report.
    """
    _check_construction_level(n, 3)
    rng = random.Random(seed)  # nosec
    size = 1 << n
    family: List[Element] = []
    span = Subspace.zero(n)
    for _ in range(trials):
        i = rng.randrange(1, size)
        candidate = Element.basis(n, i, rng.choice((1, -1)))
        if rng.random() < 0.5:
            j = rng.randrange(1, size)
            if j != i:
                candidate = candidate + Element.basis(n, j, rng.choice((1, -1)))
        if span.contains(candidate):
            continue
        if all(
            cd_mul(candidate, f).is_zero() and cd_mul(f, candidate).is_zero()
            for f in family
        ):
            family.append(candidate)
            span = canonicalize(family, n)
    logger.info(f"degenerate search at level {n}: family of {len(family)}")
    return DegenerateSearchReport(n, trials, seed, tuple(family))
