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
The check registry and its runner.

Each check evaluates one identity exactly on seeded samples and returns the
number of cases it examined together with the counterexamples it found. A
check runs at a single level: the requested one, clamped to the range the
check declares.
"""

import itertools
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from cdlab.algebra import (
    ComplexScalar,
    Element,
    alternative_witness,
    anti_hermitian_check,
    c_orthogonal,
    c_scale,
    c_value,
    cd_mul,
    conj,
    dot,
    h_indices,
    herm_inner,
    i_unit,
    in_c_perp,
    in_h_perp,
    is_alternative,
    mul_table,
    norm_sq,
    pi_c_perp,
    random_c_perp,
    random_complex,
    random_element,
    random_imaginary,
    random_scalar,
    raw_cd_mul,
    real_inner,
    sub_rng,
    tilde_lift,
)
from cdlab.annih import (
    ann,
    c_span,
    column_image,
    eig2,
    max_ann_dim,
    quaternion_subalgebra,
    quotient_div,
    release_caches,
)
from cdlab.bracket import (
    BracketPair,
    bracket_inner,
    bracket_mul,
    bracket_mul_terms,
    bracket_zd_conditions,
    c_action,
    from_element,
    i_pair_mul,
    pair_unit,
    to_element,
)
from cdlab.codec import JSONLike, to_json
from cdlab.config import LabConfig, active_config, set_active_config
from cdlab.constructions import (
    degenerate_search,
    degenerate_subalgebra,
    dugger,
    dugger_element,
    lambda_algebra_table,
    lambda_chain,
    one_sided_family,
    stiefel_zero_divisors,
    tcn_probe,
    top_annihilator_element,
    top_dlocus,
    zm_family,
)
from cdlab.dlocus import (
    a5_span,
    ann_dlocus_construct,
    ann_special,
    c_perp_to,
    d5_lemma1_check,
    dlocus_parts,
    dlocus_via_images,
    h_perp_annihilator,
    h_perp_space,
    h_perp_structure_holds,
    is_dlocus,
    prop_d5_test,
    vanishing_criterion,
)
from cdlab.errors import IdentityViolation, UsageError
from cdlab.linalg import (
    are_c_orthogonal,
    canonicalize,
    intersect,
    is_orthogonal_to,
    is_subspace,
    kernel_basis,
    nullspace,
    orth_complement,
    project,
    rank,
    space_sum,
)
from cdlab.logs import get_logger
from cdlab.scalar import INV_SQRT2, ONE, SQRT2, Scalar, format_scalar


logger = get_logger("cdlab.verify")

Witness = Dict[str, Any]
Outcome = Tuple[int, List[Witness]]
CheckFn = Callable[[int, int, int], Outcome]

MAX_WITNESSES = 3
# levels whose annihilator caches are dropped after each check
CACHE_RELEASE_LEVEL = 6


@dataclass(frozen=True)
class Check:
    """A registered identity check."""

    check_id: str
    statement: str
    fn: CheckFn
    levels: Tuple[int, int]
    min_trials: int = 0

    def trials_for(self, trials: Optional[int]) -> int:
        """
        Trial count for a run: an explicit count wins, otherwise the configured one raised to `min_trials`.

        :param trials: the count asked for, or None.
        :return: the count the check runs with.
        """
        if trials is not None:
            return trials
        return max(active_config().trials, self.min_trials)

    def level_for(self, n: int) -> int:
        """Clamp a requested level to the range of the check."""
        low, high = self.levels
        return min(max(n, low), high)


@dataclass(frozen=True)
class VerifyResult:
    """Outcome of one check."""

    check_id: str
    statement: str
    level: int
    trials: int
    status: str
    witnesses: Tuple[Witness, ...] = field(default_factory=tuple)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        """True iff no counterexample was found."""
        return self.status == "pass"

    def to_json(self, timings: bool = False) -> JSONLike:
        """
        Wire form; `elapsed` only when asked for, so reports stay reproducible.

        :param timings: include the elapsed time.
        :return: the JSON structure.
        """
        data: Dict[str, Any] = {
            "check_id": self.check_id,
            "statement": self.statement,
            "level": self.level,
            "trials": self.trials,
            "status": self.status,
            "witnesses": list(self.witnesses),
        }
        if timings:
            data["elapsed"] = round(self.elapsed, 3)
        return data


@to_json.register
def _verify_result(obj: VerifyResult) -> JSONLike:
    return obj.to_json()


_REGISTRY: Dict[str, Check] = {}


def register(
    check_id: str,
    statement: str,
    levels: Tuple[int, int] = (1, 6),
    min_trials: int = 0,
) -> Callable[[CheckFn], CheckFn]:
    """
    Register a check under `check_id`.

    :param check_id: the identifier, e.g. `thm-bracket-multiply`.
    :param statement: the identity being checked.
    :param levels: lowest and highest level the check runs at.
    :param min_trials: per-level sample count used when the caller gives none; such checks do not scale it down with the level.
    :return: the decorator.
    """

    def decorator(fn: CheckFn) -> CheckFn:
        if check_id in _REGISTRY:
            raise ValueError(f"Duplicate check id `{check_id}`")
        _REGISTRY[check_id] = Check(check_id, statement, fn, levels, min_trials)
        return fn

    return decorator


def verify_registry() -> List[str]:
    """All registered check ids, sorted."""
    return sorted(_REGISTRY)


def get_check(check_id: str) -> Check:
    """
    Look up a check.

    :param check_id: the identifier.
    :return: the check.
    :raises UsageError: for an unknown id.
    """
    if check_id not in _REGISTRY:
        raise UsageError(f"Unknown check `{check_id}`; see `cdlab verify --list`")
    return _REGISTRY[check_id]


def _show(value: Any) -> Any:
    if isinstance(value, (Element, ComplexScalar)):
        return str(value)
    if isinstance(value, Scalar):
        return format_scalar(value)
    return value


def _witness(**values: Any) -> Witness:
    return {key: _show(value) for key, value in values.items()}


def _budget(trials: int, n: int, base: int = 4) -> int:
    """Trial count for checks whose cost grows with the level: trials / 4 per level above `base`."""
    if n <= base:
        return trials
    return max(1, trials >> (2 * (n - base)))


def _sparse(rng: random.Random, n: int, size: int = 6, c_perp: bool = False) -> Element:
    excluded = {0, 1 << (n - 1)} if c_perp else set()
    pool = [k for k in range(1 << n) if k not in excluded]
    support = sorted(rng.sample(pool, min(size, len(pool))))
    return random_element(rng, n, support)


def _c_perp(rng: random.Random, n: int) -> Element:
    """A dense element of C_n^perp for small n, a sparse one above."""
    return random_c_perp(rng, n) if n <= 4 else _sparse(rng, n, 8, c_perp=True)


def _c_orthogonal_to(rng: random.Random, n: int, others: Sequence[Element]) -> Element:
    """An element of C_n^perp that is C-orthogonal to every one of `others`."""
    b = _c_perp(rng, n)
    spans = [c_span(x) for x in others if not x.is_zero()]
    if not spans:
        return b
    space = spans[0]
    for extra in spans[1:]:
        space = space_sum(space, extra)
    return b - project(b, space)


def _max_element(n: int) -> Element:
    """{a, 0} with a from top_dlocus(n - 1): annihilator of dimension 2^n - 4n + 4."""
    return to_element(BracketPair.left(top_dlocus(n - 1).a))


def _constructed(n: int) -> List[Element]:
    """Constructed zero-divisors of A_n, n >= 4."""
    out = [_max_element(n), top_annihilator_element(n)]
    out.append(dugger_element(n, Element.basis(n - 1, 1)))
    out += list(zm_family(n).xs)
    return out


def _zero_divisor_pool(n: int) -> List[Element]:
    """One-sided lifts (and the Stiefel family at n = 4)."""
    pool = [z for _, z in one_sided_family(n)]
    if n == 4:
        pool += stiefel_zero_divisors()
    return pool


def _samples(n: int, seed: int, count: int) -> List[Element]:
    """Constructed zero-divisors, seeded picks from the families, and sparse rays."""
    rng = random.Random(seed)  # nosec
    out = _constructed(n) if n >= 4 else []
    if n >= 4:
        pool = _zero_divisor_pool(n)
        out += rng.sample(pool, min(count // 2, len(pool)))
    rays: List[Element] = []
    k = 0
    while len(rays) < count - count // 2:
        a = _sparse(sub_rng(seed, k), n, 6, c_perp=bool(k % 2))
        if not a.is_zero():
            rays.append(a)
        k += 1
    return out + rays


# ---------------------------------------------------------------------------
# scalars and the algebra


@register(
    "scalar-field-axioms",
    "Q(sqrt 2) is a field: associativity, distributivity and inverses hold exactly",
    (0, 0),
)
def _field_axioms(_n: int, seed: int, trials: int) -> Outcome:
    found: List[Witness] = []
    for k in range(trials):
        rng = sub_rng(seed, k)
        x, y, z = (random_scalar(rng, with_sqrt2=True) for _ in range(3))
        if (x * y) * z != x * (y * z) or (x + y) + z != x + (y + z):
            found.append(_witness(x=x, y=y, z=z, law="associativity"))
        if x * (y + z) != x * y + x * z:
            found.append(_witness(x=x, y=y, z=z, law="distributivity"))
        if x and (x * x.inverse() != ONE or not x.field_norm()):
            found.append(_witness(x=x, law="inverse"))
    return trials, found


@register(
    "table-soundness",
    "e_i e_j = +-e_(i xor j) and the table matches the doubling recursion",
    (0, 8),
)
def _table_soundness(n: int, _seed: int, _trials: int) -> Outcome:
    found: List[Witness] = []
    entries = 0
    for level in range(n + 1):
        table = mul_table(level)
        entries += len(table)
        try:
            table.verify()
        except AssertionError as e:
            found.append(_witness(level=level, error=str(e)))
    return entries, found


@register(
    "cd-mul-raw-agreement",
    "the table-driven product equals the recursive doubling formula",
    (1, 6),
)
def _raw_agreement(n: int, seed: int, trials: int) -> Outcome:
    found: List[Witness] = []
    count = _budget(trials, n, 5)
    for k in range(count):
        rng = sub_rng(seed, k)
        x = random_element(rng, n, with_sqrt2=True)
        y = random_element(rng, n, with_sqrt2=True)
        if cd_mul(x, y) != raw_cd_mul(x, y):
            found.append(_witness(x=x, y=y))
    return count, found


@register(
    "classical-algebras",
    "A_1, A_2, A_3 are the complex numbers, quaternions and octonions",
    (3, 3),
)
def _classical(_n: int, _seed: int, _trials: int) -> Outcome:
    found: List[Witness] = []
    e = Element.basis
    if cd_mul(e(1, 1), e(1, 1)) != -e(1, 0):
        found.append(_witness(identity="i^2 = -1"))
    if cd_mul(e(2, 1), e(2, 2)) != e(2, 3) or cd_mul(e(2, 2), e(2, 1)) != -e(2, 3):
        found.append(_witness(identity="e1 e2 = -e2 e1 = e3"))
    if cd_mul(e(3, 4), e(3, 1)) != -e(3, 5):
        found.append(_witness(identity="e4 e1 = -e5"))
    associative = all(
        cd_mul(cd_mul(e(3, i), e(3, j)), e(3, k)) == cd_mul(e(3, i), cd_mul(e(3, j), e(3, k)))
        for i, j, k in itertools.product(range(1, 8), repeat=3)
    )
    if associative:
        found.append(_witness(identity="octonions are not associative"))
    for k in range(1, 8):
        if ann(e(3, k)).dim_ann:
            found.append(_witness(identity="no zero-divisors in A_3", k=k))
    return 4 + 7, found


@register(
    "alternative-elements",
    "elements of A_3 and their embeddings (a, 0) are alternative; A_4 is not alternative",
    (4, 5),
)
def _alternative(n: int, seed: int, trials: int) -> Outcome:
    found: List[Witness] = []
    count = min(trials, 20)
    for k in range(count):
        a = random_element(sub_rng(seed, k), 3)
        if not is_alternative(a) or not is_alternative(a.embed(n)):
            found.append(_witness(a=a))
    candidates = [Element.from_terms(4, {1: 1, 10: 1})]
    candidates += [random_element(sub_rng(seed, count + k), 4) for k in range(5)]
    if all(alternative_witness(c) is None for c in candidates):
        found.append(_witness(identity="non-alternative element of A_4"))
    return count + len(candidates), found


@register(
    "real-inner-dot",
    "<a, b>_R = Re(a b*) is the coordinate dot product",
    (1, 6),
)
def _real_inner_dot(n: int, seed: int, trials: int) -> Outcome:
    found: List[Witness] = []
    size = 1 << n
    for i in range(size):
        for j in range(size):
            expected = 1 if i == j else 0
            if real_inner(Element.basis(n, i), Element.basis(n, j)) != expected:
                found.append(_witness(i=i, j=j))
    for k in range(trials):
        rng = sub_rng(seed, k)
        a = random_element(rng, n, with_sqrt2=True)
        b = random_element(rng, n, with_sqrt2=True)
        if real_inner(a, b) != dot(a, b) or real_inner(a, b) != cd_mul(a, conj(b))[0]:
            found.append(_witness(a=a, b=b))
    return size * size + trials, found


@register("herm-symmetry", "<a, b>_C = <b, a>_C*", (1, 6))
def _herm_symmetry(n: int, seed: int, trials: int) -> Outcome:
    found: List[Witness] = []
    for k in range(trials):
        rng = sub_rng(seed, k)
        a, b = random_element(rng, n), random_element(rng, n)
        if herm_inner(a, b) != herm_inner(b, a).conj():
            found.append(_witness(a=a, b=b))
    return trials, found


@register("lem-C-vs", "A_n is a C_n-vector space: alpha(beta x) = (alpha beta)x", (1, 6))
def _c_vector_space(n: int, seed: int, trials: int) -> Outcome:
    found: List[Witness] = []
    for k in range(trials):
        rng = sub_rng(seed, k)
        alpha, beta = random_complex(rng, n), random_complex(rng, n)
        x = random_element(rng, n)
        if c_scale(alpha, c_scale(beta, x)) != c_scale(alpha * beta, x):
            found.append(_witness(alpha=alpha, beta=beta, x=x))
    return trials, found


@register("imaginary-square", "a imaginary implies a^2 = -|a|^2", (1, 6))
def _imaginary_square(n: int, seed: int, trials: int) -> Outcome:
    found: List[Witness] = []
    for k in range(trials):
        a = random_imaginary(sub_rng(seed, k), n)
        if cd_mul(a, a) != Element.basis(n, 0, -norm_sq(a)):
            found.append(_witness(a=a))
    return trials, found


@register("anti-commute", "orthogonal imaginary elements anti-commute", (2, 6))
def _anti_commute(n: int, seed: int, trials: int) -> Outcome:
    found: List[Witness] = []
    for k in range(trials):
        rng = sub_rng(seed, k)
        a, b = random_imaginary(rng, n), random_imaginary(rng, n)
        if a.is_zero():
            continue
        b = b - a.scale(dot(b, a) / dot(a, a))
        if cd_mul(a, b) != -cd_mul(b, a):
            found.append(_witness(a=a, b=b))
    return trials, found


@register("norm-conj", "a a* = a* a = |a|^2", (1, 6))
def _norm_conj(n: int, seed: int, trials: int) -> Outcome:
    found: List[Witness] = []
    for k in range(trials):
        a = random_element(sub_rng(seed, k), n, with_sqrt2=True)
        expected = Element.basis(n, 0, norm_sq(a))
        if cd_mul(a, conj(a)) != expected or cd_mul(conj(a), a) != expected:
            found.append(_witness(a=a))
    return trials, found


@register("c-scale-norm", "|alpha a|^2 = |alpha|^2 |a|^2 for a in C_n^perp", (2, 6))
def _c_scale_norm(n: int, seed: int, trials: int) -> Outcome:
    found: List[Witness] = []
    for k in range(trials):
        rng = sub_rng(seed, k)
        alpha, a = random_complex(rng, n), _c_perp(rng, n)
        if norm_sq(c_scale(alpha, a)) != alpha.norm_sq() * norm_sq(a):
            found.append(_witness(alpha=alpha, a=a))
    return trials, found


@register("lem-ortho1", "x and xy are orthogonal for imaginary y", (1, 6))
def _ortho1(n: int, seed: int, trials: int) -> Outcome:
    found: List[Witness] = []
    for k in range(trials):
        rng = sub_rng(seed, k)
        x, y = random_element(rng, n), random_imaginary(rng, n)
        if real_inner(x, cd_mul(x, y)):
            found.append(_witness(x=x, y=y))
    return trials, found


@register(
    "lem-C-conj-linear",
    "for a in C_n^perp: a(alpha x) = alpha*(ax) and <ax, y>_C = -<x, ay>_C*",
    (2, 6),
    min_trials=1000,
)
def _c_conj_linear(n: int, seed: int, trials: int) -> Outcome:
    found: List[Witness] = []
    for k in range(trials):
        rng = sub_rng(seed, k)
        a, alpha = _c_perp(rng, n), random_complex(rng, n)
        x, y = random_element(rng, n), random_element(rng, n)
        if cd_mul(a, c_scale(alpha, x)) != c_scale(alpha.conj(), cd_mul(a, x)):
            found.append(_witness(a=a, alpha=alpha, x=x, identity="conjugate-linear"))
        if not anti_hermitian_check(a, x, y):
            found.append(_witness(a=a, x=x, y=y, identity="anti-hermitian"))
    return trials, found


@register(
    "lem-C-bi-conj",
    "a, b in C_n^perp C-orthogonal: (alpha a)(beta b) = alpha* beta* (ab)",
    (3, 6),
    min_trials=1000,
)
def _bi_conj(n: int, seed: int, trials: int) -> Outcome:
    found: List[Witness] = []
    for k in range(trials):
        rng = sub_rng(seed, k)
        a = _c_perp(rng, n)
        b = _c_orthogonal_to(rng, n, [a])
        alpha, beta = random_complex(rng, n), random_complex(rng, n)
        lhs = cd_mul(c_scale(alpha, a), c_scale(beta, b))
        if lhs != c_scale(alpha.conj() * beta.conj(), cd_mul(a, b)):
            found.append(_witness(a=a, b=b, alpha=alpha, beta=beta))
    return trials, found


@register(
    "lem-C-bi-conj2",
    "a in C_n^perp: (alpha a)(beta a) = -|a|^2 alpha beta*",
    (2, 6),
    min_trials=1000,
)
def _bi_conj2(n: int, seed: int, trials: int) -> Outcome:
    found: List[Witness] = []
    for k in range(trials):
        rng = sub_rng(seed, k)
        a = _c_perp(rng, n)
        alpha, beta = random_complex(rng, n), random_complex(rng, n)
        expected = (alpha * beta.conj()).to_element().scale(-norm_sq(a))
        if cd_mul(c_scale(alpha, a), c_scale(beta, a)) != expected:
            found.append(_witness(a=a, alpha=alpha, beta=beta))
    return trials, found


@register(
    "lem-proj-multiply",
    "b = b' + b'' along C-span(a): pi_C(ab) = ab', pi_C^perp(ab) = ab'', and likewise for ba",
    (3, 6),
)
def _proj_multiply(n: int, seed: int, trials: int) -> Outcome:
    found: List[Witness] = []
    for k in range(trials):
        rng = sub_rng(seed, k)
        a, b = _c_perp(rng, n), random_element(rng, n)
        if a.is_zero():
            continue
        b1 = project(b, c_span(a))
        b2 = b - b1
        ab, ba = cd_mul(a, b), cd_mul(b, a)
        if (
            ab - pi_c_perp(ab) != cd_mul(a, b1)
            or pi_c_perp(ab) != cd_mul(a, b2)
            or ba - pi_c_perp(ba) != cd_mul(b1, a)
            or pi_c_perp(ba) != cd_mul(b2, a)
        ):
            found.append(_witness(a=a, b=b))
    return trials, found


@register(
    "cor-C-proj",
    "a, b in C_n^perp: pi_C(ab) = pi_C(ba)* and pi_C^perp(ab) = -pi_C^perp(ba)",
    (2, 6),
    min_trials=1000,
)
def _c_proj(n: int, seed: int, trials: int) -> Outcome:
    found: List[Witness] = []
    for k in range(trials):
        rng = sub_rng(seed, k)
        a, b = _c_perp(rng, n), _c_perp(rng, n)
        ab, ba = cd_mul(a, b), cd_mul(b, a)
        if c_value(ab) != c_value(ba).conj() or pi_c_perp(ab) != -pi_c_perp(ba):
            found.append(_witness(a=a, b=b))
    return trials, found


@register(
    "cor-proj-multiply",
    "pi_C(alpha a) = alpha pi_C(a) = pi_C(a alpha)",
    (1, 6),
)
def _proj_c_linear(n: int, seed: int, trials: int) -> Outcome:
    found: List[Witness] = []
    for k in range(trials):
        rng = sub_rng(seed, k)
        alpha, a = random_complex(rng, n), random_element(rng, n)
        expected = alpha * c_value(a)
        if (
            c_value(c_scale(alpha, a)) != expected
            or c_value(cd_mul(a, alpha.to_element())) != expected
        ):
            found.append(_witness(alpha=alpha, a=a))
    return trials, found


@register(
    "tilde-ring-map",
    "the lift C_n -> C_(n+1) taking i_n to i_(n+1) is multiplicative",
    (1, 7),
)
def _tilde(n: int, seed: int, trials: int) -> Outcome:
    found: List[Witness] = []
    for k in range(trials):
        rng = sub_rng(seed, k)
        alpha, beta = random_complex(rng, n), random_complex(rng, n)
        product = cd_mul(tilde_lift(alpha).to_element(), tilde_lift(beta).to_element())
        if product != tilde_lift(alpha * beta).to_element():
            found.append(_witness(alpha=alpha, beta=beta))
    return trials, found


# ---------------------------------------------------------------------------
# linear algebra


@register("rank-nullity", "rank + dim kernel = 2^n, and M v = 0 on the kernel", (1, 4))
def _rank_nullity(n: int, seed: int, trials: int) -> Outcome:
    found: List[Witness] = []
    size = 1 << n
    for k in range(trials):
        rng = sub_rng(seed, k)
        rows = rng.randint(1, size)
        density = rng.choice((0.2, 0.5, 0.9))
        matrix = [
            [
                random_scalar(rng, with_sqrt2=True) if rng.random() < density else Scalar(0)
                for _ in range(size)
            ]
            for _ in range(rows)
        ]
        kernel = nullspace(matrix, n)
        if rank(matrix, size) + kernel.dim != size:
            found.append(_witness(trial=k, rows=rows))
        for v in kernel_basis(matrix, size):
            if any(sum((r * c for r, c in zip(row, v)), Scalar(0)) for row in matrix):
                found.append(_witness(trial=k, identity="kernel vector"))
                break
    return trials, found


def _random_space(rng: random.Random, n: int) -> Tuple[List[Element], Any]:
    vectors = [
        _sparse(rng, n, rng.randint(1, 1 << n)) for _ in range(rng.randint(1, 1 << n))
    ]
    return vectors, canonicalize(vectors, n)


@register(
    "canonical-uniqueness",
    "the reduced echelon basis of a span does not depend on the spanning list",
    (1, 5),
)
def _canonical(n: int, seed: int, trials: int) -> Outcome:
    found: List[Witness] = []
    count = _budget(trials, n)
    for k in range(count):
        rng = sub_rng(seed, k)
        vectors, space = _random_space(rng, n)
        shuffled = list(vectors)
        rng.shuffle(shuffled)
        if canonicalize(shuffled, n) != space or canonicalize(space.basis(), n) != space:
            found.append(_witness(trial=k))
    return count, found


@register(
    "projection-split",
    "project(x, S) + project(x, S^perp) = x, S^perp^perp = S and S cap S^perp = 0",
    (1, 5),
)
def _projection_split(n: int, seed: int, trials: int) -> Outcome:
    found: List[Witness] = []
    count = _budget(trials, n)
    for k in range(count):
        rng = sub_rng(seed, k)
        _, space = _random_space(rng, n)
        complement = orth_complement(space)
        x = random_element(rng, n, with_sqrt2=True)
        if project(x, space) + project(x, complement) != x:
            found.append(_witness(trial=k, x=x, identity="split"))
        if orth_complement(complement) != space or intersect(space, complement).dim:
            found.append(_witness(trial=k, identity="complement"))
        if space.contains(x) != (project(x, space) == x):
            found.append(_witness(trial=k, x=x, identity="contains"))
    return count, found


# ---------------------------------------------------------------------------
# annihilators


@register(
    "thm-4dim",
    "for a != 0 in A_n, n >= 4: dim Ann(a) is a multiple of 4 and at most 2^n - 4n + 4, which is attained",
    (4, 6),
    min_trials=200,
)
def _four_dim(n: int, seed: int, trials: int) -> Outcome:
    found: List[Witness] = []
    samples = _samples(n, seed, trials)
    bound = max_ann_dim(n)
    dims = []
    for a in samples:
        dim = ann(a).dim_ann
        dims.append(dim)
        if dim % 4 or dim > bound:
            found.append(_witness(a=a, dim=dim))
    if max(dims) != bound:
        found.append(_witness(identity="bound attained", largest=max(dims)))
    return len(samples), found


@register("lem-ann-im", "Im(a) = aA_n is the orthogonal complement of Ann(a)", (3, 5))
def _ann_im(n: int, seed: int, trials: int) -> Outcome:
    found: List[Witness] = []
    samples = _samples(n, seed, _budget(trials, n, 3))
    for a in samples:
        if column_image(a) != ann(a).image:
            found.append(_witness(a=a))
    return len(samples), found


@register(
    "lem-zd-C-perp",
    "a zero-divisor a and its annihilator lie in C_n^perp",
    (4, 6),
)
def _zd_c_perp(n: int, seed: int, trials: int) -> Outcome:
    found: List[Witness] = []
    samples = [a for a in _samples(n, seed, _budget(trials, n)) if ann(a).dim_ann]
    for a in samples:
        if not in_c_perp(a) or not all(in_c_perp(x) for x in ann(a).ann.basis()):
            found.append(_witness(a=a))
    return len(samples), found


@register(
    "thm-top-half",
    "dim Ann(a) >= 2^(n-1) implies a in H_n^perp; the Dugger element shows 2^(n-1) - 4 is not enough",
    (4, 6),
)
def _top_half(n: int, seed: int, trials: int) -> Outcome:
    found: List[Witness] = []
    samples = _samples(n, seed, _budget(trials, n))
    for a in samples:
        if ann(a).dim_ann >= 1 << (n - 1) and not in_h_perp(a):
            found.append(_witness(a=a, dim=ann(a).dim_ann))
    element = dugger_element(n, Element.basis(n - 1, 1))
    if in_h_perp(element) or ann(element).dim_ann != (1 << (n - 1)) - 4:
        found.append(_witness(identity="sharpness", a=element))
    return len(samples) + 1, found


@register(
    "cor-C-multiply",
    "ab lies in C_n iff b lies in C-span(a) + Ann(a)",
    (4, 5),
)
def _c_multiply(n: int, seed: int, trials: int) -> Outcome:
    found: List[Witness] = []
    samples = [a for a in _samples(n, seed, _budget(trials, n) // 4 + 1) if in_c_perp(a)]
    for k, a in enumerate(samples):
        rng = sub_rng(seed, k)
        space = space_sum(c_span(a), ann(a).ann)
        inside = c_scale(random_complex(rng, n), a)
        for x in ann(a).ann.basis():
            inside = inside + x.scale(random_scalar(rng))
        for b in (inside, random_element(rng, n)):
            lands_in_c = pi_c_perp(cd_mul(a, b)).is_zero()
            if lands_in_c != space.contains(b):
                found.append(_witness(a=a, b=b))
    return 2 * len(samples), found


@register(
    "lem-frac-perp",
    "a, b in C_n^perp C-orthogonal, b in Im(a): b/a lies in C_n^perp, is C-orthogonal to a and b, and a(b/a) = b",
    (3, 5),
)
def _frac_perp(n: int, seed: int, trials: int) -> Outcome:
    found: List[Witness] = []
    samples = [a for a in _samples(n, seed, _budget(trials, n, 3)) if in_c_perp(a)]
    for k, a in enumerate(samples):
        rng = sub_rng(seed, k)
        y = _c_orthogonal_to(rng, n, [a])
        b = cd_mul(a, y)
        x = quotient_div(b, a)
        if (
            cd_mul(a, x) != b
            or not is_orthogonal_to(x, ann(a).ann)
            or not in_c_perp(x)
            or not c_orthogonal(x, a)
            or not c_orthogonal(x, b)
        ):
            found.append(_witness(a=a, b=b, quotient=x))
    return len(samples), found


def _stiefel_pick(seed: int, count: int) -> List[Element]:
    pool = stiefel_zero_divisors()
    return random.Random(seed).sample(pool, min(count, len(pool)))  # nosec


@register(
    "eig2-form",
    "for a = (a1, a2) in A_4: Ann(a) = {(y, -cy)}, Eig_2(a) = {(y, cy)} with y orthogonal to <<a1, a2>>",
    (4, 4),
)
def _eig2_form(_n: int, seed: int, trials: int) -> Outcome:
    found: List[Witness] = []
    samples = _stiefel_pick(seed, min(trials, 40))
    for a in samples:
        a1, a2 = a.halves()
        c = cd_mul(a1, a2)
        quat = quaternion_subalgebra(a1, a2)
        ys = orth_complement(quat).basis()
        expected_eig = canonicalize([Element.from_halves(y, cd_mul(c, y)) for y in ys], 4)
        expected_ann = canonicalize([Element.from_halves(y, -cd_mul(c, y)) for y in ys], 4)
        eig = eig2(a)
        if eig != expected_eig or ann(a).ann != expected_ann:
            found.append(_witness(a=a, dim_eig=eig.dim))
            continue
        qq = [Element.from_halves(u, Element.zero(3)) for u in quat.basis()]
        qq += [Element.from_halves(Element.zero(3), u) for u in quat.basis()]
        for v in eig.basis():
            if not is_orthogonal_to(v, ann(a).ann) or not is_orthogonal_to(
                v, canonicalize(qq, 4)
            ):
                found.append(_witness(a=a, v=v, identity="orthogonality"))
                break
    if eig2(Element.basis(4, 1)).dim:
        found.append(_witness(identity="Eig_2 of a non-zero-divisor vanishes"))
    return len(samples) + 1, found


# ---------------------------------------------------------------------------
# brackets


def _pair(rng: random.Random, n: int) -> BracketPair:
    return BracketPair(n, _c_perp(rng, n), _c_perp(rng, n))


@register(
    "lem-convert",
    "(x, y) in H_(n+1)^perp is the bracket (1/sqrt2){x + i_n y, x - i_n y}, and back",
    (2, 6),
)
def _convert(n: int, seed: int, trials: int) -> Outcome:
    found: List[Witness] = []
    excluded = set(h_indices(n + 1))
    support = [k for k in range(1 << (n + 1)) if k not in excluded]
    for k in range(trials):
        rng = sub_rng(seed, k)
        z = random_element(rng, n + 1, support)
        p = _pair(rng, n)
        if to_element(from_element(z)) != z or from_element(to_element(p)) != p:
            found.append(_witness(z=z, a=p.a, b=p.b))
    return trials, found


@register("lem-convert-norm", "|{a, b}|^2 = |a|^2 + |b|^2", (2, 6))
def _convert_norm(n: int, seed: int, trials: int) -> Outcome:
    found: List[Witness] = []
    for k in range(trials):
        p = _pair(sub_rng(seed, k), n)
        if norm_sq(to_element(p)) != norm_sq(p.a) + norm_sq(p.b):
            found.append(_witness(a=p.a, b=p.b))
    return trials, found


@register(
    "lem-bracket-C-action",
    "the lift of alpha acts on brackets by {a, b} -> {alpha* a, alpha b}",
    (2, 6),
)
def _c_action(n: int, seed: int, trials: int) -> Outcome:
    found: List[Witness] = []
    for k in range(trials):
        rng = sub_rng(seed, k)
        alpha, p = random_complex(rng, n), _pair(rng, n)
        direct = cd_mul(tilde_lift(alpha).to_element(), to_element(p))
        if to_element(c_action(alpha, p)) != direct:
            found.append(_witness(alpha=alpha, a=p.a, b=p.b))
    return trials, found


@register(
    "prop-bracket-multiply",
    "a, b C-orthogonal to x, y in C_n^perp: {a, b}{x, y} = sqrt2 {ax, by}",
    (3, 6),
)
def _prop_bracket_multiply(n: int, seed: int, trials: int) -> Outcome:
    found: List[Witness] = []
    count = _budget(trials, n)
    for k in range(count):
        rng = sub_rng(seed, k)
        x, y = _c_perp(rng, n), _c_perp(rng, n)
        a = _c_orthogonal_to(rng, n, [x, y])
        b = _c_orthogonal_to(rng, n, [x, y])
        p, q = BracketPair(n, a, b), BracketPair(n, x, y)
        expected = to_element(BracketPair(n, cd_mul(a, x), cd_mul(b, y))).scale(SQRT2)
        if cd_mul(to_element(p), to_element(q)) != expected or bracket_mul(p, q) != expected:
            found.append(_witness(a=a, b=b, x=x, y=y))
    return count, found


@register(
    "lem-bracket-multiply-parallel",
    "{0, a}{a, 0} = -{a, 0}{0, a} = |a|^2 (0, i_n)",
    (2, 6),
)
def _parallel(n: int, seed: int, trials: int) -> Outcome:
    found: List[Witness] = []
    for k in range(trials):
        a = _c_perp(sub_rng(seed, k), n)
        left, right = to_element(BracketPair.left(a)), to_element(BracketPair.right(a))
        expected = pair_unit(n).scale(norm_sq(a))
        if cd_mul(right, left) != expected or cd_mul(left, right) != -expected:
            found.append(_witness(a=a))
    return trials, found


@register(
    "cor-bracket-multiply-parallel",
    "b in C-span(a): the four one-sided products are pi~(ab)*, pi~(ab), pi~(ab)(0, i_n), -pi~(ab)*(0, i_n)",
    (2, 6),
)
def _parallel_cor(n: int, seed: int, trials: int) -> Outcome:
    found: List[Witness] = []
    unit = pair_unit(n)
    for k in range(trials):
        rng = sub_rng(seed, k)
        a = _c_perp(rng, n)
        b = c_scale(random_complex(rng, n), a)
        lifted = tilde_lift(c_value(cd_mul(a, b)))
        a0, a1 = to_element(BracketPair.left(a)), to_element(BracketPair.right(a))
        b0, b1 = to_element(BracketPair.left(b)), to_element(BracketPair.right(b))
        cases = [
            (cd_mul(a0, b0), lifted.conj().to_element()),
            (cd_mul(a1, b1), lifted.to_element()),
            (cd_mul(a0, b1), cd_mul(lifted.to_element(), unit)),
            (cd_mul(a1, b0), -cd_mul(lifted.conj().to_element(), unit)),
        ]
        for index, (actual, expected) in enumerate(cases):
            if actual != expected:
                found.append(_witness(a=a, b=b, case=index + 1))
    return trials, found


@register(
    "thm-bracket-multiply",
    "{a, b}{x, y} = sqrt2{pi^(ax), pi^(by)} + pi~(xa + by) + pi~(ay - xb)(0, i_n), three orthogonal terms",
    (2, 6),
    min_trials=500,
)
def _thm_bracket_multiply(n: int, seed: int, trials: int) -> Outcome:
    found: List[Witness] = []
    count = trials
    h_targets = {1 << (n - 1), (1 << n) + (1 << (n - 1))}
    for k in range(count):
        rng = sub_rng(seed, k)
        p, q = _pair(rng, n), _pair(rng, n)
        first, second, third = bracket_mul_terms(p, q)
        if first + second + third != cd_mul(to_element(p), to_element(q)):
            found.append(_witness(a=p.a, b=p.b, x=q.a, y=q.b, identity="product"))
        if dot(first, second) or dot(first, third) or dot(second, third):
            found.append(_witness(a=p.a, b=p.b, x=q.a, y=q.b, identity="orthogonal"))
        if (
            not in_h_perp(first)
            or not pi_c_perp(second).is_zero()
            or not set(third.support) <= h_targets
        ):
            found.append(_witness(a=p.a, b=p.b, x=q.a, y=q.b, identity="summands"))
    return count, found


@register("lem-last-multiply", "(0, i_n){a, b} = -{a, b}(0, i_n) = {b, -a}", (2, 6))
def _last_multiply(n: int, seed: int, trials: int) -> Outcome:
    found: List[Witness] = []
    unit = pair_unit(n)
    for k in range(trials):
        p = _pair(sub_rng(seed, k), n)
        expected = to_element(i_pair_mul(p))
        z = to_element(p)
        if cd_mul(unit, z) != expected or cd_mul(z, unit) != -expected:
            found.append(_witness(a=p.a, b=p.b))
        if i_pair_mul(i_pair_mul(p)) != -p:
            found.append(_witness(a=p.a, b=p.b, identity="square"))
    return trials, found


@register(
    "lem-bracket-inner",
    "<{a, b}, {x, y}>_C is the lift of <a, x>_C* + <b, y>_C",
    (2, 6),
)
def _bracket_inner(n: int, seed: int, trials: int) -> Outcome:
    found: List[Witness] = []
    for k in range(trials):
        rng = sub_rng(seed, k)
        p, q = _pair(rng, n), _pair(rng, n)
        if bracket_inner(p, q) != herm_inner(to_element(p), to_element(q)):
            found.append(_witness(a=p.a, b=p.b, x=q.a, y=q.b))
    return trials, found


@register(
    "cor-bracket-inner",
    "<{a, b}, {x, y}>_R = <a, x>_R + <b, y>_R",
    (2, 6),
)
def _bracket_inner_real(n: int, seed: int, trials: int) -> Outcome:
    found: List[Witness] = []
    for k in range(trials):
        rng = sub_rng(seed, k)
        p, q = _pair(rng, n), _pair(rng, n)
        lifted = real_inner(to_element(p), to_element(q))
        if lifted != real_inner(p.a, q.a) + real_inner(p.b, q.b):
            found.append(_witness(a=p.a, b=p.b, x=q.a, y=q.b))
    return trials, found


def _zero_product_pairs(n: int) -> List[Tuple[BracketPair, BracketPair]]:
    """Pairs of brackets whose product vanishes, from the annihilators of known brackets."""
    out = []
    e1, e2 = Element.basis(n, 1), Element.basis(n, 2)
    out.append((BracketPair.left(e1), BracketPair.right(e2)))
    for p in (BracketPair.of(e1, e2), top_dlocus(n)):
        z = to_element(p)
        for w in intersect(ann(z).ann, h_perp_space(n + 1)).basis():
            out.append((p, from_element(w)))
    return out


@register(
    "prop-bracket-zd",
    "{a, b}{x, y} = 0 iff pi^(ax) = 0, pi^(by) = 0, xa + by = 0 and pi_C(ay - xb) = 0",
    (3, 5),
)
def _bracket_zd(n: int, seed: int, trials: int) -> Outcome:
    found: List[Witness] = []
    cases = _zero_product_pairs(n)
    for k in range(_budget(trials, n)):
        rng = sub_rng(seed, k)
        cases.append((_pair(rng, n), _pair(rng, n)))
    e1 = Element.basis(n, 1)
    cases.append((BracketPair.left(e1), BracketPair.left(e1)))
    for p, q in cases:
        conditions = bracket_zd_conditions(p, q)
        if conditions.holds != bracket_mul(p, q).is_zero():
            found.append(_witness(a=p.a, b=p.b, x=q.a, y=q.b))
        if conditions.by_perp_zero and conditions.sum_zero and not conditions.ax_perp_zero:
            found.append(_witness(a=p.a, b=p.b, x=q.a, y=q.b, identity="redundancy"))
    return len(cases), found


@register(
    "lambda-step",
    "a(ab) = -lam b, b(ba) = -lam a lift to (1/sqrt2){a, b}, (1/sqrt2){b, -a} with lam + 1",
    (3, 7),
)
def _lambda_step(n: int, _seed: int, _trials: int) -> Outcome:
    found: List[Witness] = []
    chain = lambda_chain(n - 2)
    for prev, pair in zip(chain, chain[1:]):
        m = prev.level
        x = BracketPair.of(prev.a, prev.b)
        y = BracketPair.of(prev.b, -prev.a)
        product = bracket_mul(x, y).scale(ONE / 2)
        expected = to_element(
            BracketPair.of(cd_mul(prev.a, prev.b), -cd_mul(prev.b, prev.a))
        ).scale(INV_SQRT2) + pair_unit(m)
        if product != expected or pair.lam != prev.lam + 1:
            found.append(_witness(level=m, lam=prev.lam))
    return len(chain), found


@register(
    "lambda-algebra",
    "a lambda pair spans with 1 and ab a 4-dimensional algebra with the stated relations",
    (3, 6),
)
def _lambda_algebra(n: int, _seed: int, _trials: int) -> Outcome:
    chain = lambda_chain(n - 2)
    for pair in chain:
        lambda_algebra_table(pair)
    return len(chain), []


# ---------------------------------------------------------------------------
# the D-locus


def _dlocus_pairs(n: int, seed: int, count: int) -> List[BracketPair]:
    """Two fixed pairs, then `count` seeded pairs of non-zero elements of C_n^perp mixing random, C-orthogonal and constructed ones."""
    pairs = [top_dlocus(n), BracketPair.of(Element.basis(n, 1), Element.basis(n, 1))]
    pool = _zero_divisor_pool(n) if n >= 4 else []
    k = 0
    while len(pairs) < count + 2:
        rng = sub_rng(seed, k)
        kind = k % 4
        if kind == 0 or not pool:
            a = _c_perp(rng, n)
            b = _c_orthogonal_to(rng, n, [a]) if kind != 3 else _c_perp(rng, n)
        elif kind == 1:
            a, b = rng.choice(pool), rng.choice(pool)
        elif kind == 2:
            a = rng.choice(pool)
            b = _c_orthogonal_to(rng, n, [a])
        else:
            a = rng.choice(pool)
            b = c_scale(random_complex(rng, n), a)
        if not a.is_zero() and not b.is_zero():
            pairs.append(BracketPair.of(a, b))
        k += 1
    return pairs


@register(
    "thm-D-locus-dichotomy",
    "dim Ann{a, b} - dim Ann(a) - dim Ann(b) is 4 on the D-locus and 0 off it",
    (3, 4),
    min_trials=200,
)
def _dichotomy(n: int, seed: int, trials: int) -> Outcome:
    found: List[Witness] = []
    pairs = _dlocus_pairs(n, seed, trials)
    for p in pairs:
        report = is_dlocus(p)
        if report.jump != (4 if report.in_dlocus else 0):
            found.append(_witness(a=p.a, b=p.b, jump=report.jump))
    return len(pairs), found


@register(
    "thm-ann-off-D-locus",
    "off the D-locus Ann{a, b} lies in H_(n+1)^perp",
    (3, 4),
    min_trials=200,
)
def _off_dlocus(n: int, seed: int, trials: int) -> Outcome:
    found: List[Witness] = []
    pairs = [p for p in _dlocus_pairs(n, seed, trials) if not is_dlocus(p).in_dlocus]
    for p in pairs:
        if not is_subspace(ann(to_element(p)).ann, h_perp_space(n + 1)):
            found.append(_witness(a=p.a, b=p.b))
    return len(pairs), found


@register(
    "thm-ann-D-locus",
    "on the D-locus Ann{a, b} is the C-orthogonal sum of {Ann a, Ann b}, C-span{|b|^2 a, -|a|^2 b} "
    "and C-span({b/a, -a/b} + sqrt2 (0, i_n))",
    (3, 4),
)
def _ann_dlocus(n: int, seed: int, trials: int) -> Outcome:
    found: List[Witness] = []
    pairs = [
        p
        for p in _dlocus_pairs(n, seed, _budget(trials, n, 3) // 4 + 1)
        if is_dlocus(p).in_dlocus
    ]
    for p in pairs:
        built = ann_dlocus_construct(p)
        first, second, third = dlocus_parts(p)
        report = is_dlocus(p)
        if (
            not are_c_orthogonal(first, second)
            or not are_c_orthogonal(first, third)
            or not are_c_orthogonal(second, third)
        ):
            found.append(_witness(a=p.a, b=p.b, identity="C-orthogonal parts"))
        if built.dim != report.dim_ann_a + report.dim_ann_b + 4:
            found.append(_witness(a=p.a, b=p.b, dim=built.dim))
    return len(pairs), found


@register(
    "lem-D-locus-vanish",
    "{a, b} is in the D-locus iff (beta* - alpha) pi_C(ab) + pi_C(ay - xb) vanishes identically",
    (3, 4),
)
def _vanish(n: int, seed: int, trials: int) -> Outcome:
    found: List[Witness] = []
    pairs = _dlocus_pairs(n, seed, _budget(trials, n, 3))
    for p in pairs:
        if vanishing_criterion(p) != is_dlocus(p).in_dlocus:
            found.append(_witness(a=p.a, b=p.b))
    return len(pairs), found


@register(
    "prop-ann-intersect-H-perp",
    "Ann{a, b} cap H^perp is {alpha a + x, beta b + y} with |a|^2 alpha + |b|^2 beta* = 0 "
    "and (beta* - alpha) pi_C(ab) + pi_C(ay - xb) = 0",
    (3, 4),
)
def _intersect_h_perp(n: int, seed: int, trials: int) -> Outcome:
    found: List[Witness] = []
    pairs = _dlocus_pairs(n, seed, _budget(trials, n, 3) // 4 + 1)
    for p in pairs:
        report = is_dlocus(p)
        built = h_perp_annihilator(p)
        expected = report.dim_ann_a + report.dim_ann_b + (2 if report.in_dlocus else 0)
        if built.dim != expected or not h_perp_structure_holds(p):
            found.append(_witness(a=p.a, b=p.b, dim=built.dim, expected=expected))
    return len(pairs), found


@register(
    "rem-D-images",
    "a is orthogonal to Ann(b) iff a is C-orthogonal to Ann(b) iff a lies in Im(b)",
    (3, 4),
)
def _images(n: int, seed: int, trials: int) -> Outcome:
    found: List[Witness] = []
    pairs = _dlocus_pairs(n, seed, _budget(trials, n, 3))
    for p in pairs:
        report, restated = is_dlocus(p), dlocus_via_images(p)
        if not (
            report.cond_a_vs_annb == restated.a_c_orth_annb == restated.a_in_image_b
            and report.cond_b_vs_anna == restated.b_c_orth_anna == restated.b_in_image_a
        ):
            found.append(_witness(a=p.a, b=p.b))
    return len(pairs), found


@register(
    "thm-ann-bracket-bound",
    "a, b non-zero in C_n^perp: dim Ann{a, b} is dim Ann(a) + dim Ann(b) or that plus 4",
    (3, 4),
)
def _bracket_bound(n: int, seed: int, trials: int) -> Outcome:
    found: List[Witness] = []
    pairs = _dlocus_pairs(n, seed, _budget(trials, n, 3))
    for p in pairs:
        report = is_dlocus(p)
        if report.jump not in (0, 4):
            found.append(_witness(a=p.a, b=p.b, jump=report.jump))
    return len(pairs), found


@register(
    "lem-D-locus-independent",
    "off the D-locus dim (Ann{a, b} cap H_(n+1)^perp) = dim Ann(a) + dim Ann(b)",
    (3, 4),
)
def _dlocus_independent(n: int, seed: int, trials: int) -> Outcome:
    found: List[Witness] = []
    reports = [is_dlocus(p) for p in _dlocus_pairs(n, seed, _budget(trials, n, 3))]
    off = [r for r in reports if not r.in_dlocus]
    for report in off:
        p = report.pair
        dim = intersect(ann(to_element(p)).ann, h_perp_space(n + 1)).dim
        if dim != report.dim_ann_a + report.dim_ann_b:
            found.append(_witness(a=p.a, b=p.b, dim=dim))
    return len(off), found


@register(
    "prop-ann-bracket-special",
    "Ann{a, 0} = {{x, y}: x in Ann a, y C-orthogonal to 1 and a}, of dimension dim Ann(a) + 2^n - 4",
    (3, 5),
)
def _special(n: int, seed: int, trials: int) -> Outcome:
    found: List[Witness] = []
    samples = [a for a in _samples(n, seed, _budget(trials, n, 3) // 4 + 1) if in_c_perp(a)]
    for a in samples:
        expected = ann(a).dim_ann + (1 << n) - 4
        for side in ("left", "right"):
            if ann_special(a, side).dim != expected:
                found.append(_witness(a=a, side=side))
    return 2 * len(samples), found


@register(
    "cor-D5",
    "zero-divisors a, b of A_4: {a, b} is in the D-locus iff b lies in span{(a1, -a2), (a2, a1)} + Eig_2(a)",
    (4, 4),
    min_trials=100,
)
def _cor_d5(_n: int, seed: int, trials: int) -> Outcome:
    found: List[Witness] = []
    pool = stiefel_zero_divisors()
    count = 0
    for k in range(max(1, trials // 2)):
        rng = sub_rng(seed, k)
        a = rng.choice(pool)
        span = a5_span(a)
        inside = [b for b in pool if span.contains(b)]
        outside = [b for b in pool if not span.contains(b)]
        for b in (rng.choice(inside), rng.choice(outside)):
            count += 1
            if span.contains(b) != is_dlocus(BracketPair.of(a, b)).in_dlocus:
                found.append(_witness(a=a, b=b))
    return count, found


_C3_PERP = (1, 2, 3, 5, 6, 7)


def _signed_basis(rng: random.Random) -> Element:
    return Element.basis(3, rng.choice(_C3_PERP), rng.choice((1, -1)))


@register(
    "prop-D5",
    "{b, c} a zero-divisor of A_4: {{a, 0}, {b, c}} is in the D-locus iff b is C-orthogonal to a and c lies in C-span(a)",
    (3, 3),
)
def _prop_d5(_n: int, seed: int, trials: int) -> Outcome:
    found: List[Witness] = []
    count = max(1, trials // 4)
    i_3 = i_unit(3)
    for k in range(count):
        rng = sub_rng(seed, k)
        a = _signed_basis(rng)
        if k % 2:
            c = rng.choice((a, -a, cd_mul(i_3, a), -cd_mul(i_3, a)))
            b = next(
                b
                for b in (_signed_basis(rng) for _ in range(100))
                if c_orthogonal(b, a)
            )
        else:
            b = _signed_basis(rng)
            c = next(
                c
                for c in (_signed_basis(rng) for _ in range(100))
                if c_orthogonal(b, c)
            )
        predicted, actual = prop_d5_test(a, b, c)
        if predicted != actual:
            found.append(_witness(a=a, b=b, c=c, predicted=predicted))
    return count, found


@register(
    "lem-D5-1",
    "a in C_n^perp, b C-orthogonal to 1 and a: {a, 0} is orthogonal to Ann{b, alpha a}",
    (3, 4),
)
def _d5_lemma1(n: int, seed: int, trials: int) -> Outcome:
    found: List[Witness] = []
    count = max(1, _budget(trials, n, 3) // 4)
    for k in range(count):
        rng = sub_rng(seed, k)
        a = _c_perp(rng, n)
        if a.is_zero():
            continue
        b = Element.zero(n)
        for y in c_perp_to(a).basis():
            b = b + y.scale(random_scalar(rng))
        if b.is_zero():
            continue
        alpha = random_complex(rng, n)
        if not d5_lemma1_check(a, b, alpha):
            found.append(_witness(a=a, b=b, alpha=alpha))
    return count, found



def _d5_lemma2_candidates(rng: random.Random, a: Element) -> List[Element]:
    """Zero-divisors of A_4 to test against {a, 0}: {0, a}, {b, 0} for b C-orthogonal to 1 and a, and the pool."""
    out = [to_element(BracketPair.right(a))]
    out += [to_element(BracketPair.left(b)) for b in c_perp_to(a).basis()]
    pool = _zero_divisor_pool(4)
    out += rng.sample(pool, min(48, len(pool)))
    return out


@register(
    "lem-D5-2",
    "a non-zero in C_3^perp: a zero-divisor of A_4 C-orthogonal to {a, 0} and orthogonal to Ann{a, 0} "
    "is {b, alpha a} with b C-orthogonal to a",
    (3, 3),
)
def _d5_lemma2(_n: int, seed: int, trials: int) -> Outcome:
    found: List[Witness] = []
    count = 0
    for k in range(max(1, trials // 8)):
        rng = sub_rng(seed, k)
        a = _signed_basis(rng) if k % 2 else _c_perp(rng, 3)
        if a.is_zero():
            continue
        left = to_element(BracketPair.left(a))
        ann_left = ann(left).ann
        span = c_span(a)
        for x in _d5_lemma2_candidates(rng, a):
            if not c_orthogonal(x, left) or not is_orthogonal_to(x, ann_left):
                continue
            count += 1
            if not ann(x).dim_ann or not in_h_perp(x):
                found.append(_witness(a=a, x=x, identity="H-perp zero-divisor"))
                continue
            p = from_element(x)
            if not c_orthogonal(p.a, a) or not span.contains(p.b):
                found.append(_witness(a=a, x=x))
    if not count:
        found.append(_witness(identity="hypotheses met"))
    return count, found


# ---------------------------------------------------------------------------
# constructions


@register(
    "cor-Zm",
    "C_n^perp holds two C-orthogonal families of 2^(n-3) mutually annihilating elements",
    (3, 7),
)
def _cor_zm(n: int, _seed: int, _trials: int) -> Outcome:
    family = zm_family(n)
    found: List[Witness] = []
    if len(family.xs) != 1 << (n - 3) or len(family.ys) != 1 << (n - 3):
        found.append(_witness(size=len(family.xs)))
    return 1, found


@register(
    "lem-Zm",
    "{x_i, 0}{x_j, 0} = 0 for i != j and {x_i, 0}{0, y_j} = 0",
    (3, 6),
)
def _lem_zm(n: int, _seed: int, _trials: int) -> Outcome:
    found: List[Witness] = []
    family = zm_family(n)
    count = 0
    for i, x in enumerate(family.xs):
        for j, other in enumerate(family.xs):
            if i != j:
                count += 1
                if not bracket_mul(BracketPair.left(x), BracketPair.left(other)).is_zero():
                    found.append(_witness(i=i, j=j, case="x x"))
        for j, y in enumerate(family.ys):
            count += 1
            if not bracket_mul(BracketPair.left(x), BracketPair.right(y)).is_zero():
                found.append(_witness(i=i, j=j, case="x y"))
    return count, found


@register(
    "degenerate-subalgebra",
    "1 and one family span a subalgebra of dimension 1 + 2^(n-3) in which distinct members multiply to 0",
    (3, 6),
)
def _degenerate(n: int, _seed: int, _trials: int) -> Outcome:
    found: List[Witness] = []
    space = degenerate_subalgebra(n)
    if space.dim != 1 + (1 << (n - 3)):
        found.append(_witness(dim=space.dim))
    return 1, found


@register(
    "degenerate-search",
    "a greedy search returns a mutually annihilating family of imaginary elements",
    (3, 5),
)
def _degenerate_search(n: int, seed: int, trials: int) -> Outcome:
    found: List[Witness] = []
    report = degenerate_search(n, trials, seed)
    members = report.family
    for i, u in enumerate(members):
        for j, v in enumerate(members):
            if i != j and not cd_mul(u, v).is_zero():
                found.append(_witness(u=u, v=v))
    if members and canonicalize(list(members), n).dim != len(members):
        found.append(_witness(identity="independent family"))
    return trials, found


@register(
    "lem-top-dim-D-locus",
    "{a, 0}-lifts of the top pair stay in the D-locus with dim Ann{a, b} = 2^(n+1) - 8n + 12",
    (3, 5),
)
def _top_dim(n: int, _seed: int, _trials: int) -> Outcome:
    found: List[Witness] = []
    pair = top_dlocus(n)
    report = is_dlocus(pair)
    if not report.in_dlocus or report.dim_ann_bracket != (1 << (n + 1)) - 8 * n + 12:
        found.append(_witness(dim=report.dim_ann_bracket))
    if n <= 4:
        ann_dlocus_construct(pair)
    return 1, found


@register(
    "top-annihilator-element",
    "the lifted top pair is a two-sided element of A_n with dim Ann = 2^n - 8n + 20",
    (4, 6),
)
def _top_element(n: int, _seed: int, _trials: int) -> Outcome:
    found: List[Witness] = []
    z = top_annihilator_element(n)
    dim = ann(z).dim_ann
    pair = from_element(z)
    if dim != (1 << n) - 8 * n + 20 or pair.is_one_sided():
        found.append(_witness(dim=dim))
    return 1, found


@register(
    "prop-Dugger-ex",
    "a alternative unit in C_(n-1)^perp: Ann(i_(n-1), a) = {(x, (a i_(n-1))x)}, dimension 2^(n-1) - 4, outside H_n^perp",
    (3, 6),
)
def _dugger(n: int, _seed: int, _trials: int) -> Outcome:
    found: List[Witness] = []
    i_prev = 1 << (n - 2)
    indices = [k for k in range(1, min(8, 1 << (n - 1))) if k != i_prev]
    for k in indices:
        a = Element.basis(n - 1, k)
        report = dugger(n, a)
        if report.dim_ann != (1 << (n - 1)) - 4:
            found.append(_witness(a=a, dim=report.dim_ann))
    return len(indices), found


def _probe_outcome(n: int, c: int, seed: int, trials: int, stable: bool) -> Outcome:
    """Probe T^c at level n; the count is the number of elements classified."""
    report = tcn_probe(n, c, trials, seed, workers=1)
    found: List[Witness] = []
    if report.stable_regime != stable or not report.consistent:
        found.append(
            _witness(c=c, stable=report.stable_regime, witness=report.witness)
        )
    if stable and not report.members:
        found.append(_witness(c=c, identity="members found"))
    return len(report.samples), found


@register(
    "prop-stability",
    "in the stable regime every found member of T^c_n is a one-sided bracket {b, 0} or {0, b}; "
    "checked at c = 0 on A_5 and at c = 4 (annihilators of dimension >= 40) on A_6",
    (5, 6),
)
def _stability(n: int, seed: int, trials: int) -> Outcome:
    c = 0 if n == 5 else 4
    return _probe_outcome(n, c, seed, _budget(trials, n, 5), True)


@register(
    "prop-not-stable",
    "c = 8 at n = 5: the two-sided lifted top pair, dim Ann = 12, lies in T^c_5",
    (5, 5),
)
def _not_stable(n: int, seed: int, trials: int) -> Outcome:
    count, found = _probe_outcome(n, 8, seed, trials, False)
    z = top_annihilator_element(n)
    if ann(z).dim_ann != 12:
        found.append(_witness(dim=ann(z).dim_ann))
    return count, found


@register(
    "thm-stable-dim-desk",
    "T^c_4 is stable iff 4 >= c/4 + 4: c = 0 stable, c = 4 and c = 8 not",
    (5, 5),
)
def _stable_dim(n: int, seed: int, trials: int) -> Outcome:
    found: List[Witness] = []
    total = 0
    for c in (0, 4, 8):
        count, more = _probe_outcome(n, c, seed, trials, c == 0)
        total += count
        found += more
    return total, found


@register(
    "cor-sixteen-dim-one-sided",
    "every 16-dimensional annihilator found in A_5 belongs to a one-sided lift of a Stiefel zero-divisor",
    (5, 5),
)
def _sixteen(n: int, seed: int, trials: int) -> Outcome:
    found: List[Witness] = []
    family = one_sided_family(n)
    picks = random.Random(seed).sample(family, min(trials, len(family)))  # nosec
    stiefel = set(stiefel_zero_divisors())
    for label, z in picks:
        pair = from_element(z)
        side = pair.a if not pair.a.is_zero() else pair.b
        if ann(z).dim_ann != 16 or not pair.is_one_sided() or side not in stiefel:
            found.append(_witness(label=label))
    for k in range(trials // 20 + 1):
        z = _sparse(sub_rng(seed, k), n, 6, c_perp=True)
        if ann(z).dim_ann == 16 and (not in_h_perp(z) or not from_element(z).is_one_sided()):
            found.append(_witness(z=z))
    return len(picks) + trials // 20 + 1, found


@register(
    "scale-invariance",
    "annihilator subspaces and D-locus membership do not change under non-zero scaling",
    (3, 4),
)
def _scale(n: int, seed: int, trials: int) -> Outcome:
    found: List[Witness] = []
    pairs = _dlocus_pairs(n, seed, _budget(trials, n, 3) // 4 + 1)
    for k, p in enumerate(pairs):
        rng = sub_rng(seed, k)
        s = random_scalar(rng, with_sqrt2=True) or Scalar(3)
        t = random_scalar(rng, with_sqrt2=True) or Scalar(-2)
        scaled = BracketPair.of(p.a.scale(s), p.b.scale(t))
        if ann(p.a.scale(s)).ann != ann(p.a).ann:
            found.append(_witness(a=p.a, s=s))
        if is_dlocus(scaled).in_dlocus != is_dlocus(p).in_dlocus:
            found.append(_witness(a=p.a, b=p.b, s=s, t=t))
    return len(pairs), found


# ---------------------------------------------------------------------------
# runner


def run_check(check_id: str, n: int, seed: int, trials: Optional[int] = None) -> VerifyResult:
    """
    Run one check.

    :param check_id: the identifier.
    :param n: the requested level; clamped to the range of the check.
    :param seed: the seed.
    :param trials: the trial count; None takes the configured count, raised to the check's floor.
    :return: the result; an `IdentityViolation` raised inside the check is a failure.
    """
    check = get_check(check_id)
    level = check.level_for(n)
    asked = check.trials_for(trials)
    started = time.perf_counter()
    try:
        count, found = check.fn(level, seed, asked)
    except IdentityViolation as e:
        count, found = 0, [{"identity": e.identity, "witness": e.witness}]
    finally:
        if level >= CACHE_RELEASE_LEVEL:
            release_caches()
    elapsed = time.perf_counter() - started
    status = "fail" if found else "pass"
    logger.info(f"{check_id} at level {level}: {status} ({count} cases, {elapsed:.2f}s)")
    return VerifyResult(
        check_id=check_id,
        statement=check.statement,
        level=level,
        trials=count,
        status=status,
        witnesses=tuple(found[:MAX_WITNESSES]),
        elapsed=elapsed,
    )


def _run_job(args: Tuple[str, int, int, Optional[int], LabConfig]) -> VerifyResult:
    check_id, n, seed, trials, config = args
    set_active_config(config)
    return run_check(check_id, n, seed, trials)


def run_checks(
    check_ids: Optional[Sequence[str]],
    n: int,
    seed: int,
    trials: Optional[int] = None,
    workers: int = 1,
) -> List[VerifyResult]:
    """
    Run several checks, in a process pool when `workers > 1`.

    :param check_ids: the checks to run; None runs the whole registry.
    :param n: the requested level.
    :param seed: the seed.
    :param trials: the trial count for every check; None lets each check apply its floor.
    :param workers: size of the process pool.
    :return: the results sorted by check id.
    """
    ids = verify_registry() if check_ids is None else sorted(set(check_ids))
    for check_id in ids:
        get_check(check_id)
    config = active_config()
    jobs = [(check_id, n, seed, trials, config) for check_id in ids]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            results = list(executor.map(_run_job, jobs))
    else:
        results = [run_check(check_id, n, seed, trials) for check_id in ids]
    return sorted(results, key=lambda r: r.check_id)
