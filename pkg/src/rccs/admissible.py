"""Admissible number sets: checkers, tail completion and exact generators.

An admissible set prescribes, for each prospective cause-cell ``i``, the cell
weight ``c_i`` together with the conditional probabilities ``a_i = p(A|C_i)``,
``b_i = p(B|C_i)`` and ``d_i = p(A&B|C_i)``.  The checkers below follow the
printed definitions literally.  The generators are stricter: the printed
definitions tie the numbers only to the marginals and the expected
correlation, but materialising a system inside an extension also forces the
set to reproduce the pair's actual deviation (otherwise the split ratios fail
to be column-stochastic) and to keep every Boolean-cell conditional
probability nonnegative.  We call a set meeting those extra constraints
*extension-grade*; the generators only ever emit extension-grade sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, NamedTuple, Sequence

from .errors import ConstructionFailed, InfeasibleProfile, InvalidProfile, TailOutOfRange
from .rational import ONE, ZERO, ceil_sqrt
from .report import Clause, ConditionReport, Model, clause
from .space import Event, ProbabilitySpace, deviation, prob


class Quadruple(NamedTuple):
    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction


@dataclass(frozen=True)
class AdmissibleSet:
    """At least two quadruples, all inside (0,1), with cell weights summing to 1."""

    entries: tuple[Quadruple, ...]

    def __post_init__(self) -> None:
        entries = tuple(
            Quadruple(Fraction(a), Fraction(b), Fraction(c), Fraction(d))
            for a, b, c, d in self.entries
        )
        object.__setattr__(self, "entries", entries)
        if len(entries) < 2:
            raise InvalidProfile("an admissible set needs at least two entries")
        total = ZERO
        for i, entry in enumerate(entries, start=1):
            for name, value in zip("abcd", entry):
                if not (0 < value < 1):
                    raise InvalidProfile(
                        f"entry {i}: {name} = {value} falls outside the open unit interval"
                    )
            total += entry.c
        if total != ONE:
            raise InvalidProfile(f"cell weights sum to {total}, expected 1")

    def __len__(self) -> int:
        return len(self.entries)

    def to_dicts(self) -> list[dict]:
        from .rational import format_ratio

        return [
            {"a": format_ratio(e.a), "b": format_ratio(e.b), "c": format_ratio(e.c), "d": format_ratio(e.d)}
            for e in self.entries
        ]


@dataclass(frozen=True)
class TargetProfile:
    """The numbers an admissible set is judged against: the marginals ``a`` and
    ``b``, the expected correlation, the target deviation and the size."""

    a: Fraction
    b: Fraction
    expected: Fraction
    delta: Fraction
    n: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        object.__setattr__(self, "expected", Fraction(self.expected))
        object.__setattr__(self, "delta", Fraction(self.delta))
        if not (0 < self.a < 1 and 0 < self.b < 1):
            raise InvalidProfile("marginals must lie strictly between 0 and 1")
        if self.delta <= 0:
            raise InvalidProfile("target deviation must be positive")
        if self.n < 2:
            raise InvalidProfile("size must be at least 2")

    def to_dict(self) -> dict:
        from .rational import format_ratio

        return {
            "a": format_ratio(self.a),
            "b": format_ratio(self.b),
            "epsilon": format_ratio(self.expected),
            "delta": format_ratio(self.delta),
            "n": self.n,
        }


def profile_for(
    space: ProbabilitySpace, a_event: Event, b_event: Event, expected: Fraction, n: int
) -> TargetProfile:
    """Read the profile straight off a space and an event pair."""
    return TargetProfile(
        prob(space, a_event),
        prob(space, b_event),
        Fraction(expected),
        deviation(space, a_event, b_event, expected),
        n,
    )


# ---------------------------------------------------------------------------
# checkers (paper-literal)
# ---------------------------------------------------------------------------


def _quasi_clauses(s: AdmissibleSet, p: TargetProfile) -> list[Clause]:
    sum_ac = sum((e.a * e.c for e in s.entries), ZERO)
    sum_bc = sum((e.b * e.c for e in s.entries), ZERO)
    sum_c = sum((e.c for e in s.entries), ZERO)
    clauses = [
        clause("adm-a", sum_ac, "==", p.a),
        clause("adm-b", sum_bc, "==", p.b),
        clause("adm-partition", sum_c, "==", ONE),
    ]
    for i, e in enumerate(s.entries, start=1):
        clauses.append(clause("adm-di", e.d - e.a * e.b, "==", p.expected, subject=f"i={i}"))
    for i, e in enumerate(s.entries, start=1):
        inside = min(e.a, e.b, e.d) > 0 and max(e.a, e.b, e.d) < 1
        clauses.append(
            Clause("adm-aibi", inside, min(e.a, e.b, e.d), "in (0,1)", None, subject=f"i={i}")
        )
        clauses.append(
            Clause("adm-ci", 0 < e.c < 1, e.c, "in (0,1)", None, subject=f"i={i}")
        )
    return clauses


def is_quasi_admissible(s: AdmissibleSet, p: TargetProfile) -> ConditionReport:
    """The shared core: marginals and unit mass reproduced, every cell's
    conditional correlation equal to the expected one, all values interior."""
    return ConditionReport(Model.QUASI_ADMISSIBLE, tuple(_quasi_clauses(s, p)))


def is_hr_admissible(s: AdmissibleSet, p: TargetProfile) -> ConditionReport:
    """Quasi-admissible plus the strict pairwise ordering clause."""
    clauses = _quasi_clauses(s, p)
    for i in range(len(s.entries)):
        for j in range(i + 1, len(s.entries)):
            product = (s.entries[i].a - s.entries[j].a) * (s.entries[i].b - s.entries[j].b)
            clauses.append(
                clause("grccs-admissible", product, ">", ZERO, subject=f"i={i + 1},j={j + 1}")
            )
    return ConditionReport(Model.HR_ADMISSIBLE, tuple(clauses))


def is_m_admissible(s: AdmissibleSet, p: TargetProfile) -> ConditionReport:
    """Quasi-admissible plus the per-entry marginal-comparison clause."""
    clauses = _quasi_clauses(s, p)
    for i, e in enumerate(s.entries, start=1):
        product = (e.a - p.a) * (e.b - p.b)
        clauses.append(clause("gmccs-admissible", product, ">", ZERO, subject=f"i={i}"))
    return ConditionReport(Model.M_ADMISSIBLE, tuple(clauses))


def existence_condition(p: TargetProfile) -> bool:
    """Admissible numbers of either kind exist iff expected + a*b > 0."""
    return p.expected + p.a * p.b > 0


def realized_deviation(s: AdmissibleSet, p: TargetProfile) -> Fraction:
    """The deviation a partition with these cell statistics would produce:
    sum_i c_i d_i - (sum_i c_i a_i)(sum_i c_i b_i) - expected."""
    sum_cd = sum((e.c * e.d for e in s.entries), ZERO)
    sum_ca = sum((e.c * e.a for e in s.entries), ZERO)
    sum_cb = sum((e.c * e.b for e in s.entries), ZERO)
    return sum_cd - sum_ca * sum_cb - p.expected


def complete_tail(
    head: Sequence[tuple[Fraction, Fraction, Fraction]], p: TargetProfile
) -> AdmissibleSet:
    """Extend ``n-1`` head triples ``(a_k, b_k, c_k)`` to the unique full set
    satisfying the quasi-admissibility identities.

    The tail entry carries the leftover mass and restores both marginals; the
    head d-values follow from the expected correlation.  Raises
    ``TailOutOfRange`` naming the first symbol that leaves (0,1).
    """
    head = [(Fraction(a), Fraction(b), Fraction(c)) for a, b, c in head]
    if len(head) != p.n - 1:
        raise InvalidProfile(f"head must have n-1 = {p.n - 1} triples, got {len(head)}")
    for k, (a_k, b_k, c_k) in enumerate(head, start=1):
        for name, value in (("a", a_k), ("b", b_k), ("c", c_k)):
            if not (0 < value < 1):
                raise InvalidProfile(f"head value {name}_{k} = {value} outside (0,1)")
    mass = sum((c for _, _, c in head), ZERO)
    if mass >= 1:
        raise InvalidProfile(f"head weights sum to {mass}, leaving no tail mass")

    c_n = 1 - mass
    a_n = (p.a - sum((c * a for a, _, c in head), ZERO)) / c_n
    b_n = (p.b - sum((c * b for _, b, c in head), ZERO)) / c_n
    d_n = p.expected + (
        (p.a - sum((c * a for a, _, c in head), ZERO))
        * (p.b - sum((c * b for _, b, c in head), ZERO))
    ) / (c_n * c_n)

    entries = []
    for k, (a_k, b_k, c_k) in enumerate(head, start=1):
        d_k = p.expected + a_k * b_k
        if not (0 < d_k < 1):
            raise TailOutOfRange(f"d_{k}", d_k)
        entries.append(Quadruple(a_k, b_k, c_k, d_k))
    for name, value in ((f"a_{p.n}", a_n), (f"b_{p.n}", b_n), (f"c_{p.n}", c_n), (f"d_{p.n}", d_n)):
        if not (0 < value < 1):
            raise TailOutOfRange(name, value)
    entries.append(Quadruple(a_n, b_n, c_n, d_n))
    return AdmissibleSet(tuple(entries))


# ---------------------------------------------------------------------------
# generators (extension-grade)
# ---------------------------------------------------------------------------

_SWEEP_BUDGET = 64


def _dyadic_sweep(budget: int) -> Iterator[Fraction]:
    """1/2, 1/4, 3/4, 1/8, 3/8, 5/8, 7/8, 1/16, ...: a deterministic walk of
    dyadic head-mass fractions, densest first."""
    emitted = 0
    denominator = 2
    while emitted < budget:
        for numerator in range(1, denominator, 2):
            yield Fraction(numerator, denominator)
            emitted += 1
            if emitted >= budget:
                return
        denominator *= 2


def interior_cell_conditionals(s: AdmissibleSet) -> bool:
    """True when every entry keeps all four Boolean-cell conditionals strictly
    positive: d_i, a_i - d_i, b_i - d_i and 1 - a_i - b_i + d_i.

    Any cell of a real partition satisfies these with >= 0; the generators
    demand strict interiority so the later atom split never produces
    zero-weight sub-atoms.
    """
    for e in s.entries:
        if e.d <= 0 or e.a - e.d <= 0 or e.b - e.d <= 0 or 1 - e.a - e.b + e.d <= 0:
            return False
    return True


def _require_constructible(p: TargetProfile) -> None:
    if not existence_condition(p):
        raise InfeasibleProfile(
            f"expected + a*b = {p.expected + p.a * p.b} <= 0: "
            "no admissible numbers exist for this profile"
        )
    if p.expected + p.a * p.b >= 1:
        raise InfeasibleProfile(
            f"expected + a*b = {p.expected + p.a * p.b} >= 1: "
            "every quasi-admissible set would need some d_i >= 1"
        )


def _ladder_candidate(
    p: TargetProfile, head_mass: Fraction, solve_side: str, direction: int
) -> AdmissibleSet | None:
    """One deterministic attempt: equal head weights carrying an offset ladder
    on one side of both marginals (below for ``direction = -1``, above for
    ``+1``), tail completed on the other side, offset scales solved exactly so
    the realized deviation equals the target.

    ``head_mass`` is the total weight put on the ladder; ``solve_side`` says
    which marginal's offset is pinned to its capacity before the other is
    solved from the product.
    """
    n = p.n
    h = head_mass / (n - 1)
    t_sum = Fraction(n * (n - 1), 2)  # sum of ladder positions 1..n-1
    k_sum = Fraction((n - 1) * n * (2 * n - 1), 6)  # sum of squares
    tail_mass = 1 - head_mass
    tail_factor = h * t_sum / tail_mass
    # realized deviation of the ladder family is (s * s') * q_factor
    q_factor = h * k_sum + (h * t_sum) ** 2 / tail_mass
    product = p.delta / q_factor

    if direction < 0:  # ladder below the marginals, tail above
        cap_a = min(p.a / (n - 1), (1 - p.a) / tail_factor)
        cap_b = min(p.b / (n - 1), (1 - p.b) / tail_factor)
    else:  # ladder above, tail below
        cap_a = min((1 - p.a) / (n - 1), p.a / tail_factor)
        cap_b = min((1 - p.b) / (n - 1), p.b / tail_factor)
    if product >= cap_a * cap_b:
        return None
    ratio = product / (cap_a * cap_b)
    theta = ceil_sqrt(ratio)  # rational, theta^2 >= ratio, theta <= 1
    if theta <= 0 or theta > 1:
        return None
    if solve_side == "b":
        s_a = cap_a * theta
        s_b = product / s_a
    else:
        s_b = cap_b * theta
        s_a = product / s_b
    if s_a <= 0 or s_b <= 0 or s_a > cap_a or s_b > cap_b:
        return None

    head = [
        (p.a + direction * s_a * k, p.b + direction * s_b * k, h) for k in range(1, n)
    ]
    if any(not (0 < a_k < 1 and 0 < b_k < 1) for a_k, b_k, _ in head):
        return None
    try:
        return complete_tail(head, p)
    except TailOutOfRange:
        return None


def _acceptable(candidate: AdmissibleSet | None, p: TargetProfile, checker) -> bool:
    return (
        candidate is not None
        and checker(candidate, p).verdict
        and realized_deviation(candidate, p) == p.delta
        and interior_cell_conditionals(candidate)
    )


def _cluster_split(base: AdmissibleSet, p: TargetProfile, checker) -> AdmissibleSet | None:
    """Grow a two-cell solution to size n by replacing its first cell with
    n-1 equal-weight rungs.

    The rungs climb with a fixed slope matching the base orientation (so every
    pairwise ordering clause keeps the base's sign), and the deviation
    equation, affine in the cluster anchor, is re-solved exactly.  The rung
    step is halved until all strict constraints hold again; they must for a
    small enough step because the base values are strictly interior.
    """
    n = p.n
    first, second = base.entries
    rungs = n - 1
    h = first.c / rungs
    positions = list(range(rungs))
    slope = (first.b - second.b) / (first.a - second.a)  # positive for admissible bases
    if slope <= 0:
        return None
    j_sum = sum(positions)
    j_sq = sum(j * j for j in positions)

    for halving in range(_SWEEP_BUDGET):
        scale = Fraction(1, 2 ** (halving + 1)) / rungs
        for orient in (1, -1):
            s_a = orient * min(first.a, 1 - first.a) * scale
            s_b = slope * s_a
            # rungs (anchor + s_a j, b_1 + s_b j); the tail's b-coordinate does
            # not depend on the anchor, so the deviation is affine in it
            tail_b = (p.b - first.c * first.b - s_b * h * j_sum) / second.c
            gradient = first.c * (first.b - tail_b) + s_b * h * j_sum
            if gradient == 0:
                continue
            fixed = (
                s_a * h * (first.b * j_sum + s_b * j_sq)
                + tail_b * (p.a - s_a * h * j_sum)
                - p.a * p.b
            )
            anchor = (p.delta - fixed) / gradient
            head = [(anchor + s_a * j, first.b + s_b * j, h) for j in positions]
            if any(not (0 < u_j < 1 and 0 < v_j < 1) for u_j, v_j, _ in head):
                continue
            try:
                candidate = complete_tail(head, p)
            except (TailOutOfRange, InvalidProfile):
                continue
            if _acceptable(candidate, p, checker):
                return candidate
    return None


def _generate(p: TargetProfile, checker) -> AdmissibleSet:
    _require_constructible(p)
    attempts = 0
    for head_mass in _dyadic_sweep(_SWEEP_BUDGET):
        for direction in (-1, 1):
            for side in ("b", "a"):
                attempts += 1
                candidate = _ladder_candidate(p, head_mass, side, direction)
                if _acceptable(candidate, p, checker):
                    return candidate
    if p.n > 2:
        # reduce to the two-cell problem and split its first cell
        try:
            base = _generate(TargetProfile(p.a, p.b, p.expected, p.delta, 2), checker)
        except ConstructionFailed:
            base = None
        if base is not None:
            candidate = _cluster_split(base, p, checker)
            if candidate is not None:
                return candidate
    raise ConstructionFailed(
        f"no extension-grade set found for {p.to_dict()} after {attempts} ladder "
        "attempts; the target deviation is too large for this profile's interior region"
    )


def construct_hr_admissible(p: TargetProfile) -> AdmissibleSet:
    """A deterministic extension-grade set passing ``is_hr_admissible`` whose
    realized deviation is exactly the target."""
    return _generate(p, is_hr_admissible)


def construct_m_admissible(p: TargetProfile) -> AdmissibleSet:
    """As ``construct_hr_admissible`` but for the marginal-comparison clause;
    for n > 2 the base two-cell solution is grown by splitting its last cell
    into n-1 equal-weight copies (duplicated profiles are fine here and break
    the pairwise clause on purpose)."""
    base = _generate(TargetProfile(p.a, p.b, p.expected, p.delta, 2), is_m_admissible)
    if p.n == 2:
        return base
    first, last = base.entries
    parts = p.n - 1
    split = Quadruple(last.a, last.b, last.c / parts, last.d)
    result = AdmissibleSet((first,) + (split,) * parts)
    if not is_m_admissible(result, p).verdict or realized_deviation(result, p) != p.delta:
        raise ConstructionFailed("cell splitting failed to preserve admissibility")
    return result


def split_entry(s: AdmissibleSet, index: int, copies: int) -> AdmissibleSet:
    """Split entry ``index`` into ``copies`` equal-weight duplicates."""
    if copies < 2:
        raise InvalidProfile("splitting needs at least two copies")
    entry = s.entries[index]
    split = Quadruple(entry.a, entry.b, entry.c / copies, entry.d)
    entries = s.entries[:index] + (split,) * copies + s.entries[index + 1 :]
    return AdmissibleSet(entries)


# ---------------------------------------------------------------------------
# exact infeasibility certificates
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DominationWitness:
    """An affine function L(u,v) = alpha + beta*u + gamma*v dominating the
    product u*v over the support region all extension-grade cell statistics
    must live in (for a negative expected correlation).  When additionally
    L(a,b) < a*b + delta, no system of any size can realise the deviation in
    any extension: E[uv] <= E[L] = L(a,b) < a*b + delta."""

    alpha: Fraction
    beta: Fraction
    gamma: Fraction


def witness_refutes(p: TargetProfile, w: DominationWitness) -> bool:
    """Exact check that ``w`` proves ``p`` unrealizable (negative expected
    correlation only).

    The support region is {(u,v) in [0,1]^2 : uv >= c, (1-u)(1-v) >= c} with
    c = -expected: the two constraints are the cell conditionals p(A&B|C_i)
    and p(~A&~B|C_i) being nonnegative under screening at the expected
    correlation.  Domination is verified on both hyperbola arcs via the
    closed-form maxima of u*v - L there; the interior contributes no maximum
    because u*v - L is a saddle.
    """
    if p.expected >= 0:
        raise InvalidProfile("domination witnesses only apply to negative expected correlation")
    c = -p.expected
    alpha, beta, gamma = w.alpha, w.beta, w.gamma
    if not (0 < beta < 1 and 0 < gamma < 1):
        return False
    # lower arc uv = c: max of uv - L over u > 0 is c - alpha - 2 sqrt(beta gamma c)
    excess = c - alpha
    if excess > 0 and excess * excess > 4 * beta * gamma * c:
        return False
    # upper arc (1-u)(1-v) = c: max is (1 - alpha - beta - gamma + c) - 2 sqrt((1-beta)(1-gamma) c)
    excess = 1 - alpha - beta - gamma + c
    if excess > 0 and excess * excess > 4 * (1 - beta) * (1 - gamma) * c:
        return False
    return alpha + beta * p.a + gamma * p.b < p.a * p.b + p.delta


def mean_outside_support(p: TargetProfile) -> bool:
    """True when the marginal pair itself lies outside the convex support
    region (negative expected correlation), so no mixture of admissible cell
    statistics can average to it."""
    if p.expected >= 0:
        return False
    c = -p.expected
    return p.a * p.b <= c or (1 - p.a) * (1 - p.b) <= c
