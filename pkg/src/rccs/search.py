"""Brute-force ground truth: exhaustive partition search and randomized
admissibility sampling.

This module deliberately re-derives every clause from raw atom weights using
integer arithmetic over a common denominator, sharing no evaluation code with
the validators in ``rccs.models``; agreement between the two paths is the
project's main acceptance instrument.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .admissible import (
    AdmissibleSet,
    TargetProfile,
    complete_tail,
    is_hr_admissible,
    is_m_admissible,
)
from .errors import InvalidPartition, SearchBudgetExceeded, TailOutOfRange
from .models import check_ghr_rccs, check_gm_rccs, check_hr_rccs, check_m_rccs
from .report import ConditionReport
from .space import Event, Partition, ProbabilitySpace

SEARCH_BUDGET = 10**7


def stirling2(m: int, n: int) -> int:
    """Stirling number of the second kind, S(m,n) = n S(m-1,n) + S(m-1,n-1)."""
    if n < 0 or n > m:
        return 0
    row = [1] + [0] * n  # S(0, k)
    for _ in range(m):
        new = [0] * (n + 1)
        for k in range(1, n + 1):
            new[k] = k * row[k] + row[k - 1]
        row = new
    return row[n]


def _rgs_with_blocks(m: int, n: int) -> Iterator[list[int]]:
    """Restricted growth strings of length m using exactly n block indices,
    in lexicographic order."""
    code = [0] * m

    def rec(pos: int, used: int) -> Iterator[list[int]]:
        if pos == m:
            if used == n:
                yield code
            return
        # leaving too few positions to introduce the remaining blocks?
        remaining = m - pos
        for value in range(0, min(used, n - 1) + 1):
            new_used = max(used, value + 1)
            if n - new_used <= remaining - 1:
                code[pos] = value
                yield from rec(pos + 1, new_used)

    yield from rec(0, 0)


def enumerate_partitions(space: ProbabilitySpace, n: int) -> Iterator[Partition]:
    """Every partition of the atoms into exactly ``n`` nonempty blocks, once
    each, in restricted-growth-string order; blocks ordered by first atom."""
    m = len(space)
    if n < 2 or n > m:
        raise InvalidPartition(f"cannot partition {m} atoms into {n} blocks")
    labels = space.labels
    for code in _rgs_with_blocks(m, n):
        members: list[set[str]] = [set() for _ in range(n)]
        for label, block in zip(labels, code):
            members[block].add(label)
        yield Partition(space, tuple(Event(space, frozenset(ms)) for ms in members))


@dataclass(frozen=True)
class SearchQuery:
    a: Event
    b: Event
    expected: Fraction
    model: str  # "hr" | "ghr" | "m" | "gm"
    sizes: tuple[int, int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "expected", Fraction(self.expected))
        lo, hi = self.sizes
        if lo < 2 or hi < lo:
            raise InvalidPartition("size range must satisfy 2 <= lo <= hi")
        if self.model not in {"hr", "ghr", "m", "gm"}:
            raise ValueError(f"unknown system model {self.model!r}")


@dataclass(frozen=True)
class SearchReport:
    hits: tuple[tuple[Partition, ConditionReport], ...]
    partitions_examined: int

    def to_dict(self) -> dict:
        return {
            "hits": [
                {
                    "partition": [sorted(block.members) for block in partition.blocks],
                    "report": report.to_dict(),
                }
                for partition, report in self.hits
            ],
            "partitions_examined": self.partitions_examined,
        }


class _IntegerMeasure:
    """Atom weights as integers over one common denominator, so that clause
    evaluation is pure integer arithmetic (an independent path from the
    Fraction-based validators)."""

    def __init__(self, space: ProbabilitySpace) -> None:
        denominator = 1
        for _, weight in space.atoms:
            denominator = denominator * weight.denominator // math.gcd(denominator, weight.denominator)
        self.denominator = denominator
        self.weight = {
            label: weight.numerator * (denominator // weight.denominator)
            for label, weight in space.atoms
        }

    def mass(self, members) -> int:
        total = 0
        for label in members:
            total += self.weight[label]
        return total


def _oracle_accepts(
    measure: _IntegerMeasure,
    a_members: frozenset,
    b_members: frozenset,
    blocks: list[frozenset],
    eps_num: int,
    eps_den: int,
    pairwise: bool,
) -> bool:
    stats = []
    for members in blocks:
        n_c = measure.mass(members)
        if n_c == 0:
            return False
        n_ac = measure.mass(a_members & members)
        n_bc = measure.mass(b_members & members)
        n_abc = measure.mass(a_members & b_members & members)
        # Corr_{C}(A,B) == eps  <=>  (n_abc n_c - n_ac n_bc) eps_den == eps_num n_c^2
        if (n_abc * n_c - n_ac * n_bc) * eps_den != eps_num * n_c * n_c:
            return False
        stats.append((n_c, n_ac, n_bc))
    if pairwise:
        for i in range(len(stats)):
            n_i, a_i, b_i = stats[i]
            for j in range(i + 1, len(stats)):
                n_j, a_j, b_j = stats[j]
                if (a_i * n_j - a_j * n_i) * (b_i * n_j - b_j * n_i) <= 0:
                    return False
    else:
        d = measure.denominator
        n_a = measure.mass(a_members)
        n_b = measure.mass(b_members)
        for n_i, a_i, b_i in stats:
            if (a_i * d - n_a * n_i) * (b_i * d - n_b * n_i) <= 0:
                return False
    return True


def find_rccs(space: ProbabilitySpace, query: SearchQuery) -> SearchReport:
    """Scan every partition in the size range and return those accepted by the
    oracle's own clause evaluation, each paired with the validator's report
    (the two must agree; disagreement raises)."""
    m = len(space)
    lo, hi = query.sizes
    hi = min(hi, m)
    total = sum(stirling2(m, n) for n in range(lo, hi + 1)) if hi >= lo else 0
    if total > SEARCH_BUDGET:
        raise SearchBudgetExceeded(
            f"{total} partitions exceed the {SEARCH_BUDGET} budget"
        )

    measure = _IntegerMeasure(space)
    eps = query.expected if query.model in {"ghr", "gm"} else Fraction(0)
    pairwise = query.model in {"hr", "ghr"}
    validator = {
        "hr": lambda part: check_hr_rccs(space, query.a, query.b, part),
        "ghr": lambda part: check_ghr_rccs(space, query.a, query.b, part, eps),
        "m": lambda part: check_m_rccs(space, query.a, query.b, part),
        "gm": lambda part: check_gm_rccs(space, query.a, query.b, part, eps),
    }[query.model]

    hits = []
    examined = 0
    for n in range(lo, hi + 1):
        for partition in enumerate_partitions(space, n):
            examined += 1
            accepted = _oracle_accepts(
                measure,
                query.a.members,
                query.b.members,
                [block.members for block in partition.blocks],
                eps.numerator,
                eps.denominator,
                pairwise,
            )
            if accepted:
                report = validator(partition)
                if not report.verdict:  # pragma: no cover - agreement is an invariant
                    raise AssertionError(
                        "oracle accepted a partition the validator rejects: "
                        f"{[sorted(b.members) for b in partition.blocks]}"
                    )
                hits.append((partition, report))
    return SearchReport(tuple(hits), examined)


def sample_admissible_search(
    profile: TargetProfile, trials: int, seed: int, model: str = "hr"
) -> AdmissibleSet | None:
    """Seeded falsification harness: draw head triples from a dyadic grid,
    complete the tail, and return the first set passing the paper-literal
    checker (``hr`` or ``m``), or None after ``trials`` attempts."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if model not in {"hr", "m"}:
        raise ValueError(f"unknown admissibility model {model!r}")
    checker = is_hr_admissible if model == "hr" else is_m_admissible
    rng = random.Random(seed)
    grid = 64
    n = profile.n
    if n == 2:
        raw = _sample_pair_integer(profile, trials, rng, model, grid)
        if raw is None:
            return None
        head = [(Fraction(raw[0], grid), Fraction(raw[1], grid), Fraction(raw[2], grid))]
        candidate = complete_tail(head, profile)
        assert checker(candidate, profile).verdict
        return candidate

    eps_num, eps_den = profile.expected.numerator, profile.expected.denominator
    gg = grid * grid
    for _ in range(trials):
        raw = [(rng.randrange(1, grid), rng.randrange(1, grid), rng.randrange(1, grid))
               for _ in range(n - 1)]
        # integer pre-gates: head mass < 1 and every head d inside (0, 1)
        if sum(c for _, _, c in raw) >= grid:
            continue
        if any(
            not 0 < gg * eps_num + i * j * eps_den < gg * eps_den
            for i, j, _ in raw
        ):
            continue
        head = [
            (Fraction(i, grid), Fraction(j, grid), Fraction(c, grid)) for i, j, c in raw
        ]
        try:
            candidate = complete_tail(head, profile)
        except TailOutOfRange:
            continue
        # tail completion guarantees the quasi-admissibility identities, so
        # only the model-specific clause remains to test
        entries = candidate.entries
        if model == "hr":
            ok = all(
                (entries[i].a - entries[j].a) * (entries[i].b - entries[j].b) > 0
                for i in range(n)
                for j in range(i + 1, n)
            )
        else:
            ok = all((e.a - profile.a) * (e.b - profile.b) > 0 for e in entries)
        if ok:
            assert checker(candidate, profile).verdict
            return candidate
    return None


def _sample_pair_integer(
    profile: TargetProfile, trials: int, rng: random.Random, model: str, grid: int
) -> tuple[int, int, int] | None:
    """Two-cell sampling entirely in integer arithmetic (hot path for the
    falsification harness); returns the accepted raw draw or None.

    With head (i/g, j/g, c/g) the completed tail is a_2 = (a g^2 - q_a i c') /
    (q_a g c'') scaled appropriately; all open-interval and clause checks
    reduce to integer sign tests.
    """
    g = grid
    gg = g * g
    pa_n, pa_d = profile.a.numerator, profile.a.denominator
    pb_n, pb_d = profile.b.numerator, profile.b.denominator
    e_n, e_d = profile.expected.numerator, profile.expected.denominator
    for _ in range(trials):
        i = rng.randrange(1, g)
        j = rng.randrange(1, g)
        c = rng.randrange(1, g)
        # d_1 = eps + ij/g^2 in (0,1)
        d1 = gg * e_n + i * j * e_d
        if not 0 < d1 < gg * e_d:
            continue
        # a_2 = (pa g^2 - pa_d i c) / (pa_d g (g - c)) as integers na/da
        na = pa_n * gg - pa_d * i * c
        da = pa_d * g * (g - c)
        if not 0 < na < da:
            continue
        nb = pb_n * gg - pb_d * j * c
        db = pb_d * g * (g - c)
        if not 0 < nb < db:
            continue
        # d_2 = eps + a_2 b_2 in (0,1)
        d2 = e_n * da * db + e_d * na * nb
        if not 0 < d2 < e_d * da * db:
            continue
        if model == "hr":
            # (a_1 - a_2)(b_1 - b_2) > 0
            if (i * da - g * na) * (j * db - g * nb) <= 0:
                continue
        else:
            # (a_1 - a)(b_1 - b) > 0 and (a_2 - a)(b_2 - b) > 0
            if (i * pa_d - g * pa_n) * (j * pb_d - g * pb_n) <= 0:
                continue
            if (na * pa_d - pa_n * da) * (nb * pb_d - pb_n * db) <= 0:
                continue
        return i, j, c
    return None
