"""Condition-by-condition validators for the six common-cause models.

The classical checks (conjunctive fork, HR-RCCS, M-RCCS) demand that the
cause screen its effects off to zero conditional correlation; the generalised
checks demand restoration of an arbitrary expected correlation instead, and
reduce clause-for-clause to the classical ones at expected correlation zero.

Also here: the exact total-probability decomposition of a correlation over
any partition, and the two deviation formulas that hold once every cell
screens off at the expected correlation.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import (
    IndistinctEvents,
    InvalidPartition,
    ScreeningHypothesisViolated,
)
from .rational import ZERO
from .report import Clause, ConditionReport, Model, clause, skipped_clause
from .space import Event, Partition, ProbabilitySpace, cond_prob, prob


def _fork_clauses(
    space: ProbabilitySpace,
    a: Event,
    b: Event,
    c: Event,
    expected: Fraction,
    prefix: str,
) -> tuple[Clause, ...]:
    not_c = ~c
    p_c = prob(space, c)
    p_not_c = prob(space, not_c)
    clauses = [
        clause(f"{prefix}-0", p_c, "!=", ZERO),
        clause(f"{prefix}-0-complement", p_not_c, "!=", ZERO),
    ]
    if p_c == 0 or p_not_c == 0:
        note = "not evaluable: conditioning event has probability zero"
        for i, rel in ((1, "=="), (2, "=="), (3, ">"), (4, ">")):
            clauses.append(skipped_clause(f"{prefix}-{i}", rel, note=note))
        return tuple(clauses)

    def corr(given: Event) -> Fraction:
        p_g = prob(space, given)
        return (
            prob(space, (a & b) & given) / p_g
            - (prob(space, a & given) / p_g) * (prob(space, b & given) / p_g)
        )

    clauses.append(clause(f"{prefix}-1", corr(c), "==", expected))
    clauses.append(clause(f"{prefix}-2", corr(not_c), "==", expected))
    clauses.append(
        clause(f"{prefix}-3", cond_prob(space, a, c) - cond_prob(space, a, not_c), ">", ZERO)
    )
    clauses.append(
        clause(f"{prefix}-4", cond_prob(space, b, c) - cond_prob(space, b, not_c), ">", ZERO)
    )
    return tuple(clauses)


def _require_distinct(a: Event, b: Event, c: Event) -> None:
    # "distinct" means distinct atom sets, not merely distinct names
    if a.members == b.members or a.members == c.members or b.members == c.members:
        raise IndistinctEvents("the three events must have pairwise distinct atom sets")


def check_conjunctive_common_cause(
    space: ProbabilitySpace, a: Event, b: Event, c: Event
) -> ConditionReport:
    """Is ``c`` a conjunctive common cause for the correlation of ``a`` and ``b``?"""
    _require_distinct(a, b, c)
    return ConditionReport(
        Model.CONJUNCTIVE_FORK, _fork_clauses(space, a, b, c, ZERO, "c-fork")
    )


def check_generalised_common_cause(
    space: ProbabilitySpace, a: Event, b: Event, c: Event, expected: Fraction
) -> ConditionReport:
    """Is ``c`` a generalised common cause for the deviation of ``a`` and ``b``?"""
    _require_distinct(a, b, c)
    return ConditionReport(
        Model.GENERALISED_CC,
        _fork_clauses(space, a, b, c, Fraction(expected), "gc-fork"),
    )


def _cell_stats(
    space: ProbabilitySpace, a: Event, b: Event, partition: Partition
) -> list[tuple[Fraction, Fraction, Fraction, Fraction]]:
    """Per block: (p(C_i), p(A|C_i), p(B|C_i), Corr_{C_i}(A,B))."""
    stats = []
    for block in partition.blocks:
        p_i = prob(space, block)
        a_i = prob(space, a & block) / p_i
        b_i = prob(space, b & block) / p_i
        d_i = prob(space, (a & b) & block) / p_i
        stats.append((p_i, a_i, b_i, d_i - a_i * b_i))
    return stats


def _partition_clauses(
    space: ProbabilitySpace,
    a: Event,
    b: Event,
    partition: Partition,
    expected: Fraction,
    prefix: str,
    pairwise: bool,
) -> tuple[Clause, ...]:
    if len(partition.blocks) < 2:
        raise InvalidPartition("a common cause system needs at least two cells")
    if partition.space != space:
        raise InvalidPartition("partition does not belong to this space")
    stats = _cell_stats(space, a, b, partition)
    clauses = []
    for i, (p_i, _, _, _) in enumerate(stats, start=1):
        clauses.append(clause(f"{prefix}-0", p_i, "!=", ZERO, subject=f"C_{i}"))
    for i, (_, _, _, corr_i) in enumerate(stats, start=1):
        clauses.append(clause(f"{prefix}-1", corr_i, "==", expected, subject=f"C_{i}"))
    if pairwise:
        for i in range(len(stats)):
            for j in range(i + 1, len(stats)):
                product = (stats[i][1] - stats[j][1]) * (stats[i][2] - stats[j][2])
                clauses.append(
                    clause(f"{prefix}-2", product, ">", ZERO, subject=f"C_{i + 1},C_{j + 1}")
                )
    else:
        p_a = prob(space, a)
        p_b = prob(space, b)
        for i, (_, a_i, b_i, _) in enumerate(stats, start=1):
            product = (a_i - p_a) * (b_i - p_b)
            clauses.append(clause(f"{prefix}-2", product, ">", ZERO, subject=f"C_{i}"))
    return tuple(clauses)


def check_hr_rccs(
    space: ProbabilitySpace, a: Event, b: Event, partition: Partition
) -> ConditionReport:
    """Hofer-Szabo/Redei-style system: screening to zero, pairwise ordering."""
    return ConditionReport(
        Model.HR_RCCS,
        _partition_clauses(space, a, b, partition, ZERO, "rccs", pairwise=True),
    )


def check_ghr_rccs(
    space: ProbabilitySpace, a: Event, b: Event, partition: Partition, expected: Fraction
) -> ConditionReport:
    """Generalised HR system: every cell restores the expected correlation."""
    return ConditionReport(
        Model.GHR_RCCS,
        _partition_clauses(space, a, b, partition, Fraction(expected), "grccs", pairwise=True),
    )


def check_m_rccs(
    space: ProbabilitySpace, a: Event, b: Event, partition: Partition
) -> ConditionReport:
    """Marginal-comparison system: each cell moves both effects off their marginals."""
    return ConditionReport(
        Model.M_RCCS,
        _partition_clauses(space, a, b, partition, ZERO, "mccs", pairwise=False),
    )


def check_gm_rccs(
    space: ProbabilitySpace, a: Event, b: Event, partition: Partition, expected: Fraction
) -> ConditionReport:
    """Generalised marginal-comparison system."""
    return ConditionReport(
        Model.GM_RCCS,
        _partition_clauses(space, a, b, partition, Fraction(expected), "gmccs", pairwise=False),
    )


def decompose_correlation(
    space: ProbabilitySpace, a: Event, b: Event, partition: Partition
) -> tuple[Fraction, Fraction]:
    """Split Corr(A,B) over any partition into its pairwise-difference part and
    its residual part.

    Returns ``(pair_sum, residual)`` with

        pair_sum = 1/2 * sum_{i,j} p(C_i) p(C_j) [p(A|C_i)-p(A|C_j)] [p(B|C_i)-p(B|C_j)]
        residual = sum_i p(C_i) Corr_{C_i}(A,B)

    and ``pair_sum + residual == correlation(space, a, b)`` exactly, with no
    screening assumption whatsoever.
    """
    stats = _cell_stats(space, a, b, partition)
    pair_sum = ZERO
    for i in range(len(stats)):
        p_i, a_i, b_i, _ = stats[i]
        for j in range(i + 1, len(stats)):
            p_j, a_j, b_j, _ = stats[j]
            pair_sum += p_i * p_j * (a_i - a_j) * (b_i - b_j)
    residual = ZERO
    for p_i, _, _, corr_i in stats:
        residual += p_i * corr_i
    return pair_sum, residual


def _require_screening(
    stats: list[tuple[Fraction, Fraction, Fraction, Fraction]], expected: Fraction
) -> None:
    for i, (_, _, _, corr_i) in enumerate(stats, start=1):
        if corr_i != expected:
            raise ScreeningHypothesisViolated(
                f"cell C_{i} has conditional correlation {corr_i}, expected {expected}"
            )


def hr_deviation_formula(
    space: ProbabilitySpace, a: Event, b: Event, partition: Partition, expected: Fraction
) -> Fraction:
    """The pairwise-difference value of the deviation, valid once every cell
    screens off at ``expected``; equals ``deviation(space, a, b, expected)``."""
    expected = Fraction(expected)
    stats = _cell_stats(space, a, b, partition)
    _require_screening(stats, expected)
    pair_sum = ZERO
    for i in range(len(stats)):
        p_i, a_i, b_i, _ = stats[i]
        for j in range(i + 1, len(stats)):
            p_j, a_j, b_j, _ = stats[j]
            pair_sum += p_i * p_j * (a_i - a_j) * (b_i - b_j)
    return pair_sum


def m_deviation_formula(
    space: ProbabilitySpace, a: Event, b: Event, partition: Partition, expected: Fraction
) -> Fraction:
    """Marginal-comparison form of the deviation under the same hypothesis:
    sum_i p(C_i) [p(A|C_i)-p(A)] [p(B|C_i)-p(B)]."""
    expected = Fraction(expected)
    stats = _cell_stats(space, a, b, partition)
    _require_screening(stats, expected)
    p_a = prob(space, a)
    p_b = prob(space, b)
    total = ZERO
    for p_i, a_i, b_i, _ in stats:
        total += p_i * (a_i - p_a) * (b_i - p_b)
    return total
