"""Shared helpers: seeded random structures and the independent oracle.

The oracle functions work on raw ``{label: weight}`` dicts and never touch
the package's measure code, so every expected value they produce is an
independent brute-force recomputation.
"""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from rccs import Event, Partition, ProbabilitySpace


# ---------------------------------------------------------------------------
# independent brute-force oracle (raw dict arithmetic only)
# ---------------------------------------------------------------------------


def oracle_prob(weights: dict[str, Fraction], members) -> Fraction:
    return sum((weights[m] for m in members), Fraction(0))


def oracle_cond_prob(weights, members, given) -> Fraction:
    denom = oracle_prob(weights, given)
    return oracle_prob(weights, set(members) & set(given)) / denom


def oracle_cond_corr(weights, a, b, given) -> Fraction:
    a, b, given = set(a), set(b), set(given)
    denom = oracle_prob(weights, given)
    joint = oracle_prob(weights, a & b & given) / denom
    return joint - oracle_cond_prob(weights, a, given) * oracle_cond_prob(weights, b, given)


def oracle_corr(weights, a, b) -> Fraction:
    return oracle_cond_corr(weights, a, b, set(weights))


def as_weights(space: ProbabilitySpace) -> dict[str, Fraction]:
    return {label: weight for label, weight in space.atoms}


# ---------------------------------------------------------------------------
# seeded random structures
# ---------------------------------------------------------------------------


def rand_space(rng: random.Random, n_atoms: int) -> ProbabilitySpace:
    parts = [rng.randrange(1, 30) for _ in range(n_atoms)]
    total = sum(parts)
    return ProbabilitySpace(
        tuple((f"w{i + 1}", Fraction(p, total)) for i, p in enumerate(parts))
    )


def rand_event(rng: random.Random, space: ProbabilitySpace, nonempty: bool = False,
               proper: bool = False) -> Event:
    labels = space.labels
    while True:
        members = frozenset(l for l in labels if rng.random() < 0.5)
        if nonempty and not members:
            continue
        if proper and len(members) == len(labels):
            continue
        return Event(space, members)


def rand_partition(rng: random.Random, space: ProbabilitySpace, n_blocks: int) -> Partition:
    labels = list(space.labels)
    while True:
        assignment = [rng.randrange(n_blocks) for _ in labels]
        if len(set(assignment)) == n_blocks:
            break
    blocks = []
    for block_index in range(n_blocks):
        members = frozenset(l for l, g in zip(labels, assignment) if g == block_index)
        blocks.append(Event(space, members))
    return Partition(space, tuple(blocks))


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240811)
