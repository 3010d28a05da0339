"""Core measure operations against independently recomputed values."""

import random
from fractions import Fraction as F

import pytest

from rccs import (
    Event,
    ForeignEvent,
    InvalidEvent,
    InvalidPartition,
    InvalidSpace,
    Partition,
    ProbabilitySpace,
    ZeroConditioningEvent,
    cond_correlation,
    cond_prob,
    correlation,
    deviation,
    prob,
)
from rccs.fixtures import f8, s4, u4

from conftest import as_weights, oracle_corr, oracle_prob, rand_event, rand_space


def test_space_invariants_enforced():
    with pytest.raises(InvalidSpace):
        ProbabilitySpace((("w1", F(1, 2)), ("w2", F(1, 3))))  # sum != 1
    with pytest.raises(InvalidSpace):
        ProbabilitySpace((("w1", F(1)), ("w1", F(0))))  # duplicate + zero
    with pytest.raises(InvalidSpace):
        ProbabilitySpace((("w1", F(3, 2)), ("w2", F(-1, 2))))  # negative weight
    with pytest.raises(InvalidSpace):
        ProbabilitySpace(())


def test_event_membership_validated():
    space, _ = u4()
    with pytest.raises(InvalidEvent):
        Event(space, frozenset({"nope"}))


def test_prob_examples():
    space, events = u4()
    assert prob(space, events["A"]) == F(1, 2)
    assert prob(space, space.empty()) == 0
    f8_space, f8_events = f8()
    # independently: 8/25 + 2/25 + 2/25 + 1/50
    assert oracle_prob(as_weights(f8_space), f8_events["C"].members) == F(1, 2)
    assert prob(f8_space, f8_events["C"]) == F(1, 2)


def test_prob_rejects_foreign_event():
    space, events = u4()
    other = ProbabilitySpace((("w1", F(1, 2)), ("w2", F(1, 2))))
    with pytest.raises(ForeignEvent):
        prob(other, events["A"])


def test_cond_prob_examples():
    space, events = u4()
    assert cond_prob(space, events["A"], space.omega()) == F(1, 2)
    c = space.event({"w1", "w2", "w3"})
    assert cond_prob(space, events["A"], c) == F(2, 3)
    with pytest.raises(ZeroConditioningEvent):
        cond_prob(space, events["A"], space.empty())


def test_cond_correlation_examples():
    space, events = u4()
    a, b = events["A"], events["B"]
    assert cond_correlation(space, a, b, space.omega()) == 0
    c = space.event({"w1", "w2", "w3"})
    assert cond_correlation(space, a, b, c) == F(-1, 9)  # 1/3 - (2/3)(2/3)
    f8_space, f8_events = f8()
    assert cond_correlation(f8_space, f8_events["A"], f8_events["B"], f8_events["C"]) == 0


def test_correlation_examples():
    space, events = u4()
    assert correlation(space, events["A"], events["B"]) == 0
    f8_space, f8_events = f8()
    assert correlation(f8_space, f8_events["A"], f8_events["B"]) == F(9, 100)
    s4_space, s4_events = s4()
    assert correlation(s4_space, s4_events["A"], s4_events["B"]) == F(9, 100)


def test_self_correlation_identity(rng):
    for _ in range(25):
        space = rand_space(rng, rng.randrange(2, 7))
        a = rand_event(rng, space)
        p = prob(space, a)
        assert correlation(space, a, a) == p * (1 - p)


def test_deviation_examples():
    f8_space, f8_events = f8()
    a, b = f8_events["A"], f8_events["B"]
    assert deviation(f8_space, a, b, F(0)) == F(9, 100)
    assert deviation(f8_space, a, b, F(9, 100)) == 0
    space, events = u4()
    assert deviation(space, events["A"], events["B"], F(-1, 10)) == F(1, 10)


def test_finite_additivity(rng):
    for _ in range(50):
        space = rand_space(rng, rng.randrange(2, 8))
        e = rand_event(rng, space)
        remaining = (~e).members
        f = Event(space, frozenset(l for l in remaining if rng.random() < 0.5))
        assert prob(space, e | f) == prob(space, e) + prob(space, f)


def test_correlation_symmetry_and_bounds(rng):
    quarter = F(1, 4)
    for _ in range(60):
        space = rand_space(rng, rng.randrange(2, 8))
        a = rand_event(rng, space)
        b = rand_event(rng, space)
        c = correlation(space, a, b)
        assert c == correlation(space, b, a)
        assert -quarter <= c <= quarter
        assert correlation(space, a, space.omega()) == 0
        assert correlation(space, a, space.empty()) == 0
        assert cond_prob(space, a, space.omega()) == prob(space, a)


def test_results_independent_of_atom_order(rng):
    for _ in range(20):
        space = rand_space(rng, 5)
        shuffled_atoms = list(space.atoms)
        rng.shuffle(shuffled_atoms)
        reordered = ProbabilitySpace(tuple(shuffled_atoms))
        a_members = rand_event(rng, space).members
        b_members = rand_event(rng, space).members
        original = correlation(space, Event(space, a_members), Event(space, b_members))
        moved = correlation(reordered, Event(reordered, a_members), Event(reordered, b_members))
        assert original == moved


def test_partition_rules():
    space, events = u4()
    with pytest.raises(InvalidPartition):
        Partition(space, (space.omega(),))  # single block rejected
    with pytest.raises(InvalidPartition):
        Partition(space, (events["A"], events["A"]))  # overlap
    with pytest.raises(InvalidPartition):
        Partition(space, (events["A"], space.event({"w3"})))  # not exhaustive
    with pytest.raises(InvalidPartition):
        Partition(space, (space.omega(), space.empty()))  # empty block
    two = Partition.from_event(events["A"])
    assert len(two) == 2 and two.blocks[1].members == {"w3", "w4"}


def test_random_measures_agree_with_oracle(rng):
    for _ in range(40):
        space = rand_space(rng, rng.randrange(3, 8))
        weights = as_weights(space)
        a = rand_event(rng, space)
        b = rand_event(rng, space)
        assert prob(space, a) == oracle_prob(weights, a.members)
        assert correlation(space, a, b) == oracle_corr(weights, a.members, b.members)
