"""Finite classical probability spaces with exact rational measure.

A space is an ordered list of labelled atoms with strictly positive weights
summing to one.  Events are atom subsets tied to their space; partitions are
ordered block lists.  All values are immutable and all operations pure, so
everything here is safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import (
    ForeignEvent,
    InvalidEvent,
    InvalidPartition,
    InvalidSpace,
    ZeroConditioningEvent,
)
from .rational import ONE, ZERO


@dataclass(frozen=True)
class ProbabilitySpace:
    """Ordered atoms ``(label, weight)`` with positive weights summing to 1."""

    atoms: tuple[tuple[str, Fraction], ...]
    _weights: dict[str, Fraction] = field(
        init=False, repr=False, compare=False, hash=False, default_factory=dict
    )

    def __post_init__(self) -> None:
        atoms = tuple((str(label), Fraction(weight)) for label, weight in self.atoms)
        object.__setattr__(self, "atoms", atoms)
        if not atoms:
            raise InvalidSpace("a probability space needs at least one atom")
        weights: dict[str, Fraction] = {}
        total = ZERO
        for label, weight in atoms:
            if label in weights:
                raise InvalidSpace(f"duplicate atom label {label!r}")
            if weight <= 0:
                raise InvalidSpace(f"atom {label!r} has non-positive weight {weight}")
            weights[label] = weight
            total += weight
        if total != ONE:
            raise InvalidSpace(f"atom weights sum to {total}, expected 1")
        object.__setattr__(self, "_weights", weights)

    @classmethod
    def from_weights(cls, weights: Mapping[str, Fraction] | Iterable[tuple[str, Fraction]]) -> "ProbabilitySpace":
        if isinstance(weights, Mapping):
            weights = weights.items()
        return cls(tuple(weights))

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(label for label, _ in self.atoms)

    def weight(self, label: str) -> Fraction:
        return self._weights[label]

    def event(self, members: Iterable[str]) -> "Event":
        return Event(self, frozenset(members))

    def atom_event(self, label: str) -> "Event":
        return Event(self, frozenset((label,)))

    def omega(self) -> "Event":
        return Event(self, frozenset(self._weights))

    def empty(self) -> "Event":
        return Event(self, frozenset())

    def __len__(self) -> int:
        return len(self.atoms)


@dataclass(frozen=True)
class Event:
    """A subset of a space's atoms."""

    space: ProbabilitySpace
    members: frozenset[str]

    def __post_init__(self) -> None:
        members = frozenset(self.members)
        object.__setattr__(self, "members", members)
        unknown = members - set(self.space.labels)
        if unknown:
            raise InvalidEvent(f"unknown atoms {sorted(unknown)!r} for this space")

    def _check_peer(self, other: "Event") -> None:
        if self.space != other.space:
            raise ForeignEvent("events belong to different spaces")

    def __and__(self, other: "Event") -> "Event":
        self._check_peer(other)
        return Event(self.space, self.members & other.members)

    def __or__(self, other: "Event") -> "Event":
        self._check_peer(other)
        return Event(self.space, self.members | other.members)

    def __invert__(self) -> "Event":
        return Event(self.space, frozenset(self.space.labels) - self.members)

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class Partition:
    """An ordered list of at least two disjoint, exhaustive, nonempty blocks."""

    space: ProbabilitySpace
    blocks: tuple[Event, ...]

    def __post_init__(self) -> None:
        blocks = tuple(self.blocks)
        object.__setattr__(self, "blocks", blocks)
        if len(blocks) < 2:
            raise InvalidPartition("a partition needs at least two blocks")
        seen: set[str] = set()
        for block in blocks:
            if block.space != self.space:
                raise ForeignEvent("partition block belongs to a different space")
            if not block.members:
                raise InvalidPartition("partition blocks must be nonempty")
            if seen & block.members:
                raise InvalidPartition("partition blocks must be pairwise disjoint")
            seen |= block.members
        if seen != set(self.space.labels):
            raise InvalidPartition("partition blocks must cover the whole space")

    def __len__(self) -> int:
        return len(self.blocks)

    @classmethod
    def from_event(cls, event: Event) -> "Partition":
        """The two-block partition ``{E, complement(E)}``."""
        return cls(event.space, (event, ~event))


def _owned(space: ProbabilitySpace, event: Event) -> Event:
    if event.space != space:
        raise ForeignEvent("event does not belong to this space")
    return event


def prob(space: ProbabilitySpace, event: Event) -> Fraction:
    """Measure of ``event``: the exact sum of its atom weights."""
    _owned(space, event)
    total = ZERO
    for label in event.members:
        total += space.weight(label)
    return total


def cond_prob(space: ProbabilitySpace, event: Event, given: Event) -> Fraction:
    """p(event | given); raises ``ZeroConditioningEvent`` when p(given) = 0."""
    _owned(space, event)
    _owned(space, given)
    denominator = prob(space, given)
    if denominator == 0:
        raise ZeroConditioningEvent("cannot condition on an event of probability zero")
    return prob(space, event & given) / denominator


def cond_correlation(space: ProbabilitySpace, a: Event, b: Event, given: Event) -> Fraction:
    """p(A&B|C) - p(A|C) p(B|C), exact; symmetric in A and B."""
    _owned(space, a)
    _owned(space, b)
    denominator = prob(space, _owned(space, given))
    if denominator == 0:
        raise ZeroConditioningEvent("cannot condition on an event of probability zero")
    p_a = prob(space, a & given)
    p_b = prob(space, b & given)
    p_ab = prob(space, (a & b) & given)
    return p_ab / denominator - (p_a / denominator) * (p_b / denominator)


def correlation(space: ProbabilitySpace, a: Event, b: Event) -> Fraction:
    """Unconditional correlation: the conditional one given the sure event."""
    return cond_correlation(space, a, b, space.omega())


def deviation(space: ProbabilitySpace, a: Event, b: Event, expected: Fraction) -> Fraction:
    """Actual correlation minus the externally supplied expected correlation."""
    return correlation(space, a, b) - Fraction(expected)
