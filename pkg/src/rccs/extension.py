"""Measure-preserving extensions hosting a common cause system.

The construction refines every atom of the source space into ``n`` sub-atoms,
one per cause-cell, in proportions (the split ratios) read off an
extension-grade admissible set.  The refinement map induces an injective,
complement- and measure-preserving event homomorphism, and the union of all
index-``i`` sub-atoms is the cell ``C_i`` of the requested system.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .admissible import (
    AdmissibleSet,
    construct_hr_admissible,
    construct_m_admissible,
    profile_for,
)
from .errors import DegenerateCell, ForeignEvent, InfeasibleProfile, NegativeRatio
from .rational import ONE, ZERO
from .report import Clause, ConditionReport, Model, clause
from .space import Event, Partition, ProbabilitySpace, correlation, prob


class SystemModel(str, Enum):
    GHR = "ghr"
    GM = "gm"


@dataclass(frozen=True)
class SplitRatios:
    """``rows[i][k]``: the share of Boolean cell ``k`` (0: A&B, 1: A&~B,
    2: ~A&B, 3: ~A&~B) assigned to cause-cell ``i``.

    Construction checks signs only; column stochasticity holds exactly when
    the admissible set reproduces the pair's deviation, and is the caller's
    (and the test suite's) concern.
    """

    rows: tuple[tuple[Fraction, Fraction, Fraction, Fraction], ...]

    def column_sums(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return tuple(sum((row[k] for row in self.rows), ZERO) for k in range(4))  # type: ignore[return-value]

    def is_stochastic(self) -> bool:
        return all(total == ONE for total in self.column_sums()) and all(
            0 <= r <= 1 for row in self.rows for r in row
        )


def split_ratios(adm: AdmissibleSet, cell_probs: tuple[Fraction, Fraction, Fraction, Fraction]) -> SplitRatios:
    """The per-cell split proportions:

        r_i^1 = c_i d_i / p(A&B)            r_i^2 = c_i (a_i - d_i) / p(A&~B)
        r_i^3 = c_i (b_i - d_i) / p(~A&B)   r_i^4 = c_i (1 - a_i - b_i + d_i) / p(~A&~B)

    Raises ``DegenerateCell`` on a zero cell and ``NegativeRatio`` when the
    set prescribes a negative cell mass (it then fits no real partition).
    """
    cell_probs = tuple(Fraction(q) for q in cell_probs)
    for k, q in enumerate(cell_probs, start=1):
        if q <= 0:
            raise DegenerateCell(f"Boolean cell {k} has probability {q}")
    rows = []
    for i, e in enumerate(adm.entries, start=1):
        numerators = (
            e.c * e.d,
            e.c * (e.a - e.d),
            e.c * (e.b - e.d),
            e.c * (1 - e.a - e.b + e.d),
        )
        for k, numerator in enumerate(numerators, start=1):
            if numerator < 0:
                raise NegativeRatio(
                    f"entry {i} prescribes negative mass for Boolean cell {k}"
                )
        rows.append(tuple(num / q for num, q in zip(numerators, cell_probs)))
    return SplitRatios(tuple(rows))


@dataclass(frozen=True)
class ExtensionResult:
    source: ProbabilitySpace
    target: ProbabilitySpace
    atom_map: tuple[tuple[str, tuple[str, ...]], ...]  # source label -> kept target labels
    rccs: Partition
    model: SystemModel
    expected: Fraction
    admissible: AdmissibleSet
    warnings: tuple[str, ...] = ()
    _map: dict[str, tuple[str, ...]] = field(
        init=False, repr=False, compare=False, hash=False, default_factory=dict
    )

    def __post_init__(self) -> None:
        object.__setattr__(self, "_map", dict(self.atom_map))

    def refinement(self, label: str) -> tuple[str, ...]:
        return self._map[label]


def _boolean_cell(in_a: bool, in_b: bool) -> int:
    if in_a and in_b:
        return 0
    if in_a:
        return 1
    if in_b:
        return 2
    return 3


def extend_with_rccs(
    space: ProbabilitySpace,
    a: Event,
    b: Event,
    expected: Fraction,
    n: int,
    model: SystemModel | str,
) -> ExtensionResult:
    """Build an extension of ``space`` whose refinement of the pair hosts a
    size-``n`` system of the requested model restoring ``expected`` on every
    cell.  The deviation of the pair must be positive and all four Boolean
    cells must carry positive probability."""
    model = SystemModel(model)
    expected = Fraction(expected)
    delta = correlation(space, a, b) - expected
    if delta <= 0:
        raise InfeasibleProfile(
            f"deviation {delta} is not positive: there is nothing for a common cause system to explain"
        )
    profile = profile_for(space, a, b, expected, n)

    cell_events = (a & b, a & ~b, ~a & b, ~a & ~b)
    cell_probs = tuple(prob(space, e) for e in cell_events)
    for k, q in enumerate(cell_probs, start=1):
        if q == 0:
            raise DegenerateCell(f"Boolean cell {k} of the pair has probability zero")

    adm = construct_hr_admissible(profile) if model is SystemModel.GHR else construct_m_admissible(profile)
    ratios = split_ratios(adm, cell_probs)
    if not ratios.is_stochastic():  # pragma: no cover - generator contract
        raise NegativeRatio("generator produced a non-stochastic split; this is a bug")

    warnings: list[str] = []
    atoms: list[tuple[str, Fraction]] = []
    atom_map: list[tuple[str, tuple[str, ...]]] = []
    blocks: dict[int, set[str]] = {i: set() for i in range(n)}
    for label, weight in space.atoms:
        k = _boolean_cell(label in a.members, label in b.members)
        kept: list[str] = []
        for i in range(n):
            sub_weight = weight * ratios.rows[i][k]
            sub_label = f"{label}#{i + 1}"
            if sub_weight == 0:
                warnings.append(f"dropped zero-weight sub-atom {sub_label}")
                continue
            atoms.append((sub_label, sub_weight))
            blocks[i].add(sub_label)
            kept.append(sub_label)
        atom_map.append((label, tuple(kept)))

    target = ProbabilitySpace(tuple(atoms))
    partition = Partition(target, tuple(Event(target, frozenset(blocks[i])) for i in range(n)))
    return ExtensionResult(
        source=space,
        target=target,
        atom_map=tuple(atom_map),
        rccs=partition,
        model=model,
        expected=expected,
        admissible=adm,
        warnings=tuple(warnings),
    )


def induced_event(result: ExtensionResult, event: Event) -> Event:
    """The image of a source event under the refinement homomorphism."""
    if event.space != result.source:
        raise ForeignEvent("event does not belong to the source space")
    members: set[str] = set()
    for label in event.members:
        members.update(result.refinement(label))
    return Event(result.target, frozenset(members))


_MEASURE_ENUMERATION_LIMIT = 12
_MEASURE_SAMPLE = 1000
_LATTICE_SAMPLE = 24


def verify_extension(source: ProbabilitySpace, result: ExtensionResult) -> ConditionReport:
    """Check extension-hood extensionally: per-atom weight preservation,
    injectivity, meet/join/complement preservation on all atoms plus a seeded
    event sample, and exact measure preservation on every source event (all
    of them up to 12 atoms, a seeded sample of 1000 beyond)."""
    clauses: list[Clause] = []

    for label, weight in source.atoms:
        refined = sum((result.target.weight(t) for t in result.refinement(label)), ZERO)
        clauses.append(
            clause("ext-atom-weight", refined, "==", weight, subject=label)
        )

    images = [frozenset(result.refinement(label)) for label, _ in source.atoms]
    nonempty = all(images)
    disjoint = True
    seen: set[str] = set()
    for image in images:
        if seen & image:
            disjoint = False
        seen |= image
    clauses.append(
        Clause(
            "ext-injective",
            nonempty and disjoint,
            None,
            "atom images nonempty and disjoint",
            None,
        )
    )

    rng = random.Random(0)
    labels = source.labels
    sample: list[Event] = [source.omega(), source.empty()]
    sample += [source.atom_event(label) for label in labels]
    for _ in range(_LATTICE_SAMPLE):
        members = frozenset(l for l in labels if rng.random() < 0.5)
        sample.append(Event(source, members))

    def h(e: Event) -> Event:
        return induced_event(result, e)

    meet_ok = join_ok = True
    for i in range(len(sample)):
        for j in range(i + 1, len(sample)):
            e, f = sample[i], sample[j]
            if h(e & f) != (h(e) & h(f)):
                meet_ok = False
            if h(e | f) != (h(e) | h(f)):
                join_ok = False
    complement_ok = all(h(~e) == ~h(e) for e in sample)
    clauses.append(Clause("ext-meet", meet_ok, None, "h(E&F) == h(E)&h(F)", None))
    clauses.append(Clause("ext-join", join_ok, None, "h(E|F) == h(E)|h(F)", None))
    clauses.append(Clause("ext-complement", complement_ok, None, "h(~E) == ~h(E)", None))

    if len(labels) <= _MEASURE_ENUMERATION_LIMIT:
        events = _all_events(source)
    else:
        events = [
            Event(source, frozenset(l for l in labels if rng.random() < 0.5))
            for _ in range(_MEASURE_SAMPLE)
        ]
    failures = []
    for event in events:
        lhs = prob(result.target, h(event))
        rhs = prob(source, event)
        if lhs != rhs:
            failures.append(
                clause("ext-measure", lhs, "==", rhs,
                       subject="{" + ",".join(sorted(event.members)) + "}")
            )
    clauses.append(
        Clause("ext-measure", not failures, None,
               f"p'(h(E)) == p(E) on {len(events)} events", None)
    )
    clauses.extend(failures)
    return ConditionReport(Model.EXTENSION, tuple(clauses))


def _all_events(space: ProbabilitySpace) -> list[Event]:
    labels = space.labels
    events = []
    for mask in range(1 << len(labels)):
        members = frozenset(labels[i] for i in range(len(labels)) if mask >> i & 1)
        events.append(Event(space, members))
    return events
