"""The JSON space file format.

A space file is a JSON document

    {"atoms": [{"label": "w1", "weight": "17/50"}, ...],
     "events": {"A": ["w1", ...], ...}}

with every weight a ``num/den`` string in lowest terms.  The parser rejects
non-reduced fractions, non-positive weights and weight sums different from 1,
always naming the violated invariant.  Extension results reuse the same
format plus a ``map`` section (the atom refinement) and an ``rccs`` section
naming the cell events in order.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .errors import InvalidEvent, SpaceFormatError
from .extension import ExtensionResult
from .rational import format_ratio, parse_ratio
from .space import Event, ProbabilitySpace


def parse_space(document: dict) -> tuple[ProbabilitySpace, dict[str, Event]]:
    if not isinstance(document, dict):
        raise SpaceFormatError("document must be a JSON object")
    atoms_raw = document.get("atoms")
    if not isinstance(atoms_raw, list) or not atoms_raw:
        raise SpaceFormatError("atoms must be a nonempty list")
    atoms: list[tuple[str, Fraction]] = []
    seen: set[str] = set()
    total = Fraction(0)
    for entry in atoms_raw:
        if not isinstance(entry, dict) or "label" not in entry or "weight" not in entry:
            raise SpaceFormatError("each atom needs a label and a weight")
        label = entry["label"]
        if not isinstance(label, str) or not label:
            raise SpaceFormatError("atom labels must be nonempty strings")
        if label in seen:
            raise SpaceFormatError("atom labels must be unique", label)
        seen.add(label)
        try:
            weight = parse_ratio(entry["weight"])
        except ValueError as exc:
            raise SpaceFormatError(
                "weights must be num/den strings in lowest terms",
                f"atom {label!r}: {exc}",
            ) from exc
        if weight <= 0:
            raise SpaceFormatError(
                "weights must be strictly positive", f"atom {label!r} has {entry['weight']}"
            )
        atoms.append((label, weight))
        total += weight
    if total != 1:
        raise SpaceFormatError("weights must sum to exactly 1", f"sum is {format_ratio(total)}")
    space = ProbabilitySpace(tuple(atoms))

    events: dict[str, Event] = {}
    events_raw = document.get("events", {})
    if not isinstance(events_raw, dict):
        raise SpaceFormatError("events must be an object mapping names to atom lists")
    for name, members in events_raw.items():
        if not isinstance(members, list):
            raise SpaceFormatError("event members must be a list of atom labels", name)
        try:
            events[name] = space.event(members)
        except InvalidEvent as exc:
            raise SpaceFormatError(
                "event members must be atoms of the space", f"event {name!r}: {exc}"
            ) from exc
    return space, events


def load_space(path: str | Path) -> tuple[ProbabilitySpace, dict[str, Event]]:
    try:
        document = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise SpaceFormatError("file must contain valid JSON", str(exc)) from exc
    return parse_space(document)


def space_to_dict(space: ProbabilitySpace, events: dict[str, Event]) -> dict:
    return {
        "atoms": [
            {"label": label, "weight": format_ratio(weight)} for label, weight in space.atoms
        ],
        "events": {name: sorted(event.members) for name, event in events.items()},
    }


def extension_to_dict(
    result: ExtensionResult, a_name: str = "A", b_name: str = "B", a_event=None, b_event=None
) -> dict:
    """Serialize an extension result as a standalone space file: the induced
    pair plus one named event per cell, the refinement map and the cell list."""
    from .extension import induced_event

    events: dict[str, Event] = {}
    if a_event is not None:
        events[a_name] = induced_event(result, a_event)
    if b_event is not None:
        events[b_name] = induced_event(result, b_event)
    cell_names = []
    for i, block in enumerate(result.rccs.blocks, start=1):
        name = f"C{i}"
        events[name] = block
        cell_names.append(name)
    document = space_to_dict(result.target, events)
    document["map"] = {label: list(targets) for label, targets in result.atom_map}
    document["rccs"] = cell_names
    document["model"] = result.model.value
    document["epsilon"] = format_ratio(result.expected)
    if result.warnings:
        document["warnings"] = list(result.warnings)
    return document


def dump_json(document: dict) -> str:
    return json.dumps(document, indent=2) + "\n"
