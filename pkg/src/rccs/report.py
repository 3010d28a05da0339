"""Clause-level condition reports.

A report lists every defining clause of the checked condition with its exact
left/right values, so a failing check tells the user exactly which equation
broke and by how much.  The verdict is derived, never stored, which keeps the
"verdict iff all clauses pass" invariant true by construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .rational import format_ratio


class Model(str, Enum):
    CONJUNCTIVE_FORK = "conjunctive-fork"
    GENERALISED_CC = "generalised-cc"
    HR_RCCS = "hr-rccs"
    GHR_RCCS = "ghr-rccs"
    M_RCCS = "m-rccs"
    GM_RCCS = "gm-rccs"
    QUASI_ADMISSIBLE = "quasi-admissible"
    HR_ADMISSIBLE = "hr-admissible"
    M_ADMISSIBLE = "m-admissible"
    EXTENSION = "extension"


@dataclass(frozen=True)
class Clause:
    """One instantiated defining equation: ``lhs relation rhs``."""

    cid: str
    passed: bool
    lhs: Fraction | None
    relation: str
    rhs: Fraction | None
    subject: str = ""
    note: str = ""

    def to_dict(self) -> dict:
        out: dict = {
            "id": self.cid,
            "pass": self.passed,
            "lhs": None if self.lhs is None else format_ratio(self.lhs),
            "rel": self.relation,
            "rhs": None if self.rhs is None else format_ratio(self.rhs),
        }
        if self.subject:
            out["subject"] = self.subject
        if self.note:
            out["note"] = self.note
        return out


def clause(cid: str, lhs: Fraction, relation: str, rhs: Fraction, subject: str = "") -> Clause:
    """Evaluate ``lhs relation rhs`` exactly and record the outcome."""
    if relation == "==":
        ok = lhs == rhs
    elif relation == "!=":
        ok = lhs != rhs
    elif relation == ">":
        ok = lhs > rhs
    else:
        raise ValueError(f"unknown relation {relation!r}")
    return Clause(cid, ok, lhs, relation, rhs, subject)


def skipped_clause(cid: str, relation: str, subject: str = "", note: str = "") -> Clause:
    """A clause that could not be evaluated (counts as failed)."""
    return Clause(cid, False, None, relation, None, subject, note)


@dataclass(frozen=True)
class ConditionReport:
    model: Model
    clauses: tuple[Clause, ...]

    @property
    def verdict(self) -> bool:
        return all(c.passed for c in self.clauses)

    def failed(self) -> tuple[Clause, ...]:
        return tuple(c for c in self.clauses if not c.passed)

    def clause_values(self) -> tuple[tuple[Fraction | None, Fraction | None], ...]:
        """The (lhs, rhs) pairs in clause order; used by reduction tests."""
        return tuple((c.lhs, c.rhs) for c in self.clauses)

    def to_dict(self) -> dict:
        return {
            "model": self.model.value,
            "verdict": self.verdict,
            "clauses": [c.to_dict() for c in self.clauses],
        }
