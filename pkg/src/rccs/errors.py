"""Semantic exception hierarchy shared across the package.

Public functions never raise bare ``ValueError``; every failure mode a caller
might want to branch on gets its own class here.  The CLI maps these onto
exit codes (see ``rccs.cli``).
"""


class RccsError(Exception):
    """Base class for all package-specific errors."""


class InvalidSpace(RccsError, ValueError):
    """A probability space violates a construction invariant."""


class InvalidEvent(RccsError, ValueError):
    """An event references atoms outside its space."""


class InvalidPartition(RccsError, ValueError):
    """A block list is not a partition of the space (or has fewer than 2 blocks)."""


class ForeignEvent(RccsError, ValueError):
    """An event (or partition) was used with a space it does not belong to."""


class ZeroConditioningEvent(RccsError, ZeroDivisionError):
    """Conditioning on an event of probability zero."""


class IndistinctEvents(RccsError, ValueError):
    """A common-cause check requires pairwise distinct events (distinct atom sets)."""


class ScreeningHypothesisViolated(RccsError):
    """A deviation formula was applied although some cell's conditional
    correlation differs from the stated expected correlation."""


class InvalidProfile(RccsError, ValueError):
    """A target profile violates its invariants (marginals outside (0,1),
    non-positive deviation, size below 2)."""


class TailOutOfRange(RccsError):
    """Completing an admissible set drove some value out of the open unit
    interval.  ``symbol`` names the offending quantity."""

    def __init__(self, symbol: str, value) -> None:
        self.symbol = symbol
        self.value = value
        super().__init__(f"{symbol} = {value} falls outside (0, 1)")


class InfeasibleProfile(RccsError):
    """No admissible numbers (hence no extension) can exist for the profile."""


class ConstructionFailed(RccsError):
    """The deterministic generator exhausted its adjustment budget."""


class DegenerateCell(RccsError):
    """Some Boolean cell of the event pair has probability zero, so the
    split-ratio construction cannot divide by it."""


class NegativeRatio(RccsError):
    """A split-ratio numerator is negative; the admissible set prescribes
    cell statistics no real partition can have."""


class SearchBudgetExceeded(RccsError):
    """The exhaustive search would examine more partitions than the budget allows."""


class SpaceFormatError(RccsError, ValueError):
    """A space file violates the documented format.  The message names the
    violated invariant."""

    def __init__(self, invariant: str, detail: str = "") -> None:
        self.invariant = invariant
        message = invariant if not detail else f"{invariant}: {detail}"
        super().__init__(message)
