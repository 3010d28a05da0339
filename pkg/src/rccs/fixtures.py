"""Shared worked examples used across the test suite and the CLI fixtures.

* ``u4``: the uniform four-atom space with the half-overlapping pair
  A = {w1,w2}, B = {w1,w3} (an independent pair).
* ``f8``: an eight-atom two-value fork: a cause C of probability 1/2 with
  p(A|C) = p(B|C) = 4/5, p(A|~C) = p(B|~C) = 1/5, and A, B conditionally
  independent either way.  Corr(A,B) = 9/100.
* ``s4``: the four-cell collapse of ``f8``: one atom per Boolean cell of
  (A,B), weights 17/50, 8/50, 8/50, 17/50.  Same marginals and correlation.
"""

from __future__ import annotations

from fractions import Fraction

from .space import Event, ProbabilitySpace

Fixture = tuple[ProbabilitySpace, dict[str, Event]]


def u4() -> Fixture:
    space = ProbabilitySpace(
        tuple((f"w{i}", Fraction(1, 4)) for i in range(1, 5))
    )
    events = {
        "A": space.event({"w1", "w2"}),
        "B": space.event({"w1", "w3"}),
    }
    return space, events


def f8() -> Fixture:
    w = Fraction
    space = ProbabilitySpace(
        (
            ("c_ab", w(8, 25)),
            ("c_an", w(2, 25)),
            ("c_nb", w(2, 25)),
            ("c_nn", w(1, 50)),
            ("n_ab", w(1, 50)),
            ("n_an", w(2, 25)),
            ("n_nb", w(2, 25)),
            ("n_nn", w(8, 25)),
        )
    )
    events = {
        "A": space.event({"c_ab", "c_an", "n_ab", "n_an"}),
        "B": space.event({"c_ab", "c_nb", "n_ab", "n_nb"}),
        "C": space.event({"c_ab", "c_an", "c_nb", "c_nn"}),
        "NC": space.event({"n_ab", "n_an", "n_nb", "n_nn"}),
    }
    return space, events


def s4() -> Fixture:
    w = Fraction
    space = ProbabilitySpace(
        (
            ("ab", w(17, 50)),
            ("an", w(4, 25)),
            ("nb", w(4, 25)),
            ("nn", w(17, 50)),
        )
    )
    events = {
        "A": space.event({"ab", "an"}),
        "B": space.event({"ab", "nb"}),
    }
    return space, events
