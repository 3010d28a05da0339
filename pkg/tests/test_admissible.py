"""Admissible sets: checkers, tail completion, generators, certificates."""

from fractions import Fraction as F

import pytest

from rccs import (
    AdmissibleSet,
    ConstructionFailed,
    DominationWitness,
    InfeasibleProfile,
    InvalidProfile,
    Quadruple,
    TailOutOfRange,
    TargetProfile,
    complete_tail,
    construct_hr_admissible,
    construct_m_admissible,
    existence_condition,
    is_hr_admissible,
    is_m_admissible,
    is_quasi_admissible,
    mean_outside_support,
    realized_deviation,
    split_entry,
    witness_refutes,
)
from rccs.admissible import interior_cell_conditionals


def fork_set() -> AdmissibleSet:
    return AdmissibleSet(
        (
            Quadruple(F(1, 5), F(1, 5), F(1, 2), F(1, 25)),
            Quadruple(F(4, 5), F(4, 5), F(1, 2), F(16, 25)),
        )
    )


def fork_profile(delta=F(9, 100), n=2) -> TargetProfile:
    return TargetProfile(F(1, 2), F(1, 2), F(0), delta, n)


def test_admissible_set_construction_rules():
    with pytest.raises(InvalidProfile):
        AdmissibleSet((Quadruple(F(1, 2), F(1, 2), F(1), F(1, 4)),))  # n < 2
    with pytest.raises(InvalidProfile):
        AdmissibleSet(
            (
                Quadruple(F(1, 5), F(1, 5), F(0), F(1, 25)),  # c = 0
                Quadruple(F(4, 5), F(4, 5), F(1), F(16, 25)),
            )
        )
    with pytest.raises(InvalidProfile):
        AdmissibleSet(
            (
                Quadruple(F(1, 5), F(1, 5), F(1, 3), F(1, 25)),
                Quadruple(F(4, 5), F(4, 5), F(1, 3), F(16, 25)),  # mass 2/3
            )
        )


def test_profile_invariants():
    with pytest.raises(InvalidProfile):
        TargetProfile(F(0), F(1, 2), F(0), F(1, 100), 2)
    with pytest.raises(InvalidProfile):
        TargetProfile(F(1, 2), F(1, 2), F(0), F(0), 2)
    with pytest.raises(InvalidProfile):
        TargetProfile(F(1, 2), F(1, 2), F(0), F(1, 100), 1)


def test_quasi_admissible_fork_set():
    report = is_quasi_admissible(fork_set(), fork_profile())
    assert report.verdict
    mismatched = is_quasi_admissible(
        fork_set(), TargetProfile(F(1, 2), F(1, 2), F(1, 50), F(9, 100), 2)
    )
    assert not mismatched.verdict
    assert all(cl.cid == "adm-di" for cl in mismatched.failed())


def test_hr_admissible_examples():
    assert is_hr_admissible(fork_set(), fork_profile()).verdict
    duplicated = AdmissibleSet(
        (
            Quadruple(F(1, 5), F(1, 5), F(1, 4), F(1, 25)),
            Quadruple(F(1, 5), F(1, 5), F(1, 4), F(1, 25)),
            Quadruple(F(4, 5), F(4, 5), F(1, 2), F(16, 25)),
        )
    )
    report = is_hr_admissible(duplicated, fork_profile())
    assert not report.verdict
    assert any(cl.cid == "grccs-admissible" and cl.lhs == 0 for cl in report.failed())


def test_m_admissible_examples():
    assert is_m_admissible(fork_set(), fork_profile()).verdict
    pinned = AdmissibleSet(
        (
            Quadruple(F(1, 2), F(1, 5), F(1, 2), F(1, 10)),
            Quadruple(F(1, 2), F(4, 5), F(1, 2), F(2, 5)),
        )
    )
    report = is_m_admissible(pinned, TargetProfile(F(1, 2), F(1, 2), F(0), F(1, 100), 2))
    assert not report.verdict
    assert any(cl.cid == "gmccs-admissible" and cl.lhs == 0 for cl in report.failed())


def test_hr_and_m_imply_quasi():
    profile = fork_profile()
    for checker in (is_hr_admissible, is_m_admissible):
        assert checker(fork_set(), profile).verdict
    assert is_quasi_admissible(fork_set(), profile).verdict


def test_complete_tail_reproduces_fork_set():
    completed = complete_tail([(F(1, 5), F(1, 5), F(1, 2))], fork_profile())
    assert completed == fork_set()


def test_complete_tail_out_of_range():
    profile = fork_profile()
    with pytest.raises(TailOutOfRange) as err:
        complete_tail([(F(1, 10), F(1, 10), F(3, 4))], profile)
    assert err.value.symbol == "a_2"  # (1/2 - 3/40)/(1/4) = 17/10


def test_complete_tail_degenerate_equal_profile():
    profile = fork_profile()
    completed = complete_tail([(F(1, 2), F(1, 2), F(1, 3))], profile)
    assert completed.entries[1] == Quadruple(F(1, 2), F(1, 2), F(2, 3), F(1, 4))
    assert is_quasi_admissible(completed, profile).verdict
    assert not is_hr_admissible(completed, profile).verdict
    assert not is_m_admissible(completed, profile).verdict


def test_tail_parametrization_equivalence(rng):
    # quasi-admissible iff the last entry coincides with the completed tail
    profile = fork_profile()
    for _ in range(60):
        a1 = F(rng.randrange(1, 64), 64)
        b1 = F(rng.randrange(1, 64), 64)
        c1 = F(rng.randrange(1, 64), 64)
        try:
            completed = complete_tail([(a1, b1, c1)], profile)
        except TailOutOfRange:
            continue
        assert is_quasi_admissible(completed, profile).verdict
        # perturb the tail: quasi-admissibility must break
        a2, b2, c2, d2 = completed.entries[1]
        if a2 + F(1, 128) < 1:
            tampered = AdmissibleSet((completed.entries[0], Quadruple(a2 + F(1, 128), b2, c2, d2)))
            assert not is_quasi_admissible(tampered, profile).verdict


def test_existence_condition():
    assert not existence_condition(TargetProfile(F(1, 2), F(1, 2), F(-1, 4), F(1, 100), 2))
    assert existence_condition(TargetProfile(F(1, 2), F(1, 2), F(0), F(1, 100), 2))
    assert not existence_condition(TargetProfile(F(1, 5), F(1, 5), F(-1, 25), F(1, 100), 2))


def test_realized_deviation_examples():
    profile = fork_profile()
    assert realized_deviation(fork_set(), profile) == F(9, 100)
    flat = complete_tail([(F(1, 2), F(1, 2), F(1, 3))], profile)
    assert realized_deviation(flat, profile) == 0


def test_construct_hr_base_case_matches_fixture():
    result = construct_hr_admissible(fork_profile())
    assert result == fork_set()


def test_construct_hr_infeasible_profile():
    with pytest.raises(InfeasibleProfile):
        construct_hr_admissible(TargetProfile(F(1, 2), F(1, 2), F(-1, 4), F(9, 100), 2))
    with pytest.raises(InfeasibleProfile):
        # expected + ab >= 1 forces some d_i past 1
        construct_hr_admissible(TargetProfile(F(9, 10), F(9, 10), F(1, 5), F(1, 100), 2))


def test_construct_hr_larger_sizes():
    for n in (3, 4, 5):
        profile = fork_profile(n=n)
        result = construct_hr_admissible(profile)
        assert len(result) == n
        assert is_hr_admissible(result, profile).verdict
        assert realized_deviation(result, profile) == profile.delta
        assert interior_cell_conditionals(result)


def test_construct_is_deterministic():
    profile = fork_profile(n=4)
    assert construct_hr_admissible(profile) == construct_hr_admissible(profile)
    assert construct_m_admissible(profile) == construct_m_admissible(profile)


def test_construct_m_examples():
    assert construct_m_admissible(fork_profile()) == fork_set()
    profile3 = fork_profile(n=3)
    result = construct_m_admissible(profile3)
    assert result.entries == (
        Quadruple(F(1, 5), F(1, 5), F(1, 2), F(1, 25)),
        Quadruple(F(4, 5), F(4, 5), F(1, 4), F(16, 25)),
        Quadruple(F(4, 5), F(4, 5), F(1, 4), F(16, 25)),
    )
    assert is_m_admissible(result, profile3).verdict
    assert not is_hr_admissible(result, profile3).verdict
    assert realized_deviation(result, profile3) == F(9, 100)
    with pytest.raises(InfeasibleProfile):
        construct_m_admissible(TargetProfile(F(1, 2), F(1, 2), F(-1, 4), F(9, 100), 3))


def test_construct_m_target_deviation():
    profile = TargetProfile(F(1, 2), F(1, 2), F(0), F(1, 20), 3)
    result = construct_m_admissible(profile)
    assert realized_deviation(result, profile) == F(1, 20)


def test_duplication_law(rng):
    profile = fork_profile(n=2)
    base = construct_m_admissible(profile)
    for copies in (2, 3, 4):
        grown = split_entry(base, 1, copies)
        grown_profile = fork_profile(n=1 + copies)
        assert is_m_admissible(grown, grown_profile).verdict
        assert realized_deviation(grown, grown_profile) == profile.delta
        assert not is_hr_admissible(grown, grown_profile).verdict


def test_construction_failed_for_oversized_deviation():
    # a valid profile whose deviation exceeds what interior values can carry
    profile = TargetProfile(F(1, 2), F(1, 2), F(0), F(24, 100), 2)
    with pytest.raises(ConstructionFailed):
        construct_hr_admissible(profile)


def test_mean_outside_support_examples():
    assert mean_outside_support(TargetProfile(F(7, 10), F(7, 10), F(-1, 10), F(1, 20), 2))
    assert mean_outside_support(TargetProfile(F(3, 10), F(9, 10), F(-1, 10), F(1, 20), 2))
    assert not mean_outside_support(TargetProfile(F(1, 2), F(1, 2), F(-1, 10), F(1, 20), 2))
    assert not mean_outside_support(TargetProfile(F(1, 2), F(1, 2), F(1, 10), F(1, 20), 2))


def test_witness_refutes_large_deviation_only():
    witness = DominationWitness(F(-403, 2000), F(7, 20), F(13, 20))
    big = TargetProfile(F(1, 2), F(3, 10), F(-1, 10), F(1, 20), 2)
    small = TargetProfile(F(1, 2), F(3, 10), F(-1, 10), F(1, 100), 2)
    assert witness_refutes(big, witness)
    assert not witness_refutes(small, witness)
    with pytest.raises(InvalidProfile):
        witness_refutes(TargetProfile(F(1, 2), F(1, 2), F(0), F(1, 20), 2), witness)


def test_refuted_profiles_really_fail():
    # the construction honestly refuses at a certified-infeasible profile
    profile = TargetProfile(F(1, 2), F(1, 2), F(-1, 10), F(1, 20), 2)
    witness = DominationWitness(F(-216227, 1000000), F(499, 1000), F(501, 1000))
    assert witness_refutes(profile, witness)
    with pytest.raises(ConstructionFailed):
        construct_hr_admissible(profile)
    with pytest.raises(ConstructionFailed):
        construct_m_admissible(profile)
