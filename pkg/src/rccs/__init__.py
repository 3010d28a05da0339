"""Exact-arithmetic common cause systems over finite probability spaces.

Everything is built on ``fractions.Fraction``: probabilities, correlations,
deviations and all admissibility arithmetic are exact, so every defining
(in)equality of the checked models is decided, never approximated.
"""

__version__ = "0.1.0"

from .admissible import (
    AdmissibleSet,
    DominationWitness,
    Quadruple,
    TargetProfile,
    complete_tail,
    construct_hr_admissible,
    construct_m_admissible,
    existence_condition,
    is_hr_admissible,
    is_m_admissible,
    is_quasi_admissible,
    mean_outside_support,
    profile_for,
    realized_deviation,
    split_entry,
    witness_refutes,
)
from .errors import (
    ConstructionFailed,
    DegenerateCell,
    ForeignEvent,
    IndistinctEvents,
    InfeasibleProfile,
    InvalidEvent,
    InvalidPartition,
    InvalidProfile,
    InvalidSpace,
    NegativeRatio,
    RccsError,
    ScreeningHypothesisViolated,
    SearchBudgetExceeded,
    SpaceFormatError,
    TailOutOfRange,
    ZeroConditioningEvent,
)
from .extension import (
    ExtensionResult,
    SplitRatios,
    SystemModel,
    extend_with_rccs,
    induced_event,
    split_ratios,
    verify_extension,
)
from .models import (
    check_conjunctive_common_cause,
    check_generalised_common_cause,
    check_ghr_rccs,
    check_gm_rccs,
    check_hr_rccs,
    check_m_rccs,
    decompose_correlation,
    hr_deviation_formula,
    m_deviation_formula,
)
from .rational import Rational, format_ratio, parse_flag_ratio, parse_ratio
from .report import Clause, ConditionReport, Model
from .search import (
    SearchQuery,
    SearchReport,
    enumerate_partitions,
    find_rccs,
    sample_admissible_search,
    stirling2,
)
from .space import (
    Event,
    Partition,
    ProbabilitySpace,
    cond_correlation,
    cond_prob,
    correlation,
    deviation,
    prob,
)
from .spacefile import dump_json, extension_to_dict, load_space, parse_space, space_to_dict

__all__ = [name for name in dir() if not name.startswith("_")]
