"""Ratliff-Rush closures and Rees/fiber regularity of equigenerated
monomial ideals in two variables, with exact integer arithmetic throughout.
"""

__version__ = "0.1.0"

from .errors import CapExceeded, CheckpointError, ResourceLimit
from .hilbert import (
    HilbertReport,
    hilbert_polynomial,
    hilbert_report,
    hilbert_samuel,
    hilbert_value,
    postulation_number,
)
from .ratliff_rush import (
    Monomial,
    RRClosure,
    rr_equals_power,
    rr_equals_power_at_initial_degree,
    rr_generators,
    rr_oracle,
    semigroup_tables,
)
from .regularity import (
    CriterionPair,
    RegularityReport,
    criterion_witness,
    eu_check,
    reg_fiber,
    reg_fiber_via_lemma,
    reg_rees,
    stability_indices,
)
from .search import ScanSummary, SearchRecord, canonical_triples, scan
from .semigroup import MembershipTable, build_membership
from .staircase import (
    DegreeError,
    ExponentOrderError,
    ExponentRangeError,
    IdealError,
    IdealSpec,
    ParameterIdealError,
    PowerFamily,
    PowerSumset,
    has_member_in_range,
    make_ideal,
    mirror,
    power_sumsets,
    reduction_number,
    theoretical_cap,
)

__all__ = [
    "CapExceeded",
    "CheckpointError",
    "CriterionPair",
    "DegreeError",
    "ExponentOrderError",
    "ExponentRangeError",
    "HilbertReport",
    "IdealError",
    "IdealSpec",
    "MembershipTable",
    "Monomial",
    "ParameterIdealError",
    "PowerFamily",
    "PowerSumset",
    "RegularityReport",
    "ResourceLimit",
    "RRClosure",
    "ScanSummary",
    "SearchRecord",
    "build_membership",
    "canonical_triples",
    "criterion_witness",
    "eu_check",
    "has_member_in_range",
    "hilbert_polynomial",
    "hilbert_report",
    "hilbert_samuel",
    "hilbert_value",
    "make_ideal",
    "mirror",
    "postulation_number",
    "power_sumsets",
    "reduction_number",
    "reg_fiber",
    "reg_fiber_via_lemma",
    "reg_rees",
    "rr_equals_power",
    "rr_equals_power_at_initial_degree",
    "rr_generators",
    "rr_oracle",
    "scan",
    "semigroup_tables",
    "stability_indices",
    "theoretical_cap",
]
