"""Exact growth and skew growth series of positive homogeneous monoids."""

from .cancellativity import cancellative_up_to, left_cancellative_up_to, right_cancellative_up_to
from .config import BudgetExceeded, CapExceeded, Limits
from .divisibility import (
    common_multiples,
    condition_l_report,
    left_divides,
    mcm,
    right_complements,
)
from .enumeration import graded_elements, growth_series, monoid
from .presentation import (
    Presentation,
    PresentationError,
    Relation,
    parse_presentation,
    parse_preset_spec,
    preset,
    reverse_presentation,
    serialize,
)
from .rewrite import Element, are_equivalent, canonical, equivalence_class
from .series import (
    RationalForm,
    TruncatedSeries,
    expand_rational,
    invert_truncated,
    mul_truncated,
    verify_inversion,
)
from .towers import Tower, enumerate_towers, observed_height, skew_by_root, skew_growth

__all__ = [
    "BudgetExceeded",
    "CapExceeded",
    "Element",
    "Limits",
    "Presentation",
    "PresentationError",
    "RationalForm",
    "Relation",
    "Tower",
    "TruncatedSeries",
    "are_equivalent",
    "cancellative_up_to",
    "canonical",
    "common_multiples",
    "condition_l_report",
    "enumerate_towers",
    "equivalence_class",
    "expand_rational",
    "graded_elements",
    "growth_series",
    "invert_truncated",
    "left_cancellative_up_to",
    "left_divides",
    "mcm",
    "monoid",
    "mul_truncated",
    "observed_height",
    "parse_presentation",
    "parse_preset_spec",
    "preset",
    "reverse_presentation",
    "right_cancellative_up_to",
    "right_complements",
    "serialize",
    "skew_by_root",
    "skew_growth",
    "verify_inversion",
]
