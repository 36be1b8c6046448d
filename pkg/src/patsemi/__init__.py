"""Nonhomogeneous patterns on numerical semigroups.

Admission of linear patterns by numerical semigroups: exact decision
procedures, classification of patterns by the multiplicities that can
carry them, trees of semigroups admitting a pattern at fixed multiplicity,
closure operators and minimal generating systems induced by a pattern,
and bounds derived from Weierstrass semigroup data.
"""

from .admission import (
    DEFAULT_SEARCH_CEILING,
    Witness,
    admits,
    is_minimal_v_generator,
    violating_sequence,
)
from .bounds import (
    BoundReport,
    bound_report,
    br_bound,
    gm_bound,
    gm_equals_lewittes,
    lewittes_bound,
)
from .core import (
    DEFAULT_CONDUCTOR_LIMIT,
    NumericalSemigroup,
    from_gaps,
    from_generators,
    ordinary,
)
from .errors import (
    ConductorLimitExceeded,
    ElementBelowMultiplicity,
    GcdIsOne,
    InputError,
    IsFullSet,
    NegativeLead,
    NodeCeilingExceeded,
    NotAdmissible,
    NotCofinite,
    NotMember,
    NotMinimalGenerator,
    ParseError,
    PatsemiError,
    PreconditionError,
    PreconditionViolated,
    ResourceLimit,
    SearchTooLarge,
)
from .patterns import (
    KmCheckResult,
    MultiplicityRange,
    Pattern,
    PatternClass,
    admissible_multiplicities,
    arf_pattern,
    br_pattern,
    classify,
    config_pattern,
    derived_pattern,
    gm_pattern,
    is_strongly_admissible,
    km_pattern_check,
    med_pattern,
)
from .textio import (
    format_pattern,
    format_pattern_machine,
    format_semigroup,
    parse_pattern,
    parse_semigroup,
    tree_from_json,
    tree_to_dot,
    tree_to_json,
)
from .variety import (
    DEFAULT_NODE_CEILING,
    SubmonoidRep,
    TreeNode,
    VarietyTree,
    children,
    infinite_family_witness,
    is_variety_finite,
    minimal_v_generating_system,
    tree_enumerate,
    v_closure,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "ConductorLimitExceeded",
    "DEFAULT_CONDUCTOR_LIMIT",
    "DEFAULT_NODE_CEILING",
    "DEFAULT_SEARCH_CEILING",
    "ElementBelowMultiplicity",
    "GcdIsOne",
    "InputError",
    "IsFullSet",
    "KmCheckResult",
    "MultiplicityRange",
    "NegativeLead",
    "NodeCeilingExceeded",
    "NotAdmissible",
    "NotCofinite",
    "NotMember",
    "NotMinimalGenerator",
    "NumericalSemigroup",
    "ParseError",
    "PatsemiError",
    "Pattern",
    "PatternClass",
    "PreconditionError",
    "PreconditionViolated",
    "ResourceLimit",
    "SearchTooLarge",
    "SubmonoidRep",
    "TreeNode",
    "VarietyTree",
    "Witness",
    "admissible_multiplicities",
    "admits",
    "arf_pattern",
    "bound_report",
    "br_bound",
    "br_pattern",
    "children",
    "classify",
    "config_pattern",
    "derived_pattern",
    "format_pattern",
    "format_pattern_machine",
    "format_semigroup",
    "from_gaps",
    "from_generators",
    "gm_bound",
    "gm_equals_lewittes",
    "gm_pattern",
    "infinite_family_witness",
    "is_minimal_v_generator",
    "is_strongly_admissible",
    "is_variety_finite",
    "km_pattern_check",
    "lewittes_bound",
    "med_pattern",
    "minimal_v_generating_system",
    "ordinary",
    "parse_pattern",
    "parse_semigroup",
    "tree_enumerate",
    "tree_from_json",
    "tree_to_dot",
    "tree_to_json",
    "v_closure",
    "violating_sequence",
]
