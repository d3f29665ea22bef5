"""Sidon sets, modular sonar sequences, and maximal-length search.

Construct Sidon sets in cyclic groups (Bose, Ruzsa), fold them into
modular sonar sequences, build the five classical sonar constructions,
verify the distinct-differences property, search maximal lengths
exhaustively, and compare all constructions over parameter sweeps.
"""

from .classic import golomb, quadratic, shift, welch_exp, welch_exp_short, welch_log
from .errors import (
    AlphaInBaseField,
    ANotInvertible,
    CoverageFailure,
    DegreeZero,
    DivisionByZero,
    EmptySequence,
    LogOfZero,
    ModulusMismatch,
    NotOddPrime,
    NotPrime,
    NotPrimePower,
    NotPrimitive,
    NotSidon,
    OrderOverflow,
    QTooSmall,
    SonarseqError,
    ZeroElement,
)
from .ff import FieldCtx, FieldElem, field_new, in_subfield, smallest_irreducible, subfield_image
from .fold import (
    SonarSeq,
    fold_sidon,
    sonar_from_bose,
    sonar_from_ruzsa_mod_p,
    sonar_from_ruzsa_mod_p_minus_1,
    unfold,
)
from .harness import (
    ComparisonRow,
    export_rows,
    load_rows,
    rows_to_csv,
    rows_to_json,
    run_comparison,
)
from .search import RelationRow, SearchResult, search_max, verify_known_relations
from .sidon import (
    SidonReport,
    SidonSet,
    bose,
    coverage_check,
    max_sidon_bound,
    residues,
    ruzsa,
    verify_sidon,
)
from .verify import (
    DifferenceTriangle,
    VerifyReport,
    check_modular,
    check_plain,
    difference_triangle,
)

__version__ = "0.1.0"

__all__ = [
    "ANotInvertible",
    "AlphaInBaseField",
    "ComparisonRow",
    "CoverageFailure",
    "DegreeZero",
    "DifferenceTriangle",
    "DivisionByZero",
    "EmptySequence",
    "FieldCtx",
    "FieldElem",
    "LogOfZero",
    "ModulusMismatch",
    "NotOddPrime",
    "NotPrime",
    "NotPrimePower",
    "NotPrimitive",
    "NotSidon",
    "OrderOverflow",
    "QTooSmall",
    "RelationRow",
    "SearchResult",
    "SidonReport",
    "SidonSet",
    "SonarSeq",
    "SonarseqError",
    "VerifyReport",
    "ZeroElement",
    "bose",
    "check_modular",
    "check_plain",
    "coverage_check",
    "difference_triangle",
    "export_rows",
    "field_new",
    "fold_sidon",
    "golomb",
    "in_subfield",
    "load_rows",
    "max_sidon_bound",
    "quadratic",
    "residues",
    "rows_to_csv",
    "rows_to_json",
    "run_comparison",
    "ruzsa",
    "search_max",
    "shift",
    "smallest_irreducible",
    "sonar_from_bose",
    "sonar_from_ruzsa_mod_p",
    "sonar_from_ruzsa_mod_p_minus_1",
    "subfield_image",
    "unfold",
    "verify_known_relations",
    "verify_sidon",
    "welch_exp",
    "welch_exp_short",
    "welch_log",
]
