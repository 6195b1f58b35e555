"""Exact Hilbert-coefficient computations for filtrations of monomial and
numerical-semigroup ideals, with certified Cohen-Macaulayness and depth
checks for the associated graded ring and the fiber cone.
"""

from .analysis import (
    Basis,
    CoefficientReport,
    CoefficientSet,
    HilbertSeries,
    LemmaRow,
    VSequence,
    binomial,
    bounded_sum,
    coefficient_report,
    fiber_hilbert_series,
    fit_coefficients,
    fundamental_lemma_rows,
    g1_from_lengths_dim1,
    v_sequence,
)
from .criteria import (
    AnalysisReport,
    CriterionResult,
    CriterionStatus,
    EquivalenceConditions,
    MinimalMultiplicityFlags,
    analyze,
    check_fiber_cm,
    check_fiber_depth,
    check_fiber_multiplicity_bound,
    check_g1_lower_bound,
    check_g1_upper_bound,
    check_minimal_multiplicity,
    check_minimal_multiplicity_equivalences,
    fit_tables,
)
from .errors import (
    ComputationError,
    ContainmentError,
    FibrekitError,
    InfiniteLengthError,
    InputError,
    InternalInconsistencyError,
    MissingReductionError,
    NotAReductionError,
    NotYetPolynomialError,
    ParseError,
    RingMismatchError,
    TheoremViolationError,
    UndeterminedSumError,
)
from .filtration import FiltrationSpec, HilbertTable, build_table
from .ideals import INFINITE, MonomialIdeal, SemigroupIdeal, quotient_length
from .inputfile import InputDocument, load_spec, parse_input
from .reductions import (
    DepthClass,
    ElementProbe,
    GradedDepth,
    ReductionData,
    SequenceCheck,
    classify_graded_depth,
    fiber_regular_sequence_check,
    probe_fiber_regular,
    probe_fiber_superficial,
    reduction_number,
    valabrega_valla,
)
from .reporting import as_dict, render_text, render_tree
from .rings import PowerSeriesRing, SemigroupRing

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport",
    "Basis",
    "CoefficientReport",
    "CoefficientSet",
    "ComputationError",
    "ContainmentError",
    "CriterionResult",
    "CriterionStatus",
    "DepthClass",
    "ElementProbe",
    "EquivalenceConditions",
    "FibrekitError",
    "FiltrationSpec",
    "GradedDepth",
    "HilbertSeries",
    "HilbertTable",
    "INFINITE",
    "InfiniteLengthError",
    "InputDocument",
    "InputError",
    "InternalInconsistencyError",
    "LemmaRow",
    "MinimalMultiplicityFlags",
    "MissingReductionError",
    "MonomialIdeal",
    "NotAReductionError",
    "NotYetPolynomialError",
    "ParseError",
    "PowerSeriesRing",
    "ReductionData",
    "RingMismatchError",
    "SemigroupIdeal",
    "SemigroupRing",
    "SequenceCheck",
    "TheoremViolationError",
    "UndeterminedSumError",
    "VSequence",
    "analyze",
    "as_dict",
    "binomial",
    "bounded_sum",
    "build_table",
    "check_fiber_cm",
    "check_fiber_depth",
    "check_fiber_multiplicity_bound",
    "check_g1_lower_bound",
    "check_g1_upper_bound",
    "check_minimal_multiplicity",
    "check_minimal_multiplicity_equivalences",
    "classify_graded_depth",
    "coefficient_report",
    "fiber_hilbert_series",
    "fiber_regular_sequence_check",
    "fit_coefficients",
    "fit_tables",
    "fundamental_lemma_rows",
    "g1_from_lengths_dim1",
    "load_spec",
    "parse_input",
    "probe_fiber_regular",
    "probe_fiber_superficial",
    "quotient_length",
    "reduction_number",
    "render_text",
    "render_tree",
    "v_sequence",
    "valabrega_valla",
]
