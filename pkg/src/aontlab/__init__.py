"""aontlab: construct, verify, and entropy-analyze all-or-nothing transform arrays."""

from .arrays import (
    AONT,
    NEITHER,
    WEAK_AONT_ONLY,
    Alphabet,
    AontArray,
    ClassificationVerdict,
    PropertyReport,
    check_covering,
    check_unbiased,
    classify,
    column_set_family,
    dump_array_csv,
    load_array_csv,
    parse_array,
    parse_array_csv,
    save_array_csv,
)
from .bounds import (
    ASYMMETRIC,
    ASYMMETRIC_GIVEN_HY,
    BLOCK_EXACT,
    NONUNIFORM_EXACT,
    SYMMETRIC,
    WEAK,
    WEAK_GIVEN_HY,
    BoundComparison,
    EntropyInterval,
    bounds_asymmetric,
    bounds_asymmetric_given_hy,
    bounds_symmetric,
    bounds_weak,
    bounds_weak_given_hy,
    compare,
    exact_block_dependent,
    exact_nonuniform_le_t,
)
from .constructions import (
    BUILTIN_NAMES,
    DEFAULT_SEARCH_CAP,
    SearchResult,
    SquareMatrix,
    builtin,
    identity_matrix,
    iter_invertible_matrices,
    iter_linear_aont_matrices,
    linear_aont,
    matrix_from_rows,
    search_linear,
)
from .entropy import (
    CompletionSet,
    SubsetPair,
    completion_set,
    conditional_entropy,
    conditional_entropy_formula,
    marginal_distribution,
    statistical_distance,
    subset_entropy,
)
from .errors import AontLabError
from .models import (
    Distribution,
    InputModel,
    column,
    column_entropy,
    joint_probability,
    load_model_json,
    make_block_dependent_model,
    make_independent_model,
    save_model_json,
    uniform,
    uniform_model,
)
from .report import AnalysisReport, admissible_pairs, build_report
from .demos import run_demo

__version__ = "0.1.0"

__all__ = [
    "AONT",
    "ASYMMETRIC",
    "ASYMMETRIC_GIVEN_HY",
    "BLOCK_EXACT",
    "BUILTIN_NAMES",
    "DEFAULT_SEARCH_CAP",
    "NEITHER",
    "NONUNIFORM_EXACT",
    "SYMMETRIC",
    "WEAK",
    "WEAK_AONT_ONLY",
    "WEAK_GIVEN_HY",
    "Alphabet",
    "AnalysisReport",
    "AontArray",
    "AontLabError",
    "BoundComparison",
    "ClassificationVerdict",
    "CompletionSet",
    "Distribution",
    "EntropyInterval",
    "InputModel",
    "PropertyReport",
    "SearchResult",
    "SquareMatrix",
    "SubsetPair",
    "admissible_pairs",
    "bounds_asymmetric",
    "bounds_asymmetric_given_hy",
    "bounds_symmetric",
    "bounds_weak",
    "bounds_weak_given_hy",
    "build_report",
    "builtin",
    "check_covering",
    "check_unbiased",
    "classify",
    "column",
    "column_entropy",
    "column_set_family",
    "compare",
    "completion_set",
    "conditional_entropy",
    "conditional_entropy_formula",
    "dump_array_csv",
    "exact_block_dependent",
    "exact_nonuniform_le_t",
    "identity_matrix",
    "iter_invertible_matrices",
    "iter_linear_aont_matrices",
    "joint_probability",
    "linear_aont",
    "load_array_csv",
    "load_model_json",
    "make_block_dependent_model",
    "make_independent_model",
    "marginal_distribution",
    "matrix_from_rows",
    "parse_array",
    "parse_array_csv",
    "run_demo",
    "save_array_csv",
    "save_model_json",
    "search_linear",
    "statistical_distance",
    "subset_entropy",
    "uniform",
    "uniform_model",
]
