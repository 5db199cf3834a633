"""Workbench for threshold (Dejean) words: constructions, encodings, checks."""

from .carpi import (
    CarpiParams,
    MorphismTable,
    PipelineError,
    apply_morphism,
    find_psi_kernel_repetition,
    in_psi_kernel,
    load_morphism_table,
    params,
    threshold_pipeline,
)
from .constructions import (
    alpha_prefix,
    beta_prefix,
    z4_factors,
    z4_is_factor,
    z4_language,
    zm_count,
    zm_enumerate,
    zm_is_member,
    zm_samples,
)
from .core_words import (
    RepetitionReport,
    Word,
    find_forbidden_factor,
    format_ratio,
    format_word,
    is_free,
    max_exponent,
    minimal_period,
    parse_ratio,
    parse_word,
    repetition_threshold,
    word,
)
from .growth import (
    GrowthTable,
    count_language,
    count_threshold_words,
    growth_estimate,
    table_to_csv,
    theorem2_lower_bound,
)
from .pansiot import gamma, scan_prop32
from .verifier import (
    MaximalKernelRepetition,
    VerificationReport,
    binary_avoidance_max_length,
    check_lemma6,
    check_prop7_desk,
    compute_W,
    n26_stabilizing_check,
    verify_Ew,
    verify_short_elimination,
    w_breakdown,
)

__version__ = "0.1.0"

__all__ = [
    "CarpiParams",
    "GrowthTable",
    "MaximalKernelRepetition",
    "MorphismTable",
    "PipelineError",
    "RepetitionReport",
    "VerificationReport",
    "Word",
    "alpha_prefix",
    "apply_morphism",
    "beta_prefix",
    "binary_avoidance_max_length",
    "check_lemma6",
    "check_prop7_desk",
    "compute_W",
    "count_language",
    "count_threshold_words",
    "find_forbidden_factor",
    "find_psi_kernel_repetition",
    "format_ratio",
    "format_word",
    "gamma",
    "growth_estimate",
    "in_psi_kernel",
    "is_free",
    "load_morphism_table",
    "max_exponent",
    "minimal_period",
    "n26_stabilizing_check",
    "params",
    "parse_ratio",
    "parse_word",
    "repetition_threshold",
    "scan_prop32",
    "table_to_csv",
    "theorem2_lower_bound",
    "threshold_pipeline",
    "verify_Ew",
    "verify_short_elimination",
    "w_breakdown",
    "word",
    "z4_factors",
    "z4_is_factor",
    "z4_language",
    "zm_count",
    "zm_enumerate",
    "zm_is_member",
    "zm_samples",
    "__version__",
]
