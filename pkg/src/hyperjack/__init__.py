"""Hyperdeterminants, hyperpfaffians, Jack and Schur functions, and Toeplitz hyperdeterminants."""

from .exact import (
    DimensionError,
    DivisionError,
    LaurentPoly,
    ParameterError,
    constant_term,
    normalization_constant,
    vandermonde,
    vandermonde_power,
)
from .hyper import (
    AlternatingArray,
    FullyAntisymmetricArray,
    HyperArray,
    ValidationError,
    barvinok_hpf,
    cauchy_binet_check,
    debruijn_check,
    det,
    embed_hdet_to_hpf,
    embed_hpf_to_barvinok,
    hdet,
    hdet_numeric,
    hper,
    hpf,
    paired_column_check,
    pfaffian,
)
from .identities import VerificationReport, run_all, run_one, run_suite
from .jack import JackParams, UnsupportedParameterError, expand_in_jack_Q, jack_P, jack_Q, omega_alpha
from .partitions import Partition, conjugate, enumerate_partitions
from .symfunc import SymPoly, complete_h, convert, elementary_e, schur
from .toeplitz import (
    ExactSymbol,
    ExpSymbol,
    NumericError,
    ToeplitzSpec,
    heine_szego_oracle,
    normalized_toeplitz_hdet,
    parse_symbol,
    szego_prediction,
    szego_trend,
    toeplitz_hdet,
    toeplitz_hpf_form,
)

__version__ = "0.1.0"

__all__ = [
    "AlternatingArray",
    "DimensionError",
    "DivisionError",
    "ExactSymbol",
    "ExpSymbol",
    "FullyAntisymmetricArray",
    "HyperArray",
    "JackParams",
    "LaurentPoly",
    "NumericError",
    "ParameterError",
    "Partition",
    "SymPoly",
    "ToeplitzSpec",
    "UnsupportedParameterError",
    "ValidationError",
    "VerificationReport",
    "barvinok_hpf",
    "cauchy_binet_check",
    "complete_h",
    "conjugate",
    "constant_term",
    "convert",
    "debruijn_check",
    "det",
    "elementary_e",
    "embed_hdet_to_hpf",
    "embed_hpf_to_barvinok",
    "enumerate_partitions",
    "expand_in_jack_Q",
    "hdet",
    "hdet_numeric",
    "heine_szego_oracle",
    "hper",
    "hpf",
    "jack_P",
    "jack_Q",
    "normalization_constant",
    "normalized_toeplitz_hdet",
    "omega_alpha",
    "paired_column_check",
    "parse_symbol",
    "pfaffian",
    "run_all",
    "run_one",
    "run_suite",
    "schur",
    "szego_prediction",
    "szego_trend",
    "toeplitz_hdet",
    "toeplitz_hpf_form",
    "vandermonde",
    "vandermonde_power",
]
