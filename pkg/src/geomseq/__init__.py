"""Generalized NTU geometric sequences: construction over finite fields,
linear complexity, periodic correlation and closed-form predictions."""

__version__ = "0.1.0"

from ._validation import CapacityError, ParameterError
from .correlate import (
    CorrelationProfile,
    autocorrelation,
    autocorrelation_profile,
    cross_correlation,
    cross_correlation_profile,
)
from .estimators import AutocorrelationTransformer, GeneralizedNTUGenerator, LinearComplexityTransformer
from .gf import (
    CyclotomicContext,
    ExtFieldContext,
    ExtFieldElement,
    PrimeFieldElement,
    class_index,
    difference_parameter,
    find_primitive_polynomial,
    legendre_symbol,
    order2_difference_parameter,
    trace,
)
from .lincomp import (
    LcReport,
    berlekamp_massey,
    hasse_derivative,
    linear_complexity,
    minimal_poly_gcd,
    multiplicity_at_one,
)
from .poly import DensePoly, format_sparse, parse_sparse
from .seqgen import (
    NtuParams,
    SymbolSequence,
    build_sequence,
    generalized_ntu,
    interleave,
    left_cyclic_shift,
    m_sequence,
    proposed_sequence,
    short_companion,
)
from .theorems import Prediction, verify_tuple

__all__ = [name for name in dir() if not name.startswith("_")]
