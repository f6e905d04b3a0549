"""Functional decomposition of polynomials and its behaviour under
reduction modulo primes and specialization of parameters."""

from .decomp import (
    DecompResult,
    MDecomposition,
    approx_m_root,
    bivariate_m_decompose,
    decompose,
    is_m_decomposable,
    m_decompose,
)
from .modp import obstruction_certificate, reduce_and_test, theorem1_threshold
from .polycore import (
    QQ,
    MultiPoly,
    PrimeField,
    UniPoly,
    field_from_spec,
    galois_field,
    parse_poly,
)
from .special import (
    SampleSet,
    certify_specialization,
    exceptional_set,
    monte_carlo_test,
    multivar_specialize_and_test,
)

__version__ = "0.1.0"
