from .fields import (
    QQ,
    GaloisField,
    GFElem,
    Mod,
    PrimeField,
    Rationals,
    field_from_spec,
    galois_field,
)
from .multivariate import MultiPoly
from .parser import detect_vars, parse_poly
from .resultant import (
    ShiftReport,
    bad_shift_report,
    base_field_roots,
    count_bad_shifts,
    discriminant_shifted,
    resultant,
    shift_resultant,
)
from .substitution import generic_shift, substitute_linear
from .univariate import UniPoly, compose, inf_norm

__all__ = [
    "QQ",
    "GaloisField",
    "GFElem",
    "Mod",
    "MultiPoly",
    "PrimeField",
    "Rationals",
    "ShiftReport",
    "UniPoly",
    "bad_shift_report",
    "base_field_roots",
    "compose",
    "count_bad_shifts",
    "detect_vars",
    "discriminant_shifted",
    "field_from_spec",
    "galois_field",
    "generic_shift",
    "inf_norm",
    "parse_poly",
    "resultant",
    "shift_resultant",
    "substitute_linear",
]
