"""Exact arithmetic foundation: scalars, polynomials, finite fields."""

from .scalars import QQ, Zmod
from .unipoly import (
    UniPoly,
    poly_divmod,
    poly_gcd,
    companion_trace,
    elementary_symmetric,
)
from .ffield import (
    ExtField,
    GF,
    NumberField,
    is_irreducible_ff,
    roots_in_extension,
    smallest_irreducible,
)
from .multipoly import (
    MultiPoly,
    esym,
    eval_multi,
    is_symmetric,
    parse_poly,
    parse_unipoly,
    power_sum,
)

__all__ = [
    "QQ",
    "Zmod",
    "UniPoly",
    "poly_divmod",
    "poly_gcd",
    "companion_trace",
    "elementary_symmetric",
    "ExtField",
    "GF",
    "NumberField",
    "is_irreducible_ff",
    "roots_in_extension",
    "smallest_irreducible",
    "MultiPoly",
    "esym",
    "eval_multi",
    "is_symmetric",
    "parse_poly",
    "parse_unipoly",
    "power_sum",
]
