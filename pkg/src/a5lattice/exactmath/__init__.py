"""Exact arithmetic: rationals, residues, quadratic rings and integer matrix algebra."""

from fractions import Fraction

from .matrix import (
    ExactMatrix,
    determinant,
    format_matrix,
    inverse,
    parse_matrix,
    rank,
    solve,
)
from .normalforms import (
    SmithDecomposition,
    hermite_normal_form,
    invariant_factors,
    smith_normal_form,
)
from .scalars import (
    ResidueMod2Z,
    ResidueModZ,
    Sqrt5Number,
    Zeta3Number,
    as_fraction,
    format_rational,
    reduce_mod_2z,
    reduce_mod_z,
)

__all__ = [
    "ExactMatrix",
    "Fraction",
    "ResidueMod2Z",
    "ResidueModZ",
    "SmithDecomposition",
    "Sqrt5Number",
    "Zeta3Number",
    "as_fraction",
    "determinant",
    "format_matrix",
    "format_rational",
    "hermite_normal_form",
    "invariant_factors",
    "inverse",
    "parse_matrix",
    "rank",
    "reduce_mod_2z",
    "reduce_mod_z",
    "smith_normal_form",
    "solve",
]
