"""Finite simplicial complexes, boolean representability, and small-case classification."""

from brsc.core import (
    Complex,
    SetFamily,
    DomainError,
    CapacityError,
    build_complex,
    restriction,
    contraction,
    truncate,
    union,
    join,
    oplus,
    sum_complex,
    pure_part,
    counting_function,
    is_paving,
    defect,
    complex_to_json,
    complex_from_json,
)

__all__ = [
    "Complex",
    "SetFamily",
    "DomainError",
    "CapacityError",
    "build_complex",
    "restriction",
    "contraction",
    "truncate",
    "union",
    "join",
    "oplus",
    "sum_complex",
    "pure_part",
    "counting_function",
    "is_paving",
    "defect",
    "complex_to_json",
    "complex_from_json",
]
