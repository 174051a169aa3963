"""Sparse change of ordering for zero-dimensional Groebner bases."""

from ._core import (
    InputError,
    StructuralError,
    asymptotic_estimate,
    berlekamp_massey,
    bms,
    canonical_basis,
    convert,
    fglm,
    gen_random_system,
    hilbert_profile,
    shape_det,
    shape_prob,
)

__all__ = [
    "InputError",
    "StructuralError",
    "asymptotic_estimate",
    "berlekamp_massey",
    "bms",
    "canonical_basis",
    "convert",
    "fglm",
    "gen_random_system",
    "hilbert_profile",
    "shape_det",
    "shape_prob",
]
