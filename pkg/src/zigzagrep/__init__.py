"""Zigzag persistence barcodes with compact interval representatives.

Computes the homology and boundary barcodes of a simplex-wise zigzag
filtration together with a representative for every interval, encoded as a
wire bundle; includes independent brute-force oracles that certify the
output, and an oscillating-Rips generator for benchmark filtrations.
"""
from __future__ import annotations

from .chains import Chain, ComplexState, Simplex, boundary, chain_add, pivot
from .filtration import (
    FiltrationError,
    FiltrationStep,
    ZigzagFiltration,
    complex_at,
    parse_filtration,
    serialize,
    validate,
)

__all__ = [
    "Chain",
    "ComplexState",
    "Simplex",
    "boundary",
    "chain_add",
    "pivot",
    "FiltrationError",
    "FiltrationStep",
    "ZigzagFiltration",
    "complex_at",
    "parse_filtration",
    "serialize",
    "validate",
]

__version__ = "0.1.0"
