"""GF(2^8) arithmetic and the affine-power-affine substitution."""

from .apa import (
    CANDIDATE_CONVENTIONS,
    DEFAULT_CONVENTION,
    PUBLISHED_TABLE,
    ApaTable,
    BitOrder,
    Composition,
    Convention,
    ConventionReport,
    Provenance,
    affine,
    apa,
    apa_table,
    computed_table,
    inverse_table,
    reconcile_convention,
    selected_convention,
)
from .gf256 import gf_inv, gf_mul, gf_pow

__all__ = [
    "CANDIDATE_CONVENTIONS",
    "DEFAULT_CONVENTION",
    "PUBLISHED_TABLE",
    "ApaTable",
    "BitOrder",
    "Composition",
    "Convention",
    "ConventionReport",
    "Provenance",
    "affine",
    "apa",
    "apa_table",
    "computed_table",
    "gf_inv",
    "gf_mul",
    "gf_pow",
    "inverse_table",
    "reconcile_convention",
    "selected_convention",
]
