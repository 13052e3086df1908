"""Dynamic S-box bank generation and storage."""

from .bankfile import read_bank, write_bank
from .forge import (
    SBox,
    SBoxBank,
    box_seeds,
    chaotic_shuffle,
    generate_bank,
    generate_sbox,
    is_bijective,
    lookup,
)

__all__ = [
    "SBox",
    "SBoxBank",
    "box_seeds",
    "chaotic_shuffle",
    "generate_bank",
    "generate_sbox",
    "is_bijective",
    "lookup",
    "read_bank",
    "write_bank",
]
