"""The chaotic dynamic S-box image cipher."""

from .engine import (
    decrypt,
    decrypt_round,
    encrypt,
    encrypt_round,
    round_key,
    select_substituent,
    substituent_for,
)
from .geometry import rot180, scramble, transpose, unscramble

__all__ = [
    "decrypt",
    "decrypt_round",
    "encrypt",
    "encrypt_round",
    "rot180",
    "round_key",
    "scramble",
    "select_substituent",
    "substituent_for",
    "transpose",
    "unscramble",
]
