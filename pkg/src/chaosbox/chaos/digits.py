"""Turning chaotic states into discrete indices."""

import math


def extract_digits(x: float) -> tuple[int, int, int]:
    """Split the first 15 decimal digits of ``x`` into three 5-digit groups.

    The digits are those of ``u = floor(x * 10**15)``, with the product taken
    in binary64. 10**15 < 2**53, so ``u`` is exact once the product is rounded.
    """
    u = math.floor(x * 1e15)
    return u // 10**10, (u // 10**5) % 10**5, u % 10**5


def extract_index(y: float, k: int) -> int:
    """Index in [1, k]: ``floor(y * 10**10) mod k + 1``."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    return math.floor(y * 1e10) % k + 1
