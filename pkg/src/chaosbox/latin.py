"""Keyed 256x256 Latin squares.

Two PWLCM-shuffled permutations P and Q are derived from the 256-bit key and
combined as L(i, j) = P[(Q[i] + j) mod 256]. That is an isotopy of the cyclic
square, so every row and every column is a permutation for any P and Q.
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .chaos import guard
from .errors import ParameterError
from .models import LatinKey
from .sbox import chaotic_shuffle

ORDER = 256
SEED_MODULUS = 10**15 - 3
SEED_SCALE = 10**15
PERMUTATION_BURN_IN = 250
PERMUTATION_PASSES = 2


class PermutationTag(Enum):
    """Which of the two key permutations; the value is its PWLCM parameter."""

    P = 0.37
    Q = 0.43


@dataclass(frozen=True, eq=False)
class LatinSquare:
    """A Latin square grid; ``cell(q)`` reads the 1-based row-major flattening."""

    grid: np.ndarray

    def __post_init__(self) -> None:
        grid = np.array(self.grid, dtype=np.uint8, copy=True)
        grid.setflags(write=False)
        object.__setattr__(self, "grid", grid)

    @property
    def order(self) -> int:
        return int(self.grid.shape[0])

    def flat(self) -> bytes:
        return self.grid.tobytes()

    def cell(self, q: int) -> int:
        if not 1 <= q <= self.grid.size:
            raise IndexError(f"cell {q} outside 1..{self.grid.size}")
        return int(self.grid.flat[q - 1])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LatinSquare):
            return NotImplemented
        return np.array_equal(self.grid, other.grid)

    def __hash__(self) -> int:
        return hash(self.grid.tobytes())


def _fold(half: bytes) -> int:
    return int.from_bytes(half[:8], "big") ^ int.from_bytes(half[8:], "big")


def derive_seeds(key: LatinKey) -> tuple[float, float]:
    """PWLCM seeds for P and Q from the two 128-bit halves of the key.

    Each half is split into two 64-bit big-endian words which are XORed to
    ``w``; the seed is ``(w mod (10**15 - 3) + 1) / 10**15``.

    Args:
        key: The 256-bit Latin key.

    Returns:
        ``(y0_P, y0_Q)``, both strictly inside (0, 1).
    """
    w1 = _fold(key.key[:16])
    w2 = _fold(key.key[16:])
    return (
        guard((w1 % SEED_MODULUS + 1) / SEED_SCALE),
        guard((w2 % SEED_MODULUS + 1) / SEED_SCALE),
    )


def keyed_permutation(y0: float, tag: PermutationTag) -> bytes:
    """Chaotic shuffle of 0..255 with the PWLCM parameter of ``tag``.

    Args:
        y0: PWLCM seed in (0, 1).
        tag: Which permutation; selects p = 0.37 (P) or p = 0.43 (Q).

    Returns:
        The 256-byte permutation.

    Raises:
        ParameterError: If ``y0`` lies outside (0, 1).
    """
    if not 0.0 < y0 < 1.0:
        raise ParameterError(f"permutation seed must lie in (0, 1), got {y0!r}")
    return bytes(chaotic_shuffle(y0, tag.value, PERMUTATION_BURN_IN, PERMUTATION_PASSES))


def _as_permutation(values: bytes | np.ndarray) -> np.ndarray:
    if isinstance(values, (bytes, bytearray)):
        return np.frombuffer(bytes(values), dtype=np.uint8)
    return np.asarray(values, dtype=np.uint8)


def latin_from_permutations(p: bytes | np.ndarray, q: bytes | np.ndarray) -> LatinSquare:
    """L(i, j) = p[(q[i] + j) mod n] for 0-based i, j."""
    p_arr = _as_permutation(p)
    q_arr = _as_permutation(q).astype(np.intp)
    n = p_arr.size
    if q_arr.size != n:
        raise ParameterError("permutations must have equal length")
    idx = (q_arr[:, None] + np.arange(n, dtype=np.intp)[None, :]) % n
    return LatinSquare(p_arr[idx])


def build_latin(key: LatinKey) -> LatinSquare:
    """The 256x256 Latin square keyed by ``key``."""
    y0_p, y0_q = derive_seeds(key)
    return latin_from_permutations(
        keyed_permutation(y0_p, PermutationTag.P),
        keyed_permutation(y0_q, PermutationTag.Q),
    )


def is_latin(square: LatinSquare | np.ndarray) -> bool:
    """True iff every row and every column is a permutation of 0..n-1."""
    grid = square.grid if isinstance(square, LatinSquare) else np.asarray(square)
    if grid.ndim != 2 or grid.shape[0] != grid.shape[1]:
        return False
    expected = np.arange(grid.shape[0])
    return bool(
        np.all(np.sort(grid, axis=1) == expected)
        and np.all(np.sort(grid, axis=0) == expected[:, None])
    )
