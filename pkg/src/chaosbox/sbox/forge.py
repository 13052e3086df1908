"""Dynamic S-box generation by chaotic Fisher-Yates shuffling.

Each box starts as the ascending array 0..255. The PWLCM is burned in for
``n0`` steps, then ``zeta`` shuffle passes run; a pass walks k = 256 down to 2,
draws m in [1, k] from the next PWLCM iterate and swaps positions m and k
(1-based). The flat array is viewed as a 16x16 table, row-major.
"""

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import repeat

from ..chaos import extract_index, frac, guard, pwlcm
from ..errors import ParameterError
from ..logging import get_logger
from ..models import SBoxGenParams

logger = get_logger(__name__)

SBOX_SIZE = 256
SBOX_SIDE = 16


def is_bijective(table: bytes | bytearray) -> bool:
    """True if ``table`` is a permutation of 0..255."""
    return len(table) == SBOX_SIZE and len(set(table)) == SBOX_SIZE


def chaotic_shuffle(y0: float, p: float, n0: int, zeta: int) -> bytearray:
    """Shuffle 0..255 with PWLCM-driven Fisher-Yates passes.

    Args:
        y0: PWLCM seed in (0, 1).
        p: PWLCM control parameter in (0, 1).
        n0: Burn-in iterates discarded before the first pass.
        zeta: Number of passes; 0 returns the identity.

    Returns:
        The shuffled array, a permutation of 0..255.
    """
    s = bytearray(range(SBOX_SIZE))
    y = y0
    for _ in range(n0):
        y = pwlcm(y, p)

    for _ in range(zeta):
        for cnt in range(1, SBOX_SIZE):
            k = SBOX_SIZE - cnt + 1
            y = pwlcm(y, p)
            m = extract_index(y, k)
            s[m - 1], s[k - 1] = s[k - 1], s[m - 1]
    return s


@dataclass(frozen=True)
class SBox:
    """A bijective byte substitution viewed as a 16x16 table."""

    table: bytes

    def __post_init__(self) -> None:
        object.__setattr__(self, "table", bytes(self.table))
        if not is_bijective(self.table):
            raise ParameterError("S-box table is not a permutation of 0..255")

    @classmethod
    def identity(cls) -> "SBox":
        return cls(bytes(range(SBOX_SIZE)))

    def rows(self) -> list[bytes]:
        return [self.table[SBOX_SIDE * r : SBOX_SIDE * (r + 1)] for r in range(SBOX_SIDE)]


def lookup(box: SBox, l: int, m: int) -> int:
    """Entry at 1-based row ``l``, column ``m``."""
    if not (1 <= l <= SBOX_SIDE and 1 <= m <= SBOX_SIDE):
        raise IndexError(f"S-box index ({l}, {m}) outside 1..{SBOX_SIDE}")
    return box.table[SBOX_SIDE * (l - 1) + (m - 1)]


@dataclass(frozen=True)
class SBoxBank:
    """An ordered, immutable collection of S-boxes.

    ``params`` is None for banks loaded from a file, which does not record them.
    """

    boxes: tuple[SBox, ...]
    params: SBoxGenParams | None = None

    def __len__(self) -> int:
        return len(self.boxes)

    def __getitem__(self, index: int) -> SBox:
        return self.boxes[index]

    def box(self, k: int) -> SBox:
        """The k-th box, 1-based."""
        if not 1 <= k <= len(self.boxes):
            raise IndexError(f"box {k} outside 1..{len(self.boxes)}")
        return self.boxes[k - 1]


def generate_sbox(seed_y0: float, params: SBoxGenParams) -> SBox:
    """One S-box from a PWLCM seed, using ``params`` for p, n0 and zeta."""
    if not 0.0 < seed_y0 < 1.0:
        raise ParameterError(f"S-box seed must lie in (0, 1), got {seed_y0!r}")
    return SBox(bytes(chaotic_shuffle(seed_y0, params.p, params.n0, params.zeta)))


def box_seeds(params: SBoxGenParams) -> list[float]:
    """Seed of box j is frac(y0_base + (j - 1) * increment), guarded into (0, 1)."""
    return [
        guard(frac(params.y0_base + j * params.increment)) for j in range(params.count)
    ]


@lru_cache(maxsize=8)
def generate_bank(params: SBoxGenParams, workers: int = 1) -> SBoxBank:
    """Generate ``params.count`` boxes; ``workers > 1`` spreads them over processes.

    The result does not depend on ``workers``. Banks are memoised per
    parameter set.
    """
    started = time.perf_counter()
    seeds = box_seeds(params)

    if workers > 1 and params.count > 1:
        chunk = max(1, params.count // (workers * 4))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            boxes = tuple(pool.map(generate_sbox, seeds, repeat(params), chunksize=chunk))
    else:
        boxes = tuple(generate_sbox(seed, params) for seed in seeds)

    logger.info(
        "bank_generated",
        count=len(boxes),
        workers=workers,
        seconds=round(time.perf_counter() - started, 3),
    )
    return SBoxBank(boxes=boxes, params=params)
