"""Affine-power-affine (APA) byte substitution.

S(x) = A(P(A(x))) where P is inversion in GF(2^8) and A is the affine map

    b = M * (x_0 .. x_7)^T  xor  (1, 1, 0, 0, 0, 1, 1, 0)^T

over GF(2). How the byte bits map onto x_0..x_7 is not fixed by the published
description, so every candidate convention is scored against the published
table and the best one becomes the cipher's substitution (see
``reconcile_convention``).
"""

from collections import Counter
from dataclasses import dataclass
from enum import StrEnum
from functools import cache

from pydantic import BaseModel, Field

from ..logging import get_logger
from .gf256 import gf_inv

logger = get_logger(__name__)

# Rows of M; bit j of each mask selects x_j
AFFINE_ROWS: tuple[int, ...] = tuple(
    int("".join(reversed(row)), 2)
    for row in (
        "10001111",
        "11000111",
        "11100011",
        "11110001",
        "11111000",
        "01111100",
        "00111110",
        "00011111",
    )
)
AFFINE_CONSTANT = (1, 1, 0, 0, 0, 1, 1, 0)

# The published APA S-box, row-major. It is not a permutation: 0x80 and 0xAF
# appear twice, 0xA0 and 0xA5 never.
PUBLISHED_APA_TABLE: bytes = bytes([
    0x8C, 0x90, 0xD9, 0xC1, 0x46, 0x63, 0x53, 0xF1, 0x61, 0x32, 0x15, 0x3E, 0x26, 0x9A, 0x97, 0x2E,
    0xD8, 0x80, 0x99, 0x9E, 0xC0, 0x95, 0x67, 0xB7, 0x6D, 0xE0, 0xF3, 0x28, 0x20, 0x86, 0xB6, 0xEF,
    0x4B, 0x31, 0xB5, 0xD2, 0x13, 0x39, 0x6C, 0xAF, 0x03, 0x3F, 0x4D, 0x34, 0xF9, 0xEC, 0x8E, 0x17,
    0xC5, 0x25, 0x3C, 0x89, 0xC9, 0x2B, 0x3A, 0xC2, 0x6E, 0xC6, 0xAA, 0x91, 0x49, 0x18, 0x93, 0xDE,
    0x0D, 0x6F, 0x65, 0xAF, 0x92, 0xA7, 0xF6, 0xA6, 0x40, 0xB9, 0xED, 0xB0, 0xC3, 0xD7, 0x7D, 0x7C,
    0x54, 0x59, 0xDF, 0x2F, 0xDA, 0xA4, 0x05, 0x94, 0x9B, 0x72, 0x01, 0x74, 0xA9, 0xF7, 0x81, 0xE9,
    0x1F, 0xB3, 0xEB, 0xCF, 0xE8, 0x47, 0x52, 0x36, 0xBC, 0x16, 0x29, 0x76, 0x12, 0xFA, 0x9C, 0x8A,
    0x5B, 0xA8, 0x43, 0xD1, 0x79, 0x85, 0x42, 0x82, 0xC7, 0xA1, 0x78, 0x4F, 0xE2, 0x35, 0xEA, 0xAD,
    0xDC, 0x0E, 0xD3, 0x2D, 0x6A, 0x5A, 0x44, 0xAB, 0xC8, 0xE5, 0x37, 0x0A, 0x6B, 0x51, 0xE3, 0x14,
    0xCD, 0x56, 0x4A, 0xD6, 0x08, 0x83, 0xBB, 0x33, 0xE1, 0x30, 0x4E, 0x24, 0x5E, 0xB4, 0x00, 0x48,
    0x5F, 0x22, 0x0B, 0x50, 0x3D, 0x80, 0x1A, 0xBF, 0xCC, 0xFF, 0x64, 0x87, 0x1B, 0xC4, 0x07, 0xF8,
    0x0C, 0xD4, 0xAC, 0x02, 0x10, 0x84, 0x7E, 0x69, 0x70, 0x60, 0x55, 0x2A, 0x21, 0x57, 0x23, 0x66,
    0x62, 0x73, 0xCB, 0x41, 0x58, 0x71, 0x77, 0x1C, 0x7B, 0x8F, 0x9F, 0x9D, 0xA3, 0xB1, 0x7F, 0x5D,
    0xF4, 0x06, 0xAE, 0xD5, 0xE6, 0x3B, 0xBA, 0xFE, 0x96, 0xE7, 0x0F, 0x45, 0x2C, 0xF0, 0xFC, 0xBD,
    0xE4, 0x98, 0xFB, 0xCA, 0x11, 0xF5, 0xDD, 0x7A, 0x5C, 0xFD, 0xCE, 0x88, 0xD0, 0x68, 0x8D, 0x4C,
    0xBE, 0x04, 0x38, 0x1D, 0x1E, 0xF2, 0x27, 0x19, 0xB2, 0x75, 0xA2, 0xEE, 0xDB, 0xB8, 0x09, 0x8B,
])


class BitOrder(StrEnum):
    """Which end of the byte holds x_0."""

    LSB = "lsb"
    MSB = "msb"


class Composition(StrEnum):
    """Reading direction of ``A o P o A``."""

    RIGHT_TO_LEFT = "right_to_left"
    LEFT_TO_RIGHT = "left_to_right"


class Provenance(StrEnum):
    COMPUTED = "computed"
    PUBLISHED = "published"


class Convention(BaseModel, frozen=True):
    """A bit-order / composition-order pair for evaluating the APA map."""

    bit_order: BitOrder = BitOrder.LSB
    composition: Composition = Composition.RIGHT_TO_LEFT

    def __str__(self) -> str:
        return f"{self.bit_order}/{self.composition}"


DEFAULT_CONVENTION = Convention()

CANDIDATE_CONVENTIONS: tuple[Convention, ...] = tuple(
    Convention(bit_order=b, composition=c) for b in BitOrder for c in Composition
)


def _reverse_bits(a: int) -> int:
    return int(f"{a:08b}"[::-1], 2)


_REVERSED = tuple(_reverse_bits(a) for a in range(256))


def _affine_lsb(a: int) -> int:
    out = 0
    for i, row in enumerate(AFFINE_ROWS):
        bit = (row & a).bit_count() & 1
        out |= (bit ^ AFFINE_CONSTANT[i]) << i
    return out


def affine(a: int, bit_order: BitOrder = BitOrder.LSB) -> int:
    """Apply the affine map A to a byte under the given bit order."""
    if bit_order is BitOrder.LSB:
        return _affine_lsb(a)
    return _REVERSED[_affine_lsb(_REVERSED[a])]


def _apa_value(a: int, convention: Convention) -> int:
    stages = (
        lambda v: affine(v, convention.bit_order),
        gf_inv,
        lambda v: affine(v, convention.bit_order),
    )
    if convention.composition is Composition.RIGHT_TO_LEFT:
        stages = tuple(reversed(stages))
    for stage in stages:
        a = stage(a)
    return a


@dataclass(frozen=True)
class ApaTable:
    """A 256-entry byte substitution table; index is the input byte."""

    entries: bytes
    provenance: Provenance

    def __post_init__(self) -> None:
        if len(self.entries) != 256:
            raise ValueError(f"APA table needs 256 entries, got {len(self.entries)}")

    def __getitem__(self, a: int) -> int:
        return self.entries[a]

    def is_bijective(self) -> bool:
        return len(set(self.entries)) == 256

    def inverse(self) -> "ApaTable":
        return ApaTable(inverse_table(self.entries), self.provenance)

    def fixed_points(self) -> list[int]:
        return [a for a, s in enumerate(self.entries) if a == s]

    def hex_rows(self) -> list[str]:
        """16 lines of 16 uppercase hex bytes, row-major."""
        return [
            " ".join(f"{v:02X}" for v in self.entries[16 * r : 16 * r + 16])
            for r in range(16)
        ]


def inverse_table(entries: bytes) -> bytes:
    """Inverse of a bijective substitution table."""
    if len(set(entries)) != len(entries):
        raise ValueError("table is not a bijection")
    inv = bytearray(len(entries))
    for a, s in enumerate(entries):
        inv[s] = a
    return bytes(inv)


@cache
def computed_table(convention: Convention = DEFAULT_CONVENTION) -> ApaTable:
    """The APA table evaluated under ``convention``."""
    return ApaTable(
        bytes(_apa_value(a, convention) for a in range(256)),
        Provenance.COMPUTED,
    )


PUBLISHED_TABLE = ApaTable(PUBLISHED_APA_TABLE, Provenance.PUBLISHED)


class ConventionScore(BaseModel):
    convention: Convention
    agreement: int = Field(ge=0, le=256, description="Cells equal to the published table")


class Disagreement(BaseModel):
    row: int = Field(ge=0, le=15)
    col: int = Field(ge=0, le=15)
    published: int
    computed: int


class ConventionReport(BaseModel):
    """Outcome of scoring every candidate convention against the published table."""

    scores: list[ConventionScore]
    selected: Convention
    disagreements: list[Disagreement] = Field(
        description="Cells where the selected computed table differs from the published one"
    )
    duplicated_values: list[int] = Field(description="Bytes the published table repeats")
    missing_values: list[int] = Field(description="Bytes the published table never lists")
    fixed_points: int = Field(description="Fixed points of the selected computed table")

    @property
    def agreement(self) -> int:
        return next(s.agreement for s in self.scores if s.convention == self.selected)

    def to_lines(self) -> list[str]:
        lines = [f"selected={self.selected}", f"agreement={self.agreement}"]
        lines += [f"score[{s.convention}]={s.agreement}" for s in self.scores]
        lines.append("duplicated=" + ",".join(f"{v:02X}" for v in self.duplicated_values))
        lines.append("missing=" + ",".join(f"{v:02X}" for v in self.missing_values))
        lines.append(f"fixed_points={self.fixed_points}")
        lines += [
            f"disagree[{d.row:X},{d.col:X}]=published:{d.published:02X} computed:{d.computed:02X}"
            for d in self.disagreements
        ]
        return lines


def reconcile_convention(published: ApaTable = PUBLISHED_TABLE) -> ConventionReport:
    """Score all candidate conventions and pick the one agreeing most with ``published``.

    The default convention is kept unless another scores strictly higher.
    """
    scores = [
        ConventionScore(
            convention=c,
            agreement=sum(
                p == q for p, q in zip(published.entries, computed_table(c).entries)
            ),
        )
        for c in CANDIDATE_CONVENTIONS
    ]

    best = next(s for s in scores if s.convention == DEFAULT_CONVENTION)
    for score in scores:
        if score.agreement > best.agreement:
            best = score

    table = computed_table(best.convention)
    counts = Counter(published.entries)
    report = ConventionReport(
        scores=scores,
        selected=best.convention,
        disagreements=[
            Disagreement(row=a // 16, col=a % 16, published=p, computed=q)
            for a, (p, q) in enumerate(zip(published.entries, table.entries))
            if p != q
        ],
        duplicated_values=sorted(v for v, n in counts.items() if n > 1),
        missing_values=sorted(set(range(256)) - set(counts)),
        fixed_points=len(table.fixed_points()),
    )

    logger.debug(
        "apa_convention_selected",
        convention=str(best.convention),
        agreement=best.agreement,
        disagreements=len(report.disagreements),
    )
    return report


@cache
def selected_convention() -> Convention:
    """The convention the cipher uses, fixed once by reconciliation."""
    return reconcile_convention().selected


def apa_table() -> ApaTable:
    """The authoritative (computed, reconciled) APA table."""
    return computed_table(selected_convention())


def apa(a: int) -> int:
    """Affine-power-affine substitution of one byte under the reconciled convention."""
    return apa_table()[a]
