"""Pydantic data models for chaosbox.

Key material and generation parameters are frozen models so they can be
hashed (bank memoisation) and never change under a running cipher.
"""

from dataclasses import dataclass
from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator

from .errors import ParameterError

LATIN_KEY_BYTES = 32


class SBoxGenParams(BaseModel):
    """Parameters for generating the dynamic S-box bank."""

    model_config = ConfigDict(frozen=True)

    y0_base: float = Field(default=0.41, gt=0.0, lt=1.0, description="PWLCM seed of the first box")
    p: float = Field(default=0.47, gt=0.0, lt=1.0, description="PWLCM control parameter")
    n0: int = Field(default=500, ge=0, description="Burn-in iterations before shuffling")
    zeta: int = Field(default=3, ge=0, description="Number of Fisher-Yates passes")
    increment: float = Field(default=0.000223, gt=0.0, description="Seed increment between boxes")
    count: int = Field(default=1000, ge=1, description="Number of boxes in the bank")


class LatinKey(BaseModel):
    """256-bit Latin square key, given as 64 hex characters (any case)."""

    model_config = ConfigDict(frozen=True)

    key: bytes = Field(min_length=LATIN_KEY_BYTES, max_length=LATIN_KEY_BYTES)

    @field_validator("key", mode="before")
    @classmethod
    def _parse_hex(cls, value: Any) -> Any:
        if isinstance(value, str):
            text = value.strip()
            if len(text) != 2 * LATIN_KEY_BYTES:
                raise ValueError(f"expected 64 hex characters, got {len(text)}")
            try:
                return bytes.fromhex(text)
            except ValueError as e:
                raise ValueError(f"not a hex string: {e}") from e
        return value

    @classmethod
    def from_hex(cls, text: str) -> "LatinKey":
        return cls(key=text)

    @property
    def hex(self) -> str:
        return self.key.hex().upper()

    def rotated(self, nbytes: int) -> "LatinKey":
        """Key rotated left by ``nbytes`` bytes (8 * nbytes bits)."""
        n = nbytes % LATIN_KEY_BYTES
        return LatinKey(key=self.key[n:] + self.key[:n])


class CipherKey(BaseModel):
    """The full secret of the image cipher."""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    x0: float = Field(gt=0.0, lt=1.0, description="Logistic map seed")
    lam: float = Field(alias="lambda", gt=3.57, lt=4.0, description="Logistic map parameter")
    beta: int = Field(ge=1, description="Number of rounds; more than two recommended")
    c0: int = Field(ge=0, le=255, description="Chaining seed byte C(0)")
    latin_key: LatinKey
    sbox_params: SBoxGenParams = Field(default_factory=SBoxGenParams)


class RoundKey(BaseModel):
    """Per-round variant of the master key components."""

    model_config = ConfigDict(frozen=True)

    r: int = Field(ge=1)
    x0: float = Field(gt=0.0, lt=1.0)
    c0: int = Field(ge=0, le=255)
    latin_key: LatinKey


@dataclass(frozen=True, eq=False)
class GrayImage:
    """An 8-bit grayscale image, ``pixels`` indexed [row, column].

    Height is M (rows), width is N (columns). The pixel array is a private,
    read-only copy.
    """

    pixels: np.ndarray

    def __post_init__(self) -> None:
        arr = np.asarray(self.pixels)
        if arr.ndim != 2:
            raise ParameterError(f"image must be 2-D, got {arr.ndim} dimension(s)")
        if arr.size == 0:
            raise ParameterError("image is empty")
        if arr.dtype != np.uint8:
            if not np.issubdtype(arr.dtype, np.integer):
                raise ParameterError(f"pixels must be integers, got {arr.dtype}")
            if arr.min() < 0 or arr.max() > 255:
                raise ParameterError("pixel values must lie in [0, 255]")
        arr = np.array(arr, dtype=np.uint8, copy=True)
        arr.setflags(write=False)
        object.__setattr__(self, "pixels", arr)

    @classmethod
    def from_flat(cls, flat: bytes | np.ndarray, height: int, width: int) -> "GrayImage":
        if isinstance(flat, (bytes, bytearray, memoryview)):
            data = np.frombuffer(bytes(flat), dtype=np.uint8)
        else:
            data = np.asarray(flat).ravel()
        if height < 1 or width < 1 or data.size != height * width:
            raise ParameterError(
                f"{data.size} pixels do not fill a {height}x{width} image"
            )
        return cls(data.reshape(height, width))

    @property
    def height(self) -> int:
        return int(self.pixels.shape[0])

    @property
    def width(self) -> int:
        return int(self.pixels.shape[1])

    @property
    def size(self) -> int:
        return int(self.pixels.size)

    def flat(self) -> bytes:
        """Row-major pixel bytes."""
        return self.pixels.tobytes()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GrayImage):
            return NotImplemented
        return np.array_equal(self.pixels, other.pixels)

    def __hash__(self) -> int:
        return hash((self.pixels.shape, self.pixels.tobytes()))


class MetricsReport(BaseModel):
    """Statistics of one image, optionally compared against a second image."""

    pixel_count: int = Field(ge=1)
    entropy_bits: float = Field(ge=0.0, le=8.0)
    corr_adjacent: float = Field(description="Horizontal adjacent-pixel correlation")
    corr_vertical: float | None = None
    corr_diagonal: float | None = None
    corr_degenerate: bool = Field(
        default=False, description="Horizontal correlation came from a zero-variance series"
    )
    histogram: list[int] = Field(min_length=256, max_length=256)
    chi_square: float = Field(ge=0.0)

    # Present only when a second image was given
    npcr_percent: float | None = Field(default=None, ge=0.0, le=100.0)
    cross_correlation: float | None = None

    def to_lines(self) -> list[str]:
        """Machine-readable key=value lines."""

        def fmt(value: float | None, digits: int) -> str:
            return "nan" if value is None else f"{value:.{digits}f}"

        lines = [
            f"pixels={self.pixel_count}",
            f"entropy={self.entropy_bits:.4f}",
            f"corr_horizontal={self.corr_adjacent:.6f}",
            f"corr_vertical={fmt(self.corr_vertical, 6)}",
            f"corr_diagonal={fmt(self.corr_diagonal, 6)}",
            f"corr_degenerate={str(self.corr_degenerate).lower()}",
            f"chi_square={self.chi_square:.4f}",
        ]
        if self.npcr_percent is not None:
            lines.append(f"npcr={self.npcr_percent:.4f}")
        if self.cross_correlation is not None:
            lines.append(f"cross_correlation={self.cross_correlation:.6f}")
        lines.append("histogram=" + ",".join(str(c) for c in self.histogram))
        return lines
