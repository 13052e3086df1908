"""Binary PGM (P5) reading and writing, 8-bit only.

The writer always emits the canonical header ``P5\\n<w> <h>\\n255\\n`` so
output is byte-stable. The reader accepts any whitespace between header
tokens and ``#`` comments running to the end of a line.
"""

from .errors import BadMagicError, ImageFormatError, TruncatedPayloadError, UnsupportedDepthError
from .models import GrayImage

MAGIC = b"P5"
MAXVAL = 255
_WHITESPACE = b" \t\n\r\x0b\x0c"


def _next_token(data: bytes, pos: int) -> tuple[bytes, int]:
    """Next header token starting at ``pos`` and the index just past it."""
    n = len(data)
    while pos < n:
        if data[pos] in _WHITESPACE:
            pos += 1
        elif data[pos] == ord("#"):
            while pos < n and data[pos] not in b"\r\n":
                pos += 1
        else:
            break
    start = pos
    while pos < n and data[pos] not in _WHITESPACE and data[pos] != ord("#"):
        pos += 1
    if start == pos:
        raise ImageFormatError("PGM header ended early")
    return data[start:pos], pos


def _positive_int(token: bytes, what: str) -> int:
    if not token.isdigit():
        raise ImageFormatError(f"PGM {what} is not a number: {token!r}")
    value = int(token)
    if value < 1:
        raise ImageFormatError(f"PGM {what} must be positive, got {value}")
    return value


def read_pgm(data: bytes) -> GrayImage:
    """Decode a binary 8-bit PGM.

    Args:
        data: File contents, header and raster.

    Returns:
        The image, ``height`` x ``width`` as declared in the header.

    Raises:
        BadMagicError: The file does not start with ``P5``.
        UnsupportedDepthError: maxval is not 255.
        TruncatedPayloadError: The raster is shorter than the header promises.
        ImageFormatError: Malformed header or trailing bytes after the raster.
    """
    if not data.startswith(MAGIC):
        raise BadMagicError(f"not a binary PGM (magic {data[:2]!r})")

    magic, pos = _next_token(data, 0)
    if magic != MAGIC:
        raise BadMagicError(f"not a binary PGM (magic {magic!r})")
    width_tok, pos = _next_token(data, pos)
    height_tok, pos = _next_token(data, pos)
    maxval_tok, pos = _next_token(data, pos)

    width = _positive_int(width_tok, "width")
    height = _positive_int(height_tok, "height")
    maxval = _positive_int(maxval_tok, "maxval")
    if maxval != MAXVAL:
        raise UnsupportedDepthError(f"maxval {maxval} not supported, only {MAXVAL}")

    # Exactly one whitespace byte separates the header from the raster
    if pos >= len(data) or data[pos] not in _WHITESPACE:
        raise TruncatedPayloadError("PGM raster missing")
    payload = data[pos + 1 :]

    expected = width * height
    if len(payload) < expected:
        raise TruncatedPayloadError(f"PGM raster has {len(payload)} bytes, expected {expected}")
    if len(payload) > expected:
        raise ImageFormatError(f"PGM raster has {len(payload) - expected} trailing bytes")
    return GrayImage.from_flat(payload, height, width)


def write_pgm(img: GrayImage) -> bytes:
    """Encode ``img`` with the canonical header."""
    header = f"P5\n{img.width} {img.height}\n{MAXVAL}\n".encode("ascii")
    return header + img.flat()


def from_raw(data: bytes, width: int, height: int) -> GrayImage:
    """Adopt ``data`` as a row-major ``height`` x ``width`` image."""
    return GrayImage.from_flat(data, height, width)
