"""Synthetic test images.

``black`` and ``gray_strips`` are the two standard plain images that need no
external file. Both are deterministic, so their statistics can be pinned.
"""

from collections.abc import Callable

import numpy as np

from .errors import ParameterError
from .models import GrayImage

DEFAULT_SIDE = 256
STRIP_LEVELS = 21


def black(height: int = DEFAULT_SIDE, width: int = DEFAULT_SIDE) -> GrayImage:
    """An all-zero image."""
    if height < 1 or width < 1:
        raise ParameterError(f"image must be at least 1x1, got {height}x{width}")
    return GrayImage(np.zeros((height, width), dtype=np.uint8))


def gray_strips(
    height: int = DEFAULT_SIDE,
    width: int = DEFAULT_SIDE,
    levels: int = STRIP_LEVELS,
) -> GrayImage:
    """Vertical strips of evenly spaced gray levels, darkest on the left.

    Column ``c`` belongs to strip ``c * levels // width``; strip ``s`` has the
    value ``s * 255 / (levels - 1)`` rounded half up.

    Args:
        height: Number of rows.
        width: Number of columns; must be at least ``levels``.
        levels: Number of strips, 2..256.

    Returns:
        The strip image.
    """
    if not 2 <= levels <= 256:
        raise ParameterError(f"levels must lie in 2..256, got {levels}")
    if height < 1 or width < levels:
        raise ParameterError(f"{height}x{width} image cannot hold {levels} strips")

    strip = np.arange(width, dtype=np.int64) * levels // width
    values = (strip * 255 * 2 + (levels - 1)) // (2 * (levels - 1))
    return GrayImage(np.tile(values.astype(np.uint8), (height, 1)))


SAMPLES: dict[str, Callable[..., GrayImage]] = {
    "black": black,
    "gray-strips": gray_strips,
}


def sample(name: str, height: int = DEFAULT_SIDE, width: int = DEFAULT_SIDE) -> GrayImage:
    """Build a sample image by name (see ``SAMPLES``)."""
    try:
        factory = SAMPLES[name]
    except KeyError:
        raise ParameterError(
            f"unknown sample {name!r}, expected one of {', '.join(SAMPLES)}"
        ) from None
    return factory(height, width)
