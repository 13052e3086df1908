"""Statistical analysis of plain and cipher images.

Correlation follows the sums form of Pearson's coefficient and is evaluated in
exact integer arithmetic up to the final division, so textbook cases such as
perfectly (anti-)correlated series come out as exactly +1 / -1.
"""

import math
from dataclasses import dataclass
from enum import StrEnum

import numpy as np

from .errors import ParameterError
from .models import GrayImage, MetricsReport

BINS = 256


class Direction(StrEnum):
    HORIZONTAL = "horizontal"
    VERTICAL = "vertical"
    DIAGONAL = "diagonal"


@dataclass(frozen=True, eq=False)
class PixelPairSeries:
    """Paired samples (x_i, y_i), i = 1..N."""

    xs: np.ndarray
    ys: np.ndarray

    def __post_init__(self) -> None:
        xs = np.asarray(self.xs, dtype=np.int64).ravel()
        ys = np.asarray(self.ys, dtype=np.int64).ravel()
        if xs.size != ys.size:
            raise ParameterError(f"series lengths differ: {xs.size} vs {ys.size}")
        object.__setattr__(self, "xs", xs)
        object.__setattr__(self, "ys", ys)

    @property
    def n(self) -> int:
        return int(self.xs.size)

    def is_degenerate(self) -> bool:
        """True if either side has zero variance."""
        return bool(np.all(self.xs == self.xs[0]) or np.all(self.ys == self.ys[0]))


# Correlation
def correlation(series: PixelPairSeries) -> float:
    """Correlation coefficient of the pairs.

    Zero variance on both sides gives 1.0 when the series are equal and 0.0
    otherwise; zero variance on one side gives 0.0.
    """
    n = series.n
    if n < 2:
        raise ParameterError(f"correlation needs at least 2 pairs, got {n}")

    x, y = series.xs, series.ys
    sx, sy = int(x.sum()), int(y.sum())
    sxy = int((x * y).sum())
    sxx, syy = int((x * x).sum()), int((y * y).sum())

    num = n * sxy - sx * sy
    vx = n * sxx - sx * sx
    vy = n * syy - sy * sy

    if vx == 0 or vy == 0:
        if vx == 0 and vy == 0 and np.array_equal(x, y):
            return 1.0
        return 0.0

    prod = vx * vy
    root = math.isqrt(prod)
    if root * root == prod:
        return num / root
    return num / math.sqrt(prod)


def adjacent_pairs(img: GrayImage, direction: Direction = Direction.HORIZONTAL) -> PixelPairSeries:
    """Every pixel paired with its right, lower or lower-right neighbour.

    Raises:
        ParameterError: If the image is too small for ``direction``.
    """
    p = img.pixels
    match direction:
        case Direction.HORIZONTAL:
            if img.width < 2:
                raise ParameterError("horizontal pairs need at least 2 columns")
            return PixelPairSeries(p[:, :-1], p[:, 1:])
        case Direction.VERTICAL:
            if img.height < 2:
                raise ParameterError("vertical pairs need at least 2 rows")
            return PixelPairSeries(p[:-1, :], p[1:, :])
        case Direction.DIAGONAL:
            if img.height < 2 or img.width < 2:
                raise ParameterError("diagonal pairs need at least 2 rows and 2 columns")
            return PixelPairSeries(p[:-1, :-1], p[1:, 1:])
    raise ParameterError(f"unknown direction {direction!r}")


def adjacent_correlation(img: GrayImage, direction: Direction = Direction.HORIZONTAL) -> float:
    """Correlation of every pixel with its neighbour in ``direction``."""
    return correlation(adjacent_pairs(img, direction))


def _require_same_shape(a: GrayImage, b: GrayImage) -> None:
    if a.pixels.shape != b.pixels.shape:
        raise ParameterError(
            f"image dimensions differ: {a.height}x{a.width} vs {b.height}x{b.width}"
        )


def cross_correlation(a: GrayImage, b: GrayImage) -> float:
    """Correlation of co-located pixels of two equally sized images."""
    _require_same_shape(a, b)
    return correlation(PixelPairSeries(a.pixels, b.pixels))


# Distribution
def histogram(img: GrayImage) -> np.ndarray:
    """Pixel counts per gray level, length 256."""
    return np.bincount(img.pixels.ravel(), minlength=BINS)


def chi_square(hist: np.ndarray, total: int | None = None) -> float:
    """Chi-square statistic of ``hist`` against the uniform distribution."""
    counts = np.asarray(hist, dtype=np.float64)
    total = int(counts.sum()) if total is None else total
    if total <= 0:
        raise ParameterError("histogram is empty")
    expected = total / BINS
    return float(np.sum((counts - expected) ** 2 / expected))


def entropy(img: GrayImage) -> float:
    """Shannon entropy in bits of the 256-bin pixel distribution."""
    counts = histogram(img)
    probs = counts[counts > 0] / img.size
    h = -float(np.sum(probs * np.log2(probs)))
    return min(8.0, max(0.0, h))


def npcr(c1: GrayImage, c2: GrayImage) -> float:
    """Percentage of positions at which two images differ."""
    _require_same_shape(c1, c2)
    return 100.0 * int(np.count_nonzero(c1.pixels != c2.pixels)) / c1.size


def _optional_correlation(img: GrayImage, direction: Direction) -> float | None:
    try:
        return adjacent_correlation(img, direction)
    except ParameterError:
        return None


def analyze(img: GrayImage, other: GrayImage | None = None) -> MetricsReport:
    """Full report for ``img``; with ``other`` also NPCR and cross-correlation."""
    hist = histogram(img)
    pairs = adjacent_pairs(img, Direction.HORIZONTAL)

    report = MetricsReport(
        pixel_count=img.size,
        entropy_bits=entropy(img),
        corr_adjacent=correlation(pairs),
        corr_vertical=_optional_correlation(img, Direction.VERTICAL),
        corr_diagonal=_optional_correlation(img, Direction.DIAGONAL),
        corr_degenerate=pairs.is_degenerate(),
        histogram=[int(c) for c in hist],
        chi_square=chi_square(hist, img.size),
    )
    if other is not None:
        report.npcr_percent = npcr(img, other)
        report.cross_correlation = cross_correlation(img, other)
    return report
