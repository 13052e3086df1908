"""Cipher-image statistics."""

import numpy as np
import pytest

from conftest import random_image
from chaosbox.errors import ParameterError
from chaosbox.metrics import (
    Direction,
    PixelPairSeries,
    adjacent_correlation,
    analyze,
    chi_square,
    correlation,
    cross_correlation,
    entropy,
    histogram,
    npcr,
)
from chaosbox.models import GrayImage


def constant(value: int, height: int = 16, width: int = 16) -> GrayImage:
    return GrayImage(np.full((height, width), value, dtype=np.uint8))


def checkerboard(n: int = 16) -> GrayImage:
    i, j = np.indices((n, n))
    return GrayImage(((i + j) % 2 * 255).astype(np.uint8))


class TestCorrelation:
    def test_two_point_positive(self):
        assert correlation(PixelPairSeries(np.array([0, 2]), np.array([1, 3]))) == 1.0

    def test_two_point_negative(self):
        assert correlation(PixelPairSeries(np.array([0, 2]), np.array([3, 1]))) == -1.0

    def test_constant_with_itself(self):
        xs = np.full(10, 7)
        assert correlation(PixelPairSeries(xs, xs)) == 1.0

    def test_both_constant_unequal(self):
        assert correlation(PixelPairSeries(np.full(10, 3), np.full(10, 5))) == 0.0

    def test_one_side_constant(self):
        assert correlation(PixelPairSeries(np.full(4, 3), np.array([1, 2, 3, 4]))) == 0.0

    def test_needs_two_pairs(self):
        with pytest.raises(ParameterError):
            correlation(PixelPairSeries(np.array([1]), np.array([2])))

    def test_length_mismatch(self):
        with pytest.raises(ParameterError):
            PixelPairSeries(np.array([1, 2, 3]), np.array([1, 2]))

    def test_bounded_and_shift_invariant(self, rng):
        xs = rng.integers(0, 200, size=500)
        ys = rng.integers(0, 200, size=500)
        rho = correlation(PixelPairSeries(xs, ys))
        assert -1.0 <= rho <= 1.0
        assert correlation(PixelPairSeries(xs + 50, ys + 50)) == pytest.approx(rho)


class TestAdjacentCorrelation:
    def test_constant(self):
        assert adjacent_correlation(constant(0)) == 1.0

    def test_ramp(self):
        ramp = GrayImage(np.tile(np.arange(256, dtype=np.uint8), (8, 1)))
        assert adjacent_correlation(ramp) > 0.99

    def test_checkerboard(self):
        board = checkerboard()
        for direction in (Direction.HORIZONTAL, Direction.VERTICAL):
            assert adjacent_correlation(board, direction) == -1.0
        assert adjacent_correlation(board, Direction.DIAGONAL) == 1.0

    def test_single_column(self):
        with pytest.raises(ParameterError):
            adjacent_correlation(constant(0, 5, 1))

    def test_single_row_vertical(self):
        with pytest.raises(ParameterError):
            adjacent_correlation(constant(0, 1, 5), Direction.VERTICAL)

    def test_cross_correlation(self, rng):
        img = random_image(rng, 8, 8)
        assert cross_correlation(img, img) == pytest.approx(1.0)
        with pytest.raises(ParameterError):
            cross_correlation(img, random_image(rng, 4, 4))


class TestEntropy:
    def test_constant(self):
        assert entropy(constant(0)) == 0.0

    def test_uniform(self):
        assert entropy(GrayImage(np.arange(256, dtype=np.uint8).reshape(16, 16))) == 8.0

    def test_two_values(self):
        assert entropy(checkerboard()) == 1.0

    def test_permutation_invariant(self, rng):
        img = random_image(rng, 12, 12)
        shuffled = GrayImage(rng.permutation(img.pixels.ravel()).reshape(12, 12))
        assert entropy(shuffled) == pytest.approx(entropy(img))


class TestNpcr:
    def test_identical(self, rng):
        img = random_image(rng, 8, 8)
        assert npcr(img, img) == 0.0

    def test_all_different(self):
        assert npcr(constant(0), constant(1)) == 100.0

    def test_single_pixel(self):
        a = constant(0, 256, 256)
        changed = a.pixels.copy()
        changed[100, 7] = 1
        assert npcr(a, GrayImage(changed)) == pytest.approx(100 / 65536)

    def test_symmetric(self, rng):
        a, b = random_image(rng, 8, 8), random_image(rng, 8, 8)
        assert npcr(a, b) == npcr(b, a)

    def test_dimension_mismatch(self):
        with pytest.raises(ParameterError):
            npcr(constant(0, 4, 4), constant(0, 4, 5))


class TestHistogram:
    def test_counts_sum(self, rng):
        img = random_image(rng, 9, 11)
        hist = histogram(img)
        assert hist.shape == (256,)
        assert int(hist.sum()) == img.size

    def test_uniform_chi_square(self):
        assert chi_square(np.full(256, 4)) == 0.0

    def test_constant_chi_square(self):
        total = 256
        expected = (total - total / 256) ** 2 / (total / 256) + 255 * (total / 256)
        assert chi_square(histogram(constant(9)), total) == pytest.approx(expected)

    def test_empty_histogram(self):
        with pytest.raises(ParameterError):
            chi_square(np.zeros(256))


class TestAnalyze:
    def test_single_image(self):
        report = analyze(constant(0))
        assert report.pixel_count == 256
        assert report.entropy_bits == 0.0
        assert report.corr_adjacent == 1.0
        assert report.corr_degenerate
        assert report.histogram[0] == 256
        assert report.npcr_percent is None
        assert report.cross_correlation is None

    def test_pair(self, rng):
        img = random_image(rng, 8, 8)
        report = analyze(img, img)
        assert report.npcr_percent == 0.0
        assert report.cross_correlation == pytest.approx(1.0)

    def test_one_row_has_no_vertical(self):
        report = analyze(GrayImage(np.arange(8, dtype=np.uint8).reshape(1, 8)))
        assert report.corr_vertical is None
        assert report.corr_diagonal is None

    def test_lines(self):
        lines = analyze(constant(0), constant(0)).to_lines()
        assert "pixels=256" in lines
        assert "entropy=0.0000" in lines
        assert "corr_degenerate=true" in lines
        assert "npcr=0.0000" in lines
        assert lines[-1].startswith("histogram=256,0,")
