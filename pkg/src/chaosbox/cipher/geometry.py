"""Per-round geometry: two quarter turns, then a flip about the main diagonal."""

import numpy as np


def rot180(grid: np.ndarray) -> np.ndarray:
    """Two clockwise quarter turns."""
    return np.rot90(grid, 2)


def transpose(grid: np.ndarray) -> np.ndarray:
    """Flip about the main diagonal."""
    return grid.T


def scramble(grid: np.ndarray) -> np.ndarray:
    """transpose(rot180(grid)); an M x N grid becomes N x M."""
    return np.ascontiguousarray(transpose(rot180(grid)))


def unscramble(grid: np.ndarray) -> np.ndarray:
    """Inverse of ``scramble``: rot180(transpose(grid))."""
    return np.ascontiguousarray(rot180(transpose(grid)))
