"""Chaotic maps and index extraction."""

from .digits import extract_digits, extract_index
from .maps import (
    LogisticState,
    LogisticStream,
    PwlcmState,
    frac,
    guard,
    logistic,
    logistic_step,
    pwlcm,
    pwlcm_step,
)

__all__ = [
    "LogisticState",
    "LogisticStream",
    "PwlcmState",
    "extract_digits",
    "extract_index",
    "frac",
    "guard",
    "logistic",
    "logistic_step",
    "pwlcm",
    "pwlcm_step",
]
