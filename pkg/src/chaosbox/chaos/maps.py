"""Logistic map and piece-wise linear chaotic map (PWLCM).

All arithmetic is plain binary64 in the literal operation order of the map
equations, so trajectories are bit-identical across platforms. After every
step the raw value passes through ``guard`` to stay strictly inside (0, 1).
"""

import math

from pydantic import BaseModel, Field

GUARD_OFFSET = 0.123456789
GUARD_FALLBACK = 0.5000000001

LAMBDA_MIN = 3.57
LAMBDA_MAX = 4.0


def frac(v: float) -> float:
    """Fractional part ``v - floor(v)``, always in [0, 1)."""
    return v - math.floor(v)


def guard(v: float) -> float:
    """Remap a raw iterate into the open interval (0, 1).

    Values already strictly inside pass through untouched. Otherwise the value
    is shifted by ``GUARD_OFFSET`` and wrapped, and if that still lands on 0 the
    fixed fallback is used.
    """
    if 0.0 < v < 1.0:
        return v
    v = frac(v + GUARD_OFFSET)
    if 0.0 < v < 1.0:
        return v
    return GUARD_FALLBACK


def logistic(x: float, lam: float) -> float:
    """One guarded logistic iterate: lam * x * (1 - x)."""
    return guard(lam * x * (1.0 - x))


def pwlcm(y: float, p: float) -> float:
    """One guarded PWLCM iterate."""
    if 0.0 < y <= p:
        return guard(y / p)
    return guard((1.0 - y) / (1.0 - p))


class LogisticState(BaseModel, frozen=True):
    """Logistic map state; lam must lie in the chaotic regime (3.57, 4)."""

    x: float = Field(gt=0.0, lt=1.0)
    lam: float = Field(gt=LAMBDA_MIN, lt=LAMBDA_MAX)


class PwlcmState(BaseModel, frozen=True):
    y: float = Field(gt=0.0, lt=1.0)
    p: float = Field(gt=0.0, lt=1.0)


def logistic_step(s: LogisticState) -> LogisticState:
    return s.model_copy(update={"x": logistic(s.x, s.lam)})


def pwlcm_step(s: PwlcmState) -> PwlcmState:
    return s.model_copy(update={"y": pwlcm(s.y, s.p)})


class LogisticStream:
    """Mutable logistic trajectory for hot loops.

    Produces exactly the iterates ``logistic_step`` would, without building a
    model per step.
    """

    __slots__ = ("x", "lam")

    def __init__(self, state: LogisticState):
        self.x = state.x
        self.lam = state.lam

    def next(self) -> float:
        self.x = logistic(self.x, self.lam)
        return self.x

    def skip(self, n: int) -> None:
        x, lam = self.x, self.lam
        for _ in range(n):
            x = logistic(x, lam)
        self.x = x

    @property
    def state(self) -> LogisticState:
        return LogisticState(x=self.x, lam=self.lam)
