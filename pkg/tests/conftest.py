"""Shared fixtures for the chaosbox test suite."""

from collections.abc import Iterator

import numpy as np
import pytest
import structlog

from chaosbox.logging import configure_default_logging
from chaosbox.models import CipherKey, GrayImage, LatinKey, SBoxGenParams
from chaosbox.sbox import SBoxBank, generate_bank

SAMPLE_KEY_HEX = "12A34F56E78D90C31B72AF4835DC0981237654CD185A3FEB01CAE7259018FD14"

# Cheap bank for everything that does not need the production parameters
SMALL_BANK_PARAMS = SBoxGenParams(count=16, n0=50, zeta=3)


@pytest.fixture(autouse=True)
def _reset_structlog() -> Iterator[None]:
    yield
    structlog.reset_defaults()
    configure_default_logging()


@pytest.fixture(scope="session")
def small_bank() -> SBoxBank:
    return generate_bank(SMALL_BANK_PARAMS)


@pytest.fixture(scope="session")
def production_bank() -> SBoxBank:
    return generate_bank(SBoxGenParams())


@pytest.fixture
def sample_latin_key() -> LatinKey:
    return LatinKey.from_hex(SAMPLE_KEY_HEX)


@pytest.fixture
def sample_key(sample_latin_key: LatinKey) -> CipherKey:
    return CipherKey(x0=0.23456, lam=3.99, beta=4, c0=123, latin_key=sample_latin_key)


@pytest.fixture
def small_key(sample_latin_key: LatinKey) -> CipherKey:
    return CipherKey(
        x0=0.23456,
        lam=3.99,
        beta=2,
        c0=123,
        latin_key=sample_latin_key,
        sbox_params=SMALL_BANK_PARAMS,
    )


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240607)


def random_image(rng: np.random.Generator, height: int, width: int) -> GrayImage:
    return GrayImage(rng.integers(0, 256, size=(height, width), dtype=np.uint8))
