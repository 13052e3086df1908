"""Multi-round chaotic substitution cipher.

Per pixel i (1-based, row-major) a round computes

    C(i) = C(i-1) xor P(i) xor PHI xor L(q),    q = (i mod 65536) + 1

where PHI is the APA image of an S-box entry chosen by the digits of the next
logistic iterate, and L is the round's keyed Latin square. After each pixel
the logistic map skips (C(i) mod 4) + 1 iterates. The finished grid is turned
by 180 degrees and transposed.

Decryption regenerates the same keystream: the skips depend only on the
ciphertext, which the decryptor holds.
"""

import time
from functools import lru_cache

import numpy as np

from ..chaos import LogisticState, LogisticStream, extract_digits, frac, guard, logistic
from ..errors import ParameterError
from ..field import apa_table
from ..latin import build_latin
from ..logging import get_logger
from ..models import CipherKey, GrayImage, RoundKey
from ..sbox import SBoxBank, lookup
from .geometry import scramble, unscramble

logger = get_logger(__name__)

ROUND_X0_STEP = 0.054321
ROUND_C0_STEP = 97
LATIN_CELLS = 256 * 256


# Keys and keystream
def round_key(master: CipherKey, r: int) -> RoundKey:
    """Key components for round ``r`` (1-based).

    x0_r = frac(x0 + r * 0.054321), c0_r = (c0 + 97 r) mod 256, and the Latin
    key rotated left by r bytes.
    """
    if not 1 <= r <= master.beta:
        raise ParameterError(f"round {r} outside 1..{master.beta}")
    return RoundKey(
        r=r,
        x0=guard(frac(master.x0 + r * ROUND_X0_STEP)),
        c0=(master.c0 + ROUND_C0_STEP * r) % 256,
        latin_key=master.latin_key.rotated(r),
    )


def substituent_for(x: float, bank: SBoxBank) -> int:
    """PHI for a logistic iterate ``x``: APA of box k at (l, m).

    k = a1 mod |bank| + 1 (|bank| is 1000 for a production bank),
    l = a2 mod 16 + 1, m = a3 mod 16 + 1.
    """
    a1, a2, a3 = extract_digits(x)
    box = bank.box(a1 % len(bank) + 1)
    return apa_table()[lookup(box, a2 % 16 + 1, a3 % 16 + 1)]


def select_substituent(ls: LogisticState, bank: SBoxBank) -> tuple[int, LogisticState]:
    """Advance the logistic map once and derive PHI from the new iterate."""
    x = logistic(ls.x, ls.lam)
    return substituent_for(x, bank), ls.model_copy(update={"x": x})


# Rounds
@lru_cache(maxsize=4)
def _substituted(bank: SBoxBank) -> tuple[bytes, ...]:
    # Every box composed with the APA table
    table = apa_table().entries
    return tuple(box.table.translate(table) for box in bank.boxes)


def _chain(
    data: bytes,
    c0: int,
    latin: bytes,
    bank: SBoxBank,
    stream: LogisticStream,
    *,
    decrypt: bool,
) -> bytes:
    subs = _substituted(bank)
    nboxes = len(subs)
    x, lam = stream.x, stream.lam
    out = bytearray(len(data))
    prev = c0

    for i, value in enumerate(data, start=1):
        x = logistic(x, lam)
        a1, a2, a3 = extract_digits(x)
        phi = subs[a1 % nboxes][16 * (a2 % 16) + a3 % 16]
        mixed = prev ^ value ^ phi ^ latin[i % LATIN_CELLS]
        cipher = value if decrypt else mixed
        out[i - 1] = mixed
        for _ in range(cipher % 4 + 1):
            x = logistic(x, lam)
        prev = cipher

    stream.x = x
    return bytes(out)


def encrypt_round(
    img: GrayImage, rk: RoundKey, bank: SBoxBank, ls: LogisticState
) -> tuple[GrayImage, LogisticState]:
    """One encryption round followed by the per-round geometry.

    Args:
        img: Plain image of this round, M x N.
        rk: Round key; supplies c0 and the Latin key.
        bank: S-box bank the substituents are drawn from.
        ls: Logistic state the keystream starts from.

    Returns:
        The N x M cipher image and the logistic state after the last pixel.
    """
    latin = build_latin(rk.latin_key)
    stream = LogisticStream(ls)
    cipher = _chain(img.flat(), rk.c0, latin.flat(), bank, stream, decrypt=False)
    grid = np.frombuffer(cipher, dtype=np.uint8).reshape(img.height, img.width)
    return GrayImage(scramble(grid)), stream.state


def decrypt_round(
    img: GrayImage, rk: RoundKey, bank: SBoxBank, ls: LogisticState
) -> tuple[GrayImage, LogisticState]:
    """Inverse of ``encrypt_round``; returns the same final logistic state."""
    latin = build_latin(rk.latin_key)
    stream = LogisticStream(ls)
    grid = unscramble(img.pixels)
    plain = _chain(grid.tobytes(), rk.c0, latin.flat(), bank, stream, decrypt=True)
    return GrayImage.from_flat(plain, grid.shape[0], grid.shape[1]), stream.state


def encrypt(img: GrayImage, key: CipherKey, bank: SBoxBank) -> GrayImage:
    """Run all ``key.beta`` rounds; each starts a fresh logistic state from its round key."""
    started = time.perf_counter()
    for r in range(1, key.beta + 1):
        rk = round_key(key, r)
        img, _ = encrypt_round(img, rk, bank, LogisticState(x=rk.x0, lam=key.lam))
        logger.debug("round_encrypted", round=r, height=img.height, width=img.width)
    logger.info(
        "image_encrypted",
        rounds=key.beta,
        pixels=img.size,
        seconds=round(time.perf_counter() - started, 3),
    )
    return img


def decrypt(img: GrayImage, key: CipherKey, bank: SBoxBank) -> GrayImage:
    """Undo ``encrypt``, last round first."""
    started = time.perf_counter()
    for r in range(key.beta, 0, -1):
        rk = round_key(key, r)
        img, _ = decrypt_round(img, rk, bank, LogisticState(x=rk.x0, lam=key.lam))
        logger.debug("round_decrypted", round=r, height=img.height, width=img.width)
    logger.info(
        "image_decrypted",
        rounds=key.beta,
        pixels=img.size,
        seconds=round(time.perf_counter() - started, 3),
    )
    return img
