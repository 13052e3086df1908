"""The multi-round image cipher."""

import numpy as np
import pytest

import reference
from conftest import random_image
from chaosbox.chaos import LogisticState, logistic
from chaosbox.cipher import (
    decrypt,
    decrypt_round,
    encrypt,
    encrypt_round,
    rot180,
    round_key,
    scramble,
    select_substituent,
    substituent_for,
    transpose,
    unscramble,
)
from chaosbox.errors import ParameterError
from chaosbox.field import apa
from chaosbox.latin import build_latin
from chaosbox.models import CipherKey, GrayImage
from chaosbox.sbox import SBox, SBoxBank

# Sample key (x0 = 0.23456, lambda = 3.99, c0 = 123), 16-box bank with n0 = 50,
# 4x4 all-zero plaintext. Row-major hex.
ZERO_4X4_ROUND_ONE = "083B012FFD1671D6FD1A94047BB8EA9C"
ZERO_4X4_TWO_ROUNDS = "B034AB388D39EE7B0F61777416D62937"
# Same plaintext, four rounds, production bank
ZERO_4X4_FOUR_ROUNDS_PRODUCTION = "B048719CA2F52FCED7190DB7661FD57B"


def frozen(hex_pixels: str, side: int = 4) -> np.ndarray:
    return np.frombuffer(bytes.fromhex(hex_pixels), dtype=np.uint8).reshape(side, side)


def oracle_encrypt(img: GrayImage, key: CipherKey) -> np.ndarray:
    """Encryption by the standalone reference, which also builds its own bank."""
    params = key.sbox_params
    bank = reference.boxes(params.count, n0=params.n0, zeta=params.zeta)
    grid = reference.encrypt(
        img.pixels.tolist(), key.x0, key.lam, key.beta, key.c0, key.latin_key.key, bank
    )
    return np.array(grid, dtype=np.uint8)


class TestRoundKey:
    def test_rule(self, sample_latin_key):
        key = CipherKey(x0=0.5, lam=3.99, beta=3, c0=200, latin_key=sample_latin_key)
        rk = round_key(key, 1)
        assert rk.r == 1
        assert rk.x0 == pytest.approx(0.554321)
        assert rk.c0 == 41
        assert rk.latin_key.key == sample_latin_key.key[1:] + sample_latin_key.key[:1]

    def test_rounds_differ(self, sample_key):
        keys = [round_key(sample_key, r) for r in range(1, sample_key.beta + 1)]
        assert len({k.x0 for k in keys}) == len(keys)
        assert len({k.c0 for k in keys}) == len(keys)
        assert len({k.latin_key.key for k in keys}) == len(keys)

    def test_x0_wraps(self, sample_latin_key):
        key = CipherKey(x0=0.99, lam=3.99, beta=1, c0=0, latin_key=sample_latin_key)
        assert round_key(key, 1).x0 == pytest.approx(0.044321)

    @pytest.mark.parametrize("r", [0, 5])
    def test_out_of_range(self, sample_key, r):
        with pytest.raises(ParameterError):
            round_key(sample_key, r)


class TestSubstituent:
    def test_digit_case(self, small_bank):
        # digits of 0.5 are (50000, 0, 0): box 50000 mod 16 + 1 = 1, row 1, column 1
        assert substituent_for(0.5, small_bank) == apa(small_bank.box(1).table[0])

    def test_identity_box(self):
        bank = SBoxBank(boxes=(SBox.identity(),))
        assert substituent_for(0.5, bank) == apa(0x00)

    def test_select_advances_state(self, small_bank):
        state = LogisticState(x=0.23456, lam=3.99)
        phi, after = select_substituent(state, small_bank)
        assert after.x == logistic(0.23456, 3.99)
        assert after.lam == state.lam
        assert phi == substituent_for(after.x, small_bank)


class TestGeometry:
    def test_two_by_two(self):
        grid = np.array([[1, 2], [3, 4]])
        assert scramble(grid).tolist() == [[4, 2], [3, 1]]
        assert transpose(rot180(grid)).tolist() == [[4, 2], [3, 1]]

    def test_swaps_dimensions(self):
        assert scramble(np.zeros((2, 3))).shape == (3, 2)

    def test_involution_on_square(self, rng):
        grid = rng.integers(0, 256, size=(7, 7))
        assert np.array_equal(scramble(scramble(grid)), grid)

    def test_unscramble(self, rng):
        grid = rng.integers(0, 256, size=(4, 9))
        assert np.array_equal(unscramble(scramble(grid)), grid)


class TestEncrypt:
    def test_round_one_frozen(self, small_key, small_bank):
        rk = round_key(small_key, 1)
        img = GrayImage(np.zeros((4, 4), dtype=np.uint8))
        out, _ = encrypt_round(img, rk, small_bank, LogisticState(x=rk.x0, lam=small_key.lam))
        assert np.array_equal(out.pixels, frozen(ZERO_4X4_ROUND_ONE))

    def test_two_rounds_frozen(self, small_key, small_bank):
        img = GrayImage(np.zeros((4, 4), dtype=np.uint8))
        assert np.array_equal(encrypt(img, small_key, small_bank).pixels, frozen(ZERO_4X4_TWO_ROUNDS))

    @pytest.mark.slow
    def test_production_frozen(self, sample_key, production_bank):
        img = GrayImage(np.zeros((4, 4), dtype=np.uint8))
        out = encrypt(img, sample_key, production_bank)
        assert np.array_equal(out.pixels, frozen(ZERO_4X4_FOUR_ROUNDS_PRODUCTION))

    def test_oracle_reproduces_frozen(self, small_key):
        img = GrayImage(np.zeros((4, 4), dtype=np.uint8))
        assert np.array_equal(oracle_encrypt(img, small_key), frozen(ZERO_4X4_TWO_ROUNDS))

    def test_matches_oracle_non_square(self, small_key, small_bank, rng):
        img = random_image(rng, 3, 5)
        key = small_key.model_copy(update={"beta": 3})
        assert np.array_equal(encrypt(img, key, small_bank).pixels, oracle_encrypt(img, key))

    def test_single_pixel(self, small_key, small_bank):
        key = small_key.model_copy(update={"beta": 1})
        rk = round_key(key, 1)
        phi, _ = select_substituent(LogisticState(x=rk.x0, lam=key.lam), small_bank)
        latin = build_latin(rk.latin_key)

        out = encrypt(GrayImage(np.array([[0x41]], dtype=np.uint8)), key, small_bank)
        # i = 1 reads Latin cell q = 2
        assert int(out.pixels[0, 0]) == rk.c0 ^ 0x41 ^ phi ^ latin.cell(2)

    def test_one_round_swaps_dimensions(self, small_key, small_bank, rng):
        key = small_key.model_copy(update={"beta": 1})
        out = encrypt(random_image(rng, 2, 3), key, small_bank)
        assert (out.height, out.width) == (3, 2)

    def test_deterministic(self, small_key, small_bank, rng):
        img = random_image(rng, 8, 8)
        assert encrypt(img, small_key, small_bank) == encrypt(img, small_key, small_bank)

    def test_changes_image(self, small_key, small_bank):
        img = GrayImage(np.zeros((8, 8), dtype=np.uint8))
        assert encrypt(img, small_key, small_bank) != img

    def test_keystream_prefix_ignores_later_plaintext(self, small_key, small_bank, rng):
        key = small_key.model_copy(update={"beta": 1})
        rk = round_key(key, 1)
        state = LogisticState(x=rk.x0, lam=key.lam)
        a = random_image(rng, 6, 6)
        flipped = a.pixels.copy()
        flipped[5, 5] ^= 0xFF
        b = GrayImage(flipped)

        ca, _ = encrypt_round(a, rk, small_bank, state)
        cb, _ = encrypt_round(b, rk, small_bank, state)
        flat_a = unscramble(ca.pixels).ravel()
        flat_b = unscramble(cb.pixels).ravel()
        assert np.array_equal(flat_a[:-1], flat_b[:-1])
        assert flat_a[-1] != flat_b[-1]


class TestDifferencePropagation:
    """How a one-pixel plaintext change travels through the chain.

    The keystream only reacts to a change through ``C(i) mod 4``. A change
    whose XOR difference has both low bits clear leaves every skip alone, so
    the difference passes through the XOR chain unchanged.
    """

    CHANGED = 10

    def _round_pair(self, key, bank, rng, delta):
        rk = round_key(key, 1)
        state = LogisticState(x=rk.x0, lam=key.lam)
        a = random_image(rng, 8, 8)
        changed = a.pixels.copy().ravel()
        changed[self.CHANGED] ^= delta
        b = GrayImage.from_flat(changed, 8, 8)

        ca, _ = encrypt_round(a, rk, bank, state)
        cb, _ = encrypt_round(b, rk, bank, state)
        return unscramble(ca.pixels).ravel() ^ unscramble(cb.pixels).ravel()

    def test_high_bit_difference_stays_constant(self, small_key, small_bank, rng):
        diff = self._round_pair(small_key, small_bank, rng, 4)
        assert not diff[: self.CHANGED].any()
        assert np.all(diff[self.CHANGED :] == 4)

    def test_low_bit_difference_changes_keystream(self, small_key, small_bank, rng):
        diff = self._round_pair(small_key, small_bank, rng, 1)
        assert not diff[: self.CHANGED].any()
        assert diff[self.CHANGED] == 1
        assert len(set(diff[self.CHANGED + 1 :].tolist())) > 1

    def test_high_bit_difference_stays_in_one_bit_across_rounds(self, small_key, small_bank, rng):
        img = random_image(rng, 8, 8)
        changed = img.pixels.copy()
        changed[3, 5] ^= 4
        diff = (
            encrypt(img, small_key, small_bank).pixels
            ^ encrypt(GrayImage(changed), small_key, small_bank).pixels
        )
        assert set(np.unique(diff).tolist()) == {0, 4}


class TestDecrypt:
    @pytest.mark.parametrize("beta", [1, 2, 4])
    @pytest.mark.parametrize("shape", [(1, 1), (4, 4), (3, 7), (16, 16)])
    def test_round_trip(self, small_key, small_bank, rng, beta, shape):
        key = small_key.model_copy(update={"beta": beta})
        img = random_image(rng, *shape)
        assert decrypt(encrypt(img, key, small_bank), key, small_bank) == img

    def test_round_states_agree(self, small_key, small_bank, rng):
        rk = round_key(small_key, 1)
        state = LogisticState(x=rk.x0, lam=small_key.lam)
        img = random_image(rng, 5, 4)

        cipher, enc_state = encrypt_round(img, rk, small_bank, state)
        plain, dec_state = decrypt_round(cipher, rk, small_bank, state)
        assert plain == img
        assert dec_state == enc_state

    def test_frozen_cipher_decrypts_to_zero(self, small_key, small_bank):
        cipher = GrayImage(frozen(ZERO_4X4_TWO_ROUNDS))
        assert not decrypt(cipher, small_key, small_bank).pixels.any()

    def test_frozen_round_decrypts_to_zero(self, small_key, small_bank):
        rk = round_key(small_key, 1)
        state = LogisticState(x=rk.x0, lam=small_key.lam)
        plain, _ = decrypt_round(GrayImage(frozen(ZERO_4X4_ROUND_ONE)), rk, small_bank, state)
        assert not plain.pixels.any()

    def test_wrong_key(self, small_key, small_bank, rng):
        img = random_image(rng, 32, 32)
        cipher = encrypt(img, small_key, small_bank)
        wrong = small_key.model_copy(update={"x0": small_key.x0 + 1e-10})
        recovered = decrypt(cipher, wrong, small_bank)
        assert np.count_nonzero(recovered.pixels != img.pixels) > 0.9 * img.size

    def test_wrong_latin_key(self, small_key, small_bank, rng):
        img = random_image(rng, 16, 16)
        cipher = encrypt(img, small_key, small_bank)
        other = small_key.latin_key.rotated(5)
        wrong = small_key.model_copy(update={"latin_key": other})
        assert decrypt(cipher, wrong, small_bank) != img

    def test_runs_on_any_dimensions(self, small_key, small_bank, rng):
        out = decrypt(random_image(rng, 2, 9), small_key, small_bank)
        assert (out.height, out.width) == (2, 9)
