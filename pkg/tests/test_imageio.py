"""PGM reading and writing, raw ingestion and the image model."""

import numpy as np
import pytest

from conftest import random_image
from chaosbox.errors import (
    BadMagicError,
    ImageFormatError,
    ParameterError,
    TruncatedPayloadError,
    UnsupportedDepthError,
)
from chaosbox.imageio import from_raw, read_pgm, write_pgm
from chaosbox.models import GrayImage


class TestReadPgm:
    def test_single_pixel(self):
        img = read_pgm(b"P5\n1 1\n255\n" + b"\x41")
        assert (img.height, img.width) == (1, 1)
        assert int(img.pixels[0, 0]) == 65

    def test_dimensions_are_width_then_height(self):
        img = read_pgm(b"P5\n3 2\n255\n" + bytes(range(6)))
        assert (img.height, img.width) == (2, 3)
        assert img.pixels.tolist() == [[0, 1, 2], [3, 4, 5]]

    def test_comments_and_whitespace(self):
        data = b"P5\n# foo\n2 # width\n\t1\r\n# bar\n255\n" + b"\x01\x02"
        assert read_pgm(data).pixels.tolist() == [[1, 2]]

    def test_bad_magic(self):
        with pytest.raises(BadMagicError):
            read_pgm(b"P2\n1 1\n255\n0")

    def test_bad_magic_token(self):
        with pytest.raises(BadMagicError):
            read_pgm(b"P55\n1 1\n255\n\x00")

    def test_sixteen_bit(self):
        with pytest.raises(UnsupportedDepthError):
            read_pgm(b"P5\n1 1\n65535\n\x00\x00")

    def test_truncated(self):
        with pytest.raises(TruncatedPayloadError):
            read_pgm(b"P5\n2 2\n255\n\x00\x00\x00")

    def test_missing_raster(self):
        with pytest.raises(TruncatedPayloadError):
            read_pgm(b"P5\n2 2\n255")

    def test_trailing_bytes(self):
        with pytest.raises(ImageFormatError):
            read_pgm(b"P5\n1 1\n255\n\x00\x00")

    @pytest.mark.parametrize("header", [b"P5\n0 1\n255\n", b"P5\nx 1\n255\n", b"P5\n1"])
    def test_bad_header(self, header):
        with pytest.raises(ImageFormatError):
            read_pgm(header + b"\x00")

    def test_payload_may_contain_whitespace_bytes(self):
        payload = b"\n \t#"
        assert read_pgm(b"P5\n4 1\n255\n" + payload).flat() == payload


class TestWritePgm:
    def test_canonical_single_pixel(self):
        data = write_pgm(GrayImage(np.zeros((1, 1), dtype=np.uint8)))
        assert data == b"P5\n1 1\n255\n\x00"
        assert len(data) == 12

    def test_header_is_width_then_height(self):
        data = write_pgm(GrayImage(np.zeros((2, 5), dtype=np.uint8)))
        assert data.startswith(b"P5\n5 2\n255\n")

    def test_read_back(self, rng):
        img = random_image(rng, 7, 13)
        assert read_pgm(write_pgm(img)) == img

    def test_canonical_stream_is_stable(self):
        data = b"P5\n3 1\n255\n" + b"abc"
        assert write_pgm(read_pgm(data)) == data


class TestFromRaw:
    def test_row_major(self):
        img = from_raw(b"\x01\x02\x03\x04", 2, 2)
        assert img.pixels.tolist() == [[1, 2], [3, 4]]

    def test_wrong_length(self):
        with pytest.raises(ParameterError):
            from_raw(b"\x00" * 5, 2, 2)

    @pytest.mark.parametrize("width, height", [(2, 2), (0, 0)])
    def test_empty(self, width, height):
        with pytest.raises(ParameterError):
            from_raw(b"", width, height)


class TestGrayImage:
    def test_pixels_are_read_only_copy(self):
        src = np.zeros((2, 2), dtype=np.uint8)
        img = GrayImage(src)
        src[0, 0] = 9
        assert img.pixels[0, 0] == 0
        with pytest.raises(ValueError):
            img.pixels[0, 0] = 1

    def test_rejects_bad_shapes_and_values(self):
        with pytest.raises(ParameterError):
            GrayImage(np.zeros(4, dtype=np.uint8))
        with pytest.raises(ParameterError):
            GrayImage(np.zeros((0, 3), dtype=np.uint8))
        with pytest.raises(ParameterError):
            GrayImage(np.array([[256]]))
        with pytest.raises(ParameterError):
            GrayImage(np.array([[0.5]]))

    def test_accepts_wider_ints(self):
        assert GrayImage(np.array([[0, 255]], dtype=np.int64)).flat() == b"\x00\xff"

    def test_equality_and_hash(self):
        a = GrayImage(np.arange(6, dtype=np.uint8).reshape(2, 3))
        b = GrayImage(np.arange(6, dtype=np.uint8).reshape(2, 3))
        c = GrayImage(np.arange(6, dtype=np.uint8).reshape(3, 2))
        assert a == b
        assert hash(a) == hash(b)
        assert a != c
