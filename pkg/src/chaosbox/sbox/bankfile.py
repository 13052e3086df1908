"""SBXB bank file: magic ``SBXB``, u16 version, u32 count, then count x 256 bytes.

Integers are big-endian.
"""

import struct

from ..errors import BankFormatError
from .forge import SBOX_SIZE, SBox, SBoxBank, is_bijective

MAGIC = b"SBXB"
VERSION = 1
_HEADER = struct.Struct(">4sHI")


def write_bank(bank: SBoxBank) -> bytes:
    """Serialize a bank: header, then every box table in bank order."""
    header = _HEADER.pack(MAGIC, VERSION, len(bank))
    return header + b"".join(box.table for box in bank.boxes)


def read_bank(data: bytes) -> SBoxBank:
    """Parse and validate an SBXB bank file.

    Args:
        data: Complete file contents.

    Returns:
        The bank, with ``params`` unset since the file does not record them.

    Raises:
        BankFormatError: Short or unknown header, empty bank, payload size
            mismatch, or a box that is not a permutation.
    """
    if len(data) < _HEADER.size:
        raise BankFormatError(f"bank file too short for header ({len(data)} bytes)")

    magic, version, count = _HEADER.unpack_from(data)
    if magic != MAGIC:
        raise BankFormatError(f"bad bank magic {magic!r}")
    if version != VERSION:
        raise BankFormatError(f"unsupported bank version {version}")
    if count < 1:
        raise BankFormatError("bank holds no boxes")

    payload = data[_HEADER.size :]
    if len(payload) != count * SBOX_SIZE:
        raise BankFormatError(
            f"bank payload is {len(payload)} bytes, expected {count * SBOX_SIZE}"
        )

    boxes = []
    for j in range(count):
        table = payload[j * SBOX_SIZE : (j + 1) * SBOX_SIZE]
        if not is_bijective(table):
            raise BankFormatError(f"box {j + 1} is not a permutation")
        boxes.append(SBox(table))
    return SBoxBank(boxes=tuple(boxes))
