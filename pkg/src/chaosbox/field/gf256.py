"""Arithmetic in GF(2^8) modulo x^8 + x^4 + x^3 + x + 1.

Bytes are polynomials over GF(2) of degree < 8, bit i holding the
coefficient of x^i.
"""

REDUCTION_POLY = 0x11B


def _poly_degree(a: int) -> int:
    return a.bit_length() - 1


def _poly_mul(a: int, b: int) -> int:
    """Carry-less product, no reduction."""
    out = 0
    while b > 0:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def _poly_divmod(a: int, b: int) -> tuple[int, int]:
    q = 0
    while a and _poly_degree(a) >= _poly_degree(b):
        shift = _poly_degree(a) - _poly_degree(b)
        q ^= 1 << shift
        a ^= b << shift
    return q, a


def gf_mul(a: int, b: int) -> int:
    """Multiply two field bytes (shift-and-add with reduction by 0x11B)."""
    out = 0
    while b > 0:
        if b & 1:
            out ^= a
        a <<= 1
        if a & 0x100:
            a ^= REDUCTION_POLY
        b >>= 1
    return out & 0xFF


def gf_pow(a: int, e: int) -> int:
    """Raise a field byte to a non-negative integer power (square-and-multiply)."""
    result = 1
    base = a
    while e > 0:
        if e & 1:
            result = gf_mul(result, base)
        base = gf_mul(base, base)
        e >>= 1
    return result


def gf_inv(a: int) -> int:
    """Multiplicative inverse via the extended Euclidean algorithm.

    The power map P of the APA structure: ``gf_inv(0)`` is defined as 0.
    """
    if a == 0:
        return 0

    r0, r1 = REDUCTION_POLY, a
    s0, s1 = 0, 1
    while r1 != 0:
        q, _ = _poly_divmod(r0, r1)
        r0, r1 = r1, r0 ^ _poly_mul(q, r1)
        s0, s1 = s1, s0 ^ _poly_mul(q, s1)

    # r0 is the gcd; 0x11B is irreducible so it is always 1
    return s0 & 0xFF
