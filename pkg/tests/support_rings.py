"""Extra structures used only by the tests."""

from jrl.rings import FiniteRing, _ring_from_model


def scalar_plus_strict_upper_4x4_gf2() -> FiniteRing:
    """128-element ring: F2 multiples of the identity plus the strictly
    upper triangular 4x4 matrices over F2.

    Non-commutative, characteristic 2, and Jordan nilpotent of index
    exactly 4 (the strict upper part cubes to a nonzero corner entry but
    every length-4 product dies).  Bits: (scalar, u12, u13, u14, u23,
    u24, u34).
    """
    def unpack(i):
        return tuple((i >> k) & 1 for k in range(7))

    elements = [unpack(i) for i in range(128)]

    def add(x, y):
        return tuple((u + v) % 2 for u, v in zip(x, y))

    def mul(x, y):
        a, p12, p13, p14, p23, p24, p34 = x
        b, q12, q13, q14, q23, q24, q34 = y
        return (
            a * b % 2,
            (a * q12 + b * p12) % 2,
            (a * q13 + b * p13 + p12 * q23) % 2,
            (a * q14 + b * p14 + p12 * q24 + p13 * q34) % 2,
            (a * q23 + b * p23) % 2,
            (a * q24 + b * p24 + p23 * q34) % 2,
            (a * q34 + b * p34) % 2,
        )

    return _ring_from_model("U4F2", elements, add, mul, unpack(0), unpack(1))
