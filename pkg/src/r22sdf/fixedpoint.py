"""Q1.15 sample format and the single rounding rule shared by every datapath.

Sample codes are plain Python ints in [-32768, 32767]; the represented value
is code * 2^-15, so all codes except -32768 have magnitude < 1. Complex
samples are (re, im) code tuples. Exact intermediates (products at scale
2^-30, multi-term sums) are ordinary Python ints, never narrowed until one
of the rounding helpers below fires.

Every narrowing site in the simulator uses the same rule: round to nearest,
ties toward +infinity, then saturate. Keeping one rule everywhere is what
makes the multiplier datapaths comparable bit for bit.
"""

import math

Q15_BITS = 16
Q15_FRAC = 15
Q15_SCALE = 1 << Q15_FRAC  # 32768
Q15_MIN = -(1 << Q15_FRAC)  # -32768
Q15_MAX = (1 << Q15_FRAC) - 1  # 32767

# +0.5 ulp bias used by the tie-toward-+infinity rounding of Q2.30 products
_Q30_HALF = 1 << (Q15_FRAC - 1)


def saturate(code: int) -> int:
    """Clamp an integer to the representable Q1.15 code range."""
    if code > Q15_MAX:
        return Q15_MAX
    if code < Q15_MIN:
        return Q15_MIN
    return code


def fx_from_real(r: float) -> int:
    """Quantize a real amplitude to a Q1.15 code.

    Round to nearest with ties toward +infinity; out-of-range inputs
    saturate to the nearest representable code.
    """
    return saturate(math.floor(r * Q15_SCALE + 0.5))


def fx_to_real(code: int) -> float:
    """Exact value represented by a Q1.15 code."""
    return code / Q15_SCALE


def fx_mul_exact(a: int, b: int) -> int:
    """Exact integer product of two codes, interpreted at scale 2^-30."""
    return a * b


def round_q30_to_fx16(acc: int) -> int:
    """Round a scale 2^-30 accumulator to a Q1.15 code.

    floor((acc + 2^14) / 2^15) rounds to nearest with ties toward
    +infinity (Python's >> floors for negative ints), then saturates.
    """
    return saturate((acc + _Q30_HALF) >> Q15_FRAC)


def add_halve(a: int, b: int) -> int:
    """(a + b) / 2 with the shared tie-toward-+infinity rounding.

    The 17-bit sum is exact before halving; the result is always in range,
    the saturate is a safety net only.
    """
    return saturate((a + b + 1) >> 1)


def sub_halve(a: int, b: int) -> int:
    """(a - b) / 2 with the shared tie-toward-+infinity rounding."""
    return saturate((a - b + 1) >> 1)
