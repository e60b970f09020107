"""Three interchangeable complex-multiplier datapaths.

All three compute a * b for complex Q1.15 operands and agree bit for bit:

* cmul4 - the plain four-multiplier form,
  re = ar*br - ai*bi, im = ai*br + ar*bi.
* cmul3 - three multipliers and five adders,
  m1 = br*(ar - ai), m2 = ai*(br - bi), m3 = bi*(ar + ai),
  re = m1 + m2, im = m3 + m2. Algebraically identical to cmul4 before
  rounding; the pre-adder sums are held exactly (17 bits).
* cmul_lut - multiplier-less: both operand components are digit-sliced and
  each of the four real products comes from a per-twiddle possibility ROM
  (see slicing), combined with the four-product topology. Only usable when
  b is known in advance, which is exactly the twiddle-factor case.

Each output component accumulates exactly and is rounded once with the
shared Q2.30 -> Q1.15 rule, so backend choice never changes a single bit.
"""

import math
from typing import NamedTuple, Optional

from .fixedpoint import fx_from_real, round_q30_to_fx16
from .slicing import TwiddleRom, build_rom, lut_mul_exact, slice_code

BACKENDS = ("mul4", "mul3", "lut")


class TwiddleRomPair(NamedTuple):
    """Possibility ROMs for one quantized twiddle factor (re and im codes)."""

    rom_re: TwiddleRom
    rom_im: TwiddleRom


def build_rom_pair(w: tuple) -> TwiddleRomPair:
    return TwiddleRomPair(build_rom(w[0]), build_rom(w[1]))


def quantize_twiddle(exponent: int, n: int) -> tuple:
    """Quantized e^(-j*2*pi*exponent/n) as (re, im) Q1.15 codes.

    Exponent 0 saturates the real part to 32767; exponent n/4 gives the
    exact (0, -32768) = -j.
    """
    if not 0 <= exponent < n:
        raise ValueError(f"twiddle exponent {exponent} outside [0, {n})")
    theta = 2.0 * math.pi * exponent / n
    return fx_from_real(math.cos(theta)), fx_from_real(-math.sin(theta))


def cmul4(a: tuple, b: tuple) -> tuple:
    ar, ai = a
    br, bi = b
    return (
        round_q30_to_fx16(ar * br - ai * bi),
        round_q30_to_fx16(ai * br + ar * bi),
    )


def cmul3(a: tuple, b: tuple) -> tuple:
    ar, ai = a
    br, bi = b
    m1 = br * (ar - ai)
    m2 = ai * (br - bi)
    m3 = bi * (ar + ai)
    return round_q30_to_fx16(m1 + m2), round_q30_to_fx16(m3 + m2)


def cmul_lut(a: tuple, roms: TwiddleRomPair) -> tuple:
    sr = slice_code(a[0])
    si = slice_code(a[1])
    rr = lut_mul_exact(roms.rom_re, sr)  # ar * br
    ii = lut_mul_exact(roms.rom_im, si)  # ai * bi
    ir = lut_mul_exact(roms.rom_re, si)  # ai * br
    ri = lut_mul_exact(roms.rom_im, sr)  # ar * bi
    return round_q30_to_fx16(rr - ii), round_q30_to_fx16(ir + ri)


def apply_backend(backend: str, a: tuple, w: tuple,
                  roms: Optional[TwiddleRomPair] = None) -> tuple:
    """Dispatch one twiddle multiplication through the named datapath."""
    if backend == "mul4":
        return cmul4(a, w)
    if backend == "mul3":
        return cmul3(a, w)
    if backend == "lut":
        return cmul_lut(a, roms if roms is not None else build_rom_pair(w))
    raise ValueError(f"unknown backend {backend!r}, expected one of {BACKENDS}")
