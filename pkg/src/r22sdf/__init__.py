"""Bit-exact streaming simulator of a radix-2^2 SDF fixed-point FFT.

The per-stage complex multiplier can be swapped between the conventional
four-multiplier form, the three-multiplier form and a digit-slicing
multiplier-less ROM form; all three are bit-identical by contract and the
whole pipeline validates against a direct-DFT floating-point oracle.
"""

from ._kernels import IMPL_NAME as kernel_impl_name
from .cmul import (
    BACKENDS,
    TwiddleRomPair,
    build_rom_pair,
    cmul3,
    cmul4,
    cmul_lut,
    quantize_twiddle,
)
from .fixedpoint import (
    Q15_MAX,
    Q15_MIN,
    Q15_SCALE,
    add_halve,
    fx_from_real,
    fx_mul_exact,
    fx_to_real,
    round_q30_to_fx16,
    sub_halve,
)
from .pipeline import (
    VALID_LENGTHS,
    Pipeline,
    bit_reverse,
    distinct_exponents,
    fft_frame,
    twiddle_exponent,
)
from .reference import dft_direct, max_abs_error, sqnr_db
from .slicing import TwiddleRom, build_rom, lut_mul_exact, slice_code, unslice

__version__ = "0.1.0"

__all__ = [
    "BACKENDS",
    "Pipeline",
    "Q15_MAX",
    "Q15_MIN",
    "Q15_SCALE",
    "TwiddleRom",
    "TwiddleRomPair",
    "VALID_LENGTHS",
    "add_halve",
    "bit_reverse",
    "build_rom",
    "build_rom_pair",
    "cmul3",
    "cmul4",
    "cmul_lut",
    "dft_direct",
    "distinct_exponents",
    "fft_frame",
    "fx_from_real",
    "fx_mul_exact",
    "fx_to_real",
    "kernel_impl_name",
    "lut_mul_exact",
    "max_abs_error",
    "quantize_twiddle",
    "round_q30_to_fx16",
    "slice_code",
    "sqnr_db",
    "sub_halve",
    "twiddle_exponent",
    "unslice",
]
