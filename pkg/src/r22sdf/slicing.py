"""Digit slicing of Q1.15 words and the per-twiddle possibility ROM.

A 16-bit two's-complement code is split into four unsigned 4-bit blocks
(U0 least significant). The top block carries the sign: the signed code is

    U0 + 16*U1 + 256*U2 + 4096*(U3 - 16*msb(U3))

where msb(U3) is bit 3 of U3. Because a 4-bit slice can only take 16
values, every product of a known twiddle code w with one slice can be
precomputed: entries[u] = w*u for u = 0..15. A shift-and-add over four
table lookups then reproduces the full 16x16-bit product exactly, with no
multiplier in the path. The top block's sign is handled by one post-lookup
correction term (subtract w << 4 when bit 3 of U3 is set) so a single
16-entry table per twiddle component suffices.

The lookup path performs no rounding: it returns the exact integer product
at scale 2^-30, identical to fx_mul_exact, and narrowing happens once
downstream in the complex multiplier.
"""

from typing import NamedTuple

BLOCK_COUNT = 4
BLOCK_BITS = 4
BLOCK_MASK = (1 << BLOCK_BITS) - 1
ROM_DEPTH = 1 << BLOCK_BITS  # 16 possibilities per 4-bit slice
ROM_ENTRY_BITS = 20  # 16-bit twiddle times 4-bit unsigned slice


class TwiddleRom(NamedTuple):
    """Exact-product table for one twiddle component code."""

    entries: tuple  # entries[u] = w * u, u = 0..15
    w: int  # source twiddle code, needed for the sign correction


def slice_code(x: int) -> tuple:
    """Split a code into its four 4-bit blocks, least significant first."""
    u = x & 0xFFFF
    return (
        u & BLOCK_MASK,
        (u >> 4) & BLOCK_MASK,
        (u >> 8) & BLOCK_MASK,
        (u >> 12) & BLOCK_MASK,
    )


def unslice(blocks: tuple) -> int:
    """Reassemble the signed code from four blocks (inverse of slice_code)."""
    u0, u1, u2, u3 = blocks
    return u0 + (u1 << 4) + (u2 << 8) + ((u3 - ((u3 >> 3) << 4)) << 12)


def build_rom(w: int) -> TwiddleRom:
    """Tabulate the 16 exact products w*u for one twiddle component."""
    return TwiddleRom(tuple(w * u for u in range(ROM_DEPTH)), w)


def lut_mul_exact(rom: TwiddleRom, blocks: tuple) -> int:
    """Exact product rom.w * unslice(blocks) via lookups and shifts.

    Bit-identical to fx_mul_exact(rom.w, unslice(blocks)); the sign of the
    top block folds in as a single subtraction of rom.w << 4 before the
    final shift.
    """
    u0, u1, u2, u3 = blocks
    e = rom.entries
    top = e[u3] - ((rom.w << 4) if u3 & 0x8 else 0)
    return e[u0] + (e[u1] << 4) + (e[u2] << 8) + (top << 12)
