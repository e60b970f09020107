"""Streaming radix-2^2 single-path delay feedback FFT datapath.

Transform lengths are n = 4^m. The chain has m stages; each stage is a
Butterfly I and a Butterfly II with feedback rings of length n/2^(2s-1)
and n/2^(2s) (stage s, 1-based), followed by a twiddle multiplier except
after the last stage. One complex sample enters per step in natural order;
one output leaves per step once the pipeline is primed. The sum of all
feedback depths is n-1, so the first output of the first frame appears at
step n-1, and consecutive frames stream back to back with no gaps.

Control schedule (frozen by golden tests against the direct-DFT oracle)
-----------------------------------------------------------------------
A global counter t runs mod n. For stage s define the stage-local frame
size ns = n/4^(s-1) and position tau = t mod ns. Writing bits of tau with
LSB index 0:

* Butterfly I computes when bit (log2(ns) - 1) of tau is 1, else it fills.
* Butterfly II computes when bit (log2(ns) - 2) of tau is 1, else fills.
* The trivial -j rotation (swap re/im, negate the new im - exact, no
  rounding) applies to the Butterfly II input when both C1 = that compute
  bit and C2 = NOT(Butterfly I's bit) are 1, i.e. in quarter 1 of the
  local frame (tau div (ns/4) == 1).

Each quarter q of the local frame carries one (k1, k2) output class of the
two-bit frequency split, and the multiplier after the stage applies
W_n ^ (base(q) * n3 * 4^(s-1)) with n3 = tau mod (ns/4) and

    base = (2, 1, 3, 0)[q]        # = k1 + 2*k2 of the class in quarter q

A zero exponent is passed through untouched (exact identity) rather than
multiplied by the quantized W^0, so all-zero, impulse and constant frames
stay exact end to end.

Both butterflies halve their outputs (shared tie-toward-+infinity
rounding), so a full frame emerges scaled by 1/n. Outputs leave in
bit-reversed index order; position p of a frame's output burst carries
X[bit_reverse(p)]. Feedback rings are modeled at exact length; multiplier
pipeline registers are not modeled (functional timing only).

A Pipeline instance is single-stream: one logical driver may step it.
Distinct instances are independent.
"""

from typing import List, Optional, Tuple

import numpy as np

from . import _kernels
from .cmul import BACKENDS, apply_backend, build_rom_pair, quantize_twiddle
from .fixedpoint import add_halve, sub_halve

VALID_LENGTHS = (4, 16, 64, 256, 1024, 4096)

_BASE_BY_QUARTER = (2, 1, 3, 0)
_BACKEND_IDS = {name: i for i, name in enumerate(BACKENDS)}


def bit_reverse(k: int, bits: int) -> int:
    """Reverse the low `bits` bits of k."""
    if not 0 <= k < (1 << bits):
        raise ValueError(f"index {k} outside [0, 2^{bits})")
    r = 0
    for _ in range(bits):
        r = (r << 1) | (k & 1)
        k >>= 1
    return r


def _check_length(n: int) -> int:
    """Return m with n = 4^m, rejecting unsupported lengths."""
    if n not in VALID_LENGTHS:
        raise ValueError(f"transform length {n} not in {VALID_LENGTHS}")
    return (n.bit_length() - 1) // 2


def raw_twiddle_exponent(t: int, stage: int, n: int) -> int:
    """Multiplier exponent (in W_n units) at step t after the given stage.

    Returns 0 where the schedule passes data through unmultiplied.
    """
    m = _check_length(n)
    if not 1 <= stage < m:
        raise ValueError(f"stage {stage} has no multiplier for n={n}")
    if not 0 <= t < n:
        raise ValueError(f"step {t} outside [0, {n})")
    ns = n >> (2 * (stage - 1))
    tau = t % ns
    quarter = tau // (ns >> 2)
    n3 = tau % (ns >> 2)
    return _BASE_BY_QUARTER[quarter] * n3 * (4 ** (stage - 1))


def twiddle_exponent(t: int, stage: int, n: int) -> Optional[int]:
    """Like raw_twiddle_exponent, but None signals the exact pass-through."""
    e = raw_twiddle_exponent(t, stage, n)
    return e if e else None


def stage_exponent_schedule(n: int, stage: int) -> List[int]:
    """Raw exponent for every step t in [0, n) at one stage."""
    return [raw_twiddle_exponent(t, stage, n) for t in range(n)]


def distinct_exponents(n: int) -> List[int]:
    """Sorted distinct exponents over all multiplier stages (0 included).

    Empty for n=4, whose single-stage chain has no multiplier.
    """
    m = _check_length(n)
    seen = set()
    for stage in range(1, m):
        seen.update(stage_exponent_schedule(n, stage))
    return sorted(seen)


class FeedbackUnit:
    """One butterfly with its delay-feedback ring.

    The ring acts as a shift register of exact length: each step reads the
    oldest entry, writes the new one in its place and advances.
    """

    def __init__(self, length: int):
        self.length = length
        self.fb_re = [0] * length
        self.fb_im = [0] * length
        self.pos = 0

    def reset(self) -> None:
        self.fb_re = [0] * self.length
        self.fb_im = [0] * self.length
        self.pos = 0

    def step(self, x: Tuple[int, int], compute: int) -> Tuple[int, int]:
        p = self.pos
        d_re = self.fb_re[p]
        d_im = self.fb_im[p]
        xr, xi = x
        if compute:
            out = (add_halve(d_re, xr), add_halve(d_im, xi))
            self.fb_re[p] = sub_halve(d_re, xr)
            self.fb_im[p] = sub_halve(d_im, xi)
        else:
            out = (d_re, d_im)
            self.fb_re[p] = xr
            self.fb_im[p] = xi
        self.pos = (p + 1) % self.length
        return out


def bf1_step(unit: FeedbackUnit, x: Tuple[int, int], c1: int) -> Tuple[int, int]:
    """Butterfly I: fill the ring while C1=0, add/sub-halve while C1=1."""
    return unit.step(x, c1)


def bf2_step(unit: FeedbackUnit, x: Tuple[int, int], c1: int, c2: int) -> Tuple[int, int]:
    """Butterfly II: as Butterfly I, with the exact -j input rotation.

    When C1 = C2 = 1 the input is first mapped (r, i) -> (i, -r); the
    swapped adder/subtractor roles of the hardware are exactly this
    rotation folded into the normal add/sub-halve pair.
    """
    if c1 and c2:
        x = (x[1], -x[0])
    return unit.step(x, c1)


class Pipeline:
    """Stateful n-point streaming FFT with a selectable multiplier datapath.

    `step` advances the scalar model one sample; `run_stream` plays a whole
    sample array through the selected kernel implementation from reset.
    Both are bit-identical by construction and by test.
    """

    def __init__(self, n: int, backend: str = "mul4"):
        if backend not in BACKENDS:
            raise ValueError(f"unknown backend {backend!r}, expected one of {BACKENDS}")
        self.n = n
        self.stages = _check_length(n)
        self.log2n = n.bit_length() - 1
        self.backend = backend
        self.bf1 = [FeedbackUnit(n >> (2 * s + 1)) for s in range(self.stages)]
        self.bf2 = [FeedbackUnit(n >> (2 * s + 2)) for s in range(self.stages)]
        # Per multiplier stage: exponent schedule plus quantized twiddles
        # and possibility ROMs for every distinct nonzero exponent.
        self.schedules = [stage_exponent_schedule(n, s) for s in range(1, self.stages)]
        self.twiddles = {}
        self.rom_pairs = {}
        for sched in self.schedules:
            for e in sched:
                if e and e not in self.twiddles:
                    w = quantize_twiddle(e, n)
                    self.twiddles[e] = w
                    self.rom_pairs[e] = build_rom_pair(w)
        self._tables = self._build_tables()
        self._t = 0

    # -- scalar model ---------------------------------------------------

    def reset(self) -> None:
        for u in self.bf1:
            u.reset()
        for u in self.bf2:
            u.reset()
        self._t = 0

    @property
    def step_index(self) -> int:
        return self._t

    def step(self, sample: Tuple[int, int]) -> Optional[Tuple[int, int]]:
        """Feed one (re, im) code pair; returns the output pair once primed.

        Returns None during the first n-1 priming steps, then one output
        per step forever, frames streaming back to back.
        """
        tau = self._t % self.n
        x = sample
        for s in range(self.stages):
            b1 = (tau >> (self.log2n - 2 * s - 1)) & 1
            b2 = (tau >> (self.log2n - 2 * s - 2)) & 1
            x = bf1_step(self.bf1[s], x, b1)
            x = bf2_step(self.bf2[s], x, b2, b1 ^ 1)
            if s < self.stages - 1:
                e = self.schedules[s][tau]
                if e:
                    x = apply_backend(self.backend, x, self.twiddles[e],
                                      self.rom_pairs[e])
        out = x if self._t >= self.n - 1 else None
        self._t += 1
        return out

    # -- kernel path ----------------------------------------------------

    @property
    def kernel_tables(self) -> "_kernels.KernelTables":
        """Frozen lookup tables consumed by the kernel implementations."""
        return self._tables

    def _build_tables(self) -> "_kernels.KernelTables":
        n, m = self.n, self.stages
        sched = np.zeros((m - 1, n), dtype=np.int32)
        w_re = np.zeros((m - 1, n), dtype=np.int32)
        w_im = np.zeros((m - 1, n), dtype=np.int32)
        rom_idx = np.full((m - 1, n), -1, dtype=np.int32)
        exps = sorted(self.twiddles)
        slot = {e: i for i, e in enumerate(exps)}
        rom_re = np.zeros((len(exps), 16), dtype=np.int64)
        rom_im = np.zeros((len(exps), 16), dtype=np.int64)
        rom_wre = np.zeros(len(exps), dtype=np.int32)
        rom_wim = np.zeros(len(exps), dtype=np.int32)
        for e, i in slot.items():
            pair = self.rom_pairs[e]
            rom_re[i] = pair.rom_re.entries
            rom_im[i] = pair.rom_im.entries
            rom_wre[i] = pair.rom_re.w
            rom_wim[i] = pair.rom_im.w
        for s, stage_sched in enumerate(self.schedules):
            for tau, e in enumerate(stage_sched):
                if e:
                    sched[s, tau] = e
                    w_re[s, tau], w_im[s, tau] = self.twiddles[e]
                    rom_idx[s, tau] = slot[e]
        return _kernels.KernelTables(
            n=n, log2n=self.log2n, stages=m,
            backend=_BACKEND_IDS[self.backend],
            sched=sched, w_re=w_re, w_im=w_im,
            rom_idx=rom_idx, rom_re=rom_re, rom_im=rom_im,
            rom_wre=rom_wre, rom_wim=rom_wim,
        )

    def run_stream(self, re_codes, im_codes) -> Tuple[np.ndarray, np.ndarray]:
        """Play a code array through the kernel from reset.

        Input arrays are the back-to-back sample stream; the return holds
        every emitted output, i.e. len(input) - (n-1) pairs.
        """
        re_codes = np.ascontiguousarray(re_codes, dtype=np.int32)
        im_codes = np.ascontiguousarray(im_codes, dtype=np.int32)
        if re_codes.shape != im_codes.shape or re_codes.ndim != 1:
            raise ValueError("re/im code arrays must be equal-length 1-D")
        return _kernels.impl.run_stream(self._tables, re_codes, im_codes)


def fft_frame(pipe: Pipeline, frame: List[Tuple[int, int]]) -> List[Tuple[int, int]]:
    """Transform one n-sample frame, returning codes in natural k order.

    Resets the pipeline (frames are independent by contract), streams the
    frame plus n-1 drain zeros, and undoes the bit-reversed output order.
    The result equals the live streaming path bit for bit.
    """
    n = pipe.n
    if len(frame) != n:
        raise ValueError(f"frame length {len(frame)} != transform length {n}")
    pipe.reset()
    re = np.zeros(2 * n - 1, dtype=np.int32)
    im = np.zeros(2 * n - 1, dtype=np.int32)
    for i, (r, v) in enumerate(frame):
        re[i] = r
        im[i] = v
    out_re, out_im = pipe.run_stream(re, im)
    return [
        (int(out_re[bit_reverse(k, pipe.log2n)]), int(out_im[bit_reverse(k, pipe.log2n)]))
        for k in range(n)
    ]
