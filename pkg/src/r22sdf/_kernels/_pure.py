"""Pure-Python / numpy kernel implementation.

Bit-identical to the compiled core: same control bits, same single
rounding rule at every narrowing site, same saturation. The batch
multiplier sweeps vectorize with int64 numpy arithmetic (arithmetic right
shifts keep the floor semantics); the streaming datapath is a plain
Python loop over local ints.
"""

import numpy as np

_Q15_MIN = -32768
_Q15_MAX = 32767


def _sat(v):
    if v > _Q15_MAX:
        return _Q15_MAX
    if v < _Q15_MIN:
        return _Q15_MIN
    return v


def _round_q30_vec(acc):
    return np.clip((acc + (1 << 14)) >> 15, _Q15_MIN, _Q15_MAX).astype(np.int32)


def cmul4_batch(ar, ai, br, bi):
    """Four-multiplier complex products over code arrays."""
    ar = ar.astype(np.int64)
    ai = ai.astype(np.int64)
    br = br.astype(np.int64)
    bi = bi.astype(np.int64)
    return _round_q30_vec(ar * br - ai * bi), _round_q30_vec(ai * br + ar * bi)


def cmul3_batch(ar, ai, br, bi):
    """Three-multiplier complex products over code arrays."""
    ar = ar.astype(np.int64)
    ai = ai.astype(np.int64)
    br = br.astype(np.int64)
    bi = bi.astype(np.int64)
    m1 = br * (ar - ai)
    m2 = ai * (br - bi)
    m3 = bi * (ar + ai)
    return _round_q30_vec(m1 + m2), _round_q30_vec(m3 + m2)


def _lut_mul_vec(w, x):
    # Table entry u of the possibility ROM is w*u by construction, so the
    # vectorized lookup inlines entries[u] as w*u; the shift-and-add and
    # the top-block sign correction are verbatim.
    u = x.astype(np.int64) & 0xFFFF
    u0 = u & 0xF
    u1 = (u >> 4) & 0xF
    u2 = (u >> 8) & 0xF
    u3 = (u >> 12) & 0xF
    top = w * u3 - np.where((u3 & 0x8) != 0, w << 4, np.int64(0))
    return w * u0 + ((w * u1) << 4) + ((w * u2) << 8) + (top << 12)


def cmul_lut_batch(ar, ai, br, bi):
    """Digit-slicing multiplier-less complex products over code arrays."""
    br = br.astype(np.int64)
    bi = bi.astype(np.int64)
    rr = _lut_mul_vec(br, ar)
    ii = _lut_mul_vec(bi, ai)
    ir = _lut_mul_vec(br, ai)
    ri = _lut_mul_vec(bi, ar)
    return _round_q30_vec(rr - ii), _round_q30_vec(ir + ri)


def lut_products(entries, w, xs):
    """Exact products w * x through an actual 16-entry table gather."""
    entries = np.asarray(entries, dtype=np.int64)
    u = xs.astype(np.int64) & 0xFFFF
    u0 = u & 0xF
    u1 = (u >> 4) & 0xF
    u2 = (u >> 8) & 0xF
    u3 = (u >> 12) & 0xF
    top = entries[u3] - np.where((u3 & 0x8) != 0, np.int64(w) << 4, np.int64(0))
    return entries[u0] + (entries[u1] << 4) + (entries[u2] << 8) + (top << 12)


def run_stream(tables, in_re, in_im):
    """Stream code arrays through the pipeline from reset.

    Returns the emitted outputs: len(input) - (n-1) pairs as int32 arrays.
    """
    n = tables.n
    log2n = tables.log2n
    m = tables.stages
    backend = tables.backend
    sched = [row.tolist() for row in tables.sched]
    w_re = [row.tolist() for row in tables.w_re]
    w_im = [row.tolist() for row in tables.w_im]
    # Per (stage, tau) ROM bundle for the lut backend.
    luts = None
    if backend == 2:
        ere = tables.rom_re.tolist()
        eim = tables.rom_im.tolist()
        wre = tables.rom_wre.tolist()
        wim = tables.rom_wim.tolist()
        luts = [
            [None if idx < 0 else (ere[idx], eim[idx], wre[idx], wim[idx])
             for idx in row]
            for row in tables.rom_idx
        ]

    fb_re = [[0] * (n >> (k + 1)) for k in range(2 * m)]  # BF-I, BF-II interleaved
    fb_im = [[0] * (n >> (k + 1)) for k in range(2 * m)]
    pos = [0] * (2 * m)

    total = len(in_re)
    n_out = max(0, total - (n - 1))
    out_re = np.empty(n_out, dtype=np.int32)
    out_im = np.empty(n_out, dtype=np.int32)
    in_re = in_re.tolist()
    in_im = in_im.tolist()

    for t in range(total):
        tau = t % n
        xr = in_re[t]
        xi = in_im[t]
        for s in range(m):
            # Butterfly I
            u = 2 * s
            c = (tau >> (log2n - u - 1)) & 1
            p = pos[u]
            dr = fb_re[u][p]
            di = fb_im[u][p]
            if c:
                # halves saturate: full-scale corners can overshoot by one
                fb_re[u][p] = _sat((dr - xr + 1) >> 1)
                fb_im[u][p] = _sat((di - xi + 1) >> 1)
                xr = _sat((dr + xr + 1) >> 1)
                xi = _sat((di + xi + 1) >> 1)
            else:
                fb_re[u][p] = xr
                fb_im[u][p] = xi
                xr = dr
                xi = di
            pos[u] = p + 1 if p + 1 < len(fb_re[u]) else 0
            # Butterfly II, with the exact -j rotation in local quarter 1
            u = 2 * s + 1
            c2 = (tau >> (log2n - u - 1)) & 1
            if c2 and not c:
                xr, xi = xi, -xr
            p = pos[u]
            dr = fb_re[u][p]
            di = fb_im[u][p]
            if c2:
                fb_re[u][p] = _sat((dr - xr + 1) >> 1)
                fb_im[u][p] = _sat((di - xi + 1) >> 1)
                xr = _sat((dr + xr + 1) >> 1)
                xi = _sat((di + xi + 1) >> 1)
            else:
                fb_re[u][p] = xr
                fb_im[u][p] = xi
                xr = dr
                xi = di
            pos[u] = p + 1 if p + 1 < len(fb_re[u]) else 0
            # Twiddle multiplier (absent after the last stage)
            if s < m - 1 and sched[s][tau]:
                if backend == 0:
                    br = w_re[s][tau]
                    bi = w_im[s][tau]
                    acc_r = xr * br - xi * bi
                    acc_i = xi * br + xr * bi
                elif backend == 1:
                    br = w_re[s][tau]
                    bi = w_im[s][tau]
                    m2 = xi * (br - bi)
                    acc_r = br * (xr - xi) + m2
                    acc_i = bi * (xr + xi) + m2
                else:
                    ere, eim, bre, bim = luts[s][tau]
                    acc_r = _lut_scalar(ere, bre, xr) - _lut_scalar(eim, bim, xi)
                    acc_i = _lut_scalar(ere, bre, xi) + _lut_scalar(eim, bim, xr)
                xr = (acc_r + 16384) >> 15
                if xr > _Q15_MAX:
                    xr = _Q15_MAX
                elif xr < _Q15_MIN:
                    xr = _Q15_MIN
                xi = (acc_i + 16384) >> 15
                if xi > _Q15_MAX:
                    xi = _Q15_MAX
                elif xi < _Q15_MIN:
                    xi = _Q15_MIN
        if t >= n - 1:
            out_re[t - (n - 1)] = xr
            out_im[t - (n - 1)] = xi
    return out_re, out_im


def _lut_scalar(entries, w, x):
    u = x & 0xFFFF
    u3 = (u >> 12) & 0xF
    top = entries[u3] - ((w << 4) if u3 & 0x8 else 0)
    return (entries[u & 0xF] + (entries[(u >> 4) & 0xF] << 4)
            + (entries[(u >> 8) & 0xF] << 8) + (top << 12))
