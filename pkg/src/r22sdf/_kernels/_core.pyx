# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel core.

Mirrors _pure exactly: identical control bits, rounding and saturation.
Signed right shifts compile to arithmetic shifts, matching Python's floor
semantics for the shared tie-toward-+infinity rounding sites.
"""

import numpy as np

cimport cython
from libc.stdint cimport int32_t, int64_t


cdef inline int64_t _sat16(int64_t v) nogil:
    if v > 32767:
        return 32767
    if v < -32768:
        return -32768
    return v


cdef inline int64_t _round_q30(int64_t acc) nogil:
    return _sat16((acc + 16384) >> 15)


cdef inline int64_t _lut_scalar(const int64_t* entries, int64_t w, int64_t x) nogil:
    cdef int64_t u = x & 0xFFFF
    cdef int64_t u3 = (u >> 12) & 0xF
    cdef int64_t top = entries[u3] - ((w << 4) if (u3 & 0x8) else 0)
    return (entries[u & 0xF] + (entries[(u >> 4) & 0xF] << 4)
            + (entries[(u >> 8) & 0xF] << 8) + (top << 12))


def cmul4_batch(ar, ai, br, bi):
    """Four-multiplier complex products over code arrays."""
    cdef const int32_t[::1] var = np.ascontiguousarray(ar, dtype=np.int32)
    cdef const int32_t[::1] vai = np.ascontiguousarray(ai, dtype=np.int32)
    cdef const int32_t[::1] vbr = np.ascontiguousarray(br, dtype=np.int32)
    cdef const int32_t[::1] vbi = np.ascontiguousarray(bi, dtype=np.int32)
    cdef Py_ssize_t count = var.shape[0]
    out_re = np.empty(count, dtype=np.int32)
    out_im = np.empty(count, dtype=np.int32)
    cdef int32_t[::1] vor = out_re
    cdef int32_t[::1] voi = out_im
    cdef Py_ssize_t i
    cdef int64_t xr, xi, wr, wi
    with nogil:
        for i in range(count):
            xr = var[i]
            xi = vai[i]
            wr = vbr[i]
            wi = vbi[i]
            vor[i] = <int32_t>_round_q30(xr * wr - xi * wi)
            voi[i] = <int32_t>_round_q30(xi * wr + xr * wi)
    return out_re, out_im


def cmul3_batch(ar, ai, br, bi):
    """Three-multiplier complex products over code arrays."""
    cdef const int32_t[::1] var = np.ascontiguousarray(ar, dtype=np.int32)
    cdef const int32_t[::1] vai = np.ascontiguousarray(ai, dtype=np.int32)
    cdef const int32_t[::1] vbr = np.ascontiguousarray(br, dtype=np.int32)
    cdef const int32_t[::1] vbi = np.ascontiguousarray(bi, dtype=np.int32)
    cdef Py_ssize_t count = var.shape[0]
    out_re = np.empty(count, dtype=np.int32)
    out_im = np.empty(count, dtype=np.int32)
    cdef int32_t[::1] vor = out_re
    cdef int32_t[::1] voi = out_im
    cdef Py_ssize_t i
    cdef int64_t xr, xi, wr, wi, m1, m2, m3
    with nogil:
        for i in range(count):
            xr = var[i]
            xi = vai[i]
            wr = vbr[i]
            wi = vbi[i]
            m1 = wr * (xr - xi)
            m2 = xi * (wr - wi)
            m3 = wi * (xr + xi)
            vor[i] = <int32_t>_round_q30(m1 + m2)
            voi[i] = <int32_t>_round_q30(m3 + m2)
    return out_re, out_im


def cmul_lut_batch(ar, ai, br, bi):
    """Digit-slicing multiplier-less complex products over code arrays.

    Builds the two 16-entry possibility tables per pair and resolves every
    real product through table lookups, shifts and adds.
    """
    cdef const int32_t[::1] var = np.ascontiguousarray(ar, dtype=np.int32)
    cdef const int32_t[::1] vai = np.ascontiguousarray(ai, dtype=np.int32)
    cdef const int32_t[::1] vbr = np.ascontiguousarray(br, dtype=np.int32)
    cdef const int32_t[::1] vbi = np.ascontiguousarray(bi, dtype=np.int32)
    cdef Py_ssize_t count = var.shape[0]
    out_re = np.empty(count, dtype=np.int32)
    out_im = np.empty(count, dtype=np.int32)
    cdef int32_t[::1] vor = out_re
    cdef int32_t[::1] voi = out_im
    cdef Py_ssize_t i
    cdef int64_t xr, xi, wr, wi, u
    cdef int64_t tab_re[16]
    cdef int64_t tab_im[16]
    with nogil:
        for i in range(count):
            xr = var[i]
            xi = vai[i]
            wr = vbr[i]
            wi = vbi[i]
            for u in range(16):
                tab_re[u] = wr * u
                tab_im[u] = wi * u
            vor[i] = <int32_t>_round_q30(
                _lut_scalar(tab_re, wr, xr) - _lut_scalar(tab_im, wi, xi))
            voi[i] = <int32_t>_round_q30(
                _lut_scalar(tab_re, wr, xi) + _lut_scalar(tab_im, wi, xr))
    return out_re, out_im


def lut_products(entries, w, xs):
    """Exact products w * x through an actual 16-entry table gather."""
    cdef const int64_t[::1] tab = np.ascontiguousarray(entries, dtype=np.int64)
    cdef const int32_t[::1] vx = np.ascontiguousarray(xs, dtype=np.int32)
    cdef int64_t wc = w
    cdef Py_ssize_t count = vx.shape[0]
    out = np.empty(count, dtype=np.int64)
    cdef int64_t[::1] vo = out
    cdef Py_ssize_t i
    with nogil:
        for i in range(count):
            vo[i] = _lut_scalar(&tab[0], wc, vx[i])
    return out


def run_stream(tables, in_re, in_im):
    """Stream code arrays through the pipeline from reset.

    Returns the emitted outputs: len(input) - (n-1) pairs as int32 arrays.
    """
    cdef int64_t n = tables.n
    cdef int log2n = tables.log2n
    cdef int m = tables.stages
    cdef int backend = tables.backend
    cdef const int32_t[:, ::1] sched = tables.sched
    cdef const int32_t[:, ::1] w_re = tables.w_re
    cdef const int32_t[:, ::1] w_im = tables.w_im
    cdef const int32_t[:, ::1] rom_idx = tables.rom_idx
    cdef const int64_t[:, ::1] rom_re = tables.rom_re
    cdef const int64_t[:, ::1] rom_im = tables.rom_im
    cdef const int32_t[::1] rom_wre = tables.rom_wre
    cdef const int32_t[::1] rom_wim = tables.rom_wim
    cdef const int32_t[::1] vin_re = np.ascontiguousarray(in_re, dtype=np.int32)
    cdef const int32_t[::1] vin_im = np.ascontiguousarray(in_im, dtype=np.int32)

    cdef Py_ssize_t total = vin_re.shape[0]
    cdef Py_ssize_t n_out = total - (n - 1) if total >= n else 0
    out_re = np.empty(n_out, dtype=np.int32)
    out_im = np.empty(n_out, dtype=np.int32)
    cdef int32_t[::1] vout_re = out_re
    cdef int32_t[::1] vout_im = out_im

    # Feedback rings for the 2m units, flattened; unit k has length n >> (k+1)
    # at offset n - 2*(n >> k)... computed directly below. Total is n - 1.
    fb = np.zeros(2 * (n - 1), dtype=np.int64)  # re then im, interleaved blocks
    cdef int64_t[::1] vfb = fb
    cdef Py_ssize_t[64] offset
    cdef Py_ssize_t[64] length
    cdef Py_ssize_t[64] pos
    cdef int k
    cdef Py_ssize_t acc = 0
    for k in range(2 * m):
        offset[k] = acc
        length[k] = n >> (k + 1)
        pos[k] = 0
        acc += 2 * length[k]  # re at offset, im at offset + length

    cdef Py_ssize_t t, p
    cdef int64_t tau, xr, xi, dr, di, tmp, acc_r, acc_i, wr, wi, m2
    cdef int s, u, c1, c2, ridx
    with nogil:
        for t in range(total):
            tau = t % n
            xr = vin_re[t]
            xi = vin_im[t]
            for s in range(m):
                # Butterfly I
                u = 2 * s
                c1 = (tau >> (log2n - u - 1)) & 1
                p = offset[u] + pos[u]
                dr = vfb[p]
                di = vfb[p + length[u]]
                if c1:
                    # halves saturate: full-scale corners can overshoot by one
                    vfb[p] = _sat16((dr - xr + 1) >> 1)
                    vfb[p + length[u]] = _sat16((di - xi + 1) >> 1)
                    xr = _sat16((dr + xr + 1) >> 1)
                    xi = _sat16((di + xi + 1) >> 1)
                else:
                    vfb[p] = xr
                    vfb[p + length[u]] = xi
                    xr = dr
                    xi = di
                pos[u] = pos[u] + 1 if pos[u] + 1 < length[u] else 0
                # Butterfly II with the exact -j rotation in local quarter 1
                u = 2 * s + 1
                c2 = (tau >> (log2n - u - 1)) & 1
                if c2 and not c1:
                    tmp = xr
                    xr = xi
                    xi = -tmp
                p = offset[u] + pos[u]
                dr = vfb[p]
                di = vfb[p + length[u]]
                if c2:
                    vfb[p] = _sat16((dr - xr + 1) >> 1)
                    vfb[p + length[u]] = _sat16((di - xi + 1) >> 1)
                    xr = _sat16((dr + xr + 1) >> 1)
                    xi = _sat16((di + xi + 1) >> 1)
                else:
                    vfb[p] = xr
                    vfb[p + length[u]] = xi
                    xr = dr
                    xi = di
                pos[u] = pos[u] + 1 if pos[u] + 1 < length[u] else 0
                # Twiddle multiplier (absent after the last stage)
                if s < m - 1 and sched[s, tau]:
                    if backend == 0:
                        wr = w_re[s, tau]
                        wi = w_im[s, tau]
                        acc_r = xr * wr - xi * wi
                        acc_i = xi * wr + xr * wi
                    elif backend == 1:
                        wr = w_re[s, tau]
                        wi = w_im[s, tau]
                        m2 = xi * (wr - wi)
                        acc_r = wr * (xr - xi) + m2
                        acc_i = wi * (xr + xi) + m2
                    else:
                        ridx = rom_idx[s, tau]
                        acc_r = (_lut_scalar(&rom_re[ridx, 0], rom_wre[ridx], xr)
                                 - _lut_scalar(&rom_im[ridx, 0], rom_wim[ridx], xi))
                        acc_i = (_lut_scalar(&rom_re[ridx, 0], rom_wre[ridx], xi)
                                 + _lut_scalar(&rom_im[ridx, 0], rom_wim[ridx], xr))
                    xr = _round_q30(acc_r)
                    xi = _round_q30(acc_i)
            if t >= n - 1:
                vout_re[t - (n - 1)] = <int32_t>xr
                vout_im[t - (n - 1)] = <int32_t>xi
    return out_re, out_im
