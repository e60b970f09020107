"""Floating-point ground truth and error metrics.

The reference transform is the direct O(n^2) sum in double precision,
deliberately independent of the streaming pipeline's factorization, so it
can serve as an oracle for it. Frames are 1-D complex128 numpy arrays.
"""

import math

import numpy as np

from .fixedpoint import Q15_SCALE, fx_from_real


def dft_direct(frame: np.ndarray) -> np.ndarray:
    """X[k] = sum_n x[n] * e^(-j*2*pi*n*k/N), evaluated term by term."""
    x = np.asarray(frame, dtype=np.complex128)
    n = len(x)
    if n < 1:
        raise ValueError("frame must hold at least one sample")
    idx = np.arange(n)
    out = np.empty(n, dtype=np.complex128)
    for k in range(n):
        out[k] = np.sum(x * np.exp(-2j * np.pi * k * idx / n))
    return out


def idft_direct(spectrum: np.ndarray) -> np.ndarray:
    """Inverse via the conjugate trick: conj(dft(conj(X))) / n."""
    x = np.asarray(spectrum, dtype=np.complex128)
    return np.conj(dft_direct(np.conj(x))) / len(x)


def max_abs_error(ref: np.ndarray, test: np.ndarray, scale: float = 1.0) -> float:
    """Largest per-component deviation |ref*scale - test| over all bins."""
    ref = np.asarray(ref, dtype=np.complex128)
    test = np.asarray(test, dtype=np.complex128)
    if ref.shape != test.shape:
        raise ValueError(f"length mismatch: {ref.shape} vs {test.shape}")
    diff = ref * scale - test
    if len(diff) == 0:
        return 0.0
    return float(max(np.abs(diff.real).max(), np.abs(diff.imag).max()))


def sqnr_db(ref: np.ndarray, test: np.ndarray, scale: float = 1.0) -> float:
    """Signal-to-quantization-noise ratio in dB of test against ref*scale.

    Returns math.inf for an exact match.
    """
    ref = np.asarray(ref, dtype=np.complex128)
    test = np.asarray(test, dtype=np.complex128)
    if ref.shape != test.shape:
        raise ValueError(f"length mismatch: {ref.shape} vs {test.shape}")
    signal = ref * scale
    p_signal = float(np.sum(np.abs(signal) ** 2))
    if p_signal == 0.0:
        raise ValueError("reference frame is all-zero")
    p_noise = float(np.sum(np.abs(signal - test) ** 2))
    if p_noise == 0.0:
        return math.inf
    return 10.0 * math.log10(p_signal / p_noise)


# -- frame generators and code conversions -------------------------------


def random_frame(n: int, rng: np.random.Generator, amplitude: float = 0.9) -> np.ndarray:
    """Uniform random complex frame with |re|, |im| <= amplitude."""
    return (rng.uniform(-amplitude, amplitude, n)
            + 1j * rng.uniform(-amplitude, amplitude, n))


def impulse_frame(n: int, amplitude: float = 0.5) -> np.ndarray:
    frame = np.zeros(n, dtype=np.complex128)
    frame[0] = amplitude
    return frame


def constant_frame(n: int, value: complex = 0.25) -> np.ndarray:
    return np.full(n, value, dtype=np.complex128)


def frame_to_codes(frame: np.ndarray) -> list:
    """Quantize a complex frame to a list of (re, im) Q1.15 code pairs."""
    return [(fx_from_real(float(v.real)), fx_from_real(float(v.imag)))
            for v in np.asarray(frame, dtype=np.complex128)]


def codes_to_frame(codes) -> np.ndarray:
    """Exact complex values represented by (re, im) code pairs."""
    arr = np.asarray(codes, dtype=np.float64)
    return (arr[:, 0] + 1j * arr[:, 1]) / Q15_SCALE
