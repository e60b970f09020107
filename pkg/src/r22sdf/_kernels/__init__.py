"""Hot-loop kernels: compiled core with a pure-Python fallback.

The streaming datapath and the bulk multiplier sweeps route through one of
two interchangeable implementations selected at import time:

* ``_core``   - Cython extension (built by setup.py; optional).
* ``_pure``   - plain Python / numpy, bit-identical, no compilation needed.

Set ``R22SDF_PURE=1`` in the environment to force the fallback even when
the extension is available. ``impl`` is the selected module and
``IMPL_NAME`` its short name; ``available_impls`` lists every importable
implementation so benchmarks can compare them.
"""

import os
from dataclasses import dataclass

import numpy as np

from . import _pure

try:
    from . import _core
except ImportError:
    _core = None

if _core is not None and not os.environ.get("R22SDF_PURE"):
    impl = _core
    IMPL_NAME = "cython"
else:
    impl = _pure
    IMPL_NAME = "pure"


def available_impls():
    impls = {"pure": _pure}
    if _core is not None:
        impls["cython"] = _core
    return impls


@dataclass
class KernelTables:
    """Frozen per-pipeline lookup tables consumed by both kernel impls.

    Schedule rows are indexed (multiplier stage, step mod n); an exponent
    of 0 in ``sched`` means exact pass-through and the matching w/rom
    entries are unused there.
    """

    n: int
    log2n: int
    stages: int
    backend: int  # 0 = mul4, 1 = mul3, 2 = lut
    sched: np.ndarray  # (stages-1, n) int32 exponents, 0 = pass
    w_re: np.ndarray  # (stages-1, n) int32 twiddle codes
    w_im: np.ndarray
    rom_idx: np.ndarray  # (stages-1, n) int32 index into rom tables, -1 = pass
    rom_re: np.ndarray  # (R, 16) int64 exact products w_re * u
    rom_im: np.ndarray  # (R, 16) int64
    rom_wre: np.ndarray  # (R,) int32 source codes for the sign correction
    rom_wim: np.ndarray
