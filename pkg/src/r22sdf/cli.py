"""Command-line front end: fft, romgen, verify, bench.

Exit status: 0 = success, 1 = verification check failure, 2 = usage or
input parse error.

Sample files hold one complex sample per line, either as decimal reals
("re,im", quantized on read) or as raw Q1.15 hex codes ("0xRRRR,0xIIII",
two's complement), auto-detected per line. All outputs are deterministic:
identical config and seed give byte-identical files, and the backend flag
never changes file content - only reported timing.
"""

import argparse
import os
import sys
import time

import numpy as np

from ._kernels import IMPL_NAME, available_impls
from .cmul import BACKENDS, quantize_twiddle
from .fixedpoint import Q15_SCALE, fx_from_real, fx_to_real
from .golden import DEFAULT_SEED, SQNR_FLOOR_DB, TOL_MAX_ABS
from .pipeline import VALID_LENGTHS, Pipeline, distinct_exponents, fft_frame
from .reference import (
    dft_direct,
    frame_to_codes,
    max_abs_error,
    random_frame,
    sqnr_db,
)
from .slicing import build_rom

ROM_ENTRY_MASK = (1 << 20) - 1  # dump width: 20-bit two's complement
VERIFY_FRAMES = 100


class SampleFileError(Exception):
    """Bad input file: parse failure, empty file or partial frame."""


# -- sample file I/O ------------------------------------------------------


def _parse_hex_code(field: str, lineno: int) -> int:
    try:
        raw = int(field, 16)
    except ValueError:
        raise SampleFileError(f"line {lineno}: bad hex code {field!r}") from None
    if not 0 <= raw <= 0xFFFF:
        raise SampleFileError(f"line {lineno}: hex code {field!r} wider than 16 bits")
    return raw - 0x10000 if raw & 0x8000 else raw


def parse_sample_line(line: str, lineno: int) -> tuple:
    """One sample: 're,im' decimal reals or '0xRRRR,0xIIII' raw codes."""
    parts = line.split(",")
    if len(parts) != 2:
        raise SampleFileError(f"line {lineno}: expected 're,im', got {line!r}")
    a, b = parts[0].strip(), parts[1].strip()
    if a.lower().startswith("0x"):
        return _parse_hex_code(a, lineno), _parse_hex_code(b, lineno)
    try:
        return fx_from_real(float(a)), fx_from_real(float(b))
    except ValueError:
        raise SampleFileError(f"line {lineno}: bad real sample {line!r}") from None


def read_sample_file(path: str, n: int) -> list:
    """Read whole frames of n samples; partial trailing frames are rejected."""
    samples = []
    with open(path, "r") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            samples.append(parse_sample_line(line, lineno))
    if not samples:
        raise SampleFileError("input file holds no samples")
    if len(samples) % n:
        raise SampleFileError(
            f"sample count {len(samples)} is not a multiple of n={n}")
    return [samples[i:i + n] for i in range(0, len(samples), n)]


def write_spectrum_csv(path: str, frames: list) -> None:
    with open(path, "w") as fh:
        fh.write("k,re_code,im_code,re_value,im_value\n")
        for frame in frames:
            for k, (re, im) in enumerate(frame):
                fh.write(f"{k},{re},{im},{fx_to_real(re)!r},{fx_to_real(im)!r}\n")


# -- subcommands ----------------------------------------------------------


def cmd_fft(args) -> int:
    try:
        frames = read_sample_file(args.infile, args.n)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SampleFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    pipe = Pipeline(args.n, args.backend)
    try:
        write_spectrum_csv(args.outfile, [fft_frame(pipe, f) for f in frames])
    except OSError as exc:
        print(f"error: cannot write {args.outfile}: {exc}", file=sys.stderr)
        return 2
    print(f"fft: {len(frames)} frame(s) of n={args.n} -> {args.outfile}")
    return 0


def rom_hex_lines(w: int) -> list:
    """16 possibility-table entries as 5-digit two's-complement hex."""
    rom = build_rom(w)
    return [f"{entry & ROM_ENTRY_MASK:05X}" for entry in rom.entries]


def cmd_romgen(args) -> int:
    try:
        os.makedirs(args.directory, exist_ok=True)
    except OSError as exc:
        print(f"error: cannot create {args.directory}: {exc}", file=sys.stderr)
        return 2
    exponents = distinct_exponents(args.n)
    manifest = []
    try:
        for e in exponents:
            w_re, w_im = quantize_twiddle(e, args.n)
            names = (f"w{e:04d}_re.hex", f"w{e:04d}_im.hex")
            for name, w in zip(names, (w_re, w_im)):
                with open(os.path.join(args.directory, name), "w") as fh:
                    fh.write("\n".join(rom_hex_lines(w)) + "\n")
            manifest.append(f"exponent={e} re={names[0]} im={names[1]}\n")
        with open(os.path.join(args.directory, "manifest.txt"), "w") as fh:
            fh.writelines(manifest)
    except OSError as exc:
        print(f"error: cannot write {args.directory}: {exc}", file=sys.stderr)
        return 2
    print(f"romgen: {len(exponents)} twiddle(s) for n={args.n} -> {args.directory}")
    return 0


def _check_slice_roundtrip() -> tuple:
    from .slicing import slice_code, unslice

    bad = sum(1 for x in range(-32768, 32768) if unslice(slice_code(x)) != x)
    return bad == 0, f"{65536 - bad}/65536 codes exact"


def _check_lut_exactness(n: int, kernel, corrupt: bool = False) -> tuple:
    """Possibility-ROM products vs plain integer products, exhaustively."""
    xs = np.arange(-32768, 32768, dtype=np.int32)
    direct = xs.astype(np.int64)
    checked = 0
    for e in distinct_exponents(n):
        for w in quantize_twiddle(e, n):
            entries = np.array(build_rom(w).entries, dtype=np.int64)
            if corrupt and checked == 0:
                entries[7] += 1  # fault injection: one poisoned table entry
            got = kernel.lut_products(entries, w, xs)
            if not np.array_equal(got, w * direct):
                return False, f"mismatch at exponent {e}, component code {w}"
            checked += 1
    if corrupt and not checked:
        return False, "fault injection requested but this length has no roms"
    return True, f"{checked} rom components x 65536 products exact"


def _check_backend_bitexact(n: int, seed: int, frames: int = 8) -> tuple:
    rng = np.random.default_rng(seed)
    pipes = {b: Pipeline(n, b) for b in BACKENDS}
    for i in range(frames):
        codes = frame_to_codes(random_frame(n, rng))
        outs = {b: fft_frame(p, codes) for b, p in pipes.items()}
        if not (outs["mul4"] == outs["mul3"] == outs["lut"]):
            return False, f"backends disagree on frame {i}"
    return True, f"{len(BACKENDS)} backends identical on {frames} frames"


def _measure_oracle(n: int, backend: str, seed: int, frames: int) -> tuple:
    """Max per-bin error and SQNR stats of the pipeline against the DFT."""
    rng = np.random.default_rng(seed)
    pipe = Pipeline(n, backend)
    worst = 0.0
    sqnrs = []
    for _ in range(frames):
        codes = frame_to_codes(random_frame(n, rng))
        quantized = np.array([(r + 1j * i) / Q15_SCALE for r, i in codes])
        ref = dft_direct(quantized)
        out = fft_frame(pipe, codes)
        got = np.array([(r + 1j * i) / Q15_SCALE for r, i in out])
        worst = max(worst, max_abs_error(ref, got, 1.0 / n))
        sqnrs.append(sqnr_db(ref, got, 1.0 / n))
    return worst, min(sqnrs), sum(sqnrs) / len(sqnrs)


def cmd_verify(args) -> int:
    from ._kernels import impl as kernel

    n, seed = args.n, args.seed
    checks = []
    checks.append(("slice_roundtrip",) + _check_slice_roundtrip())
    checks.append(("lut_exactness",) + _check_lut_exactness(
        n, kernel, corrupt=args.inject_rom_fault))
    checks.append(("backend_bitexact",) + _check_backend_bitexact(n, seed))

    worst, sqnr_min, sqnr_mean = _measure_oracle(n, args.backend, seed, VERIFY_FRAMES)
    tol = TOL_MAX_ABS[n]
    checks.append(("oracle_agreement", worst <= tol,
                   f"max_abs_error={worst:.3e} tol={tol:.3e}"))
    floor = SQNR_FLOOR_DB[n]
    checks.append(("sqnr", sqnr_min >= floor,
                   f"min={sqnr_min:.3f} dB floor={floor:.1f} dB"))

    ok = True
    for name, passed, detail in checks:
        ok &= passed
        print(f"[{'PASS' if passed else 'FAIL'}] {name}: {detail}")
    print(f"sqnr_min_db={sqnr_min:.3f}")
    print(f"sqnr_mean_db={sqnr_mean:.3f}")
    print(f"max_abs_error={worst:.6e}")
    print(f"verify: {'PASS' if ok else 'FAIL'} "
          f"(n={n} backend={args.backend} seed={seed} kernel={IMPL_NAME})")
    return 0 if ok else 1


def cmd_bench(args) -> int:
    n, steps = args.n, max(args.steps, 1)
    rng = np.random.default_rng(args.seed)
    in_re = rng.integers(-32768, 32768, size=steps).astype(np.int32)
    in_im = rng.integers(-32768, 32768, size=steps).astype(np.int32)
    pipe = Pipeline(n, args.backend)
    print("software throughput (simulator steps/second), not a hardware clock rate")
    for name, kernel in sorted(available_impls().items()):
        start = time.perf_counter()
        kernel.run_stream(pipe.kernel_tables, in_re, in_im)
        elapsed = time.perf_counter() - start
        print(f"impl={name} backend={args.backend} n={n} steps={steps} "
              f"elapsed_s={elapsed:.3f} steps_per_s={steps / elapsed:.3e}")
    return 0


# -- argument parsing ------------------------------------------------------


def _add_common(parser, backend=True):
    parser.add_argument("--n", type=int, default=16, choices=VALID_LENGTHS,
                        help="transform length (power of 4)")
    if backend:
        parser.add_argument("--backend", choices=BACKENDS, default="mul4",
                            help="complex multiplier datapath")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="r22sdf",
        description="Bit-exact streaming radix-2^2 SDF fixed-point FFT simulator",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_fft = sub.add_parser("fft", help="transform whole frames from a sample file")
    _add_common(p_fft)
    p_fft.add_argument("--in", dest="infile", required=True, help="input sample file")
    p_fft.add_argument("--out", dest="outfile", required=True, help="output CSV")
    p_fft.set_defaults(func=cmd_fft)

    p_rom = sub.add_parser("romgen", help="dump twiddle possibility ROM hex images")
    _add_common(p_rom, backend=False)
    p_rom.add_argument("--dir", dest="directory", required=True,
                       help="output directory for .hex images and manifest")
    p_rom.set_defaults(func=cmd_romgen)

    p_ver = sub.add_parser("verify", help="run the self-verification suite")
    _add_common(p_ver)
    p_ver.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p_ver.add_argument("--inject-rom-fault", action="store_true",
                       help=argparse.SUPPRESS)
    p_ver.set_defaults(func=cmd_verify)

    p_bench = sub.add_parser("bench", help="measure streaming throughput")
    _add_common(p_bench)
    p_bench.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p_bench.add_argument("--steps", type=int, default=1_000_000,
                         help="samples to stream (default 1e6)")
    p_bench.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
