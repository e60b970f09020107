import filecmp
from pathlib import Path

import pytest

from r22sdf.cli import main, parse_sample_line, rom_hex_lines, SampleFileError

GOLDEN_ROMS = Path(__file__).parent / "golden" / "romgen_n16"


def write_impulse(path, n=16, hex_codes=False):
    lines = []
    for i in range(n):
        if hex_codes:
            lines.append("0x4000,0x0000" if i == 0 else "0x0000,0x0000")
        else:
            lines.append("0.5,0" if i == 0 else "0,0")
    path.write_text("\n".join(lines) + "\n")


def test_parse_sample_line_formats():
    assert parse_sample_line("0.5,-0.25", 1) == (16384, -8192)
    assert parse_sample_line("0x4000,0xFFFF", 1) == (16384, -1)
    assert parse_sample_line("0x8000,0x7FFF", 1) == (-32768, 32767)
    with pytest.raises(SampleFileError, match="line 3"):
        parse_sample_line("zzz,1", 3)
    with pytest.raises(SampleFileError, match="line 7"):
        parse_sample_line("0x12345,0x0", 7)
    with pytest.raises(SampleFileError):
        parse_sample_line("1.0", 1)


@pytest.mark.parametrize("hex_codes", [False, True], ids=["decimal", "hex"])
def test_fft_impulse_csv(tmp_path, hex_codes):
    infile = tmp_path / "in.txt"
    outfile = tmp_path / "out.csv"
    write_impulse(infile, hex_codes=hex_codes)
    assert main(["fft", "--n", "16", "--in", str(infile), "--out", str(outfile)]) == 0
    rows = outfile.read_text().splitlines()
    assert rows[0] == "k,re_code,im_code,re_value,im_value"
    assert len(rows) == 17
    for k, row in enumerate(rows[1:]):
        assert row == f"{k},1024,0,0.03125,0.0"


def test_fft_output_independent_of_backend(tmp_path):
    infile = tmp_path / "in.txt"
    write_impulse(infile)
    outs = []
    for backend in ("mul4", "mul3", "lut"):
        out = tmp_path / f"out_{backend}.csv"
        assert main(["fft", "--n", "16", "--backend", backend,
                     "--in", str(infile), "--out", str(out)]) == 0
        outs.append(out)
    assert filecmp.cmp(outs[0], outs[1], shallow=False)
    assert filecmp.cmp(outs[0], outs[2], shallow=False)
    # and identical config reruns are byte-identical
    rerun = tmp_path / "rerun.csv"
    assert main(["fft", "--n", "16", "--backend", "mul4",
                 "--in", str(infile), "--out", str(rerun)]) == 0
    assert filecmp.cmp(outs[0], rerun, shallow=False)


def test_fft_multi_frame(tmp_path):
    infile = tmp_path / "in.txt"
    outfile = tmp_path / "out.csv"
    write_impulse(infile)
    text = infile.read_text()
    infile.write_text(text + text)   # two identical frames
    assert main(["fft", "--n", "16", "--in", str(infile), "--out", str(outfile)]) == 0
    rows = outfile.read_text().splitlines()[1:]
    assert len(rows) == 32
    assert rows[:16] == rows[16:]


@pytest.mark.parametrize("content,msg", [
    ("", "no samples"),
    ("0,0\n" * 17, "not a multiple"),
    ("0,0\nbananas,0\n" + "0,0\n" * 14, "line 2"),
])
def test_fft_input_errors(tmp_path, capsys, content, msg):
    infile = tmp_path / "in.txt"
    infile.write_text(content)
    rc = main(["fft", "--n", "16", "--in", str(infile), "--out", str(tmp_path / "o")])
    assert rc == 2
    assert msg in capsys.readouterr().err


def test_fft_missing_file(tmp_path):
    rc = main(["fft", "--n", "16", "--in", str(tmp_path / "nope"),
               "--out", str(tmp_path / "o")])
    assert rc == 2


def test_usage_error_exit_code(tmp_path):
    with pytest.raises(SystemExit) as exc:
        main(["fft", "--n", "16", "--backend", "warp", "--in", "x", "--out", "y"])
    assert exc.value.code == 2


def test_romgen_reproduces_committed_golden(tmp_path):
    outdir = tmp_path / "roms"
    assert main(["romgen", "--n", "16", "--dir", str(outdir)]) == 0
    golden_files = sorted(p.name for p in GOLDEN_ROMS.iterdir())
    got_files = sorted(p.name for p in outdir.iterdir())
    assert got_files == golden_files
    for name in golden_files:
        assert (outdir / name).read_bytes() == (GOLDEN_ROMS / name).read_bytes(), name


def test_romgen_rom_file_shape(tmp_path):
    outdir = tmp_path / "roms"
    assert main(["romgen", "--n", "16", "--dir", str(outdir)]) == 0
    manifest = (outdir / "manifest.txt").read_text().splitlines()
    assert manifest[0] == "exponent=0 re=w0000_re.hex im=w0000_im.hex"
    # exactly the distinct exponents the stage-1 schedule produces
    listed = [int(line.split()[0].split("=")[1]) for line in manifest]
    assert listed == [0, 1, 2, 3, 4, 6, 9]
    lines = (outdir / "w0000_re.hex").read_text().splitlines()
    assert len(lines) == 16
    assert lines[0] == "00000"
    assert lines[1] == "07FFF"
    assert all(len(line) == 5 for line in lines)


def test_rom_hex_lines_negative_entries():
    lines = rom_hex_lines(-32768)
    assert lines[0] == "00000"
    assert lines[1] == "F8000"    # -32768 in 20-bit two's complement
    assert lines[15] == "88000"   # -491520


def test_verify_passes(capsys):
    assert main(["verify", "--n", "16", "--backend", "lut"]) == 0
    out = capsys.readouterr().out
    assert "sqnr_min_db=" in out
    assert "[PASS] slice_roundtrip" in out
    assert "[FAIL]" not in out


def test_verify_detects_injected_rom_fault(capsys):
    assert main(["verify", "--n", "16", "--inject-rom-fault"]) == 1
    out = capsys.readouterr().out
    assert "[FAIL] lut_exactness" in out


def test_bench_runs(capsys):
    assert main(["bench", "--n", "16", "--steps", "4096"]) == 0
    out = capsys.readouterr().out
    assert "software throughput" in out
    assert "steps_per_s=" in out
