import subprocess
import sys
from pathlib import Path

import pytest

from subsys_encode import bundled_specs
from subsys_encode.cli import main

SPECS = Path(__file__).resolve().parents[1] / "src" / "subsys_encode" / "specs"


def spec(name):
    return str(SPECS / f"{name}.code")


def test_inspect_valid(capsys):
    assert main(["inspect", spec("four_qubit_a")]) == 0
    out = capsys.readouterr().out
    assert "valid: yes" in out and "commutation" in out


def test_inspect_invalid(tmp_path, capsys):
    bad = tmp_path / "bad.code"
    bad.write_text("code n=2 k=0 r=0\n[stabilizer]\nXI\nZI\n")
    assert main(["inspect", str(bad)]) == 1
    assert "valid: no" in capsys.readouterr().out


def test_malformed_input_exit_code(tmp_path):
    bad = tmp_path / "bad.code"
    bad.write_text("code n=2\n")
    assert main(["inspect", str(bad)]) == 3
    assert main(["inspect", str(tmp_path / "missing.code")]) == 3


def test_standard_form_output(capsys):
    assert main(["standard-form", spec("five_qubit")]) == 0
    out = capsys.readouterr().out
    assert "YZIXZ" in out and "00000|01101  IZZIZ" in out and "00011|11100  ZZZXX" in out


@pytest.mark.parametrize("name", bundled_specs())
@pytest.mark.parametrize("method", ["std1", "std2", "conj"])
def test_synthesize_then_verify(name, method, tmp_path, capsys):
    circ = tmp_path / "c.circ"
    assert main(["synthesize", spec(name), "--method", method, "-o", str(circ)]) == 0
    assert main(["verify", spec(name), str(circ)]) == 0


def test_synthesis_is_deterministic(tmp_path):
    outs = []
    for i in range(2):
        f = tmp_path / f"{i}.circ"
        main(["synthesize", spec("bacon_shor"), "--method", "conj", "-o", str(f)])
        outs.append(f.read_text())
    assert outs[0] == outs[1]


def test_std2_matches_std1_without_gauge(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    main(["synthesize", spec("five_qubit"), "--method", "std1", "-o", str(a)])
    main(["synthesize", spec("five_qubit"), "--method", "std2", "-o", str(b)])
    assert a.read_text() == b.read_text()


def test_verify_detects_gauge_sensitivity(tmp_path, capsys):
    circ = tmp_path / "c.circ"
    main(["synthesize", spec("four_qubit_a"), "-o", str(circ)])
    assert main(["verify", spec("four_qubit_a"), str(circ), "--gauge", "basis-sweep"]) == 2
    conj = tmp_path / "d.circ"
    main(["synthesize", spec("four_qubit_a"), "--method", "conj", "-o", str(conj)])
    assert main(["verify", spec("four_qubit_a"), str(conj), "--gauge", "basis-sweep"]) == 0


def test_verify_kv_report(tmp_path):
    circ, kv = tmp_path / "c.circ", tmp_path / "r.kv"
    main(["synthesize", spec("five_qubit"), "-o", str(circ)])
    assert main(["verify", spec("five_qubit"), str(circ), "--kv", str(kv)]) == 0
    assert "=" in kv.read_text()


def test_verify_wire_mismatch(tmp_path):
    circ = tmp_path / "c.circ"
    main(["synthesize", spec("five_qubit"), "-o", str(circ)])
    assert main(["verify", spec("four_qubit_a"), str(circ)]) == 1


def test_transcript_file(tmp_path):
    circ, tr = tmp_path / "c.circ", tmp_path / "t.txt"
    assert main(["synthesize", spec("four_qubit_a_conj"), "--method", "conj", "--emit-transcript", str(tr), "-o", str(circ)]) == 0
    text = tr.read_text()
    assert text.startswith("transcript n=4 stages=5") and "cnot 4 3" in text


def test_transcript_needs_conj(tmp_path):
    assert main(["synthesize", spec("four_qubit_a"), "--emit-transcript", str(tmp_path / "t")]) == 1


def test_seeded_gauge_failure_is_reported(capsys):
    assert main(["synthesize", spec("four_qubit_b"), "--gauge-seeded"]) == 1
    assert "anticommutes with a primary generator" in capsys.readouterr().err


def test_seeded_gauge_circuit_is_gauge_robust(tmp_path):
    circ = tmp_path / "c.circ"
    assert main(["synthesize", spec("bacon_shor"), "--gauge-seeded", "-o", str(circ)]) == 0
    assert main(["verify", spec("bacon_shor"), str(circ), "--gauge", "basis-sweep"]) == 0


def test_simulate(tmp_path, capsys):
    circ = tmp_path / "c.circ"
    circ.write_text("circuit n=2\nh 1\ncnot 1 2\n")
    assert main(["simulate", str(circ)]) == 0
    out = capsys.readouterr().out.split()
    assert out[0] == "00" and out[3] == "11"
    assert main(["simulate", str(circ), "--input", "0x"]) == 3
    assert main(["simulate", str(circ), "--amp", "3", "1", "0"]) == 3


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "subsys_encode", "inspect", spec("shor")], capture_output=True, text=True)
    assert proc.returncode == 0 and "valid: yes" in proc.stdout
