"""Command line interface.

Exit codes: 0 success, 1 invalid code or failed synthesis, 2 failed
verification, 3 unreadable or malformed input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import gf2
from .circuit import format_circuit, gate_report, parse_circuit
from .codes import (
    LogicalOperators,
    SubsystemCode,
    ValidationError,
    augmented_stabilizer,
    check_logical_operators,
    derive_logical_operators,
    standard_form,
)
from .conjugation import circuit_logicals, conjugation_transcript
from .pauli import MalformedInputError, PauliWord
from .simulator import MAX_QUBITS, StateVector, apply_circuit, format_state
from .specfile import load_code_spec
from .standard_synth import synthesize_subsystem_m1, synthesize_subsystem_m2
from .verify import gauge_robustness_check, verify_encoder

EXIT_OK, EXIT_INVALID, EXIT_VERIFY, EXIT_INPUT = 0, 1, 2, 3
_AUGMENT = {"gz": "gauge_z", "gx": "gauge_x"}


def _bits(w: PauliWord) -> str:
    return "".join(map(str, w.x)) + "|" + "".join(map(str, w.z))


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_inspect(args) -> int:
    code = load_code_spec(args.spec, validate=False)
    lines = [f"code n={code.n} k={code.k} r={code.r} s={code.s}"]
    labelled = [(f"S{i + 1}", w) for i, w in enumerate(code.stabilizer)]
    labelled += [(f"gx{i + 1}", w) for i, w in enumerate(code.gauge_x)]
    labelled += [(f"gz{i + 1}", w) for i, w in enumerate(code.gauge_z)]
    labelled += [(f"LX{i + 1}", w) for i, w in enumerate(code.logical_x)]
    labelled += [(f"LZ{i + 1}", w) for i, w in enumerate(code.logical_z)]
    width = max(len(name) for name, _ in labelled)
    for name, w in labelled:
        lines.append(f"{name:<{width}}  {str(w):>{code.n + 2}}  {_bits(w)}")
    gram = gf2.symplectic_gram(np.array([w.x + w.z for _, w in labelled], dtype=np.uint8))
    lines.append("commutation (1 = anticommute):")
    lines.append(" " * (width + 2) + " ".join(f"{name:>{width}}" for name, _ in labelled))
    for (name, _), row in zip(labelled, gram):
        lines.append(f"{name:<{width}}  " + " ".join(f"{v:>{width}}" for v in row))
    try:
        code.validate()
        lines.append("valid: yes")
        status = EXIT_OK
    except ValidationError as exc:
        lines.append(f"valid: no ({exc})")
        status = EXIT_INVALID
    _emit("\n".join(lines) + "\n", None)
    return status


def cmd_standard_form(args) -> int:
    code = load_code_spec(args.spec)
    target = augmented_stabilizer(code, _AUGMENT[args.augment]) if code.r else code.stabilizer_code()
    sf = standard_form(target, relaxed=args.relaxed)
    lo = derive_logical_operators(sf, code.k)
    lines = [f"standard form n={sf.n} k={code.k} s'={sf.s_prime}" + (" relaxed" if args.relaxed else "")]
    lines.append("perm " + " ".join(str(p + 1) for p in sf.perm))
    lines.append("[rows]")
    for w in sf.matrix.rows:
        lines.append(f"{_bits(w)}  {w}")
    lines.append("[logical_z]")
    lines += [f"{_bits(w.permuted(sf.perm))}  {w}" for w in lo.zbar]
    lines.append("[logical_x]")
    lines += [f"{_bits(w.permuted(sf.perm))}  {w}" for w in lo.xbar]
    _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def _format_transcript(result, code: SubsystemCode) -> str:
    s, r = code.s, code.r

    def block(rows):
        out = ["[stabilizer]"] + [str(w) for w in rows[:s]]
        if r:
            out += ["[gauge_x]"] + [str(w) for w in rows[s + r :]]
            out += ["[gauge_z]"] + [str(w) for w in rows[s : s + r]]
        return out

    lines = [f"transcript n={code.n} stages={len(result.stages)}", "# input rows"]
    lines += block(result.initial_rows)
    for i, st in enumerate(result.stages, 1):
        lines.append(f"# stage {i}: {st.label}")
        lines += [g.text() for g in st.gates]
        lines += block(st.rows)
    return "\n".join(lines) + "\n"


def cmd_synthesize(args) -> int:
    code = load_code_spec(args.spec)
    augment = _AUGMENT[args.augment]
    elide = not args.no_elide
    if args.method != "std1" and args.gauge_seeded:
        raise ValidationError("--gauge-seeded applies to --method std1 only")
    if args.method != "conj" and args.emit_transcript:
        raise ValidationError("--emit-transcript applies to --method conj only")
    if args.method == "std1":
        circuit = synthesize_subsystem_m1(code, augment, "seeded" if args.gauge_seeded else "zero", elide)
    elif args.method == "std2":
        circuit = synthesize_subsystem_m2(code, augment, elide)
    else:
        result = conjugation_transcript(code, elide_trivial_h=elide)
        circuit = result.circuit
        if args.emit_transcript:
            Path(args.emit_transcript).write_text(_format_transcript(result, code))
    report = gate_report(circuit)
    counts = ", ".join(f"{k}={v}" for k, v in report["by_kind"].items())
    comments = [f"code n={code.n} k={code.k} r={code.r}", f"gates {report['total']} ({counts}); two-qubit {report['two_qubit']}"]
    _emit(format_circuit(circuit, comments), args.output)
    return EXIT_OK


def _parse_gauge(args):
    if args.gauge == "amplitude":
        if args.amplitude is None:
            raise ValidationError("--gauge amplitude needs --amplitude A B")
        a, b = args.amplitude
        return ("amplitude", complex(a), complex(b))
    return args.gauge


def cmd_verify(args) -> int:
    code = load_code_spec(args.spec)
    circuit = parse_circuit(Path(args.circuit).read_text())
    if circuit.n != code.n:
        raise ValidationError(f"circuit has {circuit.n} wires but the code has {code.n} qubits")
    if code.logical_x and code.logical_z:
        logical = LogicalOperators(code.logical_x, code.logical_z)
        source = "declared"
    else:
        xs, zs = circuit_logicals(circuit)
        logical = LogicalOperators(tuple(xs), tuple(zs))
        source = "circuit"
    lines = [f"logical operators ({source}): X " + " ".join(map(str, logical.xbar)) + "; Z " + " ".join(map(str, logical.zbar))]
    genuine = True
    try:
        check_logical_operators(code, logical)
    except ValidationError as exc:
        genuine = False
        lines.append(f"FAIL logical operators are not valid for this code: {exc}")
    gauge = _parse_gauge(args)
    report = verify_encoder(code, logical, circuit, gauge, max_qubits=args.max_qubits)
    text = "\n".join(lines) + "\n" + report.to_text()
    ok = genuine and report.passed
    if args.gauge == "basis-sweep":
        robust = gauge_robustness_check(code, circuit, logical)
        text += f"gauge robustness: {'PASS' if robust.passed else 'FAIL'}\n"
        ok = ok and robust.passed
    _emit(text, None)
    if args.kv:
        Path(args.kv).write_text(report.to_kv())
    return EXIT_OK if ok else EXIT_VERIFY


_WIRE_STATES = {"0": (1, 0), "1": (0, 1), "+": (2**-0.5, 2**-0.5), "-": (2**-0.5, -(2**-0.5))}


def cmd_simulate(args) -> int:
    circuit = parse_circuit(Path(args.circuit).read_text())
    if circuit.n > args.max_qubits:
        raise ValidationError(f"{circuit.n} qubits exceeds --max-qubits {args.max_qubits}")
    states = [list(_WIRE_STATES["0"]) for _ in range(circuit.n)]
    if args.input:
        if len(args.input) != circuit.n or any(ch not in _WIRE_STATES for ch in args.input):
            raise MalformedInputError(f"--input must be {circuit.n} characters from 0 1 + -")
        states = [list(_WIRE_STATES[ch]) for ch in args.input]
    for q, a, b in args.amp or ():
        q = int(q)
        if not 1 <= q <= circuit.n:
            raise MalformedInputError(f"--amp wire {q} outside 1..{circuit.n}")
        states[q - 1] = [complex(a), complex(b)]
    state = StateVector.product(states).normalized()
    _emit(format_state(apply_circuit(state, circuit)), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="subsys-encode", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("inspect", help="summarize and validate a code spec")
    p.add_argument("spec")
    p.set_defaults(func=cmd_inspect)

    p = sub.add_parser("standard-form", help="print the standard form and logical operators")
    p.add_argument("spec")
    p.add_argument("--relaxed", action="store_true", help="upper-triangular X block")
    p.add_argument("--augment", choices=sorted(_AUGMENT), default="gz")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_standard_form)

    p = sub.add_parser("synthesize", help="write an encoding circuit")
    p.add_argument("spec")
    p.add_argument("--method", choices=("std1", "std2", "conj"), default="std1")
    p.add_argument("--augment", choices=sorted(_AUGMENT), default="gz")
    p.add_argument("--no-elide", action="store_true", help="keep redundant Z-type gates and trivial H gates")
    p.add_argument("--gauge-seeded", action="store_true", help="std1: let gauge inputs |1> act as gauge operators")
    p.add_argument("--emit-transcript", metavar="FILE", help="conj: write the decoding transcript")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_synthesize)

    p = sub.add_parser("verify", help="simulate a circuit against a code")
    p.add_argument("spec")
    p.add_argument("circuit")
    p.add_argument("--gauge", choices=("zero", "basis-sweep", "amplitude"), default="zero")
    p.add_argument("--amplitude", nargs=2, metavar=("A", "B"), help="gauge state A|0> + B|1>")
    p.add_argument("--kv", metavar="FILE", help="also write a key=value report")
    p.add_argument("--max-qubits", type=int, default=MAX_QUBITS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("simulate", help="apply a circuit to a product state and dump amplitudes")
    p.add_argument("circuit")
    p.add_argument("--input", help="one of 0 1 + - per wire")
    p.add_argument("--amp", nargs=3, action="append", metavar=("WIRE", "A", "B"), help="wire state A|0> + B|1>")
    p.add_argument("--max-qubits", type=int, default=MAX_QUBITS)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_simulate)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (MalformedInputError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
