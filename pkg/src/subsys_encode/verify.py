"""Simulator-backed checks that a circuit really encodes a code."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence, Union

import numpy as np

from . import gf2
from .circuit import Circuit, gate_report
from .codes import (
    LogicalOperators,
    SubsystemCode,
    ValidationError,
    check_logical_operators,
    subsystem_logicals,
)
from .conjugation import circuit_logicals, synthesize_conjugation_encoder
from .pauli import PauliWord
from .simulator import (
    MAX_QUBITS,
    StateVector,
    apply_circuit,
    apply_pauli,
    is_stabilized,
)
from .standard_synth import synthesize_subsystem_m1, synthesize_subsystem_m2

__all__ = [
    "TOL",
    "Check",
    "VerificationReport",
    "encode",
    "verify_encoder",
    "gauge_robustness_check",
    "logical_zero_check",
    "logical_frame",
    "cross_method_consistency",
]

TOL = 1e-9
GaugeMode = Union[str, tuple]


@dataclass(frozen=True)
class Check:
    message: str
    gauge: str
    name: str
    passed: bool
    detail: str = ""


@dataclass
class VerificationReport:
    checks: list[Check] = field(default_factory=list)
    gram: dict[str, np.ndarray] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def add(self, message, gauge, name, passed, detail="") -> None:
        self.checks.append(Check(message, gauge, name, bool(passed), detail))

    def to_text(self) -> str:
        lines = []
        for c in self.checks:
            status = "ok  " if c.passed else "FAIL"
            extra = f"  ({c.detail})" if c.detail else ""
            lines.append(f"{status} message={c.message} gauge={c.gauge} {c.name}{extra}")
        lines.append(f"result: {'PASS' if self.passed else 'FAIL'} ({len(self.checks) - len(self.failures)}/{len(self.checks)} checks)")
        return "\n".join(lines) + "\n"

    def to_kv(self) -> str:
        lines = [f"passed={str(self.passed).lower()}", f"checks={len(self.checks)}", f"failures={len(self.failures)}"]
        for i, c in enumerate(self.checks):
            lines.append(f"check.{i}={c.message},{c.gauge},{c.name},{'pass' if c.passed else 'fail'}")
        return "\n".join(lines) + "\n"


def _bits(value: int, width: int) -> list[int]:
    return [(value >> (width - 1 - j)) & 1 for j in range(width)]


def encode(
    circuit: Circuit,
    message: Sequence[int],
    gauge: Sequence[Sequence[complex]] | Sequence[int] | None = None,
    max_qubits: int = MAX_QUBITS,
) -> StateVector:
    """Run the circuit on |0> wires, basis ``message`` bits and gauge inputs.

    ``gauge`` entries are bits or single-qubit amplitude pairs; default |0>.
    """
    if circuit.n > max_qubits:
        raise ValueError(f"{circuit.n} qubits exceeds the simulation cap of {max_qubits}")
    msg, gw = circuit.message_wires, circuit.gauge_wires
    if len(message) != len(msg):
        raise ValidationError(f"circuit has {len(msg)} message wires, got {len(message)} bits")
    gauge = [0] * len(gw) if gauge is None else list(gauge)
    if len(gauge) != len(gw):
        raise ValidationError(f"circuit has {len(gw)} gauge wires, got {len(gauge)} inputs")
    factors = []
    for q in range(circuit.n):
        if q in msg:
            v = message[msg.index(q)]
        elif q in gw:
            v = gauge[gw.index(q)]
        else:
            v = 0
        factors.append([1 - v, v] if isinstance(v, (int, np.integer)) else list(v))
    return apply_circuit(StateVector.product(factors).normalized(), circuit)


def _gauge_settings(mode: GaugeMode, r: int) -> list[tuple[str, list]]:
    if mode == "zero":
        return [("0" * r, [0] * r)]
    if mode in ("basis-sweep", "sweep"):
        return [("".join(map(str, b)), list(b)) for b in itertools.product((0, 1), repeat=r)]
    if isinstance(mode, tuple) and len(mode) == 3 and mode[0] == "amplitude":
        a, b = complex(mode[1]), complex(mode[2])
        return [(f"{mode[1]}|0>+{mode[2]}|1>", [(a, b)] * r)]
    raise ValueError(f"unknown gauge mode {mode!r}")


def _sector_ok(state: StateVector, code: SubsystemCode, zbar, alpha, tol) -> tuple[bool, bool]:
    stab = all(is_stabilized(state, g, tol) for g in code.stabilizer)
    signs = all(is_stabilized(state, z if not a else z.negate(), tol) for z, a in zip(zbar, alpha))
    return stab, signs


def verify_encoder(
    code: SubsystemCode,
    logical: LogicalOperators,
    circuit: Circuit,
    gauge: GaugeMode = "zero",
    tol: float = TOL,
    max_qubits: int = MAX_QUBITS,
) -> VerificationReport:
    """Stabilization, logical Z signs, logical X action and orthogonality for
    every basis message, under the requested gauge inputs."""
    if circuit.n != code.n:
        raise ValidationError(f"circuit has {circuit.n} wires, code has {code.n} qubits")
    k = code.k
    if len(circuit.message_wires) != k or logical.k != k:
        raise ValidationError(f"circuit and logical operators must carry {k} message qubits")
    report = VerificationReport()
    for glabel, gvals in _gauge_settings(gauge, len(circuit.gauge_wires)):
        states = {}
        for a in range(2**k):
            alpha = _bits(a, k)
            label = "".join(map(str, alpha)) or "-"
            s = encode(circuit, alpha, gvals, max_qubits)
            states[a] = s
            stab, signs = _sector_ok(s, code, logical.zbar, alpha, tol)
            report.add(label, glabel, "stabilized", stab)
            report.add(label, glabel, "logical-z", signs)
            for i, xw in enumerate(logical.xbar):
                flipped = list(alpha)
                flipped[i] ^= 1
                stab_f, signs_f = _sector_ok(apply_pauli(s, xw), code, logical.zbar, flipped, tol)
                report.add(label, glabel, f"logical-x{i + 1}", stab_f and signs_f)
        gram = np.array([[states[a].inner(states[b]) for b in states] for a in states])
        report.gram[glabel] = gram
        report.add("*", glabel, "orthonormal", np.allclose(gram, np.eye(len(states)), atol=tol))
    return report


def gauge_robustness_check(
    code: SubsystemCode, circuit: Circuit, logical: LogicalOperators | None = None, tol: float = TOL
) -> VerificationReport:
    """Every computational-basis gauge input must still give code states with
    the gauge-|0> logical Z signs."""
    if logical is None:
        xs, zs = circuit_logicals(circuit)
        logical = LogicalOperators(tuple(xs), tuple(zs))
    report = VerificationReport()
    k = code.k
    for glabel, gvals in _gauge_settings("basis-sweep", len(circuit.gauge_wires)):
        for a in range(2**k):
            alpha = _bits(a, k)
            s = encode(circuit, alpha, gvals)
            stab, signs = _sector_ok(s, code, logical.zbar, alpha, tol)
            label = "".join(map(str, alpha)) or "-"
            report.add(label, glabel, "stabilized", stab)
            report.add(label, glabel, "logical-z", signs)
    return report


def logical_zero_check(state: StateVector, code: SubsystemCode, logical: LogicalOperators, tol: float = TOL) -> bool:
    """True iff ``state`` is fixed by every stabilizer row and every logical Z."""
    return all(is_stabilized(state, w, tol) for w in list(code.stabilizer) + list(logical.zbar))


def logical_frame(code: SubsystemCode, words: Sequence[PauliWord], reference: LogicalOperators) -> np.ndarray:
    """Coordinates of ``words`` in the reference logical basis modulo the gauge group.

    Row i holds the (X1..Xk, Z1..Zk) coefficients of ``words[i]``.
    """
    basis = list(reference.xbar) + list(reference.zbar) + code.gauge_rows()
    a = np.array([w.x + w.z for w in basis], dtype=np.uint8).T
    out = []
    for w in words:
        sol = gf2.solve(a, np.array(w.x + w.z, dtype=np.uint8))
        if sol is None:
            raise ValidationError(f"{w} is not a logical operator of this code")
        out.append(sol[: 2 * reference.k])
    return np.array(out, dtype=np.uint8).reshape(len(words), 2 * reference.k)


def cross_method_consistency(code: SubsystemCode, augment="gauge_z") -> dict:
    """Synthesize with all three methods (gauge wires |0>) and compare.

    Each circuit is checked against its own logical operators, which must be
    genuine logical operators of the code.  Logical content is compared as
    the frame of each circuit's operators in a common reference basis; the
    two standard-form methods must share a frame, and every frame must be
    invertible.
    """
    code = code.validate()
    reference = subsystem_logicals(code, augment)
    builders = {
        "std1": lambda: synthesize_subsystem_m1(code, augment),
        "std2": lambda: synthesize_subsystem_m2(code, augment),
        "conj": lambda: synthesize_conjugation_encoder(code),
    }
    methods = {}
    for name, build in builders.items():
        circuit = build()
        xs, zs = circuit_logicals(circuit)
        lo = LogicalOperators(tuple(xs), tuple(zs))
        entry = {"circuit": circuit, "gates": gate_report(circuit), "logical": lo}
        try:
            check_logical_operators(code, lo)
            entry["genuine_logicals"] = True
        except ValidationError as exc:
            entry["genuine_logicals"] = False
            entry["error"] = str(exc)
        entry["report"] = verify_encoder(code, lo, circuit, "zero")
        frame = logical_frame(code, list(xs) + list(zs), reference) if entry["genuine_logicals"] else None
        entry["frame"] = frame
        entry["frame_invertible"] = frame is not None and gf2.rank(frame) == 2 * code.k
        methods[name] = entry
    std_same = methods["std1"]["frame"] is not None and np.array_equal(methods["std1"]["frame"], methods["std2"]["frame"])
    agree = std_same and all(
        m["genuine_logicals"] and m["report"].passed and m["frame_invertible"] for m in methods.values()
    )
    return {"agree": bool(agree), "standard_frames_equal": bool(std_same), "methods": methods}
