"""Gate lists, the circuit text format and gate counting.

Qubits are 0-based in memory and 1-based in text.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field

from .pauli import MalformedInputError

__all__ = ["Gate", "Circuit", "CircuitParseError", "parse_circuit", "format_circuit", "gate_report", "WIRE_ROLES"]

SINGLE = ("H", "P", "X", "Z")
TWO = ("CNOT", "CPAULI")
WIRE_ROLES = ("zero", "gauge", "message")


@dataclass(frozen=True)
class Gate:
    kind: str
    qubits: tuple[int, ...]
    pauli: str = ""

    def __post_init__(self):
        if self.kind in SINGLE:
            ok = len(self.qubits) == 1 and not self.pauli
        elif self.kind == "CNOT":
            ok = len(self.qubits) == 2 and not self.pauli
        elif self.kind == "CPAULI":
            ok = len(self.qubits) == 2 and self.pauli in ("X", "Y", "Z")
        else:
            ok = False
        if not ok or (len(self.qubits) == 2 and self.qubits[0] == self.qubits[1]):
            raise MalformedInputError(f"bad gate {self.kind} {self.qubits} {self.pauli}")

    @classmethod
    def h(cls, q):
        return cls("H", (q,))

    @classmethod
    def p(cls, q):
        return cls("P", (q,))

    @classmethod
    def x(cls, q):
        return cls("X", (q,))

    @classmethod
    def z(cls, q):
        return cls("Z", (q,))

    @classmethod
    def cnot(cls, c, t):
        return cls("CNOT", (c, t))

    @classmethod
    def cpauli(cls, c, t, pauli):
        if pauli == "X":
            return cls("CNOT", (c, t))
        return cls("CPAULI", (c, t), pauli)

    @property
    def two_qubit(self) -> bool:
        return len(self.qubits) == 2

    @property
    def control(self) -> int:
        return self.qubits[0]

    @property
    def target(self) -> int:
        return self.qubits[-1]

    def relabeled(self, mapping) -> "Gate":
        return Gate(self.kind, tuple(mapping[q] for q in self.qubits), self.pauli)

    def text(self) -> str:
        qs = " ".join(str(q + 1) for q in self.qubits)
        if self.kind == "CPAULI":
            return f"cpauli {qs} {self.pauli}"
        return f"{self.kind.lower()} {qs}"

    def __str__(self) -> str:
        return self.text()


@dataclass(frozen=True)
class Circuit:
    """Gates applied in order to ``n`` wires.

    ``layout[q]`` says how wire ``q`` is initialised: ``zero`` (|0>),
    ``gauge`` (free gauge qubit, |0> by default) or ``message``.
    """

    n: int
    gates: tuple[Gate, ...] = ()
    layout: tuple[str, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "gates", tuple(self.gates))
        if not self.layout:
            object.__setattr__(self, "layout", ("zero",) * self.n)
        object.__setattr__(self, "layout", tuple(self.layout))
        if len(self.layout) != self.n or any(r not in WIRE_ROLES for r in self.layout):
            raise MalformedInputError(f"layout must list one of {WIRE_ROLES} per wire")
        for g in self.gates:
            if any(q < 0 or q >= self.n for q in g.qubits):
                raise MalformedInputError(f"gate {g} outside 1..{self.n}")

    def wires(self, role: str) -> list[int]:
        return [q for q, r in enumerate(self.layout) if r == role]

    @property
    def message_wires(self) -> list[int]:
        return self.wires("message")

    @property
    def gauge_wires(self) -> list[int]:
        return self.wires("gauge")

    def with_gates(self, gates) -> "Circuit":
        return Circuit(self.n, tuple(gates), self.layout)

    def __len__(self) -> int:
        return len(self.gates)


class CircuitParseError(MalformedInputError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


_WIRE = re.compile(r"^#\s*wire\s+(\d+)\s*=\s*(\w+)\s*$")
_HEADER = re.compile(r"^circuit\s+n=(\d+)$")


def parse_circuit(text: str) -> Circuit:
    n = None
    layout: dict[int, str] = {}
    gates: list[Gate] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        wire = _WIRE.match(line)
        if wire:
            q, role = int(wire.group(1)), wire.group(2)
            if role not in WIRE_ROLES:
                raise CircuitParseError(lineno, f"unknown wire role {role!r}")
            layout[q - 1] = role
            continue
        if line.startswith("#"):
            continue
        if n is None:
            header = _HEADER.match(line)
            if not header:
                raise CircuitParseError(lineno, f"expected 'circuit n=<int>', got {line!r}")
            n = int(header.group(1))
            continue
        parts = line.split()
        op, args = parts[0].lower(), parts[1:]
        try:
            if op in ("h", "p", "x", "z") and len(args) == 1:
                gates.append(Gate(op.upper(), (int(args[0]) - 1,)))
            elif op == "cnot" and len(args) == 2:
                gates.append(Gate.cnot(int(args[0]) - 1, int(args[1]) - 1))
            elif op == "cpauli" and len(args) == 3:
                gates.append(Gate("CPAULI", (int(args[0]) - 1, int(args[1]) - 1), args[2]))
            else:
                raise CircuitParseError(lineno, f"cannot parse gate {line!r}")
        except (ValueError, MalformedInputError) as exc:
            if isinstance(exc, CircuitParseError):
                raise
            raise CircuitParseError(lineno, f"cannot parse gate {line!r}") from None
        if any(q < 0 or q >= n for q in gates[-1].qubits):
            raise CircuitParseError(lineno, f"qubit out of range 1..{n}")
    if n is None:
        raise CircuitParseError(0, "missing header line")
    if any(q < 0 or q >= n for q in layout):
        raise CircuitParseError(0, "layout comment names a wire out of range")
    roles = tuple(layout.get(q, "zero") for q in range(n))
    return Circuit(n, tuple(gates), roles)


def format_circuit(circuit: Circuit, comments=()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"circuit n={circuit.n}")
    lines.extend(f"# wire {q + 1} = {role}" for q, role in enumerate(circuit.layout))
    lines.extend(g.text() for g in circuit.gates)
    return "\n".join(lines) + "\n"


def gate_report(circuit: Circuit) -> dict:
    """Gate counts by kind plus single/two-qubit totals and depth."""
    kinds = Counter(g.text().split()[0] if g.kind != "CPAULI" else f"c{g.pauli.lower()}" for g in circuit.gates)
    busy = [0] * circuit.n
    for g in circuit.gates:
        level = max(busy[q] for q in g.qubits) + 1
        for q in g.qubits:
            busy[q] = level
    return {
        "total": len(circuit.gates),
        "single_qubit": sum(1 for g in circuit.gates if not g.two_qubit),
        "two_qubit": sum(1 for g in circuit.gates if g.two_qubit),
        "depth": max(busy, default=0),
        "by_kind": dict(sorted(kinds.items())),
    }
