"""Dense state-vector simulation.

Amplitude index bit ``n-1-q`` belongs to 0-based qubit ``q``, so qubit 1 is the
most significant position and ``|0101>`` is index ``0b0101``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

import numpy as np

from .circuit import Circuit, Gate
from .codes import StabilizerCode, SubsystemCode
from .pauli import DimensionError, PauliWord

__all__ = [
    "MAX_QUBITS",
    "StateVector",
    "apply_gate",
    "apply_circuit",
    "apply_pauli",
    "stabilizer_projector_apply",
    "is_stabilized",
    "expectation",
    "format_state",
    "parse_state",
]

MAX_QUBITS = 12
_SQ2 = 1 / np.sqrt(2)
_MATS = {
    "H": np.array([[_SQ2, _SQ2], [_SQ2, -_SQ2]], dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
    "P": np.array([[1, 0], [0, 1j]], dtype=complex),
}


@dataclass(frozen=True, eq=False)
class StateVector:
    n: int
    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=complex).reshape(-1)
        if amps.shape[0] != 2**self.n:
            raise DimensionError(f"{amps.shape[0]} amplitudes for {self.n} qubits")
        object.__setattr__(self, "amplitudes", amps)

    @classmethod
    def zeros(cls, n: int, max_qubits: int = MAX_QUBITS) -> "StateVector":
        return cls.basis(n, 0, max_qubits)

    @classmethod
    def basis(cls, n: int, bits: Union[int, str, Sequence[int]], max_qubits: int = MAX_QUBITS) -> "StateVector":
        """Computational basis state; ``bits`` as an index, a bitstring or a bit list."""
        if n > max_qubits:
            raise ValueError(f"{n} qubits exceeds the simulation cap of {max_qubits}")
        if isinstance(bits, str):
            bits = [int(b) for b in bits]
        if not isinstance(bits, (int, np.integer)):
            if len(bits) != n:
                raise DimensionError("bit list length differs from n")
            bits = int("".join(str(int(b)) for b in bits) or "0", 2)
        amps = np.zeros(2**n, dtype=complex)
        amps[bits] = 1
        return cls(n, amps)

    @classmethod
    def product(cls, qubit_states: Iterable[Sequence[complex]]) -> "StateVector":
        """Tensor product of single-qubit vectors, qubit 1 first."""
        amps = np.array([1], dtype=complex)
        count = 0
        for v in qubit_states:
            amps = np.kron(amps, np.asarray(v, dtype=complex))
            count += 1
        return cls(count, amps)

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def normalized(self) -> "StateVector":
        nrm = self.norm
        if nrm == 0:
            raise ValueError("cannot normalise the zero vector")
        return StateVector(self.n, self.amplitudes / nrm)

    def inner(self, other: "StateVector") -> complex:
        """``<self|other>``."""
        return complex(np.vdot(self.amplitudes, other.amplitudes))

    def close_to(self, other: "StateVector", tol: float = 1e-9, up_to_phase: bool = False) -> bool:
        a, b = self.amplitudes, other.amplitudes
        if up_to_phase:
            overlap = np.vdot(b, a)
            if abs(overlap) < tol:
                return bool(np.linalg.norm(a) < tol and np.linalg.norm(b) < tol)
            a = a * (abs(overlap) / overlap)
        return bool(np.linalg.norm(a - b) < tol)

    def tensor(self) -> np.ndarray:
        return self.amplitudes.reshape((2,) * self.n)


def _apply_matrix(t: np.ndarray, qubit: int, mat: np.ndarray, control: int | None = None) -> np.ndarray:
    t = t.copy()
    if control is None:
        moved = np.moveaxis(t, qubit, 0)
        moved[...] = np.tensordot(mat, moved, axes=(1, 0))
        return t
    index = [slice(None)] * t.ndim
    index[control] = 1
    sub = t[tuple(index)]
    # the control axis is gone from sub, so the target axis may shift down
    axis = qubit - (1 if qubit > control else 0)
    moved = np.moveaxis(sub, axis, 0)
    moved[...] = np.tensordot(mat, moved, axes=(1, 0))
    t[tuple(index)] = sub
    return t


def apply_gate(s: StateVector, g: Gate) -> StateVector:
    if any(q < 0 or q >= s.n for q in g.qubits):
        raise DimensionError(f"gate {g} outside a {s.n}-qubit register")
    t = s.tensor()
    if g.kind in _MATS:
        t = _apply_matrix(t, g.qubits[0], _MATS[g.kind])
    else:
        letter = "X" if g.kind == "CNOT" else g.pauli
        t = _apply_matrix(t, g.target, _MATS[letter], control=g.control)
    return StateVector(s.n, t.reshape(-1))


def apply_circuit(s: StateVector, circuit: Circuit) -> StateVector:
    if s.n != circuit.n:
        raise DimensionError("state and circuit sizes differ")
    for g in circuit.gates:
        s = apply_gate(s, g)
    return s


def _mask(bits: Sequence[int]) -> int:
    n = len(bits)
    return sum(1 << (n - 1 - q) for q, b in enumerate(bits) if b)


def _popcount_parity(values: np.ndarray) -> np.ndarray:
    parity = np.zeros_like(values)
    v = values.copy()
    while v.any():
        parity ^= v & 1
        v >>= 1
    return parity


def apply_pauli(s: StateVector, p: PauliWord) -> StateVector:
    """Exact action of ``i**phase X^x Z^z`` including the phase factor."""
    if p.n != s.n:
        raise DimensionError(f"{p.n}-qubit word on a {s.n}-qubit state")
    idx = np.arange(2**s.n)
    signs = 1 - 2 * _popcount_parity(idx & _mask(p.z))
    out = np.empty_like(s.amplitudes)
    out[idx ^ _mask(p.x)] = (1j**p.phase) * signs * s.amplitudes
    return StateVector(s.n, out)


Generators = Union[StabilizerCode, SubsystemCode, Sequence[PauliWord]]


def _generators(code: Generators) -> list[PauliWord]:
    if isinstance(code, StabilizerCode):
        return list(code.validate().generators.rows)
    if isinstance(code, SubsystemCode):
        return list(code.stabilizer_code().validate().generators.rows)
    return list(code)


def stabilizer_projector_apply(s: StateVector, code: Generators) -> StateVector:
    """``(1/|S|) sum_{M in S} M |s>``; not renormalised.

    For independent commuting Hermitian generators this sum factorises as
    ``prod_i (I + g_i)/2``, which is what is applied.
    """
    for g in _generators(code):
        s = StateVector(s.n, (s.amplitudes + apply_pauli(s, g).amplitudes) / 2)
    return s


def expectation(s: StateVector, p: PauliWord) -> complex:
    return s.normalized().inner(apply_pauli(s.normalized(), p))


def is_stabilized(s: StateVector, p: PauliWord, tol: float = 1e-9) -> bool:
    """True iff ``p|s> = |s>`` for the normalised state."""
    s = s.normalized()
    return bool(np.linalg.norm(apply_pauli(s, p).amplitudes - s.amplitudes) < tol)


def format_state(s: StateVector, threshold: float = 1e-12) -> str:
    """One ``<bitstring> <re> <im>`` line per amplitude above ``threshold``."""
    lines = []
    for index, amp in enumerate(s.amplitudes):
        if abs(amp) > threshold:
            lines.append(f"{index:0{s.n}b} {amp.real:.12g} {amp.imag:.12g}")
    return "\n".join(lines) + "\n"


def parse_state(text: str) -> StateVector:
    entries = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            bits, re_part, im_part = line.split()
            entries.append((bits, complex(float(re_part), float(im_part))))
    if not entries:
        raise ValueError("empty state dump")
    n = len(entries[0][0])
    amps = np.zeros(2**n, dtype=complex)
    for bits, amp in entries:
        amps[int(bits, 2)] = amp
    return StateVector(n, amps)
