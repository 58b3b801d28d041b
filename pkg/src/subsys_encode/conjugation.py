"""Encoders found by conjugating the gauge group down to single-qubit rows.

The forward direction (the transcript) is a decoder ``T``: it maps every
stabilizer row to a single-qubit Z, every gauge pair to X and Z on one qubit,
and leaves the remaining qubits carrying the message.  The encoder is ``T``
reversed with each gate inverted.  Qubits are 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .circuit import Circuit, Gate
from .codes import CheckMatrix, SubsystemCode, ValidationError
from .pauli import PauliWord, multiply

__all__ = [
    "conjugate_word",
    "conjugate_rows",
    "conj_h",
    "conj_p",
    "conj_cnot",
    "clear_z_part",
    "clear_x_to_unit",
    "Stage",
    "ConjugationResult",
    "conjugation_transcript",
    "synthesize_conjugation_encoder",
    "invert_gates",
    "circuit_logicals",
]


def _single(n: int, q: int, letter: str) -> PauliWord:
    return PauliWord.single(n, q, letter)


def _image(n: int, g: Gate, q: int, letter: str) -> PauliWord:
    """``g P g^dagger`` for the Hermitian single-qubit Pauli ``letter`` on ``q``."""
    base = _single(n, q, letter)
    kind = g.kind
    if kind in ("H", "P", "X", "Z") and q != g.qubits[0]:
        return base
    if kind == "H":
        return _single(n, q, "Z" if letter == "X" else "X")
    if kind == "P":
        return _single(n, q, "Y") if letter == "X" else base
    if kind in ("X", "Z"):
        return base if letter == kind else base.negate()
    c, t = g.qubits
    target_letter = "X" if kind == "CNOT" else g.pauli
    if q == c:
        return multiply(base, _single(n, t, target_letter)) if letter == "X" else base
    if q == t:
        if letter == target_letter:
            return base
        return multiply(_single(n, c, "Z"), base)
    return base


def conjugate_word(w: PauliWord, g: Gate) -> PauliWord:
    """Exact ``U w U^dagger`` for the unitary of gate ``g``, phase included.

    ``w`` is expanded as ``i**e`` times single-qubit X and Z factors in qubit
    order, and the factor images are multiplied back together.
    """
    if any(q >= w.n for q in g.qubits):
        raise ValidationError(f"gate {g} outside {w.n} qubits")
    out = PauliWord(w.n, w.phase, (0,) * w.n, (0,) * w.n)
    for q in range(w.n):
        if w.x[q]:
            out = multiply(out, _image(w.n, g, q, "X"))
        if w.z[q]:
            out = multiply(out, _image(w.n, g, q, "Z"))
    return out


def conjugate_rows(m: CheckMatrix, g: Gate) -> CheckMatrix:
    return CheckMatrix(m.n, tuple(conjugate_word(r, g) for r in m.rows), m.perm)


def _check_qubit(m: CheckMatrix, *qs: int) -> None:
    for q in qs:
        if not 0 <= q < m.n:
            raise ValidationError(f"qubit {q + 1} outside 1..{m.n}")


def conj_h(m: CheckMatrix, i: int) -> tuple[CheckMatrix, Gate]:
    """Swap the X and Z bits of qubit ``i`` in every row."""
    _check_qubit(m, i)
    g = Gate.h(i)
    return conjugate_rows(m, g), g


def conj_p(m: CheckMatrix, i: int) -> tuple[CheckMatrix, Gate]:
    """``b_i <- a_i + b_i`` in every row."""
    _check_qubit(m, i)
    g = Gate.p(i)
    return conjugate_rows(m, g), g


def conj_cnot(m: CheckMatrix, i: int, j: int) -> tuple[CheckMatrix, Gate]:
    """``a_j <- a_j + a_i`` and ``b_i <- b_i + b_j`` in every row."""
    _check_qubit(m, i, j)
    if i == j:
        raise ValidationError("CNOT control and target coincide")
    g = Gate.cnot(i, j)
    return conjugate_rows(m, g), g


def clear_z_part(m: CheckMatrix, row: int, skip: Sequence[int] = ()) -> tuple[CheckMatrix, list[Gate]]:
    """Make ``m.rows[row]`` Z-free: H where it has Z, P where it has Y."""
    r = m.rows[row]
    gates = []
    for q in range(m.n):
        if q in skip or not r.z[q]:
            continue
        gates.append(Gate.p(q) if r.x[q] else Gate.h(q))
    for g in gates:
        m = conjugate_rows(m, g)
    return m, gates


def clear_x_to_unit(m: CheckMatrix, row: int, pivot: int) -> tuple[CheckMatrix, list[Gate]]:
    """Turn a Z-free row into X on ``pivot`` alone with CNOTs from the pivot."""
    r = m.rows[row]
    if any(r.z):
        raise ValidationError(f"row {row + 1} still has a Z part")
    if not r.x[pivot]:
        raise ValidationError(f"row {row + 1} has no X on pivot qubit {pivot + 1}")
    gates = [Gate.cnot(pivot, j) for j in range(m.n) if j != pivot and r.x[j]]
    for g in gates:
        m = conjugate_rows(m, g)
    return m, gates


@dataclass(frozen=True)
class Stage:
    """One labelled group of transcript gates and the rows after it."""

    label: str
    gates: tuple[Gate, ...]
    rows: tuple[PauliWord, ...]


@dataclass(frozen=True)
class ConjugationResult:
    circuit: Circuit
    stages: tuple[Stage, ...]
    initial_rows: tuple[PauliWord, ...]
    stabilizer_pivots: tuple[int, ...]
    gauge_pivots: tuple[int, ...]
    message_wires: tuple[int, ...]
    sign_flips: tuple[int, ...] = field(default=())

    @property
    def transcript(self) -> list[Gate]:
        return [g for st in self.stages for g in st.gates]


class _Tracker:
    """Rows under conjugation plus an event log of gate stages and row products.

    Row products commute with conjugation, so the log can be reordered and
    replayed from the initial rows.
    """

    def __init__(self, n: int, rows: list[PauliWord]):
        self.n = n
        self.initial = list(rows)
        self.rows = list(rows)
        self.events: list[tuple] = []

    def apply(self, label: str, gates: Sequence[Gate]) -> None:
        for g in gates:
            self.rows = [conjugate_word(r, g) for r in self.rows]
        self.events.append(("gates", label, list(gates)))

    def add_row(self, dst: int, src: int) -> None:
        self.rows[dst] = multiply(self.rows[dst], self.rows[src])
        self.events.append(("mul", dst, src))

    def matrix(self) -> CheckMatrix:
        return CheckMatrix(self.n, tuple(self.rows))

    def replay(self, events) -> list[Stage]:
        rows = list(self.initial)
        stages = []
        for ev in events:
            if ev[0] == "mul":
                rows[ev[1]] = multiply(rows[ev[1]], rows[ev[2]])
                continue
            for g in ev[2]:
                rows = [conjugate_word(r, g) for r in rows]
            if ev[2]:
                stages.append(Stage(ev[1], tuple(ev[2]), tuple(rows)))
        return stages


def _is_z_unit(w: PauliWord) -> int | None:
    if any(w.x) or sum(w.z) != 1:
        return None
    return w.z.index(1)


def conjugation_transcript(code: SubsystemCode, elide_trivial_h: bool = True) -> ConjugationResult:
    """Reduce the gauge group to single-qubit form and record every gate.

    Row order: stabilizer rows, gauge Z rows, gauge X rows.  A Z row that is
    already Z on one unused qubit keeps that qubit as its pivot with no gates.
    Row additions are exact word products, and multiplying gauge row ``z_j``
    by ``z_m`` is balanced by ``x_m <- x_m x_j`` to keep the pairs hyperbolic.
    """
    code = code.validate().paired()
    n, s, r = code.n, code.s, code.r
    initial = list(code.stabilizer) + list(code.gauge_z) + list(code.gauge_x)
    t = _Tracker(n, initial)
    z_count = s + r
    pivots: list[int] = []
    native: list[bool] = []

    def add_row(dst: int, src: int) -> None:
        t.add_row(dst, src)
        if s <= dst < z_count and s <= src < z_count:
            # z_dst *= z_src needs x_src *= x_dst
            t.add_row(src + r, dst + r)

    for i in range(z_count):
        unit = _is_z_unit(t.rows[i])
        if unit is not None and unit not in pivots:
            pivots.append(unit)
            native.append(True)
            for j in range(i + 1, z_count):
                if t.rows[j].z[unit]:
                    add_row(j, i)
            continue
        row = t.rows[i]
        if row.is_identity():
            raise ValidationError(f"gauge group lost rank at row {i + 1}")
        m, gates = clear_z_part(t.matrix(), i)
        t.apply(f"row {i + 1}: clear Z", gates)
        a = t.rows[i].x
        free = [q for q in range(n) if a[q] and q not in pivots]
        if not free:
            raise ValidationError(f"no unused pivot for row {i + 1}")
        pivot = i if (i < n and a[i] and i not in pivots) else free[0]
        m, gates = clear_x_to_unit(t.matrix(), i, pivot)
        t.apply(f"row {i + 1}: clear X", gates)
        pivots.append(pivot)
        native.append(False)
        for j in range(i + 1, z_count):
            if t.rows[j].x[pivot]:
                add_row(j, i)

    h_qubits = [p for p, nat in zip(pivots, native) if not nat]
    h_index = len(t.events)
    t.apply("H on pivots", [Gate.h(q) for q in h_qubits])

    stab_pivots = pivots[:s]
    gauge_pivots = pivots[s:]
    for jj in range(r):
        i = z_count + jj
        for si, p in enumerate(stab_pivots):
            if t.rows[i].z[p]:
                t.add_row(i, si)
        for mm in range(jj + 1, r):
            if t.rows[i].z[gauge_pivots[mm]]:
                # x_j *= z_m needs x_m *= z_j
                t.add_row(i, s + mm)
                t.add_row(z_count + mm, s + jj)
        m, gates = clear_z_part(t.matrix(), i)
        t.apply(f"row {i + 1}: clear Z", gates)
        m, gates = clear_x_to_unit(t.matrix(), i, gauge_pivots[jj])
        t.apply(f"row {i + 1}: clear X", gates)

    events = list(t.events)
    later = {q for ev in events[h_index + 1 :] if ev[0] == "gates" for g in ev[2] for q in g.qubits}
    if h_qubits and not later & set(h_qubits):
        # disjoint gates commute, so the H stage can move to the end
        events.append(events.pop(h_index))
    if not elide_trivial_h:
        gauge_native = [p for p, nat in zip(pivots[s:], native[s:]) if nat]
        events.append(("gates", "H on gauge pivots", [Gate.h(q) for q in gauge_native]))
    stages = t.replay(events)

    final = stages[-1].rows if stages else tuple(initial)
    _check_normal_form(final, stab_pivots, gauge_pivots, s, r)
    flips = tuple(p for p, row in zip(stab_pivots, final[:s]) if row.sign == 2)
    message = tuple(q for q in range(n) if q not in pivots)
    layout = tuple("message" if q in message else "gauge" if q in gauge_pivots else "zero" for q in range(n))
    transcript = [g for st in stages for g in st.gates]
    gates = [Gate.x(q) for q in flips] + invert_gates(transcript)
    return ConjugationResult(
        Circuit(n, tuple(gates), layout),
        tuple(stages),
        tuple(initial),
        tuple(stab_pivots),
        tuple(gauge_pivots),
        message,
        flips,
    )


def _check_normal_form(rows, stab_pivots, gauge_pivots, s, r) -> None:
    for i in range(s):
        if _is_z_unit(rows[i]) != stab_pivots[i]:
            raise ValidationError(f"stabilizer row {i + 1} did not reduce to a single Z: {rows[i]}")
    for j in range(r):
        zrow, xrow = rows[s + j], rows[s + r + j]
        q = gauge_pivots[j]
        letters = {zrow.letters()[q], xrow.letters()[q]}
        if zrow.weight != 1 or xrow.weight != 1 or letters != {"X", "Z"}:
            raise ValidationError(f"gauge pair {j + 1} did not reduce to X and Z on one qubit: {zrow}, {xrow}")


def invert_gates(gates: Sequence[Gate]) -> list[Gate]:
    """Gate list of the inverse unitary; P becomes P P P."""
    out: list[Gate] = []
    for g in reversed(list(gates)):
        out.extend([g, g, g] if g.kind == "P" else [g])
    return out


def circuit_logicals(circuit: Circuit) -> tuple[list[PauliWord], list[PauliWord]]:
    """Images of X and Z on each message wire under the circuit, exact phases."""
    xs, zs = [], []
    for q in circuit.message_wires:
        for letter, bucket in (("X", xs), ("Z", zs)):
            w = PauliWord.single(circuit.n, q, letter)
            for g in circuit.gates:
                w = conjugate_word(w, g)
            bucket.append(w)
    return xs, zs


def synthesize_conjugation_encoder(code: SubsystemCode, elide_trivial_h: bool = True) -> Circuit:
    return conjugation_transcript(code, elide_trivial_h).circuit
