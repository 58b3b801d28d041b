"""Encoders built from standard forms.

Every encoder has the same shape: CNOT seeds that copy each message wire onto
the X support of its encoded X operator, X flips that fix the signs of the
Z-type checks, then one block per primary generator in reverse row order.  A
block is an H on the generator's pivot wire followed by controlled Paulis
from the pivot; applied while the pivot is |0> it maps a state |v> to
(|v> + G|v>)/sqrt(2).
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from . import gf2
from .circuit import Circuit, Gate
from .codes import (
    LogicalOperators,
    StandardForm,
    SubsystemCode,
    ValidationError,
    augmented_stabilizer,
    derive_logical_operators,
    standard_form,
    standard_form_from_matrix,
)
from .pauli import CheckMatrix, PauliWord, multiply, symplectic_product

__all__ = [
    "SynthesisError",
    "generator_block",
    "synthesize_stabilizer_encoder",
    "synthesize_subsystem_m1",
    "synthesize_subsystem_m2",
    "elide_redundant_z",
    "merge_phases",
]

_LETTER = {(1, 0): "X", (0, 1): "Z", (1, 1): "Y"}


class SynthesisError(ValidationError):
    """The requested encoder cannot be built for this input."""


def phase_gates(q: int, exponent: int) -> list[Gate]:
    """Gates for diag(1, i**exponent) on wire ``q``."""
    return {0: [], 1: [Gate.p(q)], 2: [Gate.z(q)], 3: [Gate.z(q), Gate.p(q)]}[exponent % 4]


def generator_block(g: PauliWord, pivot: int) -> list[Gate]:
    """H on ``pivot`` then controlled ``g`` with the pivot factor dropped."""
    if not g.x[pivot]:
        raise SynthesisError(f"{g} has no X on pivot wire {pivot + 1}")
    others = [q for q in range(g.n) if q != pivot and (g.x[q] or g.z[q])]
    y_count = sum(1 for q in others if g.x[q] and g.z[q])
    gates = [Gate.h(pivot)]
    # (1,1) bits are real XZ = -iY, so the control carries the leftover phase
    gates += phase_gates(pivot, g.phase - y_count)
    gates += [Gate.cpauli(pivot, q, _LETTER[(g.x[q], g.z[q])]) for q in others]
    return gates


def _seed_gates(control: int, word: PauliWord) -> list[Gate]:
    return [Gate.cnot(control, q) for q in range(word.n) if word.x[q] and q != control]


def _sign_bit(w: PauliWord) -> int:
    return (w.sign // 2) & 1


def _fix_flips(n: int, checks: Sequence[PauliWord], free: Sequence[int]) -> list[int]:
    """Wires to flip so every Z-type check in ``checks`` reads +1 on the seed state."""
    for c in checks:
        if any(c.x):
            raise SynthesisError(f"sign check {c} is not Z-type")
    if not checks:
        return []
    a = np.array([[c.z[q] for q in free] for c in checks], dtype=np.uint8).reshape(len(checks), len(free))
    b = np.array([_sign_bit(c) for c in checks], dtype=np.uint8)
    if any(b[i] for i, c in enumerate(checks) if not any(c.z[q] for q in free)):
        raise SynthesisError("a check has a -1 sign that no free wire can absorb")
    if not free:
        return []
    sol = gf2.solve(a, b)
    if sol is None:
        raise SynthesisError("no X flips make the seed state a +1 eigenstate of every check")
    return [q for q, bit in zip(free, sol) if bit]


def _assemble(
    n: int,
    primaries: Sequence[tuple[int, PauliWord]],
    seeds: Sequence[tuple[int, PauliWord]],
    checks: Sequence[PauliWord],
    layout: Sequence[str],
) -> Circuit:
    pivots = {p for p, _ in primaries}
    for control, word in seeds:
        hit = [q + 1 for q in range(n) if word.x[q] and q in pivots]
        if hit:
            raise SynthesisError(f"seed from wire {control + 1} targets pivot wires {hit}")
    free = [q for q in range(n) if q not in pivots and layout[q] != "message"]
    gates: list[Gate] = []
    for control, word in seeds:
        gates += _seed_gates(control, word)
    gates += [Gate.x(q) for q in _fix_flips(n, checks, free)]
    for pivot, g in reversed(list(primaries)):
        gates += generator_block(g, pivot)
    return Circuit(n, tuple(gates), tuple(layout))


def _message_wires(sf: StandardForm, k: int) -> list[int]:
    return sorted(sf.perm[sf.n - k + j] for j in range(k))


def _check_logicals_match(sf: StandardForm, logical: LogicalOperators, k: int) -> None:
    if logical.k != k or any(w.n != sf.n for w in logical.xbar + logical.zbar):
        raise ValidationError("logical operators do not match the standard form")
    for j, (xw, mw) in enumerate(zip(logical.xbar, _message_wires(sf, k))):
        if not xw.x[mw] or any(xw.x[sf.perm[i]] for i in range(sf.s_prime)):
            raise ValidationError(f"logical X{j + 1} = {xw} does not fit the standard form's message wire {mw + 1}")
        if any(logical.xbar[i].x[mw] for i in range(k) if i != j):
            raise ValidationError("logical X operators overlap on message wires")


def _stabilizer_parts(sf: StandardForm):
    rows = sf.matrix.unpermuted_rows()
    primaries = [(sf.perm[i], rows[i]) for i in range(sf.s_prime)]
    return primaries, rows[sf.s_prime :]


def synthesize_stabilizer_encoder(
    sf: StandardForm, logical: LogicalOperators | None = None, elide: bool = True
) -> Circuit:
    """Encoder for the code in standard form ``sf``; message wires hold the input qubits."""
    k = sf.k
    if logical is None:
        logical = derive_logical_operators(sf, k)
    _check_logicals_match(sf, logical, k)
    msg = _message_wires(sf, k)
    layout = ["message" if q in msg else "zero" for q in range(sf.n)]
    primaries, secondaries = _stabilizer_parts(sf)
    circuit = _assemble(sf.n, primaries, list(zip(msg, logical.xbar)), secondaries + list(logical.zbar), layout)
    return elide_redundant_z(circuit) if elide else circuit


def _partners(code: SubsystemCode, augment) -> list[PauliWord]:
    if augment in ("gauge_z", "gz"):
        return list(code.paired().gauge_x)
    if augment in ("gauge_x", "gx"):
        return list(code.paired().gauge_z)
    return []


def _gauge_operators(sf: StandardForm, partners: Sequence[PauliWord]) -> list[tuple[int, PauliWord]]:
    """Assign each gauge partner the wire of one augmented row it flips.

    A wire set to |1> instead of |0> flips the sign of the row whose
    identity column it is, so the gauge wire of partner ``O`` is the identity
    column of a row anticommuting with ``O``.  Partners are recombined so
    each one flips exactly one chosen row, and multiplied by primary rows so
    they carry no X on primary pivots.  Secondary rows are preferred.
    """
    rows = sf.matrix.unpermuted_rows()
    order = list(range(sf.s_prime, sf.m)) + list(reversed(range(sf.s_prime)))
    pending = list(partners)
    owned: list[tuple[int, PauliWord]] = []
    for r in order:
        hit = next((i for i, w in enumerate(pending) if symplectic_product(w, rows[r])), None)
        if hit is None:
            continue
        w = pending.pop(hit)
        pending = [multiply(v, w) if symplectic_product(v, rows[r]) else v for v in pending]
        owned = [(c, multiply(v, w) if symplectic_product(v, rows[r]) else v) for c, v in owned]
        owned.append((r, w))
    if pending:
        raise SynthesisError("gauge partners are not independent modulo the augmented stabilizer")
    result = []
    for r, w in owned:
        for i in range(sf.s_prime):
            if w.x[sf.perm[i]]:
                w = multiply(w, rows[i])
        result.append((sf.perm[r], w.hermitian()))
    return sorted(result)


def synthesize_subsystem_m1(
    code: SubsystemCode, augment="gauge_z", gauge: str = "zero", elide: bool = True
) -> Circuit:
    """Encode with the stabilizer augmented by one half of the gauge pairs.

    ``gauge="zero"`` needs every gauge wire in |0>.  ``gauge="seeded"`` adds
    CNOTs from each gauge wire so that a gauge input |1> applies the partner
    gauge operator instead of leaving the code space.
    """
    if gauge not in ("zero", "seeded"):
        raise ValueError("gauge must be 'zero' or 'seeded'")
    code.validate()
    sf = standard_form(augmented_stabilizer(code, augment))
    logical = derive_logical_operators(sf, code.k)
    if code.r == 0:
        return synthesize_stabilizer_encoder(sf, logical, elide)
    msg = _message_wires(sf, code.k)
    gauge_ops = _gauge_operators(sf, _partners(code, augment))
    if not gauge_ops:
        spare = [sf.perm[c] for c in range(sf.m - code.r, sf.m)]
        gauge_ops = [(c, PauliWord.identity(code.n)) for c in spare]
    gauge_wires = [c for c, _ in gauge_ops]
    layout = ["message" if q in msg else "gauge" if q in gauge_wires else "zero" for q in range(code.n)]
    primaries, secondaries = _stabilizer_parts(sf)
    logical_seeds = list(zip(msg, logical.xbar))
    seeds = logical_seeds
    if gauge == "seeded":
        seeds = _seeded_order(code, sf, logical_seeds, gauge_ops, msg)
    circuit = _assemble(code.n, primaries, seeds, secondaries + list(logical.zbar), layout)
    if not elide:
        return circuit
    zero_roles = ("zero", "gauge") if gauge == "zero" else ("zero",)
    return elide_redundant_z(circuit, zero_roles)


def _seeded_order(code, sf, logical_seeds, gauge_ops, msg):
    primaries = sf.matrix.unpermuted_rows()[: sf.s_prime]
    for wire, op in gauge_ops:
        if op.is_identity():
            raise SynthesisError("gauge-seeded encoding needs the partner gauge operators")
        if any(symplectic_product(op, g) for g in primaries):
            raise SynthesisError(f"gauge operator {op} anticommutes with a primary generator")
    wires = {w for w, _ in gauge_ops}
    if not any(word.x[w] for _, word in logical_seeds for w in wires):
        return logical_seeds + gauge_ops
    if not any(op.x[m] for _, op in gauge_ops for m in msg):
        return gauge_ops + logical_seeds
    raise SynthesisError("logical and gauge seeds interfere; use gauge='zero'")


def synthesize_subsystem_m2(code: SubsystemCode, augment="gauge_z", elide: bool = True) -> Circuit:
    """Primary generators from the stabilizer's own standard form, encoded
    operators from the augmented stabilizer's; gauge wires must be |0>."""
    code.validate()
    sf1 = standard_form(code.stabilizer_code())
    if code.r == 0:
        return synthesize_stabilizer_encoder(sf1, derive_logical_operators(sf1, code.k), elide)
    extra = list(augmented_stabilizer(code, augment).generators.rows[code.s :])
    rows = list(sf1.matrix.rows) + [w.permuted(sf1.perm) for w in extra]
    sf_a = standard_form_from_matrix(CheckMatrix(code.n, tuple(rows), sf1.perm), code.k)
    logical = derive_logical_operators(sf_a, code.k)
    msg = _message_wires(sf_a, code.k)
    pivots = [sf1.perm[i] for i in range(sf1.s_prime)]
    secondary_cols = {sf1.perm[c] for c in range(sf1.s_prime, sf1.m)}
    rest = [q for q in range(code.n) if q not in pivots and q not in msg]
    preferred = [q for q in rest if q not in secondary_cols] + [q for q in reversed(rest) if q in secondary_cols]
    gauge_wires = set(preferred[: code.r])
    layout = ["message" if q in msg else "gauge" if q in gauge_wires else "zero" for q in range(code.n)]
    primaries, secondaries = _stabilizer_parts(sf1)
    circuit = _assemble(code.n, primaries, list(zip(msg, logical.xbar)), secondaries + list(logical.zbar), layout)
    return elide_redundant_z(circuit, ("zero", "gauge")) if elide else circuit


def elide_redundant_z(c: Circuit, zero_roles: Sequence[str] = ("zero",)) -> Circuit:
    """Drop Z-type actions on wires that are provably still |0>.

    A wire stays |0> until it receives H or X or is the target of an X- or
    Y-type controlled gate.  On such a wire Z, P and controlled-Z act
    trivially, and a controlled-Y becomes a CNOT times P on the control.
    Adjacent phase gates are then merged.
    """
    fresh = [role in zero_roles for role in c.layout]
    out: list[Gate] = []
    for g in c.gates:
        t = g.target
        if g.kind in ("Z", "P") and fresh[t]:
            continue
        if g.kind == "CPAULI" and fresh[t]:
            if g.pauli == "Z":
                continue
            out += [Gate.cnot(g.control, t), Gate.p(g.control)]
            fresh[t] = False
            continue
        if g.kind in ("H", "X") or (g.kind in ("CNOT", "CPAULI") and g.pauli != "Z"):
            fresh[t] = False
        out.append(g)
    return merge_phases(c.with_gates(out))


def merge_phases(c: Circuit) -> Circuit:
    """Combine Z and P gates on a wire across gates that only use it as a control."""
    pending = [0] * c.n
    out: list[Gate] = []

    def flush(q):
        out.extend(phase_gates(q, pending[q]))
        pending[q] = 0

    for g in c.gates:
        if g.kind == "Z":
            pending[g.target] += 2
            continue
        if g.kind == "P":
            pending[g.target] += 1
            continue
        touched = g.qubits if not g.two_qubit else (g.target,)
        for q in touched:
            flush(q)
        out.append(g)
    for q in range(c.n):
        flush(q)
    return c.with_gates(out)
