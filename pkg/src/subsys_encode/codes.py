"""Stabilizer and subsystem codes, standard forms and encoded operators."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Sequence, Union

import numpy as np

from . import gf2
from .pauli import CheckMatrix, PauliWord, multiply, rref_block, symplectic_product

__all__ = [
    "ValidationError",
    "StabilizerCode",
    "SubsystemCode",
    "StandardForm",
    "LogicalOperators",
    "standard_form",
    "standard_form_from_matrix",
    "derive_logical_operators",
    "classify_generators",
    "augmented_stabilizer",
    "canonicalize_gauge",
    "subsystem_logicals",
    "check_logical_operators",
]


class ValidationError(ValueError):
    """A code, its generators or its encoded operators violate an invariant."""


def _words_array(words: Sequence[PauliWord], n: int) -> np.ndarray:
    if not words:
        return np.zeros((0, 2 * n), dtype=np.uint8)
    return np.array([w.x + w.z for w in words], dtype=np.uint8)


def _check_commuting(words: Sequence[PauliWord], label: str) -> None:
    for i in range(len(words)):
        for j in range(i + 1, len(words)):
            if symplectic_product(words[i], words[j]):
                raise ValidationError(f"{label} rows {i + 1} and {j + 1} anticommute ({words[i]}, {words[j]})")


def _check_hermitian(words: Sequence[PauliWord], label: str) -> None:
    for i, w in enumerate(words):
        if not w.is_hermitian():
            raise ValidationError(f"{label} row {i + 1} ({w}) is not Hermitian")


@dataclass(frozen=True)
class StabilizerCode:
    n: int
    k: int
    generators: CheckMatrix

    def __post_init__(self):
        if self.generators.n != self.n:
            raise ValidationError("generator width does not match n")

    @classmethod
    def from_strings(cls, rows: Sequence[str], k: int | None = None) -> "StabilizerCode":
        cm = CheckMatrix.from_strings(rows)
        return cls(cm.n, cm.n - cm.m if k is None else k, cm)

    def validate(self) -> "StabilizerCode":
        rows = self.generators.rows
        if len(rows) != self.n - self.k:
            raise ValidationError(f"expected {self.n - self.k} generators, got {len(rows)}")
        _check_hermitian(rows, "stabilizer")
        _check_commuting(rows, "stabilizer")
        # commuting Hermitian rows generate a group without -I iff independent
        if gf2.rank(self.generators.to_array()) != len(rows):
            raise ValidationError("stabilizer generators are not independent")
        return self


@dataclass(frozen=True)
class SubsystemCode:
    """Stabilizer rows plus ``r`` gauge pairs; the pairing of ``gauge_x`` with ``gauge_z`` must be invertible."""

    n: int
    k: int
    r: int
    stabilizer: tuple[PauliWord, ...]
    gauge_x: tuple[PauliWord, ...] = ()
    gauge_z: tuple[PauliWord, ...] = ()
    logical_x: tuple[PauliWord, ...] = ()
    logical_z: tuple[PauliWord, ...] = ()
    name: str = field(default="", compare=False)

    @property
    def s(self) -> int:
        return self.n - self.k - self.r

    @classmethod
    def from_stabilizer_code(cls, code: StabilizerCode) -> "SubsystemCode":
        return cls(code.n, code.k, 0, tuple(code.generators.rows))

    def stabilizer_code(self) -> StabilizerCode:
        """The ``[[n, k+r]]`` code defined by the stabilizer alone."""
        return StabilizerCode(self.n, self.k + self.r, CheckMatrix(self.n, self.stabilizer))

    def gauge_rows(self) -> list[PauliWord]:
        return list(self.stabilizer) + list(self.gauge_z) + list(self.gauge_x)

    def pairing_matrix(self) -> np.ndarray:
        """``M[i, j] = <gauge_x[i], gauge_z[j]>``; the identity for hyperbolic pairs."""
        return np.array(
            [[symplectic_product(gx, gz) for gz in self.gauge_z] for gx in self.gauge_x], dtype=np.uint8
        ).reshape(len(self.gauge_x), len(self.gauge_z))

    def paired(self) -> "SubsystemCode":
        """Same gauge group with ``gauge_x`` rebased so that row i pairs only with ``gauge_z[i]``."""
        if not self.r:
            return self
        inv = gf2.inverse(self.pairing_matrix())
        if inv is None:
            raise ValidationError("gauge rows cannot be paired")
        rows = []
        for i in range(self.r):
            w = PauliWord.identity(self.n)
            for j in range(self.r):
                if inv[i, j]:
                    w = multiply(w, self.gauge_x[j])
            rows.append(w.hermitian())
        return replace(self, gauge_x=tuple(rows))

    def validate(self) -> "SubsystemCode":
        words = self.gauge_rows() + list(self.logical_x) + list(self.logical_z)
        for w in words:
            if w.n != self.n:
                raise ValidationError(f"{w} does not act on {self.n} qubits")
        if len(self.stabilizer) != self.s:
            raise ValidationError(f"expected {self.s} stabilizer rows, got {len(self.stabilizer)}")
        if len(self.gauge_x) != self.r or len(self.gauge_z) != self.r:
            raise ValidationError(f"expected {self.r} gauge pairs")
        _check_hermitian(self.stabilizer, "stabilizer")
        _check_commuting(self.stabilizer, "stabilizer")
        _check_commuting(self.gauge_z, "gauge_z")
        _check_commuting(self.gauge_x, "gauge_x")
        for i, g in enumerate(list(self.gauge_x) + list(self.gauge_z)):
            for j, st in enumerate(self.stabilizer):
                if symplectic_product(g, st):
                    raise ValidationError(f"gauge row {g} anticommutes with stabilizer row {j + 1} ({st})")
        if self.r and gf2.inverse(self.pairing_matrix()) is None:
            raise ValidationError("gauge_x and gauge_z rows do not pair up: their pairing matrix is singular")
        full = _words_array(self.gauge_rows(), self.n)
        if gf2.rank(full) != self.n - self.k + self.r:
            raise ValidationError(f"gauge group rank {gf2.rank(full)} != n-k+r = {self.n - self.k + self.r}")
        if self.logical_x or self.logical_z:
            check_logical_operators(self, LogicalOperators(self.logical_x, self.logical_z))
        return self


@dataclass(frozen=True)
class LogicalOperators:
    xbar: tuple[PauliWord, ...]
    zbar: tuple[PauliWord, ...]

    @property
    def k(self) -> int:
        return len(self.zbar)


@dataclass(frozen=True)
class StandardForm:
    """Check matrix in block standard form, columns permuted by ``perm``."""

    matrix: CheckMatrix
    s_prime: int
    k: int
    relaxed: bool = False

    @property
    def n(self) -> int:
        return self.matrix.n

    @property
    def m(self) -> int:
        return self.matrix.m

    @property
    def perm(self) -> tuple[int, ...]:
        return self.matrix.perm

    def block(self, name: str) -> np.ndarray:
        """One of A1, A2, B, C, D, E."""
        s, m = self.s_prime, self.m
        x, z = self.matrix.x_block(), self.matrix.z_block()
        blocks = {
            "A1": x[:s, s:m],
            "A2": x[:s, m:],
            "B": z[:s, :s],
            "C": z[:s, m:],
            "D": z[s:, :s],
            "E": z[s:, m:],
        }
        return blocks[name]

    def primary_rows(self) -> list[PauliWord]:
        return list(self.matrix.rows[: self.s_prime])

    def secondary_rows(self) -> list[PauliWord]:
        return list(self.matrix.rows[self.s_prime :])


def standard_form(code: StabilizerCode, relaxed: bool = False) -> StandardForm:
    """Row-reduce and column-permute the generators into block standard form.

    With ``relaxed=True`` the leading X block is only upper triangular.
    """
    code.validate()
    return standard_form_from_matrix(CheckMatrix(code.n, code.generators.rows), code.k, relaxed)


def standard_form_from_matrix(cm: CheckMatrix, k: int, relaxed: bool = False) -> StandardForm:
    """Standard form of rows that already carry a column permutation.

    Rows whose X block is already the leading identity keep their pivots,
    since pivots are searched leftmost-first in row order.
    """
    n, m = cm.n, cm.m
    if m != n - k:
        raise ValidationError(f"{m} rows cannot encode {k} qubits in {n}")
    cm, s_prime = rref_block(cm, (0, m), "x", (0, n), reduced=not relaxed)
    cm, t = rref_block(cm, (s_prime, m), "z", (s_prime, n))
    if t != m - s_prime:
        raise ValidationError("secondary generators are dependent")
    rows = list(cm.rows)
    for i in range(s_prime):
        for c in range(s_prime, m):
            if rows[i].z[c]:
                rows[i] = multiply(rows[i], rows[c])
    return StandardForm(CheckMatrix(n, tuple(rows), cm.perm), s_prime, k, relaxed)


def _strict(sf: StandardForm) -> StandardForm:
    if not sf.relaxed:
        return sf
    rows = list(sf.matrix.rows)
    for c in reversed(range(sf.s_prime)):
        for i in range(c):
            if rows[i].x[c]:
                rows[i] = multiply(rows[i], rows[c])
    return StandardForm(CheckMatrix(sf.n, tuple(rows), sf.perm), sf.s_prime, sf.k, False)


def derive_logical_operators(sf: StandardForm, k: int | None = None) -> LogicalOperators:
    """Encoded X and Z operators read off the standard form, in original labels."""
    k = sf.k if k is None else k
    if sf.m != sf.n - k:
        raise ValidationError(f"standard form has {sf.m} rows, expected {sf.n - k}")
    sf = _strict(sf)
    n, m, s = sf.n, sf.m, sf.s_prime
    x_blk, z_blk = sf.matrix.x_block(), sf.matrix.z_block()
    xbar, zbar = [], []
    # encoded qubit j lives on the j-th message wire in wire order
    for j in sorted(range(k), key=lambda j: sf.perm[m + j]):
        zx = [0] * n
        zz = [0] * n
        zz[:s] = x_blk[:s, m + j].tolist()
        zz[m + j] = 1
        xx = [0] * n
        xz = [0] * n
        xx[s:m] = z_blk[s:m, m + j].tolist()
        xx[m + j] = 1
        xz[:s] = z_blk[:s, m + j].tolist()
        zbar.append(PauliWord(n, 0, tuple(zx), tuple(zz)).with_sign(0).unpermuted(sf.perm))
        xbar.append(PauliWord(n, 0, tuple(xx), tuple(xz)).with_sign(0).unpermuted(sf.perm))
    return LogicalOperators(tuple(xbar), tuple(zbar))


def classify_generators(sf: StandardForm) -> tuple[list[int], list[int]]:
    primary = [i for i, r in enumerate(sf.matrix.rows) if any(r.x)]
    secondary = [i for i, r in enumerate(sf.matrix.rows) if not any(r.x)]
    return primary, secondary


GaugeChoice = Union[str, Sequence[PauliWord]]


def augmented_stabilizer(code: SubsystemCode, choice: GaugeChoice = "gauge_z") -> StabilizerCode:
    """Stabilizer extended by one commuting half of every gauge pair."""
    if isinstance(choice, str):
        if choice in ("gauge_z", "gz"):
            extra = list(code.gauge_z)
        elif choice in ("gauge_x", "gx"):
            extra = list(code.gauge_x)
        else:
            raise ValueError(f"unknown augmentation {choice!r}")
    else:
        extra = list(choice)
    rows = list(code.stabilizer) + extra
    sa = StabilizerCode(code.n, code.n - len(rows), CheckMatrix(code.n, tuple(rows)))
    if len(rows) != code.n - code.k:
        raise ValidationError(f"augmented stabilizer has {len(rows)} rows, expected {code.n - code.k}")
    return sa.validate()


def canonicalize_gauge(raw_generators: Sequence[PauliWord], n: int, k: int, r: int) -> SubsystemCode:
    """Split a gauge generating set into stabilizer rows and hyperbolic pairs.

    Symplectic Gram-Schmidt: each vector is paired with the first later vector
    it anticommutes with; vectors with no partner form the stabilizer.
    """
    words = [w for w in raw_generators]
    independent: list[PauliWord] = []
    for w in words:
        if w.n != n:
            raise ValidationError(f"{w} does not act on {n} qubits")
        if not gf2.in_span(w.x + w.z, _words_array(independent, n)):
            independent.append(w)
    remaining = independent
    stab: list[PauliWord] = []
    gx: list[PauliWord] = []
    gz: list[PauliWord] = []
    while remaining:
        u = remaining.pop(0)
        partner = next((i for i, v in enumerate(remaining) if symplectic_product(u, v)), None)
        if partner is None:
            stab.append(u)
            continue
        v = remaining.pop(partner)
        gx.append(u.hermitian())
        gz.append(v.hermitian())
        cleaned = []
        for w in remaining:
            if symplectic_product(w, v):
                w = multiply(w, u)
            if symplectic_product(w, u):
                w = multiply(w, v)
            cleaned.append(w.hermitian())
        remaining = cleaned
    code = SubsystemCode(n, k, r, tuple(stab), tuple(gx), tuple(gz))
    if len(stab) != n - k - r or len(gx) != r:
        raise ValidationError(
            f"generators give s={len(stab)}, r={len(gx)}; declared n-k-r={n - k - r}, r={r}"
        )
    return code.validate()


def subsystem_logicals(code: SubsystemCode, choice: GaugeChoice = "gauge_z") -> LogicalOperators:
    """Encoded operators of the augmented code, multiplied by gauge rows so
    that they commute with the whole gauge group."""
    sa = augmented_stabilizer(code, choice)
    lo = derive_logical_operators(standard_form(sa), code.k)
    return LogicalOperators(
        tuple(_clean(code, w) for w in lo.xbar),
        tuple(_clean(code, w) for w in lo.zbar),
    )


def _clean(code: SubsystemCode, w: PauliWord) -> PauliWord:
    code = code.paired()
    for gx, gz in zip(code.gauge_x, code.gauge_z):
        if symplectic_product(w, gz):
            w = multiply(w, gx)
        if symplectic_product(w, gx):
            w = multiply(w, gz)
    return w


def check_logical_operators(code: SubsystemCode, lo: LogicalOperators) -> None:
    """Raise ValidationError unless ``lo`` is a valid set of encoded operators.

    They must pair up hyperbolically, commute with the stabilizer and lie
    outside the gauge group.
    """
    k = code.k
    if len(lo.xbar) != k or len(lo.zbar) != k:
        raise ValidationError(f"expected {k} logical X and Z operators")
    for i in range(k):
        for j in range(k):
            if symplectic_product(lo.xbar[i], lo.xbar[j]) or symplectic_product(lo.zbar[i], lo.zbar[j]):
                raise ValidationError("logical operators of the same type must commute")
            if symplectic_product(lo.xbar[i], lo.zbar[j]) != (i == j):
                raise ValidationError(f"logical X{i + 1} / Z{j + 1} commutation is wrong")
    gauge = _words_array(code.gauge_rows(), code.n)
    for w in list(lo.xbar) + list(lo.zbar):
        for st in code.stabilizer:
            if symplectic_product(w, st):
                raise ValidationError(f"logical {w} anticommutes with stabilizer row {st}")
        if gf2.in_span(w.x + w.z, gauge):
            raise ValidationError(f"logical {w} lies in the gauge group")
