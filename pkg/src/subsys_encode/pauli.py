"""Pauli words, check matrices and GF(2) symplectic linear algebra.

A :class:`PauliWord` on ``n`` qubits stores a phase exponent ``e`` and two bit
rows ``x`` and ``z``; it denotes the operator

    i**e * (X**x[0] Z**z[0]) (x) ... (x) (X**x[n-1] Z**z[n-1])

so the bit pair (1, 1) on a qubit is the real matrix ``XZ``.  Text strings use
the usual Hermitian letters instead (``Y = i XZ``); :func:`parse_pauli` and
:meth:`PauliWord.__str__` convert between the two.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "PauliWord",
    "CheckMatrix",
    "DimensionError",
    "MalformedInputError",
    "parse_pauli",
    "to_symplectic",
    "from_symplectic",
    "symplectic_product",
    "multiply",
    "rref_block",
    "pauli_matrix",
]

_SIGNS = {"": 0, "+": 0, "+i": 1, "i": 1, "-": 2, "-i": 3}
_PREFIX = {0: "", 1: "+i", 2: "-", 3: "-i"}
_LETTER_BITS = {"I": (0, 0), "X": (1, 0), "Z": (0, 1), "Y": (1, 1)}
_BITS_LETTER = {v: k for k, v in _LETTER_BITS.items()}


class DimensionError(ValueError):
    """Operands act on different numbers of qubits."""


class MalformedInputError(ValueError):
    """Input cannot be interpreted as a Pauli word or bit vector."""


@dataclass(frozen=True)
class PauliWord:
    n: int
    phase: int
    x: tuple[int, ...]
    z: tuple[int, ...]

    def __post_init__(self):
        if len(self.x) != self.n or len(self.z) != self.n:
            raise DimensionError(f"bit rows must have length {self.n}")
        object.__setattr__(self, "phase", self.phase % 4)
        object.__setattr__(self, "x", tuple(int(b) & 1 for b in self.x))
        object.__setattr__(self, "z", tuple(int(b) & 1 for b in self.z))

    @classmethod
    def identity(cls, n: int) -> "PauliWord":
        return cls(n, 0, (0,) * n, (0,) * n)

    @classmethod
    def single(cls, n: int, qubit: int, letter: str) -> "PauliWord":
        """Hermitian single-qubit Pauli ``letter`` on 0-based ``qubit``."""
        xb, zb = _LETTER_BITS[letter]
        x = [0] * n
        z = [0] * n
        x[qubit], z[qubit] = xb, zb
        return cls(n, xb & zb, tuple(x), tuple(z))

    @property
    def num_y(self) -> int:
        return sum(a & b for a, b in zip(self.x, self.z))

    @property
    def weight(self) -> int:
        return sum(a | b for a, b in zip(self.x, self.z))

    @property
    def sign(self) -> int:
        """Exponent of ``i`` in front of the Hermitian-letter form."""
        return (self.phase - self.num_y) % 4

    def letters(self) -> str:
        return "".join(_BITS_LETTER[(a, b)] for a, b in zip(self.x, self.z))

    def is_hermitian(self) -> bool:
        return self.sign % 2 == 0

    def is_identity(self) -> bool:
        return not any(self.x) and not any(self.z)

    def with_phase(self, phase: int) -> "PauliWord":
        return PauliWord(self.n, phase, self.x, self.z)

    def with_sign(self, sign: int) -> "PauliWord":
        """Same bits, Hermitian-letter prefix ``i**sign``."""
        return PauliWord(self.n, sign + self.num_y, self.x, self.z)

    def hermitian(self) -> "PauliWord":
        """Nearest Hermitian word: multiply by ``-i`` if needed."""
        return self if self.is_hermitian() else self.with_phase(self.phase - 1)

    def negate(self) -> "PauliWord":
        return self.with_phase(self.phase + 2)

    def permuted(self, order: Sequence[int]) -> "PauliWord":
        """Word whose column ``c`` is this word's column ``order[c]``."""
        return PauliWord(self.n, self.phase, tuple(self.x[i] for i in order), tuple(self.z[i] for i in order))

    def unpermuted(self, perm: Sequence[int]) -> "PauliWord":
        """Inverse of :meth:`permuted`: column ``c`` moves to label ``perm[c]``."""
        x = [0] * self.n
        z = [0] * self.n
        for c, label in enumerate(perm):
            x[label], z[label] = self.x[c], self.z[c]
        return PauliWord(self.n, self.phase, tuple(x), tuple(z))

    def __mul__(self, other: "PauliWord") -> "PauliWord":
        return multiply(self, other)

    def __str__(self) -> str:
        return _PREFIX[self.sign] + self.letters()

    def __repr__(self) -> str:
        return f"PauliWord({str(self)!r})"


def parse_pauli(text: str) -> PauliWord:
    """Parse ``[+|-|+i|-i]LETTERS`` with Hermitian letters I, X, Y, Z."""
    s = text.strip()
    body = s.lstrip("+-i")
    prefix = s[: len(s) - len(body)]
    if prefix not in _SIGNS or not body or any(ch not in _LETTER_BITS for ch in body):
        raise MalformedInputError(f"not a Pauli string: {text!r}")
    bits = [_LETTER_BITS[ch] for ch in body]
    x = tuple(b[0] for b in bits)
    z = tuple(b[1] for b in bits)
    word = PauliWord(len(body), 0, x, z)
    return word.with_sign(_SIGNS[prefix])


def to_symplectic(p: PauliWord) -> np.ndarray:
    return np.array(p.x + p.z, dtype=np.uint8)


def from_symplectic(v: Iterable[int], phase: int = 0) -> PauliWord:
    v = [int(b) for b in v]
    if len(v) % 2:
        raise MalformedInputError("symplectic vector must have even length")
    n = len(v) // 2
    return PauliWord(n, phase, tuple(v[:n]), tuple(v[n:]))


def _check_n(u: PauliWord, v: PauliWord) -> None:
    if u.n != v.n:
        raise DimensionError(f"{u.n}-qubit word paired with {v.n}-qubit word")


def symplectic_product(u: PauliWord, v: PauliWord) -> int:
    """0 if ``u`` and ``v`` commute, 1 if they anticommute."""
    _check_n(u, v)
    return (sum(a & b for a, b in zip(u.x, v.z)) + sum(a & b for a, b in zip(u.z, v.x))) & 1


def multiply(u: PauliWord, v: PauliWord) -> PauliWord:
    """Exact operator product ``u @ v``."""
    _check_n(u, v)
    # Z^b X^a = (-1)^(ab) X^a Z^b per qubit
    swaps = sum(b & a for b, a in zip(u.z, v.x))
    return PauliWord(
        u.n,
        u.phase + v.phase + 2 * swaps,
        tuple(a ^ b for a, b in zip(u.x, v.x)),
        tuple(a ^ b for a, b in zip(u.z, v.z)),
    )


_X = np.array([[0, 1], [1, 0]], dtype=complex)
_Z = np.array([[1, 0], [0, -1]], dtype=complex)


def pauli_matrix(p: PauliWord) -> np.ndarray:
    """Dense ``2**n x 2**n`` matrix; qubit 1 is the most significant factor."""
    m = np.array([[1j**p.phase]], dtype=complex)
    for a, b in zip(p.x, p.z):
        f = np.eye(2, dtype=complex)
        if a:
            f = f @ _X
        if b:
            f = f @ _Z
        m = np.kron(m, f)
    return m


@dataclass(frozen=True)
class CheckMatrix:
    """Rows of Pauli words plus the column permutation applied so far.

    ``perm[c]`` is the original (0-based) qubit label of current column ``c``.
    """

    n: int
    rows: tuple[PauliWord, ...]
    perm: tuple[int, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        if not self.perm:
            object.__setattr__(self, "perm", tuple(range(self.n)))
        if sorted(self.perm) != list(range(self.n)):
            raise MalformedInputError("perm is not a permutation")
        for r in self.rows:
            if r.n != self.n:
                raise DimensionError(f"row {r} does not act on {self.n} qubits")

    @classmethod
    def from_strings(cls, rows: Sequence[str]) -> "CheckMatrix":
        words = [parse_pauli(r) for r in rows]
        if not words:
            raise MalformedInputError("empty check matrix needs an explicit n")
        return cls(words[0].n, tuple(words))

    @property
    def m(self) -> int:
        return len(self.rows)

    def to_array(self) -> np.ndarray:
        if not self.rows:
            return np.zeros((0, 2 * self.n), dtype=np.uint8)
        return np.array([r.x + r.z for r in self.rows], dtype=np.uint8)

    def x_block(self) -> np.ndarray:
        return self.to_array()[:, : self.n]

    def z_block(self) -> np.ndarray:
        return self.to_array()[:, self.n :]

    def unpermuted_rows(self) -> list[PauliWord]:
        return [r.unpermuted(self.perm) for r in self.rows]

    def swap_columns(self, a: int, b: int) -> "CheckMatrix":
        if a == b:
            return self
        order = list(range(self.n))
        order[a], order[b] = b, a
        perm = list(self.perm)
        perm[a], perm[b] = perm[b], perm[a]
        return CheckMatrix(self.n, tuple(r.permuted(order) for r in self.rows), tuple(perm))

    def __str__(self) -> str:
        return "\n".join(str(r) for r in self.rows)


def rref_block(
    m: CheckMatrix,
    row_range: tuple[int, int],
    block: str,
    col_range: tuple[int, int],
    reduced: bool = True,
) -> tuple[CheckMatrix, int]:
    """Row-reduce one block of ``m`` restricted to the given ranges.

    ``block`` is ``"x"`` or ``"z"``.  Pivots are taken at the leftmost column
    with a nonzero entry in the remaining rows; a pivot found right of its
    slot is swapped in as a whole qubit column and recorded in ``perm``.
    Row operations multiply words so phases stay exact.  With
    ``reduced=False`` only entries below each pivot are cleared.
    """
    if block not in ("x", "z"):
        raise ValueError("block must be 'x' or 'z'")
    r0, r1 = row_range
    c0, c1 = col_range
    rows = list(m.rows)
    cur = m
    rank = 0

    def bit(word: PauliWord, col: int) -> int:
        return (word.x if block == "x" else word.z)[col]

    slot = c0
    r = r0
    while r < r1 and slot < c1:
        found = None
        for c in range(slot, c1):
            for i in range(r, r1):
                if bit(rows[i], c):
                    found = (c, i)
                    break
            if found:
                break
        if found is None:
            break
        col, piv = found
        if col != slot:
            cur = CheckMatrix(cur.n, tuple(rows), cur.perm).swap_columns(col, slot)
            rows = list(cur.rows)
        rows[r], rows[piv] = rows[piv], rows[r]
        targets = range(r0, r1) if reduced else range(r + 1, r1)
        for i in targets:
            if i != r and bit(rows[i], slot):
                rows[i] = multiply(rows[i], rows[r])
        rank += 1
        r += 1
        slot += 1
    return CheckMatrix(cur.n, tuple(rows), cur.perm), rank
