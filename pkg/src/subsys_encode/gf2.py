"""Dense GF(2) helpers on numpy uint8 arrays."""

from __future__ import annotations

import numpy as np


def _as_bits(a) -> np.ndarray:
    return np.array(a, dtype=np.uint8) & 1


def row_echelon(a) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = _as_bits(a).copy()
    if m.ndim == 1:
        m = m[None, :]
    pivots = []
    r = 0
    for c in range(m.shape[1]):
        if r == m.shape[0]:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        p = r + nz[0]
        m[[r, p]] = m[[p, r]]
        mask = m[:, c].astype(bool)
        mask[r] = False
        m[mask] ^= m[r]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(a) -> int:
    a = _as_bits(a)
    if a.size == 0:
        return 0
    return len(row_echelon(a)[1])


def in_span(v, rows) -> bool:
    rows = _as_bits(rows)
    if rows.size == 0:
        return not _as_bits(v).any()
    return rank(np.vstack([rows, _as_bits(v)[None, :]])) == rank(rows)


def same_span(a, b) -> bool:
    a, b = _as_bits(a), _as_bits(b)
    ra, rb = rank(a), rank(b)
    if ra != rb:
        return False
    if ra == 0:
        return True
    return rank(np.vstack([a, b])) == ra


def solve(a, b) -> np.ndarray | None:
    """One solution ``x`` of ``a @ x = b`` over GF(2), or None."""
    a = _as_bits(a)
    b = _as_bits(b).reshape(-1)
    rows, cols = a.shape
    if rows == 0:
        return np.zeros(cols, dtype=np.uint8)
    aug = np.hstack([a, b[:, None]])
    red, pivots = row_echelon(aug)
    if cols in pivots:
        return None
    x = np.zeros(cols, dtype=np.uint8)
    for i, c in enumerate(pivots):
        x[c] = red[i, cols]
    return x


def symplectic_gram(rows) -> np.ndarray:
    """Matrix of pairwise symplectic products of (x|z) rows."""
    rows = _as_bits(rows).astype(np.int64)
    n = rows.shape[1] // 2
    x, z = rows[:, :n], rows[:, n:]
    return ((x @ z.T + z @ x.T) & 1).astype(np.uint8)


def inverse(a) -> np.ndarray | None:
    """Inverse of a square GF(2) matrix, or None if singular."""
    a = _as_bits(a)
    size = a.shape[0]
    if size == 0:
        return np.zeros((0, 0), dtype=np.uint8)
    red, pivots = row_echelon(np.hstack([a, np.eye(size, dtype=np.uint8)]))
    if pivots[:size] != list(range(size)):
        return None
    return red[:, size:]
