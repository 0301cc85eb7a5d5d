"""Dense linear algebra over F_p on numpy int64 matrices.

Matrices here come from constraint systems on boxes of lattice cells and
from residue-coefficient tables; entries always live in {0, ..., p-1}.
"""

from __future__ import annotations

import numpy as np


def rref(matrix: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form mod p; returns (R, pivot column list)."""
    m = np.array(matrix, dtype=np.int64, copy=True) % p
    rows, cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            m[[r, piv]] = m[[piv, r]]
        inv = pow(int(m[r, c]), p - 2, p)
        m[r] = (m[r] * inv) % p
        other = np.nonzero(m[:, c])[0]
        for i in other:
            if i != r:
                m[i] = (m[i] - m[i, c] * m[r]) % p
        pivots.append(c)
        r += 1
    return m, pivots


def rank(matrix: np.ndarray, p: int) -> int:
    if matrix.size == 0:
        return 0
    return len(rref(matrix, p)[1])


def kernel_basis(matrix: np.ndarray, p: int) -> np.ndarray:
    """Basis of the right null space mod p, one vector per row."""
    matrix = np.atleast_2d(np.asarray(matrix, dtype=np.int64))
    cols = matrix.shape[1]
    if matrix.size == 0:
        return np.eye(cols, dtype=np.int64)
    r, pivots = rref(matrix, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, fc in enumerate(free):
        basis[k, fc] = 1
        for i, pc in enumerate(pivots):
            basis[k, pc] = (-r[i, fc]) % p
    return basis


def in_row_space(matrix: np.ndarray, vector: np.ndarray, p: int) -> bool:
    """Is `vector` an F_p-combination of the rows of `matrix`?"""
    matrix = np.atleast_2d(np.asarray(matrix, dtype=np.int64))
    vector = np.asarray(vector, dtype=np.int64) % p
    if matrix.size == 0:
        return not vector.any()
    base = rank(matrix, p)
    aug = np.vstack([matrix % p, vector])
    return rank(aug, p) == base
