"""Mod-p elimination used only as a search accelerator.

Nothing computed here is reported without an exact re-check in ``zlinalg``.
"""

from __future__ import annotations

import numpy as np

PRIME = 2_147_483_647  # 2**31 - 1; products of two residues fit in int64


def reduce(A, p: int = PRIME) -> np.ndarray:
    arr = np.asarray(A, dtype=object) % p
    return arr.astype(np.int64)


def left_kernel(A: np.ndarray, p: int = PRIME) -> np.ndarray:
    """Rows K (d x m) with ``K @ A == 0 (mod p)``, d = m - rank_p(A)."""
    m, n = A.shape
    aug = np.concatenate([A % p, np.eye(m, dtype=np.int64)], axis=1)
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.flatnonzero(aug[r:, c])
        if len(nz) == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            aug[[r, piv]] = aug[[piv, r]]
        inv = pow(int(aug[r, c]), p - 2, p)
        aug[r] = aug[r] * inv % p
        col = aug[:, c].copy()
        col[r] = 0
        rows = np.flatnonzero(col)
        if len(rows):
            aug[rows] = (aug[rows] - np.outer(col[rows], aug[r]) % p) % p
        r += 1
    return aug[r:, n:]


def rank(A: np.ndarray, p: int = PRIME) -> int:
    m, n = A.shape
    return m - left_kernel(A, p).shape[0] if m else 0


def column_keys(K: np.ndarray, p: int = PRIME) -> list:
    """Projective class of every column of K (None for a zero column)."""
    keys = []
    for j in range(K.shape[1]):
        col = K[:, j]
        nz = np.flatnonzero(col)
        if len(nz) == 0:
            keys.append(None)
            continue
        inv = pow(int(col[nz[0]]), p - 2, p)
        keys.append(tuple((col * inv % p).tolist()))
    return keys
