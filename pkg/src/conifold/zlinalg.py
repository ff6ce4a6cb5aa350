"""Exact integer linear algebra.

All arithmetic is done on Python integers (arbitrary precision). Dense
elimination steps are vectorised through numpy ``object`` arrays, which keeps
the inner loops in C while never leaving exact integer arithmetic.

Conventions
-----------
* Matrices act on row vectors from the right, so a *relation* among the rows of
  ``A`` is an integer vector ``lam`` with ``lam @ A == 0`` (the left kernel).
* Kernel bases are primitive and sign-normalised: the first nonzero entry of
  every returned vector is positive.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "IntegerMatrix",
    "SmithDecomposition",
    "rank_exact",
    "kernel_basis",
    "smith_normal_form",
    "in_row_span",
    "determinant",
    "pivot_columns",
    "normalize_vector",
]


def _as_int(x) -> int:
    if isinstance(x, (bool, np.bool_)):
        raise TypeError("boolean is not an integer matrix entry")
    if isinstance(x, (int, np.integer)):
        return int(x)
    if isinstance(x, str):
        return int(x.strip())
    if isinstance(x, float) and x.is_integer():
        return int(x)
    raise TypeError(f"non-integer matrix entry {x!r}")


@dataclass(frozen=True)
class IntegerMatrix:
    """Immutable dense integer matrix stored row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        ents = tuple(_as_int(e) for e in self.entries)
        if len(ents) != self.rows * self.cols:
            raise ValueError(
                f"entries length {len(ents)} != rows*cols = {self.rows * self.cols}"
            )
        object.__setattr__(self, "entries", ents)

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence], cols: int | None = None) -> "IntegerMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            if not rows:
                raise ValueError("cols must be given for a matrix without rows")
            cols = len(rows[0])
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(e for r in rows for e in r))

    @classmethod
    def from_array(cls, arr) -> "IntegerMatrix":
        arr = np.asarray(arr)
        if arr.ndim != 2:
            raise ValueError("expected a 2-d array")
        if arr.dtype.kind in "iu":
            # already integral: skip per-entry validation
            return cls._trusted(arr.shape[0], arr.shape[1], tuple(arr.ravel().tolist()))
        arr = arr.astype(object)
        return cls(arr.shape[0], arr.shape[1], tuple(arr.ravel().tolist()))

    @classmethod
    def _trusted(cls, rows: int, cols: int, entries: tuple) -> "IntegerMatrix":
        obj = object.__new__(cls)
        object.__setattr__(obj, "rows", rows)
        object.__setattr__(obj, "cols", cols)
        object.__setattr__(obj, "entries", entries)
        return obj

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntegerMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def to_array(self) -> np.ndarray:
        """Object-dtype copy (exact integers)."""
        out = np.empty((self.rows, self.cols), dtype=object)
        for i in range(self.rows):
            out[i, :] = self.row(i)
        return out

    def transpose(self) -> "IntegerMatrix":
        e, c = self.entries, self.cols
        return IntegerMatrix._trusted(self.cols, self.rows,
                                      tuple(e[i * c + j] for j in range(self.cols)
                                            for i in range(self.rows)))

    T = property(transpose)

    def submatrix(self, rows: Sequence[int] | None = None,
                  cols: Sequence[int] | None = None) -> "IntegerMatrix":
        rows = range(self.rows) if rows is None else list(rows)
        cols = range(self.cols) if cols is None else list(cols)
        for i in rows:
            if not 0 <= i < self.rows:
                raise IndexError(f"row {i} out of range")
        for j in cols:
            if not 0 <= j < self.cols:
                raise IndexError(f"column {j} out of range")
        e, c = self.entries, self.cols
        return IntegerMatrix._trusted(len(rows), len(cols),
                                      tuple(e[i * c + j] for i in rows for j in cols))

    def append_row(self, v: Sequence[int]) -> "IntegerMatrix":
        if len(v) != self.cols:
            raise ValueError("row length mismatch")
        return IntegerMatrix(self.rows + 1, self.cols, self.entries + tuple(_as_int(x) for x in v))

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        if self.rows == 0 or other.cols == 0:
            return IntegerMatrix.zeros(self.rows, other.cols)
        if self.cols == 0:
            return IntegerMatrix.zeros(self.rows, other.cols)
        prod = self.to_array().dot(other.to_array())
        return IntegerMatrix._trusted(prod.shape[0], prod.shape[1],
                                      tuple(int(x) for x in prod.ravel()))

    def left_apply(self, lam: Sequence[int]) -> tuple[int, ...]:
        """Return ``lam @ self`` as a tuple."""
        if len(lam) != self.rows:
            raise ValueError("vector length must equal the row count")
        out = [0] * self.cols
        for i, c in enumerate(lam):
            if c:
                c = int(c)
                r = self.row(i)
                for j in range(self.cols):
                    out[j] += c * r[j]
        return tuple(out)

    def is_zero(self) -> bool:
        return not any(self.entries)


@dataclass(frozen=True)
class SmithDecomposition:
    """``U @ A @ V == D`` with ``U``, ``V`` unimodular."""

    U: IntegerMatrix
    D: IntegerMatrix
    V: IntegerMatrix

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        n = min(self.D.rows, self.D.cols)
        return tuple(d for d in (self.D[i, i] for i in range(n)) if d != 0)


def _coerce(A) -> IntegerMatrix:
    if isinstance(A, IntegerMatrix):
        return A
    return IntegerMatrix.from_rows(A)


def _bareiss(arr: np.ndarray) -> tuple[int, list[int], np.ndarray]:
    """Fraction-free forward elimination in place on an object array.

    Returns (rank, pivot columns, echelon array). Every intermediate value is a
    minor of the input, so entries stay exact integers.
    """
    m, n = arr.shape
    prev = 1
    r = 0
    pivots: list[int] = []
    for c in range(n):
        if r == m:
            break
        nz = np.flatnonzero(arr[r:, c] != 0)
        if len(nz) == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            arr[[r, piv]] = arr[[piv, r]]
        p = arr[r, c]
        if r + 1 < m:
            lower = arr[r + 1:, c + 1:]
            arr[r + 1:, c + 1:] = (lower * p - np.outer(arr[r + 1:, c], arr[r, c + 1:])) // prev
            arr[r + 1:, c] = 0
        prev = p
        pivots.append(c)
        r += 1
    return r, pivots, arr


def rank_exact(A) -> int:
    """Rank over the rationals."""
    A = _coerce(A)
    if A.rows == 0 or A.cols == 0:
        return 0
    # eliminate along the shorter side
    arr = A.to_array() if A.rows <= A.cols else A.to_array().T.copy()
    return _bareiss(arr)[0]


def pivot_columns(A) -> list[int]:
    """Indices of a lexicographically-first set of linearly independent columns."""
    A = _coerce(A)
    if A.rows == 0 or A.cols == 0:
        return []
    return _bareiss(A.to_array())[1]


def determinant(A) -> int:
    A = _coerce(A)
    if A.rows != A.cols:
        raise ValueError("determinant of a non-square matrix")
    n = A.rows
    if n == 0:
        return 1
    arr = A.to_array()
    sign = 1
    prev = 1
    for k in range(n):
        if arr[k, k] == 0:
            nz = np.flatnonzero(arr[k + 1:, k] != 0)
            if len(nz) == 0:
                return 0
            piv = k + 1 + int(nz[0])
            arr[[k, piv]] = arr[[piv, k]]
            sign = -sign
        p = arr[k, k]
        if k + 1 < n:
            arr[k + 1:, k + 1:] = (arr[k + 1:, k + 1:] * p
                                   - np.outer(arr[k + 1:, k], arr[k, k + 1:])) // prev
        prev = p
    return sign * int(arr[n - 1, n - 1])


def in_row_span(A, v: Sequence[int]) -> bool:
    """True iff ``v`` is a rational combination of the rows of ``A``."""
    A = _coerce(A)
    if len(v) != A.cols:
        raise ValueError(f"vector length {len(v)} != column count {A.cols}")
    if not any(v):
        return True
    if A.rows == 0:
        return False
    return rank_exact(A.append_row(v)) == rank_exact(A)


def normalize_vector(v: Sequence[int]) -> tuple[int, ...]:
    """Divide by the content and make the first nonzero entry positive."""
    g = 0
    for x in v:
        g = gcd(g, int(x))
    if g == 0:
        return tuple(int(x) for x in v)
    first = next(int(x) for x in v if x)
    if first < 0:
        g = -g
    return tuple(int(x) // g for x in v)


def _row_echelon_transform(arr: np.ndarray) -> tuple[np.ndarray, np.ndarray, int]:
    """Unimodular row reduction: returns (H, U, rank) with U @ arr == H echelon.

    Euclidean steps on the smallest nonzero pivot candidate keep U unimodular.
    """
    m, n = arr.shape
    H = arr.copy()
    U = np.empty((m, m), dtype=object)
    U[:, :] = 0
    for i in range(m):
        U[i, i] = 1
    r = 0
    for c in range(n):
        if r == m:
            break
        found = False
        while True:
            col = H[r:, c]
            nz = np.flatnonzero(col != 0)
            if len(nz) == 0:
                break
            found = True
            absvals = [abs(col[i]) for i in nz]
            i0 = r + int(nz[int(np.argmin(absvals))])
            if i0 != r:
                H[[r, i0]] = H[[i0, r]]
                U[[r, i0]] = U[[i0, r]]
            p = H[r, c]
            clean = True
            for i in range(r + 1, m):
                x = H[i, c]
                if x == 0:
                    continue
                q = x // p
                H[i, c:] = H[i, c:] - q * H[r, c:]
                U[i] = U[i] - q * U[r]
                if H[i, c] != 0:
                    clean = False
            if clean:
                break
        if found:
            r += 1
    return H, U, r


def kernel_basis(A) -> list[tuple[int, ...]]:
    """Basis of the lattice ``{lam in Z^rows : lam @ A == 0}``.

    The returned vectors are rows of a unimodular transform, so they form a
    basis of the full (saturated) kernel lattice, not just a finite-index
    sublattice.
    """
    A = _coerce(A)
    m = A.rows
    if m == 0:
        return []
    if A.cols == 0:
        return [tuple(int(i == j) for j in range(m)) for i in range(m)]
    _, U, r = _row_echelon_transform(A.to_array())
    return [normalize_vector(U[i].tolist()) for i in range(r, m)]


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with s*a + t*b == g == gcd(a, b) >= 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def smith_normal_form(A) -> SmithDecomposition:
    """Smith normal form with unimodular transforms, ``U @ A @ V == D``."""
    A = _coerce(A)
    m, n = A.shape
    D = A.to_array() if m and n else np.zeros((m, n), dtype=object)
    U = np.array([[int(i == j) for j in range(m)] for i in range(m)], dtype=object).reshape(m, m)
    V = np.array([[int(i == j) for j in range(n)] for i in range(n)], dtype=object).reshape(n, n)

    t = 0
    while t < min(m, n):
        block = D[t:, t:]
        nz = np.argwhere(block != 0)
        if len(nz) == 0:
            break
        # pivot on the smallest nonzero entry of the trailing block
        best = min(nz.tolist(), key=lambda ij: (abs(block[ij[0], ij[1]]), ij[0], ij[1]))
        i, j = best[0] + t, best[1] + t
        if i != t:
            D[[t, i]] = D[[i, t]]
            U[[t, i]] = U[[i, t]]
        if j != t:
            D[:, [t, j]] = D[:, [j, t]]
            V[:, [t, j]] = V[:, [j, t]]
        while True:
            p = D[t, t]
            done = True
            for i in range(t + 1, m):
                if D[i, t] != 0:
                    q = D[i, t] // p
                    D[i] = D[i] - q * D[t]
                    U[i] = U[i] - q * U[t]
                    if D[i, t] != 0:
                        done = False
            for j in range(t + 1, n):
                if D[t, j] != 0:
                    q = D[t, j] // p
                    D[:, j] = D[:, j] - q * D[:, t]
                    V[:, j] = V[:, j] - q * V[:, t]
                    if D[t, j] != 0:
                        done = False
            if done:
                break
            # a remainder is now smaller than the pivot: move it into place
            rest_r = [(abs(D[i, t]), i, t) for i in range(t + 1, m) if D[i, t] != 0]
            rest_c = [(abs(D[t, j]), t, j) for j in range(t + 1, n) if D[t, j] != 0]
            _, i, j = min(rest_r + rest_c)
            if i != t:
                D[[t, i]] = D[[i, t]]
                U[[t, i]] = U[[i, t]]
            if j != t:
                D[:, [t, j]] = D[:, [j, t]]
                V[:, [t, j]] = V[:, [j, t]]
        if D[t, t] < 0:
            D[t] = -D[t]
            U[t] = -U[t]
        t += 1

    # divisibility chain d_1 | d_2 | ... via 2x2 unimodular gcd/lcm moves
    r = t
    changed = True
    while changed:
        changed = False
        for i in range(r):
            for k in range(i + 1, r):
                a, b = D[i, i], D[k, k]
                if b % a == 0:
                    continue
                g, s, tt = _xgcd(a, b)
                # rows: [[s, t], [-b/g, a/g]]; cols: [[1, -t b/g], [1, s a/g]]
                ui, uk = U[i].copy(), U[k].copy()
                U[i] = s * ui + tt * uk
                U[k] = (-b // g) * ui + (a // g) * uk
                vi, vk = V[:, i].copy(), V[:, k].copy()
                V[:, i] = vi + vk
                V[:, k] = (-tt * b // g) * vi + (s * a // g) * vk
                D[i, i], D[k, k] = g, a // g * b
                changed = True
    for i in range(r):
        if D[i, i] < 0:
            D[i] = -D[i]
            U[i] = -U[i]
    return SmithDecomposition(
        U=IntegerMatrix(m, m, tuple(U.ravel().tolist())),
        D=IntegerMatrix(m, n, tuple(D.ravel().tolist())),
        V=IntegerMatrix(n, n, tuple(V.ravel().tolist())),
    )
