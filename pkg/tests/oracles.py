"""Slow, independent reference implementations over the rationals.

Nothing here imports the package: these are plain Fraction eliminations
and brute-force enumerations used to cross-check the exact routines.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd


def rref(rows):
    """Reduced row echelon form over Q; returns (R, pivot columns)."""
    A = [[Fraction(x) for x in r] for r in rows]
    m = len(A)
    n = len(A[0]) if A else 0
    pivots = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, m) if A[i][c] != 0), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = 1 / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for i in range(m):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return A, pivots


def rank(rows) -> int:
    if not rows or not rows[0]:
        return 0
    return len(rref(rows)[1])


def det(M) -> Fraction:
    """Gaussian elimination over Q."""
    A = [[Fraction(x) for x in row] for row in M]
    n = len(A)
    d = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if A[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            A[c], A[p] = A[p], A[c]
            d = -d
        d *= A[c][c]
        for i in range(c + 1, n):
            if A[i][c] != 0:
                f = A[i][c] / A[c][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[c])]
    return d


def left_kernel_dim(rows) -> int:
    return len(rows) - rank(rows)


def in_row_span(rows, v) -> bool:
    if not rows:
        return not any(v)
    return rank(rows) == rank(list(rows) + [list(v)])


def is_left_kernel_vector(rows, lam) -> bool:
    n = len(rows[0]) if rows else 0
    return all(sum(l * r[j] for l, r in zip(lam, rows)) == 0 for j in range(n))


def maximal_minor_gcd(B) -> int:
    """gcd of the d x d minors of a d x m integer matrix; 1 iff the row
    lattice is saturated in Z^m."""
    d = len(B)
    m = len(B[0])
    g = 0
    for cols in itertools.combinations(range(m), d):
        g = gcd(g, int(det([[row[c] for c in cols] for row in B])))
        if g == 1:
            return 1
    return g


def circuits(rows, S):
    """Minimal dependent subsets of the rows indexed by S."""
    out = []
    S = list(S)
    for size in range(1, len(S) + 1):
        for C in itertools.combinations(S, size):
            sub = [rows[i] for i in C]
            if rank(sub) != size - 1:
                continue
            if any(set(D) <= set(C) for D in out):
                continue
            out.append(C)
    return out


def is_good_by_circuits(rows, S) -> bool:
    """Good iff every element of S lies in a circuit contained in S."""
    covered = set()
    for C in circuits(rows, S):
        covered |= set(C)
    return covered == set(S)


def small_full_support_relation(rows, S, bound: int = 3):
    """Search coefficients in [-bound, bound] minus 0; a hit proves goodness."""
    vals = [x for x in range(-bound, bound + 1) if x]
    sub = [rows[i] for i in S]
    for lam in itertools.product(vals, repeat=len(S)):
        if is_left_kernel_vector(sub, lam):
            return lam
    return None
