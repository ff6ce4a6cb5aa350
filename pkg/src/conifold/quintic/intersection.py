"""Signed intersection numbers of the quintic 3-spheres.

Two cycles meet (as closed sets) only at shared vertices ``(j, zeta)``, the
points where every coordinate but ``u_j`` vanishes. To count with signs we
push the second cycle off by the phase flow ``x_i -> exp(i eps c_i) x_i``
with pairwise distinct rates ``c``; with a single rotated coordinate the
two cycles would still share whole faces. After the push the cycles only
meet near shared vertices, where in the holomorphic chart ``(u_i)_{i != j}``
each incident cell is a cone spanned by three rays. The local number is
then read off by translating one cone system by a small generic vector and
counting transverse cone-cone intersections with orientation signs.

Local contributions depend only on the relative position of the two cycles
at the vertex, so they are memoised on that key (at most 2000 keys).
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np

from ..zlinalg import IntegerMatrix
from .cells import ORDER, QuinticCycle, shared_vertices

__all__ = ["DEFAULT_RATES", "FALLBACK_RATES", "local_intersection", "pairing_entry",
           "pairing_matrix", "pairing_array"]

DEFAULT_RATES = (1, 2, 3, 4)
# alternative push-offs, tried in order when a quantitative check fails
FALLBACK_RATES = ((4, 3, 2, 1), (1, 3, 2, 4), (2, 4, 1, 3))

_EPS = 0.05
# generic translation; any small vector off the finitely many bad directions
_SHIFT = (0.3127 + 0.7419j, -0.5531 + 0.2093j, 0.1187 - 0.9021j)


def _ray(phase: float) -> complex:
    return complex(np.exp(2j * np.pi * phase / ORDER))


def _cone_hit(rho: complex, rho2: complex, w: complex) -> tuple[bool, float]:
    """Solve ``s rho - t rho2 = w`` with s, t > 0; return (hit, det)."""
    m = np.array([[rho.real, -rho2.real], [rho.imag, -rho2.imag]])
    det = float(np.linalg.det(m))
    s, t = np.linalg.solve(m, [w.real, w.imag])
    return bool(s > 0 and t > 0), det


@lru_cache(maxsize=None)
def local_intersection(j: int, sa: int, sb: int, d: tuple, rates: tuple = DEFAULT_RATES) -> int:
    """Local intersection number at a shared vertex on coordinate ``j``.

    ``sa``/``sb`` say which of each cycle's two phases in coordinate j is the
    vertex; ``d[i]`` is the u-label offset ``b_i - a_i`` for the three other
    coordinates, in increasing order.
    """
    others = [i for i in range(4) if i != j]
    phi = [_EPS * (rates[i] - rates[j]) for i in others]
    total = 0
    for sA in itertools.product((0, 1), repeat=3):
        rho_a = [_ray(s) for s in sA]
        sign_a = (-1) ** (sum(sA) + sa)
        for sB in itertools.product((0, 1), repeat=3):
            rho_b = [_ray(d[m] + sB[m]) * np.exp(1j * phi[m]) for m in range(3)]
            hit = True
            for m in range(3):
                ok, _ = _cone_hit(rho_a[m], rho_b[m], _SHIFT[m])
                if not ok:
                    hit = False
                    break
            if not hit:
                continue
            frame = np.zeros((6, 6))
            for m in range(3):
                frame[2 * m, m], frame[2 * m + 1, m] = rho_a[m].real, rho_a[m].imag
                frame[2 * m, 3 + m], frame[2 * m + 1, 3 + m] = rho_b[m].real, rho_b[m].imag
            det = np.linalg.det(frame)
            if abs(det) < 1e-9:  # pragma: no cover - genericity guard
                raise ArithmeticError("non-transverse local intersection")
            sign_b = (-1) ** (sum(sB) + sb)
            # the chart orientation factor (-1)^j enters once per cycle and cancels
            total += sign_a * sign_b * (1 if det > 0 else -1)
    return total


def pairing_entry(a, b, rates: tuple = DEFAULT_RATES) -> int:
    """Intersection number of the cycles with u-labels a and b."""
    total = 0
    for j, sa, sb in shared_vertices(a, b):
        d = tuple((b[i] - a[i]) % ORDER for i in range(4) if i != j)
        total += local_intersection(j, sa, sb, d, tuple(rates))
    return total


def pairing_array(cycles: list[QuinticCycle], others: list[QuinticCycle] | None = None,
                  rates: tuple = DEFAULT_RATES) -> np.ndarray:
    """Pairing of every cycle in ``cycles`` with every cycle in ``others``."""
    others = cycles if others is None else others
    la = [c.u_label for c in cycles]
    lb = [c.u_label for c in others]
    out = np.zeros((len(la), len(lb)), dtype=np.int64)
    rates = tuple(rates)
    for p, a in enumerate(la):
        row = out[p]
        for q, b in enumerate(lb):
            row[q] = pairing_entry(a, b, rates)
    return out


def pairing_matrix(cycles: list[QuinticCycle], lam: str | float = "generic",
                   rates: tuple = DEFAULT_RATES) -> IntegerMatrix:
    """Antisymmetric matrix of topological intersection numbers.

    The cell structure is constant for ``0 < lam < 5`` so ``lam`` only
    documents the fibre; values outside that interval are rejected.
    """
    if lam != "generic":
        lam = float(lam)
        if not 0 < lam < 5:
            raise ValueError("the cycles are defined for 0 < lam < 5")
    return IntegerMatrix.from_array(pairing_array(cycles, rates=rates))
