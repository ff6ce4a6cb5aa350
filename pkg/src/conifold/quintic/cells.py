"""Phase cells and the 625 piecewise-linear 3-spheres on the quintic pencil.

Points of ``Q_lam = {x1^5 + ... + x5^5 = lam x1 x2 x3 x4 x5}`` are described,
for ``0 <= lam < 5``, by the phases of x1..x4 (each zero or on a ray
``alpha^m (0, inf)``, ``alpha = exp(2 pi i / 5)``) together with a branch
index k choosing the root

    x5 = exp((2k - 1) pi i / 5) (x1^5 + ... + x4^5)^(1/5)

continued from ``lam = 0``. The group ``G = (Z/5)^3`` acts by
``x_j -> alpha^(i_j) x_j`` with ``sum i_j = 0`` modulo the diagonal.

Working projectively, a cell with absolute phases ``a_j`` and branch ``k`` is
the same point set as the one with phases ``a_j + 1`` and branch ``k + 1``.
The invariant description is the *u-phase* ``a_j - k + 1``: it is the phase of
``u_j = x_j e^{pi i/5} / x5``, a coordinate in which the Fermat fibre becomes
``u1^5 + ... + u4^5 = 1``. Overlap questions are answered in u-phases.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass
from typing import Sequence

from ..zlinalg import IntegerMatrix, rank_exact

__all__ = [
    "ORDER",
    "GroupElement",
    "group_elements",
    "canonical_group_element",
    "compose",
    "PhaseCell",
    "QuinticCycle",
    "generate_cycles",
    "branch_transport",
    "cells_disjoint",
    "cycle_u_label",
    "cycle_from_u_label",
    "cycle_boundary",
    "cycle_betti_numbers",
    "cycles_disjoint",
    "shared_vertices",
]

ORDER = 5
GroupElement = tuple  # (i1, i2, i3, i4, i5), sum = 0 mod 5


def _check_group_element(g) -> tuple[int, ...]:
    g = tuple(int(x) % ORDER for x in g)
    if len(g) != 5:
        raise ValueError(f"group element needs 5 exponents, got {len(g)}")
    if sum(g) % ORDER:
        raise ValueError(f"exponents {g} do not sum to 0 mod 5")
    return g


def canonical_group_element(g) -> tuple[int, ...]:
    """Representative modulo the diagonal with ``i5 = 0``."""
    g = _check_group_element(g)
    return tuple((x - g[4]) % ORDER for x in g)


def compose(g, h) -> tuple[int, ...]:
    g, h = _check_group_element(g), _check_group_element(h)
    return tuple((x + y) % ORDER for x, y in zip(g, h))


def group_elements() -> list[tuple[int, ...]]:
    """The 125 canonical elements, lexicographic in (i1, i2, i3, i4)."""
    out = []
    for i in itertools.product(range(ORDER), repeat=3):
        i4 = (-sum(i)) % ORDER
        out.append((*i, i4, 0))
    return sorted(out)


def branch_transport(k: int, g) -> int:
    """Branch index of the x5 root after acting by g.

    The root ``exp((2k-1) pi i/5) R`` times ``alpha^(i5)`` equals
    ``exp((2(k + i5) - 1) pi i/5) R``.
    """
    g = _check_group_element(g)
    return (int(k) + g[4]) % ORDER


@dataclass(frozen=True)
class PhaseCell:
    """A cell ``g . {x_j in alpha^(m_j)(0, inf) or x_j = 0}`` on branch k.

    ``constraints[j]`` is None for ``x_{j+1} = 0`` and ``m`` for
    ``ray(m)``. The cell is oriented by the coordinate order of its nonzero
    coordinates.
    """

    k: int
    constraints: tuple
    g: tuple = (0, 0, 0, 0, 0)

    def __post_init__(self):
        cons = tuple(None if c is None else int(c) % ORDER for c in self.constraints)
        if len(cons) != 4:
            raise ValueError("a phase cell constrains exactly x1..x4")
        object.__setattr__(self, "constraints", cons)
        object.__setattr__(self, "k", int(self.k) % ORDER)
        object.__setattr__(self, "g", _check_group_element(self.g))

    @property
    def dimension(self) -> int:
        return sum(c is not None for c in self.constraints) - 1

    @property
    def branch(self) -> int:
        return branch_transport(self.k, self.g)

    @property
    def phases(self) -> tuple:
        """Absolute phases after applying g."""
        return tuple(None if c is None else (c + gi) % ORDER
                     for c, gi in zip(self.constraints, self.g))

    @property
    def u_phases(self) -> tuple:
        """Projectively invariant phases ``a_j - branch + 1``."""
        b = self.branch
        return tuple(None if a is None else (a - b + 1) % ORDER for a in self.phases)

    def vertices(self) -> frozenset:
        return frozenset((j, p) for j, p in enumerate(self.u_phases) if p is not None)

    def faces(self) -> list[tuple[int, "PhaseCell"]]:
        """Codimension-one faces with their simplicial boundary signs."""
        out = []
        pos = 0
        for j, c in enumerate(self.constraints):
            if c is None:
                continue
            if self.dimension > 0:
                cons = list(self.constraints)
                cons[j] = None
                out.append(((-1) ** pos, PhaseCell(self.k, tuple(cons), self.g)))
            pos += 1
        return out

    def key(self) -> tuple:
        """Hashable identity of the underlying point set."""
        return self.u_phases


def cells_disjoint(c1: PhaseCell, c2: PhaseCell) -> bool:
    """True iff the closed cells share no point.

    A closed cell contains the faces where any subset of its nonzero
    coordinates vanishes, so two closed cells meet iff some coordinate is a
    ray of the same u-phase in both (a common vertex); everything else can be
    set to zero.
    """
    if c1.dimension < 0 or c2.dimension < 0:
        return True
    return not (c1.vertices() & c2.vertices())


@dataclass(frozen=True)
class QuinticCycle:
    """``g . L^k``: 16 signed 3-cells ``C^1 - C^alpha`` glued along ``C^0``."""

    k: int
    g: tuple
    cells: tuple  # of (sign, PhaseCell)

    @property
    def label(self) -> tuple:
        return (self.k, self.g)

    @property
    def u_label(self) -> tuple[int, ...]:
        return cycle_u_label(self.k, self.g)

    def vertices(self) -> frozenset:
        out = set()
        for _, c in self.cells:
            out |= c.vertices()
        return frozenset(out)


def _base_cells(k: int, g: tuple) -> tuple:
    cells = []
    for s in itertools.product((0, 1), repeat=4):
        # s4 = 0 gives the C^1 half, s4 = 1 the C^alpha half
        cells.append(((-1) ** sum(s), PhaseCell(k, s, g)))
    return tuple(cells)


def make_cycle(k: int, g) -> QuinticCycle:
    g = canonical_group_element(g)
    return QuinticCycle(int(k) % ORDER, g, _base_cells(int(k) % ORDER, g))


def generate_cycles() -> list[QuinticCycle]:
    """All 625 cycles, ordered by branch k then group element."""
    return [make_cycle(k, g) for k in range(ORDER) for g in group_elements()]


def cycle_u_label(k: int, g) -> tuple[int, ...]:
    """u-phase of the ``s = 0`` corner: ``c_j = i_j - i5 - (k - 1)``."""
    g = _check_group_element(g)
    return tuple((g[j] - g[4] - (k - 1)) % ORDER for j in range(4))


def cycle_from_u_label(c: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """Inverse of :func:`cycle_u_label` on canonical labels."""
    c = tuple(int(x) % ORDER for x in c)
    km1 = sum(c) % ORDER
    return (km1 + 1) % ORDER, tuple((x + km1) % ORDER for x in c) + (0,)


def shared_vertices(a: Sequence[int], b: Sequence[int]) -> list[tuple[int, int, int]]:
    """Common vertices of cycles with u-labels a and b as (j, sA, sB)."""
    out = []
    for j in range(4):
        d = (b[j] - a[j]) % ORDER
        if d == 0:
            out.extend([(j, 0, 0), (j, 1, 1)])
        elif d == 1:
            out.append((j, 1, 0))
        elif d == ORDER - 1:
            out.append((j, 0, 1))
    return out


def cycles_disjoint(A: QuinticCycle, B: QuinticCycle) -> bool:
    return not shared_vertices(A.u_label, B.u_label)


def cycle_boundary(cycle: QuinticCycle) -> dict:
    """Chain boundary as {face key: coefficient}, zero entries dropped."""
    acc: dict = defaultdict(int)
    for sign, cell in cycle.cells:
        for fs, face in cell.faces():
            acc[face.key()] += sign * fs
    return {k: v for k, v in acc.items() if v}


def _closure(cycle: QuinticCycle) -> dict[int, list[PhaseCell]]:
    by_dim: dict[int, dict] = defaultdict(dict)
    stack = [c for _, c in cycle.cells]
    while stack:
        c = stack.pop()
        if c.key() in by_dim[c.dimension]:
            continue
        by_dim[c.dimension][c.key()] = c
        stack.extend(f for _, f in c.faces())
    return {d: [cells[k] for k in sorted(cells, key=lambda t: tuple(-1 if x is None else x
                                                                   for x in t))]
            for d, cells in by_dim.items()}


def cycle_betti_numbers(cycle: QuinticCycle) -> tuple[tuple[int, ...], int]:
    """Betti numbers and Euler characteristic of the closed cell complex."""
    cells = _closure(cycle)
    counts = [len(cells.get(d, [])) for d in range(4)]
    index = {d: {c.key(): i for i, c in enumerate(cells.get(d, []))} for d in range(4)}
    ranks = [0] * 5
    for d in range(1, 4):
        rows = []
        for c in cells.get(d, []):
            row = [0] * counts[d - 1]
            for s, f in c.faces():
                row[index[d - 1][f.key()]] += s
            rows.append(row)
        ranks[d] = rank_exact(IntegerMatrix.from_rows(rows, counts[d - 1])) if rows else 0
    betti = tuple(counts[d] - ranks[d] - ranks[d + 1] for d in range(4))
    euler = sum((-1) ** d * counts[d] for d in range(4))
    return betti, euler
