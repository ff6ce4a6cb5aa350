"""Lagrangian 3-spheres in fibre products of elliptic fibrations.

Given elliptic fibrations ``pi_1, pi_2`` over P^1 and an arc from a critical
value ``a`` of ``pi_1`` to a critical value ``b`` of ``pi_2``, the fibre
product of the two Lefschetz thimbles over the arc is a family of 2-tori
over the arc, one circle collapsing at each end: a 3-sphere by the genus-one
Heegaard splitting.

Everything is combinatorial: fibre homology is ``Z^2`` in a fixed reference
basis, arcs are lists of crossings and of critical values passed on the way
to the reference point, and monodromy is Picard-Lefschetz.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "CriticalValue",
    "EllipticFibration",
    "PathStep",
    "Crossing",
    "BaseArc",
    "FiberedSphere",
    "FibreProductCheck",
    "NotASphereError",
    "det_pairing",
    "picard_lefschetz_transport",
    "picard_lefschetz_matrix",
    "validate_fibre_product",
    "build_sphere",
    "sphere_pairing",
    "is_null_homologous",
    "total_monodromy",
    "compose_with_automorphism",
    "link_arcs",
]

_POINT_TOL = 1e-12

Vec = tuple[int, int]


class NotASphereError(ValueError):
    pass


def det_pairing(c: Sequence[int], v: Sequence[int]) -> int:
    """Intersection pairing on H_1(T^2): ``c0 v1 - c1 v0``."""
    return int(c[0]) * int(v[1]) - int(c[1]) * int(v[0])


def picard_lefschetz_transport(c: Sequence[int], v: Sequence[int], direction: int = 1) -> Vec:
    """``c + <c, v> v`` (or the inverse for ``direction = -1``)."""
    k = det_pairing(c, v)
    if direction not in (1, -1):
        raise ValueError("direction must be +1 or -1")
    return (int(c[0]) + direction * k * int(v[0]), int(c[1]) + direction * k * int(v[1]))


def picard_lefschetz_matrix(v: Sequence[int]) -> np.ndarray:
    """Matrix of :func:`picard_lefschetz_transport` acting on column vectors."""
    v0, v1 = int(v[0]), int(v[1])
    return np.array([[1 + v0 * v1, -v0 * v0], [v1 * v1, 1 - v0 * v1]], dtype=object)


@dataclass(frozen=True)
class CriticalValue:
    name: str
    point: complex
    vanishing_class: Vec
    trivial: bool = False

    def __post_init__(self):
        v = tuple(int(x) for x in self.vanishing_class)
        if len(v) != 2:
            raise ValueError("vanishing classes live in Z^2")
        object.__setattr__(self, "vanishing_class", v)
        object.__setattr__(self, "point", complex(self.point))
        if self.trivial:
            if v != (0, 0):
                raise ValueError(f"{self.name}: a trivial vanishing cycle has class (0, 0)")
        elif gcd(*v) != 1:
            raise ValueError(f"{self.name}: vanishing class {v} is not primitive")


@dataclass(frozen=True)
class EllipticFibration:
    """Nodal elliptic fibration, at most one node per singular fibre."""

    name: str
    critical_values: tuple

    def __post_init__(self):
        cvs = tuple(self.critical_values)
        object.__setattr__(self, "critical_values", cvs)
        names = [c.name for c in cvs]
        if len(set(names)) != len(names):
            raise ValueError(f"{self.name}: repeated critical value names")
        for i, a in enumerate(cvs):
            for b in cvs[i + 1:]:
                if abs(a.point - b.point) <= _POINT_TOL:
                    raise ValueError(f"{self.name}: critical values {a.name}, {b.name} coincide "
                                     "(one node per fibre)")

    def __getitem__(self, name: str) -> CriticalValue:
        for c in self.critical_values:
            if c.name == name:
                return c
        raise KeyError(f"{self.name} has no critical value {name!r}")

    def points(self) -> list[complex]:
        return [c.point for c in self.critical_values]


@dataclass(frozen=True)
class PathStep:
    """Passing critical value ``name`` of fibration 1 or 2 in a direction."""

    fibration: int
    name: str
    direction: int = 1

    def __post_init__(self):
        if self.fibration not in (1, 2):
            raise ValueError("fibration index is 1 or 2")
        if self.direction not in (1, -1):
            raise ValueError("direction must be +1 or -1")


@dataclass(frozen=True)
class Crossing:
    """Transverse crossing ``id`` with arc ``other``.

    ``path`` lists the monodromy met between this arc's reference point and
    the crossing. ``sign`` is the local intersection sign of the two spheres'
    base directions, normalised so that it already absorbs the Kuenneth sign
    of the torus factors (the crossing of a sphere with fibre classes
    ((1,0),(1,0)) and one with ((0,1),(0,1)) at a crossing of sign +1 has
    intersection number +1).
    """

    id: str
    other: str
    sign: int
    path: tuple = ()

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("crossing sign must be +1 or -1")
        object.__setattr__(self, "path", tuple(self.path))


@dataclass(frozen=True)
class BaseArc:
    name: str
    start: str  # critical value of fibration 1
    end: str  # critical value of fibration 2
    crossings: tuple = ()
    monodromy_path: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(self.crossings))
        object.__setattr__(self, "monodromy_path", tuple(self.monodromy_path))
        ids = [c.id for c in self.crossings]
        if len(set(ids)) != len(ids):
            raise ValueError(f"arc {self.name}: repeated crossing ids")

    def with_crossing(self, crossing: Crossing) -> "BaseArc":
        return BaseArc(self.name, self.start, self.end, self.crossings + (crossing,),
                       self.monodromy_path)


@dataclass(frozen=True)
class FiberedSphere:
    arc: BaseArc
    class_at_reference: tuple  # (c1, c2)
    trivial: tuple = (False, False)
    fibrations: tuple = field(default=(), compare=False, repr=False)


@dataclass(frozen=True)
class FibreProductCheck:
    nodes: tuple
    smooth: bool


def validate_fibre_product(F1: EllipticFibration, F2: EllipticFibration) -> FibreProductCheck:
    """Common critical values: the nodes of the fibre product."""
    nodes = tuple(
        (a.name, b.name, a.point)
        for a in F1.critical_values for b in F2.critical_values
        if abs(a.point - b.point) <= _POINT_TOL
    )
    return FibreProductCheck(nodes, not nodes)


def _transport(c: Vec, steps: Iterable[PathStep], fib_index: int, F: EllipticFibration) -> Vec:
    for st in steps:
        if st.fibration == fib_index:
            c = picard_lefschetz_transport(c, F[st.name].vanishing_class, st.direction)
    return c


def build_sphere(F1: EllipticFibration, F2: EllipticFibration, arc: BaseArc) -> FiberedSphere:
    a, b = F1[arc.start], F2[arc.end]
    for cv in F2.critical_values:
        if abs(cv.point - a.point) <= _POINT_TOL:
            raise ValueError(f"endpoint {a.name} is also critical for {F2.name}")
    for cv in F1.critical_values:
        if abs(cv.point - b.point) <= _POINT_TOL:
            raise ValueError(f"endpoint {b.name} is also critical for {F1.name}")
    c1 = _transport(a.vanishing_class, arc.monodromy_path, 1, F1)
    c2 = _transport(b.vanishing_class, arc.monodromy_path, 2, F2)
    if not (a.trivial or b.trivial) and det_pairing(c1, c2) == 0:
        raise NotASphereError("not a sphere: collapsing circles do not span H1(T^2)")
    return FiberedSphere(arc, (c1, c2), (a.trivial, b.trivial), (F1, F2))


def _classes_at(s: FiberedSphere, crossing: Crossing) -> tuple[Vec, Vec]:
    if not s.fibrations:
        if crossing.path:
            raise ValueError("sphere carries no fibration data to transport along")
        return s.class_at_reference
    F1, F2 = s.fibrations
    c1, c2 = s.class_at_reference
    return _transport(c1, crossing.path, 1, F1), _transport(c2, crossing.path, 2, F2)


def sphere_pairing(s1: FiberedSphere, s2: FiberedSphere) -> int:
    """Sum over arc crossings of ``sign * <c1, c1'> * <c2, c2'>``.

    An arc with both endpoints in common and no crossings is a pushed-off
    copy of the same sphere and pairs to zero; any other shared endpoint is
    not a transverse configuration.
    """
    a1, a2 = s1.arc, s2.arc
    touching = any(c.other == a2.name for c in a1.crossings) or \
        any(c.other == a1.name for c in a2.crossings)
    if (a1.start, a1.end) == (a2.start, a2.end) and not touching:
        return 0
    if a1.start == a2.start or a1.end == a2.end:
        raise ValueError("non-transverse configuration: arcs share an endpoint")
    theirs = {c.id: c for c in a2.crossings if c.other == a1.name}
    total = 0
    seen = set()
    for cr in a1.crossings:
        if cr.other != a2.name:
            continue
        mate = theirs.get(cr.id)
        if mate is None or mate.sign != -cr.sign:
            raise ValueError(f"crossing {cr.id!r} is not recorded consistently on both arcs")
        seen.add(cr.id)
        p1, p2 = _classes_at(s1, cr)
        q1, q2 = _classes_at(s2, mate)
        total += cr.sign * det_pairing(p1, q1) * det_pairing(p2, q2)
    if set(theirs) - seen:
        raise ValueError("crossing recorded on only one arc")
    return total


def is_null_homologous(s: FiberedSphere, F1: EllipticFibration, F2: EllipticFibration) -> bool:
    """Bounding criterion for a fibred sphere over an arc a -> b.

    When the vanishing cycle of ``F1`` at ``a`` is homotopically trivial it
    bounds a disc in each fibre; the discs sweep a 3-chain ``D`` with
    ``d(D x Delta_2) = L + S^2 x (Delta_2)_a``. The second term dies when the
    circle ``(Delta_2)_a`` (the ``F2`` vanishing cycle at b, transported to a)
    is trivial too. Without these flags no claim is made.
    """
    if not validate_fibre_product(F1, F2).smooth:
        return False
    a, b = F1[s.arc.start], F2[s.arc.end]
    return bool(a.trivial and b.trivial)


def total_monodromy(F: EllipticFibration, order: Sequence[str] | None = None) -> np.ndarray:
    """Product of Picard-Lefschetz matrices for a loop around all critical
    values, visited in ``order`` (default: declaration order)."""
    names = [c.name for c in F.critical_values] if order is None else list(order)
    if sorted(names) != sorted(c.name for c in F.critical_values):
        raise ValueError("order must list every critical value exactly once")
    M = np.array([[1, 0], [0, 1]], dtype=object)
    for n in names:
        M = picard_lefschetz_matrix(F[n].vanishing_class).dot(M)
    return M


def compose_with_automorphism(F: EllipticFibration, mobius: Sequence[complex],
                              name: str | None = None) -> EllipticFibration:
    """``phi o pi`` for ``phi(z) = (a z + b) / (c z + d)``: critical values
    move to their images, vanishing data are unchanged."""
    a, b, c, d = (complex(x) for x in mobius)
    if abs(a * d - b * c) <= _POINT_TOL:
        raise ValueError("degenerate Moebius transformation")
    cvs = []
    for cv in F.critical_values:
        den = c * cv.point + d
        if abs(den) <= _POINT_TOL:
            raise ValueError(f"{cv.name} is sent to infinity; choose another chart")
        cvs.append(CriticalValue(cv.name, (a * cv.point + b) / den, cv.vanishing_class,
                                 cv.trivial))
    return EllipticFibration(name or f"phi*{F.name}", tuple(cvs))


def link_arcs(arc1: BaseArc, arc2: BaseArc, crossing_id: str, sign: int,
              path1: Sequence[PathStep] = (), path2: Sequence[PathStep] = ()) -> tuple[BaseArc, BaseArc]:
    """Record one transverse crossing on both arcs with opposite signs."""
    return (arc1.with_crossing(Crossing(crossing_id, arc2.name, sign, tuple(path1))),
            arc2.with_crossing(Crossing(crossing_id, arc1.name, -sign, tuple(path2))))
