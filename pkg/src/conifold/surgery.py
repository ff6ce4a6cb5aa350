"""Topological bookkeeping for conifold transitions.

Collapsing ``n`` Lagrangian 3-spheres whose classes span an ``r``-dimensional
subspace of H_3 and resolving the nodes by symplectic 2-spheres changes the
Betti numbers by

    b3 -> b3 - 2r,   b2 -> b2 + (n - r),   b4 -> b4 + (n - r),

and the Euler characteristic by ``+2n``.
"""

from __future__ import annotations

from dataclasses import dataclass, asdict, replace

__all__ = [
    "SixManifoldTopology",
    "ObstructionFlags",
    "NoGoodRelationError",
    "conifold_transition",
    "reverse_transition",
    "obstruction_flags",
    "QUINTIC",
]


class NoGoodRelationError(ValueError):
    pass


@dataclass(frozen=True)
class SixManifoldTopology:
    b2: int
    b3: int
    b4: int
    euler: int
    simply_connected: bool = True
    c1_zero: bool = False
    has_null_homologous_surgered_sphere: bool = False

    def __post_init__(self):
        for name in ("b2", "b3", "b4"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise ValueError(f"{name} must be a nonnegative integer, got {v!r}")
        if self.b3 % 2:
            raise ValueError(f"b3 = {self.b3} is odd; H_3 of a closed symplectic 6-manifold "
                             "carries a symplectic basis")
        if self.simply_connected:
            if self.b2 != self.b4:
                raise ValueError(f"Poincare duality needs b2 == b4 (got {self.b2}, {self.b4})")
            if self.euler != 2 + 2 * self.b2 - self.b3:
                raise ValueError(f"euler {self.euler} != 2 + 2*b2 - b3 = "
                                 f"{2 + 2 * self.b2 - self.b3}")

    @classmethod
    def simply_connected_from(cls, b2: int, b3: int, **flags) -> "SixManifoldTopology":
        return cls(b2=b2, b3=b3, b4=b2, euler=2 + 2 * b2 - b3, simply_connected=True, **flags)

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "SixManifoldTopology":
        return cls(**d)


# the quintic threefold in P^4
QUINTIC = SixManifoldTopology(b2=1, b3=204, b4=1, euler=-200, simply_connected=True,
                              c1_zero=True)


def conifold_transition(X: SixManifoldTopology, n: int, r: int, good: bool = True,
                        null_homologous: bool = False) -> SixManifoldTopology:
    """Topology after collapsing ``n`` spheres spanning ``r`` dimensions.

    ``good`` must be True: without a relation with all coefficients nonzero
    no resolution carries a symplectic form. ``null_homologous`` records that
    at least one collapsed sphere bounds.
    """
    if not good:
        raise NoGoodRelationError(
            "no good relation: no symplectic structure on any resolution")
    if n < 0 or r < 0:
        raise ValueError("n and r must be nonnegative")
    if r > n:
        raise ValueError(f"span r = {r} exceeds sphere count n = {n}")
    if 2 * r > X.b3:
        raise ValueError(f"span r = {r} exceeds b3/2 = {X.b3 // 2}")
    return replace(
        X,
        b2=X.b2 + n - r,
        b3=X.b3 - 2 * r,
        b4=X.b4 + n - r,
        euler=X.euler + 2 * n,
        has_null_homologous_surgered_sphere=X.has_null_homologous_surgered_sphere or
        (null_homologous and n > 0),
    )


def reverse_transition(Y: SixManifoldTopology, n: int, r: int) -> SixManifoldTopology:
    """Formal inverse of :func:`conifold_transition` (smoothing ``n`` nodes
    obtained by contracting ``n`` curves). Flags are carried over unchanged."""
    if n < 0 or r < 0 or r > n:
        raise ValueError(f"need 0 <= r <= n, got n={n}, r={r}")
    if Y.b2 < n - r or Y.b4 < n - r:
        raise ValueError(f"b2, b4 must be at least n - r = {n - r}")
    return replace(
        Y,
        b2=Y.b2 - (n - r),
        b3=Y.b3 + 2 * r,
        b4=Y.b4 - (n - r),
        euler=Y.euler - 2 * n,
    )


@dataclass(frozen=True)
class ObstructionFlags:
    non_kahler_by_b3: bool
    hard_lefschetz_violated: bool
    c2_omega_increases: bool

    def to_dict(self) -> dict:
        return asdict(self)


def obstruction_flags(Y: SixManifoldTopology, spheres: int = 0) -> ObstructionFlags:
    """Qualitative obstructions to Y being Kaehler.

    * simply connected, c1 = 0 and b3 = 0 cannot be Kaehler (a holomorphic
      volume form would give a nonzero class in H^{3,0});
    * a collapsed null-homologous sphere yields a 4-cycle pairing to zero
      with [omega], against Hard Lefschetz;
    * each new exceptional curve has positive area, so c2.[omega] grows.

    ``spheres`` is the number of spheres collapsed by the transition that
    produced Y (0 when Y is not the output of a transition).
    """
    return ObstructionFlags(
        non_kahler_by_b3=Y.simply_connected and Y.c1_zero and Y.b3 == 0,
        hard_lefschetz_violated=Y.has_null_homologous_surgered_sphere,
        c2_omega_increases=spheres >= 1,
    )
