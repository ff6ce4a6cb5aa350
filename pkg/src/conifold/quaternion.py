"""Quaternions as numpy 4-vectors ``(w, x, y, z) = w + x i + y j + z k``.

Functions broadcast over leading axes so that batches of samples can be
handled without Python loops.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = ["Quaternion", "qmul", "qconj", "qinv", "qnorm", "ONE", "I", "J", "K", "left_i"]


def qmul(p, q) -> np.ndarray:
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    pw, px, py, pz = np.moveaxis(p, -1, 0)
    qw, qx, qy, qz = np.moveaxis(q, -1, 0)
    return np.stack([
        pw * qw - px * qx - py * qy - pz * qz,
        pw * qx + px * qw + py * qz - pz * qy,
        pw * qy - px * qz + py * qw + pz * qx,
        pw * qz + px * qy - py * qx + pz * qw,
    ], axis=-1)


def qconj(q) -> np.ndarray:
    q = np.asarray(q, dtype=float)
    return q * np.array([1.0, -1.0, -1.0, -1.0])


def qnorm(q) -> np.ndarray:
    return np.linalg.norm(np.asarray(q, dtype=float), axis=-1)


def qinv(q) -> np.ndarray:
    q = np.asarray(q, dtype=float)
    n2 = np.sum(q * q, axis=-1, keepdims=True)
    if np.any(n2 == 0):
        raise ZeroDivisionError("zero quaternion has no inverse")
    return qconj(q) / n2


def left_i(u) -> np.ndarray:
    """Left multiplication by i: ``(u1,u2,u3,u4) -> (-u2, u1, -u4, u3)``."""
    u = np.asarray(u, dtype=float)
    return np.stack([-u[..., 1], u[..., 0], -u[..., 3], u[..., 2]], axis=-1)


@dataclass(frozen=True)
class Quaternion:
    w: float
    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    @classmethod
    def from_array(cls, a) -> "Quaternion":
        a = np.asarray(a, dtype=float)
        if a.shape != (4,):
            raise ValueError("a quaternion has four components")
        return cls(*map(float, a))

    def array(self) -> np.ndarray:
        return np.array([self.w, self.x, self.y, self.z])

    def __mul__(self, other: "Quaternion") -> "Quaternion":
        if isinstance(other, (int, float)):
            return Quaternion.from_array(self.array() * other)
        return Quaternion.from_array(qmul(self.array(), other.array()))

    __rmul__ = __mul__

    def __add__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion.from_array(self.array() + other.array())

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion.from_array(self.array() - other.array())

    def __neg__(self) -> "Quaternion":
        return Quaternion.from_array(-self.array())

    def conj(self) -> "Quaternion":
        return Quaternion.from_array(qconj(self.array()))

    def inverse(self) -> "Quaternion":
        return Quaternion.from_array(qinv(self.array()))

    def norm(self) -> float:
        return float(qnorm(self.array()))

    def is_imaginary(self, tol: float = 1e-12) -> bool:
        return abs(self.w) <= tol

    def close(self, other: "Quaternion", tol: float = 1e-12) -> bool:
        return bool(np.max(np.abs(self.array() - other.array())) <= tol)


ONE = Quaternion(1.0)
I = Quaternion(0.0, 1.0)
J = Quaternion(0.0, 0.0, 1.0)
K = Quaternion(0.0, 0.0, 0.0, 1.0)
