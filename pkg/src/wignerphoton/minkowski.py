"""Four-vector algebra in Minkowski space with signature (+, -, -, -).

Natural units (c = 1) throughout. Four-vectors are plain immutable tuples so
they convert to numpy arrays with ``np.asarray``; Lorentz matrices are 4x4
real ndarrays acting on column vectors ``(t, x, y, z)``.
"""

import math
from typing import NamedTuple

import numpy as np

from .errors import DegenerateMomentum

METRIC = np.diag([1.0, -1.0, -1.0, -1.0])
METRIC.setflags(write=False)

NULL_TOL = 1e-10


class FourVector(NamedTuple):
    t: float
    x: float
    y: float
    z: float

    @property
    def spatial(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z], dtype=float)

    def scaled(self, factor: float) -> "FourVector":
        return FourVector(*(factor * np.asarray(self, dtype=float)))

    @classmethod
    def null(cls, direction, frequency: float = 1.0) -> "FourVector":
        """Null vector ``frequency * (1, n)`` for a unit direction ``n``."""
        n = np.asarray(direction, dtype=float)
        return cls(float(frequency), *(float(frequency) * n))


class UnitDirection(NamedTuple):
    n1: float
    n2: float
    n3: float

    @property
    def n_plus(self) -> complex:
        return complex(self.n1, self.n2)

    @property
    def n_minus(self) -> complex:
        return complex(self.n1, -self.n2)

    @property
    def one_plus_n3(self) -> float:
        """``1 + n3`` without cancellation near ``n3 = -1``."""
        if self.n3 >= 0.0:
            return 1.0 + self.n3
        return (self.n1**2 + self.n2**2) / (1.0 - self.n3)

    @classmethod
    def from_vector(cls, v) -> "UnitDirection":
        x, y, z = np.asarray(v, dtype=float).tolist()
        norm = math.sqrt(x * x + y * y + z * z)
        if not math.isfinite(norm) or norm == 0.0:
            raise DegenerateMomentum("cannot normalize a zero vector")
        return cls(x / norm, y / norm, z / norm)


STANDARD_MOMENTUM = FourVector(1.0, 0.0, 0.0, 1.0)


def as_four_vector(k) -> FourVector:
    arr = np.asarray(k, dtype=float)
    if arr.shape != (4,):
        raise ValueError(f"expected 4 components, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("four-vector components must be finite")
    return FourVector(*arr)


def minkowski_dot(u, v) -> float:
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    return float(u[0] * v[0] - u[1:] @ v[1:])


def is_null(k, tol: float = NULL_TOL) -> bool:
    """True for a forward null vector, with tolerance relative to ``t**2``."""
    k = np.asarray(k, dtype=float)
    return bool(k[0] > 0 and abs(minkowski_dot(k, k)) <= tol * k[0] ** 2)


def apply_lorentz(L, k) -> FourVector:
    return FourVector(*(np.asarray(L, dtype=float) @ np.asarray(k, dtype=float)))


def verify_lorentz(L, tol: float = 1e-10) -> bool:
    """Check that ``L`` is a proper orthochronous Lorentz matrix."""
    L = np.asarray(L, dtype=float)
    if L.shape != (4, 4) or not np.all(np.isfinite(L)):
        return False
    if not np.allclose(L.T @ METRIC @ L, METRIC, rtol=0.0, atol=tol):
        return False
    if L[0, 0] < 1.0 - tol:
        return False
    return abs(np.linalg.det(L) - 1.0) <= tol


def direction_of(k) -> UnitDirection:
    k = np.asarray(k, dtype=float)
    try:
        return UnitDirection.from_vector(k[1:])
    except DegenerateMomentum:
        raise DegenerateMomentum("momentum has zero spatial part") from None


def rotation_matrix(axis, angle: float) -> np.ndarray:
    """4x4 matrix rotating spatial vectors counterclockwise about ``axis``.

    This is the active convention. The spinor :func:`make_rotation` of the
    same angle corresponds to ``rotation_matrix(axis, -angle)``.
    """
    n = np.asarray(axis, dtype=float)
    n = n / np.linalg.norm(n)
    K = np.array([[0.0, -n[2], n[1]], [n[2], 0.0, -n[0]], [-n[1], n[0], 0.0]])
    R = np.eye(3) + np.sin(angle) * K + (1.0 - np.cos(angle)) * (K @ K)
    L = np.eye(4)
    L[1:, 1:] = R
    return L


def boost_matrix(velocity) -> np.ndarray:
    """Coordinates seen by an observer moving with ``velocity`` (|v| < 1).

    ``t' = gamma (t - v.x)``, so a photon along +v is redshifted.
    """
    v = np.asarray(velocity, dtype=float)
    speed = np.linalg.norm(v)
    if speed == 0.0:
        return np.eye(4)
    gamma = 1.0 / np.sqrt(1.0 - speed**2)
    L = np.empty((4, 4))
    L[0, 0] = gamma
    L[0, 1:] = L[1:, 0] = -gamma * v
    L[1:, 1:] = np.eye(3) + (gamma - 1.0) * np.outer(v, v) / speed**2
    return L
