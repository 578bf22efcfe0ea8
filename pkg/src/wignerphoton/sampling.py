"""Seeded random draws for property checks."""

import numpy as np

from .little_group import transform_null_momentum
from .minkowski import FourVector
from .photon_states import box_profile, gaussian_profile, two_peak_profile
from .spinor_cover import make_boost, make_rotation

POLE_MARGIN = 1e-6
PROFILE_KINDS = ("gaussian", "box", "two-peak")


def random_sl2c(rng: np.random.Generator) -> np.ndarray:
    """Complex Gaussian entries rescaled by ``sqrt(det)`` to unit determinant."""
    while True:
        M = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        det = np.linalg.det(M)
        if abs(det) > 1e-12:
            return M / np.sqrt(det)


def random_direction(rng: np.random.Generator, pole_margin: float = POLE_MARGIN) -> np.ndarray:
    """Uniform on the sphere, excluding a cap of ``1 + n3 < pole_margin``."""
    while True:
        v = rng.normal(size=3)
        norm = np.linalg.norm(v)
        if norm > 1e-9:
            n = v / norm
            if 1.0 + n[2] >= pole_margin:
                return n


def random_frequency(rng: np.random.Generator, low: float = 1e-3, high: float = 1e3) -> float:
    return float(np.exp(rng.uniform(np.log(low), np.log(high))))


def random_null(rng: np.random.Generator, pole_margin: float = POLE_MARGIN) -> FourVector:
    return FourVector.null(random_direction(rng, pole_margin), random_frequency(rng))


def random_rotation(rng: np.random.Generator):
    """``(axis, angle, matrix)`` with angle uniform in ``[0, 2 pi)``."""
    axis = random_direction(rng, pole_margin=0.0)
    angle = float(rng.uniform(0.0, 2.0 * np.pi))
    return axis, angle, make_rotation(axis, angle)


def random_boost(rng: np.random.Generator, max_speed: float = 0.99):
    """``(velocity, matrix)`` with uniform direction and speed in ``[0, max_speed]``."""
    velocity = random_direction(rng, pole_margin=0.0) * rng.uniform(0.0, max_speed)
    return velocity, make_boost(velocity)


def random_valid_pair(rng: np.random.Generator, pole_margin: float = POLE_MARGIN, A=None):
    """Draw ``(A, k)`` such that neither ``k`` nor ``Lambda(A) k`` is near the south pole."""
    while True:
        A_draw = random_sl2c(rng) if A is None else A
        k = random_null(rng, pole_margin)
        image = transform_null_momentum(A_draw, k)
        if 1.0 + image.z / image.t >= pole_margin:
            return A_draw, k


def random_profile(rng: np.random.Generator, kind: str, n_points: int = 2001):
    """Normalized profile of the given kind on ``[0.05, 10]``."""
    x = np.linspace(0.05, 10.0, n_points)
    if kind == "gaussian":
        return gaussian_profile(rng.uniform(2.0, 6.0), rng.uniform(0.3, 1.0), x)
    if kind == "box":
        low = rng.uniform(1.0, 4.0)
        return box_profile(low, low + rng.uniform(1.0, 4.0), x)
    if kind == "two-peak":
        c1 = rng.uniform(1.5, 4.0)
        return two_peak_profile(
            (c1, c1 + rng.uniform(1.5, 4.0)), rng.uniform(0.2, 0.6), x,
            relative_phase=rng.uniform(0.0, 2.0 * np.pi),
        )
    raise ValueError(f"unknown profile kind {kind!r}")
