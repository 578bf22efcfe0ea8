"""Linearly polarized photon states and reduced helicity density matrices.

Helicity basis ordering is ``(+1, -1)`` everywhere. A linearly polarized
state with polarization angle ``phi`` has helicity amplitudes
``exp(i lambda phi) / sqrt(2)`` times a common spectral profile ``g(|k|)``
along a fixed direction ``n``, so its reduced density matrix is

    rho(phi) = 1/2 [[1, exp(2i phi)], [exp(-2i phi), 1]]

whatever the profile. Entropies are in nats.
"""

from dataclasses import dataclass, field

import numpy as np
from scipy.special import entr

from .errors import BadPhase, NotNull, ZeroState
from .little_group import (
    POLE_EPS,
    _check_pole,
    abc_coefficients,
    transform_null_momentum,
    wigner_decompose,
)
from .minkowski import NULL_TOL, FourVector, UnitDirection, direction_of, is_null

HELICITIES = (1, -1)
RULES = ("simpson", "trapezoid")


def quadrature_weights(x, rule: str = "simpson") -> np.ndarray:
    """Weights ``w`` with ``w @ f(x)`` approximating the integral of ``f``.

    ``simpson`` is the composite rule over consecutive interval pairs (valid
    on non-uniform grids); with an even number of points the last interval
    falls back to the trapezoid rule.
    """
    x = np.asarray(x, dtype=float)
    if rule not in RULES:
        raise ValueError(f"unknown quadrature rule {rule!r}")
    w = np.zeros_like(x)
    h = np.diff(x)
    if rule == "trapezoid" or x.size < 3:
        w[:-1] += 0.5 * h
        w[1:] += 0.5 * h
        return w
    n_pairs = (x.size - 1) // 2
    h0, h1 = h[0 : 2 * n_pairs : 2], h[1 : 2 * n_pairs : 2]
    span = h0 + h1
    w[0 : 2 * n_pairs : 2] += span / 6.0 * (2.0 - h1 / h0)
    w[1 : 2 * n_pairs : 2] += span**3 / (6.0 * h0 * h1)
    w[2 : 2 * n_pairs + 1 : 2] += span / 6.0 * (2.0 - h0 / h1)
    if x.size % 2 == 0:
        w[-2] += 0.5 * h[-1]
        w[-1] += 0.5 * h[-1]
    return w


@dataclass(frozen=True, eq=False)
class SpectralProfile:
    """Sampled complex profile ``g`` on a strictly increasing grid of ``|k| > 0``."""

    x: np.ndarray
    amplitude: np.ndarray
    rule: str = "simpson"
    weights: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        x = np.array(self.x, dtype=float)
        amp = np.array(self.amplitude, dtype=complex)
        if x.ndim != 1 or x.size < 2 or amp.shape != x.shape:
            raise ValueError("profile needs matching 1-D grids of at least 2 samples")
        if not (np.all(np.isfinite(x)) and np.all(np.isfinite(amp))):
            raise ValueError("profile samples must be finite")
        if x[0] <= 0.0 or np.any(np.diff(x) <= 0.0):
            raise ValueError("profile grid must be positive and strictly increasing")
        w = quadrature_weights(x, self.rule)
        if np.any(w <= 0.0):
            raise ValueError(
                "grid too irregular for simpson weights; use rule='trapezoid'"
            )
        for arr in (x, amp, w):
            arr.setflags(write=False)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "amplitude", amp)
        object.__setattr__(self, "weights", w)

    @classmethod
    def from_function(cls, func, x, rule: str = "simpson") -> "SpectralProfile":
        x = np.asarray(x, dtype=float)
        return cls(x, func(x), rule)

    def integrate(self, values) -> complex:
        return self.weights @ np.asarray(values)

    def norm(self) -> float:
        """Integral of ``2 x |g(x)|^2``."""
        return float(self.integrate(2.0 * self.x * np.abs(self.amplitude) ** 2))

    def normalized(self) -> "SpectralProfile":
        norm = self.norm()
        if not norm > 0.0:
            raise ZeroState("profile has zero norm")
        return SpectralProfile(self.x, self.amplitude / np.sqrt(norm), self.rule)

    def rescaled(self, a: float) -> "SpectralProfile":
        """``g'(x) = (2/a) g(2x/a)``, sampled on the image grid ``(a/2) x``."""
        return SpectralProfile(0.5 * a * self.x, (2.0 / a) * self.amplitude, self.rule)


def gaussian_profile(center: float, width: float, x) -> SpectralProfile:
    return SpectralProfile.from_function(
        lambda u: np.exp(-0.5 * ((u - center) / width) ** 2), x
    ).normalized()


def box_profile(low: float, high: float, x) -> SpectralProfile:
    return SpectralProfile.from_function(
        lambda u: ((u >= low) & (u <= high)).astype(float), x
    ).normalized()


def two_peak_profile(centers, width: float, x, relative_phase: float = 0.0) -> SpectralProfile:
    c1, c2 = centers
    return SpectralProfile.from_function(
        lambda u: np.exp(-0.5 * ((u - c1) / width) ** 2)
        + np.exp(1j * relative_phase) * np.exp(-0.5 * ((u - c2) / width) ** 2),
        x,
    ).normalized()


@dataclass(frozen=True, eq=False)
class PolarizedState:
    """Linearly polarized photon along ``direction`` with angle ``pol_angle``.

    ``pol_angle`` is stored modulo pi; the profile must satisfy
    ``profile.norm() == 1`` to within 1e-8 (use :meth:`create` to normalize).
    """

    direction: UnitDirection
    pol_angle: float
    profile: SpectralProfile

    def __post_init__(self):
        n = np.asarray(self.direction, dtype=float)
        if n.shape != (3,) or abs(np.linalg.norm(n) - 1.0) > 1e-9:
            raise ValueError("direction must be a unit 3-vector")
        phi = float(np.mod(self.pol_angle, np.pi))
        if phi >= np.pi:
            phi = 0.0
        if abs(self.profile.norm() - 1.0) > 1e-8:
            raise ValueError(f"profile norm {self.profile.norm():.12g} is not 1")
        object.__setattr__(self, "direction", UnitDirection(*n))
        object.__setattr__(self, "pol_angle", phi)

    @classmethod
    def create(cls, direction, pol_angle: float, profile: SpectralProfile) -> "PolarizedState":
        return cls(UnitDirection.from_vector(direction), pol_angle, profile.normalized())


@dataclass(frozen=True, eq=False)
class HelicityAmplitudeField:
    """Helicity amplitudes ``f_lambda(k)`` on a shared grid of null momenta.

    ``amplitudes[0]`` is helicity +1, ``amplitudes[1]`` helicity -1;
    ``weights`` are positive measure weights, one per momentum.
    """

    momenta: np.ndarray
    amplitudes: np.ndarray
    weights: np.ndarray

    def __post_init__(self):
        k = np.array(self.momenta, dtype=float).reshape(-1, 4)
        f = np.array(self.amplitudes, dtype=complex).reshape(2, -1)
        w = np.array(self.weights, dtype=float).reshape(-1)
        if not (k.shape[0] == f.shape[1] == w.shape[0]):
            raise ValueError("momenta, amplitudes and weights disagree in length")
        if np.any(w <= 0.0) or not np.all(np.isfinite(w)):
            raise ValueError("measure weights must be positive")
        square = k[:, 0] ** 2 - np.sum(k[:, 1:] ** 2, axis=1)
        bad = ~((k[:, 0] > 0) & (np.abs(square) <= NULL_TOL * k[:, 0] ** 2))
        if np.any(bad):
            row = tuple(k[np.argmax(bad)].tolist())
            raise NotNull(f"momentum {row} is not a forward null vector")
        object.__setattr__(self, "momenta", k)
        object.__setattr__(self, "amplitudes", f)
        object.__setattr__(self, "weights", w)


def _linear_amplitudes(phi: float) -> np.ndarray:
    return np.array([np.exp(1j * lam * phi) for lam in HELICITIES]) / np.sqrt(2.0)


def monochromatic_state(k, phi: float) -> HelicityAmplitudeField:
    """Single-momentum field for ``|k, phi>``, with unit weight."""
    if not is_null(k, NULL_TOL):
        raise NotNull(f"momentum {tuple(np.asarray(k, float).tolist())} is not null")
    return HelicityAmplitudeField(
        np.asarray(k, dtype=float)[None, :], _linear_amplitudes(phi)[:, None], [1.0]
    )


def state_field(state: PolarizedState) -> HelicityAmplitudeField:
    """Sample a polarized state on its profile grid.

    The weights carry the radial measure ``2 |k| d|k|`` used for profile
    normalization; the direction is fixed, so no angular integral appears.
    """
    x = state.profile.x
    n = np.asarray(state.direction)
    momenta = x[:, None] * np.concatenate(([1.0], n))[None, :]
    amplitudes = _linear_amplitudes(state.pol_angle)[:, None] * state.profile.amplitude
    return HelicityAmplitudeField(momenta, amplitudes, 2.0 * x * state.profile.weights)


def transform_field(A, f: HelicityAmplitudeField) -> HelicityAmplitudeField:
    """Apply ``U(Lambda(A))`` sample by sample.

    Each momentum moves to ``Lambda k`` and its helicity-lambda amplitude
    picks up ``exp(i lambda psi(A, k))``. The measure is invariant, so the
    weights are unchanged.
    """
    momenta = np.empty_like(f.momenta)
    phases = np.empty(len(f.weights), dtype=complex)
    for i, k in enumerate(f.momenta):
        momenta[i] = transform_null_momentum(A, k)
        phases[i] = wigner_decompose(A, k).phase
    amplitudes = f.amplitudes * np.vstack([phases, phases.conj()])
    return HelicityAmplitudeField(momenta, amplitudes, f.weights)


def transform_state(A, state: PolarizedState, pole_eps: float = POLE_EPS) -> PolarizedState:
    """Lorentz image ``|g', phi + psi, n'>`` of a linearly polarized state."""
    n = state.direction
    _check_pole(n, pole_eps)
    k = FourVector.null(n)
    a = abc_coefficients(A, n).a
    phase = wigner_decompose(A, k, pole_eps=pole_eps).phase
    n_new = direction_of(transform_null_momentum(A, k))
    return PolarizedState(
        n_new, state.pol_angle + float(np.angle(phase)), state.profile.rescaled(a)
    )


def reduced_density(f: HelicityAmplitudeField) -> np.ndarray:
    """``rho[s, l] = sum_i w_i f_s(k_i) conj(f_l(k_i))``, normalized to unit trace."""
    F = f.amplitudes
    rho = (F * f.weights) @ F.conj().T
    total = float(np.trace(rho).real)
    if not (np.isfinite(total) and total > 0.0):
        raise ZeroState("field has zero norm")
    rho = rho / total
    return 0.5 * (rho + rho.conj().T)


def linear_polarization_density(phi: float) -> np.ndarray:
    off = np.exp(2j * phi)
    return 0.5 * np.array([[1.0, off], [off.conjugate(), 1.0]])


def transform_density(rho, half_phase: complex, tol: float = 1e-10) -> np.ndarray:
    """Conjugate by ``diag(exp(i psi), exp(-i psi))``, ``exp(i psi) = half_phase**2``."""
    if abs(abs(half_phase) - 1.0) > tol:
        raise BadPhase(f"|half_phase| = {abs(half_phase):.12g}, expected 1")
    phase = complex(half_phase) ** 2
    D = np.diag([phase, phase.conjugate()])
    return D @ np.asarray(rho, dtype=complex) @ D.conj().T


def is_density_matrix(rho, tol: float = 1e-10) -> bool:
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (2, 2) or np.max(np.abs(rho - rho.conj().T)) > tol:
        return False
    if abs(np.trace(rho) - 1.0) > tol:
        return False
    eig = np.linalg.eigvalsh(0.5 * (rho + rho.conj().T))
    return bool(np.all(eig >= -tol) and np.all(eig <= 1.0 + tol))


def von_neumann_entropy(rho) -> float:
    """``-tr(rho ln rho)`` in nats, with ``0 ln 0 = 0``."""
    rho = np.asarray(rho, dtype=complex)
    eig = np.clip(np.linalg.eigvalsh(0.5 * (rho + rho.conj().T)), 0.0, 1.0)
    return float(np.sum(entr(eig)))
