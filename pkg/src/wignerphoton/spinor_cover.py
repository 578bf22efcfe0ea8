"""SL(2,C) double cover of the proper orthochronous Lorentz group.

A four-vector ``k`` is identified with the Hermitian matrix
``k^mu sigma_mu``; a unimodular ``A`` acts by ``m -> A m A^dagger``.

Sign conventions follow the frame-transformation (passive) reading:

* ``make_rotation(axis, chi) = cos(chi/2) + i sin(chi/2) n.sigma``, which
  turns spatial vectors by ``-chi`` about ``axis``
  (see :func:`wignerphoton.minkowski.rotation_matrix`).
* ``make_boost(v) = exp(xi/2 e.sigma)`` with ``tanh(xi) = -|v|``, i.e. the
  coordinates used by an observer moving with velocity ``v``. Many texts use
  the opposite sign for ``xi``; here ``make_boost((0, 0, v))`` has upper-left
  entry ``((1 - v) / (1 + v)) ** 0.25``.
"""

import numpy as np

from .errors import BadAxis, BadDeterminant, NotHermitian, SuperluminalVelocity
from .minkowski import FourVector

SIGMA = np.array(
    [
        [[1, 0], [0, 1]],
        [[0, 1], [1, 0]],
        [[0, -1j], [1j, 0]],
        [[1, 0], [0, -1]],
    ],
    dtype=complex,
)
SIGMA.setflags(write=False)

IDENTITY = np.eye(2, dtype=complex)
IDENTITY.setflags(write=False)

DET_TOL = 1e-9


def as_sl2c(A, tol: float = DET_TOL) -> np.ndarray:
    """Coerce to a 2x2 complex array and check ``det A = 1``."""
    A = np.asarray(A, dtype=complex)
    if A.shape != (2, 2):
        raise BadDeterminant(f"expected a 2x2 matrix, got shape {A.shape}")
    if not np.all(np.isfinite(A)):
        raise BadDeterminant("matrix entries must be finite")
    det = A[0, 0] * A[1, 1] - A[0, 1] * A[1, 0]
    if abs(det - 1.0) > tol:
        raise BadDeterminant(f"det A = {det:.6g}, expected 1")
    return A


def inverse(A) -> np.ndarray:
    """Inverse of a unimodular 2x2 matrix (adjugate, no division)."""
    A = np.asarray(A, dtype=complex)
    return np.array([[A[1, 1], -A[0, 1]], [-A[1, 0], A[0, 0]]])


def compose(A, B) -> np.ndarray:
    return np.asarray(A, dtype=complex) @ np.asarray(B, dtype=complex)


def hermitian_from_four_vector(k) -> np.ndarray:
    t, x, y, z = np.asarray(k, dtype=float)
    return np.array([[t + z, x - 1j * y], [x + 1j * y, t - z]])


def four_vector_from_hermitian(m, tol: float = 1e-12) -> FourVector:
    """Read ``k^mu = tr(sigma_mu m) / 2`` back off a Hermitian matrix.

    ``tol`` bounds ``|m - m^dagger|`` relative to the largest entry.
    """
    (m00, m01), (m10, m11) = np.asarray(m, dtype=complex).tolist()
    scale = max(1.0, abs(m00), abs(m01), abs(m10), abs(m11))
    skew = max(abs(m00.imag), abs(m11.imag), abs(m01 - m10.conjugate()))
    if not skew <= tol * scale:
        raise NotHermitian("matrix is not Hermitian")
    return FourVector(
        0.5 * (m00 + m11).real,
        0.5 * (m01 + m10).real,
        0.5 * (m10 - m01).imag,
        0.5 * (m00 - m11).real,
    )


def spinor_act(A, m) -> np.ndarray:
    A = np.asarray(A, dtype=complex)
    return A @ np.asarray(m, dtype=complex) @ A.conj().T


def lorentz_of_spinor(A) -> np.ndarray:
    """The 4x4 Lorentz matrix covered by ``A``.

    Column ``nu`` is the image of the basis vector ``e_nu``, whose Hermitian
    matrix is ``sigma_nu``. ``A`` and ``-A`` give bit-identical results.
    """
    A = np.asarray(A, dtype=complex)
    L = np.empty((4, 4))
    for nu in range(4):
        L[:, nu] = four_vector_from_hermitian(spinor_act(A, SIGMA[nu]), tol=1e-9)
    return L


def make_rotation(axis, angle: float, tol: float = 1e-9) -> np.ndarray:
    """SU(2) element ``cos(angle/2) + i sin(angle/2) axis.sigma``.

    The angle is reduced modulo 4*pi; ``angle + 2*pi`` flips the overall sign.
    """
    n = np.asarray(axis, dtype=float)
    if n.shape != (3,) or not np.all(np.isfinite(n)):
        raise BadAxis("axis must be three finite numbers")
    if abs(np.linalg.norm(n) - 1.0) > tol:
        raise BadAxis(f"axis is not a unit vector (|n| = {np.linalg.norm(n):.6g})")
    half = 0.5 * np.mod(angle, 4.0 * np.pi)
    c, s = np.cos(half), np.sin(half)
    n_plus = complex(n[0], n[1])
    return np.array(
        [
            [c + 1j * n[2] * s, 1j * n_plus.conjugate() * s],
            [1j * n_plus * s, c - 1j * n[2] * s],
        ]
    )


def rapidity(speed: float) -> float:
    """Rapidity ``xi`` with ``tanh(xi) = -speed``."""
    return float(-np.arctanh(speed))


def make_boost(velocity) -> np.ndarray:
    """Hermitian SL(2,C) element ``exp(xi/2 e.sigma)`` for a frame velocity."""
    v = np.asarray(velocity, dtype=float)
    if v.shape != (3,) or not np.all(np.isfinite(v)):
        raise SuperluminalVelocity("velocity must be three finite numbers")
    speed = float(np.linalg.norm(v))
    if speed >= 1.0:
        raise SuperluminalVelocity(f"|v| = {speed:.6g} is not below 1")
    if speed == 0.0:
        return IDENTITY.copy()
    e = v / speed
    xi = rapidity(speed)
    ch, sh = np.cosh(0.5 * xi), np.sinh(0.5 * xi)
    e_plus = complex(e[0], e[1])
    return np.array(
        [
            [ch + e[2] * sh, e_plus.conjugate() * sh],
            [e_plus * sh, ch - e[2] * sh],
        ]
    )
