"""Wigner little group of a null momentum.

The standard momentum is ``(1, 0, 0, 1)``. For a null ``k`` with direction
``n`` the standard boost ``A_k`` (a z-boost followed by the rotation taking
the z-axis to ``n``) carries it to ``k``. The little-group element of a
transformation ``A`` at ``k`` is

    S(A, k) = A_{k'}^{-1} A A_k,      k' = Lambda(A) k,

which always has the form ``[[exp(i psi/2), z], [0, exp(-i psi/2)]]``. Two
routes are provided: :func:`wigner_decompose` multiplies the matrices out,
:func:`closed_form_little_group` evaluates the closed expressions in the
coefficients ``a, b, c`` of :func:`abc_coefficients`. They must agree.

The standard boost is singular for ``n = -z`` (``1 + n3 -> 0``); such inputs
raise :class:`SouthPoleSingularity`, for ``k`` as well as for ``k'``.
"""

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import (
    BadAxis,
    DegenerateBranch,
    NotNull,
    ShapeViolation,
    SouthPoleSingularity,
)
from .minkowski import NULL_TOL, FourVector, UnitDirection, direction_of, is_null
from .spinor_cover import (
    as_sl2c,
    four_vector_from_hermitian,
    hermitian_from_four_vector,
    inverse,
    make_rotation,
    spinor_act,
)

POLE_EPS = 1e-12
SHAPE_TOL = 1e-9


@dataclass(frozen=True)
class LittleGroupElement:
    """E(2) element ``[[half_phase, translation], [0, conj(half_phase)]]``."""

    half_phase: complex
    translation: complex

    @property
    def phase(self) -> complex:
        """``exp(i psi)``; the only part photon states are sensitive to."""
        return self.half_phase**2

    @property
    def psi(self) -> float:
        """Wigner angle wrapped to ``[0, 2 pi)``."""
        return float(np.mod(2.0 * np.angle(self.half_phase), 2.0 * np.pi))

    def matrix(self) -> np.ndarray:
        h = self.half_phase
        return np.array([[h, self.translation], [0.0, np.conj(h)]], dtype=complex)


class ABCCoefficients(NamedTuple):
    a: float
    b: float
    c: complex


def _null_parts(k, tol):
    k = np.asarray(k, dtype=float)
    if k.shape != (4,) or not np.all(np.isfinite(k)):
        raise NotNull("momentum must be four finite numbers")
    if not is_null(k, tol):
        raise NotNull(f"momentum {tuple(k.tolist())} is not a forward null vector")
    return float(k[0]), direction_of(k)


def _check_pole(n: UnitDirection, eps: float, which: str = "k"):
    if n.one_plus_n3 <= eps:
        raise SouthPoleSingularity(
            f"direction of {which} is at the south pole (1 + n3 = {n.one_plus_n3:.3g})"
        )


def _as_direction(n) -> UnitDirection:
    n = np.asarray(n, dtype=float)
    if n.shape != (3,) or abs(np.linalg.norm(n) - 1.0) > 1e-9:
        raise BadAxis("direction must be a unit 3-vector")
    return UnitDirection(*n)


def standard_boost(k, tol: float = NULL_TOL, pole_eps: float = POLE_EPS) -> np.ndarray:
    """Unimodular ``A_k`` with ``A_k diag(2, 0) A_k^dagger`` equal to the matrix of ``k``."""
    k0, n = _null_parts(k, tol)
    _check_pole(n, pole_eps)
    p = n.one_plus_n3
    norm = 1.0 / np.sqrt(2.0 * k0 * p)
    return norm * np.array([[k0 * p, -n.n_minus], [k0 * n.n_plus, p]])


def abc_coefficients(A, n) -> ABCCoefficients:
    """Coefficients fixing the image of the direction ``n`` under ``A``.

    For ``k = k0 (1, n)`` the transformed momentum has ``k0' = k0 a / 2``,
    ``n3' = 2 b / a - 1`` and ``n1' + i n2' = 2 c / a``.
    """
    (al, be), (ga, de) = as_sl2c(A)
    n = _as_direction(n)
    p, m = n.one_plus_n3, 1.0 - n.n3
    n_p, n_m = n.n_plus, n.n_minus
    a = (
        (abs(al) ** 2 + abs(ga) ** 2) * p
        + (abs(be) ** 2 + abs(de) ** 2) * m
        + (al * be.conjugate() + ga * de.conjugate()) * n_m
        + (al.conjugate() * be + ga.conjugate() * de) * n_p
    )
    b = (
        abs(al) ** 2 * p
        + abs(be) ** 2 * m
        + al * be.conjugate() * n_m
        + al.conjugate() * be * n_p
    )
    c = (
        al.conjugate() * ga * p
        + be.conjugate() * de * m
        + be.conjugate() * ga * n_m
        + al.conjugate() * de * n_p
    )
    return ABCCoefficients(float(a.real), float(b.real), complex(c))


def transform_null_momentum(A, k, tol: float = NULL_TOL) -> FourVector:
    """Image of a null ``k`` under ``Lambda(A)``, via :func:`abc_coefficients`."""
    k0, n = _null_parts(k, tol)
    a, b, c = abc_coefficients(A, n)
    k0_new = 0.5 * k0 * a
    n3_new = 2.0 * b / a - 1.0
    n_plus_new = 2.0 * c / a
    return FourVector(
        k0_new, k0_new * n_plus_new.real, k0_new * n_plus_new.imag, k0_new * n3_new
    )


def _direction_rotation(n: UnitDirection) -> np.ndarray:
    """SU(2) factor of the standard boost, turning the z-axis to ``n``."""
    p = n.one_plus_n3
    return np.array([[p, -n.n_minus], [n.n_plus, p]]) / np.sqrt(2.0 * p)


def _decompose_core(A, k, tol, pole_eps):
    """Frequency-free core ``U_{n'}^{-1} A U_n`` plus ``k0`` and ``k0' / k0``.

    With ``A_k = U_n B(k0)`` the little-group matrix is
    ``B(k0')^{-1} core B(k0)``. The core's lower-left entry vanishes to
    roundoff at every frequency, whereas in the assembled product it carries
    an error growing like ``sqrt(k0 k0')``.
    """
    A = as_sl2c(A)
    k0, n = _null_parts(k, tol)
    _check_pole(n, pole_eps)
    image = four_vector_from_hermitian(
        spinor_act(A, hermitian_from_four_vector(k)), tol=1e-9
    )
    n_img = direction_of(image)
    _check_pole(n_img, pole_eps, which="the transformed momentum")
    core = inverse(_direction_rotation(n_img)) @ A @ _direction_rotation(n)
    return core, k0, image.t / k0


def wigner_matrix(A, k, tol: float = NULL_TOL, pole_eps: float = POLE_EPS) -> np.ndarray:
    """The full 2x2 product ``A_{k'}^{-1} A A_k`` with no shape checks.

    ``k'`` is obtained from the matrix action, independently of the
    ``a, b, c`` closed forms.
    """
    core, k0, ratio = _decompose_core(A, k, tol, pole_eps)
    scale = np.array([[1.0 / np.sqrt(ratio), 1.0 / (k0 * np.sqrt(ratio))],
                      [k0 * np.sqrt(ratio), np.sqrt(ratio)]])
    return core * scale


def wigner_decompose(
    A, k, tol: float = NULL_TOL, pole_eps: float = POLE_EPS
) -> LittleGroupElement:
    core, k0, ratio = _decompose_core(A, k, tol, pole_eps)
    root = np.sqrt(ratio)
    s11, s22 = core[0, 0] / root, core[1, 1] * root
    if (
        abs(core[1, 0]) > SHAPE_TOL * max(1.0, float(np.max(np.abs(core))))
        or abs(abs(s11) - 1.0) > SHAPE_TOL
        or abs(s22 - np.conj(s11)) > SHAPE_TOL
    ):
        raise ShapeViolation(f"little-group core has the wrong shape:\n{core}")
    return LittleGroupElement(complex(s11), complex(core[0, 1] / (k0 * root)))


def closed_form_little_group(
    A, k, tol: float = NULL_TOL, pole_eps: float = POLE_EPS
) -> LittleGroupElement:
    (al, be), (ga, de) = as_sl2c(A)
    k0, n = _null_parts(k, tol)
    _check_pole(n, pole_eps)
    a, b, c = abc_coefficients(A, n)
    if 2.0 * b / a <= pole_eps:
        raise SouthPoleSingularity("the transformed momentum is at the south pole")
    if b <= 0.0:
        raise DegenerateBranch(f"b = {b:.3g} leaves no real square root")
    p, n_p, n_m = n.one_plus_n3, n.n_plus, n.n_minus
    root = np.sqrt(b * p)
    c_star = c.conjugate()
    half_phase = ((al * p + be * n_p) * b + (ga * p + de * n_p) * c_star) / (a * root)
    translation = ((-al * n_m + be * p) * b + (-ga * n_m + de * p) * c_star) / (
        k0 * a * root
    )
    return LittleGroupElement(complex(half_phase), complex(translation))


def wigner_phase_of_direction(A, n, pole_eps: float = POLE_EPS) -> complex:
    """``exp(i psi)`` for photons moving along ``n``; independent of frequency."""
    n = _as_direction(n)
    return wigner_decompose(A, FourVector.null(n), pole_eps=pole_eps).phase


# Rotation by pi about x maps the south pole to the north pole.
_GAUGE_ROTATION = make_rotation((1.0, 0.0, 0.0), np.pi)


def wigner_decompose_rotated_gauge(A, k, tol: float = NULL_TOL) -> LittleGroupElement:
    """Little-group element computed after conjugating everything by R_x(pi).

    Usable near ``n = -z`` where the standard gauge is undefined. The result
    is gauge dependent and is NOT comparable with :func:`wigner_decompose`
    elementwise.
    """
    R = _GAUGE_ROTATION
    A_rot = R @ as_sl2c(A) @ inverse(R)
    k_rot = four_vector_from_hermitian(spinor_act(R, hermitian_from_four_vector(k)))
    return wigner_decompose(A_rot, k_rot, tol)
