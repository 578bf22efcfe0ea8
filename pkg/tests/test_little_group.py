import numpy as np
import pytest

from wignerphoton.errors import NotNull, ShapeViolation, SouthPoleSingularity
from wignerphoton.little_group import (
    abc_coefficients,
    closed_form_little_group,
    standard_boost,
    transform_null_momentum,
    wigner_decompose,
    wigner_decompose_rotated_gauge,
    wigner_matrix,
    wigner_phase_of_direction,
)
from wignerphoton.minkowski import FourVector, UnitDirection, apply_lorentz
from wignerphoton.sampling import (
    random_boost,
    random_direction,
    random_rotation,
    random_sl2c,
    random_valid_pair,
)
from wignerphoton.spinor_cover import (
    compose,
    hermitian_from_four_vector,
    lorentz_of_spinor,
    make_boost,
    make_rotation,
    rapidity,
    spinor_act,
)

K_TILDE = np.array([[2, 0], [0, 0]])


def test_standard_boost_examples():
    np.testing.assert_array_equal(standard_boost((1, 0, 0, 1)), np.eye(2))
    np.testing.assert_allclose(
        standard_boost((2, 0, 0, 2)), np.diag([np.sqrt(2), 1 / np.sqrt(2)]), atol=1e-15
    )
    A = standard_boost((1, 1, 0, 0))
    np.testing.assert_allclose(spinor_act(A, K_TILDE), [[1, 1], [1, 1]], atol=1e-13)


def test_standard_boost_reconstructs_momentum(rng):
    for _ in range(200):
        k = FourVector.null(random_direction(rng), 10 ** rng.uniform(-3, 3))
        A = standard_boost(k)
        assert abs(np.linalg.det(A) - 1) < 1e-12
        m = hermitian_from_four_vector(k)
        np.testing.assert_allclose(spinor_act(A, K_TILDE), m, atol=1e-12 * k.t)


def test_standard_boost_errors():
    with pytest.raises(NotNull):
        standard_boost((1, 0, 0, 0.5))
    with pytest.raises(SouthPoleSingularity):
        standard_boost((1, 0, 0, -1))


def test_abc_identity(rng):
    for _ in range(20):
        n = UnitDirection(*random_direction(rng))
        a, b, c = abc_coefficients(np.eye(2), n)
        assert a == pytest.approx(2, abs=1e-15)
        assert b == pytest.approx(1 + n.n3, abs=1e-15)
        assert c == pytest.approx(n.n_plus, abs=1e-15)


def test_abc_z_boost_along_z():
    v = 0.6
    a, b, c = abc_coefficients(make_boost((0, 0, v)), (0, 0, 1))
    assert a == pytest.approx(2 * np.sqrt((1 - v) / (1 + v)), rel=1e-14)
    assert b == pytest.approx(a, rel=1e-14)
    assert c == 0


def test_abc_general_boost_closed_forms(rng):
    """Boost-specific a, b, c expressions in terms of xi, e and n."""
    for _ in range(200):
        velocity, B = random_boost(rng)
        speed = np.linalg.norm(velocity)
        if speed < 1e-6:
            continue
        e = velocity / speed
        xi = rapidity(speed)
        n = random_direction(rng)
        en = e @ n
        e_plus, n_plus = complex(e[0], e[1]), complex(n[0], n[1])
        a, b, c = abc_coefficients(B, n)
        assert a == pytest.approx(2 * (np.cosh(xi) + en * np.sinh(xi)), rel=1e-12)
        b_expected = np.cosh(xi) + n[2] + (e[2] + en) * np.sinh(xi) + e[2] * en * (np.cosh(xi) - 1)
        assert b == pytest.approx(b_expected, rel=1e-10, abs=1e-12)
        c_expected = n_plus + (np.sinh(xi) + en * (np.cosh(xi) - 1)) * e_plus
        assert abs(c - c_expected) <= 1e-10 * max(1, abs(c_expected))


def test_collinear_boost_a():
    v = 0.8
    n = np.array([0.0, 0.6, 0.8])
    xi = rapidity(v)
    a = abc_coefficients(make_boost(v * n), n).a
    assert a == pytest.approx(2 * (np.cosh(xi) + np.sinh(xi)), rel=1e-13)


def test_transform_null_momentum_examples():
    k = FourVector(3, 0, 1.8, 2.4)
    np.testing.assert_allclose(transform_null_momentum(np.eye(2), k), k, atol=1e-15)
    v = 0.3
    d = np.sqrt((1 - v) / (1 + v))
    np.testing.assert_allclose(
        transform_null_momentum(make_boost((0, 0, v)), (1, 0, 0, 1)), (d, 0, 0, d), atol=1e-15
    )
    chi = 1.2
    out = transform_null_momentum(make_rotation((0, 0, 1), chi), (2, 2, 0, 0))
    # coordinate rotation: the vector appears turned by -chi
    np.testing.assert_allclose(out, (2, 2 * np.cos(chi), -2 * np.sin(chi), 0), atol=1e-15)
    with pytest.raises(NotNull):
        transform_null_momentum(np.eye(2), (1, 0, 0, 0))


def test_transform_null_momentum_matches_matrix(rng):
    for _ in range(300):
        A, k = random_valid_pair(rng)
        closed = transform_null_momentum(A, k)
        matrix = apply_lorentz(lorentz_of_spinor(A), k)
        np.testing.assert_allclose(closed, matrix, rtol=0, atol=1e-11 * matrix.t)


def test_decompose_identity(rng):
    for _ in range(20):
        k = FourVector.null(random_direction(rng), 10 ** rng.uniform(-2, 2))
        e = wigner_decompose(np.eye(2), k)
        assert abs(e.half_phase - 1) < 1e-14
        assert abs(e.translation) * k.t < 1e-13
        assert min(e.psi, 2 * np.pi - e.psi) < 1e-13


def test_rotation_about_momentum(rng):
    for _ in range(100):
        n = random_direction(rng)
        chi = rng.uniform(0, 2 * np.pi)
        e = wigner_decompose(make_rotation(n, chi), FourVector.null(n, 5.0))
        assert abs(e.phase - np.exp(1j * chi)) < 1e-12
        assert abs(e.translation) < 1e-12


def test_collinear_boost_trivial(rng):
    for _ in range(100):
        n = random_direction(rng)
        e = wigner_decompose(make_boost(rng.uniform(-0.99, 0.99) * n), FourVector.null(n, 2.0))
        assert abs(e.half_phase - 1) < 1e-12 and abs(e.translation) < 1e-12


def test_z_boost_translation_formula():
    v, k0 = 0.6, 2.0
    n = np.array([0.3, 0.4, np.sqrt(0.75)])
    e = wigner_decompose(make_boost((0, 0, v)), FourVector.null(n, k0))
    expected = complex(n[0], -n[1]) / (k0 * (1 / v - n[2]))
    assert abs(e.half_phase - 1) < 1e-14
    assert abs(e.translation - expected) < 1e-14


def test_rotation_phase_formula(rng):
    for _ in range(100):
        (al, be), _ = random_rotation(rng)[2]
        U = random_rotation(rng)[2]
        (al, be), _ = U
        A, k = random_valid_pair(rng, A=U)
        n = UnitDirection(*(np.asarray(k[1:]) / k.t))
        p = 1 + n.n3
        expected = (al * p + be * n.n_plus) / (al.conjugate() * p + be.conjugate() * n.n_minus)
        e = closed_form_little_group(A, k)
        assert abs(e.phase - expected) < 1e-10
        assert abs(e.translation) < 1e-10


def test_closed_form_equals_decomposition(rng):
    for _ in range(500):
        A, k = random_valid_pair(rng)
        d, c = wigner_decompose(A, k), closed_form_little_group(A, k)
        assert abs(d.half_phase - c.half_phase) < 1e-10
        assert abs(d.translation - c.translation) < 1e-10 * max(1, abs(d.translation))


def test_shape(rng):
    for _ in range(300):
        S = wigner_matrix(*random_valid_pair(rng))
        assert abs(S[1, 0]) < 1e-10
        assert abs(abs(S[0, 0]) - 1) < 1e-10
        assert abs(S[1, 1] - S[0, 0].conjugate()) < 1e-10


def test_cocycle(rng):
    for _ in range(300):
        A1, k = random_valid_pair(rng)
        k1 = transform_null_momentum(A1, k)
        A2, _ = random_valid_pair(rng)
        k2 = transform_null_momentum(A2, k1)
        if min(1 + k1.z / k1.t, 1 + k2.z / k2.t) < 1e-6:
            continue
        lhs = wigner_decompose(compose(A2, A1), k).matrix()
        rhs = wigner_decompose(A2, k1).matrix() @ wigner_decompose(A1, k).matrix()
        assert np.abs(lhs - rhs).max() <= 1e-10 * max(1, np.abs(rhs).max())


@pytest.mark.parametrize("alpha", [1e-6, 1e-3, 1.0, 1e3, 1e6])
def test_frequency_scaling(rng, alpha):
    for _ in range(100):
        A, k = random_valid_pair(rng)
        base = wigner_decompose(A, k)
        scaled = wigner_decompose(A, k.scaled(alpha))
        assert abs(scaled.half_phase - base.half_phase) < 1e-10
        assert abs(alpha * scaled.translation - base.translation) <= 1e-10 * max(
            1, abs(base.translation)
        )


def test_phase_of_direction():
    chi = 0.9
    n = np.array([0.0, 0.6, 0.8])
    assert abs(wigner_phase_of_direction(make_rotation(n, chi), n) - np.exp(1j * chi)) < 1e-13
    for m in ([1, 0, 0], [0.48, 0.6, -0.64]):
        phase = wigner_phase_of_direction(make_rotation((0, 0, 1), chi), m)
        assert abs(phase - np.exp(1j * chi)) < 1e-13


def test_south_pole_rejected():
    with pytest.raises(SouthPoleSingularity):
        wigner_decompose(np.eye(2), (1, 0, 0, -1))
    with pytest.raises(SouthPoleSingularity):
        closed_form_little_group(np.eye(2), (1, 0, 0, -1))
    flip = make_rotation((1, 0, 0), np.pi)  # sends +z to -z
    with pytest.raises(SouthPoleSingularity):
        wigner_decompose(flip, (1, 0, 0, 1))
    with pytest.raises(SouthPoleSingularity):
        closed_form_little_group(flip, (1, 0, 0, 1))


def test_not_null_rejected():
    with pytest.raises(NotNull):
        wigner_decompose(np.eye(2), (1, 0.2, 0, 0.5))
    with pytest.raises(NotNull):
        closed_form_little_group(np.eye(2), (-1, 0, 0, -1))


def test_shape_violation_on_inconsistent_input(monkeypatch):
    import wignerphoton.little_group as lg

    monkeypatch.setattr(lg, "_direction_rotation", lambda n: np.array([[1, 0.5], [0, 1]]))
    with pytest.raises(ShapeViolation):
        lg.wigner_decompose(make_boost((0.5, 0, 0)), (1, 0, 0.6, 0.8))


def test_near_pole_stress(rng):
    for _ in range(200):
        eps = 10 ** rng.uniform(-9, -6)
        phi = rng.uniform(0, 2 * np.pi)
        n3 = -1 + eps
        r = np.sqrt(1 - n3**2)
        k = FourVector.null((r * np.cos(phi), r * np.sin(phi), n3), 1.0)
        A = make_rotation(random_direction(rng), rng.uniform(0, 0.5))
        image = transform_null_momentum(A, k)
        if 1 + image.z / image.t < 1e-6:
            continue
        d, c = wigner_decompose(A, k), closed_form_little_group(A, k)
        assert abs(d.half_phase - c.half_phase) < 1e-7
        assert abs(d.translation - c.translation) < 1e-7 * max(1, abs(d.translation))


def test_rotated_gauge_at_south_pole():
    chi = 0.7
    e = wigner_decompose_rotated_gauge(make_rotation((0, 0, 1), chi), (1, 0, 0, -1))
    # about the momentum -z this is a rotation by -chi
    assert abs(e.phase - np.exp(-1j * chi)) < 1e-13
    assert abs(e.translation) < 1e-13
