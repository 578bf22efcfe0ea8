"""Acceptance criteria 1-15, each at its stated tolerance.

Every test appends one PASS/FAIL line to the acceptance log (shown in the
terminal summary) before asserting. Translations ``z`` scale like ``1/k0`` and
are compared relative to ``max(1, |z|)`` where a criterion calls for it.
"""

import numpy as np
import pytest

from wignerphoton.cli import main
from wignerphoton.errors import SouthPoleSingularity
from wignerphoton.little_group import (
    abc_coefficients,
    closed_form_little_group,
    transform_null_momentum,
    wigner_decompose,
)
from wignerphoton.minkowski import FourVector, apply_lorentz, direction_of
from wignerphoton.photon_states import (
    PolarizedState,
    reduced_density,
    state_field,
    transform_density,
    transform_state,
    von_neumann_entropy,
)
from wignerphoton.sampling import (
    PROFILE_KINDS,
    random_boost,
    random_direction,
    random_frequency,
    random_null,
    random_profile,
    random_rotation,
    random_sl2c,
    random_valid_pair,
)
from wignerphoton.spinor_cover import lorentz_of_spinor, make_boost, make_rotation

SEED = 20240607


def check(log, number, title, worst, tol, detail=""):
    ok = bool(worst <= tol)
    line = f"[{'PASS' if ok else 'FAIL'}] AC{number:02d} {title}: max {worst:.3g} <= {tol:g}"
    log.append(line + (f" ({detail})" if detail else ""))
    print(line)
    assert ok, line


def rel(a, b):
    return abs(a - b) / max(1.0, abs(b))


@pytest.fixture
def rng():
    return np.random.default_rng(SEED)


def test_ac01_rotation_phase_law(rng, acceptance_log):
    worst = 0.0
    for _ in range(500):
        axis, chi, R = random_rotation(rng)
        k = FourVector.null(axis, random_frequency(rng))
        worst = max(worst, abs(wigner_decompose(R, k).phase - np.exp(1j * chi)))
    check(acceptance_log, 1, "rotation about n, k along n: |e^{i psi} - e^{i chi}|", worst, 1e-10)


def test_ac02_z_rotation_phase(rng, acceptance_log):
    worst = 0.0
    for _ in range(500):
        chi = rng.uniform(0, 2 * np.pi)
        k = FourVector.null(random_direction(rng, 1e-6), random_frequency(rng))
        phase = wigner_decompose(make_rotation((0, 0, 1), chi), k).phase
        worst = max(worst, abs(phase - np.exp(1j * chi)))
    check(acceptance_log, 2, "z rotation, any n: |e^{i psi} - e^{i chi}|", worst, 1e-10)


def test_ac03_rotation_translation_zero(rng, acceptance_log):
    worst = 0.0
    for _ in range(500):
        _, chi, R = random_rotation(rng)
        k = FourVector.null(random_direction(rng, 1e-6), random_frequency(rng))
        try:
            e = wigner_decompose(R, k)
        except SouthPoleSingularity:
            # rotation may send k to the south pole; draw the next sample
            continue
        worst = max(worst, abs(e.translation))
        e = wigner_decompose(make_rotation((0, 0, 1), chi), k)
        worst = max(worst, abs(e.translation))
    check(acceptance_log, 3, "rotations: |z|", worst, 1e-10)


def test_ac04_collinear_boost(rng, acceptance_log):
    worst = 0.0
    for _ in range(500):
        n = random_direction(rng)
        B = make_boost(rng.uniform(-0.99, 0.99) * n)
        e = wigner_decompose(B, FourVector.null(n, random_frequency(rng)))
        worst = max(worst, abs(e.phase - 1), abs(e.translation))
    check(acceptance_log, 4, "boost along n: |e^{i psi} - 1|, |z|", worst, 1e-10)


def test_ac05_z_boost_closed_form(rng, acceptance_log):
    worst_psi = worst_z = 0.0
    for _ in range(500):
        v = rng.uniform(-0.99, 0.99)
        n = random_direction(rng)
        k0 = random_frequency(rng)
        e = wigner_decompose(make_boost((0, 0, v)), FourVector.null(n, k0))
        expected = complex(n[0], -n[1]) / (k0 * (1 / v - n[2]))
        worst_psi = max(worst_psi, min(e.psi, 2 * np.pi - e.psi))
        worst_z = max(worst_z, abs(e.translation - expected) / abs(expected))
    check(acceptance_log, 5, "z boost: psi", worst_psi, 1e-10)
    check(acceptance_log, 5, "z boost: z vs n-/(k0(1/v - n3)), relative", worst_z, 1e-10)


def test_ac06_closed_form_equals_decomposition(rng, acceptance_log):
    worst = worst_abs = 0.0
    for _ in range(1000):
        A, k = random_valid_pair(rng)
        d, c = wigner_decompose(A, k), closed_form_little_group(A, k)
        worst = max(worst, abs(d.half_phase - c.half_phase), rel(c.translation, d.translation))
        worst_abs = max(worst_abs, abs(d.translation - c.translation))
    check(acceptance_log, 6, "closed form vs decomposition (z relative)", worst, 1e-10,
          f"absolute z gap {worst_abs:.3g}")


def test_ac07_cocycle(rng, acceptance_log):
    worst = 0.0
    for _ in range(1000):
        A1, k = random_valid_pair(rng)
        k1 = transform_null_momentum(A1, k)
        A2, _ = random_valid_pair(rng, A=None)
        try:
            lhs = wigner_decompose(A2 @ A1, k).matrix()
            rhs = wigner_decompose(A2, k1).matrix() @ wigner_decompose(A1, k).matrix()
        except SouthPoleSingularity:
            # A2 may send k1 to the south pole; that triple is outside the domain
            continue
        scale = np.maximum(1.0, np.abs(lhs))
        worst = max(worst, float(np.max(np.abs(lhs - rhs) / scale)))
    check(acceptance_log, 7, "cocycle S(A2 A1, k) = S(A2, k1) S(A1, k), entrywise", worst, 1e-10)


def test_ac08_frequency_independence(rng, acceptance_log):
    worst_h = worst_z = 0.0
    for _ in range(200):
        A, k = random_valid_pair(rng)
        k = FourVector(*np.asarray(k) / k.t)
        base = wigner_decompose(A, k)
        for alpha in (1e-6, 1e-3, 1.0, 1e3, 1e6):
            e = wigner_decompose(A, k.scaled(alpha))
            worst_h = max(worst_h, abs(e.half_phase - base.half_phase))
            worst_z = max(worst_z, rel(e.translation * alpha, base.translation))
    check(acceptance_log, 8, "half phase vs frequency", worst_h, 1e-10)
    check(acceptance_log, 8, "alpha z(A, alpha k) vs z(A, k), relative", worst_z, 1e-10)


def test_ac09_parallelism(rng, acceptance_log):
    worst = 0.0
    for _ in range(500):
        A = random_sl2c(rng)
        L = lorentz_of_spinor(A)
        n = random_direction(rng)
        k1 = FourVector.null(n, random_frequency(rng))
        k2 = FourVector.null(n, random_frequency(rng))
        d1 = np.asarray(direction_of(apply_lorentz(L, k1)))
        d2 = np.asarray(direction_of(apply_lorentz(L, k2)))
        worst = max(worst, float(np.max(np.abs(d1 - d2))))
    check(acceptance_log, 9, "images of parallel momenta are parallel", worst, 1e-10)


def test_ac10_momentum_closed_forms(rng, acceptance_log):
    worst = 0.0
    for _ in range(1000):
        A = random_sl2c(rng)
        k = random_null(rng)
        closed = transform_null_momentum(A, k)
        matrix = apply_lorentz(lorentz_of_spinor(A), k)
        a = abc_coefficients(A, direction_of(k)).a
        scale = matrix.t
        worst = max(
            worst,
            float(np.max(np.abs(np.subtract(closed, matrix)))) / scale,
            abs(0.5 * k.t * a - matrix.t) / scale,
        )
    check(acceptance_log, 10, "a,b,c momentum vs 4x4 action (relative to k0')", worst, 1e-11)


def _random_states(rng, count, n_points=2001):
    for i in range(count):
        kind = PROFILE_KINDS[i % len(PROFILE_KINDS)]
        profile = random_profile(rng, kind, n_points)
        yield kind, PolarizedState.create(random_direction(rng), rng.uniform(0, np.pi), profile)


def _state_pair(rng, count):
    pairs = []
    for kind, state in _random_states(rng, count):
        while True:
            A = random_sl2c(rng)
            try:
                pairs.append((kind, A, state, transform_state(A, state)))
                break
            except SouthPoleSingularity:
                continue
    return pairs


def test_ac11_density_covariance(rng, acceptance_log):
    worst = 0.0
    kinds = set()
    for kind, A, state, out in _state_pair(rng, 120):
        kinds.add(kind)
        h = wigner_decompose(A, FourVector.null(state.direction)).half_phase
        predicted = transform_density(reduced_density(state_field(state)), h)
        worst = max(worst, float(np.max(np.abs(reduced_density(state_field(out)) - predicted))))
    assert len(kinds) == 3
    check(acceptance_log, 11, "density covariance, 120 states, 3 profiles", worst, 1e-9)


def test_ac12_purity_and_entropy(rng, acceptance_log):
    worst_pure = worst_entropy = 0.0
    for _, _, state, out in _state_pair(rng, 60):
        for s in (state, out):
            rho = reduced_density(state_field(s))
            worst_pure = max(worst_pure, float(np.max(np.abs(rho @ rho - rho))))
            worst_entropy = max(worst_entropy, abs(von_neumann_entropy(rho)))
    check(acceptance_log, 12, "rho^2 = rho before and after", worst_pure, 1e-10)
    check(acceptance_log, 12, "entropy before and after", worst_entropy, 1e-12)


def test_ac13_profile_norm_invariance(rng, acceptance_log):
    worst = 0.0
    for kind in PROFILE_KINDS:
        for _ in range(20):
            state = PolarizedState.create(
                random_direction(rng), 0.0, random_profile(rng, kind, 2001)
            )
            _, B = random_boost(rng, max_speed=0.9)
            for boost in (B, make_boost(0.9 * np.asarray(state.direction)),
                          make_boost(-0.9 * np.asarray(state.direction))):
                try:
                    out = transform_state(boost, state)
                except SouthPoleSingularity:
                    continue
                worst = max(worst, abs(out.profile.norm() - state.profile.norm()))
    check(acceptance_log, 13, "profile norm under boosts |v| <= 0.9, 2001 points", worst, 1e-8)


def test_ac14_homomorphism_and_kernel(rng, acceptance_log):
    worst_hom = worst_ker = 0.0
    for _ in range(1000):
        A, B = random_sl2c(rng), random_sl2c(rng)
        LA = lorentz_of_spinor(A)
        worst_hom = max(
            worst_hom,
            float(np.max(np.abs(lorentz_of_spinor(A @ B) - LA @ lorentz_of_spinor(B)))),
        )
        worst_ker = max(worst_ker, float(np.max(np.abs(lorentz_of_spinor(-A) - LA))))
    check(acceptance_log, 14, "Lambda(AB) = Lambda(A) Lambda(B)", worst_hom, 1e-11)
    check(acceptance_log, 14, "Lambda(-A) = Lambda(A)", worst_ker, 1e-14)


def test_ac15_cli_contract(capsys, acceptance_log):
    cases = [
        ("verify --seed 42 --trials 1000", ["verify", "--seed", "42", "--trials", "1000"], 0),
        ("verify with injected a,b,c sign fault",
         ["verify", "--trials", "50", "--inject-fault", "abc-sign"], 1),
        ("truncated pipeline 'rot 0 0 1'",
         ["wigner", "--pipeline", "rot 0 0 1", "--momentum", "1,0,0,1"], 2),
        ("superluminal 'boost 0 0 1.5'",
         ["wigner", "--pipeline", "boost 0 0 1.5", "--momentum", "1,0,0,1"], 3),
    ]
    failures = 0
    for label, argv, expected in cases:
        code = main(argv)
        capsys.readouterr()
        ok = code == expected
        failures += not ok
        acceptance_log.append(
            f"[{'PASS' if ok else 'FAIL'}] AC15 {label}: exit {code} (expected {expected})"
        )
    assert failures == 0
