"""Seeded property suites behind the ``verify`` subcommand.

Each suite draws ``trials`` random cases and returns the largest deviation
it saw; the suite passes when that deviation is within its tolerance.
Deviations are absolute unless the suite name says otherwise.
"""

import contextlib
import time
from dataclasses import dataclass

import numpy as np

from . import little_group
from .little_group import (
    closed_form_little_group,
    transform_null_momentum,
    wigner_decompose,
    wigner_matrix,
)
from .minkowski import (
    FourVector,
    apply_lorentz,
    direction_of,
    minkowski_dot,
    verify_lorentz,
)
from .photon_states import (
    HelicityAmplitudeField,
    PolarizedState,
    is_density_matrix,
    reduced_density,
    state_field,
    transform_density,
    transform_state,
    von_neumann_entropy,
)
from .sampling import (
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
from .spinor_cover import (
    compose,
    four_vector_from_hermitian,
    hermitian_from_four_vector,
    lorentz_of_spinor,
    spinor_act,
)

# Photon-state suites resample whole profiles; they run on coarser grids and
# at most this many trials.
STATE_TRIALS_CAP = 200
STATE_GRID = 401

FAULTS = ("abc-sign",)


@dataclass
class SuiteResult:
    name: str
    tolerance: float
    max_deviation: float
    trials: int
    seconds: float
    error: str = ""

    @property
    def passed(self) -> bool:
        return not self.error and self.max_deviation <= self.tolerance


@dataclass
class VerifyReport:
    seed: int
    trials: int
    suites: list

    @property
    def ok(self) -> bool:
        return all(s.passed for s in self.suites)

    def as_dict(self) -> dict:
        return {
            "seed": self.seed,
            "trials": self.trials,
            "ok": self.ok,
            "suites": [
                {
                    "name": s.name,
                    "passed": s.passed,
                    "max_deviation": s.max_deviation,
                    "tolerance": s.tolerance,
                    "trials": s.trials,
                    "seconds": s.seconds,
                    "error": s.error,
                }
                for s in self.suites
            ],
        }


_SUITES = []


def suite(name, tolerance, state=False):
    def register(func):
        _SUITES.append((name, tolerance, state, func))
        return func

    return register


def _rel(x, y) -> float:
    return float(np.max(np.abs(np.asarray(x) - np.asarray(y))) / max(1.0, np.max(np.abs(y))))


# --- minkowski -------------------------------------------------------------


@suite("minkowski.dot_symmetric_bilinear", 1e-12)
def _dot(rng, trials):
    worst = 0.0
    for _ in range(trials):
        u, v, w = rng.normal(size=(3, 4))
        s, t = rng.normal(size=2)
        worst = max(
            worst,
            abs(minkowski_dot(u, v) - minkowski_dot(v, u)),
            abs(
                minkowski_dot(s * u + t * w, v)
                - s * minkowski_dot(u, v)
                - t * minkowski_dot(w, v)
            ),
        )
    return worst


@suite("minkowski.null_preserved (relative to t'^2)", 1e-10)
def _null(rng, trials):
    worst = 0.0
    for _ in range(trials):
        k = random_null(rng)
        image = apply_lorentz(lorentz_of_spinor(random_sl2c(rng)), k)
        if image.t <= 0:
            return np.inf
        worst = max(worst, abs(minkowski_dot(image, image)) / image.t**2)
    return worst


@suite("minkowski.parallelism", 1e-10)
def _parallel(rng, trials):
    worst = 0.0
    for _ in range(trials):
        L = lorentz_of_spinor(random_sl2c(rng))
        n = random_direction(rng)
        k1 = FourVector.null(n, random_frequency(rng))
        k2 = FourVector.null(n, random_frequency(rng))
        d1 = direction_of(apply_lorentz(L, k1))
        d2 = direction_of(apply_lorentz(L, k2))
        worst = max(worst, float(np.max(np.abs(np.subtract(d1, d2)))))
    return worst


# --- spinor_cover ----------------------------------------------------------


@suite("spinor.homomorphism (relative)", 1e-11)
def _homomorphism(rng, trials):
    worst = 0.0
    for _ in range(trials):
        A, B = random_sl2c(rng), random_sl2c(rng)
        product = lorentz_of_spinor(A) @ lorentz_of_spinor(B)
        worst = max(worst, _rel(lorentz_of_spinor(compose(A, B)), product))
    return worst


@suite("spinor.kernel", 0.0)
def _kernel(rng, trials):
    worst = 0.0
    for _ in range(trials):
        A = random_sl2c(rng)
        worst = max(worst, float(np.max(np.abs(lorentz_of_spinor(-A) - lorentz_of_spinor(A)))))
    return worst


@suite("spinor.cover_is_lorentz", 0.0)
def _cover_valid(rng, trials):
    failures = 0
    for _ in range(trials):
        L = lorentz_of_spinor(random_sl2c(rng))
        tol = 1e-12 * max(1.0, float(np.max(np.abs(L)))) ** 2
        failures += not verify_lorentz(L, tol)
    return float(failures)


@suite("spinor.rotation_unitary_boost_hermitian", 1e-12)
def _unitary(rng, trials):
    worst = 0.0
    eye = np.eye(2)
    for _ in range(trials):
        U = random_rotation(rng)[2]
        _, B = random_boost(rng)
        worst = max(
            worst,
            float(np.max(np.abs(U.conj().T @ U - eye))),
            float(np.max(np.abs(B - B.conj().T))),
            abs(np.linalg.det(U) - 1.0),
            abs(np.linalg.det(B) - 1.0),
        )
        if np.min(np.linalg.eigvalsh(B)) <= 0.0:
            return np.inf
    return worst


@suite("spinor.action_preserves_hermitian_det (relative)", 1e-12)
def _action(rng, trials):
    worst = 0.0
    for _ in range(trials):
        A = random_sl2c(rng)
        m = hermitian_from_four_vector(rng.normal(size=4))
        out = spinor_act(A, m)
        scale = max(1.0, float(np.max(np.abs(out)))) ** 2
        worst = max(
            worst,
            float(np.max(np.abs(out - out.conj().T))) / scale**0.5,
            abs(np.linalg.det(out) - np.linalg.det(m)) / scale,
        )
    return worst


@suite("spinor.round_trip", 1e-14)
def _round_trip(rng, trials):
    worst = 0.0
    for _ in range(trials):
        k = rng.normal(size=4)
        back = four_vector_from_hermitian(hermitian_from_four_vector(k))
        worst = max(worst, _rel(back, k))
    return worst


# --- little_group ----------------------------------------------------------


@suite("little_group.shape", 1e-10)
def _shape(rng, trials):
    worst = 0.0
    for _ in range(trials):
        S = wigner_matrix(*random_valid_pair(rng))
        worst = max(
            worst,
            abs(S[1, 0]),
            abs(abs(S[0, 0]) - 1.0),
            abs(S[1, 1] - np.conj(S[0, 0])),
        )
    return worst


@suite("little_group.closed_form_vs_decomposition (z relative)", 1e-10)
def _closed(rng, trials):
    worst = 0.0
    for _ in range(trials):
        A, k = random_valid_pair(rng)
        d, c = wigner_decompose(A, k), closed_form_little_group(A, k)
        worst = max(
            worst,
            abs(d.half_phase - c.half_phase),
            abs(d.translation - c.translation) / max(1.0, abs(d.translation)),
        )
    return worst


@suite("little_group.cocycle (relative)", 1e-10)
def _cocycle(rng, trials):
    worst = 0.0
    done = 0
    while done < trials:
        A1, k = random_valid_pair(rng)
        A2 = random_sl2c(rng)
        k1 = transform_null_momentum(A1, k)
        image = transform_null_momentum(A2, k1)
        if min(1.0 + k1.z / k1.t, 1.0 + image.z / image.t) < 1e-6:
            continue
        lhs = wigner_decompose(compose(A2, A1), k).matrix()
        rhs = wigner_decompose(A2, k1).matrix() @ wigner_decompose(A1, k).matrix()
        worst = max(worst, _rel(lhs, rhs))
        done += 1
    return worst


@suite("little_group.frequency_independence (z relative)", 1e-10)
def _frequency(rng, trials):
    worst = 0.0
    for _ in range(trials):
        A, k = random_valid_pair(rng)
        base = wigner_decompose(A, k)
        for alpha in (1e-6, 1e-3, 1.0, 1e3, 1e6):
            e = wigner_decompose(A, k.scaled(alpha))
            worst = max(
                worst,
                abs(e.half_phase - base.half_phase),
                abs(alpha * e.translation - base.translation)
                / max(1.0, abs(base.translation)),
            )
    return worst


@suite("little_group.rotation_translation_zero", 1e-10)
def _rotation_z(rng, trials):
    worst = 0.0
    for _ in range(trials):
        U = random_rotation(rng)[2]
        A, k = random_valid_pair(rng, A=U)
        e = closed_form_little_group(A, k)
        worst = max(worst, abs(e.translation) * k.t, abs(wigner_decompose(A, k).translation) * k.t)
    return worst


@suite("little_group.momentum_closed_form (relative)", 1e-11)
def _momentum(rng, trials):
    worst = 0.0
    for _ in range(trials):
        A = random_sl2c(rng)
        k = random_null(rng)
        closed = transform_null_momentum(A, k)
        matrix = apply_lorentz(lorentz_of_spinor(A), k)
        worst = max(worst, float(np.max(np.abs(np.subtract(closed, matrix)))) / matrix.t)
    return worst


# --- photon_states ---------------------------------------------------------


def _random_state(rng, kind):
    return PolarizedState(
        random_direction(rng, 1e-3), rng.uniform(0.0, np.pi),
        random_profile(rng, kind, STATE_GRID),
    )


def _state_pair(rng, kind):
    """A state and a transformation keeping its image away from the pole."""
    while True:
        s = _random_state(rng, kind)
        A = random_sl2c(rng)
        image = transform_null_momentum(A, FourVector.null(s.direction))
        if 1.0 + image.z / image.t > 1e-3:
            return A, s


@suite("photon.norm_preserved", 1e-8, state=True)
def _norm(rng, trials):
    worst = 0.0
    for i in range(trials):
        s = _random_state(rng, PROFILE_KINDS[i % 3])
        _, B = random_boost(rng, 0.9)
        A = compose(B, random_rotation(rng)[2])
        image = transform_null_momentum(A, FourVector.null(s.direction))
        if 1.0 + image.z / image.t < 1e-3:
            continue
        worst = max(worst, abs(transform_state(A, s).profile.norm() - s.profile.norm()))
    return worst


def _linear_densities(rng, trials):
    for i in range(trials):
        A, s = _state_pair(rng, PROFILE_KINDS[i % 3])
        for state in (s, transform_state(A, s)):
            yield reduced_density(state_field(state))


@suite("photon.purity", 1e-10, state=True)
def _purity(rng, trials):
    return max(
        float(np.max(np.abs(rho @ rho - rho))) for rho in _linear_densities(rng, trials)
    )


@suite("photon.pure_state_entropy", 1e-12, state=True)
def _pure_entropy(rng, trials):
    return max(von_neumann_entropy(rho) for rho in _linear_densities(rng, trials))


@suite("photon.entropy_invariance", 1e-12, state=True)
def _entropy(rng, trials):
    worst = 0.0
    for _ in range(trials):
        eig = rng.uniform(0.0, 1.0)
        U = random_rotation(rng)[2]
        rho = U @ np.diag([eig, 1.0 - eig]) @ U.conj().T
        h = np.exp(1j * rng.uniform(0.0, 4.0 * np.pi))
        worst = max(
            worst,
            abs(von_neumann_entropy(transform_density(rho, h)) - von_neumann_entropy(rho)),
        )
    return worst


@suite("photon.density_covariance", 1e-9, state=True)
def _covariance(rng, trials):
    worst = 0.0
    for i in range(trials):
        A, s = _state_pair(rng, PROFILE_KINDS[i % 3])
        h = wigner_decompose(A, FourVector.null(s.direction)).half_phase
        lhs = reduced_density(state_field(transform_state(A, s)))
        rhs = transform_density(reduced_density(state_field(s)), h)
        worst = max(worst, float(np.max(np.abs(lhs - rhs))))
    return worst


@suite("photon.density_valid", 0.0, state=True)
def _valid(rng, trials):
    failures = 0
    for i in range(trials):
        A, s = _state_pair(rng, PROFILE_KINDS[i % 3])
        failures += not is_density_matrix(reduced_density(state_field(transform_state(A, s))))
        amps = rng.normal(size=(2, 5)) + 1j * rng.normal(size=(2, 5))
        momenta = [random_null(rng) for _ in range(5)]
        field = HelicityAmplitudeField(momenta, amps, rng.uniform(0.1, 1.0, size=5))
        failures += not is_density_matrix(reduced_density(field))
    return float(failures)


@contextlib.contextmanager
def inject_fault(fault):
    """Mutation hook for smoke-testing the suites themselves."""
    if fault is None:
        yield
        return
    if fault not in FAULTS:
        raise ValueError(f"unknown fault {fault!r}; choose from {FAULTS}")
    original = little_group.abc_coefficients

    def flipped(A, n):
        a, b, c = original(A, n)
        return little_group.ABCCoefficients(a, b, -c)

    little_group.abc_coefficients = flipped
    try:
        yield
    finally:
        little_group.abc_coefficients = original


def run_verify(seed: int, trials: int, fault=None) -> VerifyReport:
    if trials < 1:
        raise ValueError("trials must be at least 1")
    results = []
    with inject_fault(fault):
        for index, (name, tol, state, func) in enumerate(_SUITES):
            rng = np.random.default_rng([seed, index])
            n = min(trials, STATE_TRIALS_CAP) if state else trials
            start = time.perf_counter()
            error = ""
            try:
                worst = float(func(rng, n))
            except Exception as exc:  # a crash is a failed suite, not an abort
                worst, error = float("inf"), f"{type(exc).__name__}: {exc}"
            results.append(
                SuiteResult(name, tol, worst, n, time.perf_counter() - start, error)
            )
    return VerifyReport(seed, trials, results)
