"""Command-line front end.

Every subcommand writes one JSON document with the fields ``schema_version``,
``command``, ``transform``, ``results`` and ``diagnostics``.

Exit status: 0 success, 1 verification or consistency failure, 2 usage or
parse error, 3 domain error (NotNull, SouthPoleSingularity,
SuperluminalVelocity, ...).
"""

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .errors import PipelineSyntaxError, WignerError
from .little_group import (
    abc_coefficients,
    closed_form_little_group,
    transform_null_momentum,
    wigner_decompose,
)
from .minkowski import NULL_TOL, FourVector, apply_lorentz, direction_of
from .photon_states import (
    PolarizedState,
    SpectralProfile,
    gaussian_profile,
    monochromatic_state,
    reduced_density,
    state_field,
    transform_density,
    transform_field,
    transform_state,
    von_neumann_entropy,
)
from .pipeline import parse_pipeline
from .spinor_cover import lorentz_of_spinor
from .verify import FAULTS, run_verify

SCHEMA_VERSION = "1"
CONSISTENCY_TOL = 1e-10
PHASE_NOTE = (
    "psi is 2*arg(half_phase) wrapped to [0, 2pi); photon observables depend "
    "on exp(i psi) only"
)

EXIT_OK, EXIT_FAILURE, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3

_EPILOG = """\
pipeline language:
  steps separated by ';'   rot AX AY AZ ANGLE | boost VX VY VZ |
                           sl2c RE IM RE IM RE IM RE IM  (alpha beta gamma delta)
  Steps are listed in application order: the first step acts first, so the
  composed SL(2,C) matrix is step_n ... step_2 step_1. Angles in radians,
  velocities as fractions of c. Boosts use tanh(xi) = -|v| (frame velocity).

exit status: 0 ok, 1 verification/consistency failure, 2 usage/parse error,
3 domain error.  Vectors starting with '-' need '=': --direction=-1,0,0
"""


# --- serialization ---------------------------------------------------------


def _c(z) -> list:
    z = complex(z)
    return [z.real, z.imag]


def _matrix(A) -> list:
    return [[_c(z) for z in row] for row in np.asarray(A)]


def _vec(v) -> list:
    return [float(x) for x in v]


def read_profile(path, rule: str = "simpson") -> SpectralProfile:
    """Read ``x re im`` lines (``#`` comments allowed) into a profile."""
    data = np.loadtxt(path, comments="#", ndmin=2)
    if data.shape[1] != 3:
        raise ValueError(f"{path}: expected 3 columns (x re im), got {data.shape[1]}")
    return SpectralProfile(data[:, 0], data[:, 1] + 1j * data[:, 2], rule)


def write_profile(path, profile: SpectralProfile):
    data = np.column_stack([profile.x, profile.amplitude.real, profile.amplitude.imag])
    np.savetxt(path, data, fmt="%.17g", header="x re im")


def _profile_dict(profile: SpectralProfile) -> dict:
    return {
        "rule": profile.rule,
        "x": _vec(profile.x),
        "re": _vec(profile.amplitude.real),
        "im": _vec(profile.amplitude.imag),
        "norm": profile.norm(),
    }


def _error_dict(exc: WignerError) -> dict:
    return {"code": exc.code, "message": str(exc)}


def _document(command, spec, results, diagnostics) -> dict:
    transform = None
    if spec is not None:
        A = spec.compose()
        transform = {
            "pipeline": spec.text,
            "steps": [step.describe() for step in spec.steps],
            "sl2c": _matrix(A),
            "lorentz": [_vec(row) for row in lorentz_of_spinor(A)],
        }
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "transform": transform,
        "results": results,
        "diagnostics": diagnostics,
    }


# --- drivers ---------------------------------------------------------------


def _map(func, items, parallel: bool) -> list:
    if parallel and len(items) > 1:
        with ThreadPoolExecutor() as pool:
            return list(pool.map(func, items))
    return [func(item) for item in items]


def _element_dict(e) -> dict:
    return {
        "half_phase": _c(e.half_phase),
        "psi": e.psi,
        "phase": _c(e.phase),
        "translation": _c(e.translation),
    }


def run_wigner(spec, momenta, tol: float = NULL_TOL, parallel: bool = False) -> dict:
    """Little-group element of the composed pipeline at each momentum.

    Both the matrix decomposition and the closed form are reported, with
    their deviation (translation compared relative to max(1, |z|)). A failing
    momentum carries its error code and does not affect the others.
    """
    A = spec.compose()

    def one(indexed):
        index, k = indexed
        entry = {"index": index, "momentum": _vec(k)}
        try:
            dec = wigner_decompose(A, k, tol)
            closed = closed_form_little_group(A, k, tol)
            image = transform_null_momentum(A, k, tol)
        except WignerError as exc:
            entry.update(status="error", error=_error_dict(exc))
            return entry
        deviation = max(
            abs(dec.half_phase - closed.half_phase),
            abs(dec.translation - closed.translation) / max(1.0, abs(dec.translation)),
        )
        entry.update(
            status="ok",
            transformed_momentum=_vec(image),
            **_element_dict(dec),
            closed_form=_element_dict(closed),
            deviation=deviation,
        )
        return entry

    results = _map(one, list(enumerate(momenta)), parallel)
    return _document("wigner", spec, results, _batch_diagnostics(results, tol))


def _batch_diagnostics(results, tol) -> dict:
    deviations = [r["deviation"] for r in results if r["status"] == "ok"]
    return {
        "null_tolerance": tol,
        "consistency_tolerance": CONSISTENCY_TOL,
        "max_deviation": max(deviations, default=0.0),
        "failures": sum(r["status"] != "ok" for r in results),
        "note": PHASE_NOTE,
    }


def run_momentum(spec, momenta, tol: float = NULL_TOL, parallel: bool = False) -> dict:
    """Transformed momenta from the closed forms and from the 4x4 matrix."""
    A = spec.compose()
    L = lorentz_of_spinor(A)

    def one(indexed):
        index, k = indexed
        entry = {"index": index, "momentum": _vec(k)}
        try:
            closed = transform_null_momentum(A, k, tol)
            coeffs = abc_coefficients(A, direction_of(k))
        except WignerError as exc:
            entry.update(status="error", error=_error_dict(exc))
            return entry
        matrix = apply_lorentz(L, k)
        entry.update(
            status="ok",
            transformed_momentum=_vec(closed),
            matrix_action=_vec(matrix),
            abc={"a": coeffs.a, "b": coeffs.b, "c": _c(coeffs.c)},
            deviation=float(np.max(np.abs(np.subtract(closed, matrix)))) / matrix.t,
        )
        return entry

    results = _map(one, list(enumerate(momenta)), parallel)
    return _document("momentum", spec, results, _batch_diagnostics(results, tol))


def run_state_transform(spec, state: PolarizedState) -> dict:
    A = spec.compose()
    out = transform_state(A, state)
    h = wigner_decompose(A, FourVector.null(state.direction)).half_phase
    rho_in = reduced_density(state_field(state))
    rho_out = reduced_density(state_field(out))
    rho_pred = transform_density(rho_in, h)
    result = {
        "input": {
            "direction": _vec(state.direction),
            "pol_angle": state.pol_angle,
            "profile": _profile_dict(state.profile),
            "density": _matrix(rho_in),
            "entropy": von_neumann_entropy(rho_in),
        },
        "output": {
            "direction": _vec(out.direction),
            "pol_angle": out.pol_angle,
            "profile": _profile_dict(out.profile),
            "density": _matrix(rho_out),
            "entropy": von_neumann_entropy(rho_out),
        },
        "a": abc_coefficients(A, state.direction).a,
        "half_phase": _c(h),
        "psi": float(np.mod(2.0 * np.angle(h), 2.0 * np.pi)),
    }
    deviation = float(np.max(np.abs(rho_out - rho_pred)))
    diagnostics = {
        "consistency_tolerance": 1e-9,
        "density_covariance_deviation": deviation,
        "norm_change": abs(out.profile.norm() - state.profile.norm()),
        "note": PHASE_NOTE,
    }
    return _document("state", spec, [result], diagnostics)


def run_density(spec, momenta, phi: float, tol: float = NULL_TOL) -> dict:
    """Monochromatic linear polarization at each momentum, before and after."""
    A = spec.compose()
    results = []
    for index, k in enumerate(momenta):
        entry = {"index": index, "momentum": _vec(k), "phi": phi}
        try:
            field = monochromatic_state(k, phi)
            h = wigner_decompose(A, k, tol).half_phase
            rho = reduced_density(field)
            rho_pred = transform_density(rho, h)
            rho_out = reduced_density(transform_field(A, field))
        except WignerError as exc:
            entry.update(status="error", error=_error_dict(exc))
            results.append(entry)
            continue
        entry.update(
            status="ok",
            density=_matrix(rho),
            transformed_density=_matrix(rho_out),
            entropy=von_neumann_entropy(rho),
            transformed_entropy=von_neumann_entropy(rho_out),
            deviation=float(np.max(np.abs(rho_out - rho_pred))),
        )
        results.append(entry)
    return _document("density", spec, results, _batch_diagnostics(results, tol))


# --- argument parsing ------------------------------------------------------


def _floats(count):
    def parse(text):
        try:
            values = [float(part) for part in text.split(",")]
        except ValueError:
            raise argparse.ArgumentTypeError(f"{text!r} is not a list of numbers")
        if len(values) != count or not all(np.isfinite(values)):
            raise argparse.ArgumentTypeError(f"expected {count} finite comma-separated numbers")
        return values

    return parse


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _positive_float(text):
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wignerphoton",
        description="Massless Wigner little group and photon polarization transforms.",
        epilog=_EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", help="write JSON here instead of standard output")
    common.add_argument(
        "--tolerance", type=_positive_float, default=NULL_TOL,
        help="relative tolerance for null-momentum checks (default %(default)g)",
    )

    transform = argparse.ArgumentParser(add_help=False)
    source = transform.add_mutually_exclusive_group()
    source.add_argument("--pipeline", default="", help="pipeline text (default: identity)")
    source.add_argument("--pipeline-file", help="read pipeline text from a file")

    momenta = argparse.ArgumentParser(add_help=False)
    momenta.add_argument(
        "--momentum", action="append", type=_floats(4), default=[], metavar="T,X,Y,Z",
        help="null four-momentum; repeatable",
    )
    momenta.add_argument("--direction", type=_floats(3), metavar="NX,NY,NZ",
                         help="direction of an extra null momentum (normalized)")
    momenta.add_argument("--freq", type=_positive_float, default=1.0,
                         help="frequency k0 used with --direction (default 1)")
    momenta.add_argument("--parallel", action="store_true",
                         help="evaluate momenta concurrently; output order is unchanged")

    parents = [common, transform]
    sub.add_parser(
        "wigner", parents=parents + [momenta], epilog=_EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
        help="little-group element (half phase, psi, translation) per momentum",
    )
    sub.add_parser(
        "momentum", parents=parents + [momenta],
        help="transformed null momenta, closed form vs 4x4 matrix",
    )
    density = sub.add_parser(
        "density", parents=parents + [momenta],
        help="reduced helicity density of monochromatic linear polarization",
    )
    density.add_argument("--phi", type=float, default=0.0, help="polarization angle (rad)")

    state = sub.add_parser(
        "state", parents=parents, help="transform a linearly polarized wave packet",
    )
    state.add_argument("--direction", type=_floats(3), default=[0.0, 0.0, 1.0],
                       metavar="NX,NY,NZ", help="propagation direction (default 0,0,1)")
    state.add_argument("--phi", type=float, default=0.0, help="polarization angle (rad)")
    state.add_argument(
        "--profile",
        help="spectral profile file, lines 'x re im' with strictly increasing x "
        "(default: Gaussian centred on --freq)",
    )
    state.add_argument("--freq", type=_positive_float, default=1.0)
    state.add_argument("--profile-out", help="also write the transformed profile here")

    verify = sub.add_parser("verify", parents=[common], help="run the seeded property suites")
    verify.add_argument("--seed", type=int, default=42)
    verify.add_argument("--trials", type=_positive_int, default=1000)
    verify.add_argument("--inject-fault", choices=FAULTS,
                        help="deliberately corrupt the closed forms (mutation smoke test)")
    return parser


def _read_spec(args):
    if args.pipeline_file:
        with open(args.pipeline_file, "rb") as handle:
            return parse_pipeline(handle.read())
    return parse_pipeline(args.pipeline)


def _collect_momenta(args) -> list:
    momenta = [FourVector(*k) for k in args.momentum]
    if args.direction is not None:
        n = np.asarray(args.direction)
        if np.linalg.norm(n) == 0.0:
            raise argparse.ArgumentTypeError("--direction must be nonzero")
        momenta.append(FourVector.null(n / np.linalg.norm(n), args.freq))
    if not momenta:
        raise argparse.ArgumentTypeError("give at least one --momentum or --direction")
    return momenta


def _emit(document, path):
    text = json.dumps(document, indent=2, allow_nan=True)
    if path:
        with open(path, "w") as handle:
            handle.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def _dispatch(args) -> int:
    if args.command == "verify":
        report = run_verify(args.seed, args.trials, fault=args.inject_fault)
        diagnostics = {"ok": report.ok, "fault": args.inject_fault}
        _emit(_document("verify", None, report.as_dict()["suites"], diagnostics), args.output)
        for s in report.suites:
            status = "PASS" if s.passed else "FAIL"
            print(f"{status} {s.name}: max deviation {s.max_deviation:.3g} "
                  f"(tol {s.tolerance:g})", file=sys.stderr)
        return EXIT_OK if report.ok else EXIT_FAILURE

    spec = _read_spec(args)
    if args.command == "state":
        if args.profile:
            profile = read_profile(args.profile)
        else:
            x = np.linspace(0.05, 4.0, 2001) * args.freq
            profile = gaussian_profile(args.freq, 0.1 * args.freq, x)
        state = PolarizedState.create(args.direction, args.phi, profile)
        document = run_state_transform(spec, state)
        if args.profile_out:
            out = transform_state(spec.compose(), state)
            write_profile(args.profile_out, out.profile)
        _emit(document, args.output)
        deviation = document["diagnostics"]["density_covariance_deviation"]
        return EXIT_OK if deviation <= 1e-9 else EXIT_FAILURE

    momenta = _collect_momenta(args)
    if args.command == "wigner":
        document = run_wigner(spec, momenta, args.tolerance, args.parallel)
    elif args.command == "momentum":
        document = run_momentum(spec, momenta, args.tolerance, args.parallel)
    else:
        document = run_density(spec, momenta, args.phi, args.tolerance)
    _emit(document, args.output)
    if document["diagnostics"]["failures"]:
        return EXIT_DOMAIN
    if document["diagnostics"]["max_deviation"] > CONSISTENCY_TOL:
        return EXIT_FAILURE
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with status 2 on usage errors
    try:
        return _dispatch(args)
    except PipelineSyntaxError as exc:
        print(f"pipeline error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except WignerError as exc:
        print(f"{exc.code}: {exc}", file=sys.stderr)
        return exc.exit_code
    except (argparse.ArgumentTypeError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
