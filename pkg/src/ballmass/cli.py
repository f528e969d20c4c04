"""Command-line interface: evaluate, kernels, Christoffel, sweeps, verification.

Exit codes: 0 on success, 1 when a verification suite or convergence run
misses its tolerance, 2 on usage or parameter errors.  All numeric output
is printed with 17 significant digits.
"""

from __future__ import annotations

import argparse
import sys

from .asymptotics import (
    SweepConfig,
    geometric_schedule,
    run_sweep,
    sweep_error_envelope,
)
from .ball import BallParams, BallPoint, ball_kernel, ball_kernel_difference, \
    ball_kernel_modified, christoffel
from .errors import DomainError, NumericError, ParameterError
from .gegenbauer import chebyshev_eval, gegenbauer_eval, spherical_factor
from .harmonics import UnitDirection, harmonic_basis_eval
from .jacobi import JacobiParams, jacobi_eval, jacobi_eval_orthonormal
from .report import (
    figure_path_for,
    format_number,
    records_table,
    render_convergence_figure,
    write_records_csv,
)
from .uvarov import UvarovParams, uvarov_eval
from .verify import run_suites

__all__ = ["main", "run"]


def _parse_point(text: str, d: int) -> BallPoint:
    parts = [p for p in text.replace(";", ",").split(",") if p != ""]
    if len(parts) != d:
        raise ParameterError(f"expected {d} coordinates, got {len(parts)}: {text!r}")
    return BallPoint.from_cartesian([float(p) for p in parts])


def _ball_params(args) -> BallParams:
    return BallParams(args.d, args.mu, args.lam)


def _cmd_eval(args) -> int:
    family = args.family
    if family == "jacobi":
        p = JacobiParams(args.alpha, args.beta)
        fn = jacobi_eval_orthonormal if args.orthonormal else jacobi_eval
        value = fn(p, args.n, args.t)
    elif family == "uvarov":
        u = UvarovParams(JacobiParams(args.alpha, args.beta), args.mass)
        value = uvarov_eval(u, args.n, args.t)
    elif family == "gegenbauer":
        value = gegenbauer_eval(args.delta, args.n, args.t)
    elif family == "chebyshev":
        value = chebyshev_eval(args.n, args.t)
    elif family == "spherical-factor":
        value = spherical_factor(args.d, args.n, args.t)
    else:  # harmonic
        xi = UnitDirection.from_coords(
            [float(p) for p in args.xi.split(",")], normalize=True)
        value = harmonic_basis_eval(args.d, args.n, args.nu, xi)
    print(format_number(value))
    return 0


def _cmd_kernel(args) -> int:
    bp = _ball_params(args)
    x = _parse_point(args.x, bp.d)
    y = _parse_point(args.y, bp.d)
    fn = {"classical": ball_kernel,
          "modified": ball_kernel_modified,
          "difference": ball_kernel_difference}[args.which]
    print(format_number(fn(bp, args.n, x, y)))
    return 0


def _cmd_christoffel(args) -> int:
    bp = _ball_params(args)
    x = _parse_point(args.x, bp.d)
    print(format_number(christoffel(bp, args.n, x, modified=args.modified)))
    return 0


def _cmd_converge(args) -> int:
    bp = _ball_params(args)
    schedule = geometric_schedule(args.nmax, start=args.start)
    cfg = SweepConfig(params=bp, mode=args.mode, n_values=tuple(schedule),
                      r=1.0 if args.mode == "boundary" else args.r)
    records = run_sweep(cfg)
    if args.out:
        write_records_csv(records, args.out)
        if args.plot:
            render_convergence_figure(
                records, figure_path_for(args.out),
                title=f"{args.mode} sweep, d={bp.d}, mu={bp.mu}, lambda={bp.lam}")
    else:
        if args.plot:
            raise ParameterError("--plot requires --out to anchor the figure path")
        print(records_table(records))
    if not records:
        return 0
    final = records[-1]
    ok = final.rel_err < args.tol
    if ok and len(records) >= 2:
        # the error envelope must shrink between the last two schedule rows
        ok = (sweep_error_envelope(cfg, records[-1].n)
              < sweep_error_envelope(cfg, records[-2].n))
    if not ok:
        print(f"converge: tolerance {format_number(args.tol)} not met or error "
              f"not decreasing: final rel_err {format_number(final.rel_err)}",
              file=sys.stderr)
        return 1
    return 0


def _cmd_verify(args) -> int:
    results = run_suites(args.suite, args.tol)
    failed = 0
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        print(f"[{status}] {res.name}: max_err={format_number(res.error)} "
              f"tol={format_number(res.tol)}")
        failed += 0 if res.passed else 1
    if failed:
        print(f"verify: {failed} of {len(results)} checks failed", file=sys.stderr)
        return 1
    return 0


def _add_ball_flags(parser) -> None:
    parser.add_argument("--d", type=int, required=True, help="dimension (>= 2)")
    parser.add_argument("--mu", type=float, required=True, help="ball exponent (> -1)")
    parser.add_argument("--lambda", dest="lam", type=float, default=0.0,
                        help="sphere mass (>= 0)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ballmass",
        description="Orthogonal polynomials and Christoffel functions on the "
                    "unit ball with a mass on the boundary sphere.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate a univariate or harmonic building block")
    p_eval.add_argument("family", choices=["jacobi", "uvarov", "gegenbauer",
                                           "chebyshev", "spherical-factor", "harmonic"])
    p_eval.add_argument("--alpha", type=float, default=0.0)
    p_eval.add_argument("--beta", type=float, default=0.0)
    p_eval.add_argument("--mass", type=float, default=0.0)
    p_eval.add_argument("--delta", type=float, default=0.5)
    p_eval.add_argument("--d", type=int, default=3)
    p_eval.add_argument("--n", type=int, required=True, help="degree")
    p_eval.add_argument("--nu", type=int, default=1, help="harmonic index")
    p_eval.add_argument("--t", type=float, default=0.0, help="evaluation point")
    p_eval.add_argument("--xi", type=str, default="1,0,0",
                        help="direction for harmonics (comma separated)")
    p_eval.add_argument("--orthonormal", action="store_true")
    p_eval.set_defaults(func=_cmd_eval)

    p_kernel = sub.add_parser("kernel", help="evaluate a ball kernel at a point pair")
    _add_ball_flags(p_kernel)
    p_kernel.add_argument("--n", type=int, required=True, help="kernel degree")
    p_kernel.add_argument("--x", type=str, required=True, help="cartesian point")
    p_kernel.add_argument("--y", type=str, required=True, help="cartesian point")
    p_kernel.add_argument("--which", choices=["classical", "modified", "difference"],
                          default="modified")
    p_kernel.set_defaults(func=_cmd_kernel)

    p_chris = sub.add_parser("christoffel", help="evaluate a Christoffel function")
    _add_ball_flags(p_chris)
    p_chris.add_argument("--n", type=int, required=True)
    p_chris.add_argument("--x", type=str, required=True)
    p_chris.add_argument("--modified", action="store_true",
                         help="use the mass-modified kernel")
    p_chris.set_defaults(func=_cmd_christoffel)

    p_conv = sub.add_parser("converge", help="run a convergence sweep, emit CSV")
    p_conv.add_argument("mode", choices=["boundary", "interior"])
    _add_ball_flags(p_conv)
    p_conv.add_argument("--nmax", type=int, required=True)
    p_conv.add_argument("--r", type=float, default=0.5,
                        help="radius for interior sweeps")
    p_conv.add_argument("--start", type=int, default=125,
                        help="first degree of the geometric schedule")
    p_conv.add_argument("--tol", type=float, default=0.05,
                        help="relative-error gate on the final row")
    p_conv.add_argument("--out", type=str, default=None, help="CSV output path")
    p_conv.add_argument("--plot", action="store_true",
                        help="render a figure next to the CSV")
    p_conv.set_defaults(func=_cmd_converge)

    p_verify = sub.add_parser("verify", help="run identity-verification suites")
    p_verify.add_argument("--suite", default="all",
                          choices=["all", "jacobi", "uvarov", "ball", "asymptotics"])
    p_verify.add_argument("--tol", type=float, default=None,
                          help="override every check tolerance in the suite")
    p_verify.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        return args.func(args)
    except (ParameterError, DomainError, ValueError) as exc:
        print(f"ballmass: {exc}", file=sys.stderr)
        return 2
    except NumericError as exc:
        print(f"ballmass: numeric failure: {exc}", file=sys.stderr)
        return 1


def run() -> None:
    sys.exit(main())
