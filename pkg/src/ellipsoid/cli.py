"""Command-line driver.

Reads a JSON problem file, runs the solver, and reports the result as text
or JSON.  Optionally writes a newline-delimited trace, a 2-D SVG plot of
the ellipse sequence, and a brute-force oracle cross-check.

Exit statuses: 0 feasible, 1 no feasible point found (volume exhausted or
iteration cap), 2 input error, 3 numerical breakdown.
"""

from __future__ import annotations

import argparse
import json
import math
import sys as _sys

from .engine import Cut, ball, central_cut_update
from .oracle import FeasibleWitness, Inconclusive, Infeasible, vertex_enumeration_check
from .problems import ProblemFormatError, parse_problem, to_linear_system
from .solver import (
    DEFAULT_VIOLATION_TOL,
    Feasible,
    LinearSystem,
    NumericalBreakdown,
    SolverConfig,
    TraceRecord,
    VolumeExhausted,
    certify,
    solve,
)
from .svgplot import emit_svg_trace

EXIT_FEASIBLE = 0
EXIT_NOT_FOUND = 1
EXIT_INPUT_ERROR = 2
EXIT_NUMERICAL = 3

# Without --epsilon the threshold is this fraction of the initial ball volume.
DEFAULT_EPSILON_FACTOR = 1e-8


def replay_shapes(sys: LinearSystem, records: list[TraceRecord]):
    """Rebuild the ellipsoid sequence from the cut records.

    The trace pins down every update (initial ball plus which row cut when),
    so re-applying the updates reproduces the exact same states.  Returns
    [] when no cuts were made: the initial ball coincides with the bounding
    circle, so there is nothing to plot beyond it.
    """
    cut_records = [r for r in records if r.violated_index is not None]
    if not cut_records:
        return []
    state = ball(sys.dim, sys.radius)
    shapes = [(state.center, state.shape)]
    for rec in cut_records:
        con = sys.constraints[rec.violated_index]
        state = central_cut_update(state, Cut(con.normal, provenance=rec.violated_index))
        shapes.append((state.center, state.shape))
    return shapes


def _oracle_section(sys: LinearSystem, outcome) -> dict:
    if sys.dim > 4:
        return {"agreement": "skipped", "reason": "oracle limited to dim <= 4"}
    verdict = vertex_enumeration_check(sys)
    solver_feasible = isinstance(outcome, Feasible)
    if isinstance(verdict, FeasibleWitness):
        section = {"verdict": "feasible", "witness": verdict.point.tolist()}
        section["agreement"] = "agree" if solver_feasible else "disagree"
    elif isinstance(verdict, Infeasible):
        section = {"verdict": "infeasible"}
        section["agreement"] = "disagree" if solver_feasible else "agree"
    else:
        assert isinstance(verdict, Inconclusive)
        section = {"verdict": "inconclusive", "reason": verdict.reason}
        section["agreement"] = "inconclusive"
    return section


def _report(outcome, sys: LinearSystem, cfg: SolverConfig, oracle: dict | None) -> dict:
    report = {
        "dim": sys.dim,
        "num_constraints": len(sys.constraints),
        "epsilon": cfg.epsilon,
        "log_epsilon": math.log(cfg.epsilon),
    }
    cert = certify(
        outcome, sys, violation_tolerance=cfg.violation_tolerance, epsilon=cfg.epsilon
    )
    if isinstance(outcome, Feasible):
        report.update(
            status="feasible",
            iterations=outcome.iterations,
            point=outcome.point.tolist(),
            min_slack=cert.min_slack,
            certified=cert.passed,
        )
    elif isinstance(outcome, VolumeExhausted):
        report.update(
            status="volume_exhausted",
            iterations=outcome.iterations,
            final_log_volume=outcome.final_log_volume,
            log_volume_margin=cert.log_volume_margin,
            certified=cert.passed,
        )
    else:
        report.update(
            status="iteration_cap_reached",
            iterations=outcome.iterations,
            certified=cert.passed,
        )
    if oracle is not None:
        report["oracle"] = oracle
    return report


def _print_text(report: dict) -> None:
    print(f"status: {report['status']}")
    print(f"iterations: {report['iterations']}")
    if report["status"] == "feasible":
        point = ", ".join(f"{v:.12g}" for v in report["point"])
        print(f"point: [{point}]")
        print(f"min slack: {report['min_slack']:.6g}")
    elif report["status"] == "volume_exhausted":
        print(f"final log-volume: {report['final_log_volume']:.6f}")
        print(f"log epsilon: {report['log_epsilon']:.6f}")
    print(f"certified: {report['certified']}")
    if "oracle" in report:
        print(f"oracle: {report['oracle']['agreement']}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ellipsoid-solve",
        description="Find a point satisfying a system of linear inequalities, "
        "or certify that any feasible region in the bounding ball has "
        "volume below epsilon.",
    )
    parser.add_argument("--input", required=True, help="problem file (JSON)")
    parser.add_argument(
        "--epsilon", type=float, default=None,
        help="volume threshold (default: 1e-8 x initial ball volume)",
    )
    parser.add_argument("--max-iter", type=int, default=None, help="iteration cap")
    parser.add_argument(
        "--tol", type=float, default=DEFAULT_VIOLATION_TOL,
        help="violation tolerance (scaled per row by 1+|b|)",
    )
    parser.add_argument("--output", choices=("text", "json"), default="text")
    parser.add_argument("--trace", default=None, help="write ndjson trace records here")
    parser.add_argument("--svg", default=None, help="write an SVG plot here (dim 2 only)")
    parser.add_argument(
        "--verify", action="store_true",
        help="cross-check with the brute-force oracle (dim <= 4)",
    )
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on bad flags, 0 on --help
        return int(exc.code or 0)

    try:
        with open(args.input, "rb") as fh:
            problem = parse_problem(fh.read())
        sys = to_linear_system(problem)
    except OSError as exc:
        print(f"error: cannot read {args.input}: {exc}", file=_sys.stderr)
        return EXIT_INPUT_ERROR
    except (ProblemFormatError, ValueError) as exc:
        print(f"error: {exc}", file=_sys.stderr)
        return EXIT_INPUT_ERROR

    if args.svg is not None and sys.dim != 2:
        print(
            f"error: --svg requires a 2-D problem (got dim = {sys.dim}); "
            "the plot is a drawing of ellipses in the plane",
            file=_sys.stderr,
        )
        return EXIT_INPUT_ERROR

    epsilon = args.epsilon
    if epsilon is None:
        initial = ball(sys.dim, sys.radius)
        epsilon = DEFAULT_EPSILON_FACTOR * math.exp(initial.log_volume)
    records: list[TraceRecord] = []
    try:
        cfg = SolverConfig(
            epsilon=epsilon,
            max_iterations=args.max_iter,
            violation_tolerance=args.tol,
            trace=records.append,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=_sys.stderr)
        return EXIT_INPUT_ERROR

    try:
        outcome = solve(sys, cfg)
    except NumericalBreakdown as exc:
        if args.output == "json":
            print(json.dumps({"status": "numerical_breakdown",
                              "iteration": exc.iteration, "reason": exc.reason}))
        else:
            print(f"error: {exc}", file=_sys.stderr)
        return EXIT_NUMERICAL

    if args.trace is not None:
        try:
            with open(args.trace, "w", encoding="utf-8") as fh:
                for rec in records:
                    fh.write(json.dumps(rec.as_dict()) + "\n")
        except OSError as exc:
            print(f"error: cannot write {args.trace}: {exc}", file=_sys.stderr)
            return EXIT_INPUT_ERROR

    if args.svg is not None:
        try:
            with open(args.svg, "wb") as fh:
                emit_svg_trace(sys, records, replay_shapes(sys, records), fh)
        except OSError as exc:
            print(f"error: cannot write {args.svg}: {exc}", file=_sys.stderr)
            return EXIT_INPUT_ERROR

    oracle = _oracle_section(sys, outcome) if args.verify else None
    report = _report(outcome, sys, cfg, oracle)
    if args.output == "json":
        print(json.dumps(report))
    else:
        _print_text(report)
    return EXIT_FEASIBLE if isinstance(outcome, Feasible) else EXIT_NOT_FOUND


if __name__ == "__main__":
    raise SystemExit(main())
