"""Feasibility solver for systems of linear inequalities a_i^T x >= b_i.

The solver localizes a feasible point inside a bounding ball of radius R
around the origin: start from that ball, and as long as the current center
violates some constraint, cut through the center with the first violated
row's normal and replace the ellipsoid by the central-cut update.  It stops
with ``Feasible`` when a center satisfies every row, or with
``VolumeExhausted`` once the ellipsoid volume drops below ``epsilon`` -- at
that point any feasible region inside the bounding ball has volume below
``epsilon``.  Whether that certifies infeasibility is the caller's call (it
depends on how R and epsilon were chosen), so the outcome carries the
certificate data and nothing more.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Union

import numpy as np

from .engine import Cut, DegenerateCutError, PDLostError, ball, central_cut_update
from .linalg import as_vector, quadratic_form

DEFAULT_VIOLATION_TOL = 1e-9


class NumericalBreakdown(ArithmeticError):
    """Cut update failed numerically; ``iteration`` is the failing step."""

    def __init__(self, iteration: int, reason: str):
        super().__init__(f"numerical breakdown at iteration {iteration}: {reason}")
        self.iteration = iteration
        self.reason = reason


@dataclass(frozen=True)
class Constraint:
    """One row a^T x >= b.  Rows given as <= must be negated before this."""

    normal: np.ndarray
    bound: float

    def __post_init__(self):
        normal = as_vector(self.normal).copy()
        if not float(np.linalg.norm(normal)) > 0.0:
            raise ValueError("constraint normal must be nonzero")
        if not math.isfinite(self.bound):
            raise ValueError("constraint bound must be finite")
        normal.flags.writeable = False
        object.__setattr__(self, "normal", normal)
        object.__setattr__(self, "bound", float(self.bound))

    @classmethod
    def from_row(cls, a, b: float, sense: str = ">=") -> "Constraint":
        """Build from a row in either sense; "<=" rows are negated."""
        if sense == ">=":
            return cls(np.asarray(a, dtype=float), b)
        if sense == "<=":
            return cls(-np.asarray(a, dtype=float), -b)
        raise ValueError(f'sense must be ">=" or "<=", got {sense!r}')

    def slack(self, x) -> float:
        """a^T x - b; nonnegative iff satisfied exactly."""
        return float(self.normal @ np.asarray(x, dtype=float)) - self.bound


@dataclass(frozen=True)
class LinearSystem:
    """m constraints in dimension n plus the bounding-ball radius R.

    A feasible point, if any exists, is assumed to lie inside the ball of
    radius R about the origin (R = U * sqrt(n) when each coordinate is known
    to be bounded by U in magnitude).
    """

    dim: int
    constraints: tuple[Constraint, ...]
    radius: float

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError(f"dimension must be >= 1, got {self.dim}")
        if not (math.isfinite(self.radius) and self.radius > 0.0):
            raise ValueError(f"radius must be positive and finite, got {self.radius}")
        object.__setattr__(self, "constraints", tuple(self.constraints))
        for i, con in enumerate(self.constraints):
            if con.normal.size != self.dim:
                raise ValueError(
                    f"constraint {i} has length {con.normal.size}, expected {self.dim}"
                )


@dataclass(frozen=True)
class TraceRecord:
    """Per-iteration solve record.

    Cut records carry the violated row, the post-cut center and log-volume,
    and a^T K a of the cut.  The terminal feasible record has
    ``violated_index`` and ``cut_quadratic_form`` set to None.
    """

    iter: int
    violated_index: Optional[int]
    center: list[float]
    log_volume: float
    cut_quadratic_form: Optional[float]

    def as_dict(self) -> dict:
        return {
            "iter": self.iter,
            "violated_index": self.violated_index,
            "center": self.center,
            "log_volume": self.log_volume,
            "cut_quadratic_form": self.cut_quadratic_form,
        }


@dataclass
class SolverConfig:
    epsilon: float
    max_iterations: Optional[int] = None
    violation_tolerance: float = DEFAULT_VIOLATION_TOL
    trace: Optional[Callable[[TraceRecord], None]] = None

    def __post_init__(self):
        if not (math.isfinite(self.epsilon) and self.epsilon > 0.0):
            raise ValueError(f"epsilon must be positive and finite, got {self.epsilon}")
        if self.violation_tolerance < 0.0:
            raise ValueError("violation_tolerance must be >= 0")


@dataclass(frozen=True)
class Feasible:
    point: np.ndarray
    iterations: int


@dataclass(frozen=True)
class VolumeExhausted:
    final_log_volume: float
    iterations: int


@dataclass(frozen=True)
class IterationCapReached:
    iterations: int


SolveOutcome = Union[Feasible, VolumeExhausted, IterationCapReached]


def row_tolerance(tol: float, bound: float) -> float:
    """Per-row slack tolerance, scaled with the bound's magnitude."""
    return tol * (1.0 + abs(bound))


def find_violated(
    sys: LinearSystem, x, tol: float = DEFAULT_VIOLATION_TOL
) -> Optional[tuple[int, Constraint]]:
    """First (lowest-index) constraint with a^T x < b - tol*(1+|b|), or None."""
    point = as_vector(x, sys.dim)
    for i, con in enumerate(sys.constraints):
        if con.slack(point) < -row_tolerance(tol, con.bound):
            return i, con
    return None


def iteration_cap(n: int, log_v0: float, epsilon: float) -> int:
    """ceil(2(n+1) * ln(V0/epsilon)), at least 1.

    Each cut multiplies the volume by at most exp(-1/(2(n+1))), so after
    this many cuts the volume is guaranteed below epsilon.
    """
    if not epsilon > 0.0:
        raise ValueError(f"epsilon must be > 0, got {epsilon}")
    return max(1, math.ceil(2.0 * (n + 1) * (log_v0 - math.log(epsilon))))


def _solve_interval(sys: LinearSystem, cfg: SolverConfig) -> SolveOutcome:
    # 1-D fallback: each row a*x >= b is a half-line; intersect within [-R, R].
    lo, hi = -sys.radius, sys.radius
    for con in sys.constraints:
        a = float(con.normal[0])
        if a > 0.0:
            lo = max(lo, con.bound / a)
        else:
            hi = min(hi, con.bound / a)
    if lo <= hi:
        return Feasible(np.array([0.5 * (lo + hi)]), 0)
    return VolumeExhausted(-math.inf, 0)


def solve(sys: LinearSystem, cfg: SolverConfig) -> SolveOutcome:
    """Run the cutting loop from the bounding ball.

    Returns ``Feasible`` (center satisfying every row within tolerance),
    ``VolumeExhausted`` (log-volume fell below ln epsilon), or
    ``IterationCapReached`` (user-set cap hit first).  Raises
    :class:`NumericalBreakdown` if a cut update fails numerically.
    """
    n = sys.dim
    if n == 1:
        return _solve_interval(sys, cfg)

    state = ball(n, sys.radius)
    log_eps = math.log(cfg.epsilon)
    cap = (
        cfg.max_iterations
        if cfg.max_iterations is not None
        else iteration_cap(n, state.log_volume, cfg.epsilon)
    )

    cuts = 0
    while True:
        hit = find_violated(sys, state.center, cfg.violation_tolerance)
        if hit is None:
            if cfg.trace is not None:
                cfg.trace(
                    TraceRecord(cuts, None, state.center.tolist(), state.log_volume, None)
                )
            return Feasible(state.center, cuts)
        if state.log_volume < log_eps:
            return VolumeExhausted(state.log_volume, cuts)
        if cuts >= cap:
            return IterationCapReached(cuts)

        index, con = hit
        aKa = quadratic_form(state.shape, con.normal)
        try:
            state = central_cut_update(state, Cut(con.normal, provenance=index))
        except (DegenerateCutError, PDLostError) as exc:
            raise NumericalBreakdown(cuts, str(exc)) from exc
        if cfg.trace is not None:
            cfg.trace(
                TraceRecord(cuts, index, state.center.tolist(), state.log_volume, aKa)
            )
        cuts += 1


@dataclass(frozen=True)
class CertReport:
    """Independent re-check of a solve outcome against the raw constraints."""

    kind: str
    passed: bool
    iterations: int
    min_slack: Optional[float] = None
    worst_index: Optional[int] = None
    log_volume_margin: Optional[float] = None
    notes: str = ""


def certify(
    outcome: SolveOutcome,
    sys: LinearSystem,
    *,
    violation_tolerance: float = DEFAULT_VIOLATION_TOL,
    epsilon: Optional[float] = None,
) -> CertReport:
    """Re-check an outcome from scratch.

    For ``Feasible``, every constraint is re-evaluated at the returned point
    and the minimum slack reported.  For ``VolumeExhausted``, the final
    log-volume is compared against ln(epsilon) when epsilon is supplied.
    """
    if isinstance(outcome, Feasible):
        if not sys.constraints:
            return CertReport("feasible", True, outcome.iterations, min_slack=math.inf,
                              notes="no constraints")
        slacks = [con.slack(outcome.point) for con in sys.constraints]
        worst = int(np.argmin(slacks))
        tol = row_tolerance(violation_tolerance, sys.constraints[worst].bound)
        return CertReport(
            "feasible",
            passed=slacks[worst] >= -tol,
            iterations=outcome.iterations,
            min_slack=float(slacks[worst]),
            worst_index=worst,
        )
    if isinstance(outcome, VolumeExhausted):
        if epsilon is None:
            return CertReport(
                "volume_exhausted", True, outcome.iterations,
                notes="epsilon not supplied; margin unchecked",
            )
        margin = math.log(epsilon) - outcome.final_log_volume
        return CertReport(
            "volume_exhausted",
            passed=margin > 0.0,
            iterations=outcome.iterations,
            log_volume_margin=margin,
        )
    return CertReport(
        "iteration_cap_reached", True, outcome.iterations,
        notes="no feasibility claim made",
    )


__all__ = [
    "CertReport",
    "Constraint",
    "DEFAULT_VIOLATION_TOL",
    "Feasible",
    "IterationCapReached",
    "LinearSystem",
    "NumericalBreakdown",
    "SolveOutcome",
    "SolverConfig",
    "TraceRecord",
    "VolumeExhausted",
    "certify",
    "find_violated",
    "iteration_cap",
    "row_tolerance",
    "solve",
]
