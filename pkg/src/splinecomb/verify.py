"""Identity verification suites shared by the CLI and the test suite.

Each suite runs a family of exact cross-route checks and returns a
VerifyReport; nothing here is statistical except the Monte Carlo suite,
whose acceptance band (4 outward-rounded standard errors, at most one
excursion per sweep) is part of its contract.  All suites are
deterministic, including the pseudo-random sample points.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import descent, eulerian, geometry, splinecore
from .errors import TooLarge
from .numcore import binomial, factorial, format_rational

DEFAULT_MC_SEEDS = (101, 20231, 777003)


@dataclass(frozen=True)
class VerifyConfig:
    """Bounds for the verification sweeps.

    Defaults keep a full run in the tens of seconds; raise them for deeper
    sweeps.  mc_samples applies per (slice, seed) pair.
    """

    d_max: int = 6
    n_max: int = 3
    budget: int = descent.DEFAULT_ENUMERATION_BUDGET
    mc_samples: int = 100_000
    mc_seeds: tuple[int, ...] = DEFAULT_MC_SEEDS
    mc_dilated_d_max: int = 4
    sample_points: int = 40
    sample_seed: int = 987654321


@dataclass(frozen=True)
class VerifyReport:
    suite: str
    cases_run: int
    cases_failed: int
    failures: tuple[tuple[str, str, str], ...]

    @property
    def ok(self) -> bool:
        return self.cases_failed == 0


class _Recorder:
    """Accumulates (case, expected, actual) outcomes for one suite."""

    def __init__(self, suite: str):
        self.suite = suite
        self.cases = 0
        self.failures: list[tuple[str, str, str]] = []

    def check(self, case: str, expected, actual) -> None:
        self.cases += 1
        if expected != actual:
            self.failures.append((case, _render(expected), _render(actual)))

    def check_nonneg(self, case: str, value) -> None:
        self.cases += 1
        if value < 0:
            self.failures.append((case, ">= 0", _render(value)))

    def report(self) -> VerifyReport:
        return VerifyReport(
            suite=self.suite,
            cases_run=self.cases,
            cases_failed=len(self.failures),
            failures=tuple(self.failures),
        )


def _render(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, Fraction)):
        return format_rational(value)
    return str(value)


def _sample_points(d: int, count: int, rng: random.Random) -> list[Fraction]:
    """Deterministic rationals in [-1, d+1] with denominators up to 64."""
    points = []
    for _ in range(count):
        q = rng.randint(1, 64)
        points.append(Fraction(rng.randint(-q, (d + 1) * q), q))
    return points


def verify_bspline(config: VerifyConfig = VerifyConfig()) -> VerifyReport:
    rec = _Recorder("bspline")
    rng = random.Random(config.sample_seed)
    for d in range(1, config.d_max + 1):
        for x in _sample_points(d, config.sample_points, rng):
            explicit = splinecore.bspline_eval_explicit(d, x)
            rec.check(f"routes d={d} x={x}", explicit, splinecore.bspline_eval_recurrence(d, x))
            if d >= 2:
                rec.check(f"symmetry d={d} x={x}", explicit, splinecore.bspline_eval_explicit(d, d - x))
            rec.check(f"two-scale d={d} x={x}", Fraction(0), splinecore.two_scale_residual(d, x))
            rec.check(f"partition d={d} x={x}", Fraction(0), splinecore.partition_residual(d, x))
            if 0 <= x < d:
                piece = splinecore.bspline_piece(d, int(x))
                rec.check(f"piece d={d} x={x}", explicit, piece.poly(x))
        for k in range(1, d + 1):
            rec.check(
                f"integral-bridge d={d} k={k}",
                splinecore.bspline_eval_explicit(d + 1, k),
                splinecore.bspline_integrate(d, k - 1, k),
            )
        rec.check(f"unit-integral d={d}", Fraction(1), splinecore.bspline_integrate(d, 0, d))
        if d >= 2:
            for margin in splinecore.log_concavity_witness(d, 8):
                rec.check_nonneg(f"log-concavity d={d}", margin)
    return rec.report()


def verify_eulerian(config: VerifyConfig = VerifyConfig()) -> VerifyReport:
    rec = _Recorder("eulerian")
    for d in range(1, config.d_max + 1):
        spline_row = eulerian.eulerian_row_spline(d)
        if d <= eulerian.MAX_BRUTE_DIMENSION:
            rec.check(f"row d={d}", eulerian.eulerian_bruteforce(d).values, spline_row.values)
        rec.check(f"row-sum d={d}", factorial(d), sum(spline_row.values))
        for k in range(1, d + 1):
            rec.check(f"symmetry d={d} k={k}", spline_row.value(k), spline_row.value(d + 1 - k))
            rec.check(
                f"two-scale d={d} k={k}",
                Fraction(0),
                eulerian.eulerian_two_scale_residual(d, k),
            )
        explicit = eulerian.refined_triangle(d, "explicit")
        rec.check(f"refined lambda d={d}", explicit.values, eulerian.refined_triangle(d, "lambda").values)
        if d <= eulerian.MAX_REFINED_BRUTE_DIMENSION:
            rec.check(f"refined brute d={d}", explicit.values, eulerian.refined_bruteforce(d).values)
        for k in range(d + 1):
            rec.check(
                f"refined-last-column d={d} k={k}",
                eulerian.eulerian_spline(d, k + 1),
                explicit.value(k, 0),
            )
    return rec.report()


def verify_descent(config: VerifyConfig = VerifyConfig()) -> VerifyReport:
    rec = _Recorder("descent")
    for d in range(1, config.d_max + 1):
        for n in range(1, config.n_max + 1):
            spline = descent.descent_table(d, n, "spline")
            for route in ("explicit", "recurrence", "refined"):
                rec.check(f"route {route} d={d} n={n}", spline.values, descent.descent_table(d, n, route).values)
            try:
                brute = descent.indexed_bruteforce(d, n, budget=config.budget)
            except TooLarge:
                pass
            else:
                rec.check(f"route brute d={d} n={n}", spline.values, brute.values)
            rec.check(f"conservation d={d} n={n}", n**d * factorial(d), sum(spline.values))
            rec.check(f"no-descent count d={d} n={n}", 1, spline.values[0])
            rec.check(f"poly-at-1 d={d} n={n}", Fraction(n**d * factorial(d)), spline.polynomial(1))
            for margin in descent.log_concavity_verdict(spline):
                rec.check_nonneg(f"log-concavity d={d} n={n}", margin)
            for k in range(d + 1):
                rec.check(
                    f"two-scale d={d} n={n} k={k}",
                    0,
                    descent.descent_two_scale_residual(d, n, k),
                )
        for k in range(d + 1):
            rec.check(
                f"unit-index reduction d={d} k={k}",
                eulerian.eulerian_spline(d, k + 1),
                descent.descent_spline(d, 1, k),
            )
    return rec.report()


def verify_geometry(config: VerifyConfig = VerifyConfig()) -> VerifyReport:
    rec = _Recorder("geometry")
    for d in range(1, config.d_max + 1):
        refined = eulerian.refined_triangle(d, "explicit")
        for k in range(d + 1):
            poly = geometry.minkowski_poly(d, k)
            rec.check(f"degree d={d} k={k}", True, poly.degree <= d)
            for j in range(d + 1):
                rec.check(
                    f"minkowski-coefficient d={d} k={k} j={j}",
                    binomial(d, j) * refined.value(k, j),
                    poly.coefficient(j),
                )
                rec.check(
                    f"mixed-volume d={d} k={k} j={j}",
                    Fraction(refined.value(k, d - j)),
                    geometry.mixed_volume(d, k, j),
                )
            rec.check(f"minkowski-at-0 d={d} k={k}", Fraction(eulerian.eulerian_spline(d, k + 1)), poly(0))
            for n in range(1, config.n_max + 1):
                rec.check(
                    f"minkowski-at-{n - 1} d={d} k={k}",
                    Fraction(descent.descent_spline(d, n, k)),
                    poly(n - 1),
                )
    return rec.report()


def mc_cases(config: VerifyConfig = VerifyConfig()):
    """The (label, spec, exact volume) sweep used by the Monte Carlo suite."""
    cases = []
    for d in range(1, config.d_max + 1):
        for k in range(1, d + 1):
            cases.append(
                (f"unit d={d} k={k}", geometry.SliceSpec.cube_slice(d, k), eulerian.eulerian_spline(d, k))
            )
    for d in range(1, min(config.d_max, config.mc_dilated_d_max) + 1):
        for n in range(1, config.n_max + 1):
            for k in range(d + 1):
                cases.append(
                    (
                        f"dilated d={d} n={n} k={k}",
                        geometry.SliceSpec.dilated_slice(d, n, k),
                        descent.descent_spline(d, n, k),
                    )
                )
    return cases


def verify_mc(config: VerifyConfig = VerifyConfig()) -> VerifyReport:
    """Monte Carlo soundness sweep.

    A (slice, seed) pair is in excursion when the estimate misses the exact
    volume by more than 4 outward-rounded standard errors.  One excursion
    across the whole sweep is within contract; two or more are reported as
    failures.
    """
    rec = _Recorder("monte-carlo")
    excursions = []
    for label, spec, exact in mc_cases(config):
        for seed in config.mc_seeds:
            rec.cases += 1
            est = geometry.mc_volume(spec, config.mc_samples, seed)
            if abs(est.estimate - exact) > 4 * est.standard_error:
                excursions.append(
                    (
                        f"{label} seed={seed}",
                        format_rational(exact),
                        f"{format_rational(est.estimate)} +- {format_rational(est.standard_error)}",
                    )
                )
    if len(excursions) > 1:
        rec.failures.extend(excursions)
    return rec.report()


def verify_all(config: VerifyConfig = VerifyConfig()) -> list[VerifyReport]:
    return [
        verify_bspline(config),
        verify_eulerian(config),
        verify_descent(config),
        verify_geometry(config),
        verify_mc(config),
    ]
