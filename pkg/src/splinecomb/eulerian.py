"""Eulerian numbers and their last-element refinement, by independent routes.

A(d, k) counts permutations of S_d with exactly k-1 descents (a descent of
pi is a position i with pi_i > pi_{i+1}).  The refined count AR(d+1, k, m)
counts permutations of S_{d+1} with k descents whose last element is m.

Routes: spline evaluation (d! * B_{d+1}(k)), explicit alternating sums,
coefficient extraction from an exact polynomial identity, and brute-force
enumeration.  All routes must agree bit-exactly; the enumeration is the
oracle the others are gated on.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from .errors import NegativeResult, NonIntegerResult, TooLarge
from .numcore import binomial, factorial
from .polyring import Polynomial
from .splinecore import bspline_eval_explicit

# Enumeration bounds keep full verification sweeps in the minutes range;
# callers may raise them explicitly.
MAX_BRUTE_DIMENSION = 10
MAX_REFINED_BRUTE_DIMENSION = 8


@dataclass(frozen=True)
class EulerianRow:
    """Exact row A(d, 1..d); values[i] holds A(d, i+1)."""

    d: int
    values: tuple[int, ...]

    def value(self, k: int) -> int:
        """A(d, k), with out-of-range k giving 0."""
        if 1 <= k <= self.d:
            return self.values[k - 1]
        return 0


@dataclass(frozen=True)
class RefinedTriangle:
    """Refined counts for S_{d+1}, keyed by descent count and last element.

    values[k][j] holds AR(d+1, k, d+1-j): permutations of S_{d+1} with k
    descents ending with the element d+1-j, for 0 <= k, j <= d.
    """

    d: int
    values: tuple[tuple[int, ...], ...]

    def value(self, k: int, j: int) -> int:
        return self.values[k][j]


def descent_count(perm) -> int:
    """Number of positions i with perm[i] > perm[i+1]."""
    return sum(perm[i] > perm[i + 1] for i in range(len(perm) - 1))


def _as_int(value: Fraction, context: str) -> int:
    if value.denominator != 1:
        raise NonIntegerResult(f"{context} produced non-integer {value}")
    return value.numerator


def eulerian_spline(d: int, k: int) -> int:
    """A(d, k) as d! * B_{d+1}(k); 0 for k outside 1..d."""
    if d < 1:
        raise ValueError("dimension must be >= 1")
    if k <= 0 or k > d:
        return 0
    value = factorial(d) * bspline_eval_explicit(d + 1, k)
    return _as_int(value, f"eulerian_spline({d}, {k})")


def eulerian_row_spline(d: int) -> EulerianRow:
    return EulerianRow(d=d, values=tuple(eulerian_spline(d, k) for k in range(1, d + 1)))


def eulerian_bruteforce(d: int, max_dimension: int = MAX_BRUTE_DIMENSION) -> EulerianRow:
    """Histogram of descent counts over all of S_d (cost d!)."""
    if d < 1:
        raise ValueError("dimension must be >= 1")
    if d > max_dimension:
        raise TooLarge(f"brute-force bound is d <= {max_dimension}, got {d}", bound=max_dimension)
    counts = [0] * d
    for perm in permutations(range(1, d + 1)):
        counts[descent_count(perm)] += 1
    return EulerianRow(d=d, values=tuple(counts))


def refined_explicit(d: int, k: int, j: int) -> int:
    """AR(d+1, k, d-j+1) via the alternating sum, with 0**0 == 1."""
    _check_refined_args(d, k, j)
    total = 0
    for i in range(k + 1):
        term = binomial(d + 1, i) * (k - i) ** j * (k - i + 1) ** (d - j)
        total = total - term if i & 1 else total + term
    if total < 0:
        raise NegativeResult(f"refined_explicit({d}, {k}, {j}) = {total}")
    return total


def refined_lambda_extraction(d: int, k: int, j: int) -> int:
    """AR(d+1, k, d-j+1) via coefficient extraction.

    Expands P = sum_i C(d+1, i) (-1)^i ((k-i) * t + (k-i+1))^d, which is the
    scaled spline value d! * (t+1)^d * B_{d+1}(k + 1/(t+1)) with all
    truncated powers resolved on the piece (k, k+1]; coefficient j of P,
    divided by C(d, j), is the refined count.
    """
    _check_refined_args(d, k, j)
    poly = Polynomial()
    for i in range(k + 1):
        term = Polynomial([k - i + 1, k - i]) ** d * binomial(d + 1, i)
        poly = poly - term if i & 1 else poly + term
    value = poly.coefficient(j) / binomial(d, j)
    return _as_int(value, f"refined_lambda_extraction({d}, {k}, {j})")


def refined_bruteforce(d: int, max_dimension: int = MAX_REFINED_BRUTE_DIMENSION) -> RefinedTriangle:
    """Enumerate S_{d+1}, recording (descent count, last element)."""
    if d < 1:
        raise ValueError("dimension must be >= 1")
    if d > max_dimension:
        raise TooLarge(
            f"refined brute-force bound is d <= {max_dimension}, got {d}", bound=max_dimension
        )
    grid = [[0] * (d + 1) for _ in range(d + 1)]
    for perm in permutations(range(1, d + 2)):
        grid[descent_count(perm)][d + 1 - perm[-1]] += 1
    return RefinedTriangle(d=d, values=tuple(tuple(row) for row in grid))


def refined_triangle(d: int, route: str = "explicit") -> RefinedTriangle:
    """Full refined grid for 0 <= k, j <= d by the chosen route."""
    if route == "brute":
        return refined_bruteforce(d)
    if route == "explicit":
        fn = refined_explicit
    elif route == "lambda":
        fn = refined_lambda_extraction
    else:
        raise ValueError(f"unknown route {route!r}")
    values = tuple(tuple(fn(d, k, j) for j in range(d + 1)) for k in range(d + 1))
    return RefinedTriangle(d=d, values=values)


def eulerian_two_scale_residual(d: int, k: int) -> Fraction:
    """A(d, k) minus its binomial refinement over doubled descent index.

    Out-of-range Eulerian numbers enter as 0.  Identically 0.
    """
    if d < 1:
        raise ValueError("dimension must be >= 1")
    refined = sum(binomial(d + 1, j) * eulerian_spline(d, 2 * k - j) for j in range(d + 2))
    return Fraction(eulerian_spline(d, k)) - Fraction(refined, 2**d)


def _check_refined_args(d: int, k: int, j: int) -> None:
    if d < 1:
        raise ValueError("dimension must be >= 1")
    if not 0 <= k <= d:
        raise ValueError(f"descent count k must be in 0..{d}, got {k}")
    if not 0 <= j <= d:
        raise ValueError(f"refinement index j must be in 0..{d}, got {j}")
