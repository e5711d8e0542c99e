"""Descent statistics of indexed permutations, by five independent routes.

An indexed permutation over dimension d with index bound n is an ordinary
permutation of {1..d} whose letters each carry an index in {0..n-1}.
Position i < d is a descent when the indices strictly decrease there, or
tie with the letters decreasing; position d is a descent when the last
index is nonzero.  DT(d, n, k) counts the indexed permutations with
exactly k descents.

Routes: spline evaluation (d! * n^d * B_{d+1}(k + 1/n)), the explicit
alternating sum, the dimension recurrence, combination of refined Eulerian
numbers, and brute-force enumeration.  The descent rule above is not taken
on faith: the enumeration is gated by exact agreement with the other four
routes across the verification sweeps.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product

from .errors import NegativeResult, NonIntegerResult, TooLarge
from .eulerian import refined_explicit
from .numcore import binomial, factorial
from .polyring import Polynomial
from .splinecore import bspline_eval_explicit

DEFAULT_ENUMERATION_BUDGET = 10**7

ROUTES = ("spline", "explicit", "recurrence", "refined", "brute")


@dataclass(frozen=True)
class DescentTable:
    """Exact descent histogram for fixed (d, n) and its generating polynomial.

    values[k] holds DT(d, n, k) for k = 0..d; polynomial is
    sum_k values[k] * t^k.
    """

    d: int
    n: int
    values: tuple[int, ...]
    polynomial: Polynomial

    def value(self, k: int) -> int:
        if 0 <= k <= self.d:
            return self.values[k]
        return 0


@dataclass(frozen=True)
class IndexedPermutation:
    """A permutation of {1..d} with an index in {0..n-1} on each letter."""

    letters: tuple[int, ...]
    indices: tuple[int, ...]

    def __post_init__(self):
        d = len(self.letters)
        if sorted(self.letters) != list(range(1, d + 1)):
            raise ValueError(f"letters {self.letters} are not a permutation of 1..{d}")
        if len(self.indices) != d:
            raise ValueError("one index per letter required")
        if any(e < 0 for e in self.indices):
            raise ValueError("indices must be non-negative")

    def descent_count(self) -> int:
        return _indexed_descents(self.letters, self.indices)


def _indexed_descents(letters, indices) -> int:
    """Index-major comparison, letters break ties; trailing nonzero index descends."""
    d = len(letters)
    count = 0
    for i in range(d - 1):
        ei, ej = indices[i], indices[i + 1]
        if ei > ej or (ei == ej and letters[i] > letters[i + 1]):
            count += 1
    if indices[d - 1] > 0:
        count += 1
    return count


def _make_table(d: int, n: int, values) -> DescentTable:
    values = tuple(int(v) for v in values)
    return DescentTable(d=d, n=n, values=values, polynomial=Polynomial(values))


def _check_args(d: int, n: int) -> None:
    if d < 1:
        raise ValueError("dimension must be >= 1")
    if n < 1:
        raise ValueError("index bound must be >= 1")


def descent_spline(d: int, n: int, k: int) -> int:
    """DT(d, n, k) as d! * n^d * B_{d+1}(k + 1/n); 0 for k outside 0..d."""
    _check_args(d, n)
    if k < 0 or k > d:
        return 0
    value = factorial(d) * n**d * bspline_eval_explicit(d + 1, k + Fraction(1, n))
    if value.denominator != 1:
        raise NonIntegerResult(f"descent_spline({d}, {n}, {k}) produced {value}")
    return value.numerator


def descent_explicit(d: int, n: int, k: int) -> int:
    """DT(d, n, k) via the alternating sum over shifted d-th powers."""
    _check_args(d, n)
    if not 0 <= k <= d:
        raise ValueError(f"descent count k must be in 0..{d}, got {k}")
    total = 0
    for i in range(k + 1):
        term = binomial(d + 1, i) * (n * (k - i) + 1) ** d
        total = total - term if i & 1 else total + term
    if total < 0:
        raise NegativeResult(f"descent_explicit({d}, {n}, {k}) = {total}")
    return total


def descent_recurrence_table(d: int, n: int) -> DescentTable:
    """Build the table by the dimension recurrence from the length-1 base row.

    Base row (1, n-1) is cross-checked against the explicit sum, and row
    sums are checked against n^j * j! at every level while building.
    """
    _check_args(d, n)
    row = [1, n - 1]
    _assert_base_row(n, row)
    for j in range(2, d + 1):
        prev = row
        row = []
        for k in range(j + 1):
            above = prev[k] if k < len(prev) else 0
            left = prev[k - 1] if k >= 1 else 0
            row.append((n * k + 1) * above + (n * (j - k) + (n - 1)) * left)
        if sum(row) != n**j * factorial(j):
            raise AssertionError(f"recurrence row sum broken at dimension {j} (n={n})")
    return _make_table(d, n, row[: d + 1])


def _assert_base_row(n: int, row) -> None:
    expected = [descent_explicit(1, n, 0), descent_explicit(1, n, 1)]
    if row != expected:
        raise AssertionError(f"recurrence base row {row} != explicit {expected}")


def descent_via_refined(d: int, n: int, k: int) -> int:
    """DT(d, n, k) as a binomial combination of refined Eulerian numbers
    weighted by powers of n-1 (0**0 == 1, so n = 1 keeps only the first term)."""
    _check_args(d, n)
    if not 0 <= k <= d:
        raise ValueError(f"descent count k must be in 0..{d}, got {k}")
    return sum(binomial(d, j) * refined_explicit(d, k, j) * (n - 1) ** j for j in range(d + 1))


def indexed_bruteforce(d: int, n: int, budget: int = DEFAULT_ENUMERATION_BUDGET) -> DescentTable:
    """Histogram of descent counts over every (permutation, index vector) pair."""
    _check_args(d, n)
    total = n**d * factorial(d)
    if total > budget:
        raise TooLarge(
            f"enumeration of {total} indexed permutations exceeds budget {budget}", bound=budget
        )
    counts = [0] * (d + 1)
    index_vectors = list(product(range(n), repeat=d))
    for perm in permutations(range(1, d + 1)):
        for e in index_vectors:
            des = 0
            for i in range(d - 1):
                ei, ej = e[i], e[i + 1]
                if ei > ej or (ei == ej and perm[i] > perm[i + 1]):
                    des += 1
            if e[d - 1] > 0:
                des += 1
            counts[des] += 1
    return _make_table(d, n, counts)


def descent_table(
    d: int, n: int, route: str = "spline", budget: int = DEFAULT_ENUMERATION_BUDGET
) -> DescentTable:
    """Full table for the chosen route."""
    if route == "spline":
        return _make_table(d, n, (descent_spline(d, n, k) for k in range(d + 1)))
    if route == "explicit":
        return _make_table(d, n, (descent_explicit(d, n, k) for k in range(d + 1)))
    if route == "recurrence":
        return descent_recurrence_table(d, n)
    if route == "refined":
        return _make_table(d, n, (descent_via_refined(d, n, k) for k in range(d + 1)))
    if route == "brute":
        return indexed_bruteforce(d, n, budget=budget)
    raise ValueError(f"unknown route {route!r}")


def log_concavity_verdict(table: DescentTable) -> list[int]:
    """Interior margins values[k]^2 - values[k-1] * values[k+1], k = 1..d-1.

    All margins are >= 0 exactly when the histogram is log-concave; the
    empty list for d = 1 is vacuously log-concave.
    """
    v = table.values
    return [v[k] * v[k] - v[k - 1] * v[k + 1] for k in range(1, table.d)]


def descent_two_scale_residual(d: int, n: int, k: int) -> int:
    """DT(d, 2n, k) minus its binomial refinement over index bound n.

    Out-of-range table entries enter as 0.  Identically 0.
    """
    _check_args(d, n)
    refined = sum(binomial(d + 1, j) * descent_spline(d, n, 2 * k - j) for j in range(d + 2))
    return descent_spline(d, 2 * n, k) - refined
