"""Divisibility of lcm matrices by gcd matrices over the integer matrix ring.

A divides B over the n x n integers when B = A*C or B = C*A for some integer
matrix C. Both matrices here are symmetric, so left and right divisibility
coincide: the stored witness is the right quotient C with C * gcd = lcm, and
its transpose witnesses the left side.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from . import numtheory
from .exactmatrix import ExactMatrix, gcd_matrix, lcm_matrix, solve_right
from .setmodel import OrderedSet, is_gcd_closed, power_set
from .tncore import TnVerdict, quotient_closed_form

METHOD_ORACLE = "oracle"
METHOD_CLOSED_FORM = "closed-form"


@dataclass(frozen=True)
class DivisibilityReport:
    """Verdict on gcd-matrix | lcm-matrix with witness or counterexample.

    When divides is true, witness is the integer matrix C with
    C * gcd_matrix = lcm_matrix (side "Both": transpose C for the left side).
    Otherwise violation is the first non-integral quotient entry in row-major
    order as (row, col, value) with 1-based indices.
    """

    divides: bool
    side: str = "Both"
    witness: ExactMatrix | None = None
    violation: tuple[int, int, Fraction] | None = None
    method: str = METHOD_ORACLE

    def __bool__(self) -> bool:
        return self.divides

    def left_witness(self) -> ExactMatrix | None:
        return self.witness.transpose() if self.witness is not None else None

    def to_json_dict(self) -> dict:
        violation = None
        if self.violation is not None:
            i, j, value = self.violation
            violation = [i, j, str(value)]
        return {
            "divides": self.divides,
            "side": self.side,
            "witness": [[str(e) for e in row] for row in self.witness] if self.witness else None,
            "violation": violation,
        }


def _report_from_quotient(quotient: ExactMatrix, method: str) -> DivisibilityReport:
    for i, row in enumerate(quotient):
        for j, entry in enumerate(row):
            if entry.denominator != 1:
                return DivisibilityReport(
                    False, violation=(i + 1, j + 1, entry), method=method
                )
    return DivisibilityReport(True, witness=quotient, method=method)


def divide_oracle(s: OrderedSet | Iterable[int]) -> DivisibilityReport:
    """Decide divisibility by solving C * gcd_matrix = lcm_matrix exactly.

    Works for any ordered set: the gcd matrix is positive definite, hence
    invertible. divides is true iff every entry of C is an integer.
    """
    s = OrderedSet.coerce(s)
    quotient = solve_right(gcd_matrix(s), lcm_matrix(s))
    return _report_from_quotient(quotient, METHOD_ORACLE)


def divide_via_closed_form(
    s: OrderedSet | Iterable[int], verdict: TnVerdict | None = None
) -> DivisibilityReport:
    """Divisibility report from the closed-form quotient, no linear solve.

    Only valid for TN sets with n >= 3, where divisibility always holds; the
    method field distinguishes this path from the oracle for benchmarking.
    """
    s = OrderedSet.coerce(s)
    witness = quotient_closed_form(s, verdict)
    return DivisibilityReport(True, witness=witness, method=METHOD_CLOSED_FORM)


def divide_power(s: OrderedSet | Iterable[int], e: int) -> DivisibilityReport:
    """Divisibility report for the elementwise e-th power of the set."""
    if e < 1:
        raise ValueError(f"exponent must be >= 1, got {e}")
    return divide_oracle(power_set(OrderedSet.coerce(s), e))


def _gcd_closed_candidates(n: int, element_bound: int):
    """Deterministic stream of gcd-closed candidate sets of size n.

    Seeds m = 1, 2, ... up to the element bound are treated as divisor
    lattices: for each m, every ascending n-subset of divisors(m) with maximum
    m is yielded (lexicographic order) if it is gcd-closed. Each such set
    appears for exactly one seed, so the stream is duplicate-free; sets whose
    elements do not all divide their maximum are out of this enumeration's
    reach by design.
    """
    for m in range(1, element_bound + 1):
        divs = numtheory.divisors(m)[:-1]
        if len(divs) < n - 1:
            continue
        for lower in itertools.combinations(divs, n - 1):
            candidate = lower + (m,)
            if is_gcd_closed(candidate):
                yield candidate


def search_gcd_closed_nondivisor(
    n: int, element_bound: int, budget: int
) -> OrderedSet | None:
    """First gcd-closed set of size n (elements <= element_bound) that fails
    divisibility, or None when the enumeration or the budget is exhausted.

    The budget counts candidate sets actually tested by the oracle, so runs
    are reproducible: the result only depends on (n, element_bound, budget).
    """
    if n < 1:
        raise ValueError(f"set size must be >= 1, got {n}")
    tested = 0
    for candidate in _gcd_closed_candidates(n, element_bound):
        if tested >= budget:
            return None
        tested += 1
        if not divide_oracle(candidate).divides:
            return OrderedSet(candidate)
    return None
