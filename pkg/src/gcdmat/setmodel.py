"""Ordered sets of distinct positive integers and their prime-exponent matrices.

An ``OrderedSet`` is an ordered list of distinct positive integers; order is
significant, so two sets with the same elements in different orders are not
equal. Its ``ExponentMatrix`` holds one row of prime exponents per element,
over the sorted primes dividing the product of the elements.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Iterator, Sequence

from . import numtheory
from .errors import (
    DuplicateRowsError,
    InvalidSetError,
    NotAMemberError,
    NotPrimeError,
    PrimesNotIncreasingError,
    SearchBudgetExceededError,
)

# 2**k direction assignments are enumerated over the non-constant columns;
# beyond this many columns the search refuses rather than hangs.
DIRECTION_ENUM_CAP = 30


class OrderedSet:
    """Ordered list of distinct positive integers."""

    __slots__ = ("_elements",)

    def __init__(self, elements: Iterable[int]):
        elems = tuple(elements)
        if not elems:
            raise InvalidSetError("an ordered set needs at least one element")
        for x in elems:
            if not isinstance(x, int) or isinstance(x, bool):
                raise InvalidSetError(f"element {x!r} is not an integer")
            if x < 1:
                raise InvalidSetError(f"element {x} is not positive")
        if len(set(elems)) != len(elems):
            raise InvalidSetError(f"elements are not pairwise distinct: {elems}")
        self._elements = elems

    @property
    def elements(self) -> tuple[int, ...]:
        return self._elements

    def __len__(self) -> int:
        return len(self._elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self._elements)

    def __getitem__(self, i: int) -> int:
        return self._elements[i]

    def __contains__(self, x: object) -> bool:
        return x in self._elements

    def __eq__(self, other: object) -> bool:
        return isinstance(other, OrderedSet) and self._elements == other._elements

    def __hash__(self) -> int:
        return hash(self._elements)

    def __repr__(self) -> str:
        return f"OrderedSet({list(self._elements)})"

    @classmethod
    def coerce(cls, value: "OrderedSet | Iterable[int]") -> "OrderedSet":
        return value if isinstance(value, OrderedSet) else cls(value)

    def permute(self, image: Sequence[int]) -> "OrderedSet":
        """Apply a permutation given as a 1-based image list [s(1), ..., s(n)]."""
        if sorted(image) != list(range(1, len(self) + 1)):
            raise InvalidSetError(f"{list(image)} is not a permutation of 1..{len(self)}")
        return OrderedSet(self._elements[i - 1] for i in image)

    # --- text / JSON formats ------------------------------------------------

    @classmethod
    def from_text(cls, text: str) -> "OrderedSet":
        """Parse whitespace- or newline-separated decimal integers."""
        tokens = text.split()
        if not tokens:
            raise InvalidSetError("no integers found in input")
        elems = []
        for tok in tokens:
            try:
                elems.append(int(tok, 10))
            except ValueError:
                raise InvalidSetError(f"not a decimal integer: {tok!r}") from None
        return cls(elems)

    @classmethod
    def from_json_dict(cls, doc: dict) -> "OrderedSet":
        if "elements" not in doc:
            raise InvalidSetError('missing "elements" field')
        raw = doc["elements"]
        if not isinstance(raw, list):
            raise InvalidSetError('"elements" must be a list')
        elems = []
        for item in raw:
            if isinstance(item, int) and not isinstance(item, bool):
                elems.append(item)
            elif isinstance(item, str):
                try:
                    elems.append(int(item, 10))
                except ValueError:
                    raise InvalidSetError(f'bad "elements" entry: {item!r}') from None
            else:
                raise InvalidSetError(f'bad "elements" entry: {item!r}')
        return cls(elems)

    def to_json_dict(self) -> dict:
        return {"elements": [str(x) for x in self._elements]}

    def to_text(self) -> str:
        return "\n".join(str(x) for x in self._elements)


class ExponentMatrix:
    """n x k matrix of prime exponents plus its ordered prime list.

    Every column must have a nonzero entry (each prime divides some element),
    primes must be strictly increasing and actually prime, and rows must be
    pairwise distinct so reconstruction yields distinct elements.
    """

    __slots__ = ("_primes", "_exponents")

    def __init__(self, primes: Iterable[int], exponents: Iterable[Iterable[int]]):
        primes = tuple(primes)
        rows = tuple(tuple(row) for row in exponents)
        for a, b in zip(primes, primes[1:]):
            if a >= b:
                raise PrimesNotIncreasingError(f"primes not strictly increasing: {a} >= {b}")
        for p in primes:
            if not numtheory.is_prime(p):
                raise NotPrimeError(f"{p} is not prime")
        if not rows:
            raise InvalidSetError("exponent matrix needs at least one row")
        k = len(primes)
        for row in rows:
            if len(row) != k:
                raise InvalidSetError(f"row {row} does not have {k} entries")
            for e in row:
                if not isinstance(e, int) or isinstance(e, bool) or e < 0:
                    raise InvalidSetError(f"bad exponent {e!r}")
        if len(set(rows)) != len(rows):
            raise DuplicateRowsError(f"duplicate exponent rows in {rows}")
        for j in range(k):
            if all(row[j] == 0 for row in rows):
                raise InvalidSetError(f"prime {primes[j]} divides no element (zero column)")
        self._primes = primes
        self._exponents = rows

    @property
    def primes(self) -> tuple[int, ...]:
        return self._primes

    @property
    def exponents(self) -> tuple[tuple[int, ...], ...]:
        return self._exponents

    @property
    def n(self) -> int:
        return len(self._exponents)

    @property
    def k(self) -> int:
        return len(self._primes)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ExponentMatrix)
            and self._primes == other._primes
            and self._exponents == other._exponents
        )

    def __hash__(self) -> int:
        return hash((self._primes, self._exponents))

    def __repr__(self) -> str:
        return f"ExponentMatrix(primes={list(self._primes)}, exponents={[list(r) for r in self._exponents]})"

    @classmethod
    def from_json_dict(cls, doc: dict) -> "ExponentMatrix":
        if "primes" not in doc or "exponents" not in doc:
            raise InvalidSetError('missing "primes" or "exponents" field')
        primes = []
        for item in doc["primes"]:
            if isinstance(item, int) and not isinstance(item, bool):
                primes.append(item)
            elif isinstance(item, str):
                try:
                    primes.append(int(item, 10))
                except ValueError:
                    raise InvalidSetError(f'bad "primes" entry: {item!r}') from None
            else:
                raise InvalidSetError(f'bad "primes" entry: {item!r}')
        return cls(primes, doc["exponents"])

    def to_json_dict(self) -> dict:
        return {
            "primes": [str(p) for p in self._primes],
            "exponents": [list(row) for row in self._exponents],
        }

    def to_text(self) -> str:
        lines = ["primes: " + " ".join(str(p) for p in self._primes)]
        lines += [" ".join(str(e) for e in row) for row in self._exponents]
        return "\n".join(lines)


@dataclass(frozen=True)
class ColumnMonotoneReport:
    """Per-column monotonicity verdict; truthiness is the overall answer.

    Directions are "up", "down", "constant", or "none" for a column that is
    neither non-decreasing nor non-increasing.
    """

    monotone: bool
    directions: tuple[str, ...]

    def __bool__(self) -> bool:
        return self.monotone


def _column_direction(col: Sequence[int]) -> str:
    up = all(a <= b for a, b in zip(col, col[1:]))
    down = all(a >= b for a, b in zip(col, col[1:]))
    if up and down:
        return "constant"
    if up:
        return "up"
    if down:
        return "down"
    return "none"


def pow_matrix(s: OrderedSet | Iterable[int]) -> ExponentMatrix:
    """Prime-exponent matrix of an ordered set, primes ascending."""
    s = OrderedSet.coerce(s)
    factorizations = [dict(numtheory.factorize(x)) for x in s]
    primes = sorted(set().union(*factorizations)) if factorizations else []
    rows = [[f.get(p, 0) for p in primes] for f in factorizations]
    return ExponentMatrix(primes, rows)


def is_column_monotone(m: ExponentMatrix) -> ColumnMonotoneReport:
    """Whether every column is non-decreasing or non-increasing."""
    cols = list(zip(*m.exponents)) if m.k else []
    directions = tuple(_column_direction(col) for col in cols)
    return ColumnMonotoneReport("none" not in directions, directions)


def find_monotone_order(s: OrderedSet | Iterable[int]) -> tuple[int, ...] | None:
    """Search for a reordering that makes the exponent matrix column monotone.

    Returns the 1-based image list of the permutation, or None when no
    reordering works. Constant columns are dropped, then every up/down
    assignment over the remaining columns is tried: rows must form a chain
    under the componentwise order once down-columns are negated, and the chain
    order is the permutation. Among all valid permutations the
    lexicographically smallest image list is returned.
    """
    s = OrderedSet.coerce(s)
    n = len(s)
    rows = pow_matrix(s).exponents
    cols = [col for col in zip(*rows) if len(set(col)) > 1]
    if not cols:
        return tuple(range(1, n + 1))
    if len(cols) > DIRECTION_ENUM_CAP:
        raise SearchBudgetExceededError(
            f"{len(cols)} non-constant columns exceed the enumeration cap {DIRECTION_ENUM_CAP}"
        )
    best: tuple[int, ...] | None = None
    for signs in itertools.product((1, -1), repeat=len(cols)):
        keys = [tuple(sign * col[i] for sign, col in zip(signs, cols)) for i in range(n)]
        order = sorted(range(n), key=keys.__getitem__)
        if all(
            all(a <= b for a, b in zip(keys[order[i]], keys[order[i + 1]]))
            for i in range(n - 1)
        ):
            image = tuple(i + 1 for i in order)
            if best is None or image < best:
                best = image
    return best


def is_gcd_closed(s: OrderedSet | Iterable[int]) -> bool:
    """True when every pairwise gcd is itself a member."""
    s = OrderedSet.coerce(s)
    members = set(s)
    return all(gcd(a, b) in members for a, b in itertools.combinations(s, 2))


def is_factor_closed(s: OrderedSet | Iterable[int]) -> bool:
    """True when every divisor of every member is a member."""
    s = OrderedSet.coerce(s)
    members = set(s)
    return all(d in members for x in s for d in numtheory.divisors(x))


def greatest_type_divisors(s: OrderedSet | Iterable[int], y: int) -> list[int]:
    """Maximal proper divisors of y within s under the divisibility order.

    These are the members x < y with x | y such that no member z sits strictly
    between x and y in the divisibility order. Returned ascending.
    """
    s = OrderedSet.coerce(s)
    if y not in s:
        raise NotAMemberError(f"{y} is not a member of {s!r}")
    proper = [x for x in s if x < y and y % x == 0]
    return sorted(
        x
        for x in proper
        if not any(z != x and z % x == 0 and y % z == 0 for z in proper)
    )


def classify_coprime_divisor_chains(
    s: OrderedSet | Iterable[int],
) -> list[list[int]] | None:
    """Partition into pairwise-coprime divisor chains, or None if impossible.

    Elements are grouped into connected components under "gcd > 1"; such a
    partition exists iff every component is totally ordered by divisibility.
    Components are pairwise coprime by construction. The element 1 is coprime
    to everything and forms its own singleton block. Blocks are ordered by
    first appearance in s; each block is listed in chain (ascending) order.
    """
    s = OrderedSet.coerce(s)
    n = len(s)
    parent = list(range(n))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, j in itertools.combinations(range(n), 2):
        if gcd(s[i], s[j]) > 1:
            parent[find(i)] = find(j)

    blocks: dict[int, list[int]] = {}
    for i in range(n):
        blocks.setdefault(find(i), []).append(s[i])
    ordered = sorted(blocks.values(), key=lambda block: s.elements.index(block[0]))
    for block in ordered:
        block.sort()
        if any(b % a != 0 for a, b in zip(block, block[1:])):
            return None
    return ordered


def power_set(s: OrderedSet | Iterable[int], e: int) -> OrderedSet:
    """Elementwise e-th power, order preserved."""
    if e < 1:
        raise ValueError(f"exponent must be >= 1, got {e}")
    s = OrderedSet.coerce(s)
    return OrderedSet(x**e for x in s)


def reconstruct(m: ExponentMatrix) -> OrderedSet:
    """The ordered set whose exponent matrix round-trips to m."""
    return OrderedSet(
        _product(p**e for p, e in zip(m.primes, row)) for row in m.exponents
    )


def _product(values: Iterable[int]) -> int:
    result = 1
    for v in values:
        result *= v
    return result


def parse_input_document(text: str) -> OrderedSet | ExponentMatrix:
    """Auto-detect an input document: JSON with "primes" is an exponent
    matrix, JSON with "elements" is an ordered set, anything else is parsed
    as whitespace-separated integers."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InvalidSetError(f"bad JSON input: {exc}") from None
        if "primes" in doc:
            return ExponentMatrix.from_json_dict(doc)
        return OrderedSet.from_json_dict(doc)
    return OrderedSet.from_text(text)
