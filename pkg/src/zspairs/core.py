"""Value types for multisets of positive integers, unordered pairs, and
zero-sum integer sequences.

A pair {A, B} of nonempty multisets with equal sums corresponds to the
zero-sum sequence that lists A's elements positively and B's elements
negated.  All types here are immutable values; every operation is pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

# Width guards: values and sums must stay comfortably inside 32-bit signed
# range so serialized output is portable.  Far beyond any desk-scale use.
MAX_VALUE = 10**6
MAX_CARDINALITY = 10**6
MAX_SIGMA = 2**31 - 1


class NonPositiveValueError(ValueError):
    """A multiset element was zero or negative."""


class NonPositiveCountError(ValueError):
    """A run had a negative multiplicity."""


class EmptyError(ValueError):
    """A multiset or sequence ended up with no elements."""


class LimitExceededError(ValueError):
    """Input exceeds the supported value, cardinality, or sum width."""


class NotZeroSumError(ValueError):
    """Sequence terms do not sum to zero."""


class ContainsZeroError(ValueError):
    """A sequence term was zero."""


class UnbalancedError(ValueError):
    """The two multisets of a pair have different sums."""


class KTooSmallError(ValueError):
    """The requested alphabet bound k admits no such construction."""


@dataclass(frozen=True, order=True, slots=True)
class Multiset:
    """A nonempty multiset of positive integers, stored as (value, count)
    runs with values strictly decreasing.

    The dataclass ordering compares run tuples lexicographically, which
    coincides with comparing the descending element sequences (for equal
    leading values a higher count wins, exactly as the longer prefix of
    that value would).  Construct via :func:`normalize` unless the runs
    are already canonical.
    """

    runs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if not self.runs:
            raise EmptyError("multiset has no elements")
        prev = None
        card = 0
        sigma = 0
        for value, count in self.runs:
            if value <= 0:
                raise NonPositiveValueError(f"value {value} must be positive")
            if count <= 0:
                raise NonPositiveCountError(f"count {count} must be positive")
            if value > MAX_VALUE:
                raise LimitExceededError(f"value {value} exceeds {MAX_VALUE}")
            if prev is not None and value >= prev:
                raise ValueError("runs must have strictly decreasing values")
            prev = value
            card += count
            sigma += value * count
        if card > MAX_CARDINALITY:
            raise LimitExceededError(f"cardinality {card} exceeds {MAX_CARDINALITY}")
        if sigma > MAX_SIGMA:
            raise LimitExceededError(f"sum {sigma} exceeds {MAX_SIGMA}")

    @property
    def cardinality(self) -> int:
        return sum(c for _, c in self.runs)

    @property
    def sigma(self) -> int:
        return sum(v * c for v, c in self.runs)

    @property
    def max_value(self) -> int:
        return self.runs[0][0]

    def count_of(self, value: int) -> int:
        for v, c in self.runs:
            if v == value:
                return c
        return 0

    def __contains__(self, value: int) -> bool:
        return self.count_of(value) > 0

    def values(self) -> tuple[int, ...]:
        """Distinct values, descending."""
        return tuple(v for v, _ in self.runs)

    def elements(self) -> Iterator[int]:
        """All elements with multiplicity, descending."""
        for v, c in self.runs:
            for _ in range(c):
                yield v

    def remove(self, value: int, count: int = 1) -> Multiset:
        """A copy with `count` copies of `value` removed.

        Raises EmptyError if nothing would remain, KeyError if the
        multiset holds fewer than `count` copies.
        """
        if self.count_of(value) < count:
            raise KeyError(f"fewer than {count} copies of {value}")
        out = []
        for v, c in self.runs:
            if v == value:
                c -= count
            if c > 0:
                out.append((v, c))
        return Multiset(tuple(out))

    def add(self, value: int, count: int = 1) -> Multiset:
        """A copy with `count` extra copies of `value`."""
        if value <= 0:
            raise NonPositiveValueError(f"value {value} must be positive")
        if count <= 0:
            raise NonPositiveCountError(f"count {count} must be positive")
        out: list[tuple[int, int]] = []
        placed = False
        for v, c in self.runs:
            if v == value:
                out.append((v, c + count))
                placed = True
            elif not placed and v < value:
                out.append((value, count))
                out.append((v, c))
                placed = True
            else:
                out.append((v, c))
        if not placed:
            out.append((value, count))
        return Multiset(tuple(out))

    def union(self, other: Multiset) -> Multiset:
        """Multiset union: counts add."""
        merged: dict[int, int] = {v: c for v, c in self.runs}
        for v, c in other.runs:
            merged[v] = merged.get(v, 0) + c
        return Multiset(tuple(sorted(merged.items(), reverse=True)))


class Measures(NamedTuple):
    sigma: int
    max_value: int
    cardinality: int


def normalize(raw: Iterable[tuple[int, int]]) -> Multiset:
    """Build a canonical Multiset from arbitrary (value, count) items.

    Duplicate values merge, zero counts are dropped, values sort
    descending.  Rejects non-positive values, negative counts, and an
    empty result.
    """
    merged: dict[int, int] = {}
    for value, count in raw:
        if value <= 0:
            raise NonPositiveValueError(f"value {value} must be positive")
        if count < 0:
            raise NonPositiveCountError(f"count {count} must be non-negative")
        if count == 0:
            continue
        merged[value] = merged.get(value, 0) + count
    if not merged:
        raise EmptyError("multiset has no elements")
    return Multiset(tuple(sorted(merged.items(), reverse=True)))


def multiset(*elements: int) -> Multiset:
    """Convenience constructor from explicit elements, e.g. multiset(7, 7, 1)."""
    return normalize([(e, 1) for e in elements])


def measures(ms: Multiset) -> Measures:
    """(sum, maximum element, number of elements) of a multiset."""
    return Measures(ms.sigma, ms.max_value, ms.cardinality)


@dataclass(frozen=True, slots=True)
class Pair:
    """An unordered pair {A, B} of nonempty multisets, canonically oriented.

    Orientation: A's descending element sequence is lexicographically >=
    B's (equal multisets are allowed, as in {{1},{1}}).  Whether the two
    sums agree is exposed as `balanced`; irreducibility requires it.
    """

    a: Multiset
    b: Multiset

    def __post_init__(self) -> None:
        if self.a < self.b:
            raise ValueError("pair is not canonically oriented; use pair_canonical")

    @property
    def balanced(self) -> bool:
        return self.a.sigma == self.b.sigma

    @property
    def length(self) -> int:
        """Total number of elements, counted with multiplicity."""
        return self.a.cardinality + self.b.cardinality

    @property
    def max_element(self) -> int:
        """Largest element on either side: the least k this pair fits under."""
        return max(self.a.max_value, self.b.max_value)


def pair_canonical(x: Multiset, y: Multiset) -> Pair:
    """The canonical Pair containing x and y; symmetric in its arguments."""
    if x < y:
        x, y = y, x
    return Pair(x, y)


@dataclass(frozen=True, slots=True)
class ZeroSumSequence:
    """A finite sequence of nonzero integers summing to zero."""

    terms: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.terms:
            raise EmptyError("sequence has no terms")
        if any(t == 0 for t in self.terms):
            raise ContainsZeroError("sequence terms must be nonzero")
        if sum(self.terms) != 0:
            raise NotZeroSumError(f"terms sum to {sum(self.terms)}, not 0")


def sequence_to_pair(seq: ZeroSumSequence) -> Pair:
    """Split a zero-sum sequence into the pair (positives, |negatives|)."""
    pos = [t for t in seq.terms if t > 0]
    neg = [-t for t in seq.terms if t < 0]
    return pair_canonical(
        normalize([(v, 1) for v in pos]),
        normalize([(v, 1) for v in neg]),
    )


def pair_to_sequence(p: Pair) -> ZeroSumSequence:
    """The zero-sum sequence listing A descending, then -B descending.

    Any term order represents the same multiset pair; this fixed order
    makes the round trip with sequence_to_pair exact.
    """
    if not p.balanced:
        raise UnbalancedError(
            f"sums differ: {p.a.sigma} != {p.b.sigma}; no zero-sum sequence exists"
        )
    terms = list(p.a.elements()) + [-v for v in p.b.elements()]
    return ZeroSumSequence(tuple(terms))


def extremal_construction(k: int) -> Pair:
    """The pair of k repeated k-1 times against k-1 repeated k times.

    Its length is 2k-1 and both sides sum to k*(k-1); defined for k > 1.
    """
    if k <= 1:
        raise KTooSmallError(f"k must be at least 2, got {k}")
    return pair_canonical(
        Multiset(((k, k - 1),)),
        Multiset(((k - 1, k),)),
    )
