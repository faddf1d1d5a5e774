"""The derivation calculus on pairs.

A single (a, b)-derivation removes one copy of a from A and one copy of b
from B, and puts the difference |a - b| back on the side that held the
larger value.  It preserves sums, shrinks the length by exactly one, and,
crucially, maps irreducible pairs to irreducible pairs without raising
either maximum.

Product derivations apply a whole multiset of (a, b)-derivations at once,
drawing every consumed element from the ORIGINAL pair.  Under the
row/column feasibility conditions (no value consumed more often than its
multiplicity) the outcome is independent of application order.  Chains
are the sequential variant: later steps may consume values produced by
earlier ones, so order matters there.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .core import Multiset, Pair, pair_canonical


class DerivationError(ValueError):
    """Base for derivation failures; `step` is set by derive_chain."""

    step: int | None = None


class NoSuchElementError(DerivationError):
    """The requested value is absent from its side."""


class EqualValuesError(DerivationError):
    """a == b: the difference would be zero, which no multiset may hold."""


class TooSmallError(DerivationError):
    """The pair has length 2, or this derivation would empty a side."""


class InfeasiblePlanError(DerivationError):
    """A plan consumes some value more often than its multiplicity."""


class EmptyResultError(DerivationError):
    """Applying the plan would leave one side with no elements."""


class NoSplitError(DerivationError):
    """The split-index preconditions fail: y_1 > sum(x) or sum(y) <= sum(x)."""


class BadSplitError(DerivationError):
    """The given t is not the valid split index for (x, y)."""


@dataclass(frozen=True, slots=True)
class DerivationPlan:
    """How many (a, b)-derivations to apply, as (a, b, count) steps with
    distinct (a, b) keys.  Build from raw triples with `of`, which merges
    duplicates and drops zero counts."""

    steps: tuple[tuple[int, int, int], ...] = field(default=())

    def __post_init__(self) -> None:
        seen = set()
        for a, b, count in self.steps:
            if a <= 0 or b <= 0:
                raise ValueError(f"plan values must be positive, got ({a},{b})")
            if count <= 0:
                raise ValueError(f"plan counts must be positive, got {count}")
            if (a, b) in seen:
                raise ValueError(f"duplicate plan key ({a},{b}); use DerivationPlan.of")
            seen.add((a, b))

    @classmethod
    def of(cls, steps: Iterable[tuple[int, int, int]]) -> DerivationPlan:
        merged: dict[tuple[int, int], int] = {}
        for a, b, count in steps:
            if count < 0:
                raise ValueError(f"plan counts must be non-negative, got {count}")
            if count:
                merged[(a, b)] = merged.get((a, b), 0) + count
        return cls(tuple((a, b, c) for (a, b), c in merged.items()))


def derive(p: Pair, a: int, b: int) -> Pair:
    """Apply one (a, b)-derivation and re-canonicalize.

    Requires a in A, b in B, a != b, and length > 2 (a length-2 pair
    would lose a whole side).  On a pair that is k-irreducible the result
    is again k-irreducible; on reducible pairs the operation still works
    but carries no such guarantee.
    """
    if p.length <= 2:
        raise TooSmallError("pair of length 2 cannot be derived")
    if a not in p.a:
        raise NoSuchElementError(f"no copy of {a} in the first multiset")
    if b not in p.b:
        raise NoSuchElementError(f"no copy of {b} in the second multiset")
    if a == b:
        raise EqualValuesError(f"cannot derive with equal values {a}")
    if a > b:
        if p.b.cardinality == 1:
            raise TooSmallError("derivation would empty the second multiset")
        c = _swap_one(p.a, a, a - b)
        d = p.b.remove(b)
    else:
        if p.a.cardinality == 1:
            raise TooSmallError("derivation would empty the first multiset")
        c = p.a.remove(a)
        d = _swap_one(p.b, b, b - a)
    return pair_canonical(c, d)


def _swap_one(ms: Multiset, old: int, new: int) -> Multiset:
    # remove one copy of old, insert one copy of new; never transiently
    # empty, unlike remove().add() on a singleton multiset
    counts = {v: c for v, c in ms.runs}
    counts[old] -= 1
    counts[new] = counts.get(new, 0) + 1
    return Multiset(tuple(sorted(((v, c) for v, c in counts.items() if c), reverse=True)))


def derive_product(p: Pair, plan: DerivationPlan) -> Pair:
    """Apply every (a, b)-derivation of the plan simultaneously.

    All consumed values are drawn from the original pair, never from
    freshly produced differences; that is exactly what the feasibility
    conditions license and what makes the result order-independent.  Use
    derive_chain for sequential consumption.
    """
    if not plan.steps:
        return p
    for a, b, _ in plan.steps:
        if a == b:
            raise EqualValuesError(f"cannot derive with equal values {a}")
    need_a: dict[int, int] = {}
    need_b: dict[int, int] = {}
    for a, b, count in plan.steps:
        need_a[a] = need_a.get(a, 0) + count
        need_b[b] = need_b.get(b, 0) + count
    for value, need in need_a.items():
        have = p.a.count_of(value)
        if need > have:
            raise InfeasiblePlanError(
                f"plan consumes {need} copies of {value} from the first "
                f"multiset, which holds {have}"
            )
    for value, need in need_b.items():
        have = p.b.count_of(value)
        if need > have:
            raise InfeasiblePlanError(
                f"plan consumes {need} copies of {value} from the second "
                f"multiset, which holds {have}"
            )
    new_a = {v: c for v, c in p.a.runs}
    new_b = {v: c for v, c in p.b.runs}
    for value, need in need_a.items():
        new_a[value] -= need
    for value, need in need_b.items():
        new_b[value] -= need
    for a, b, count in plan.steps:
        if a > b:
            new_a[a - b] = new_a.get(a - b, 0) + count
        else:
            new_b[b - a] = new_b.get(b - a, 0) + count
    runs_a = tuple(sorted(((v, c) for v, c in new_a.items() if c > 0), reverse=True))
    runs_b = tuple(sorted(((v, c) for v, c in new_b.items() if c > 0), reverse=True))
    if not runs_a:
        raise EmptyResultError("plan would empty the first multiset")
    if not runs_b:
        raise EmptyResultError("plan would empty the second multiset")
    return pair_canonical(Multiset(runs_a), Multiset(runs_b))


def derive_chain(p: Pair, steps: Sequence[tuple[int, int]]) -> Pair:
    """Left fold of derive: each step sees the pair produced so far.

    Unlike derive_product, later steps may consume previously produced
    differences.  The first failing step raises with its index on the
    exception's `step` attribute.
    """
    current = p
    for i, (a, b) in enumerate(steps):
        try:
            current = derive(current, a, b)
        except DerivationError as e:
            e.step = i
            raise
    return current


def split_index(x: Sequence[int], y: Sequence[int]) -> int:
    """The unique t with y_1 + ... + y_t <= sum(x) < y_1 + ... + y_{t+1}.

    Defined when y_1 <= sum(x) < sum(y); then 1 <= t < len(y).
    """
    _check_positive(x, "x")
    _check_positive(y, "y")
    total_x = sum(x)
    if y[0] > total_x:
        raise NoSplitError(f"y[0]={y[0]} already exceeds sum(x)={total_x}")
    if sum(y) <= total_x:
        raise NoSplitError(f"sum(y)={sum(y)} does not exceed sum(x)={total_x}")
    prefix = 0
    for j, val in enumerate(y, start=1):
        prefix += val
        if prefix > total_x:
            return j - 1
    raise AssertionError("unreachable: sum(y) > sum(x) was checked")


def _check_positive(seq: Sequence[int], name: str) -> None:
    if not seq:
        raise NoSplitError(f"{name} must be nonempty")
    if any(v <= 0 for v in seq):
        raise NoSplitError(f"{name} must contain positive integers only")


@dataclass(frozen=True, slots=True)
class AllocationResult:
    """Marble allocation: z[i][j] marbles of color j in bin i.

    Columns 0..t-1 are the fully placed colors (column sums equal y_j),
    column t is the residual capacity of each bin, and the slack
    invariant y_{t+1} > sum of residuals holds strictly.
    """

    t: int
    z: tuple[tuple[int, ...], ...]

    def residuals(self) -> tuple[int, ...]:
        return tuple(row[self.t] for row in self.z)


def allocate_marbles(x: Sequence[int], y: Sequence[int], t: int) -> AllocationResult:
    """Distribute y_1..y_t marbles into bins of capacity x_i, greedily.

    Colors are placed in order, each filling bins in order up to
    capacity; the final column records what capacity is left.  Requires
    t == split_index(x, y).
    """
    expected = split_index(x, y)
    if t != expected:
        raise BadSplitError(f"t={t} is not the split index {expected}")
    n = len(x)
    z = [[0] * (t + 1) for _ in range(n)]
    used = [0] * n
    i = 0
    for j in range(t):
        marbles = y[j]
        while marbles > 0:
            capacity = x[i] - used[i]
            if capacity == 0:
                i += 1
                continue
            put = min(capacity, marbles)
            z[i][j] += put
            used[i] += put
            marbles -= put
    for i in range(n):
        z[i][t] = x[i] - used[i]
    return AllocationResult(t, tuple(tuple(row) for row in z))
