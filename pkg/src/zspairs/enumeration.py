"""Exhaustive and pruned search over irreducible pairs.

The survey runs sum by sum: for each common sum S up to a cap, every
unordered pair of same-sum multisets with values in [1, k] is a
candidate.  Brute mode tests them all and consults no structural theorem,
so whatever it reports about maximum lengths is discovered, not assumed.
Pruned mode exploits the proved bounds (each side's cardinality is at
most the other side's maximum, and sides of a longer irreducible pair are
disjoint) to cut candidate generation, and is validated against brute
mode on overlapping ranges.

The set of irreducible pairs for a fixed k is infinite a priori, so every
report states the sum cap it was computed under; nothing is extrapolated.
Work splits cleanly by S, which is what the optional worker pool
parallelizes over; results merge in S order, so worker count never
changes output.
"""

from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from typing import Iterator, Sequence

from .core import KTooSmallError, Multiset, Pair
from .formats import pair_to_obj
from .irreducibility import _fold_run, _interior_mask

BRUTE_MAX_K = 6
PRUNED_MAX_K = 9

_MODES = ("brute", "pruned")


class ResourceLimitError(ValueError):
    """k is beyond what the chosen mode can scan in reasonable time."""


@dataclass(frozen=True)
class EnumConfig:
    """Search scope: alphabet bound k, sum cap (default k*k), optional
    (lo, hi) filter on pair length, and the mode."""

    k: int
    sum_cap: int | None = None
    length_window: tuple[int, int] | None = None
    mode: str = "brute"

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError(f"k must be positive, got {self.k}")
        if self.mode not in _MODES:
            raise ValueError(f"mode must be one of {_MODES}, got {self.mode!r}")
        limit = BRUTE_MAX_K if self.mode == "brute" else PRUNED_MAX_K
        if self.k > limit:
            raise ResourceLimitError(
                f"k={self.k} exceeds the {self.mode}-mode limit of {limit}; "
                f"the candidate space grows too fast beyond it"
            )
        if self.sum_cap is None:
            object.__setattr__(self, "sum_cap", self.k * self.k)
        if self.sum_cap < 1:
            raise ValueError(f"sum_cap must be positive, got {self.sum_cap}")
        if self.length_window is not None:
            lo, hi = self.length_window
            if lo < 1 or hi < lo:
                raise ValueError(f"bad length window ({lo}, {hi})")


@dataclass(frozen=True)
class EllReport:
    """Outcome of a maximum-length survey, with the caps it ran under."""

    k: int
    ell: int
    witnesses: tuple[Pair, ...]
    pairs_scanned: int
    irreducible_count: int
    mode: str
    sum_cap: int
    wall_time: float

    def to_obj(self) -> dict:
        return {
            "k": self.k,
            "ell": self.ell,
            "witnesses": [pair_to_obj(p) for p in self.witnesses],
            "pairs_scanned": self.pairs_scanned,
            "irreducible_count": self.irreducible_count,
            "mode": self.mode,
            "sum_cap": self.sum_cap,
            "wall_time": self.wall_time,
        }


def _partitions(remaining: int, max_part: int) -> Iterator[tuple[int, ...]]:
    # Element tuples in descending-lexicographic order.
    if remaining == 0:
        yield ()
        return
    for v in range(min(max_part, remaining), 0, -1):
        for rest in _partitions(remaining - v, v):
            yield (v,) + rest


def _partitions_bounded(
    remaining: int, max_part: int, max_len: int
) -> Iterator[tuple[int, ...]]:
    if remaining == 0:
        yield ()
        return
    if max_len == 0:
        return
    for v in range(min(max_part, remaining), 0, -1):
        if v * max_len < remaining:
            break
        for rest in _partitions_bounded(remaining - v, v, max_len - 1):
            yield (v,) + rest


def _to_runs(parts: tuple[int, ...]) -> tuple[tuple[int, int], ...]:
    return tuple((v, len(list(g))) for v, g in itertools.groupby(parts))


def enumerate_multisets(k: int, total: int) -> Iterator[Multiset]:
    """Every multiset with values in [1, k] and sum exactly `total`,
    yielded once each in descending-lexicographic order."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if total < 1:
        raise ValueError(f"total must be positive, got {total}")
    for parts in _partitions(total, min(k, total)):
        yield Multiset(_to_runs(parts))


def _scan_sum(k: int, total: int, mode: str):
    """All irreducible canonical pairs with common sum `total`, as run
    tuples, plus the number of candidate pairs inspected."""
    if mode == "pruned":
        # Both bounds below cap cardinality at k, so generate only
        # partitions with at most k parts.
        runs_list = [
            _to_runs(p) for p in _partitions_bounded(total, min(k, total), k)
        ]
    else:
        runs_list = [_to_runs(p) for p in _partitions(total, min(k, total))]
    interior = _interior_mask(total)
    masks = []
    for runs in runs_list:
        bits = 1
        for v, c in runs:
            bits = _fold_run(bits, v, c)
        masks.append(bits & interior)
    m = len(runs_list)
    hits = []
    scanned = m * (m + 1) // 2
    if mode == "brute":
        for i in range(m):
            mask_a = masks[i]
            for j in range(i, m):
                if not mask_a & masks[j]:
                    hits.append((runs_list[i], runs_list[j]))
    else:
        cards = [sum(c for _, c in runs) for runs in runs_list]
        maxima = [runs[0][0] for runs in runs_list]
        valsets = [frozenset(v for v, _ in runs) for runs in runs_list]
        for i in range(m):
            mask_a = masks[i]
            for j in range(i, m):
                if cards[i] > maxima[j] or cards[j] > maxima[i]:
                    continue
                if cards[i] + cards[j] > 2 and not valsets[i].isdisjoint(valsets[j]):
                    continue
                if not mask_a & masks[j]:
                    hits.append((runs_list[i], runs_list[j]))
    return hits, scanned


def _scan_task(args: tuple[int, int, str]):
    return _scan_sum(*args)


def _scan_all(cfg: EnumConfig, workers: int):
    """Per-sum scan results for S = 1..sum_cap, in S order."""
    sums = range(1, cfg.sum_cap + 1)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            yield from pool.map(_scan_task, [(cfg.k, S, cfg.mode) for S in sums])
    else:
        for S in sums:
            yield _scan_sum(cfg.k, S, cfg.mode)


def _in_window(cfg: EnumConfig, length: int) -> bool:
    if cfg.length_window is None:
        return True
    lo, hi = cfg.length_window
    return lo <= length <= hi


def enumerate_irreducible(cfg: EnumConfig, workers: int = 1) -> Iterator[Pair]:
    """Every k-irreducible pair with common sum <= sum_cap (and length in
    the window, if one is set), exactly once, in a fixed order: by sum,
    then by descending-lexicographic position of A, then of B."""
    for hits, _ in _scan_all(cfg, workers):
        for runs_a, runs_b in hits:
            p = Pair(Multiset(runs_a), Multiset(runs_b))
            if _in_window(cfg, p.length):
                yield p


def compute_ell(cfg: EnumConfig, workers: int = 1) -> EllReport:
    """Survey the maximum pair length within the configured caps.

    The returned report carries the mode and sum cap, so the value is
    always read as "maximum within this scanned range", never as an
    unqualified claim about all pairs.
    """
    start = time.perf_counter()
    ell = 0
    witnesses: list[Pair] = []
    scanned = 0
    irreducible = 0
    for hits, sc in _scan_all(cfg, workers):
        scanned += sc
        irreducible += len(hits)
        for runs_a, runs_b in hits:
            p = Pair(Multiset(runs_a), Multiset(runs_b))
            if not _in_window(cfg, p.length):
                continue
            if p.length > ell:
                ell = p.length
                witnesses = [p]
            elif p.length == ell:
                witnesses.append(p)
    return EllReport(
        k=cfg.k,
        ell=ell,
        witnesses=tuple(witnesses),
        pairs_scanned=scanned,
        irreducible_count=irreducible,
        mode=cfg.mode,
        sum_cap=cfg.sum_cap,
        wall_time=time.perf_counter() - start,
    )


def extremal_pairs(cfg: EnumConfig, workers: int = 1) -> list[Pair]:
    """All irreducible pairs of length exactly 2k-1 within the caps."""
    if cfg.k <= 1:
        raise KTooSmallError(f"k must be at least 2, got {cfg.k}")
    target = 2 * cfg.k - 1
    narrowed = replace(cfg, length_window=(target, target))
    return list(enumerate_irreducible(narrowed, workers))


def verify_theorem_bounds(p: Pair) -> bool:
    """True iff |A| <= max(B) and |B| <= max(A)."""
    return (
        p.a.cardinality <= p.b.max_value and p.b.cardinality <= p.a.max_value
    )
