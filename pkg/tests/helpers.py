"""Shared constructors and hypothesis strategies for the test suite."""

from __future__ import annotations

from hypothesis import strategies as st

from zspairs import Multiset, Pair, multiset, normalize, pair_canonical


def ms(*elements: int) -> Multiset:
    return multiset(*elements)


def pair(xs: tuple[int, ...], ys: tuple[int, ...]) -> Pair:
    return pair_canonical(multiset(*xs), multiset(*ys))


run_lists = st.lists(
    st.tuples(st.integers(1, 9), st.integers(1, 4)), min_size=1, max_size=5
)

multisets = run_lists.map(normalize)


@st.composite
def balanced_pairs(draw) -> Pair:
    """A canonical pair with equal sums: one random side, the other a
    random composition of the same total."""
    a = draw(multisets)
    remaining = a.sigma
    parts = []
    while remaining > 0:
        part = draw(st.integers(1, min(remaining, 9)))
        parts.append(part)
        remaining -= part
    b = normalize([(v, 1) for v in parts])
    return pair_canonical(a, b)
