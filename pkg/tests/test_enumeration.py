import json

import pytest

from zspairs import (
    EnumConfig,
    KTooSmallError,
    ResourceLimitError,
    compute_ell,
    enumerate_irreducible,
    enumerate_multisets,
    extremal_construction,
    extremal_pairs,
    is_irreducible_naive,
    pair_to_json,
    verify_theorem_bounds,
)
from zspairs.core import Pair
from helpers import ms, pair


class TestEnumerateMultisets:
    def test_bounded_parts(self):
        assert list(enumerate_multisets(2, 3)) == [ms(2, 1), ms(1, 1, 1)]

    def test_all_partitions_in_order(self):
        assert list(enumerate_multisets(5, 5)) == [
            ms(5),
            ms(4, 1),
            ms(3, 2),
            ms(3, 1, 1),
            ms(2, 2, 1),
            ms(2, 1, 1, 1),
            ms(1, 1, 1, 1, 1),
        ]

    def test_unit_alphabet(self):
        assert list(enumerate_multisets(1, 4)) == [ms(1, 1, 1, 1)]

    def test_yields_each_once(self):
        seen = list(enumerate_multisets(4, 9))
        assert len(seen) == len(set(seen))
        assert all(m.sigma == 9 and m.max_value <= 4 for m in seen)


class TestEnumConfig:
    def test_default_sum_cap(self):
        assert EnumConfig(k=3).sum_cap == 9

    def test_brute_limit(self):
        with pytest.raises(ResourceLimitError):
            EnumConfig(k=7, mode="brute")

    def test_pruned_limit(self):
        EnumConfig(k=9, mode="pruned")
        with pytest.raises(ResourceLimitError):
            EnumConfig(k=10, mode="pruned")

    def test_bad_values(self):
        with pytest.raises(ValueError):
            EnumConfig(k=0)
        with pytest.raises(ValueError):
            EnumConfig(k=2, mode="magic")
        with pytest.raises(ValueError):
            EnumConfig(k=2, sum_cap=0)
        with pytest.raises(ValueError):
            EnumConfig(k=2, length_window=(4, 2))


class TestEnumerateIrreducible:
    def test_k2_exact_set(self):
        found = list(enumerate_irreducible(EnumConfig(k=2, sum_cap=4)))
        assert found == [pair((1,), (1,)), pair((2,), (2,)), pair((2,), (1, 1))]

    def test_contains_worked_example(self):
        found = enumerate_irreducible(EnumConfig(k=7, sum_cap=23, mode="pruned"))
        assert pair((7, 7, 7, 1, 1), (6, 6, 6, 5)) in list(found)

    def test_contains_extremal(self):
        found = list(enumerate_irreducible(EnumConfig(k=3, sum_cap=6)))
        assert pair((3, 3), (2, 2, 2)) in found

    def test_agrees_with_naive_oracle(self):
        # Everything the stream yields is irreducible per the literal
        # definition, and nothing balanced is missed.
        cfg = EnumConfig(k=3, sum_cap=9)
        found = set(enumerate_irreducible(cfg))
        for total in range(1, 10):
            candidates = list(enumerate_multisets(3, total))
            for i, a in enumerate(candidates):
                for b in candidates[i:]:
                    p = Pair(a, b)
                    assert (p in found) == is_irreducible_naive(p)

    def test_length_window(self):
        cfg = EnumConfig(k=3, sum_cap=9, length_window=(5, 5))
        assert list(enumerate_irreducible(cfg)) == [pair((3, 3), (2, 2, 2))]

    def test_monotone_in_sum_cap(self):
        small = set(enumerate_irreducible(EnumConfig(k=3, sum_cap=6)))
        large = set(enumerate_irreducible(EnumConfig(k=3, sum_cap=9)))
        assert small <= large

    def test_mode_agreement(self):
        for k in (1, 2, 3, 4):
            brute = list(enumerate_irreducible(EnumConfig(k=k, mode="brute")))
            pruned = list(enumerate_irreducible(EnumConfig(k=k, mode="pruned")))
            assert brute == pruned

    def test_worker_count_does_not_change_output(self):
        cfg = EnumConfig(k=4, sum_cap=16)
        serial = [pair_to_json(p) for p in enumerate_irreducible(cfg, workers=1)]
        fanned = [pair_to_json(p) for p in enumerate_irreducible(cfg, workers=2)]
        assert serial == fanned


class TestComputeEll:
    def test_k2(self):
        report = compute_ell(EnumConfig(k=2, sum_cap=8))
        assert report.ell == 3
        assert report.witnesses == (pair((2,), (1, 1)),)

    def test_k3(self):
        assert compute_ell(EnumConfig(k=3, sum_cap=12)).ell == 5

    def test_k1_edge(self):
        report = compute_ell(EnumConfig(k=1, sum_cap=4))
        assert report.ell == 2
        assert report.witnesses == (pair((1,), (1,)),)

    def test_report_discloses_caps(self):
        report = compute_ell(EnumConfig(k=2, sum_cap=8))
        obj = report.to_obj()
        assert obj["mode"] == "brute"
        assert obj["sum_cap"] == 8
        assert obj["k"] == 2
        assert set(obj) == {
            "k",
            "ell",
            "witnesses",
            "pairs_scanned",
            "irreducible_count",
            "mode",
            "sum_cap",
            "wall_time",
        }
        json.dumps(obj)  # serializable as a single document

    def test_counts_are_plausible(self):
        report = compute_ell(EnumConfig(k=2, sum_cap=4))
        assert report.irreducible_count == 3
        assert report.pairs_scanned >= report.irreducible_count


class TestExtremalPairs:
    def test_k3(self):
        assert extremal_pairs(EnumConfig(k=3, sum_cap=12)) == [
            pair((3, 3), (2, 2, 2))
        ]

    def test_k2(self):
        assert extremal_pairs(EnumConfig(k=2, sum_cap=8)) == [pair((2,), (1, 1))]

    def test_k4(self):
        assert extremal_pairs(EnumConfig(k=4, sum_cap=20)) == [
            pair((4, 4, 4), (3, 3, 3, 3))
        ]

    def test_k1_rejected(self):
        with pytest.raises(KTooSmallError):
            extremal_pairs(EnumConfig(k=1))

    def test_matches_construction(self):
        for k in (2, 3, 4):
            assert extremal_pairs(EnumConfig(k=k)) == [extremal_construction(k)]


class TestTheoremBounds:
    def test_worked_example(self):
        assert verify_theorem_bounds(pair((7, 7, 7, 1, 1), (6, 6, 6, 5)))

    def test_smallest_pair(self):
        assert verify_theorem_bounds(pair((1,), (1,)))

    def test_extremal_is_tight(self):
        p = pair((3, 3), (2, 2, 2))
        assert verify_theorem_bounds(p)
        assert p.a.cardinality == p.b.max_value
        assert p.b.cardinality == p.a.max_value

    def test_all_enumerated_pairs_satisfy_bounds(self):
        for p in enumerate_irreducible(EnumConfig(k=4, sum_cap=16)):
            assert verify_theorem_bounds(p)

    def test_disjointness_of_longer_pairs(self):
        for p in enumerate_irreducible(EnumConfig(k=4, sum_cap=16)):
            if p.length > 2:
                assert not set(p.a.values()) & set(p.b.values())
