from __future__ import annotations

import pytest

from numsgps import (
    CensusRecord,
    LimitExceeded,
    NumericalSemigroup,
    count_genus,
    d2,
    enumerate_genus,
    enumerate_genus_oracle,
    filter_by_d2,
    iter_genus,
)

from conftest import check_semigroup_invariants, gap_sets

# computed by the brute-force census below, not copied from anywhere
EXPECTED_COUNTS = [1, 1, 2, 4, 7, 12, 23, 39, 67]


def test_counts_through_genus_8(census_by_genus):
    assert [len(census_by_genus[g]) for g in range(9)] == EXPECTED_COUNTS
    assert [count_genus(g) for g in range(9)] == EXPECTED_COUNTS


def test_tree_walk_matches_brute_force(census_by_genus, oracle_census_by_genus):
    for g in range(9):
        assert gap_sets(census_by_genus[g]) == gap_sets(oracle_census_by_genus[g])


def test_small_genus_contents(oracle_census_by_genus):
    assert gap_sets(oracle_census_by_genus[0]) == {()}
    assert gap_sets(oracle_census_by_genus[1]) == {NumericalSemigroup([2, 3]).gaps}
    assert gap_sets(oracle_census_by_genus[2]) == {
        NumericalSemigroup([2, 5]).gaps,
        NumericalSemigroup([3, 4, 5]).gaps,
    }
    assert gap_sets(oracle_census_by_genus[3]) == {
        NumericalSemigroup([2, 7]).gaps,
        NumericalSemigroup([3, 4]).gaps,
        NumericalSemigroup([3, 5, 7]).gaps,
        NumericalSemigroup([4, 5, 6, 7]).gaps,
    }


def test_every_record_is_unique(census_by_genus):
    for g in range(9):
        seen = gap_sets(census_by_genus[g])
        assert len(seen) == len(census_by_genus[g])


def test_parents_exist_one_level_up(census_by_genus):
    for g in range(1, 9):
        previous = gap_sets(census_by_genus[g - 1])
        for rec in census_by_genus[g]:
            gaps = rec.semigroup.gaps
            # the generator removed at creation is the current largest gap
            parent_gaps = gaps[:-1]
            assert parent_gaps in previous
            parent = NumericalSemigroup.from_gaps(parent_gaps)
            assert gaps[-1] in parent.minimal_generators
            assert gaps[-1] > parent.frobenius


def test_counts_strictly_increase_from_genus_2(census_by_genus):
    counts = [len(census_by_genus[g]) for g in range(9)]
    for g in range(2, 8):
        assert counts[g] < counts[g + 1]


def test_record_fields_match_the_semigroup(census_by_genus):
    for g in range(9):
        for rec in census_by_genus[g]:
            s = rec.semigroup
            assert rec.genus == s.genus == g
            assert rec.frobenius == s.frobenius
            assert rec.multiplicity == s.multiplicity
            assert rec.minimal_generators == s.minimal_generators
            assert rec == CensusRecord.from_semigroup(s)
            assert NumericalSemigroup(rec.minimal_generators) == s


def test_enumeration_order_is_deterministic():
    first = enumerate_genus(4)
    second = list(iter_genus(4))
    assert first == second
    # children are explored by increasing removed generator
    genus2 = [rec.semigroup for rec in enumerate_genus(2)]
    assert genus2 == [NumericalSemigroup([3, 4, 5]), NumericalSemigroup([2, 5])]


def test_tree_semigroups_satisfy_invariants(census_by_genus):
    for rec in census_by_genus[6]:
        check_semigroup_invariants(rec.semigroup)


def test_genus_ceiling():
    with pytest.raises(LimitExceeded):
        enumerate_genus(26)
    with pytest.raises(LimitExceeded):
        count_genus(7, ceiling=6)
    assert count_genus(6, ceiling=6) == 23
    with pytest.raises(ValueError):
        enumerate_genus(-1)


def test_oracle_genus_cap():
    with pytest.raises(LimitExceeded):
        enumerate_genus_oracle(9)


def test_filter_by_d2(census_by_genus):
    pool = [rec for g in range(6) for rec in census_by_genus[g]]
    over_345 = filter_by_d2(pool, NumericalSemigroup([3, 4, 5]))
    named = {
        NumericalSemigroup([3, 5, 7]).gaps,
        NumericalSemigroup([3, 5]).gaps,
        NumericalSemigroup([3, 7, 8]).gaps,
        NumericalSemigroup([5, 6, 7, 8]).gaps,
    }
    assert named <= gap_sets(over_345)

    small_pool = [rec for g in range(3) for rec in census_by_genus[g]]
    over_full = filter_by_d2(small_pool, NumericalSemigroup([1]))
    assert gap_sets(over_full) == {
        (),
        NumericalSemigroup([2, 3]).gaps,
        NumericalSemigroup([2, 5]).gaps,
    }

    assert filter_by_d2([], NumericalSemigroup([2, 3])) == []


def test_filtered_records_actually_halve_to_the_base(census_by_genus):
    pool = [rec for g in range(6) for rec in census_by_genus[g]]
    base = NumericalSemigroup([2, 3])
    for rec in filter_by_d2(pool, base):
        assert d2(rec.semigroup) == base
