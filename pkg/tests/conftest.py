from __future__ import annotations

import math

import pytest
from hypothesis import settings

from numsgps import NumericalSemigroup, enumerate_genus, enumerate_genus_oracle

settings.register_profile("suite", derandomize=True, max_examples=60)
settings.load_profile("suite")


def combination_members(generators, bound):
    """All sums of generator multiples up to ``bound``, enumerated directly.

    Walks coefficient vectors one generator at a time, which keeps it
    independent of the sieve used by the library.
    """
    gens = sorted(set(generators))
    found = set()

    def extend(i, total):
        if i == len(gens):
            found.add(total)
            return
        value = total
        while value <= bound:
            extend(i + 1, value)
            value += gens[i]

    extend(0, 0)
    return found


def check_semigroup_invariants(s: NumericalSemigroup) -> None:
    """Structural checks shared by several suites."""
    assert s.contains(0)
    f = s.frobenius
    assert f == (max(s.gaps) if s.gaps else -1)
    assert s.genus == len(s.gaps)
    if s.genus >= 1:
        assert f <= 2 * s.genus - 1
    # closure within the table window; sums beyond it are members anyway
    members = [x for x in range(f + 2) if s.contains(x)]
    for a in members:
        for b in members:
            if a + b <= f + 1:
                assert s.contains(a + b), f"{a}+{b} escapes {s!r}"
    gens = s.minimal_generators
    assert math.gcd(*gens) == 1
    assert list(gens) == sorted(gens)
    for g in gens:
        assert s.contains(g)
        assert not any(s.contains(b) and s.contains(g - b) for b in range(1, g // 2 + 1))
    assert NumericalSemigroup(gens) == s


def gap_sets(records):
    return {record.semigroup.gaps for record in records}


@pytest.fixture(scope="session")
def census_by_genus():
    return {g: enumerate_genus(g) for g in range(9)}


@pytest.fixture(scope="session")
def oracle_census_by_genus():
    return {g: enumerate_genus_oracle(g) for g in range(9)}
