"""Genus-indexed enumeration of numerical semigroups.

The census walks the semigroup tree: the root is the full monoid and
the children of a semigroup are obtained by removing one minimal
generator larger than the Frobenius number. Re-adding the largest gap
recovers the parent, so every semigroup of genus g is reached exactly
once at depth g. A deliberately naive enumeration over candidate gap
sets doubles as an independent check at small genus.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

from .core import NotClosed, NumericalSemigroup, SemigroupError
from .doubling import d2

DEFAULT_GENUS_CEILING = 25
ORACLE_GENUS_LIMIT = 8


class LimitExceeded(SemigroupError):
    """An enumeration request beyond the configured genus ceiling."""


@dataclass(frozen=True)
class CensusRecord:
    """One enumerated semigroup with its headline invariants."""

    semigroup: NumericalSemigroup
    genus: int
    frobenius: int
    multiplicity: int
    minimal_generators: tuple[int, ...]

    @classmethod
    def from_semigroup(cls, s: NumericalSemigroup) -> CensusRecord:
        return cls(
            semigroup=s,
            genus=s.genus,
            frobenius=s.frobenius,
            multiplicity=s.multiplicity,
            minimal_generators=s.minimal_generators,
        )


def _check_genus(genus: int, ceiling: int | None) -> None:
    limit = DEFAULT_GENUS_CEILING if ceiling is None else ceiling
    if genus < 0:
        raise ValueError(f"genus must be non-negative, got {genus}")
    if genus > limit:
        raise LimitExceeded(f"genus {genus} exceeds the enumeration ceiling {limit}")


def _walk(s: NumericalSemigroup, depth: int, target: int) -> Iterator[NumericalSemigroup]:
    # invariant fields of each child are recomputed from its table, not inherited
    if depth == target:
        yield s
        return
    for a in s.minimal_generators:
        if a > s.frobenius:
            yield from _walk(s._without(a), depth + 1, target)


def iter_genus(genus: int, *, ceiling: int | None = None) -> Iterator[CensusRecord]:
    """Stream the census of one genus without materializing it.

    Depth-first order with children explored by increasing removed
    generator, so the stream is reproducible run to run.
    """
    _check_genus(genus, ceiling)
    for s in _walk(NumericalSemigroup([1]), 0, genus):
        yield CensusRecord.from_semigroup(s)


def enumerate_genus(genus: int, *, ceiling: int | None = None) -> list[CensusRecord]:
    """All numerical semigroups of the given genus, each exactly once."""
    return list(iter_genus(genus, ceiling=ceiling))


def count_genus(genus: int, *, ceiling: int | None = None) -> int:
    """Number of numerical semigroups of the given genus."""
    _check_genus(genus, ceiling)
    return sum(1 for _ in _walk(NumericalSemigroup([1]), 0, genus))


def enumerate_genus_oracle(genus: int) -> list[CensusRecord]:
    """Brute-force census: filter all genus-sized subsets of [1, 2*genus - 1].

    Complete because every gap of a genus-g semigroup is at most
    2*g - 1. Kept naive on purpose as an independent check of the tree
    walk, and capped accordingly.
    """
    if genus < 0:
        raise ValueError(f"genus must be non-negative, got {genus}")
    if genus > ORACLE_GENUS_LIMIT:
        raise LimitExceeded(f"the brute-force census is limited to genus {ORACLE_GENUS_LIMIT}")
    records = []
    for combo in itertools.combinations(range(1, 2 * genus), genus):
        try:
            records.append(CensusRecord.from_semigroup(NumericalSemigroup.from_gaps(combo)))
        except NotClosed:
            continue
    return records


def filter_by_d2(records: Iterable[CensusRecord], base: NumericalSemigroup) -> list[CensusRecord]:
    """Keep the records whose halving equals ``base``."""
    return [record for record in records if d2(record.semigroup) == base]
