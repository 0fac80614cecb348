"""Core numerical semigroup arithmetic.

A numerical semigroup is a subset of the non-negative integers that
contains 0, is closed under addition and leaves out only finitely many
integers (its gaps). The headline invariants are the gap set, the genus
(number of gaps), the Frobenius number (largest gap, -1 when there are
none) and the multiplicity (least positive member).

Membership is answered from a dense boolean table covering [0, F+1],
where F is the Frobenius number; every integer above F is a member, so
the table is a complete description. Instances are immutable and
hashable, and two instances compare equal exactly when their gap sets
agree, no matter how they were constructed.
"""

from __future__ import annotations

import math
from typing import Iterable


class SemigroupError(Exception):
    """Base class for the domain errors raised by this package."""


class NotNumerical(SemigroupError):
    """Generators whose gcd exceeds 1 leave an infinite complement."""


class NotClosed(SemigroupError):
    """A candidate gap set whose complement is not closed under addition."""


class NotMember(SemigroupError):
    """An operation needed a member of the semigroup and got a non-member."""


def _canonical_generators(generators: Iterable[int]) -> tuple[int, ...]:
    gens = sorted(set(generators))
    if not gens:
        raise NotNumerical("at least one generator is required")
    if gens[0] < 1:
        raise ValueError(f"generators must be positive integers, got {gens[0]}")
    if math.gcd(*gens) != 1:
        raise NotNumerical(
            f"gcd of generators is {math.gcd(*gens)}; the complement would be infinite"
        )
    return tuple(gens)


def _sieve_table(gens: tuple[int, ...]) -> bytearray:
    """Membership table for the monoid generated by ``gens``.

    The window grows geometrically until it contains a run of m
    consecutive members, where m is the least generator. Such a run
    certifies that every larger integer is a member (keep adding m), so
    the Frobenius number sits just below the run and the table can be
    cut there. No closed-form bound on F is assumed.
    """
    m = gens[0]
    bound = gens[-1] + (gens[-2] if len(gens) > 1 else gens[-1])
    while True:
        table = bytearray(bound + 1)
        table[0] = 1
        for i in range(bound + 1):
            if not table[i]:
                continue
            for g in gens:
                j = i + g
                if j <= bound:
                    table[j] = 1
        run = 0
        for i in range(bound + 1):
            run = run + 1 if table[i] else 0
            if run == m:
                first = i - m + 1
                return table[: first + 1]
        bound *= 2


def _validated_gap_table(gap_list: list[int]) -> bytearray:
    """Table for the complement of ``gap_list``, raising NotClosed on bad sets."""
    if not gap_list:
        return bytearray(b"\x01")
    largest = gap_list[-1]
    table = bytearray(b"\x01" * (largest + 2))
    for x in gap_list:
        table[x] = 0
    members = [i for i in range(1, largest + 1) if table[i]]
    for idx, a in enumerate(members):
        if 2 * a > largest:
            break
        for b in members[idx:]:
            total = a + b
            if total > largest:
                break
            if not table[total]:
                raise NotClosed(f"{a} and {b} would be members but their sum {total} is a gap")
    return table


class NumericalSemigroup:
    """A cofinite additive submonoid of the non-negative integers.

    Build instances from generators or from a gap set:

    >>> s = NumericalSemigroup([3, 5])
    >>> s.gaps
    (1, 2, 4, 7)
    >>> NumericalSemigroup.from_gaps([1, 2, 4, 7]) == s
    True

    Redundant or duplicated generators are accepted and canonicalized
    silently; ``minimal_generators`` always holds the unique minimal
    generating set. All derived data is computed once at construction,
    after which instances are immutable and safe to share.
    """

    __slots__ = ("_table", "_frobenius", "_genus", "_gaps", "_multiplicity", "_minimal_generators")

    def __init__(self, generators: Iterable[int]):
        self._init_from_table(_sieve_table(_canonical_generators(generators)))

    @classmethod
    def from_generators(cls, generators: Iterable[int]) -> NumericalSemigroup:
        """The least numerical semigroup containing ``generators``."""
        return cls(generators)

    @classmethod
    def from_gaps(cls, gaps: Iterable[int]) -> NumericalSemigroup:
        """The numerical semigroup whose gap set is exactly ``gaps``.

        Raises NotClosed when no such semigroup exists, i.e. when the
        complement of the gap set is not closed under addition.
        """
        gap_list = sorted(set(gaps))
        if gap_list and gap_list[0] < 1:
            raise ValueError(f"gaps must be positive integers, got {gap_list[0]}")
        obj = cls.__new__(cls)
        obj._init_from_table(_validated_gap_table(gap_list))
        return obj

    @classmethod
    def _from_table(cls, table: bytearray) -> NumericalSemigroup:
        # trusted path: the caller guarantees the complement is closed
        obj = cls.__new__(cls)
        obj._init_from_table(table)
        return obj

    def _init_from_table(self, table) -> None:
        last_gap = -1
        for i in range(len(table) - 1, -1, -1):
            if not table[i]:
                last_gap = i
                break
        trimmed = bytes(table[: last_gap + 2])
        if len(trimmed) < last_gap + 2:
            trimmed += b"\x01"
        if not trimmed[0]:
            raise ValueError("0 must be a member of every numerical semigroup")
        self._table = trimmed
        self._frobenius = last_gap
        self._gaps = tuple(i for i in range(len(trimmed)) if not trimmed[i])
        self._genus = len(self._gaps)
        if last_gap < 0:
            self._multiplicity = 1
        else:
            self._multiplicity = next(i for i in range(1, len(trimmed)) if trimmed[i])
        self._minimal_generators = self._compute_minimal_generators()
        if self._genus >= 1 and self._frobenius > 2 * self._genus - 1:
            raise AssertionError("Frobenius number exceeds 2*genus - 1; construction bug")

    def _compute_minimal_generators(self) -> tuple[int, ...]:
        # a generator other than the multiplicity m must lie in (m, F+m];
        # anything above F+m splits off an m
        m = self._multiplicity
        gens = [m]
        for x in range(m + 1, self._frobenius + m + 1):
            if self.contains(x) and not self._decomposable(x):
                gens.append(x)
        return tuple(gens)

    def _decomposable(self, x: int) -> bool:
        for b in range(self._multiplicity, x // 2 + 1):
            if self.contains(b) and self.contains(x - b):
                return True
        return False

    def contains(self, x: int) -> bool:
        """Whether ``x`` is a member; negative integers never are."""
        if x < 0:
            return False
        if x >= len(self._table):
            return True
        return bool(self._table[x])

    def __contains__(self, x: int) -> bool:
        return self.contains(x)

    @property
    def gaps(self) -> tuple[int, ...]:
        """The gap set in ascending order."""
        return self._gaps

    @property
    def genus(self) -> int:
        """Number of gaps."""
        return self._genus

    @property
    def frobenius(self) -> int:
        """Largest gap, or -1 when there are no gaps."""
        return self._frobenius

    @property
    def multiplicity(self) -> int:
        """Least positive member."""
        return self._multiplicity

    @property
    def minimal_generators(self) -> tuple[int, ...]:
        """The unique minimal generating set, ascending."""
        return self._minimal_generators

    def apery_set(self, modulus: int) -> tuple[int, ...]:
        """Least member of each residue class mod ``modulus``, indexed by residue.

        ``modulus`` must be a positive member; entry i is the smallest
        member congruent to i, so the result always has exactly
        ``modulus`` elements and starts with 0.
        """
        if modulus < 1:
            raise ValueError(f"the Apery modulus must be positive, got {modulus}")
        if not self.contains(modulus):
            raise NotMember(f"{modulus} is not a member of {self!r}")
        least = []
        for residue in range(modulus):
            x = residue
            while not self.contains(x):
                x += modulus
            least.append(x)
        return tuple(least)

    def _without(self, generator: int) -> NumericalSemigroup:
        """Remove one minimal generator above the Frobenius number.

        Exactly the child step of the semigroup tree: closure survives
        because a sum of two positive members can never equal a minimal
        generator.
        """
        if generator <= self._frobenius or generator not in self._minimal_generators:
            raise ValueError(f"{generator} is not a removable generator of {self!r}")
        table = bytearray(self._table)
        table.extend(b"\x01" * (generator + 2 - len(table)))
        table[generator] = 0
        return NumericalSemigroup._from_table(table)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self._table == other._table

    def __hash__(self) -> int:
        return hash(self._table)

    def __repr__(self) -> str:
        return f"NumericalSemigroup({list(self._minimal_generators)})"
