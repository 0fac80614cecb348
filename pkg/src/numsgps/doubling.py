"""Halving, doubling and halving preimages of numerical semigroups.

For a numerical semigroup s, ``d2(s)`` keeps the even members and
divides them by two; the result is again a numerical semigroup. In the
other direction every s can be rebuilt from its halving H = d2(s) and
its odd generators: with n the least odd member,

    s = 2*H + <n, n + 2*l1, ..., n + 2*ls>

where n + 2*li runs over the remaining odd minimal generators of s.
The defect r defined by genus(s) = 2*genus(H) + (n-1)/2 - r always
satisfies 0 <= r <= genus(H): the odd gaps below n are exactly the
(n-1)/2 odd integers below n, and x -> (x-n)/2 injects the odd gaps
above n into the gaps of H.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .core import NotClosed, NumericalSemigroup, SemigroupError


class BoundTooSmall(SemigroupError):
    """A preimage search bound below the base genus; the fibre is provably empty."""


def d2(s: NumericalSemigroup) -> NumericalSemigroup:
    """Halve ``s``: the semigroup of all x whose double lies in ``s``."""
    return NumericalSemigroup.from_gaps(x // 2 for x in s.gaps if x % 2 == 0)


def min_odd(s: NumericalSemigroup) -> int:
    """Least odd member of ``s``; one exists because the complement is finite."""
    x = 1
    while not s.contains(x):
        x += 2
    return x


@dataclass(frozen=True)
class DoubleCoverDecomposition:
    """A semigroup written as 2*base + <n, n + 2*l for l in odd_offsets>.

    ``n`` is the least odd member and ``r`` the defect in
    genus = 2*genus(base) + (n-1)/2 - r.
    """

    base: NumericalSemigroup
    n: int
    odd_offsets: tuple[int, ...]
    r: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "odd_offsets", tuple(self.odd_offsets))
        if self.n < 1 or self.n % 2 == 0:
            raise ValueError(f"n must be a positive odd integer, got {self.n}")
        offsets = self.odd_offsets
        if any(l < 1 for l in offsets) or any(a >= b for a, b in zip(offsets, offsets[1:])):
            raise ValueError(f"odd offsets must be strictly increasing positive integers, got {offsets}")
        if not 0 <= self.r <= self.base.genus:
            raise ValueError(f"r must lie in [0, genus(base)] = [0, {self.base.genus}], got {self.r}")

    def reassemble(self) -> NumericalSemigroup:
        """The semigroup these parts describe; inverse of :func:`decompose`."""
        return reassemble(self.base, self.n, self.odd_offsets)


def decompose(s: NumericalSemigroup) -> DoubleCoverDecomposition:
    """Split ``s`` into its halving plus odd generator data.

    The least odd member n is itself a minimal generator (an odd sum of
    two positive members would need a smaller odd member), and the
    remaining odd minimal generators are recorded through their offsets
    (generator - n) / 2. Reassembling the parts is checked to return
    ``s`` exactly before the decomposition is handed out.
    """
    base = d2(s)
    n = min_odd(s)
    offsets = tuple((a - n) // 2 for a in s.minimal_generators if a % 2 == 1 and a != n)
    r = 2 * base.genus + (n - 1) // 2 - s.genus
    dec = DoubleCoverDecomposition(base=base, n=n, odd_offsets=offsets, r=r)
    if dec.reassemble() != s:
        raise AssertionError(f"decomposition of {s!r} does not reassemble to it")
    return dec


def reassemble(
    base: NumericalSemigroup, n: int, odd_offsets: Iterable[int] = ()
) -> NumericalSemigroup:
    """The sum 2*base + <n, n + 2*l for l in odd_offsets> as a semigroup.

    The sum of the two monoids is generated by the doubled minimal
    generators of ``base`` together with the listed odd elements; n odd
    forces the gcd to 1, so the result is always numerical.
    """
    if n < 1 or n % 2 == 0:
        raise ValueError(f"n must be a positive odd integer, got {n}")
    offsets = sorted(set(odd_offsets))
    if offsets and offsets[0] < 1:
        raise ValueError(f"odd offsets must be positive integers, got {offsets[0]}")
    gens = [2 * a for a in base.minimal_generators]
    gens.append(n)
    gens.extend(n + 2 * l for l in offsets)
    return NumericalSemigroup(gens)


def preimages(base: NumericalSemigroup, max_genus: int) -> list[NumericalSemigroup]:
    """Every semigroup that halves to exactly ``base``, up to ``max_genus``.

    A preimage is determined by its odd members: its even members must
    be exactly the doubled ``base``, contributing the doubled gaps, and
    every gap of a genus-g semigroup is at most 2*g - 1. The search
    therefore walks subsets of the odd window [1, 2*max_genus - 1] in
    increasing order, deciding gap-or-member one odd at a time. Three
    facts prune branches early:

    * an odd o outside ``base`` can never be a member (its double would
      be an even member outside the doubled base), so it is a forced
      gap and costs genus budget;
    * once t is a member, every o = t + 2h with h a positive member of
      ``base`` is forced to be a member as well;
    * two members t < t' need (t + t')/2 inside ``base``, their sum
      being even.

    Surviving candidates are validated as gap sets, so sums involving
    odds beyond the window are covered too. The result is duplicate
    free and sorted by genus, then by gap list.
    """
    if max_genus < base.genus:
        raise BoundTooSmall(
            f"no semigroup of genus below {base.genus} halves to {base!r}; "
            f"the doubled gaps alone contribute {base.genus}"
        )
    budget = max_genus - base.genus
    window = range(1, 2 * max_genus, 2)
    even_gaps = tuple(2 * x for x in base.gaps)
    found: list[NumericalSemigroup] = []
    odd_gaps: list[int] = []
    members: list[int] = []

    def walk(i: int) -> None:
        if i == len(window):
            try:
                found.append(NumericalSemigroup.from_gaps(even_gaps + tuple(odd_gaps)))
            except NotClosed:
                pass
            return
        o = window[i]
        if base.contains(o) and all(base.contains((o + t) // 2) for t in members):
            members.append(o)
            walk(i + 1)
            members.pop()
        if len(odd_gaps) < budget and not any(base.contains((o - t) // 2) for t in members):
            odd_gaps.append(o)
            walk(i + 1)
            odd_gaps.pop()

    walk(0)
    found.sort(key=lambda s: (s.genus, s.gaps))
    return found
