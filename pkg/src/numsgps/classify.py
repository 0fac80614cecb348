"""Double-covering-type classification.

A numerical semigroup is of double covering type when it occurs as the
Weierstrass semigroup of a ramification point on a degree-2 covering of
smooth curves. Classification is complete exactly when the halving has
genus at most 2; beyond that the honest answer is Unknown. Decided
verdicts carry a provenance string naming the fact that settles them,
and positive verdicts carry the halving decomposition as a witness.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .core import NumericalSemigroup
from .doubling import DoubleCoverDecomposition, d2, decompose


class Verdict(enum.Enum):
    DOUBLE_COVERING_TYPE = "DoubleCoveringType"
    NOT_DOUBLE_COVERING_TYPE = "NotDoubleCoveringType"
    UNKNOWN = "Unknown"


PROVENANCE_BELOW_GENUS_BOUND = (
    "necessary condition fails: the genus is below twice the genus of the halving"
)
PROVENANCE_RATIONAL_BASE = (
    "halving of genus 0: the semigroup is <2, 2g+1>, realized by a double cover of a rational curve"
)
PROVENANCE_RATIONAL_BASE_DEGENERATE = (
    PROVENANCE_RATIONAL_BASE + " (degenerate: the full monoid itself)"
)
PROVENANCE_ELLIPTIC_BASE = (
    "halving <2,3>: the fibre consists of five known families, all realized on double covers of elliptic curves"
)
PROVENANCE_BASE_2_5 = "halving <2,5>: every semigroup in this fibre is of double covering type"
PROVENANCE_BASE_3_4_5 = (
    "halving <3,4,5>: every semigroup in this fibre except <3,5,7> is of double covering type"
)
PROVENANCE_BASE_3_4_5_EXPLICIT = (
    PROVENANCE_BASE_3_4_5 + "; settled by explicit covers for <5,6,7,8>, <3,7,8> and <3,5>"
)
PROVENANCE_EXCEPTION_3_5_7 = "<3,5,7> has genus 3 < 4, below twice the genus of its halving <3,4,5>"
PROVENANCE_UNDECIDED = "no classification is available once the halving has genus 3 or more"


@dataclass(frozen=True)
class ClassificationVerdict:
    """Outcome of :func:`classify` plus the fact justifying it."""

    verdict: Verdict
    provenance: str
    witness: DoubleCoverDecomposition | None = None

    def __post_init__(self) -> None:
        if self.verdict is not Verdict.UNKNOWN and not self.provenance:
            raise ValueError("decided verdicts require a provenance")
        if (self.witness is not None) != (self.verdict is Verdict.DOUBLE_COVERING_TYPE):
            raise ValueError("a witness accompanies exactly the positive verdict")


_TWO_THREE = NumericalSemigroup([2, 3])
_TWO_FIVE = NumericalSemigroup([2, 5])
_THREE_FOUR_FIVE = NumericalSemigroup([3, 4, 5])
_THREE_FIVE_SEVEN = NumericalSemigroup([3, 5, 7])
_EXPLICIT_CASES = (
    NumericalSemigroup([5, 6, 7, 8]),
    NumericalSemigroup([3, 7, 8]),
    NumericalSemigroup([3, 5]),
)


def _elliptic_fibre_members(genus: int) -> tuple[NumericalSemigroup, ...]:
    """The complete fibre over <2,3> at one genus, instantiated concretely."""
    if genus == 2:
        return (_THREE_FOUR_FIVE,)
    if genus == 3:
        return (NumericalSemigroup([3, 4]), NumericalSemigroup([4, 5, 6, 7]))
    return (
        NumericalSemigroup([4, 6, 2 * genus - 3]),
        NumericalSemigroup([4, 6, 2 * genus - 1, 2 * genus + 1]),
    )


def classify(s: NumericalSemigroup) -> ClassificationVerdict:
    """Decide whether ``s`` is of double covering type.

    Rules, checked in order:

    1. genus(s) < 2 * genus(d2(s)): impossible, negative verdict.
    2. d2(s) has genus 0: s is <2, 2g+1>, positive.
    3. d2(s) = <2,3>: s lies in one of five known families, positive.
    4. d2(s) = <2,5>: positive.
    5. d2(s) = <3,4,5>: positive unless s = <3,5,7>.
    6. Otherwise Unknown.

    Rules 2 and 3 re-verify that ``s`` has the shape the rule promises;
    a mismatch would be a bug rather than bad input and raises
    RuntimeError. The function never raises on valid semigroups.
    """
    base = d2(s)
    g = base.genus
    gt = s.genus
    if gt < 2 * g:
        return ClassificationVerdict(Verdict.NOT_DOUBLE_COVERING_TYPE, PROVENANCE_BELOW_GENUS_BOUND)
    if g == 0:
        expected = NumericalSemigroup([2, 2 * gt + 1])
        if s != expected:
            raise RuntimeError(f"{s!r} halves to the full monoid but is not <2, 2g+1>")
        provenance = PROVENANCE_RATIONAL_BASE_DEGENERATE if gt == 0 else PROVENANCE_RATIONAL_BASE
        return ClassificationVerdict(Verdict.DOUBLE_COVERING_TYPE, provenance, decompose(s))
    if base == _TWO_THREE:
        if s not in _elliptic_fibre_members(gt):
            raise RuntimeError(f"{s!r} halves to <2,3> but matches none of the five known families")
        return ClassificationVerdict(Verdict.DOUBLE_COVERING_TYPE, PROVENANCE_ELLIPTIC_BASE, decompose(s))
    if base == _TWO_FIVE:
        return ClassificationVerdict(Verdict.DOUBLE_COVERING_TYPE, PROVENANCE_BASE_2_5, decompose(s))
    if base == _THREE_FOUR_FIVE:
        if s == _THREE_FIVE_SEVEN:
            return ClassificationVerdict(Verdict.NOT_DOUBLE_COVERING_TYPE, PROVENANCE_EXCEPTION_3_5_7)
        if s in _EXPLICIT_CASES:
            provenance = PROVENANCE_BASE_3_4_5_EXPLICIT
        else:
            provenance = PROVENANCE_BASE_3_4_5
        return ClassificationVerdict(Verdict.DOUBLE_COVERING_TYPE, provenance, decompose(s))
    return ClassificationVerdict(Verdict.UNKNOWN, PROVENANCE_UNDECIDED)
