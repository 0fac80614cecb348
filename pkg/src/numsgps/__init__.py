"""Computations with numerical semigroups.

The package covers gap arithmetic (membership, gaps, genus, Frobenius
number, Apery sets, minimal generators), the halving map d2 together
with double-cover decompositions and halving preimages, a genus-indexed
census of all numerical semigroups, and a classifier for the
double-covering-type property. A command line front end lives in
``numsgps.cli``.
"""

from .census import (
    DEFAULT_GENUS_CEILING,
    ORACLE_GENUS_LIMIT,
    CensusRecord,
    LimitExceeded,
    count_genus,
    enumerate_genus,
    enumerate_genus_oracle,
    filter_by_d2,
    iter_genus,
)
from .classify import ClassificationVerdict, Verdict, classify
from .core import (
    NotClosed,
    NotMember,
    NotNumerical,
    NumericalSemigroup,
    SemigroupError,
)
from .doubling import (
    BoundTooSmall,
    DoubleCoverDecomposition,
    d2,
    decompose,
    min_odd,
    preimages,
    reassemble,
)

__version__ = "0.1.0"

__all__ = [
    "BoundTooSmall",
    "CensusRecord",
    "ClassificationVerdict",
    "DEFAULT_GENUS_CEILING",
    "DoubleCoverDecomposition",
    "LimitExceeded",
    "NotClosed",
    "NotMember",
    "NotNumerical",
    "NumericalSemigroup",
    "ORACLE_GENUS_LIMIT",
    "SemigroupError",
    "Verdict",
    "classify",
    "count_genus",
    "d2",
    "decompose",
    "enumerate_genus",
    "enumerate_genus_oracle",
    "filter_by_d2",
    "iter_genus",
    "min_odd",
    "preimages",
    "reassemble",
]
