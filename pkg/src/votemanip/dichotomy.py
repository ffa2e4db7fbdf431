"""Scoring-vector algebra, the easy/hard manipulation classifier, and
named vector families (plurality, Borda, veto, k-approval, ...).

Coalition manipulation under a nonincreasing integer vector is polynomial
exactly when all entries below the top one are equal; any other shape is
hard.  Hard vectors get two gadget sizes read off their normalized form
(last entry shifted to zero): ``ell`` is one less than the number of zero
entries and ``r = m - ell - 3`` counts the positions between the runner-up
block and the zeros.  Shifting all entries by a constant or scaling them
by a positive factor never changes winners, which is what makes the
normalization harmless.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Mapping

from .core import ElectionError, ScoringVector


class NonPositiveScale(ElectionError):
    """Scaling factor must be >= 1."""


class NotHard(ElectionError):
    """The scoring vector is polynomial-time manipulable."""


class UnsupportedM(ElectionError):
    """The family defines no vector for this candidate count."""


class ExplicitFamilyUnsupported(ElectionError):
    """Per-size vector tables cannot be classified for every size."""


class RuleClass(Enum):
    ALL_EQUAL = "AllEqual"
    PLURALITY_LIKE = "PluralityLike"
    HARD = "Hard"


@dataclass(frozen=True)
class DichotomyClass:
    """Complexity class of a vector, with gadget sizes when hard."""

    tag: RuleClass
    normalized: ScoringVector | None = None
    ell: int | None = None
    r: int | None = None


def shift(alpha: ScoringVector, k: int) -> ScoringVector:
    """Add ``k`` to every entry.  Winners are unchanged; each candidate's
    score moves by exactly ``k`` times the profile's total weight."""
    return ScoringVector(tuple(e + k for e in alpha.entries))


def scale(alpha: ScoringVector, k: int) -> ScoringVector:
    """Multiply every entry by ``k >= 1``; winners are unchanged."""
    if k < 1:
        raise NonPositiveScale(f"scale factor must be >= 1, got {k}")
    return ScoringVector(tuple(e * k for e in alpha.entries))


def normalize_last_zero(alpha: ScoringVector) -> ScoringVector:
    """Shift so the last (smallest) entry becomes 0."""
    return shift(alpha, -alpha.entries[-1])


def classify(alpha: ScoringVector) -> DichotomyClass:
    """Sort a vector into one of the three manipulation-complexity classes.

    AllEqual: every entry equal (all candidates always tie; includes m=1).
    PluralityLike: top entry strictly above an otherwise constant tail;
    winner-equivalent to plurality after shift/scale.
    Hard: the tail takes at least two distinct values; the result carries
    the normalized vector and the gadget sizes (ell, r).
    """
    entries = alpha.entries
    tail = set(entries[1:])
    if len(tail) <= 1:
        if not tail or entries[0] in tail:
            return DichotomyClass(RuleClass.ALL_EQUAL)
        return DichotomyClass(RuleClass.PLURALITY_LIKE)
    norm = normalize_last_zero(alpha)
    ell = norm.entries.count(0) - 1
    r = alpha.m - ell - 3
    return DichotomyClass(RuleClass.HARD, normalized=norm, ell=ell, r=r)


def hardness_params(alpha: ScoringVector) -> tuple[ScoringVector, int, int]:
    """Normalized vector and gadget sizes ``(ell, r)`` of a hard vector.

    A hard vector always satisfies ``m = ell + r + 3`` with the
    normalized entry at position r+2 still nonzero.  Raises NotHard for
    all-equal or plurality-like vectors.
    """
    dc = classify(alpha)
    if dc.tag is not RuleClass.HARD:
        raise NotHard(f"{alpha.entries} is {dc.tag.value}; no gadget parameters exist")
    assert dc.normalized is not None and dc.ell is not None and dc.r is not None
    return dc.normalized, dc.ell, dc.r


_KINDS = ("plurality", "borda", "veto", "k-approval", "half-approval", "constant", "explicit")


@dataclass(frozen=True)
class ScoringFamily:
    """A scoring rule defined per candidate count (one vector for each m)."""

    kind: str
    k: int | None = None  # k-approval block size
    value: int | None = None  # constant families
    table: tuple[tuple[int, ScoringVector], ...] | None = None  # explicit families

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise ValueError(f"unknown family kind {self.kind!r}")
        if self.kind == "k-approval" and (self.k is None or self.k < 1):
            raise ValueError("k-approval needs a block size k >= 1")
        if self.kind == "constant" and self.value is None:
            raise ValueError("constant families need a value")
        if self.kind == "explicit" and not self.table:
            raise ValueError("explicit families need at least one vector")

    @classmethod
    def plurality(cls) -> "ScoringFamily":
        return cls("plurality")

    @classmethod
    def borda(cls) -> "ScoringFamily":
        return cls("borda")

    @classmethod
    def veto(cls) -> "ScoringFamily":
        return cls("veto")

    @classmethod
    def k_approval(cls, k: int) -> "ScoringFamily":
        return cls("k-approval", k=k)

    @classmethod
    def half_approval(cls) -> "ScoringFamily":
        return cls("half-approval")

    @classmethod
    def constant(cls, value: int) -> "ScoringFamily":
        return cls("constant", value=value)

    @classmethod
    def explicit(cls, vectors: Mapping[int, ScoringVector]) -> "ScoringFamily":
        return cls("explicit", table=tuple(sorted(vectors.items())))


def family_vector(family: ScoringFamily, m: int) -> ScoringVector:
    """Concrete scoring vector of the family at candidate count ``m``.

    Raises UnsupportedM below 1, for k-approval with fewer than k
    candidates, and for explicit tables without an entry for m.
    """
    if m < 1:
        raise UnsupportedM(f"candidate count must be >= 1, got {m}")
    kind = family.kind
    if kind == "plurality":
        return ScoringVector((1,) + (0,) * (m - 1))
    if kind == "borda":
        return ScoringVector(tuple(range(m, 0, -1)))
    if kind == "veto":
        return ScoringVector((1,) * (m - 1) + (0,))
    if kind == "k-approval":
        assert family.k is not None
        if family.k > m:
            raise UnsupportedM(f"{family.k}-approval needs at least {family.k} candidates, got {m}")
        return ScoringVector((1,) * family.k + (0,) * (m - family.k))
    if kind == "half-approval":
        ones = m // 2
        return ScoringVector((1,) * ones + (0,) * (m - ones))
    if kind == "constant":
        assert family.value is not None
        return ScoringVector((family.value,) * m)
    assert family.table is not None
    for size, vec in family.table:
        if size == m:
            return vec
    raise UnsupportedM(f"explicit family defines no vector for m={m}")


@dataclass(frozen=True)
class FamilyClassification:
    """Family-level complexity: easy at every size, or hard from a cutoff up."""

    hard_from: int | None  # smallest hard candidate count; None = easy everywhere
    min_m: int = 1  # smallest candidate count the family defines

    @property
    def always_easy(self) -> bool:
        return self.hard_from is None


def classify_family(family: ScoringFamily) -> FamilyClassification:
    """Split a family into easy-everywhere or hard-from-a-cutoff.

    The cutoff is the smallest m whose vector has two distinct values
    below the top entry:

    * plurality and constant rules never do;
    * Borda and veto first do at m=3;
    * k-approval (k >= 2) first does at m=k+1, when a zero appears after
      the ones; 1-approval is plurality;
    * half-approval first does at m=4, the smallest m with
      2 <= floor(m/2) <= m-1.

    Explicit tables carry no rule for unlisted sizes and are rejected.
    """
    kind = family.kind
    if kind in ("plurality", "constant"):
        return FamilyClassification(None)
    if kind in ("borda", "veto"):
        return FamilyClassification(3)
    if kind == "k-approval":
        assert family.k is not None
        if family.k == 1:
            return FamilyClassification(None)
        return FamilyClassification(family.k + 1, min_m=family.k)
    if kind == "half-approval":
        return FamilyClassification(4)
    raise ExplicitFamilyUnsupported("explicit families must be classified one size at a time")
