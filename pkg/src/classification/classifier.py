"""
Regeneration of the classification tables of globally generated bundles on Q.

Rank-three bundles are listed from their degeneracy curves. Higher ranks come
from nonsplit extensions 0 → O^{r-3} → E → F → 0, which stay indecomposable
up to r = 3 + α(F). At that ceiling the extension is forced to be a direct sum
whenever a sum with the same Chern data and rank exists.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Callable, Dict, List, Optional, Tuple

import pandas as pd

from src.cohomology.bundles import (
    DirectSum, Dual, Line, O, Phi, PullbackA, PullbackN, Spinor, StandardBundle, Twist, EP,
)
from src.curves.curve import CurveData, alpha, c3_from_curve, trisecant
from src.intersection.chern import (
    ChernData, direct_sum, line, trivial, whitney_third,
)

logger = logging.getLogger(__name__)

AMBIGUOUS_RANK_THREE = (
    "rank-three bundle of the elliptic quartic: no decomposable bundle has Chern "
    "data (2,4,4) in rank 3, yet the published higher-rank list has (2,4,4) at rank 4 only"
)
EXCLUDED_C2 = (
    "no globally generated bundle with c1 = 2 has c2 = 7 or c2 ≥ 9: the curve would "
    "be linked to a curve violating the degree bound"
)


class InvalidC1(ValueError):
    """Raised for a first Chern class outside the classified range."""
    pass


class OutOfCatalogue(ValueError):
    """Raised when decomposable sums are requested outside c1 = 2, c2 ∈ {4,5,6}."""
    pass


@dataclass(frozen=True)
class ClassificationEntry:
    """One row of a classification table."""

    c1: int
    c2: int
    c3: int
    rank_min: int
    rank_max: Optional[int]
    curve: Optional[CurveData]
    description: str
    indecomposable: bool
    h0_E_minus1_nonzero: bool
    bundle: Optional[StandardBundle] = None
    notes: Tuple[str, ...] = ()
    flagged: bool = False

    @property
    def chern(self) -> Tuple[int, int, int]:
        return (self.c1, self.c2, self.c3)

    @property
    def ranks(self) -> List[int]:
        if self.rank_max is None:
            return [self.rank_min]
        return list(range(self.rank_min, self.rank_max + 1))

    def rank_label(self) -> str:
        if self.rank_max is None:
            return f"r ≥ {self.rank_min}"
        if self.rank_min == self.rank_max:
            return str(self.rank_min)
        return f"{self.rank_min}..{self.rank_max}"

    def to_dict(self):
        return {
            'chern': list(self.chern),
            'rank_min': self.rank_min,
            'rank_max': self.rank_max,
            'curve': self.curve.to_dict() if self.curve else None,
            'description': self.description,
            'indecomposable': self.indecomposable,
            'h0_E_minus1_nonzero': self.h0_E_minus1_nonzero,
            'flagged': self.flagged,
            'notes': list(self.notes),
        }


@dataclass(frozen=True)
class _RankThreeFamily:
    c1: int
    curve: Optional[CurveData]
    construction: Callable[[], ChernData]
    description: str
    indecomposable: bool
    h0_E_minus1_nonzero: bool
    bundle: Optional[StandardBundle] = None
    named_extensions: Dict[int, StandardBundle] = field(default_factory=dict)
    notes: Tuple[str, ...] = ()
    flagged: bool = False


def _bundle_chern(bundle: StandardBundle) -> Callable[[], ChernData]:
    return bundle.chern


def _families() -> List[_RankThreeFamily]:
    spinor_sum = DirectSum((Spinor(), Spinor()))
    null_correlation_sum = DirectSum((PullbackN(), O))
    return [
        _RankThreeFamily(
            1, None, _bundle_chern(DirectSum((O, O, Line(1)))),
            "O ⊕ O ⊕ O(1)", False, True, DirectSum((O, O, Line(1)))),
        _RankThreeFamily(
            1, CurveData.connected(1, 0), _bundle_chern(DirectSum((Spinor(), O))),
            "Σ ⊕ O", False, False, DirectSum((Spinor(), O))),
        _RankThreeFamily(
            1, CurveData.connected(2, 0), _bundle_chern(PullbackA()),
            "A", True, False, PullbackA(), named_extensions={4: Phi()}),
        _RankThreeFamily(
            2, None, _bundle_chern(DirectSum((O, O, Line(2)))),
            "O ⊕ O ⊕ O(2)", False, True, DirectSum((O, O, Line(2)))),
        _RankThreeFamily(
            2, CurveData.connected(2, 0), _bundle_chern(DirectSum((O, Line(1), Line(1)))),
            "O ⊕ O(1) ⊕ O(1)", False, True, DirectSum((O, Line(1), Line(1)))),
        _RankThreeFamily(
            2, CurveData.connected(3, 0), _bundle_chern(DirectSum((Spinor(), Line(1)))),
            "Σ ⊕ O(1)", False, True, DirectSum((Spinor(), Line(1)))),
        _RankThreeFamily(
            2, CurveData.connected(4, 1),
            lambda: whitney_third(line(-1), direct_sum(trivial(3), line(1))),
            "cokernel of O(-1) → O³ ⊕ O(1)", True, True,
            named_extensions={4: EP()}, notes=(AMBIGUOUS_RANK_THREE,), flagged=True),
        _RankThreeFamily(
            2, CurveData.disjoint((2, 0), (2, 0)), _bundle_chern(Twist(Dual(PullbackA()), 1)),
            "A^∨(1)", True, False, Twist(Dual(PullbackA()), 1)),
        _RankThreeFamily(
            2, CurveData.disjoint((2, 0), (2, 0)), _bundle_chern(null_correlation_sum),
            "φ*N(1) ⊕ O", False, False, null_correlation_sum),
        _RankThreeFamily(
            2, CurveData.connected(4, 0),
            lambda: whitney_third(trivial(1), spinor_sum.chern()),
            "cokernel of O → Σ ⊕ Σ", True, False),
        _RankThreeFamily(
            2, CurveData.connected(5, 1), lambda: None,
            "bundle of an elliptic quintic", True, False),
        _RankThreeFamily(
            2, CurveData.connected(6, 2), lambda: None,
            "bundle of a genus-2 sextic", True, False),
        _RankThreeFamily(
            2, CurveData.connected(8, 5),
            lambda: whitney_third(line(-2), trivial(4)),
            "cokernel of O(-2) → O⁴", True, False),
    ]


def _check_c1(c1: int) -> None:
    if c1 not in (1, 2):
        raise InvalidC1(f"c1 must be 1 or 2, got {c1}")


def _family_chern(family: _RankThreeFamily) -> ChernData:
    constructed = family.construction()
    if family.curve is None:
        return constructed
    c3 = c3_from_curve(family.curve, family.c1)
    if constructed is None:
        return ChernData(3, family.c1, family.curve.degree, c3)
    if constructed.as_tuple() != (3, family.c1, family.curve.degree, c3):
        logger.error(f"Construction {family.description} gives {constructed}, curve gives c3={c3}")
        raise ArithmeticError(f"Chern data of {family.description} disagrees with its curve")
    return constructed


def _rank_three_entry(family: _RankThreeFamily) -> ClassificationEntry:
    c = _family_chern(family)
    return ClassificationEntry(
        c.c1, c.c2, c.c3, 3, 3, family.curve, family.description,
        family.indecomposable, family.h0_E_minus1_nonzero, family.bundle,
        family.notes, family.flagged,
    )


def rank3_table(c1: int) -> List[ClassificationEntry]:
    """
    Globally generated rank-three bundles with the given c1 and no trivial factor
    beyond those in the listed splittings.

    Raises:
        InvalidC1: If c1 is not 1 or 2
    """
    _check_c1(c1)
    return [_rank_three_entry(f) for f in _families() if f.c1 == c1]


def decomposable_sums(c1: int, c2: int) -> List[StandardBundle]:
    """
    Sums of two c1 = 1 bundles from {O(1), Σ, A, Φ} with Chern classes (2, c2, ·).

    Raises:
        OutOfCatalogue: Unless c1 = 2 and c2 ∈ {4, 5, 6}
    """
    if c1 != 2 or c2 not in (4, 5, 6):
        raise OutOfCatalogue(f"Decomposable sums are catalogued for c1 = 2, c2 ∈ {{4,5,6}}; got ({c1}, {c2})")
    summands = [Line(1), Spinor(), PullbackA(), Phi()]
    sums = []
    for left, right in combinations_with_replacement(summands, 2):
        if left == right == PullbackA():
            left, right = PullbackA('O'), PullbackA('P')
        bundle = DirectSum((left, right))
        if bundle.chern().c2 == c2:
            sums.append(bundle)
    return sums


def _sum_at(c: Tuple[int, int, int], rank: int) -> Optional[StandardBundle]:
    c1, c2, _ = c
    if c1 != 2 or c2 not in (4, 5, 6):
        return None
    for bundle in decomposable_sums(c1, c2):
        data = bundle.chern()
        if (data.c1, data.c2, data.c3) == c and data.rank == rank:
            return bundle
    return None


def _extension_entries(family: _RankThreeFamily, base: ClassificationEntry) -> List[ClassificationEntry]:
    value = alpha(family.curve, family.c1)
    if not value:
        return []
    top = 3 + value
    entries = []
    ceiling = _sum_at(base.chern, top)
    last_indecomposable = top - 1 if ceiling is not None else top
    for rank, bundle in sorted(family.named_extensions.items()):
        if rank <= last_indecomposable:
            entries.append(ClassificationEntry(
                base.c1, base.c2, base.c3, rank, rank, family.curve, str(bundle),
                True, family.h0_E_minus1_nonzero, bundle))
    named = set(family.named_extensions)
    generic = [r for r in range(4, last_indecomposable + 1) if r not in named]
    if generic:
        entries.append(ClassificationEntry(
            base.c1, base.c2, base.c3, generic[0], generic[-1], family.curve,
            f"nonsplit extension of ({family.description}) by O^(r-3)",
            True, family.h0_E_minus1_nonzero))
    if ceiling is not None:
        entries.append(ClassificationEntry(
            base.c1, base.c2, base.c3, top, top, family.curve, str(ceiling),
            False, family.h0_E_minus1_nonzero, ceiling,
            notes=(f"rank 3 + α = {top} forces {ceiling}",)))
    return entries


def higher_rank_table(c1: int) -> List[ClassificationEntry]:
    """
    Rank-three table extended by the indecomposable higher-rank ranges, the
    forced direct sums at their ceilings, and the decomposable catalogue.

    Raises:
        InvalidC1: If c1 is not 1 or 2
    """
    _check_c1(c1)
    entries = []
    for family in (f for f in _families() if f.c1 == c1):
        base = _rank_three_entry(family)
        entries.append(base)
        if family.indecomposable and family.curve is not None:
            entries.extend(_extension_entries(family, base))
    if c1 == 2:
        listed = {e.description for e in entries}
        for c2 in (4, 5, 6):
            for bundle in decomposable_sums(2, c2):
                if str(bundle) in listed:
                    continue
                data = bundle.chern()
                entries.append(ClassificationEntry(
                    data.c1, data.c2, data.c3, data.rank, data.rank, None, str(bundle),
                    False, False, bundle))
    return entries


def trivial_entry() -> ClassificationEntry:
    return ClassificationEntry(0, 0, 0, 1, None, None, "O^r", False, False, O,
                               notes=("the only globally generated bundles with c1 = 0",))


def classify(c1: int, rank3_only: bool = False,
             indecomposable_only: bool = False) -> List[ClassificationEntry]:
    """
    Classification entries for c1 ∈ {0, 1, 2}.

    Args:
        c1 (int): First Chern class
        rank3_only (bool): Only the rank-three table
        indecomposable_only (bool): Only indecomposable entries of rank at least 3

    Returns:
        List[ClassificationEntry]: Matching entries
    """
    if c1 == 0:
        entries = [trivial_entry()]
    else:
        entries = rank3_table(c1) if rank3_only else higher_rank_table(c1)
    if indecomposable_only:
        entries = [e for e in entries if e.indecomposable and e.rank_min >= 3]
    logger.info(f"Classification for c1={c1}: {len(entries)} entries")
    return entries


EXCLUSION_RULES = [
    (lambda c1, c2: c1 == 2 and (c2 == 7 or c2 >= 9), EXCLUDED_C2),
]


def entries_for(c1: int, c2: int, **kwargs) -> Tuple[List[ClassificationEntry], str]:
    """Entries with a given c2, or an empty list with the excluding reason."""
    for applies, reason in EXCLUSION_RULES:
        if applies(c1, c2):
            return [], reason
    return [e for e in classify(c1, **kwargs) if e.c2 == c2], ''


def trisecant_obstruction_holds(entries: List[ClassificationEntry]) -> bool:
    """Connected curves of degree ≥ 5 with c1 = 2 must have no trisecant lines."""
    for entry in entries:
        curve = entry.curve
        if curve and curve.is_connected and entry.c1 == 2 and curve.degree >= 5:
            if trisecant(curve.degree, curve.genus) != 0:
                return False
    return True


def as_frame(entries: List[ClassificationEntry]) -> pd.DataFrame:
    """Render entries as a DataFrame for table output."""
    rows = [{
        'c1': e.c1, 'c2': e.c2, 'c3': e.c3,
        'rank': e.rank_label(),
        'curve': str(e.curve) if e.curve else '-',
        'bundle': e.description,
        'indecomposable': 'yes' if e.indecomposable else 'no',
        'h0(E(-1))': '≠0' if e.h0_E_minus1_nonzero else '0',
        'flag': 'flagged' if e.flagged else '',
    } for e in entries]
    columns = ['c1', 'c2', 'c3', 'rank', 'curve', 'bundle', 'indecomposable', 'h0(E(-1))', 'flag']
    return pd.DataFrame(rows, columns=columns)
