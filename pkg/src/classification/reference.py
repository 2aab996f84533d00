"""
Comparison of the regenerated classification with the published rank table.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Set, Tuple

from src.classification.classifier import higher_rank_table
from src.curves.curve import CurveData, c3_from_curve
from src.data.loader import load_reference

logger = logging.getLogger(__name__)

Chern = Tuple[int, int, int]


@dataclass(frozen=True)
class RankTableLine:
    """One Chern triple of the rank-table comparison."""

    chern: Chern
    published: Tuple[int, ...]
    derived: Tuple[int, ...]
    status: str
    detail: str = ''

    def to_dict(self):
        return {
            'chern': list(self.chern),
            'published': list(self.published),
            'derived': list(self.derived),
            'status': self.status,
            'detail': self.detail,
        }


def published_ranks(reference_dir: Optional[str] = None) -> Dict[Chern, Set[int]]:
    """Published indecomposable ranks keyed by (c1, c2, c3)."""
    frame = load_reference('rank_table', 'higher_rank_indecomposable', reference_dir)
    ranks: Dict[Chern, Set[int]] = {}
    for row in frame.itertuples(index=False):
        key = (int(row.c1), int(row.c2), int(row.c3))
        ranks.setdefault(key, set()).update(range(int(row.rank_min), int(row.rank_max) + 1))
    return ranks


def published_rank_three(reference_dir: Optional[str] = None) -> Set[Chern]:
    """Chern triples of the published rank-three curve list."""
    frame = load_reference('rank_table', 'rank_three_curves', reference_dir)
    triples = set()
    for row in frame.itertuples(index=False):
        curve = CurveData(tuple(tuple(c) for c in row.components))
        triples.add((int(row.c1), curve.degree, c3_from_curve(curve, int(row.c1))))
    return triples


def derived_ranks() -> Tuple[Dict[Chern, Set[int]], Set[Chern]]:
    """Indecomposable ranks from the generator, and the triples it flags."""
    ranks: Dict[Chern, Set[int]] = {}
    flagged = set()
    for c1 in (1, 2):
        for entry in higher_rank_table(c1):
            if not entry.indecomposable:
                continue
            ranks.setdefault(entry.chern, set()).update(entry.ranks)
            if entry.flagged:
                flagged.add(entry.chern)
    return ranks, flagged


def rank_table_check(reference_dir: Optional[str] = None) -> List[RankTableLine]:
    """
    Compare derived indecomposable ranks with the published table.

    A derived rank 3 absent from the published range is accepted when the
    rank-three list contains the triple and the published range starts at 4
    and continues past it. A single published rank leaves the rank-three
    member ambiguous, and the line is flagged.

    Returns:
        List[RankTableLine]: One line per Chern triple, sorted
    """
    published = published_ranks(reference_dir)
    rank_three = published_rank_three(reference_dir)
    derived, flagged = derived_ranks()
    lines = []
    for chern in sorted(set(published) | set(derived)):
        p = published.get(chern, set())
        d = derived.get(chern, set())
        status, detail = 'pass', ''
        if d != p:
            extra_three = d - p == {3} and p <= d and chern in rank_three
            if extra_three and p and min(p) == 4 and len(p) > 1:
                detail = "rank 3 from the rank-three classification"
            elif extra_three and chern in flagged:
                status = 'flagged'
                detail = "rank-three member published only in the rank-three list"
                logger.warning(f"Rank table: {chern} derived {sorted(d)}, published {sorted(p)}")
            else:
                status = 'fail'
                detail = f"derived {sorted(d)}, published {sorted(p)}"
                logger.error(f"Rank table mismatch at {chern}: {detail}")
        lines.append(RankTableLine(chern, tuple(sorted(p)), tuple(sorted(d)), status, detail))
    return lines
