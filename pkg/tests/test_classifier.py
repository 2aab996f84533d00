"""
Tests for the regenerated classification tables.
"""

import pytest

from src.classification.classifier import (
    EXCLUDED_C2, InvalidC1, OutOfCatalogue, as_frame, classify, decomposable_sums,
    entries_for, higher_rank_table, rank3_table, trisecant_obstruction_holds,
)
from src.cohomology.bundles import EP
from src.curves.curve import CurveData


@pytest.fixture
def c1_two():
    return higher_rank_table(2)


def _ranks(entries, chern):
    ranks = set()
    for entry in entries:
        if entry.chern == chern and entry.indecomposable:
            ranks.update(entry.ranks)
    return ranks


class TestRankThree:
    def test_c1_one(self):
        """Three rank-three bundles with c1 = 1."""
        assert [e.description for e in rank3_table(1)] == ["O ⊕ O ⊕ O(1)", "Σ ⊕ O", "A"]

    def test_c1_two_chern_data(self):
        """The c1 = 2 rank-three table in Chern data."""
        assert [e.chern for e in rank3_table(2)] == [
            (2, 0, 0), (2, 2, 0), (2, 3, 1), (2, 4, 4), (2, 4, 0), (2, 4, 0), (2, 4, 2),
            (2, 5, 5), (2, 6, 8), (2, 8, 16),
        ]

    @pytest.mark.parametrize("c1", [0, 3, -1])
    def test_invalid_c1(self, c1):
        """Rank-three tables exist for c1 = 1 and c1 = 2 only."""
        with pytest.raises(InvalidC1):
            rank3_table(c1)

    def test_elliptic_quartic_is_flagged(self):
        """The (2,4,4) rank-three row carries a citation."""
        entry = next(e for e in rank3_table(2) if e.chern == (2, 4, 4))
        assert entry.flagged and entry.notes

    def test_two_conics_rows(self):
        """Two disjoint conics carry A^∨(1) and the decomposable φ*N(1) ⊕ O."""
        rows = [e for e in rank3_table(2) if e.curve == CurveData.disjoint((2, 0), (2, 0))]
        assert [(e.description, e.indecomposable) for e in rows] == [
            ("A^∨(1)", True), ("φ*N(1) ⊕ O", False),
        ]
        assert {e.chern for e in rows} == {(2, 4, 0)}
        assert rows[1].bundle.chern().as_tuple() == (3, 2, 4, 0)
        assert not rows[1].h0_E_minus1_nonzero


class TestDecomposableSums:
    @pytest.mark.parametrize("c2, expected", [
        (4, ["O(1) ⊕ A_P", "O(1) ⊕ Φ", "Σ ⊕ Σ"]),
        (5, ["Σ ⊕ A_P", "Σ ⊕ Φ"]),
        (6, ["A_O ⊕ A_P", "A_P ⊕ Φ", "Φ ⊕ Φ"]),
    ])
    def test_catalogue(self, c2, expected):
        """Sums of two c1 = 1 bundles by second Chern class."""
        assert sorted(str(b) for b in decomposable_sums(2, c2)) == sorted(expected)

    @pytest.mark.parametrize("c1, c2", [(2, 3), (2, 7), (1, 4)])
    def test_out_of_catalogue(self, c1, c2):
        """Only c1 = 2 and c2 ∈ {4, 5, 6} are catalogued."""
        with pytest.raises(OutOfCatalogue):
            decomposable_sums(c1, c2)


class TestHigherRank:
    @pytest.mark.parametrize("chern, expected", [
        ((2, 4, 0), {3}),
        ((2, 4, 2), {3}),
        ((2, 4, 4), {3, 4}),
        ((2, 5, 5), {3, 4, 5}),
        ((2, 6, 8), set(range(3, 8))),
        ((2, 8, 16), set(range(3, 14))),
    ])
    def test_indecomposable_ranks(self, c1_two, chern, expected):
        """Indecomposable ranks run from 3 to just below the forced sum."""
        assert _ranks(c1_two, chern) == expected

    @pytest.mark.parametrize("chern, rank, description", [
        ((2, 4, 2), 4, "Σ ⊕ Σ"),
        ((2, 4, 4), 5, "O(1) ⊕ Φ"),
        ((2, 5, 5), 6, "Σ ⊕ Φ"),
        ((2, 6, 8), 8, "Φ ⊕ Φ"),
    ])
    def test_ceilings(self, c1_two, chern, rank, description):
        """At rank 3 + α the extension is a direct sum."""
        entry = next(e for e in c1_two if e.chern == chern and e.rank_min == rank)
        assert entry.description == description
        assert not entry.indecomposable
        assert entry.notes == (f"rank 3 + α = {rank} forces {description}",)

    def test_named_extension(self, c1_two):
        """E_P is the rank-four extension at (2,4,4)."""
        entry = next(e for e in c1_two if e.chern == (2, 4, 4) and e.rank_min == 4)
        assert entry.bundle == EP()
        assert entry.indecomposable

    def test_c1_one(self):
        """c1 = 1 adds Φ as the rank-four extension of A."""
        assert [e.description for e in classify(1)] == ["O ⊕ O ⊕ O(1)", "Σ ⊕ O", "A", "Φ"]

    def test_no_trisecants(self, c1_two):
        """Curves of degree at least 5 have no trisecant lines."""
        assert trisecant_obstruction_holds(c1_two)


class TestClassify:
    def test_c1_zero(self):
        """c1 = 0 gives only trivial bundles."""
        entries = classify(0)
        assert [e.description for e in entries] == ["O^r"]
        assert entries[0].rank_label() == "r ≥ 1"

    def test_rank3_only(self):
        """The rank-three flag drops the extensions."""
        assert all(e.ranks == [3] for e in classify(2, rank3_only=True))

    def test_indecomposable_only(self):
        """The indecomposable filter keeps ranks of at least 3."""
        entries = classify(2, indecomposable_only=True)
        assert entries
        assert all(e.indecomposable and e.rank_min >= 3 for e in entries)

    @pytest.mark.parametrize("c2", [7, 9, 10, 12])
    def test_excluded(self, c2):
        """Excluded second Chern classes come back empty with a reason."""
        assert entries_for(2, c2) == ([], EXCLUDED_C2)

    def test_entries_for(self):
        """c2 = 4 covers three curves and their sums."""
        entries, reason = entries_for(2, 4)
        assert reason == ''
        assert {e.c3 for e in entries} == {0, 2, 4}
        assert "O(1) ⊕ A_P" in {e.description for e in entries}

    def test_as_frame(self):
        """Tables render with one row per entry."""
        frame = as_frame(classify(2, rank3_only=True))
        assert list(frame.columns) == ['c1', 'c2', 'c3', 'rank', 'curve', 'bundle',
                                       'indecomposable', 'h0(E(-1))', 'flag']
        assert len(frame) == 10
        assert frame.loc[frame['c3'] == 4, 'flag'].tolist() == ['flagged']
