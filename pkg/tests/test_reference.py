"""
Tests for the comparison against the published rank table.
"""

import pytest

from src.classification.reference import (
    derived_ranks, published_rank_three, published_ranks, rank_table_check,
)


@pytest.fixture(scope="module")
def lines():
    return rank_table_check()


class TestPublishedTables:
    def test_published_ranks(self):
        """Ranges expand to rank sets."""
        ranks = published_ranks()
        assert ranks[(2, 5, 5)] == {4, 5}
        assert ranks[(2, 8, 16)] == set(range(4, 14))

    def test_rank_three_list(self):
        """The rank-three curves map to Chern triples."""
        triples = published_rank_three()
        assert (2, 4, 0) in triples
        assert (1, 2, 2) in triples
        assert (2, 8, 16) in triples


class TestRankTableCheck:
    def test_no_failures(self, lines):
        """The regenerated table agrees with the published one."""
        assert [line.chern for line in lines if line.status == 'fail'] == []

    def test_single_flag(self, lines):
        """Only the elliptic quartic is flagged."""
        assert [line.chern for line in lines if line.status == 'flagged'] == [(2, 4, 4)]

    def test_rank_three_accepted(self, lines):
        """Rank 3 below a published range starting at 4 passes with a note."""
        line = next(line for line in lines if line.chern == (2, 5, 5))
        assert line.status == 'pass'
        assert line.derived == (3, 4, 5)
        assert line.detail == "rank 3 from the rank-three classification"

    def test_derived_flags(self):
        """The generator marks the triple it cannot settle."""
        _, flagged = derived_ranks()
        assert flagged == {(2, 4, 4)}
