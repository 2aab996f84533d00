"""
Tests for the tensor-pair catalogue.
"""

import pytest

from src.cohomology.bundles import Dual, Line, Phi, PullbackA, Spinor
from src.cohomology.pairs import (
    A_STABLE, PHI_SIMPLE, _chi_of_pair, coh_pair, find_pair, pair_catalogue,
)
from src.cohomology.tables import UnsupportedPair
from src.intersection.character import chi_hrr
from src.intersection.chern import ChernData, tensor, twist


class TestCatalogue:
    @pytest.mark.parametrize("name, expected", [
        ('end-phi', (1, 0, 0, 0)),
        ('hom-a-same', (1, 4, 0, 0)),
        ('hom-a-distinct', (0, 3, 0, 0)),
        ('phi-adual', (0, 4, 0, 0)),
        ('a-phidual', (1, 0, 0, 0)),
        ('spinor-adual', (0, 0, 0, 0)),
        ('spinor-phidual', (4, 0, 0, 0)),
        ('spinor-phi', (0, 0, 0, 4)),
    ])
    def test_tables(self, name, expected):
        """Every catalogue pair returns its full table."""
        assert find_pair(name).compute().as_tuple() == expected

    @pytest.mark.parametrize("entry", pair_catalogue(), ids=lambda e: e.name)
    def test_euler_characteristic(self, entry):
        """Each table sums to χ of the tensor product."""
        c = twist(tensor(entry.left.chern(), entry.right.chern()), entry.twist)
        assert entry.compute().euler_characteristic() == chi_hrr(c)

    def test_unknown_name(self):
        """Unknown pair names list the catalogue."""
        with pytest.raises(UnsupportedPair, match="end-phi"):
            find_pair('nope')


class TestCohPair:
    def test_end_phi(self):
        """Φ is simple and rigid."""
        table = coh_pair(Dual(Phi()), Phi())
        assert (table.h0, table.h1) == (1, 0)
        assert PHI_SIMPLE in table.assumptions

    def test_order_does_not_matter(self):
        """Factors may come in either order."""
        assert coh_pair(Phi(), Dual(Phi())) == coh_pair(Dual(Phi()), Phi())

    def test_same_and_distinct_centers(self):
        """Same center gives h¹ = 4, distinct centers h¹ = 3."""
        same = coh_pair(Dual(PullbackA('P')), PullbackA('P'))
        distinct = coh_pair(Dual(PullbackA('O')), PullbackA('P'))
        assert same.h1 == 4
        assert distinct.h1 == 3
        assert A_STABLE in same.assumptions

    def test_spinor_a_dual_is_cited(self):
        """h¹(Σ⊗A_P^∨) = 0 is a cited fact."""
        table = coh_pair(Spinor(), Dual(PullbackA()))
        assert table.h1 == 0
        assert table.provenance.is_cited

    def test_a_phi_dual(self):
        """Hom(Φ, A) is one-dimensional and Ext¹(Φ, A) vanishes."""
        table = coh_pair(PullbackA(), Dual(Phi()))
        assert (table.h0, table.h1) == (1, 0)

    def test_twist_must_match(self):
        """Σ ⊗ Φ is only catalogued at twist -4."""
        assert coh_pair(Spinor(), Phi(), -4).h3 == 4
        with pytest.raises(UnsupportedPair):
            coh_pair(Spinor(), Phi(), 0)

    def test_unsupported(self):
        """Pairs outside the catalogue are rejected."""
        with pytest.raises(UnsupportedPair):
            coh_pair(Spinor(), Spinor())


class _BareData(Line):
    """A line bundle label carrying arbitrary Chern data."""

    def chern(self):
        return ChernData(1, 0, 1, 0)


class TestPairEulerCharacteristic:
    def test_integral(self):
        """χ(End Φ) = 1."""
        assert _chi_of_pair(Dual(Phi()), Phi(), 0) == 1

    def test_non_integral_raises(self):
        """Data with χ = -1/2 is an error, never truncated to an integer."""
        with pytest.raises(ArithmeticError, match="-1/2"):
            _chi_of_pair(_BareData(0), Line(0), 0)
