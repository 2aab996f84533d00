"""
Tests for the single-bundle cohomology tables.
"""

import pytest

from src.cohomology.bundles import EP, GP, DirectSum, Dual, Line, Phi, PullbackA, Spinor, Twist
from src.cohomology.tables import (
    CohomologyTable, Provenance, UnsupportedBundle, UnsupportedPair, coh_A,
    coh_A_dual, coh_ep, coh_gp, coh_line, coh_phi, coh_phi_dual, coh_spinor,
    cohomology, serre_dual_check,
)
from src.intersection.character import chi_hrr


CATALOGUE = [Line(0), Spinor(), PullbackA(), Dual(PullbackA()), Phi(), Dual(Phi())]


class TestCohomologyTable:
    def test_negative_rejected(self):
        """Dimensions are non-negative."""
        with pytest.raises(ValueError):
            CohomologyTable(1, -1, 0, 0)

    def test_indexing(self):
        """table[i] is h^i."""
        table = CohomologyTable(1, 2, 3, 4)
        assert [table[i] for i in range(4)] == [1, 2, 3, 4]
        assert table.euler_characteristic() == -2

    def test_sum_merges_provenance(self):
        """Adding a cited table to a mechanical one gives a cited table."""
        cited = CohomologyTable(1, 0, 0, 0, provenance=Provenance.cited("quoted"))
        total = CohomologyTable(2, 0, 0, 0) + cited
        assert total.as_tuple() == (3, 0, 0, 0)
        assert total.provenance.is_cited
        assert total.provenance.citation == "quoted"

    def test_cited_needs_citation(self):
        """A cited provenance carries its source."""
        with pytest.raises(ValueError):
            Provenance.cited("")

    def test_to_dict(self):
        """Serialization lists the four dimensions and the provenance."""
        data = CohomologyTable(4, 0, 0, 0).to_dict()
        assert data['h0'] == 4
        assert data['provenance'] == 'mechanical'


class TestLineAndSpinor:
    @pytest.mark.parametrize("t, expected", [
        (2, (14, 0, 0, 0)),
        (0, (1, 0, 0, 0)),
        (-1, (0, 0, 0, 0)),
        (-4, (0, 0, 0, 5)),
    ])
    def test_line(self, t, expected):
        """O_Q(t) is ACM with the Hilbert function of the quadric."""
        assert coh_line(t).as_tuple() == expected

    @pytest.mark.parametrize("t, expected", [
        (0, (4, 0, 0, 0)),
        (-1, (0, 0, 0, 0)),
        (-4, (0, 0, 0, 4)),
        (1, (16, 0, 0, 0)),
    ])
    def test_spinor(self, t, expected):
        """Σ(t) is ACM with four sections."""
        assert coh_spinor(t).as_tuple() == expected


class TestPullbackAndPhi:
    def test_a_sections(self):
        """h⁰(A) = 4 and h⁰(A(1)) = 15 + 4."""
        assert coh_A(0).h0 == 4
        assert coh_A(1).h0 == 19

    def test_a_dual(self):
        """h¹(A^∨) = 1 and A^∨ has no sections."""
        assert coh_A_dual(0).as_tuple() == (0, 1, 0, 0)

    def test_phi(self):
        """Φ has five sections and no higher cohomology."""
        assert coh_phi(0).as_tuple() == (5, 0, 0, 0)
        assert coh_phi(1).h0 == 24

    def test_phi_intermediate(self):
        """h²(Φ(-2)) = 1."""
        assert coh_phi(-2).as_tuple() == (0, 0, 1, 0)

    def test_phi_dual(self):
        """Φ^∨ has no cohomology, Φ^∨(-1) has h¹ = 1."""
        assert coh_phi_dual(0).as_tuple() == (0, 0, 0, 0)
        assert coh_phi_dual(-1).as_tuple() == (0, 1, 0, 0)


class TestPointSheaves:
    def test_gp_sections(self):
        """h⁰(G_P) = 4."""
        assert coh_gp(0).h0 == 4

    @pytest.mark.parametrize("t", [-2, -3, -6])
    def test_gp_h2(self, t):
        """H²(G_P(t)) is one-dimensional for t ≤ -2."""
        assert coh_gp(t).h2 == 1

    def test_ep_is_cited(self):
        """E_P rests on a cited vanishing."""
        table = coh_ep(0)
        assert table.provenance.is_cited
        assert table.h0 == 9
        assert table.h1 == 0

    @pytest.mark.parametrize("t", range(-8, 4))
    def test_ep_chi(self, t):
        """The E_P table sums to χ."""
        assert coh_ep(t).euler_characteristic() == chi_hrr(Twist(EP(), t).chern())


class TestDispatch:
    def test_twisted_atom(self):
        """cohomology() reads the twist off the expression."""
        assert cohomology(Twist(Phi(), 1)) == coh_phi(1)

    def test_direct_sum(self):
        """Sums add their tables."""
        assert cohomology(DirectSum((Line(1), Spinor()))).as_tuple() == (9, 0, 0, 0)

    def test_spinor_dual(self):
        """Σ^∨ is dispatched as Σ(-1)."""
        assert cohomology(Dual(Spinor())) == coh_spinor(-1)

    def test_unsupported(self):
        """Duals of G_P have no table."""
        with pytest.raises(UnsupportedBundle):
            cohomology(Dual(GP()))

    @pytest.mark.parametrize("bundle", CATALOGUE + [GP(), EP()])
    def test_chi_sweep(self, bundle):
        """Alternating sums equal χ for t in [-10, 10]."""
        for t in range(-10, 11):
            twisted = Twist(bundle, t)
            assert cohomology(twisted).euler_characteristic() == chi_hrr(twisted.chern())


class TestSerreDuality:
    @pytest.mark.parametrize("bundle", CATALOGUE)
    def test_sweep(self, bundle):
        """h^i(B(t)) = h^(3-i)(B^∨(-3-t)) for t in [-8, 8]."""
        assert all(serre_dual_check(bundle, t) for t in range(-8, 9))

    def test_gp_rejected(self):
        """Serre duality does not apply to G_P."""
        with pytest.raises(UnsupportedPair):
            serre_dual_check(GP(), 0)

    def test_ep_rejected(self):
        """E_P^∨ has no table."""
        with pytest.raises(UnsupportedPair):
            serre_dual_check(EP(), 0)
