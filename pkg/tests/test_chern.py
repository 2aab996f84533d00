"""
Tests for Chern-class calculus.
"""

import pytest

from src.intersection.chern import (
    ChernData, NonIntegerResult, NotLocallyFree, check_locally_free,
    corrected_twist_c3, direct_sum, dual, line, printed_twist_c3, tensor,
    total_chern, trivial, twist, twist_by_splitting, whitney_kernel, whitney_third,
    whitney_total,
)
from src.intersection.ring import ChowElement


@pytest.fixture
def spinor():
    return ChernData(2, 1, 1, 0)


@pytest.fixture
def bundle_a():
    return ChernData(3, 1, 2, 2)


class TestChernData:
    def test_defaults(self):
        """Missing classes default to zero."""
        assert ChernData(2).as_tuple() == (2, 0, 0, 0)

    def test_negative_rank(self):
        """Negative ranks are rejected."""
        with pytest.raises(ValueError):
            ChernData(-1, 0, 0, 0)

    def test_non_integer(self):
        """Classes must be integers."""
        with pytest.raises(TypeError):
            ChernData(2, 1.0, 0, 0)

    def test_str(self, spinor):
        """Chern data prints as (r; c1, c2, c3)."""
        assert str(spinor) == "(2; 1, 1, 0)"

    def test_total_chern(self, bundle_a):
        """The total class carries the classes in (h, l, p) units."""
        assert total_chern(bundle_a) == ChowElement(1, 1, 2, 2)


class TestTwist:
    def test_twist_of_a(self, bundle_a):
        """A(1) = (3; 4, 12, 8)."""
        assert twist(bundle_a, 1).as_tuple() == (3, 4, 12, 8)

    def test_twist_zero(self, spinor):
        """Twisting by 0 changes nothing."""
        assert twist(spinor, 0) == spinor

    def test_spinor_dual_is_twist(self, spinor):
        """Σ^∨ and Σ(-1) have the same Chern data."""
        assert twist(spinor, -1) == dual(spinor)

    def test_line_bundles(self):
        """O(2) ⊗ O(3) = O(5)."""
        assert twist(line(2), 3) == line(5)

    def test_dual_of_a_twisted(self, bundle_a):
        """A^∨(1) = (3; 2, 4, 0)."""
        assert twist(dual(bundle_a), 1).as_tuple() == (3, 2, 4, 0)

    @pytest.mark.parametrize("c, k", [
        (ChernData(3, 1, 2, 2), 2),
        (ChernData(2, -1, 5, 0), -3),
        (ChernData(4, 1, 2, 2), 1),
        (ChernData(1, 7, 0, 0), -2),
        (ChernData(5, 3, -4, 11), 4),
    ])
    def test_twist_matches_tensor(self, c, k):
        """Twisting agrees with tensoring by the line bundle."""
        assert twist(c, k) == tensor(c, line(k))

    @pytest.mark.parametrize("c, k", [
        (ChernData(3, 2, 0, 0), 1),
        (ChernData(4, -3, 7, 2), -2),
        (ChernData(6, 5, 5, -9), 3),
    ])
    def test_corrected_c3_polynomial(self, c, k):
        """The corrected closed form gives the c3 of the twist."""
        assert corrected_twist_c3(c, k) == twist(c, k).c3

    def test_printed_c3_polynomial_erratum(self):
        """The printed polynomial is off by 2 at (3; 2, 0, 0), k = 1."""
        c = ChernData(3, 2, 0, 0)
        assert printed_twist_c3(c, 1) == 4
        assert twist(c, 1).c3 == 6

    @pytest.mark.parametrize("c, k", [
        (ChernData(3, 1, 2, 2), 2),
        (ChernData(2, -1, 5, 0), -3),
        (ChernData(1, 7, 0, 0), -2),
        (ChernData(0, 0, 0, 0), 4),
        (ChernData(6, 5, -11, 20), -5),
    ])
    def test_closed_form_matches_chow_ring(self, c, k):
        """The expanded polynomials agree with the product in the Chow ring."""
        assert twist(c, k) == twist_by_splitting(c, k)

    @pytest.mark.parametrize("c", [ChernData(2, 1, 1, 0), ChernData(3, 1, 2, 2), ChernData(5, -4, 9, -13)])
    @pytest.mark.parametrize("j, k", [(1, 1), (-2, 5), (3, -3), (-4, -1)])
    def test_twists_compose(self, c, j, k):
        """(E(j))(k) = E(j + k)."""
        assert twist(twist(c, j), k) == twist(c, j + k)

    @pytest.mark.parametrize("c", [ChernData(2, 1, 1, 0), ChernData(3, 1, 2, 2), ChernData(5, -4, 9, -13)])
    @pytest.mark.parametrize("k", [-3, -1, 2, 6])
    def test_dual_of_twist(self, c, k):
        """E(k)^∨ = E^∨(-k)."""
        assert dual(twist(c, k)) == twist(dual(c), -k)


class TestWhitney:
    def test_euler_sequence_quotient(self):
        """O(-1) → O⁵ has cokernel (4; 1, 2, 2)."""
        assert whitney_third(line(-1), trivial(5)).as_tuple() == (4, 1, 2, 2)

    def test_pullback_quotient(self):
        """O(-1) → O⁴ has cokernel (3; 1, 2, 2)."""
        assert whitney_third(line(-1), trivial(4)).as_tuple() == (3, 1, 2, 2)

    def test_sub_rank_too_large(self):
        """The subbundle cannot have larger rank than the middle term."""
        with pytest.raises(ValueError):
            whitney_third(trivial(5), trivial(3))

    def test_total(self, bundle_a):
        """An extension of (3; 1, 2, 2) by O(1) has Chern data (4; 2, 4, 4)."""
        assert whitney_total(line(1), bundle_a).as_tuple() == (4, 2, 4, 4)

    def test_kernel(self):
        """The kernel of O⁵ → O(1) is the dual of (4; 1, 2, 2)."""
        assert whitney_kernel(trivial(5), line(1)) == dual(ChernData(4, 1, 2, 2))

    @pytest.mark.parametrize("sub, quotient", [
        (line(-1), ChernData(4, 1, 2, 2)),
        (ChernData(2, 1, 1, 0), ChernData(3, 1, 2, 2)),
        (ChernData(3, -2, 7, 5), ChernData(1, 4, 0, 0)),
        (ChernData(4, 6, -3, 9), ChernData(2, -5, 8, 0)),
    ])
    def test_quotient_undoes_total(self, sub, quotient):
        """Dividing c(S)·c(Q) by either factor gives the other back."""
        total = whitney_total(sub, quotient)
        assert whitney_third(sub, total) == quotient
        assert whitney_kernel(total, quotient) == sub

    @pytest.mark.parametrize("k", range(-4, 5))
    def test_spinor_sequence_rank_two(self, k):
        """Σ and Σ(-1) solved from 0 → Σ(-1) → O⁴ → Σ → 0 twist to rank-two bundles."""
        quotient = whitney_third(dual(ChernData(2, 1, 1, 0)), trivial(4))
        kernel = whitney_kernel(trivial(4), ChernData(2, 1, 1, 0))
        for c in (quotient, kernel, twist(quotient, k), dual(twist(kernel, k))):
            assert c.c3 == 0
            assert check_locally_free(c) == c
            assert dual(c) == twist(c, -c.c1)

    def test_direct_sum(self, spinor):
        """Σ ⊕ Σ = (4; 2, 4, 2)."""
        assert direct_sum(spinor, spinor).as_tuple() == (4, 2, 4, 2)
        assert direct_sum(line(1), line(1)).as_tuple() == (2, 2, 2, 0)


class TestTensorAndDual:
    def test_dual(self, spinor):
        """Duals negate the odd classes."""
        assert dual(spinor).as_tuple() == (2, -1, 1, 0)

    def test_tensor_symmetric(self, spinor, bundle_a):
        """E ⊗ F = F ⊗ E."""
        assert tensor(spinor, bundle_a) == tensor(bundle_a, spinor)

    def test_tensor_identity(self, bundle_a):
        """E ⊗ O = E."""
        assert tensor(bundle_a, trivial(1)) == bundle_a

    def test_tensor_rank(self, spinor, bundle_a):
        """Ranks multiply."""
        assert tensor(spinor, bundle_a).rank == 6


class TestLocallyFree:
    def test_accepts_bundle(self, spinor):
        """Rank 2 data with c3 = 0 passes."""
        assert check_locally_free(spinor) == spinor

    def test_rejects_line_with_c2(self):
        """A line bundle has no c2."""
        with pytest.raises(NotLocallyFree):
            check_locally_free(ChernData(1, 1, 1, 0))

    def test_not_locally_free_is_value_error(self):
        """Library errors are ValueErrors."""
        assert issubclass(NotLocallyFree, ValueError)
        assert issubclass(NonIntegerResult, ValueError)
