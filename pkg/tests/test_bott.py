"""
Tests for Bott's formula on projective spaces.
"""

import pytest

from src.cohomology.bott import (
    BottQuery, IndexOutOfRange, bott, chi_projective,
    coordinate_multiplication_surjective, omega_chi, tangent_coh,
)


class TestBott:
    @pytest.mark.parametrize("n, p, t, q, expected", [
        (3, 1, 0, 1, 1),
        (3, 1, 2, 1, 0),
        (3, 1, 1, 1, 0),
        (3, 1, 2, 0, 6),
        (3, 0, 2, 0, 10),
        (3, 3, 0, 3, 1),
        (3, 3, -4, 3, 35),
        (4, 2, 0, 2, 1),
    ])
    def test_values(self, n, p, t, q, expected):
        """Known dimensions of twisted forms."""
        assert bott(BottQuery(n, p, t, q)) == expected

    @pytest.mark.parametrize("n, p, q", [(7, 0, 0), (3, 4, 0), (3, 1, 4), (0, 0, 0)])
    def test_index_out_of_range(self, n, p, q):
        """Indices outside 1 ≤ n ≤ 6, 0 ≤ p, q ≤ n are rejected."""
        with pytest.raises(IndexOutOfRange):
            BottQuery(n, p, 0, q)

    def test_concentrated_in_one_degree(self):
        """h^q(Ω^p(t)) is nonzero for at most one q."""
        for n in range(1, 5):
            for p in range(n + 1):
                for t in range(-8, 9):
                    nonzero = [q for q in range(n + 1) if bott(BottQuery(n, p, t, q))]
                    assert len(nonzero) <= 1

    @pytest.mark.parametrize("n", range(1, 5))
    @pytest.mark.parametrize("t", range(-12, 13))
    def test_serre_duality(self, n, t):
        """h^q(Ω^p(t)) = h^(n-q)(Ω^(n-p)(-t)) on P^n."""
        for p in range(n + 1):
            for q in range(n + 1):
                assert bott(BottQuery(n, p, t, q)) == bott(BottQuery(n, n - p, -t, n - q))


class TestTangent:
    @pytest.mark.parametrize("t, q, expected", [(0, 0, 15), (-1, 0, 4), (-2, 1, 0), (-2, 0, 0)])
    def test_tangent_p3(self, t, q, expected):
        """Sections and vanishing of TP³(t)."""
        assert tangent_coh(3, t, q) == expected

    def test_invalid_dimension(self):
        """n must be positive."""
        with pytest.raises(IndexOutOfRange):
            tangent_coh(0, 0, 0)


class TestEulerCharacteristics:
    @pytest.mark.parametrize("n, t, expected", [(3, 1, 4), (3, 0, 1), (3, -4, -1), (4, 2, 15)])
    def test_chi_projective(self, n, t, expected):
        """χ(O_{P^n}(t)) = C(t+n, n) as a polynomial."""
        assert chi_projective(n, t) == expected

    def test_omega_chi(self):
        """χ(Ω_P³) = -1."""
        assert omega_chi(3, 1, 0) == -1

    def test_omega_chi_euler_sequence(self):
        """χ(Ω¹(t)) = (n+1)χ(O(t-1)) - χ(O(t))."""
        for t in range(-6, 7):
            assert omega_chi(3, 1, t) == 4 * chi_projective(3, t - 1) - chi_projective(3, t)


class TestCoordinateMultiplication:
    @pytest.mark.parametrize("n, s", [(1, 0), (3, 0), (3, 4), (4, 10)])
    def test_surjective(self, n, s):
        """Coordinates times degree s monomials reach every degree s+1 monomial."""
        assert coordinate_multiplication_surjective(n, s)

    def test_negative_degree(self):
        """There are no monomials of negative degree."""
        assert not coordinate_multiplication_surjective(3, -1)
