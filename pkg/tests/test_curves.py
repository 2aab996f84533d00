"""
Tests for curve numerics: c3, trisecants and α.
"""

import pytest

from src.curves.curve import (
    INFINITE_TRISECANTS, CurveData, alpha, alpha_bounds, c3_from_curve,
    trisecant, trisecant_note,
)


@pytest.fixture
def two_conics():
    return CurveData.disjoint((2, 0), (2, 0))


class TestCurveData:
    def test_connected(self):
        """A connected curve keeps its degree and genus."""
        curve = CurveData.connected(5, 1)
        assert (curve.degree, curve.genus, curve.is_connected) == (5, 1, True)

    def test_disjoint_genus(self, two_conics):
        """Two disjoint conics have degree 4 and arithmetic genus -1."""
        assert (two_conics.degree, two_conics.genus) == (4, -1)
        assert not two_conics.is_connected

    def test_invalid_component(self):
        """Components need positive degree and non-negative genus."""
        with pytest.raises(ValueError):
            CurveData.connected(0, 0)
        with pytest.raises(ValueError):
            CurveData.connected(3, -1)

    def test_str(self, two_conics):
        """Curves print their components and totals."""
        assert str(CurveData.connected(5, 1)) == "(d,g)=(5,1)"
        assert str(two_conics) == "(2,0) ⊔ (2,0), (d,g)=(4,-1)"


class TestThirdChernClass:
    @pytest.mark.parametrize("curve, c1, expected", [
        (CurveData.connected(4, 0), 2, 2),
        (CurveData.disjoint((2, 0), (2, 0)), 2, 0),
        (CurveData.connected(8, 5), 2, 16),
        (CurveData.connected(4, 1), 2, 4),
        (CurveData.connected(5, 1), 2, 5),
        (CurveData.connected(6, 2), 2, 8),
        (CurveData.connected(2, 0), 1, 2),
        (CurveData.connected(1, 0), 1, 0),
    ])
    def test_values(self, curve, c1, expected):
        """c3 = 2g - 2 + d(3 - c1)."""
        assert c3_from_curve(curve, c1) == expected


class TestTrisecant:
    @pytest.mark.parametrize("d, g, expected", [
        (5, 0, 1), (6, 0, 4), (6, 1, 2), (7, 3, 1),
        (5, 1, 0), (6, 2, 0), (8, 5, 0), (4, 0, 0),
    ])
    def test_values(self, d, g, expected):
        """Trisecant counts of general curves in P⁴."""
        assert trisecant(d, g) == expected

    def test_negative_count(self):
        """A negative count means infinitely many trisecants."""
        assert trisecant(9, 10) < 0
        assert trisecant_note(9, 10) == INFINITE_TRISECANTS
        assert trisecant_note(5, 1) == ''

    def test_invalid(self):
        """Degree must be positive."""
        with pytest.raises(ValueError):
            trisecant(0, 0)


class TestAlpha:
    @pytest.mark.parametrize("curve, expected", [
        (CurveData.disjoint((2, 0), (2, 0)), 0),
        (CurveData.connected(4, 0), 1),
        (CurveData.connected(4, 1), 2),
        (CurveData.connected(5, 1), 3),
        (CurveData.connected(6, 2), 5),
        (CurveData.connected(8, 5), 10),
    ])
    def test_c1_two(self, curve, expected):
        """α for the rank-three bundles with c1 = 2."""
        assert alpha(curve, 2) == expected
        lower, upper = alpha_bounds(curve, 2)
        assert lower <= expected <= upper

    def test_c1_one(self):
        """A conic gives α = 1; a line with one trivial summand gives 0."""
        assert alpha(CurveData.connected(2, 0), 1) == 1
        assert alpha(CurveData.connected(1, 0), 1, trivial_summands=1) == 0

    def test_negative_is_none(self):
        """A line without a trivial summand has no α."""
        assert alpha(CurveData.connected(1, 0), 1) is None

    def test_c1_outside_range(self):
        """Only the bounds apply for c1 = 3."""
        assert alpha(CurveData.connected(3, 0), 3) is None
        assert alpha_bounds(CurveData.connected(3, 0), 3) == (-3, -1)
