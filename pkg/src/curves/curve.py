"""
Numerical invariants of the curves attached to rank-3 bundles on Q.

A globally generated rank-3 bundle F with c1(F) = c1 degenerates along a
curve C, and c2(F) is its degree. This module carries the curve-side
formulas: c3 from degree and genus, the number of trisecant lines, and the
invariant α = h¹(F^∨) that bounds the rank of indecomposable extensions.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Tuple

logger = logging.getLogger(__name__)

INFINITE_TRISECANTS = "infinitely many trisecant lines"


@dataclass(frozen=True)
class CurveData:
    """A possibly disconnected curve given by (degree, genus) of its components."""

    components: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        components = tuple(tuple(c) for c in self.components)
        if not components:
            raise ValueError("A curve needs at least one component")
        for d_i, g_i in components:
            if d_i < 1 or g_i < 0:
                raise ValueError(f"Invalid component (d, g) = ({d_i}, {g_i})")
        object.__setattr__(self, 'components', components)

    @classmethod
    def connected(cls, d: int, g: int) -> 'CurveData':
        return cls(((d, g),))

    @classmethod
    def disjoint(cls, *components: Tuple[int, int]) -> 'CurveData':
        return cls(tuple(components))

    @property
    def degree(self) -> int:
        return sum(d_i for d_i, _ in self.components)

    @property
    def genus(self) -> int:
        """Arithmetic genus 1 - #components + Σ g_i."""
        return 1 - len(self.components) + sum(g_i for _, g_i in self.components)

    @property
    def is_connected(self) -> bool:
        return len(self.components) == 1

    def __str__(self) -> str:
        if self.is_connected:
            return f"(d,g)=({self.degree},{self.genus})"
        parts = " ⊔ ".join(f"({d_i},{g_i})" for d_i, g_i in self.components)
        return f"{parts}, (d,g)=({self.degree},{self.genus})"

    def to_dict(self):
        return {
            'components': [list(c) for c in self.components],
            'degree': self.degree,
            'genus': self.genus,
        }


def c3_from_curve(curve: CurveData, c1: int) -> int:
    """
    Third Chern class of the bundle degenerating along a curve.

    Args:
        curve (CurveData): The degeneracy curve
        c1 (int): First Chern class of the bundle

    Returns:
        int: 2g - 2 + d(3 - c1) with g the arithmetic genus
    """
    if c1 not in (1, 2):
        logger.warning(f"c3 formula used outside c1 in {{1, 2}} (c1 = {c1})")
    return 2 * curve.genus - 2 + curve.degree * (3 - c1)


def trisecant(d: int, g: int) -> int:
    """
    Expected number of trisecant lines of a curve of degree d and genus g in P⁴.

    A negative value means the curve has infinitely many trisecants.
    """
    if d < 1 or g < 0:
        raise ValueError(f"Need d >= 1 and g >= 0, got d={d}, g={g}")
    return (d - 2) * (d - 3) * (d - 4) // 6 - g * (d - 4)


def trisecant_note(d: int, g: int) -> str:
    return INFINITE_TRISECANTS if trisecant(d, g) < 0 else ''


def alpha_bounds(curve: CurveData, c1: int) -> Tuple[int, int]:
    """Lower and upper bounds (3 - c1)d + g - 3 ≤ α ≤ (3 - c1)d + g - 1."""
    base = (3 - c1) * curve.degree + curve.genus
    return base - 3, base - 1


def alpha(curve: CurveData, c1: int, trivial_summands: int = 0) -> Optional[int]:
    """
    α = h¹(F^∨) for the rank-3 bundle F attached to a curve.

    From 0 → O² → F → I_C(c1) → 0, α = h⁰(ω_C(3 - c1)) - 2 + h⁰(F^∨), and
    h⁰(F^∨) counts the trivial summands of F. Each component contributes
    d_i(3 - c1) + g_i - 1 sections to ω_C(3 - c1) once 3 - c1 > 0.

    Args:
        curve (CurveData): The curve
        c1 (int): First Chern class, 1 or 2
        trivial_summands (int): Number of trivial summands of F

    Returns:
        Optional[int]: α, or None when only alpha_bounds applies
    """
    m = 3 - c1
    if m < 1:
        logger.debug(f"No closed form for α when c1 = {c1}")
        return None
    sections = sum(d_i * m + g_i - 1 for d_i, g_i in curve.components)
    value = sections - 2 + trivial_summands
    if value < 0:
        logger.debug(f"Curve {curve} with c1 = {c1} needs more trivial summands")
        return None
    return value
