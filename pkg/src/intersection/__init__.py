"""
Intersection theory on the quadric threefold.

Exact Chow-ring arithmetic, Chern-class calculus and Euler characteristics.
"""

from src.intersection.ring import ChowElement, chow_mul
from src.intersection.chern import (
    ChernData, NonIntegerQuotient, NonIntegerResult, NotLocallyFree,
    dual, line, tensor, total_chern, trivial, twist, twist_by_splitting, whitney_third,
    whitney_total,
)
from src.intersection.character import (
    TODD, ChernCharacter, chern_character, chern_from_character, chi_formula, chi_hrr,
    newton_character,
)
