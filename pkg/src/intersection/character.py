"""
Chern characters, the Todd class of Q and Euler characteristics.

Euler characteristics are computed two ways: by the closed cubic polynomial in
the Chern classes, and by Hirzebruch-Riemann-Roch as the point coefficient of
ch(E)·td(Q). Both are exact rationals.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from src.intersection.chern import (
    ChernData, NonIntegerResult, direct_sum, dual, line, tensor, trivial,
    twist, whitney_kernel, whitney_third,
)
from src.intersection.ring import ChowElement, ONE, H, L, P
from src.utils.helpers import binomial_polynomial

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ChernCharacter:
    """Chern character with ch1, ch2, ch3 in (h, l, p) units."""

    ch0: Fraction
    ch1: Fraction = Fraction(0)
    ch2: Fraction = Fraction(0)
    ch3: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ('ch0', 'ch1', 'ch2', 'ch3'):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    def as_chow(self) -> ChowElement:
        return ChowElement(self.ch0, self.ch1, self.ch2, self.ch3)

    @classmethod
    def from_chow(cls, x: ChowElement) -> 'ChernCharacter':
        return cls(*x.coefficients)


# Normal sequence: c(TQ) = (1 + h)^5 / (1 + 2h); td1 = c1/2.
TODD = ChowElement(1, Fraction(3, 2), Fraction(13, 6), 1)


def chern_character(c: ChernData) -> ChernCharacter:
    """
    Convert Chern data to a Chern character.

    On Q the Newton identities collapse to ch1 = c1, ch2 = c1² - c2 and
    ch3 = (2c1³ - 3c1c2 + 3c3)/6 in (h, l, p) units.

    Args:
        c (ChernData): Chern data

    Returns:
        ChernCharacter: ch(E) truncated at degree 3
    """
    r, c1, c2, c3 = c.as_tuple()
    return ChernCharacter(Fraction(r), Fraction(c1), Fraction(c1 * c1 - c2),
                          Fraction(2 * c1 ** 3 - 3 * c1 * c2 + 3 * c3, 6))


def newton_character(c: ChernData) -> ChernCharacter:
    """Chern character by Newton's identities, multiplied out in the Chow ring."""
    e1, e2, e3 = H * c.c1, L * c.c2, P * c.c3
    p1 = e1
    p2 = e1 * p1 - e2 * 2
    p3 = e1 * p2 - e2 * p1 + e3 * 3
    character = ONE * c.rank + p1 + p2 * Fraction(1, 2) + p3 * Fraction(1, 6)
    return ChernCharacter.from_chow(character)


def chern_from_character(ch: Union[ChernCharacter, ChowElement]) -> ChernData:
    """
    Invert chern_character.

    Raises:
        NonIntegerResult: If the character does not come from integral data
    """
    x = ch.as_chow() if isinstance(ch, ChernCharacter) else ch
    c1 = x.a1
    c2 = c1 * c1 - x.a2
    c3 = (6 * x.a3 - 2 * c1 ** 3 + 3 * c1 * c2) / 3
    values = (x.a0, c1, c2, c3)
    if any(v.denominator != 1 for v in values) or x.a0 < 0:
        logger.error(f"Character {x} is not the character of integral Chern data")
        raise NonIntegerResult(f"Chern character {x} does not give integral Chern data")
    return ChernData(*(int(v) for v in values))


def chi_formula(c: ChernData) -> Fraction:
    """Evaluate the closed cubic Euler characteristic polynomial on Q."""
    r, c1, c2, c3 = c.as_tuple()
    return (Fraction(2 * c1 ** 3 - 3 * c1 * c2 + 3 * c3, 6)
            + Fraction(3 * (c1 ** 2 - c2), 2)
            + Fraction(13 * c1, 6)
            + r)


def chi_hrr(c: ChernData) -> Fraction:
    """Point coefficient of ch(E)·td(Q)."""
    ch = chern_character(c)
    return ch.ch0 * TODD.a3 + ch.ch1 * TODD.a2 + ch.ch2 * TODD.a1 + ch.ch3 * TODD.a0


def chi_twist(c: ChernData, k: int) -> Fraction:
    return chi_hrr(twist(c, k))


def chi_tensor(a: ChernData, b: ChernData) -> Fraction:
    return chi_hrr(tensor(a, b))


def chi_line(t: int) -> int:
    """χ(O_Q(t)), as the Hilbert polynomial of the quadric."""
    value = binomial_polynomial(t + 4, 4) - binomial_polynomial(t + 2, 4)
    return int(value)


def tangent_chern() -> ChernData:
    """Chern data of TQ, from the Euler sequence on P⁴ and the normal sequence."""
    restricted_tangent = whitney_third(trivial(1), direct_sum(*[line(1)] * 5))
    return whitney_kernel(restricted_tangent, line(2))


def todd_from_tangent() -> ChowElement:
    """Todd class 1 + c1/2 + (c1² + c2)/12 + c1·c2/24 of TQ."""
    t = tangent_chern()
    c1, c2 = H * t.c1, L * t.c2
    return (ONE + c1 * Fraction(1, 2) + (c1 * c1 + c2) * Fraction(1, 12)
            + c1 * c2 * Fraction(1, 24))


def serre_dual_chi(c: ChernData) -> Fraction:
    """-χ(E^∨(-3)), which equals χ(E) on the odd-dimensional Q."""
    return -chi_hrr(twist(dual(c), -3))
