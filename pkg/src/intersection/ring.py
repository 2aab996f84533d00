"""
Chow ring of the smooth quadric threefold.

Classes are stored over the basis (1, h, l, p): the fundamental class, the
hyperplane class, the line class and the point class. Multiplication follows
h·h = 2l and h·l = p, with everything above degree 3 truncated.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple, Union

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class ChowElement:
    """A degree-truncated class a0 + a1·h + a2·l + a3·p with exact coefficients."""

    a0: Fraction = Fraction(0)
    a1: Fraction = Fraction(0)
    a2: Fraction = Fraction(0)
    a3: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ('a0', 'a1', 'a2', 'a3'):
            value = getattr(self, name)
            if type(value) is Fraction:
                continue
            if isinstance(value, float):
                raise TypeError(f"Chow coefficients must be exact, got float for {name}")
            object.__setattr__(self, name, Fraction(value))

    @classmethod
    def from_coefficients(cls, coefficients) -> 'ChowElement':
        """Build an element from an iterable of at most four coefficients."""
        values = list(coefficients)
        if len(values) > 4:
            raise ValueError(f"Expected at most 4 coefficients, got {len(values)}")
        values += [0] * (4 - len(values))
        return cls(*values)

    @property
    def coefficients(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.a0, self.a1, self.a2, self.a3)

    def degree(self, k: int) -> Fraction:
        """Coefficient of the degree-k basis class."""
        return self.coefficients[k]

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coefficients)

    def __add__(self, other: 'ChowElement') -> 'ChowElement':
        if not isinstance(other, ChowElement):
            return NotImplemented
        return ChowElement(*(x + y for x, y in zip(self.coefficients, other.coefficients)))

    def __sub__(self, other: 'ChowElement') -> 'ChowElement':
        if not isinstance(other, ChowElement):
            return NotImplemented
        return ChowElement(*(x - y for x, y in zip(self.coefficients, other.coefficients)))

    def __neg__(self) -> 'ChowElement':
        return ChowElement(*(-x for x in self.coefficients))

    def __mul__(self, other: Union['ChowElement', Scalar]) -> 'ChowElement':
        if isinstance(other, ChowElement):
            return chow_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return ChowElement(*(x * other for x in self.coefficients))
        return NotImplemented

    def __rmul__(self, other: Scalar) -> 'ChowElement':
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, exponent: int) -> 'ChowElement':
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = ONE
        for _ in range(exponent):
            result = chow_mul(result, self)
        return result

    def inverse(self) -> 'ChowElement':
        """
        Multiplicative inverse of a unit.

        Writes x = a0·(1 + y) with y nilpotent and sums the geometric series,
        which stops at y³.

        Raises:
            ZeroDivisionError: If the degree-0 coefficient vanishes
        """
        if self.a0 == 0:
            raise ZeroDivisionError("Only classes with nonzero rank part are invertible")
        y = self * Fraction(1, self.a0) - ONE
        series = ONE - y + y * y - y * y * y
        return series * Fraction(1, self.a0)

    def __str__(self) -> str:
        terms = []
        for coefficient, symbol in zip(self.coefficients, ('', 'h', 'l', 'p')):
            if coefficient == 0:
                continue
            if symbol and abs(coefficient) == 1:
                body = symbol
            else:
                body = f"{abs(coefficient)}{symbol}" if symbol else f"{abs(coefficient)}"
            sign = '-' if coefficient < 0 else '+'
            terms.append((sign, body))
        if not terms:
            return '0'
        first_sign, first_body = terms[0]
        text = ('-' if first_sign == '-' else '') + first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


def chow_mul(x: ChowElement, y: ChowElement) -> ChowElement:
    """
    Multiply two classes in the Chow ring of the quadric.

    Args:
        x (ChowElement): First factor
        y (ChowElement): Second factor

    Returns:
        ChowElement: The product, truncated above degree 3
    """
    a0, a1, a2, a3 = x.coefficients
    b0, b1, b2, b3 = y.coefficients
    return ChowElement(
        a0 * b0,
        a0 * b1 + a1 * b0,
        a0 * b2 + a2 * b0 + 2 * a1 * b1,
        a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1,
    )


ONE = ChowElement(1, 0, 0, 0)
H = ChowElement(0, 1, 0, 0)
L = ChowElement(0, 0, 1, 0)
P = ChowElement(0, 0, 0, 1)
