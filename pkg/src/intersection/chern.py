"""
Chern-class calculus on the quadric threefold.

Chern data is kept in integer (h, l, p) units, the way every bundle table on Q
is written. Whitney quotients are evaluated as products in the Chow ring and
converted back with an integrality check; twists use the expanded polynomials.
"""

import logging
from dataclasses import dataclass
from math import comb
from typing import Tuple

from src.intersection.ring import ChowElement, ONE, H, L, P
from src.utils.helpers import binomial_polynomial

logger = logging.getLogger(__name__)


class NonIntegerQuotient(ValueError):
    """Raised when a Whitney division does not yield integral Chern data."""
    pass


class NonIntegerResult(ValueError):
    """Raised when a conversion back to Chern data leaves non-integers."""
    pass


class NotLocallyFree(ValueError):
    """Raised when Chern data cannot belong to a vector bundle of its rank."""
    pass


@dataclass(frozen=True)
class ChernData:
    """Rank and Chern classes (c1, c2, c3) in (h, l, p) units."""

    rank: int
    c1: int = 0
    c2: int = 0
    c3: int = 0

    def __post_init__(self):
        for name in ('rank', 'c1', 'c2', 'c3'):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise TypeError(f"{name} must be an integer, got {value!r}")
        if self.rank < 0:
            raise ValueError(f"Rank must be non-negative, got {self.rank}")

    @property
    def classes(self) -> Tuple[int, int, int]:
        return (self.c1, self.c2, self.c3)

    def as_tuple(self) -> Tuple[int, int, int, int]:
        return (self.rank, self.c1, self.c2, self.c3)

    def __str__(self) -> str:
        return f"({self.rank}; {self.c1}, {self.c2}, {self.c3})"


def line(k: int) -> ChernData:
    """Chern data of O_Q(k)."""
    return ChernData(1, k, 0, 0)


def trivial(rank: int) -> ChernData:
    """Chern data of the trivial bundle of the given rank."""
    return ChernData(rank, 0, 0, 0)


def total_chern(c: ChernData) -> ChowElement:
    """Return the total Chern class 1 + c1·h + c2·l + c3·p."""
    return ChowElement(1, c.c1, c.c2, c.c3)


def _integral_data(rank: int, total: ChowElement, error: type) -> ChernData:
    if total.a0 != 1 or not total.is_integral():
        logger.error(f"Non-integral total Chern class {total} for rank {rank}")
        raise error(f"Total Chern class {total} is not integral Chern data")
    return ChernData(rank, int(total.a1), int(total.a2), int(total.a3))


def whitney_third(known_sub: ChernData, known_total: ChernData) -> ChernData:
    """
    Solve 0 → sub → total → quotient → 0 for the quotient.

    Args:
        known_sub (ChernData): Chern data of the subbundle
        known_total (ChernData): Chern data of the middle term

    Returns:
        ChernData: Chern data of the quotient

    Raises:
        ValueError: If the subbundle has larger rank than the middle term
        NonIntegerQuotient: If c(total)/c(sub) is not integral
    """
    if known_sub.rank > known_total.rank:
        raise ValueError(
            f"Subbundle rank {known_sub.rank} exceeds total rank {known_total.rank}"
        )
    quotient = total_chern(known_total) * total_chern(known_sub).inverse()
    return _integral_data(known_total.rank - known_sub.rank, quotient, NonIntegerQuotient)


def whitney_total(sub: ChernData, quotient: ChernData) -> ChernData:
    """Chern data of the middle term of 0 → sub → E → quotient → 0."""
    total = total_chern(sub) * total_chern(quotient)
    return _integral_data(sub.rank + quotient.rank, total, NonIntegerQuotient)


def direct_sum(*parts: ChernData) -> ChernData:
    """Chern data of a direct sum."""
    result = trivial(0)
    for part in parts:
        result = whitney_total(result, part)
    return result


def twist(c: ChernData, k: int) -> ChernData:
    """
    Chern data of E ⊗ O_Q(k).

    Expands c(E ⊗ L) = Σ c_i(E)·(1 + k·h)^(r−i) with h² = 2l and h³ = 2p.
    The binomials are the generalized ones, so ranks below 3 need no special
    case.

    Args:
        c (ChernData): Chern data of E
        k (int): Twist

    Returns:
        ChernData: Chern data of E(k)
    """
    if k == 0:
        return c
    r, c1, c2, c3 = c.as_tuple()
    return ChernData(
        r,
        c1 + r * k,
        c2 + 2 * (r - 1) * k * c1 + 2 * binomial_polynomial(r, 2) * k ** 2,
        c3 + (r - 2) * k * c2 + 2 * binomial_polynomial(r - 1, 2) * k ** 2 * c1
        + 2 * binomial_polynomial(r, 3) * k ** 3,
    )


def twist_by_splitting(c: ChernData, k: int) -> ChernData:
    """
    twist() multiplied out in the Chow ring.

    Negative exponents (rank below 3) go through the power series inverse.
    """
    factor = ONE + H * k
    total = ChowElement()
    power = factor ** (c.rank - 3)
    for class_i in (P * c.c3, L * c.c2, H * c.c1, ONE):
        total = total + class_i * power
        power = power * factor
    return _integral_data(c.rank, total, NonIntegerResult)


def dual(c: ChernData) -> ChernData:
    """Chern data of the dual bundle."""
    return ChernData(c.rank, -c.c1, c.c2, -c.c3)


def tensor(a: ChernData, b: ChernData) -> ChernData:
    """
    Chern data of a tensor product, through Chern characters.

    Raises:
        NonIntegerResult: If the product character is not integral Chern data
    """
    from src.intersection.character import chern_character, chern_from_character

    product = chern_character(a).as_chow() * chern_character(b).as_chow()
    return chern_from_character(product)


def printed_twist_c3(c: ChernData, k: int) -> int:
    """
    The published closed form for c3 of a twist.

    Its k² term lacks the factor c1, so it only agrees with twist() when that
    term vanishes. Kept for the erratum report.
    """
    r = c.rank
    return (c.c3 + k * (r - 2) * c.c2 + 2 * k ** 2 * comb(r - 1, 2)
            + 2 * k ** 3 * comb(r, 3))


def corrected_twist_c3(c: ChernData, k: int) -> int:
    """The c3 twist polynomial with the k² term multiplied by c1."""
    r = c.rank
    return (c.c3 + k * (r - 2) * c.c2 + 2 * k ** 2 * comb(r - 1, 2) * c.c1
            + 2 * k ** 3 * comb(r, 3))


def check_locally_free(c: ChernData) -> ChernData:
    """
    Reject Chern data that no vector bundle of that rank can carry.

    Raises:
        NotLocallyFree: If classes above the rank are nonzero
    """
    if any(c.classes[c.rank:]):
        logger.error(f"Chern data {c} has classes above its rank")
        raise NotLocallyFree(f"Chern data {c} has nonzero classes above rank {c.rank}")
    return c


def whitney_kernel(known_total: ChernData, known_quotient: ChernData) -> ChernData:
    """Solve 0 → kernel → total → quotient → 0 for the kernel."""
    if known_quotient.rank > known_total.rank:
        raise ValueError(
            f"Quotient rank {known_quotient.rank} exceeds total rank {known_total.rank}"
        )
    kernel = total_chern(known_total) * total_chern(known_quotient).inverse()
    return _integral_data(known_total.rank - known_quotient.rank, kernel, NonIntegerQuotient)
