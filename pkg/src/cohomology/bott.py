"""
Bott's formula for twisted differential forms on projective space.

h^q(Ω^p_{P^n}(t)) is nonzero in at most one degree q, given by a product of
binomial coefficients. TP^n is handled through TP^n ≅ Ω^{n-1}(n+1).
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement

from src.utils.helpers import binomial, binomial_polynomial

logger = logging.getLogger(__name__)

MAX_DIMENSION = 6


class IndexOutOfRange(ValueError):
    """Raised for a projective dimension, form degree or cohomology degree out of range."""
    pass


@dataclass(frozen=True)
class BottQuery:
    """h^q(Ω^p(t)) on P^n."""

    n: int
    p: int
    t: int
    q: int

    def __post_init__(self):
        if not 1 <= self.n <= MAX_DIMENSION:
            raise IndexOutOfRange(f"n must lie in [1, {MAX_DIMENSION}], got {self.n}")
        if not 0 <= self.p <= self.n:
            raise IndexOutOfRange(f"p must lie in [0, {self.n}], got {self.p}")
        if not 0 <= self.q <= self.n:
            raise IndexOutOfRange(f"q must lie in [0, {self.n}], got {self.q}")


@lru_cache(maxsize=None)
def bott(query: BottQuery) -> int:
    """
    Dimension of H^q(P^n, Ω^p(t)).

    Args:
        query (BottQuery): The indices

    Returns:
        int: The dimension
    """
    n, p, t, q = query.n, query.p, query.t, query.q
    if q == 0 and t > p:
        return binomial(t + n - p, t) * binomial(t - 1, p)
    if q == n and t < p - n:
        return binomial(-t + p, -t) * binomial(-t - 1, n - p)
    if q == p and t == 0:
        return 1
    return 0


def tangent_coh(n: int, t: int, q: int) -> int:
    """h^q(TP^n(t)), evaluated as h^q(Ω^{n-1}(t + n + 1))."""
    if n < 1:
        raise IndexOutOfRange(f"n must be positive, got {n}")
    return bott(BottQuery(n, n - 1, t + n + 1, q))


def chi_projective(n: int, t: int) -> int:
    """χ(O_{P^n}(t)) = C(t + n, n) as a polynomial in t."""
    return binomial_polynomial(t + n, n)


def omega_chi(n: int, p: int, t: int) -> int:
    """Alternating sum of h^q(Ω^p(t)) over q."""
    return sum((-1) ** q * bott(BottQuery(n, p, t, q)) for q in range(n + 1))


def coordinate_multiplication_surjective(n: int, s: int) -> bool:
    """
    Check by monomials that H⁰(O(s))^{n+1} → H⁰(O(s+1)) is onto on P^n.

    Every degree s+1 monomial must be a coordinate times a degree s monomial.
    """
    if s < 0:
        return False
    variables = range(n + 1)
    image = {
        tuple(sorted(monomial + (x,)))
        for monomial in combinations_with_replacement(variables, s)
        for x in variables
    }
    target = set(combinations_with_replacement(variables, s + 1))
    logger.debug(f"Degree {s + 1} monomials on P^{n}: {len(target)}, hit {len(image & target)}")
    return image == target
