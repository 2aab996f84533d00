"""
Cohomology tables h⁰..h³ of the standard bundles on Q.

Line bundles and Σ are ACM. A and A^∨ are read off Bott's formula on P³
through the double cover Q → P³. Φ, Φ^∨ and G_P come from the long exact
sequences of their defining presentations. E_P rests on a cited vanishing.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Tuple

from src.cohomology.bott import BottQuery, bott, tangent_coh
from src.cohomology.bundles import (
    Dual, DirectSum, EP, GP, Line, Phi, PullbackA, Spinor, StandardBundle, Twist,
    atom_and_twist,
)
from src.intersection.character import chi_hrr
from src.intersection.chern import twist
from src.utils.helpers import binomial

logger = logging.getLogger(__name__)


class UnsupportedPair(ValueError):
    """Raised for a bundle or tensor pair outside the implemented catalogue."""
    pass


class UnsupportedBundle(UnsupportedPair):
    """Raised when a single bundle expression has no cohomology table."""
    pass


class ProvenanceKind(Enum):
    MECHANICAL = 'mechanical'
    CITED = 'cited'


@dataclass(frozen=True)
class Provenance:
    """Whether a table was derived mechanically or rests on a cited fact."""

    kind: ProvenanceKind = ProvenanceKind.MECHANICAL
    citation: str = ''

    def __post_init__(self):
        if self.kind is ProvenanceKind.CITED and not self.citation:
            raise ValueError("A cited fact needs a citation")

    @classmethod
    def mechanical(cls) -> 'Provenance':
        return cls()

    @classmethod
    def cited(cls, citation: str) -> 'Provenance':
        return cls(ProvenanceKind.CITED, citation)

    @property
    def is_cited(self) -> bool:
        return self.kind is ProvenanceKind.CITED

    def __str__(self) -> str:
        return f"cited: {self.citation}" if self.is_cited else "mechanical"


@dataclass(frozen=True)
class CohomologyTable:
    """Dimensions h⁰..h³ with their provenance and any cited inputs of the chase."""

    h0: int
    h1: int
    h2: int
    h3: int
    provenance: Provenance = field(default_factory=Provenance.mechanical)
    assumptions: Tuple[str, ...] = ()

    def __post_init__(self):
        for i, value in enumerate(self.as_tuple()):
            if value < 0:
                raise ValueError(f"h{i} = {value} is negative")

    def as_tuple(self) -> Tuple[int, int, int, int]:
        return (self.h0, self.h1, self.h2, self.h3)

    def __getitem__(self, i: int) -> int:
        return self.as_tuple()[i]

    def euler_characteristic(self) -> int:
        return self.h0 - self.h1 + self.h2 - self.h3

    def __add__(self, other: 'CohomologyTable') -> 'CohomologyTable':
        if not isinstance(other, CohomologyTable):
            return NotImplemented
        values = [x + y for x, y in zip(self.as_tuple(), other.as_tuple())]
        citations = [t.provenance.citation for t in (self, other) if t.provenance.is_cited]
        provenance = (Provenance.cited('; '.join(dict.fromkeys(citations)))
                      if citations else Provenance.mechanical())
        assumptions = tuple(dict.fromkeys(self.assumptions + other.assumptions))
        return CohomologyTable(*values, provenance=provenance, assumptions=assumptions)

    def to_dict(self):
        return {
            'h0': self.h0, 'h1': self.h1, 'h2': self.h2, 'h3': self.h3,
            'provenance': self.provenance.kind.value,
            'citation': self.provenance.citation,
            'assumptions': list(self.assumptions),
        }


def _chi(bundle: StandardBundle, t: int) -> int:
    value = chi_hrr(twist(bundle.chern(), t))
    if value.denominator != 1:
        raise ArithmeticError(f"Non-integral Euler characteristic {value} for {bundle}({t})")
    return int(value)


def h0_line(t: int) -> int:
    """h⁰(O_Q(t)): degree t forms on P⁴ modulo multiples of the quadric."""
    if t < 0:
        return 0
    return binomial(t + 4, 4) - binomial(t + 2, 4)


def h3_line(t: int) -> int:
    return h0_line(-3 - t)


@lru_cache(maxsize=None)
def coh_line(t: int) -> CohomologyTable:
    return CohomologyTable(h0_line(t), 0, 0, h3_line(t))


def _h0_spinor(t: int) -> int:
    return _chi(Spinor(), t) if t >= -1 else 0


@lru_cache(maxsize=None)
def coh_spinor(t: int) -> CohomologyTable:
    """Σ(t): ACM, sections from χ in the range t ≥ -1, h³ by Σ^∨ ≅ Σ(-1)."""
    return CohomologyTable(_h0_spinor(t), 0, 0, _h0_spinor(-4 - t))


@lru_cache(maxsize=None)
def coh_A(t: int) -> CohomologyTable:
    """
    A(t) through the double cover: h^i(A(t)) = h^i(TP³(t-1)) + h^i(TP³(t-2)).

    Args:
        t (int): Twist

    Returns:
        CohomologyTable: The table of A(t)
    """
    values = [tangent_coh(3, t - 1, i) + tangent_coh(3, t - 2, i) for i in range(4)]
    return CohomologyTable(*values)


@lru_cache(maxsize=None)
def coh_A_dual(t: int) -> CohomologyTable:
    """A^∨(t): h^i(Ω_{P³}(t+1)) + h^i(Ω_{P³}(t))."""
    values = [bott(BottQuery(3, 1, t + 1, i)) + bott(BottQuery(3, 1, t, i)) for i in range(4)]
    return CohomologyTable(*values)


def _h0_phi_dual(s: int) -> int:
    # Kernel of H⁰(O(s))⁵ → H⁰(O(s+1)), onto for s ≥ 0.
    if s < 0:
        return 0
    return 5 * h0_line(s) - h0_line(s + 1)


@lru_cache(maxsize=None)
def coh_phi(t: int) -> CohomologyTable:
    """
    Φ(t) from 0 → O(-1) → O⁵ → Φ → 0.

    h⁰ and h¹ come straight from the sequence, h³ from h⁰(Φ^∨(-3-t)),
    and h² from χ.
    """
    h0 = 5 * h0_line(t) - h0_line(t - 1)
    h3 = _h0_phi_dual(-3 - t)
    h2 = _chi(Phi(), t) - h0 + h3
    return CohomologyTable(h0, 0, h2, h3)


@lru_cache(maxsize=None)
def coh_phi_dual(s: int) -> CohomologyTable:
    """Φ^∨(s) from 0 → Φ^∨ → O⁵ → O(1) → 0."""
    h0 = _h0_phi_dual(s)
    h1 = 0 if s >= 0 else h0_line(s + 1)
    h3 = 5 * h3_line(s) - h3_line(s + 1)
    return CohomologyTable(h0, h1, 0, h3)


@lru_cache(maxsize=None)
def coh_gp(t: int) -> CohomologyTable:
    """
    G_P(t) from 0 → O(-1) → O⁴ → G_P → 0.

    The four linear forms cut out the point P, so the dual multiplication map
    H⁰(O(s))⁴ → H⁰(O(s+1)) has a one-dimensional cokernel for every s ≥ -1.
    That cokernel is H²(G_P(t)) for t ≤ -2.
    """
    h0 = 4 * h0_line(t) - h0_line(t - 1)
    h2 = 1 if t <= -2 else 0
    h3 = 4 * h3_line(t) - h3_line(t - 1) + h2
    return CohomologyTable(h0, 0, h2, h3)


EP_CITATION = (
    "h1(E_P(t)) = 0 for all t, and the extension class of E_P makes "
    "H2(G_P(t)) → H3(O(t+1)) injective for t ≤ -4"
)


@lru_cache(maxsize=None)
def coh_ep(t: int) -> CohomologyTable:
    """E_P(t) from 0 → O(1) → E_P → G_P → 0 with the cited vanishing of h¹."""
    gp = coh_gp(t)
    h0 = h0_line(t + 1) + gp.h0
    h2 = gp.h2 if t in (-2, -3) else 0
    h3 = h0 + h2 - _chi(EP(), t)
    return CohomologyTable(h0, 0, h2, h3, provenance=Provenance.cited(EP_CITATION))


def cohomology(bundle: StandardBundle) -> CohomologyTable:
    """
    Cohomology table of a bundle expression.

    Args:
        bundle (StandardBundle): Any expression whose summands are catalogue
            bundles, possibly dualized and twisted

    Returns:
        CohomologyTable: The table

    Raises:
        UnsupportedBundle: If some summand has no table
    """
    bundle = bundle.normalize()
    if isinstance(bundle, DirectSum):
        tables = [cohomology(part) for part in bundle.parts]
        total = tables[0]
        for table in tables[1:]:
            total = total + table
        return total

    atom, k = atom_and_twist(bundle)
    if isinstance(atom, Line):
        return coh_line(k)
    if isinstance(atom, Spinor):
        return coh_spinor(k)
    if isinstance(atom, PullbackA):
        return coh_A(k)
    if isinstance(atom, Phi):
        return coh_phi(k)
    if isinstance(atom, GP):
        return coh_gp(k)
    if isinstance(atom, EP):
        return coh_ep(k)
    if isinstance(atom, Dual) and isinstance(atom.inner, PullbackA):
        return coh_A_dual(k)
    if isinstance(atom, Dual) and isinstance(atom.inner, Phi):
        return coh_phi_dual(k)
    logger.error(f"No cohomology table for {bundle}")
    raise UnsupportedBundle(f"No cohomology table for {bundle}")


def serre_dual_check(b: StandardBundle, t: int) -> bool:
    """
    Compare h^i(B(t)) with h^{3-i}(B^∨(-3-t)), using ω_Q = O_Q(-3).

    Raises:
        UnsupportedPair: If B is not locally free or its dual has no table
    """
    b = b.normalize()
    if not b.locally_free:
        raise UnsupportedPair(f"{b} is not locally free, Serre duality does not apply")
    left = cohomology(Twist(b, t))
    right = cohomology(Twist(Dual(b), -3 - t))
    agrees = all(left[i] == right[3 - i] for i in range(4))
    if not agrees:
        logger.warning(f"Serre duality fails for {b}({t}): {left.as_tuple()} vs {right.as_tuple()}")
    return agrees
