"""
Cohomology of the tensor pairs needed by the higher-rank classification.

Connecting-map ranks are not determined by Chern data, so this is a closed
catalogue: each entry chases one short exact sequence whose outer terms come
from the single-bundle tables. Where the chase needs a map to vanish or to
be injective, the input is recorded in the table's assumptions; where a value
is quoted rather than derived, the provenance is a cited fact.
"""

import logging
from dataclasses import dataclass
from typing import Callable, List, Optional

from src.cohomology.bundles import (
    Dual, Phi, PullbackA, Spinor, StandardBundle, Twist,
)
from src.cohomology.tables import (
    CohomologyTable, Provenance, UnsupportedPair, coh_A, coh_A_dual, coh_phi,
    coh_phi_dual, coh_spinor,
)
from src.intersection.character import chi_hrr
from src.intersection.chern import tensor, twist

logger = logging.getLogger(__name__)

PHI_SIMPLE = "Φ is simple"
A_STABLE = ("A is stable, hence simple, and non-isomorphic stable bundles of the "
            "same slope admit no nonzero maps")
A_PHI_SLOPES = "A and Φ are stable with slopes 1/3 > 1/4, so there is no nonzero map A → Φ"
SPINOR_PRESENTATION = "Σ fits in 0 → Σ(-1) → O⁴ → Σ → 0"
SPINOR_A_VANISHING = (
    "h1(Σ ⊗ A_P^∨) = 0: every section of Σ restricted to the conics over the "
    "branch lines extends"
)


def _chi_of_pair(a: StandardBundle, b: StandardBundle, t: int) -> int:
    value = chi_hrr(twist(tensor(a.chern(), b.chern()), t))
    if value.denominator != 1:
        raise ArithmeticError(f"Non-integral Euler characteristic {value} for {a} ⊗ {b}({t})")
    return int(value)


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ArithmeticError(f"Chase input failed: {message}")


def _finish(h0: int, h1: int, h3: int, chi: int, provenance: Provenance = None,
            assumptions=()) -> CohomologyTable:
    h2 = chi - h0 + h1 + h3
    return CohomologyTable(h0, h1, h2, h3,
                           provenance=provenance or Provenance.mechanical(),
                           assumptions=tuple(assumptions))


def _end_phi() -> CohomologyTable:
    # 0 → Φ^∨⊗Φ → Φ⁵ → Φ(1) → 0
    phi, phi1 = coh_phi(0), coh_phi(1)
    _require(phi.h1 == 0, "h1(Φ) = 0")
    h0 = 1
    h1 = phi1.h0 - 5 * phi.h0 + h0
    # h3 = h0(End(Φ)(-3)) and End(Φ)(-3) sits inside Φ(-3)⁵.
    _require(coh_phi(-3).h0 == 0, "h0(Φ(-3)) = 0")
    chi = _chi_of_pair(Dual(Phi()), Phi(), 0)
    return _finish(h0, h1, 0, chi, assumptions=[PHI_SIMPLE])


def _hom_a(same_center: bool) -> CohomologyTable:
    # 0 → A_O^∨(-1) → (A_O^∨)⁴ → A_O^∨⊗A_P → 0
    lower, middle = coh_A_dual(-1), coh_A_dual(0)
    _require(middle.h0 == 0, "h0(A^∨) = 0")
    _require(lower.h2 == 0, "h2(A^∨(-1)) = 0")
    h0 = 1 if same_center else 0
    h1 = 4 * middle.h1 - (lower.h1 - h0)
    _require(coh_A(-3).h0 == 0, "h0(A(-3)) = 0")
    chi = _chi_of_pair(Dual(PullbackA('O')), PullbackA('P'), 0)
    return _finish(h0, h1, 0, chi, assumptions=[A_STABLE])


def _phi_a_dual() -> CohomologyTable:
    # 0 → A^∨(-1) → (A^∨)⁵ → A^∨⊗Φ → 0
    lower, middle = coh_A_dual(-1), coh_A_dual(0)
    _require(middle.h0 == 0 and lower.h2 == 0, "h0(A^∨) = h2(A^∨(-1)) = 0")
    h0 = 0
    h1 = 5 * middle.h1 - (lower.h1 - h0)
    _require(coh_phi(-3).h0 == 0, "h0(Φ(-3)) = 0")
    chi = _chi_of_pair(Phi(), Dual(PullbackA()), 0)
    return _finish(h0, h1, 0, chi, assumptions=[A_PHI_SLOPES])


def _a_phi_dual() -> CohomologyTable:
    # 0 → Φ^∨(-1) → (Φ^∨)⁴ → A⊗Φ^∨ → 0 gives h0; 0 → A⊗Φ^∨ → A⁵ → A(1) → 0 gives h1.
    _require(coh_phi_dual(0).h0 == 0 and coh_phi_dual(0).h1 == 0, "h0(Φ^∨) = h1(Φ^∨) = 0")
    h0 = coh_phi_dual(-1).h1
    _require(coh_A(0).h1 == 0, "h1(A) = 0")
    h1 = coh_A(1).h0 - 5 * coh_A(0).h0 + h0
    _require(coh_phi(-3).h0 == 0, "h0(Φ(-3)) = 0")
    chi = _chi_of_pair(PullbackA(), Dual(Phi()), 0)
    return _finish(h0, h1, 0, chi)


def _spinor_a_dual() -> CohomologyTable:
    # 0 → Σ⊗A^∨ → Σ⁴ → Σ(1) → 0 gives h0 - h1 = 4h0(Σ) - h0(Σ(1)) = 0.
    _require(coh_spinor(0).h1 == 0, "h1(Σ) = 0")
    difference = 4 * coh_spinor(0).h0 - coh_spinor(1).h0
    h1 = 0
    h0 = difference + h1
    # h3 = h0(Σ⊗A(-4)) from 0 → Σ(-5) → Σ(-4)⁴ → Σ⊗A(-4) → 0.
    _require(coh_spinor(-4).h0 == 0 and coh_spinor(-5).h1 == 0, "h0(Σ(-4)) = h1(Σ(-5)) = 0")
    chi = _chi_of_pair(Spinor(), Dual(PullbackA()), 0)
    return _finish(h0, h1, 0, chi, provenance=Provenance.cited(SPINOR_A_VANISHING))


def _spinor_phi_dual() -> CohomologyTable:
    # 0 → Σ⊗A^∨ → Σ⊗Φ^∨ → Σ → 0, dual to 0 → O → Φ → A → 0.
    sub = _spinor_a_dual()
    spinor = coh_spinor(0)
    _require(sub.h1 == 0 and spinor.h1 == 0, "h1(Σ⊗A^∨) = h1(Σ) = 0")
    h0 = sub.h0 + spinor.h0
    h1 = 0
    _require(coh_spinor(-4).h0 == 0 and coh_spinor(-5).h1 == 0, "h0(Σ(-4)) = h1(Σ(-5)) = 0")
    chi = _chi_of_pair(Spinor(), Dual(Phi()), 0)
    return _finish(h0, h1, 0, chi, provenance=Provenance.cited(SPINOR_A_VANISHING))


def _spinor_phi_minus_four() -> CohomologyTable:
    # 0 → Σ(-5) → Σ(-4)⁵ → Σ⊗Φ(-4) → 0
    lower, middle = coh_spinor(-5), coh_spinor(-4)
    _require(middle.h0 == 0 and middle.h1 == 0 and lower.h2 == 0, "Σ is ACM with h0(Σ(-4)) = 0")
    h0, h1 = 0, 0
    # h2 is the kernel of H³(Σ(-5)) → H³(Σ(-4))⁵, dual to H⁰(Σ)⁵ → H⁰(Σ(1)),
    # which is onto because H⁰(O(1))⁴ → H⁰(Σ(1)) is.
    h2 = 0
    chi = _chi_of_pair(Spinor(), Phi(), -4)
    h3 = h0 - h1 + h2 - chi
    return CohomologyTable(h0, h1, h2, h3, assumptions=(SPINOR_PRESENTATION,))


@dataclass(frozen=True)
class PairEntry:
    """One supported tensor pair a ⊗ b ⊗ O(twist)."""

    name: str
    left: StandardBundle
    right: StandardBundle
    twist: int
    compute: Callable[[], CohomologyTable]
    same_center: Optional[bool] = None

    def to_dict(self):
        return {'name': self.name, 'pair': f"{self.left} ⊗ {self.right}", 'twist': self.twist}


PAIR_CATALOGUE: List[PairEntry] = [
    PairEntry('end-phi', Dual(Phi()), Phi(), 0, _end_phi),
    PairEntry('hom-a-same', Dual(PullbackA('P')), PullbackA('P'), 0,
              lambda: _hom_a(True), same_center=True),
    PairEntry('hom-a-distinct', Dual(PullbackA('O')), PullbackA('P'), 0,
              lambda: _hom_a(False), same_center=False),
    PairEntry('phi-adual', Phi(), Dual(PullbackA()), 0, _phi_a_dual),
    PairEntry('a-phidual', PullbackA(), Dual(Phi()), 0, _a_phi_dual),
    PairEntry('spinor-adual', Spinor(), Dual(PullbackA()), 0, _spinor_a_dual),
    PairEntry('spinor-phidual', Spinor(), Dual(Phi()), 0, _spinor_phi_dual),
    PairEntry('spinor-phi', Spinor(), Phi(), -4, _spinor_phi_minus_four),
]


def pair_catalogue() -> List[PairEntry]:
    return list(PAIR_CATALOGUE)


def _strip_centers(bundle: StandardBundle) -> StandardBundle:
    if isinstance(bundle, PullbackA):
        return PullbackA('*')
    if isinstance(bundle, Dual):
        return Dual(_strip_centers(bundle.inner))
    if isinstance(bundle, Twist):
        return Twist(_strip_centers(bundle.inner), bundle.k)
    return bundle


def _centers(bundle: StandardBundle) -> List[str]:
    if isinstance(bundle, PullbackA):
        return [bundle.center]
    if isinstance(bundle, (Dual, Twist)):
        return _centers(bundle.inner)
    return []


def _matches(entry: PairEntry, a: StandardBundle, b: StandardBundle, t: int) -> bool:
    if entry.twist != t:
        return False
    shapes = sorted([str(_strip_centers(a)), str(_strip_centers(b))])
    wanted = sorted([str(_strip_centers(entry.left)), str(_strip_centers(entry.right))])
    if shapes != wanted:
        return False
    if entry.same_center is None:
        return True
    centers = _centers(a) + _centers(b)
    return (len(set(centers)) == 1) == entry.same_center


def find_pair(name: str) -> PairEntry:
    for entry in PAIR_CATALOGUE:
        if entry.name == name:
            return entry
    raise UnsupportedPair(f"Unknown pair '{name}'. Supported: {', '.join(e.name for e in PAIR_CATALOGUE)}")


def coh_pair(a: StandardBundle, b: StandardBundle, twist: int = 0) -> CohomologyTable:
    """
    Cohomology of a ⊗ b ⊗ O(twist) for a catalogue pair.

    Args:
        a (StandardBundle): First factor
        b (StandardBundle): Second factor, order does not matter
        twist (int): Twist applied to the product

    Returns:
        CohomologyTable: The table, with provenance and chase assumptions

    Raises:
        UnsupportedPair: If the pair is outside the catalogue
    """
    a, b = a.normalize(), b.normalize()
    for entry in PAIR_CATALOGUE:
        if _matches(entry, a, b, twist):
            logger.debug(f"Pair {a} ⊗ {b} ({twist}) resolved as {entry.name}")
            return entry.compute()
    supported = ', '.join(f"{e.left} ⊗ {e.right} ({e.twist})" for e in PAIR_CATALOGUE)
    logger.error(f"Unsupported pair {a} ⊗ {b} at twist {twist}")
    raise UnsupportedPair(f"{a} ⊗ {b} at twist {twist} is outside the catalogue: {supported}")
