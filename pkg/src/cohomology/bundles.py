"""
Symbolic names for the standard bundles on the quadric threefold.

Atoms are the line bundles O(t), the spinor bundle Σ, the pullback A of
TP³(-1) under a projection from a point off Q, the restriction Φ of TP⁴(-1),
the sheaf G_P, the bundle E_P and the pullback φ*N(1) of a twisted
null-correlation bundle. Expressions close the atoms under duals,
twists and direct sums; normalize() brings them to a canonical shape.
"""

import logging
from dataclasses import dataclass
from typing import List, Tuple

from src.intersection.chern import (
    ChernData, check_locally_free, direct_sum, dual, line, trivial, twist,
    whitney_kernel, whitney_third, whitney_total,
)
from src.utils.helpers import binomial_polynomial

logger = logging.getLogger(__name__)


class StandardBundle:
    """Base class for bundle expressions."""

    locally_free = True

    def normalize(self) -> 'StandardBundle':
        return self

    def chern(self) -> ChernData:
        raise NotImplementedError("Subclasses must implement chern method")

    @property
    def rank(self) -> int:
        return self.chern().rank

    def dual(self) -> 'StandardBundle':
        return Dual(self).normalize()

    def twist(self, k: int) -> 'StandardBundle':
        return Twist(self, k).normalize()

    def __add__(self, other: 'StandardBundle') -> 'StandardBundle':
        if not isinstance(other, StandardBundle):
            return NotImplemented
        return DirectSum((self, other)).normalize()

    def to_dict(self):
        return {'bundle': str(self), 'chern': list(self.chern().as_tuple())}


@dataclass(frozen=True)
class Line(StandardBundle):
    t: int = 0

    def chern(self) -> ChernData:
        return line(self.t)

    def __str__(self) -> str:
        return f"O({self.t})" if self.t else "O"


@dataclass(frozen=True)
class Spinor(StandardBundle):
    """Σ: c1 = 1, a section vanishes along a line, so c2 = 1."""

    def chern(self) -> ChernData:
        return ChernData(2, 1, 1, 0)

    def __str__(self) -> str:
        return "Σ"


@dataclass(frozen=True)
class PullbackA(StandardBundle):
    """A_P, the cokernel of O(-1) → O⁴ given by the projection from P."""

    center: str = 'P'

    def chern(self) -> ChernData:
        return check_locally_free(whitney_third(line(-1), trivial(4)))

    def __str__(self) -> str:
        return f"A_{self.center}"


@dataclass(frozen=True)
class Phi(StandardBundle):
    """Φ, the cokernel of O(-1) → O⁵ from the Euler sequence."""

    def chern(self) -> ChernData:
        return check_locally_free(whitney_third(line(-1), trivial(5)))

    def __str__(self) -> str:
        return "Φ"


@dataclass(frozen=True)
class GP(StandardBundle):
    """G_P, the cokernel of O(-1) → O⁴ by four linear forms through a point P of Q."""

    center: str = 'P'
    locally_free = False

    def chern(self) -> ChernData:
        return whitney_third(line(-1), trivial(4))

    def __str__(self) -> str:
        return f"G_{self.center}"


@dataclass(frozen=True)
class EP(StandardBundle):
    """E_P, the nonsplit extension 0 → O(1) → E_P → G_P → 0."""

    center: str = 'P'

    def chern(self) -> ChernData:
        return check_locally_free(whitney_total(line(1), GP(self.center).chern()))

    def __str__(self) -> str:
        return f"E_{self.center}"


def _p3_product(x: Tuple[int, ...], y: Tuple[int, ...]) -> Tuple[int, ...]:
    return tuple(sum(x[i] * y[j - i] for i in range(j + 1)) for j in range(4))


def _p3_inverse(x: Tuple[int, ...]) -> Tuple[int, ...]:
    inverse = [1, 0, 0, 0]
    for j in range(1, 4):
        inverse[j] = -sum(x[i] * inverse[j - i] for i in range(1, j + 1))
    return tuple(inverse)


def _p3_twist(rank: int, total: Tuple[int, ...], k: int) -> Tuple[int, ...]:
    return tuple(sum(total[i] * binomial_polynomial(rank - i, j - i) * k ** (j - i) for i in range(j + 1))
                 for j in range(4))


@dataclass(frozen=True)
class PullbackN(StandardBundle):
    """
    φ*N(1), a null-correlation bundle of P³ twisted by 1 and pulled back along
    the double cover φ: Q → P³ given by the projection from a point off Q.

    Total Chern classes on P³ are coefficient tuples in H. N is the cokernel
    of O(-1) → Ω(1), and Ω(1) is the kernel of O⁴ → O(1). Pulling back sends
    H to h, H² to 2l and H³ to 2p.
    """

    def chern(self) -> ChernData:
        omega_one = _p3_inverse((1, 1, 0, 0))
        null_correlation = _p3_product(omega_one, _p3_inverse((1, -1, 0, 0)))
        _, c1, c2, c3 = _p3_twist(2, null_correlation, 1)
        return check_locally_free(ChernData(2, c1, 2 * c2, 2 * c3))

    def __str__(self) -> str:
        return "φ*N(1)"


@dataclass(frozen=True)
class Dual(StandardBundle):
    inner: StandardBundle

    @property
    def locally_free(self) -> bool:
        return self.inner.locally_free

    def normalize(self) -> StandardBundle:
        inner = self.inner.normalize()
        if isinstance(inner, Line):
            return Line(-inner.t)
        if isinstance(inner, Spinor):
            return Twist(inner, -1)
        if isinstance(inner, Dual):
            return inner.inner
        if isinstance(inner, Twist):
            return Twist(Dual(inner.inner), -inner.k).normalize()
        if isinstance(inner, DirectSum):
            return DirectSum(tuple(Dual(part) for part in inner.parts)).normalize()
        return Dual(inner)

    def chern(self) -> ChernData:
        return dual(self.inner.chern())

    def __str__(self) -> str:
        return f"{self.inner}^∨"


@dataclass(frozen=True)
class Twist(StandardBundle):
    inner: StandardBundle
    k: int

    @property
    def locally_free(self) -> bool:
        return self.inner.locally_free

    def normalize(self) -> StandardBundle:
        inner = self.inner.normalize()
        if self.k == 0:
            return inner
        if isinstance(inner, Line):
            return Line(inner.t + self.k)
        if isinstance(inner, Twist):
            return Twist(inner.inner, inner.k + self.k).normalize()
        if isinstance(inner, DirectSum):
            return DirectSum(tuple(Twist(part, self.k) for part in inner.parts)).normalize()
        return Twist(inner, self.k)

    def chern(self) -> ChernData:
        return twist(self.inner.chern(), self.k)

    def __str__(self) -> str:
        inner = f"({self.inner})" if isinstance(self.inner, DirectSum) else str(self.inner)
        return f"{inner}({self.k})"


@dataclass(frozen=True)
class DirectSum(StandardBundle):
    parts: Tuple[StandardBundle, ...]

    def __post_init__(self):
        if not self.parts:
            raise ValueError("A direct sum needs at least one summand")

    @property
    def locally_free(self) -> bool:
        return all(part.locally_free for part in self.parts)

    def normalize(self) -> StandardBundle:
        flat = []
        for part in self.parts:
            part = part.normalize()
            flat.extend(part.parts if isinstance(part, DirectSum) else [part])
        if len(flat) == 1:
            return flat[0]
        return DirectSum(tuple(flat))

    def chern(self) -> ChernData:
        return direct_sum(*(part.chern() for part in self.parts))

    def __str__(self) -> str:
        return " ⊕ ".join(str(part) for part in self.parts)


O = Line(0)
SPINOR = Spinor()
A = PullbackA()
PHI = Phi()
G_P = GP()
E_P = EP()


@dataclass(frozen=True)
class BundleSequence:
    """A short exact sequence 0 → sub → middle → quotient → 0."""

    name: str
    sub: StandardBundle
    middle: StandardBundle
    quotient: StandardBundle

    def terms(self) -> Tuple[StandardBundle, StandardBundle, StandardBundle]:
        return (self.sub, self.middle, self.quotient)

    def twist(self, k: int) -> 'BundleSequence':
        return BundleSequence(self.name, *(Twist(term, k).normalize() for term in self.terms()))

    def __str__(self) -> str:
        return f"0 → {self.sub} → {self.middle} → {self.quotient} → 0"


def _trivial_sum(rank: int) -> StandardBundle:
    return DirectSum((O,) * rank)


DEFINING_SEQUENCES = (
    BundleSequence("Euler sequence", Line(-1), _trivial_sum(5), PHI),
    BundleSequence("dual Euler sequence", Dual(PHI), _trivial_sum(5), Line(1)),
    BundleSequence("A as a quotient of Φ", O, PHI, A),
    BundleSequence("projection from P", Line(-1), _trivial_sum(4), A),
    BundleSequence("spinor sequence", Twist(SPINOR, -1), _trivial_sum(4), SPINOR),
    BundleSequence("four linear forms through P", Line(-1), _trivial_sum(4), G_P),
    BundleSequence("extension defining E_P", Line(1), E_P, G_P),
)


def rank_two_data() -> List[ChernData]:
    """Rank-two Chern data solved from the defining sequences, with φ*N(1)."""
    found = [PullbackN().chern()]
    for sequence in DEFINING_SEQUENCES:
        sub, middle, quotient = (term.chern() for term in sequence.terms())
        if quotient.rank == 2:
            found.append(whitney_third(sub, middle))
        if sub.rank == 2:
            found.append(whitney_kernel(middle, quotient))
    return list(dict.fromkeys(found))


def atom_and_twist(bundle: StandardBundle) -> Tuple[StandardBundle, int]:
    """Split a normalized non-sum expression into (atom or dual atom, twist)."""
    bundle = bundle.normalize()
    if isinstance(bundle, DirectSum):
        raise ValueError(f"{bundle} is a direct sum")
    if isinstance(bundle, Line):
        return Line(0), bundle.t
    if isinstance(bundle, Twist):
        return bundle.inner, bundle.k
    return bundle, 0
