"""
Divisor classes on a del Pezzo surface of degree 4.

The surface is P² blown up in five points, with Picard lattice spanned by
the pullback of a line and the five exceptional curves. A curve class
a·L - Σ b_i·E_i has degree 3a - Σ b_i in the anticanonical embedding, and
adjunction gives a² - Σ b_i² = 2g - 2 + d.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from math import isqrt
from typing import Dict, Iterator, List, Tuple

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class DelPezzoClass:
    """The class a·L - Σ b_i·E_i, with the b_i weakly decreasing."""

    a: int
    b: Tuple[int, int, int, int, int]

    def __post_init__(self):
        b = tuple(self.b)
        if self.a < 1:
            raise ValueError(f"a must be positive, got {self.a}")
        if len(b) != 5 or any(x < 0 for x in b):
            raise ValueError(f"b must be five non-negative integers, got {b}")
        if any(b[i] < b[i + 1] for i in range(4)):
            raise ValueError(f"b must be weakly decreasing, got {b}")
        object.__setattr__(self, 'b', b)

    @property
    def degree(self) -> int:
        return 3 * self.a - sum(self.b)

    @property
    def genus(self) -> int:
        return ((self.a - 1) * (self.a - 2) - sum(x * (x - 1) for x in self.b)) // 2

    @property
    def is_standard(self) -> bool:
        """a ≥ b1 + b2 + b3, so no quadratic transformation lowers a."""
        return self.a >= sum(self.b[:3])

    def __str__(self) -> str:
        return f"({self.a}; {','.join(str(x) for x in self.b)})"

    def to_dict(self):
        return {'a': self.a, 'b': list(self.b)}


def cremona(cls: DelPezzoClass) -> DelPezzoClass:
    """Apply the quadratic transformation centred at the first three points."""
    b1, b2, b3, b4, b5 = cls.b
    a = 2 * cls.a - b1 - b2 - b3
    b = sorted((cls.a - b2 - b3, cls.a - b1 - b3, cls.a - b1 - b2, b4, b5), reverse=True)
    return DelPezzoClass(a, tuple(b))


def _passes_geometric_filter(cls: DelPezzoClass, g: int) -> bool:
    # A plane model of degree a must allow genus g; a curve of positive genus must meet E_1.
    return (cls.a - 1) * (cls.a - 2) // 2 >= g and (g == 0 or cls.b[0] > 0)


def _decreasing_tuples(total: int, squares: int, parts: int, cap: int) -> Iterator[Tuple[int, ...]]:
    if parts == 0:
        if total == 0 and squares == 0:
            yield ()
        return
    # Cauchy-Schwarz on the remaining parts.
    if total < 0 or squares < 0 or total * total > parts * squares:
        return
    if total > parts * cap or squares > parts * cap * cap:
        return
    for first in range(min(cap, total, isqrt(squares)), -1, -1):
        for rest in _decreasing_tuples(total - first, squares - first * first, parts - 1, first):
            yield (first,) + rest


def _a_range(d: int, g: int) -> range:
    """
    Values of a compatible with Cauchy-Schwarz on the b_i.

    (3a - d)² = (Σ b_i)² ≤ 5·Σ b_i² = 5(a² - 2g + 2 - d), that is
    4a² - 6ad + d² + 5(2g - 2 + d) ≤ 0.
    """
    k = 2 * g - 2 + d
    discriminant = 20 * d * d - 80 * k
    if discriminant < 0:
        return range(0)
    root = isqrt(discriminant)
    lowest = max(1, -(-d // 3))
    highest = (6 * d + root + 1) // 8 + 1
    return range(lowest, highest + 1)


def delpezzo_classes(d: int, g: int, all_forms: bool = False,
                     geometric_filter: bool = False) -> List[DelPezzoClass]:
    """
    All classes of degree d and arithmetic genus g.

    Args:
        d (int): Degree 3a - Σ b_i
        g (int): Arithmetic genus
        all_forms (bool): Drop the requirement a ≥ b1 + b2 + b3, which lists
            every member of a Cremona orbit instead of the standard one
        geometric_filter (bool): Keep only classes with a plane model of
            enough genus that meet the first exceptional curve when g ≥ 1

    Returns:
        List[DelPezzoClass]: Solutions ordered by (a, b)
    """
    if d < 1 or g < 0:
        raise ValueError(f"Need d >= 1 and g >= 0, got d={d}, g={g}")
    k = 2 * g - 2 + d
    solutions = []
    for a in _a_range(d, g):
        total, squares = 3 * a - d, a * a - k
        for b in _decreasing_tuples(total, squares, 5, max(total, 0)):
            cls = DelPezzoClass(a, b)
            if not all_forms and not cls.is_standard:
                continue
            if geometric_filter and not _passes_geometric_filter(cls, g):
                continue
            solutions.append(cls)
    solutions.sort()
    logger.debug(f"Del Pezzo classes for (d,g)=({d},{g}): {[str(s) for s in solutions]}")
    return solutions


@lru_cache(maxsize=4)
def _tuples_by_invariants(box: int) -> Dict[Tuple[int, int], List[Tuple[int, ...]]]:
    index: Dict[Tuple[int, int], List[Tuple[int, ...]]] = {}
    for combo in combinations_with_replacement(range(box + 1), 5):
        b = tuple(sorted(combo, reverse=True))
        index.setdefault((sum(b), sum(x * x for x in b)), []).append(b)
    return index


def brute_force_classes(d: int, g: int, box: int = 20, all_forms: bool = False) -> List[DelPezzoClass]:
    """Search every a ≤ box and b_i ≤ box directly."""
    k = 2 * g - 2 + d
    index = _tuples_by_invariants(box)
    solutions = []
    for a in range(1, box + 1):
        for b in index.get((3 * a - d, a * a - k), []):
            cls = DelPezzoClass(a, b)
            if all_forms or cls.is_standard:
                solutions.append(cls)
    return sorted(solutions)
