"""
Verification suites for the verify-paper report.

Each suite compares library results with the published values recorded in
data/reference/ledger.yml, then runs its invariant batteries. A ledger value
carrying an erratum note is reported as flagged when the library disagrees
with it. Any other disagreement is a failure.
"""

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Callable, Dict, Iterable, List, Optional

import numpy as np

from src.classification.classifier import (
    classify, decomposable_sums, entries_for, higher_rank_table,
    trisecant_obstruction_holds,
)
from src.classification.reference import rank_table_check
from src.cohomology.bott import (
    BottQuery, MAX_DIMENSION, bott, chi_projective, coordinate_multiplication_surjective,
    omega_chi, tangent_coh,
)
from src.cohomology.bundles import (
    DEFINING_SEQUENCES, EP, GP, Dual, Line, Phi, PullbackA, Spinor, Twist, rank_two_data,
)
from src.cohomology.pairs import coh_pair, pair_catalogue
from src.cohomology.tables import cohomology, serre_dual_check
from src.curves.curve import CurveData, alpha, alpha_bounds, c3_from_curve, trisecant
from src.curves.delpezzo import DelPezzoClass, brute_force_classes, cremona, delpezzo_classes
from src.data.loader import load_reference
from src.intersection.character import (
    TODD, chern_character, chi_formula, chi_hrr, chi_line, chi_tensor, chi_twist,
    newton_character, serre_dual_chi, tangent_chern, todd_from_tangent,
)
from src.intersection.chern import (
    ChernData, NotLocallyFree, check_locally_free, corrected_twist_c3, dual, line,
    printed_twist_c3, tensor, trivial, twist, twist_by_splitting, whitney_kernel, whitney_third,
    whitney_total,
)
from src.utils.helpers import binomial, to_jsonable

logger = logging.getLogger(__name__)

SECTIONS = ('chern', 'hrr', 'bott', 'cohomology', 'curves', 'classification')
PASS, FAIL, FLAGGED = 'pass', 'fail', 'flagged'


class UnknownSection(ValueError):
    """Raised for a verify-paper section name that has no suite."""
    pass


@dataclass(frozen=True)
class CheckResult:
    section: str
    ref: str
    quote: str
    status: str
    detail: str = ''

    def to_dict(self):
        return {
            'section': self.section,
            'ref': self.ref,
            'quote': self.quote,
            'status': self.status,
            'detail': self.detail,
        }


class CheckSuite(ABC):
    """Abstract base class for verification suites."""

    section = ''

    def __init__(self, config, ledger: Optional[List[Dict[str, Any]]] = None):
        """
        Initialize the suite.

        Args:
            config: Configuration profile with battery sizes and ranges
            ledger (List[Dict], optional): Published entries for this section;
                read from the bundled ledger when omitted
        """
        self.config = config
        if ledger is None:
            ledger = load_reference('ledger', reference_dir=config.REFERENCE_DIR).get(self.section, [])
        self.ledger = ledger
        self.rng = np.random.default_rng(config.RANDOM_SEED)
        self.results: List[CheckResult] = []

    @abstractmethod
    def computations(self) -> Dict[str, Callable[[], Any]]:
        """Map ledger ids to the library computation of the published value."""
        pass

    def batteries(self) -> None:
        """Run invariant checks that have no single published value."""
        pass

    def run(self) -> List[CheckResult]:
        self.results = []
        self._check_ledger()
        self.batteries()
        logger.info(f"Section {self.section}: {len(self.results)} checks")
        return self.results

    def get_results(self) -> List[CheckResult]:
        return self.results

    def _add_result(self, ref: str, quote: str, status: str, detail: str = '') -> None:
        self.results.append(CheckResult(self.section, ref, quote, status, detail))
        if status == FAIL:
            logger.warning(f"Check failed: {ref}: {detail}")
        elif status == FLAGGED:
            logger.warning(f"Flagged: {ref}: {detail}")

    def _check_ledger(self) -> None:
        computations = self.computations()
        for entry in self.ledger:
            ref, quote, published = entry['ref'], entry['claim'], entry['value']
            compute = computations.get(entry['id'])
            if compute is None:
                self._add_result(ref, quote, FAIL, f"no computation for ledger id '{entry['id']}'")
                continue
            computed = to_jsonable(compute())
            if computed == published:
                self._add_result(ref, quote, PASS)
            elif entry.get('erratum'):
                self._add_result(ref, quote, FLAGGED, f"computed {computed}; {entry['erratum']}")
            else:
                self._add_result(ref, quote, FAIL, f"computed {computed}, published {published}")

    def _battery(self, ref: str, quote: str, failures: List[str], cases: int) -> None:
        if failures:
            shown = '; '.join(failures[:3])
            self._add_result(ref, quote, FAIL, f"{len(failures)} of {cases} cases fail: {shown}")
        else:
            self._add_result(ref, quote, PASS, f"{cases} cases")

    def _random_chern(self, max_rank: int = 6, bound: int = 20) -> ChernData:
        rank = int(self.rng.integers(1, max_rank + 1))
        c1, c2, c3 = (int(v) for v in self.rng.integers(-bound, bound + 1, size=3))
        return ChernData(rank, c1, c2, c3)


class ChernSuite(CheckSuite):
    """Chern-class calculus: twists, duals, Whitney quotients and tensor products."""

    section = 'chern'

    def computations(self):
        return {
            'twist-a': lambda: twist(ChernData(3, 1, 2, 2), 1).as_tuple(),
            'dual-spinor': lambda: dual(ChernData(2, 1, 1, 0)).as_tuple(),
            'euler-phi': lambda: whitney_third(line(-1), trivial(5)).as_tuple(),
            'tangent': lambda: tangent_chern().as_tuple(),
            'twist-c3': lambda: corrected_twist_c3(ChernData(3, 2, 0, 0), 1),
        }

    def batteries(self):
        c = ChernData(3, 2, 0, 0)
        gap = twist(c, 1).c3 - printed_twist_c3(c, 1)
        status = PASS if gap == 2 and printed_twist_c3(c, 1) == 4 else FAIL
        self._add_result("printed c3 twist polynomial", "printed value 4 at (3;2,0,0), k = 1",
                         status, f"oracle exceeds printed value by {gap}")

        failures = []
        for _ in range(self.config.TWIST_BATTERY_SIZE):
            c = self._random_chern()
            k = int(self.rng.integers(-5, 6))
            twisted = twist(c, k)
            if (twisted != twist_by_splitting(c, k) or twisted != tensor(c, line(k))
                    or twisted.c3 != corrected_twist_c3(c, k)):
                failures.append(f"{c} ⊗ O({k})")
        self._battery("twist against the splitting principle", "c(E ⊗ L) = Σ c_i(E)(1 + kh)^(r-i)",
                      failures, self.config.TWIST_BATTERY_SIZE)

        failures = []
        for _ in range(self.config.TWIST_BATTERY_SIZE):
            c = self._random_chern()
            j, k = (int(v) for v in self.rng.integers(-5, 6, size=2))
            if twist(twist(c, j), k) != twist(c, j + k) or dual(twist(c, k)) != twist(dual(c), -k):
                failures.append(f"{c}, j = {j}, k = {k}")
        self._battery("twists compose and commute with duals",
                      "(E(j))(k) = E(j+k), E(k)^∨ = E^∨(-k)", failures, self.config.TWIST_BATTERY_SIZE)

        failures = []
        for _ in range(self.config.TENSOR_BATTERY_SIZE):
            sub, quotient = self._random_chern(4, 10), self._random_chern(4, 10)
            total = whitney_total(sub, quotient)
            if whitney_third(sub, total) != quotient or whitney_kernel(total, quotient) != sub:
                failures.append(f"{sub}, {quotient}")
        self._battery("Whitney quotients undo Whitney sums", "c(E)/c(S) = c(Q) when c(E) = c(S)·c(Q)",
                      failures, self.config.TENSOR_BATTERY_SIZE)

        failures, cases = [], 0
        span = range(-self.config.CHI_TWIST_RANGE, self.config.CHI_TWIST_RANGE + 1)
        for c in rank_two_data():
            for k in span:
                for e in (twist(c, k), dual(twist(c, k))):
                    cases += 1
                    try:
                        check_locally_free(e)
                    except NotLocallyFree:
                        failures.append(str(e))
                        continue
                    if dual(e) != twist(e, -e.c1):
                        failures.append(str(e))
        self._battery("rank-two bundles from the defining sequences", "c3 = 0 and E^∨ = E(-c1)",
                      failures, cases)

        failures = []
        for _ in range(self.config.TENSOR_BATTERY_SIZE):
            a, b = self._random_chern(4, 6), self._random_chern(4, 6)
            if tensor(a, b) != tensor(b, a) or dual(dual(a)) != a or tensor(a, trivial(1)) != a:
                failures.append(f"{a}, {b}")
        self._battery("tensor product symmetry", "E ⊗ F = F ⊗ E, E^∨∨ = E, E ⊗ O = E",
                      failures, self.config.TENSOR_BATTERY_SIZE)


class HRRSuite(CheckSuite):
    """Euler characteristics by the closed formula and by Riemann-Roch."""

    section = 'hrr'

    def computations(self):
        spinor = ChernData(2, 1, 1, 0)
        return {
            'chi-o2': lambda: chi_hrr(line(2)),
            'chi-spinor': lambda: chi_hrr(spinor),
            'ch-spinor': lambda: chern_character(spinor).as_chow().coefficients,
            'todd': lambda: TODD.coefficients,
            'chi-trivial': lambda: chi_hrr(trivial(1)),
        }

    def batteries(self):
        self._add_result("Todd class from the tangent bundle", "td(TQ) = td(Q)",
                         PASS if todd_from_tangent() == TODD else FAIL)

        failures = []
        for c2 in range(-20, 21):
            e = ChernData(2, -1, c2, 0)
            expected = (1 - c2, 6 - 2 * c2, 0, 7 - 6 * c2)
            computed = (chi_hrr(e), chi_hrr(twist(e, 1)), chi_hrr(twist(e, -1)), chi_tensor(e, dual(e)))
            if computed != expected:
                failures.append(f"c2 = {c2}: {computed}")
        self._battery("rank-two bundles with c1 = -1",
                      "χ(E) = 1 - c2, χ(E(1)) = 6 - 2c2, χ(E(-1)) = 0, χ(End E) = 7 - 6c2",
                      failures, 41)

        failures = []
        for _ in range(self.config.CHI_BATTERY_SIZE):
            c = self._random_chern()
            if chi_formula(c) != chi_hrr(c):
                failures.append(str(c))
        self._battery("closed χ polynomial", "χ(E) = (2c1³ - 3c1c2 + 3c3)/6 + 3(c1² - c2)/2 + 13c1/6 + r",
                      failures, self.config.CHI_BATTERY_SIZE)

        failures = []
        for _ in range(self.config.TWIST_BATTERY_SIZE):
            c = self._random_chern()
            if chern_character(c) != newton_character(c):
                failures.append(str(c))
        self._battery("Chern character by Newton's identities",
                      "ch2 = c1² - c2, ch3 = (2c1³ - 3c1c2 + 3c3)/6", failures, self.config.TWIST_BATTERY_SIZE)

        span = range(-self.config.CHI_TWIST_RANGE, self.config.CHI_TWIST_RANGE + 1)
        sequences = [(s.name, *(term.chern() for term in s.terms())) for s in DEFINING_SEQUENCES]
        sequences.append(("normal sequence", tangent_chern(), twist(Phi().chern(), 1), line(2)))
        failures = []
        for name, sub, middle, quotient in sequences:
            for t in span:
                if chi_twist(middle, t) != chi_twist(sub, t) + chi_twist(quotient, t):
                    failures.append(f"{name} at t = {t}")
        self._battery("χ is additive on the defining sequences", "χ(E(t)) = χ(S(t)) + χ(Q(t))",
                      failures, len(sequences) * len(span))

        failures = [str(t) for t in span
                    if chi_line(t) != chi_hrr(line(t)) or serre_dual_chi(line(t)) != chi_line(t)]
        self._battery("Hilbert polynomial of Q", "χ(O_Q(t)) = C(t+4,4) - C(t+2,4)", failures, len(span))


def _koszul_chi(n: int, p: int, t: int) -> int:
    """χ(Ω^p(t)) from 0 → Ω^p → ∧^p(O(-1)^{n+1}) → Ω^{p-1} → 0."""
    value = 0
    for j in range(p + 1):
        value += (-1) ** j * binomial(n + 1, p - j) * chi_projective(n, t - p + j)
    return value


class BottSuite(CheckSuite):
    """Cohomology of twisted differential forms on projective spaces."""

    section = 'bott'

    def computations(self):
        return {
            'omega-p3': lambda: bott(BottQuery(3, 1, 0, 1)),
            'omega-p3-twisted': lambda: bott(BottQuery(3, 1, 2, 1)) + bott(BottQuery(3, 1, 1, 1)),
            'tangent-p3': lambda: [tangent_coh(3, 0, 0), tangent_coh(3, -1, 0)],
            'tangent-p3-h1': lambda: tangent_coh(3, -2, 1),
        }

    def batteries(self):
        bound = self.config.BOTT_TWIST_RANGE
        euler_failures, spread_failures, cases = [], [], 0
        for n in range(1, MAX_DIMENSION + 1):
            for p in range(n + 1):
                for t in range(-bound, bound + 1):
                    cases += 1
                    if omega_chi(n, p, t) != _koszul_chi(n, p, t):
                        euler_failures.append(f"(n,p,t)=({n},{p},{t})")
                    nonzero = [q for q in range(n + 1) if bott(BottQuery(n, p, t, q))]
                    if len(nonzero) > 1:
                        spread_failures.append(f"(n,p,t)=({n},{p},{t})")
        self._battery("Euler characteristic of twisted forms", "Σ (-1)^q h^q(Ω^p(t)) from the Koszul complex",
                      euler_failures, cases)
        self._battery("cohomology of twisted forms is concentrated", "at most one h^q(Ω^p(t)) is nonzero",
                      spread_failures, cases)

        failures, cases = [], 0
        for n in range(1, 5):
            for p in range(n + 1):
                for t in range(-bound, bound + 1):
                    for q in range(n + 1):
                        cases += 1
                        if bott(BottQuery(n, p, t, q)) != bott(BottQuery(n, n - p, -t, n - q)):
                            failures.append(f"(n,p,t,q)=({n},{p},{t},{q})")
        self._battery("Serre duality for twisted forms", "h^q(Ω^p(t)) = h^(n-q)(Ω^(n-p)(-t))",
                      failures, cases)

        failures = [f"(n,s)=({n},{s})" for n in range(1, 5) for s in range(11)
                    if not coordinate_multiplication_surjective(n, s)]
        self._battery("multiplication by coordinates", "H⁰(O(s))^{n+1} → H⁰(O(s+1)) is onto for s ≥ 0",
                      failures, 44)


CATALOGUE_BUNDLES = (Line(0), Spinor(), PullbackA(), Dual(PullbackA()), Phi(), Dual(Phi()))


class CohomologySuite(CheckSuite):
    """Cohomology tables of the catalogue bundles and pairs."""

    section = 'cohomology'

    def computations(self):
        def table(bundle):
            return lambda: cohomology(bundle).as_tuple()

        def pair_h1(a, b):
            return lambda: coh_pair(a, b).h1

        def end_phi():
            return coh_pair(Dual(Phi()), Phi())

        return {
            'line-two': table(Line(2)),
            'spinor-zero': table(Spinor()),
            'spinor-minus-one': table(Twist(Spinor(), -1)),
            'a-sections': lambda: [cohomology(PullbackA()).h0, cohomology(Twist(PullbackA(), 1)).h0],
            'a-dual-h1': lambda: cohomology(Dual(PullbackA())).h1,
            'phi-sections': lambda: [cohomology(Phi()).h0, cohomology(Twist(Phi(), 1)).h0],
            'phi-h1': lambda: cohomology(Phi()).h1,
            'phi-dual-h1': lambda: cohomology(Dual(Phi())).h1,
            'end-phi': lambda: [end_phi().h0, end_phi().h1],
            'hom-a': lambda: [coh_pair(Dual(PullbackA('P')), PullbackA('P')).h1,
                              coh_pair(Dual(PullbackA('O')), PullbackA('P')).h1],
            'phi-a-dual': pair_h1(Phi(), Dual(PullbackA())),
            'a-phi-dual': pair_h1(PullbackA(), Dual(Phi())),
            'spinor-a-dual': pair_h1(Spinor(), Dual(PullbackA())),
        }

    def batteries(self):
        bound = self.config.SERRE_TWIST_RANGE
        span = range(-bound, bound + 1)
        failures = [f"{b}({t})" for b in CATALOGUE_BUNDLES for t in span if not serre_dual_check(b, t)]
        self._battery("Serre duality", "h^i(B(t)) = h^(3-i)(B^∨(-3-t))",
                      failures, len(CATALOGUE_BUNDLES) * len(span))

        failures = []
        for b in CATALOGUE_BUNDLES + (GP(), EP()):
            for t in span:
                bundle = Twist(b, t)
                if cohomology(bundle).euler_characteristic() != chi_hrr(bundle.chern()):
                    failures.append(f"{b}({t})")
        self._battery("alternating sums against Riemann-Roch", "Σ (-1)^i h^i(B(t)) = χ(B(t))",
                      failures, (len(CATALOGUE_BUNDLES) + 2) * len(span))

        failures = []
        for entry in pair_catalogue():
            result = entry.compute()
            if result.provenance.is_cited and not result.provenance.citation:
                failures.append(entry.name)
        self._battery("cited pair values carry citations", "every cited value names its source",
                      failures, len(pair_catalogue()))


RANK_THREE_CURVES = {
    'two conics': CurveData.disjoint((2, 0), (2, 0)),
    'rational quartic': CurveData.connected(4, 0),
    'elliptic quintic': CurveData.connected(5, 1),
    'genus-2 sextic': CurveData.connected(6, 2),
    'genus-5 octic': CurveData.connected(8, 5),
}


def _class_rows(classes: Iterable[DelPezzoClass]) -> List[List[int]]:
    return [[cls.a, *cls.b] for cls in classes]


class CurvesSuite(CheckSuite):
    """Curve numerics: c3, trisecants, α and del Pezzo classes."""

    section = 'curves'

    def computations(self):
        curves = RANK_THREE_CURVES
        return {
            'c3-quartic': lambda: [2, 4, c3_from_curve(curves['rational quartic'], 2)],
            'c3-conics': lambda: [curves['two conics'].degree, c3_from_curve(curves['two conics'], 2)],
            'c3-octic': lambda: [2, 8, c3_from_curve(curves['genus-5 octic'], 2)],
            'trisecants': lambda: [trisecant(5, 0), trisecant(6, 0), trisecant(6, 1), trisecant(7, 3)],
            'trisecants-zero': lambda: [trisecant(5, 1), trisecant(6, 2), trisecant(8, 5)],
            'alpha': lambda: [alpha(curves[name], 2)
                              for name in ('two conics', 'rational quartic', 'elliptic quintic',
                                           'genus-2 sextic', 'genus-5 octic')],
            'delpezzo-quintic': lambda: _class_rows(delpezzo_classes(5, 1)),
            'delpezzo-sextic': lambda: _class_rows(delpezzo_classes(6, 2)),
        }

    def batteries(self):
        failures = []
        for name, curve in RANK_THREE_CURVES.items():
            lower, upper = alpha_bounds(curve, 2)
            if not lower <= alpha(curve, 2) <= upper:
                failures.append(name)
        self._battery("α inside its bounds", "(3-c1)d + g - 3 ≤ α ≤ (3-c1)d + g - 1",
                      failures, len(RANK_THREE_CURVES))

        orbit = delpezzo_classes(6, 2, all_forms=True)
        expected = [DelPezzoClass(4, (2, 1, 1, 1, 1)), DelPezzoClass(5, (2, 2, 2, 2, 1))]
        same_orbit = orbit == expected and cremona(expected[1]) == expected[0]
        self._add_result("genus-2 sextic classes in all forms", "(4;2,1,1,1,1) and (5;2,2,2,2,1)",
                         PASS if same_orbit else FAIL, f"computed {[str(c) for c in orbit]}")

        failures, cases = [], 0
        box = self.config.DELPEZZO_BRUTE_FORCE_BOX
        for d in range(1, self.config.DELPEZZO_MAX_DEGREE + 1):
            for g in range(self.config.DELPEZZO_MAX_GENUS + 1):
                for all_forms in (False, True):
                    cases += 1
                    if delpezzo_classes(d, g, all_forms) != brute_force_classes(d, g, box, all_forms):
                        failures.append(f"(d,g)=({d},{g}) all_forms={all_forms}")
        self._battery("del Pezzo solver against brute force", "3a - Σb_i = d, a² - Σb_i² = 2g - 2 + d",
                      failures, cases)


class ClassificationSuite(CheckSuite):
    """Regenerated classification tables against the published ones."""

    section = 'classification'

    def computations(self):
        def ceilings():
            return sorted(e.description for e in higher_rank_table(2)
                          if not e.indecomposable and any(n.startswith('rank 3 + α') for n in e.notes))

        return {
            'ceilings': ceilings,
            'decomposable-four': lambda: [str(b) for b in decomposable_sums(2, 4)],
            'c1-one': lambda: [e.description for e in classify(1)],
            'c1-zero': lambda: [e.description for e in classify(0)],
        }

    def batteries(self):
        for line_ in rank_table_check(self.config.REFERENCE_DIR):
            ranks = ', '.join(str(r) for r in line_.published)
            self._add_result(f"rank table {line_.chern}", f"indecomposable in ranks {ranks}",
                             line_.status, line_.detail or f"derived {list(line_.derived)}")

        failures = []
        for c1 in (1, 2):
            for entry in higher_rank_table(c1):
                if entry.indecomposable and entry.curve is not None:
                    ceiling = alpha(entry.curve, c1)
                    if ceiling is None or entry.rank_max > 3 + ceiling:
                        failures.append(f"{entry.chern} rank {entry.rank_label()}")
        self._battery("indecomposable ranks bounded by α", "r ≤ 3 + α", failures,
                      len(higher_rank_table(1)) + len(higher_rank_table(2)))

        entries = higher_rank_table(2)
        self._add_result("curves of degree at least 5 have no trisecants", "t(d, g) = 0",
                         PASS if trisecant_obstruction_holds(entries) else FAIL)

        failures = [str(c2) for c2 in (7, 9, 10, 12) if entries_for(2, c2)[0] or not entries_for(2, c2)[1]]
        self._battery("excluded second Chern classes", "no bundle with c1 = 2 and c2 = 7 or c2 ≥ 9",
                      failures, 4)


SUITES = {
    'chern': ChernSuite,
    'hrr': HRRSuite,
    'bott': BottSuite,
    'cohomology': CohomologySuite,
    'curves': CurvesSuite,
    'classification': ClassificationSuite,
}


def get_suite(section: str, config, ledger: Optional[List[Dict[str, Any]]] = None) -> CheckSuite:
    """
    Factory function to get the suite for a section.

    Raises:
        UnknownSection: If the section is not supported
    """
    if section.lower() not in SUITES:
        logger.error(f"Unsupported section: {section}")
        raise UnknownSection(f"Unknown section '{section}'; known: {', '.join(SECTIONS)}")
    return SUITES[section.lower()](config, ledger)


@dataclass(frozen=True)
class VerificationReport:
    """Results of a verify-paper run, in section order."""

    results: List[CheckResult]

    @property
    def failures(self) -> List[CheckResult]:
        return [r for r in self.results if r.status == FAIL]

    @property
    def flagged(self) -> List[CheckResult]:
        return [r for r in self.results if r.status == FLAGGED]

    @property
    def passed(self) -> List[CheckResult]:
        return [r for r in self.results if r.status == PASS]

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> Dict[str, int]:
        return {'pass': len(self.passed), 'fail': len(self.failures), 'flagged': len(self.flagged)}

    def to_dict(self):
        return {'results': [r.to_dict() for r in self.results], 'summary': self.summary()}


def run_verification(sections: Optional[Iterable[str]] = None, config=None) -> VerificationReport:
    """
    Run the requested suites, all of them by default.

    Args:
        sections (Iterable[str], optional): Section names, run in canonical order
        config: Configuration profile; the default profile when omitted

    Returns:
        VerificationReport: All check results

    Raises:
        UnknownSection: If a section name has no suite
    """
    if config is None:
        from config import get_config
        config = get_config('default')
    requested = SECTIONS if not sections else tuple(sections)
    for section in requested:
        if section.lower() not in SUITES:
            raise UnknownSection(f"Unknown section '{section}'; known: {', '.join(SECTIONS)}")
    wanted = {s.lower() for s in requested}
    ledger = load_reference('ledger', reference_dir=config.REFERENCE_DIR)
    results = []
    for section in (s for s in SECTIONS if s in wanted):
        suite = get_suite(section, config, ledger.get(section, []))
        results.extend(suite.run())
    report = VerificationReport(results)
    logger.info(f"Verification summary: {report.summary()}")
    return report
