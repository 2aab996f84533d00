"""
Command implementations for the command-line front end.

Each command takes the parsed argparse namespace and returns a CommandResult.
Library errors become results with status 'error'; rendering lives in
src/cli/output.py.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import pandas as pd

from src.classification.classifier import as_frame, classify, entries_for
from src.cohomology.bundles import EP, GP, Dual, Line, Phi, PullbackA, Spinor, StandardBundle, Twist
from src.cohomology.pairs import coh_pair, find_pair, pair_catalogue
from src.cohomology.tables import CohomologyTable, cohomology
from src.curves.curve import trisecant, trisecant_note
from src.curves.delpezzo import delpezzo_classes
from src.intersection.character import chi_formula, chi_hrr
from src.intersection.chern import (
    ChernData, dual, tensor, total_chern, trivial, twist, whitney_third,
)
from src.utils.helpers import format_rational
from src.verification.suites import run_verification

logger = logging.getLogger(__name__)

OK, ERROR, FLAGGED = 'ok', 'error', 'flagged'

BUNDLE_NAMES = ('line', 'spinor', 'A', 'Adual', 'phi', 'phidual', 'gp', 'ep')


@dataclass
class CommandResult:
    """Outcome of one command: status, structured payload and citations."""

    command: str
    inputs: Dict[str, Any]
    status: str = OK
    payload: Any = None
    citations: List[Dict[str, str]] = field(default_factory=list)
    table: Optional[pd.DataFrame] = None
    lines: List[str] = field(default_factory=list)

    def __post_init__(self):
        if self.status == FLAGGED and not self.citations:
            raise ValueError("A flagged result needs at least one citation")

    @property
    def exit_code(self) -> int:
        return 1 if self.status == ERROR else 0

    @classmethod
    def error(cls, command: str, inputs: Dict[str, Any], exc: Exception) -> 'CommandResult':
        logger.debug(f"{command} failed: {exc}")
        return cls(command, inputs, ERROR, {'error': type(exc).__name__, 'message': str(exc)},
                   lines=[f"error: {exc}"])


def _chern_input(rank: int, classes) -> ChernData:
    return ChernData(rank, *classes)


def _describe_chern(c: ChernData) -> Dict[str, Any]:
    return {'chern': list(c.as_tuple()), 'total': str(total_chern(c))}


def cmd_chern(args) -> CommandResult:
    """chern twist | dual | tensor | whitney."""
    inputs = {k: v for k, v in vars(args).items() if k in ('operation', 'rank', 'classes', 'k',
                                                           'other', 'sub', 'ambient_rank', 'total')}
    try:
        if args.operation == 'whitney':
            if args.sub is None or (args.ambient_rank is None and args.total is None):
                raise ValueError("whitney needs --sub and one of --ambient-rank or --total")
            total = trivial(args.ambient_rank) if args.total is None else ChernData(*args.total)
            result = whitney_third(ChernData(*args.sub), total)
        else:
            c = _chern_input(args.rank, args.classes)
            if args.operation == 'twist':
                result = twist(c, args.k)
            elif args.operation == 'dual':
                result = dual(c)
            else:
                if args.other is None:
                    raise ValueError("tensor needs --with")
                result = tensor(c, ChernData(*args.other))
    except ValueError as e:
        return CommandResult.error('chern', inputs, e)
    payload = _describe_chern(result)
    return CommandResult('chern', inputs, OK, payload,
                         lines=[f"{result}", f"c = {payload['total']}"])


def cmd_chi(args) -> CommandResult:
    """Euler characteristic by the closed formula, by Riemann-Roch, or both."""
    inputs = {'rank': args.rank, 'classes': list(args.classes), 'method': args.method}
    try:
        c = _chern_input(args.rank, args.classes)
        values = {}
        if args.method in ('formula', 'both'):
            values['formula'] = chi_formula(c)
        if args.method in ('hrr', 'both'):
            values['hrr'] = chi_hrr(c)
    except ValueError as e:
        return CommandResult.error('chi', inputs, e)
    lines = [f"χ ({name}) = {format_rational(value)}" for name, value in values.items()]
    if len(set(values.values())) > 1:
        logger.error(f"χ paths disagree on {c}: {values}")
        return CommandResult('chi', inputs, ERROR, values, lines=lines + ["error: χ paths disagree"])
    return CommandResult('chi', inputs, OK, values, lines=lines)


def named_bundle(name: str, t: int = 0) -> StandardBundle:
    """
    Bundle expression for a CLI bundle name twisted by t.

    Raises:
        ValueError: If the name is unknown
    """
    atoms = {
        'line': Line(0),
        'spinor': Spinor(),
        'A': PullbackA(),
        'Adual': Dual(PullbackA()),
        'phi': Phi(),
        'phidual': Dual(Phi()),
        'gp': GP(),
        'ep': EP(),
    }
    if name not in atoms:
        raise ValueError(f"Unknown bundle '{name}'; known: {', '.join(BUNDLE_NAMES)}, pair:<name>")
    return Twist(atoms[name], t).normalize()


def _coh_frame(table: CohomologyTable) -> pd.DataFrame:
    return pd.DataFrame({
        'i': [0, 1, 2, 3],
        'h^i': list(table.as_tuple()),
        'provenance': [str(table.provenance)] * 4,
    })


def _catalogue_listing() -> List[str]:
    return [f"  pair:{e.name}  {e.left} ⊗ {e.right} ({e.twist})" for e in pair_catalogue()]


def cmd_coh(args) -> CommandResult:
    """Cohomology table of a catalogue bundle or pair."""
    inputs = {'bundle': args.bundle, 'twist': args.twist}
    try:
        if args.bundle.startswith('pair:'):
            entry = find_pair(args.bundle[len('pair:'):])
            label = f"{entry.left} ⊗ {entry.right}({entry.twist + args.twist})"
            table = coh_pair(entry.left, entry.right, entry.twist + args.twist)
        else:
            bundle = named_bundle(args.bundle, args.twist)
            label = str(bundle)
            table = cohomology(bundle)
    except ValueError as e:
        result = CommandResult.error('coh', inputs, e)
        result.lines.extend(["supported bundles: " + ', '.join(BUNDLE_NAMES), "supported pairs:"]
                            + _catalogue_listing())
        return result
    citations = []
    if table.provenance.is_cited:
        citations.append({'ref': label, 'quote': table.provenance.citation, 'status': 'cited'})
    for assumption in table.assumptions:
        citations.append({'ref': label, 'quote': assumption, 'status': 'assumed'})
    payload = dict(table.to_dict(), bundle=label)
    return CommandResult('coh', inputs, OK, payload, citations, table=_coh_frame(table),
                         lines=[label])


def cmd_classify(args) -> CommandResult:
    """Regenerated classification table for c1 ∈ {0, 1, 2}."""
    inputs = {'c1': args.c1, 'c2': args.c2, 'rank3_only': args.rank3_only,
              'indecomposable': args.indecomposable}
    try:
        options = {'rank3_only': args.rank3_only, 'indecomposable_only': args.indecomposable}
        if args.c2 is None:
            entries, reason = classify(args.c1, **options), ''
        else:
            entries, reason = entries_for(args.c1, args.c2, **options)
    except ValueError as e:
        return CommandResult.error('classify', inputs, e)
    citations = [{'ref': f"rank {e.rank_label()} {e.chern}", 'quote': note, 'status': 'flagged'}
                 for e in entries if e.flagged for note in e.notes]
    status = FLAGGED if citations else OK
    payload = {'entries': [e.to_dict() for e in entries], 'reason': reason}
    lines = [reason] if reason else []
    return CommandResult('classify', inputs, status, payload, citations,
                         table=as_frame(entries) if entries else None, lines=lines)


def cmd_delpezzo(args) -> CommandResult:
    """Divisor classes of degree d and genus g on a quartic del Pezzo surface."""
    inputs = {'d': args.d, 'g': args.g, 'all_forms': args.all_forms, 'filter': args.filter}
    try:
        classes = delpezzo_classes(args.d, args.g, all_forms=args.all_forms,
                                   geometric_filter=args.filter)
    except ValueError as e:
        return CommandResult.error('delpezzo', inputs, e)
    table = pd.DataFrame(
        [{'a': c.a, **{f"b{i + 1}": b for i, b in enumerate(c.b)}, 'standard': c.is_standard}
         for c in classes],
        columns=['a', 'b1', 'b2', 'b3', 'b4', 'b5', 'standard'],
    )
    return CommandResult('delpezzo', inputs, OK, [c.to_dict() for c in classes],
                         table=table if classes else None,
                         lines=[] if classes else ["no classes"])


def cmd_trisecant(args) -> CommandResult:
    """Number of trisecant lines of a general curve of degree d and genus g."""
    inputs = {'d': args.d, 'g': args.g}
    try:
        value = trisecant(args.d, args.g)
    except ValueError as e:
        return CommandResult.error('trisecant', inputs, e)
    note = trisecant_note(args.d, args.g)
    lines = [f"t({args.d},{args.g}) = {value}"] + ([note] if note else [])
    return CommandResult('trisecant', inputs, OK, {'t': value, 'note': note}, lines=lines)


def cmd_verify_paper(args, config) -> CommandResult:
    """Full identity suite with one line per check."""
    inputs = {'sections': list(args.section or [])}
    try:
        report = run_verification(args.section, config)
    except ValueError as e:
        return CommandResult.error('verify-paper', inputs, e)
    citations = [{'ref': r.ref, 'quote': r.quote, 'status': r.status} for r in report.results]
    if not report.ok:
        status = ERROR
    elif report.flagged:
        status = FLAGGED
    else:
        status = OK
    table = pd.DataFrame(
        [{'section': r.section, 'status': r.status, 'check': r.ref, 'detail': r.detail}
         for r in report.results],
        columns=['section', 'status', 'check', 'detail'],
    )
    summary = report.summary()
    lines = [f"{summary['pass']} passed, {summary['fail']} failed, {summary['flagged']} flagged"]
    return CommandResult('verify-paper', inputs, status, report.to_dict(), citations,
                         table=table, lines=lines)
