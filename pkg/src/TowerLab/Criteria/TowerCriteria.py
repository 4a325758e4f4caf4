import logging
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations

from TowerLab.Criteria.Table2 import table2_verdict
from TowerLab.Objects.Grid.PartialFunction import PartialFunction
from TowerLab.Objects.Grid.PointSet import PointSet
from TowerLab.Objects.Ideals.Certificate import Budget, Certificate
from TowerLab.Objects.Ideals.Game import orthogonality_check
from TowerLab.Objects.Ideals.Ideal import IdealKind, make_ideal
from TowerLab.Objects.Partitions.Colors import Block
from TowerLab.Objects.Partitions.EPartition import EPartition
from TowerLab.Objects.Partitions.Vertical import Vertical
from TowerLab.Objects.Towers.TowerSearch import search_ed_sequence, search_tower
from TowerLab.Objects.Verdict import ConsistentAtScale, Refuted
from TowerLab.Objects.errors import BadSpec
from TowerLab.Objects.settings import Settings

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Cover:
    """Window cover by verticals, partition blocks, total functions and a finite delta."""

    verticals: tuple
    blocks: tuple
    functions: tuple
    delta: PointSet

    def points(self, coloring):
        window = coloring.window
        covered = {p for x in self.verticals for p in window.column(x)}
        for color in self.blocks:
            covered.update(coloring.block(color))
        for function in self.functions:
            covered.update(function.points())
        covered.update(self.delta)
        return PointSet(covered)

    def verify(self, coloring):
        return len(self.points(coloring)) == coloring.window.size

    def to_json(self):
        return {'verticals': list(self.verticals), 'blocks': [str(c) for c in self.blocks],
                'functions': [f.to_json() for f in self.functions], 'delta': self.delta}


def find_cover(b, window, budget):
    coloring = b.coloring(window)
    per_column = {color: Counter(p.x for p in block) for color, block in coloring.blocks().items()}
    ranked = sorted(per_column, key=lambda c: (-len(coloring.block(c)), c))[:budget.generators + 2]

    for size in range(budget.generators + 1):
        for chosen in combinations(ranked, size):
            remaining = {x: window.rows - sum(per_column[c][x] for c in chosen) for x in range(window.cols)}
            heavy = sorted((x for x in remaining if remaining[x] > budget.width),
                           key=lambda x: (-remaining[x], x))
            verticals = sorted(heavy[:budget.generators])
            surplus = sum(remaining[x] - budget.width for x in heavy[budget.generators:])
            if surplus <= budget.delta:
                return _build_cover(coloring, chosen, verticals, budget)
    return None


def _build_cover(coloring, chosen, verticals, budget):
    window = coloring.window
    taken = set(verticals)
    left = {}
    for x, y in window.points():
        if x not in taken and coloring.color((x, y)) not in chosen:
            left.setdefault(x, []).append(y)

    functions = []
    for t in range(budget.width):
        entries = {x: rows[min(t, len(rows) - 1)] for x, rows in left.items()}
        functions.append(PartialFunction(entries))
    delta = PointSet((x, y) for x, rows in left.items() for y in rows[budget.width:])
    return Cover(tuple(verticals), tuple(chosen), tuple(functions), delta)


def ref1_verdict(b, window, budgets=None, count=Settings.SEQUENCE_COUNT):
    """ED is orthogonal to Fin<B> iff finitely many verticals, B-blocks and functions cover the grid,
    iff there is no sequence of essentially different (1,k)-towers."""
    budgets = budgets or Budget()
    cover = find_cover(b, window, budgets)
    if cover is not None:
        return ConsistentAtScale(window, f'cover of {window} within {budgets}', evidence=cover,
                                 details={'verified': cover.verify(b.coloring(window))})

    sequence = search_ed_sequence(b, count, '1k', window)
    if sequence is not None:
        return Refuted(sequence, details={'statement': f'{count} essentially different (1,k)-towers w.r.t. {b}'})
    return ConsistentAtScale(window, f'no cover within {budgets}, and no {count} essentially different '
                                     f'(1,k)-towers either', details={'budget': budgets})


def veze_verdict(b, kmax, kappa_min, window):
    if kappa_min < 3:
        raise BadSpec(f'kappaMin stands in for an infinite domain and must be at least 3, got {kappa_min}.')

    details = {'kappa': kappa_min}
    if isinstance(b, EPartition):
        details['certainty'] = ('for E every kappa >= 3 verdict is certain: distinct A-colors share at '
                                'most one column and B-colors span at most two')

    tower = None
    for m in range(2, kmax + 1):
        tower = search_tower(b, kappa_min, m, window)
        if tower is None:
            return ConsistentAtScale(window, f'no ({kappa_min},{m})-tower w.r.t. {b}',
                                     details=dict(details, leastM=m))
    if tower is None:
        return ConsistentAtScale(window, 'no m > 1 requested', details=details)
    return Refuted(tower, details=dict(details, m=kmax))


@dataclass(frozen=True)
class Orthogonality:
    """A set in ED (exempt verticals plus partial functions) whose complement lies in (0xFin)(B)."""

    verticals: tuple
    functions: tuple
    ed_certificate: Certificate
    ofin_certificate: Certificate

    def points(self, window):
        covered = {p for x in self.verticals for p in window.column(x)}
        for function in self.functions:
            covered.update(function.points())
        return PointSet(covered)

    def verify(self, b, window):
        return orthogonality_check(make_ideal(IdealKind.ED, Vertical()), self.ed_certificate,
                                   make_ideal(IdealKind.OFIN, b), self.ofin_certificate,
                                   self.points(window), window)

    def to_json(self):
        return {'verticals': list(self.verticals), 'functions': [f.to_json() for f in self.functions],
                'edCertificate': self.ed_certificate, 'ofinCertificate': self.ofin_certificate}


def find_orthogonal(b, window, budget):
    """Exempt a few heavy verticals, then let `budget.width` functions drain the overloaded blocks."""
    coloring = b.coloring(window)
    columns = coloring.columns()
    load = {color: len(block) for color, block in coloring.blocks().items()}
    bound = budget.block_bound

    def excess(x):
        return sum(min(len(rows), max(0, load[c] - bound)) for c, rows in columns[x].items())

    ranked = sorted(sorted(columns, key=lambda x: (-excess(x), x))[:budget.generators + 2])
    for size in range(budget.generators + 1):
        for exempt in combinations(ranked, size):
            found = _absorb(b, coloring, frozenset(exempt), budget)
            if found is not None:
                return found
    return None


def _absorb(b, coloring, exempt, budget):
    window = coloring.window
    columns = coloring.columns()
    bound = budget.block_bound

    load = Counter()
    for x, per_color in columns.items():
        if x not in exempt:
            for color, rows in per_color.items():
                load[color] += len(rows)

    entries = [{} for _ in range(budget.width)]
    for x in sorted(columns):
        if x in exempt:
            continue
        options = [(color, y) for color, rows in columns[x].items() for y in rows]
        for t in range(budget.width):
            heavy = [(color, y) for color, y in options if load[color] > bound]
            if not heavy:
                break
            color, y = min(heavy, key=lambda option: (-load[option[0]], option[1]))
            options.remove((color, y))
            entries[t][x] = y
            load[color] -= 1

    if sum(max(0, n - bound) for n in load.values()) > budget.delta:
        return None

    functions = tuple(PartialFunction(e) for e in entries if e)
    verticals = tuple(sorted(exempt))
    a = {p for x in verticals for p in window.column(x)}
    for function in functions:
        a.update(function.points())
    ofin = make_ideal(IdealKind.OFIN, b).fit(PointSet(window.points()) - PointSet(a), budget, window)
    if ofin is None:
        return None
    ed = Certificate(colors=frozenset(Block(x) for x in verticals), width=len(functions))
    return Orthogonality(verticals, functions, ed, ofin)


ED_OFIN_STATEMENT = 'ED is P((0xFin)(B)) iff Fin x 0 and Sel are both P((0xFin)(B))'


def ed_ofin_verdict(b, window, budgets=None, kmax=3, kappa_min=Settings.KAPPA_PROXY):
    """ED is P((0xFin)(B)) iff ED and (0xFin)(B) are orthogonal.

    A window-scale orthogonality witness is searched first; without one, the two halves
    (Fin x 0 through its block counts, Sel through (kappa, m)-towers) decide, and a
    refuted half refutes ED.
    """
    budgets = budgets or Budget()
    witness = find_orthogonal(b, window, budgets)
    if witness is not None:
        return ConsistentAtScale(window, f'ED is orthogonal to (0xFin)({b}) within {budgets}', evidence=witness,
                                 details={'verified': witness.verify(b, window)})

    halves = {'finGen': table2_verdict(Vertical(), b, IdealKind.OFIN, window),
              'sel': veze_verdict(b, kmax, kappa_min, window)}
    details = {'statement': ED_OFIN_STATEMENT, 'halves': halves, 'budget': budgets}
    for half, verdict in halves.items():
        if isinstance(verdict, Refuted):
            logger.info('ED against (0xFin)(%s): the %s half is refuted', b, half)
            return Refuted({'half': half, 'witness': verdict.witness}, details=details)
    return ConsistentAtScale(window, f'no orthogonality witness within {budgets}, both halves consistent',
                             details=details)


STATEMENTS = {
    'A': 'Sel is P(Fin<B>) requires no sequence of essentially different (1,k)-towers',
    'B': 'Sel is P(Sel(B)) requires some k with no (k,k)-tower',
    'C': 'Sel is P(ED(B)) requires no sequence of essentially different (k,k)-towers',
    'D': 'Sel is P((0xFin)(B)) requires some k with no (omega,k)-tower',
    'E': 'Sel is P((FinxFin)(B)) requires no sequence of essentially different (omega,k)-towers',
}


@dataclass(frozen=True)
class ScanReport:
    case: str
    statement: str
    holds: bool
    evidence: object = None
    details: dict = field(default_factory=dict)

    def to_json(self):
        return {'case': self.case, 'statement': self.statement,
                'condition': 'HOLDS' if self.holds else 'FAILS',
                'evidence': self.evidence, 'details': self.details}


def sufficient_scan(b, case, window, kappa=Settings.KAPPA_PROXY, kmax=4, count=Settings.SEQUENCE_COUNT):
    case = case.upper()
    if case not in STATEMENTS:
        raise BadSpec(f'Unknown case {case!r}, expected one of {sorted(STATEMENTS)}.')

    if case in ('A', 'C', 'E'):
        shape = {'A': '1k', 'C': 'kk', 'E': lambda k: (kappa, k)}[case]
        sequence = search_ed_sequence(b, count, shape, window)
        return ScanReport(case, STATEMENTS[case], sequence is None, sequence,
                          details={'count': count, 'kappa': kappa if case == 'E' else None})

    tower = None
    for k in range(1, kmax + 1):
        kappa_k = k if case == 'B' else kappa
        tower = search_tower(b, kappa_k, k, window)
        if tower is None:
            logger.info('Case %s: no (%d,%d)-tower w.r.t. %s', case, kappa_k, k, b)
            return ScanReport(case, STATEMENTS[case], True,
                              details={'noTower': [kappa_k, k], 'kappa': kappa if case == 'D' else None})
    return ScanReport(case, STATEMENTS[case], False, tower, details={'kmax': kmax})
