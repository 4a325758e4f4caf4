import logging
from collections import Counter
from dataclasses import dataclass
from itertools import combinations

from TowerLab.Objects.Grid.PointSet import PointSet
from TowerLab.Objects.Ideals.Certificate import Budget, Certificate
from TowerLab.Objects.Ideals.Game import AllCovered, Candidate, fits, join_candidates, pj_game_round
from TowerLab.Objects.Ideals.Ideal import IdealKind, is_included, make_ideal
from TowerLab.Objects.Partitions.Vertical import Vertical
from TowerLab.Objects.Verdict import ConsistentAtScale, Refuted
from TowerLab.Objects.settings import Settings
from TowerLab.Objects.window import Window

logger = logging.getLogger(__name__)

ROWS = (IdealKind.FIN_GEN, IdealKind.SEL, IdealKind.ED, IdealKind.OFIN, IdealKind.FIN_FIN)
COLUMNS = (IdealKind.FIN,) + ROWS

# I is P(J); the FIN column is the plain P-ideal property
_MARKS = {
    IdealKind.FIN_GEN: 'FTFTFT',
    IdealKind.SEL: 'FFTTTT',
    IdealKind.ED: 'FFFTFT',
    IdealKind.OFIN: 'TTTTTT',
    IdealKind.FIN_FIN: 'FTFTFT',
}
EXPECTED = {(row, col): marks[n] == 'T' for row, marks in _MARKS.items() for n, col in enumerate(COLUMNS)}

WIDTH_KINDS = (IdealKind.SEL, IdealKind.ED, IdealKind.OFIN, IdealKind.FIN_FIN)


@dataclass(frozen=True)
class CellReport:
    row: IdealKind
    col: IdealKind
    expected: bool
    verdict: object
    witness_family: str
    justification: str

    @property
    def matches(self):
        return self.verdict.consistent == self.expected

    def to_json(self):
        return {'row': self.row.label, 'col': self.col.label, 'expected': self.expected,
                'verdict': self.verdict, 'witnessFamily': self.witness_family,
                'justification': self.justification, 'matches': self.matches}


def justification(row, col):
    if not EXPECTED[row, col]:
        return 'witness'
    if is_included(row, col):
        return 'inclusion'
    if row is IdealKind.OFIN:
        return 'p-ideal'
    return 'join'


class Table1Reproducer:
    """Decides the cells "I is a P(J)-ideal" for ideals over the vertical partition.

    A cross needs a family of members of I whose residuals escape J for every candidate
    union the adversary can afford; a tick is shown by inclusion, by merging row strips,
    or by joining the two halves of Fin x Fin.
    """

    def __init__(self, window=None, budget=None, family_size=Settings.FAMILY_SIZE):
        self.window = window or Window(64, 64)
        self.budget = budget or Budget()
        self.family_size = family_size
        self.partition = Vertical()
        self.coloring = self.partition.coloring(self.window)

    def ideal(self, kind):
        return make_ideal(kind, self.partition)

    def verticals(self):
        return [PointSet(self.window.column(n)) for n in range(min(self.family_size, self.window.cols))]

    def rows(self):
        return [PointSet((x, n) for x in range(self.window.cols))
                for n in range(min(self.family_size, self.window.rows))]

    def strips(self):
        width = max(1, self.budget.block_bound)
        strips = []
        for n in range(self.family_size):
            rows = range(n * width, min((n + 1) * width, self.window.rows))
            if rows:
                strips.append(PointSet((x, y) for x in range(self.window.cols) for y in rows))
        return strips

    def reproduce(self, row, col):
        how = justification(row, col)
        logger.info('Table 1 cell %s / P(%s) by %s', row.label, col.label, how)
        if how == 'witness':
            uses_verticals = self.ideal(row).USES_GENERATORS and col in (IdealKind.FIN, IdealKind.SEL, IdealKind.OFIN)
            family, name = (self.verticals(), 'verticals {n} x omega') if uses_verticals \
                else (self.rows(), 'rows omega x {n}')
            verdict = self.refute(row, col, family, name)
        elif how == 'inclusion':
            name = 'generators'
            verdict = self.inclusion(row, col)
        elif how == 'p-ideal':
            name = 'row strips'
            verdict = self.p_ideal(col)
        else:
            name = 'verticals joined with row strips'
            verdict = self.join(col)
        return CellReport(row, col, EXPECTED[row, col], verdict, f'{name}, n < {self.family_size}', how)

    def candidates(self, kind, family):
        ideal = self.ideal(kind)
        member_of = {}
        for n, member in enumerate(family):
            for point in member:
                member_of.setdefault(point, n)
        by_color = {}
        for point in sorted(member_of):
            by_color.setdefault(self.coloring.color(point), []).append(point)

        if ideal.USES_GENERATORS:
            ranked = sorted(by_color, key=lambda c: (-len(by_color[c]), c))[:self.budget.generators + 1]
            generator_sets = [frozenset(s) for s in combinations(ranked, min(self.budget.generators, len(ranked)))]
        else:
            generator_sets = [frozenset()]

        size = len(family)
        if kind in WIDTH_KINDS:
            bound = self.budget.width if kind in (IdealKind.SEL, IdealKind.ED) else self.budget.block_bound
            patterns = [('lowest', lambda p: (p[1], p[0]))]
            patterns += [(f'rotate:{t}', lambda p, t=t: ((member_of[p] - t) % size, p[1])) for t in range(size)]
            patterns.append(('cyclic', lambda p: ((member_of[p] - p[0]) % size, p[1])))
        else:
            bound = 0
            patterns = [('none', None)]

        seen = set()
        for colors in generator_sets:
            for pattern, key in patterns:
                base = set(p for c in colors for p in self.coloring.block(c))
                if bound:
                    for color, points in by_color.items():
                        if color not in colors:
                            base.update(sorted(points, key=key)[:bound])
                base = PointSet(base)
                for target in range(size):
                    delta = (family[target] - base).sorted()[:self.budget.delta]
                    points = base | PointSet(delta)
                    if points in seen:
                        continue
                    seen.add(points)
                    cert = Certificate(colors=colors, width=bound, delta=delta)
                    yield f'{pattern}/target:{target}', Candidate(ideal, cert, points)

    def refute(self, row, col, family, name):
        jspec = self.ideal(col)
        members_in_row = all(fits(self.ideal(row), member, self.budget, self.window) for member in family)

        defeated_by = Counter()
        first = None
        total = 0
        for label, candidate in self.candidates(row, family):
            total += 1
            outcome = pj_game_round(family, candidate, jspec, self.budget, self.window)
            if isinstance(outcome, AllCovered):
                logger.info('Candidate %s covers the %s family', label, name)
                return ConsistentAtScale(self.window, f'candidate {label} leaves every residual inside {jspec}',
                                         evidence=candidate, details={'budget': self.budget})
            defeated_by[outcome.index] += 1
            if first is None:
                first = {'candidate': candidate, 'label': label, 'outcome': outcome}

        logger.info('%d candidates defeated by the %s family', total, name)
        return Refuted({'family': name, 'candidates': total, 'defeatedBy': dict(sorted(defeated_by.items())),
                        'replay': first},
                       details={'membersInIdeal': members_in_row, 'budget': self.budget})

    def inclusion(self, row, col):
        jspec = self.ideal(col)
        generators = self.ideal(row).generators(self.window, self.budget)
        for index, generator in enumerate(generators):
            if not fits(jspec, generator, self.budget, self.window):
                return Refuted({'generator': index, 'points': generator},
                               details={'statement': f'{row.label} generator outside {col.label}'})
        return ConsistentAtScale(self.window, f'every {row.label} generator fits {col.label}',
                                 details={'generators': len(generators), 'budget': self.budget})

    def merged_strips(self, strips):
        union = PointSet(p for strip in strips for p in strip)
        width = max((len(union.column(x)) for x in range(self.window.cols)), default=0)
        return Candidate(self.ideal(IdealKind.OFIN), Certificate(width=width), union)

    def p_ideal(self, col):
        strips = self.strips()
        merged = self.merged_strips(strips)
        outcome = pj_game_round(strips, merged, self.ideal(col), self.budget, self.window)
        if not isinstance(outcome, AllCovered):
            return Refuted(outcome, details={'statement': 'merged strips leave a residual'})
        return ConsistentAtScale(self.window, 'the merged per-block bound covers every strip',
                                 evidence=merged.certificate, details={'strips': len(strips)})

    def join(self, col):
        jspec = self.ideal(col)
        verticals = self.verticals()
        strips = self.strips()
        first = Candidate(self.ideal(IdealKind.FIN_GEN), Certificate(), PointSet())
        second = self.merged_strips(strips)
        joined = [v | s for v, s in zip(verticals, strips)]

        outcomes = {
            'verticals': pj_game_round(verticals, first, jspec, self.budget, self.window),
            'strips': pj_game_round(strips, second, jspec, self.budget, self.window),
            'joined': pj_game_round(joined, join_candidates(first, second), jspec, self.budget, self.window),
        }
        if not all(isinstance(o, AllCovered) for o in outcomes.values()):
            return Refuted(outcomes, details={'statement': 'the joined candidate leaves a residual'})
        return ConsistentAtScale(self.window, 'both halves and their join cover their families',
                                 evidence=outcomes, details={'budget': self.budget})


def table1_reproduce(row_kind, col_kind, window=None, budget=None, family_size=Settings.FAMILY_SIZE):
    return Table1Reproducer(window, budget, family_size).reproduce(row_kind, col_kind)


def table1_all(window=None, budget=None, family_size=Settings.FAMILY_SIZE, with_p=False):
    reproducer = Table1Reproducer(window, budget, family_size)
    columns = COLUMNS if with_p else ROWS
    return [reproducer.reproduce(row, col) for row in ROWS for col in columns]


def render_table1(reports):
    rows = list(dict.fromkeys(r.row for r in reports))
    cols = list(dict.fromkeys(r.col for r in reports))
    cells = {(r.row, r.col): r for r in reports}

    lines = [['I \\ J'] + ['P' if c is IdealKind.FIN else f'P({c.label})' for c in cols]]
    for row in rows:
        marks = []
        for col in cols:
            report = cells[row, col]
            marks.append(('✓' if report.verdict.consistent else '✗') + ('' if report.matches else '!'))
        lines.append([row.label] + marks)

    widths = [max(len(line[n]) for line in lines) for n in range(len(lines[0]))]
    return '\n'.join('  '.join(cell.ljust(widths[n]) for n, cell in enumerate(line)).rstrip()
                     for line in lines) + '\n'
