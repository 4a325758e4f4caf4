import logging
from collections import defaultdict
from dataclasses import dataclass, field
from enum import Enum

from TowerLab.Objects.Chains.Chain import descend_chain, materialize_chain
from TowerLab.Objects.Chains.Coverage import CoverageWitness, extract_covered
from TowerLab.Objects.Chains.FunctionSpec import FunctionSpec, row_function
from TowerLab.Objects.Chains.PQ import pq_sequence, window_columns
from TowerLab.Objects.Grid.PointSet import PointSet
from TowerLab.Objects.Partitions.DFamily import d_family
from TowerLab.Objects.errors import BadSpec, WindowExhausted
from TowerLab.Objects.settings import Settings
from TowerLab.Objects.window import Window

logger = logging.getLogger(__name__)


class Mode(Enum):
    SEL = 'sel'
    ED = 'ed'


@dataclass(frozen=True)
class Witness:
    """|A(color_index, row) minus X| exceeds the claimed width for that row."""

    row: int
    color_index: int
    points: PointSet

    def to_json(self):
        return {'outcome': 'Witness', 'row': self.row, 'colorIndex': self.color_index, 'points': self.points}


@dataclass(frozen=True)
class ContradictionAtColumn:
    column: int

    def to_json(self):
        return {'outcome': 'ContradictionAtColumn', 'column': self.column}


@dataclass(frozen=True)
class RefutationReport:
    outcome: object
    trace: tuple
    window: Window
    mode: Mode
    kvec: tuple
    functions: tuple
    start_color: int = 0
    bad_colors: tuple = ()
    details: dict = field(default_factory=dict)

    def to_json(self):
        return {'outcome': self.outcome, 'trace': list(self.trace), 'windowUsed': self.window,
                'mode': self.mode, 'kvec': list(self.kvec), 'f': list(self.functions),
                'startColor': self.start_color, 'badColors': list(self.bad_colors)}


class RefutationEngine:
    """Turns a finite adversary (functions f, widths kvec) into a width violation.

    A top chain at row |f| with p_|f| colors and q_|f| fully covered blocks is found by
    scanning blocks upward; then descend and covered extraction alternate down to row 0.
    Reaching row 0 would put |f| + 1 points of X in one column, so one extraction has to
    report an uncovered color first.
    """

    def __init__(self, functions, kvec, mode=Mode.SEL, d=None, headroom=Settings.HEADROOM,
                 limit=Settings.WINDOW_LIMIT, ed_color_scan=Settings.ED_COLOR_SCAN, window=None):
        self.functions = tuple(FunctionSpec.parse(f) if isinstance(f, str) else f for f in functions)
        self.kvec = tuple(int(k) for k in kvec)
        if len(self.kvec) != len(self.functions) + 1:
            raise BadSpec(f'Need {len(self.functions) + 1} widths for {len(self.functions)} functions, '
                          f'got {len(self.kvec)}.')
        if any(k < 0 for k in self.kvec):
            raise BadSpec('Widths must be natural numbers.')

        self.mode = Mode(mode)
        self.d = d_family(d or Settings.DEFAULT_D_FAMILY)
        self.headroom = headroom
        self.limit = limit
        self.ed_color_scan = ed_color_scan
        self.fixed_window = window

        self.top = len(self.functions)
        self.sequence = pq_sequence(self.kvec)
        self.length = self.sequence.p[self.top]
        self.width = self.sequence.q[self.top]

        self.window = None
        self.trace = []

    def covered(self, point):
        x, y = point
        return any(f.evaluate(x, self.window.rows) == y for f in self.functions)

    def _size_window(self, headroom, start):
        if self.fixed_window is not None:
            return self.fixed_window
        columns = window_columns(self.kvec, self.d, headroom, start, self.limit)
        if columns > self.limit:
            return None
        return Window(columns, max(1, len(self.kvec)))

    def bad_colors(self):
        """Colors j < ed_color_scan with more than k_i uncovered in-window points in some row i."""
        bad = []
        for j in range(self.ed_color_scan):
            for i in range(self.top + 1):
                uncovered, k = 0, 0
                while True:
                    column = self.d.bounded_element(k, j + k * i, self.window.cols)
                    if column >= self.window.cols:
                        break
                    uncovered += not self.covered((column, i))
                    k += 1
                if uncovered > self.kvec[i]:
                    bad.append(j)
                    break
        return tuple(bad)

    def _top_chain(self, start):
        """Scan block offsets upward; every block is examined once."""
        stop = start + self.length - 1
        failures = defaultdict(list)
        u = 0
        while True:
            last = u + self.width - 1
            if self.d.bounded_element(last, stop + last * self.top, self.window.cols) >= self.window.cols:
                return None
            for k in range(u, last + 1):
                missing = [j for j in range(start, stop + 1)
                           if not self.covered((self.d.element(k, j + k * self.top), self.top))]
                if missing:
                    for j in missing:
                        failures[j].append((self.d.element(k, j + k * self.top), self.top))
                        if len(failures[j]) > self.kvec[self.top]:
                            return Witness(self.top, j, PointSet(failures[j]))
                    u = k + 1
                    break
            else:
                return materialize_chain(self.d, self.top, start, stop, u, last, self.window)

    def run(self):
        headroom = self.headroom
        self.window = self._size_window(headroom, 0)
        if self.window is None:
            raise WindowExhausted(f'No window within {self.limit} columns fits the top chain.')

        start, bad = 0, ()
        if self.mode is Mode.ED:
            bad = self.bad_colors()
            start = max(bad) + 1 if bad else 0
            logger.info('ED bad set has %d colors below %d, starting at color %d', len(bad), self.ed_color_scan, start)

        while True:
            self.window = self._size_window(headroom, start)
            if self.window is None:
                raise WindowExhausted(f'No top chain found within {self.limit} columns.')
            logger.info('Scanning for the top chain in row %d on %s', self.top, self.window)
            found = self._top_chain(start)
            if found is not None:
                break
            if self.fixed_window is not None:
                raise WindowExhausted(f'No top chain found in {self.fixed_window}.')
            headroom *= 2

        self.trace = []
        outcome = found if isinstance(found, Witness) else self._descend(found)
        return RefutationReport(outcome, tuple(self.trace), self.window, self.mode, self.kvec,
                                self.functions, start, bad)

    def _descend(self, chain):
        self.trace.append(chain.state())
        for row in range(self.top, 0, -1):
            lowered = descend_chain(chain, self.window)
            self.trace.append(lowered.state())
            result = extract_covered(lowered, self.covered, self.kvec[row - 1], self.window)
            if isinstance(result, CoverageWitness):
                logger.info('Row %d color %d is uncovered too often', result.row, result.color_index)
                return Witness(result.row, result.color_index, result.failure_points)
            chain = result
            self.trace.append(chain.state())

        column = min(chain.columns())
        logger.error('Column %d carries %d covered points for %d functions', column, self.top + 1, self.top)
        return ContradictionAtColumn(column)

    def recount(self, witness):
        """Independent check: witness points lie on the row function, in the color, and outside X."""
        row = row_function(witness.row)
        for x, y in witness.points:
            if row.evaluate(x, self.window.rows) != y or self.covered((x, y)):
                return False
            k, r = self.d.locate(x)
            if r - k * witness.row != witness.color_index:
                return False
        return len(witness.points) > self.kvec[witness.row]


def refute_witness(functions, kvec, mode=Mode.SEL, d=None, **options):
    return RefutationEngine(functions, kvec, mode, d, **options).run()
