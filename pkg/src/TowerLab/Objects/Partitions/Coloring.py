import logging
import math
from collections import Counter, defaultdict
from dataclasses import dataclass
from enum import Enum

import numpy as np

from TowerLab.Objects.Grid.PointSet import Point, PointSet
from TowerLab.Objects.Partitions.Colors import AColor, ColorId, TAG_NONE
from TowerLab.Objects.Partitions.EPartition import EPartition
from TowerLab.Objects.Partitions.Rows import Rows
from TowerLab.Objects.Partitions.Vertical import Vertical
from TowerLab.Objects.errors import PartitionAxiomViolation, UnknownColor

logger = logging.getLogger(__name__)

OMEGA = math.inf


class Exactness(Enum):
    EXACT = 'Exact'
    WINDOW_LOWER_BOUND = 'WindowLowerBound'


@dataclass(frozen=True)
class CountReport:
    count: float
    exactness: Exactness

    @property
    def infinite(self):
        return self.count == OMEGA

    def to_json(self):
        count = 'omega' if self.infinite else int(self.count)
        return {'count': count, 'exactness': self.exactness.value}


class Coloring:
    """A partition evaluated over one window; answers color and block queries."""

    def __init__(self, partition, window, labels):
        self.partition = partition
        self.window = window
        self.tag, self.a, self.b = labels

        self._colors = self._blocks = self._columns = None

    def color(self, point):
        x, y = point
        if self.window.contains(point):
            return ColorId.from_label(self.tag[x, y], self.a[x, y], self.b[x, y])
        return self.partition.color_of(x, y)

    def __call__(self, point):
        return self.color(point)

    def _group(self):
        labels = np.stack((self.tag.ravel(), self.a.ravel(), self.b.ravel()), axis=1)
        unique, inverse = np.unique(labels, axis=0, return_inverse=True)
        inverse = np.asarray(inverse).ravel()
        order = np.argsort(inverse, kind='stable')
        bounds = np.searchsorted(inverse[order], np.arange(len(unique) + 1))
        xs, ys = self.window.x_grid.ravel(), self.window.y_grid.ravel()

        blocks = {}
        for n, (tag, a, b) in enumerate(unique):
            members = order[bounds[n]:bounds[n + 1]]
            blocks[ColorId.from_label(tag, a, b)] = PointSet(zip(xs[members].tolist(), ys[members].tolist()))
        self._blocks = blocks
        self._colors = sorted(blocks)

    def colors(self):
        if self._colors is None:
            self._group()
        return self._colors

    def blocks(self):
        if self._blocks is None:
            self._group()
        return self._blocks

    def block(self, color):
        return self.blocks().get(color, PointSet())

    def columns(self):
        """column -> {color: sorted rows} over the window."""
        if self._columns is None:
            columns = {}
            for color, points in self.blocks().items():
                for x, y in points:
                    columns.setdefault(x, defaultdict(list))[color].append(y)
            self._columns = {x: {c: sorted(rows) for c, rows in sorted(per_color.items())}
                             for x, per_color in sorted(columns.items())}
        return self._columns

    def count_by_color(self, points):
        return Counter(self.color(p) for p in points)

    def to_json(self):
        cells = [[x, y, str(self.color((x, y)))] for x, y in self.window.points()]
        return {'kind': 'table', 'cells': cells}

    def __repr__(self):
        return f'Coloring({self.partition!r}, {self.window})'


def build_coloring(spec, window):
    conflicts = getattr(spec, 'conflicts', None)
    if conflicts:
        point, colors = conflicts[0]
        raise PartitionAxiomViolation(point, colors)

    labels = spec.evaluate_grid(window)
    missing = np.argwhere(labels[0] == TAG_NONE)
    if len(missing):
        x, y = missing[0]
        raise PartitionAxiomViolation(Point(int(x), int(y)), ())

    return Coloring(spec, window, labels)


def _closed_form(a, i, b, j):
    if isinstance(a, Vertical) and isinstance(b, Rows):
        return 1
    if isinstance(a, Vertical) and isinstance(b, Vertical):
        return OMEGA if i == j else 0
    if isinstance(a, EPartition) and isinstance(i, AColor):
        if isinstance(b, Vertical):
            if j.n == 0:
                return 0
            k, r = a.d.locate(j.n)
            return 1 if r - k * i.i == i.j else 0
        if isinstance(b, Rows):
            return OMEGA if j.n == i.i else 0
    return None


def intersection_count(a, i, b, j, window, joint=None):
    """|i cap j| for block i of a and block j of b; `joint` reuses a precomputed joint_counts table."""
    for spec, color in ((a, i), (b, j)):
        if not spec.owns(color):
            raise UnknownColor(color, spec)

    count = _closed_form(a, i, b, j)
    if count is None:
        count = _closed_form(b, j, a, i)
    if count is not None:
        return CountReport(count, Exactness.EXACT)

    if joint is not None:
        return CountReport(joint.get((i, j), 0), Exactness.WINDOW_LOWER_BOUND)
    first = a.coloring(window)
    second = b.coloring(window)
    count = sum(1 for p in first.block(i) if second.color(p) == j)
    return CountReport(count, Exactness.WINDOW_LOWER_BOUND)


def joint_counts(a, b, window):
    """Counter over (color in a, color in b) for every window point."""
    first = a.coloring(window)
    second = b.coloring(window)
    return Counter((first.color(p), second.color(p)) for p in window.points())
