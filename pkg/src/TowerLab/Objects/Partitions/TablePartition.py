import numpy as np

from TowerLab.Objects.Grid.PointSet import Point
from TowerLab.Objects.Partitions.Colors import Block, ColorId, TAG_NONE, parse_color
from TowerLab.Objects.Partitions.DFamily import cantor_pair, cantor_unpair
from TowerLab.Objects.Partitions.Partition import Partition
from TowerLab.Objects.errors import BadSpec


class TablePartition(Partition):
    """Partition given by an explicit cell table or by a named rule (x, y) -> color."""

    KIND = 'table'

    RULES = {}

    def __init__(self, cells=None, rule=None, window=None):
        super().__init__(window)
        if (cells is None) == (rule is None):
            raise BadSpec('A table partition needs exactly one of cells or rule.')

        self.rule = rule
        self.cells = {}
        self.conflicts = []
        self._palette = None

        for (x, y), color in (cells or {}).items():
            self.cells[Point(x, y)] = color

    @classmethod
    def from_cells(cls, triples, window=None):
        cells = {}
        conflicts = []
        for x, y, color in triples:
            point = Point(int(x), int(y))
            color = color if isinstance(color, ColorId) else parse_color(color)
            if point in cells and cells[point] != color:
                conflicts.append((point, (cells[point], color)))
            cells[point] = color
        partition = cls(cells=cells, window=window)
        partition.conflicts = sorted(conflicts)
        return partition

    @classmethod
    def from_function(cls, name, function):
        partition = cls(rule=function)
        partition.name = name
        return partition

    @classmethod
    def named(cls, name):
        try:
            return cls.from_function(name, cls.RULES[name])
        except KeyError:
            raise BadSpec(f'Unknown table rule {name!r}, expected one of {sorted(cls.RULES)}.') from None

    @classmethod
    def counterexample(cls):
        """B_0 holds every column x > 0; column zero is split by Cantor un-pairing of y."""
        return cls.named('counterexample')

    @classmethod
    def merged_rows(cls):
        """One block holding every row y > 0; row 0 is one block per column."""
        return cls.named('merged-rows')

    @classmethod
    def absorbed(cls):
        """Every block meets column zero infinitely often and each other column at most once."""
        return cls.named('absorbed')

    def lookup(self, x, y):
        if self.rule is not None:
            return self.rule(x, y)
        return self.cells.get((x, y))

    def evaluate_point(self, x, y):
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        tag = np.full(x.shape, TAG_NONE)
        a = np.zeros(x.shape, dtype=np.int64)
        b = np.zeros(x.shape, dtype=np.int64)
        for position in np.ndindex(x.shape):
            color = self.lookup(int(x[position]), int(y[position]))
            if color is not None:
                tag[position], a[position], b[position] = color.key()
        return tag, a, b

    def color_of(self, x, y):
        return self.lookup(x, y)

    def owns(self, color):
        if self.rule is not None:
            return isinstance(color, Block)
        if self._palette is None:
            self._palette = frozenset(self.cells.values())
        return color in self._palette

    def to_json(self):
        if self.rule is not None:
            return {'kind': self.KIND, 'name': self.name}
        return {'kind': self.KIND,
                'cells': [[p.x, p.y, str(c)] for p, c in sorted(self.cells.items())]}

    def __repr__(self):
        if self.rule is not None:
            return f'TablePartition.named({self.name!r})'
        return f'TablePartition({len(self.cells)} cells)'

    def __str__(self):
        return self.name if self.rule is not None else self.KIND


TablePartition.RULES = {
    'counterexample': lambda x, y: Block(0) if x > 0 else Block(1 + cantor_unpair(y)[0]),
    'merged-rows': lambda x, y: Block(0) if y > 0 else Block(1 + x),
    'absorbed': lambda x, y: Block(cantor_unpair(y)[0]) if x == 0 else Block(cantor_pair(x - 1, y)),
}
