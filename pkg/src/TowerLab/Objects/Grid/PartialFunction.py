from TowerLab.Objects.Grid.PointSet import Point, PointSet
from TowerLab.Objects.errors import BadSpec


class PartialFunction:
    """Finite mapping column -> row; its graph is a PointSet."""

    __slots__ = ('entries',)

    def __init__(self, entries=None):
        entries = dict(entries or {})
        for x, y in entries.items():
            if x < 0 or y < 0:
                raise BadSpec(f'Partial function entries must be natural, got {x} -> {y}.')
        self.entries = {int(x): int(entries[x]) for x in sorted(entries)}

    @classmethod
    def from_points(cls, points):
        entries = {}
        for x, y in points:
            if entries.get(x, y) != y:
                raise BadSpec(f'Column {x} is mapped to both {entries[x]} and {y}.')
            entries[x] = y
        return cls(entries)

    @property
    def domain(self):
        return frozenset(self.entries)

    def graph(self):
        return PointSet(self.points())

    def points(self):
        return [Point(x, y) for x, y in self.entries.items()]

    def __call__(self, x):
        return self.entries[x]

    def __len__(self):
        return len(self.entries)

    def __eq__(self, other):
        return isinstance(other, PartialFunction) and self.entries == other.entries

    def __hash__(self):
        return hash(tuple(self.entries.items()))

    def to_json(self):
        return [[x, y] for x, y in self.entries.items()]

    def __repr__(self):
        return f'PartialFunction({self.entries})'


def pf_disjoint(f, g):
    shared = f.entries.keys() & g.entries.keys()
    return all(f.entries[x] != g.entries[x] for x in shared)
