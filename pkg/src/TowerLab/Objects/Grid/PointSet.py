from typing import NamedTuple

from TowerLab.Objects.errors import BadSpec, WindowMismatch


class Point(NamedTuple):
    x: int
    y: int

    def to_json(self):
        return [self.x, self.y]


class PointSet:
    """Sparse, deduplicated, immutable set of grid points."""

    __slots__ = ('_points', '_sorted')

    def __init__(self, points=()):
        if isinstance(points, PointSet):
            self._points = points._points
        else:
            collected = set()
            for x, y in points:
                if x < 0 or y < 0:
                    raise BadSpec(f'Point coordinates must be natural, got ({x}, {y}).')
                collected.add(Point(int(x), int(y)))
            self._points = frozenset(collected)
        self._sorted = None

    @classmethod
    def from_json(cls, data):
        return cls((x, y) for x, y in data)

    def check_window(self, window):
        for point in self.sorted():
            if not window.contains(point):
                raise WindowMismatch(point, window)
        return self

    def restrict(self, window):
        return PointSet(p for p in self._points if window.contains(p))

    def sorted(self):
        if self._sorted is None:
            self._sorted = tuple(sorted(self._points))
        return self._sorted

    def columns(self):
        return sorted({p.x for p in self._points})

    def column(self, x):
        return PointSet(p for p in self._points if p.x == x)

    def to_json(self):
        return [p.to_json() for p in self.sorted()]

    def __iter__(self):
        return iter(self.sorted())

    def __len__(self):
        return len(self._points)

    def __bool__(self):
        return bool(self._points)

    def __contains__(self, point):
        return tuple(point) in self._points

    def __or__(self, other):
        return PointSet(self._points | PointSet(other)._points)

    def __and__(self, other):
        return PointSet(self._points & PointSet(other)._points)

    def __sub__(self, other):
        return set_difference(self, PointSet(other))

    def __le__(self, other):
        return self._points <= PointSet(other)._points

    def __eq__(self, other):
        if isinstance(other, PointSet):
            return self._points == other._points
        return NotImplemented

    def __hash__(self):
        return hash(self._points)

    def __repr__(self):
        return f'PointSet({list(map(tuple, self.sorted()))})'


def set_difference(x, y):
    result = PointSet.__new__(PointSet)
    result._points = x._points - y._points
    result._sorted = None
    return result
