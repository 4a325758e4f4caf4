import logging
from dataclasses import dataclass

from TowerLab.Objects.Grid.PointSet import Point, PointSet
from TowerLab.Objects.Partitions.Colors import AColor
from TowerLab.Objects.Partitions.DFamily import d_family
from TowerLab.Objects.errors import NotAColor, RowZero, TooShort, WindowMismatch, WindowTooSmall

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Chain:
    """Ch_i[s,t][u,v]: colors A(s..t, i) over the D-blocks u..v, one point per (j, k)."""

    d: object
    row: int
    s: int
    t: int
    u: int
    v: int
    points: PointSet

    @property
    def length(self):
        return self.t - self.s + 1

    @property
    def width(self):
        return self.v - self.u + 1

    def column(self, j, k):
        return self.d.element(k, j + k * self.row)

    def columns(self):
        return frozenset(p.x for p in self.points)

    def state(self):
        return {'row': self.row, 'colors': [self.s, self.t], 'blocks': [self.u, self.v]}

    def to_json(self):
        return self.state()

    def __repr__(self):
        return f'Ch_{self.row}[{self.s},{self.t}][{self.u},{self.v}]'


def down_color(color, k):
    if not isinstance(color, AColor):
        raise NotAColor(color)
    if color.i == 0:
        raise RowZero(color)
    return AColor(color.j + k, color.i - 1)


def materialize_chain(d, i, s, t, u, v, window):
    d = d_family(d)
    if i >= window.rows:
        raise WindowMismatch(Point(0, i), window)
    points = []
    for k in range(u, v + 1):
        for j in range(s, t + 1):
            column = d.element(k, j + k * i)
            if column >= window.cols:
                raise WindowTooSmall(k, j + k * i, column, window)
            points.append((column, i))
    return Chain(d, i, s, t, u, v, PointSet(points))


def descend_chain(a, window):
    """Ch_i[s,t][u,v] -> Ch_{i-1}[t+u-(L-1), t+u][u,v] with L = l - d + 1.

    Over D_k the column of A(j, i) carries A(j + k, i - 1) one row down, so the new
    colors j' in [s', t'] all sit over columns of `a`.
    """
    if a.row == 0:
        raise RowZero(a)
    if a.length < a.width:
        raise TooShort(a.length, a.width)
    shortened = a.length - a.width + 1
    top = a.t + a.u
    logger.debug('Descending %r to row %d', a, a.row - 1)
    return materialize_chain(a.d, a.row - 1, top - (shortened - 1), top, a.u, a.v, window)
