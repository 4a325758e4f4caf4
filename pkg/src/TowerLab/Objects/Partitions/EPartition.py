import logging

import numpy as np

from TowerLab.Objects.Partitions.Colors import AColor, BColor, Marker, TAG_A, TAG_B
from TowerLab.Objects.Partitions.DFamily import cantor_unpair, cantor_unpair_grid, d_family
from TowerLab.Objects.Partitions.Partition import Partition
from TowerLab.Objects.settings import Settings

logger = logging.getLogger(__name__)


def e_color(d, point):
    """A(j, i) for p = (m, i) with m the (j + k*i)-th element of D_k, otherwise a marker."""
    m, i = point
    if m == 0:
        return Marker.COLUMN_ZERO
    k, r = d_family(d).locate(m)
    j = r - k * i
    if j < 0:
        return Marker.LEFTOVER
    return AColor(j, i)


class LeftoverIndex:
    """Global position of a leftover point in the order (max(m, i), m, i).

    Leftovers are the points (m, i), m > 0, with m = d(k, r) and r < k*i.  Shell s holds
    the points with max(m, i) = s; per-shell counts are kept as a numpy prefix array that
    grows on demand.
    """

    def __init__(self, family):
        self.family = family
        self._k = self._r = None
        self._prefix = np.zeros(1, dtype=np.int64)

    def _ensure_columns(self, size):
        if self._k is not None and len(self._k) > size:
            return
        size = max(size + 1, 2 * (0 if self._k is None else len(self._k)), 64)
        k, r = self.family.locate_grid(np.arange(1, size, dtype=np.int64))
        # index 0 stands for column zero, which never holds leftovers
        self._k = np.concatenate(([0], k))
        self._r = np.concatenate(([0], r))

    def _upper_count(self, s):
        # leftovers (s, i) with i <= s: i ranges over [r // k + 1, s]
        k, r = int(self._k[s]), int(self._r[s])
        if k == 0:
            return 0
        return max(0, s - r // k)

    def _lower_count(self, s, m):
        # leftovers (m', s) with 1 <= m' < m
        return int(np.count_nonzero(self._r[1:m] < self._k[1:m] * s))

    def shell_count(self, s):
        if s == 0:
            return 0
        self._ensure_columns(s)
        return self._lower_count(s, s) + self._upper_count(s)

    def prefix(self, s):
        if len(self._prefix) <= s:
            self._ensure_columns(s)
            start = len(self._prefix)
            counts = [self.shell_count(t) for t in range(start - 1, s)]
            extra = self._prefix[-1] + np.cumsum(counts, dtype=np.int64)
            self._prefix = np.concatenate((self._prefix, extra))
        return int(self._prefix[s])

    def index(self, m, i):
        s = max(m, i)
        self._ensure_columns(s)
        base = self.prefix(s)
        if m < s:
            return base + self._lower_count(s, m)
        k, r = int(self._k[s]), int(self._r[s])
        return base + self._lower_count(s, s) + i - (r // k + 1)


class EPartition(Partition):
    """The partition E built from an auxiliary D-family.

    Colors A(j, i) live in row i; column zero and the leftover points are spread over
    the colors B(i): (0, y) goes to B of the first Cantor coordinate of y, and the t-th
    leftover goes to B(t).
    """

    KIND = 'E'

    def __init__(self, d=None, window=None):
        super().__init__(window)
        self.d = d_family(d or Settings.DEFAULT_D_FAMILY)
        self.leftovers = LeftoverIndex(self.d)

    def to_json(self):
        return {'kind': self.KIND, 'd': self.d.NAME}

    def owns(self, color):
        return isinstance(color, (AColor, BColor))

    def evaluate_point(self, x, y):
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)

        tag = np.full(x.shape, TAG_A)
        a = np.zeros(x.shape, dtype=np.int64)
        b = np.zeros(x.shape, dtype=np.int64)

        column_zero = x == 0
        k, r = self.d.locate_grid(np.maximum(x, 1))
        j = r - k * y

        colored = ~column_zero & (j >= 0)
        a[colored] = j[colored]
        b[colored] = y[colored]

        if column_zero.any():
            first, _ = cantor_unpair_grid(y[column_zero])
            tag[column_zero] = TAG_B
            a[column_zero] = first

        leftover = ~column_zero & (j < 0)
        tag[leftover] = TAG_B
        for position in np.argwhere(leftover):
            position = tuple(position)
            a[position] = self.leftovers.index(int(x[position]), int(y[position]))

        return tag, a, b

    def color_of(self, x, y):
        marker = e_color(self.d, (x, y))
        if marker is Marker.COLUMN_ZERO:
            return BColor(cantor_unpair(y)[0])
        if marker is Marker.LEFTOVER:
            return BColor(self.leftovers.index(x, y))
        return marker

    def column_of(self, color, k):
        """Column of the unique point of A(j, i) over D_k."""
        return self.d.element(k, color.j + k * color.i)

    def __repr__(self):
        return f'EPartition({self.d.NAME!r})'

    def __str__(self):
        return f'E:{self.d.NAME}'
