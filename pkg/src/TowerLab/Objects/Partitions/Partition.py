import logging

import numpy as np

from TowerLab.Objects.Partitions.Colors import ColorId
from TowerLab.Objects.errors import BadSpec

logger = logging.getLogger(__name__)


class Partition:
    """A partition of the grid into infinite blocks, evaluated as a coloring oracle.

    Subclasses implement `evaluate_point(x, y)` over numpy arrays and return three label
    arrays `(tag, a, b)` that `ColorId.from_label` turns into colors.
    """

    KIND = None

    def __init__(self, window=None):
        self.window = window
        self.name = self.__class__.__name__
        self._colorings = {}

    def evaluate_point(self, x, y):
        raise NotImplementedError

    def owns(self, color):
        raise NotImplementedError

    def to_json(self):
        return {'kind': self.KIND}

    def color_of(self, x, y):
        tag, a, b = self.evaluate_point(np.array([x], dtype=np.int64), np.array([y], dtype=np.int64))
        return ColorId.from_label(tag[0], a[0], b[0])

    def evaluate_grid(self, window, verbose=True):
        if verbose:
            logger.info('Evaluating grid points for %s on %s...', self.name, window)
        tag, a, b = self.evaluate_point(window.x_grid, window.y_grid)
        return np.asarray(tag), np.asarray(a), np.asarray(b)

    def coloring(self, window):
        from TowerLab.Objects.Partitions.Coloring import build_coloring

        window = window or self.window
        if window is None:
            raise BadSpec(f'{self.name} has no window to color.')
        if window not in self._colorings:
            self._colorings[window] = build_coloring(self, window)
        return self._colorings[window]

    def _key(self):
        return repr(sorted(self.to_json().items()))

    def __eq__(self, other):
        return isinstance(other, Partition) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f'{self.name}()'

    def __str__(self):
        return self.KIND
