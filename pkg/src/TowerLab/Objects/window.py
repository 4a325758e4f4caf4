import logging

import numpy as np

from TowerLab.Objects.errors import BadSpec

logger = logging.getLogger(__name__)


class Window:
    """The finite truncation [0, cols) x [0, rows) of the grid.

    Columns are the first coordinate, so the vertical V_n is the column x = n.
    """

    DATA_TYPE = np.int64

    def __init__(self, cols, rows):
        if cols < 1 or rows < 1:
            raise BadSpec(f'Window needs at least one column and one row, got {cols}x{rows}.')

        self.cols = int(cols)
        self.rows = int(rows)

        self._x_grid = self._y_grid = None

    @classmethod
    def parse(cls, text):
        try:
            cols, rows = text.lower().split('x')
            return cls(int(cols), int(rows))
        except ValueError:
            raise BadSpec(f'Window must be written COLSxROWS, got {text!r}.') from None

    @property
    def size(self):
        return self.cols * self.rows

    def _generate_grid(self):
        logger.info('Generating sample grid for window %s', self)
        self._x_grid, self._y_grid = np.meshgrid(np.arange(self.cols, dtype=Window.DATA_TYPE),
                                                 np.arange(self.rows, dtype=Window.DATA_TYPE),
                                                 indexing='ij')

    @property
    def x_grid(self):
        if self._x_grid is None:
            self._generate_grid()
        return self._x_grid

    @property
    def y_grid(self):
        if self._y_grid is None:
            self._generate_grid()
        return self._y_grid

    def contains(self, point):
        x, y = point
        return 0 <= x < self.cols and 0 <= y < self.rows

    def column(self, x):
        return [(x, y) for y in range(self.rows)]

    def points(self):
        for x in range(self.cols):
            for y in range(self.rows):
                yield x, y

    def to_json(self):
        return [self.cols, self.rows]

    def __eq__(self, other):
        return isinstance(other, Window) and (self.cols, self.rows) == (other.cols, other.rows)

    def __hash__(self):
        return hash((self.cols, self.rows))

    def __repr__(self):
        return f'Window({self.cols}, {self.rows})'

    def __str__(self):
        return f'{self.cols}x{self.rows}'
