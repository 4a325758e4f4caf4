import numpy as np

from TowerLab.Objects.Partitions.Colors import Block, TAG_BLOCK
from TowerLab.Objects.Partitions.Partition import Partition


class Rows(Partition):
    """Block n is the row omega x {n}."""

    KIND = 'rows'

    def evaluate_point(self, x, y):
        y = np.asarray(y)
        return np.full(y.shape, TAG_BLOCK), y, np.zeros_like(y)

    def owns(self, color):
        return isinstance(color, Block)
