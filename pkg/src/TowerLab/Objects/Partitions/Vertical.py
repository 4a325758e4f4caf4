import numpy as np

from TowerLab.Objects.Partitions.Colors import Block, TAG_BLOCK
from TowerLab.Objects.Partitions.Partition import Partition


class Vertical(Partition):
    """V_n = {n} x omega; block n is column n."""

    KIND = 'vertical'

    def evaluate_point(self, x, y):
        x = np.asarray(x)
        return np.full(x.shape, TAG_BLOCK), x, np.zeros_like(x)

    def owns(self, color):
        return isinstance(color, Block)
