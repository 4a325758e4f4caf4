from dataclasses import dataclass

from TowerLab.Objects.Grid.PointSet import PointSet
from TowerLab.Objects.Chains.Chain import materialize_chain
from TowerLab.Objects.errors import HypothesisViolated, TooManyFailures


@dataclass(frozen=True)
class CoverageWitness:
    """More than the allowed number of points of A(color_index, row) lie outside X."""

    row: int
    color_index: int
    failure_points: PointSet

    def to_json(self):
        return {'row': self.row, 'colorIndex': self.color_index, 'points': self.failure_points}


def interval_pigeonhole(lo, hi, failures, k):
    """Leftmost of the k+1 equal blocks of [lo, hi] that avoids every failure."""
    inside = sorted(f for f in failures if lo <= f <= hi)
    if len(inside) > k or hi - lo + 1 < k + 1:
        raise TooManyFailures(len(inside), k)
    size = (hi - lo + 1) // (k + 1)
    for block in range(k + 1):
        start = lo + block * size
        end = start + size - 1
        if not any(start <= f <= end for f in inside):
            return start, end
    raise TooManyFailures(len(inside), k)


def as_oracle(x):
    if callable(x):
        return x
    return x.__contains__


def extract_covered(b, x, k, window):
    """Shrink b to an X-covered chain, or report a color with more than k uncovered points.

    For each color j in turn, the blocks where A(j, i) is not covered are the failures;
    at most k of them leave a failure-free sub-interval of size floor(d / (k + 1)).
    """
    needed = (k + 1) ** b.length
    if b.width < needed:
        raise HypothesisViolated(b.width, needed)

    covered = as_oracle(x)
    lo, hi = b.u, b.v
    for j in range(b.s, b.t + 1):
        failures = [blk for blk in range(lo, hi + 1) if not covered((b.column(j, blk), b.row))]
        if len(failures) > k:
            points = PointSet((b.column(j, blk), b.row) for blk in failures)
            return CoverageWitness(b.row, j, points)
        lo, hi = interval_pigeonhole(lo, hi, failures, k)
    return materialize_chain(b.d, b.row, b.s, b.t, lo, hi, window)
