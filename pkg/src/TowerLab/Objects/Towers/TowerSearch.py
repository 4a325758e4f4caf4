import logging
from collections import Counter

from TowerLab.Objects.Grid.PartialFunction import PartialFunction
from TowerLab.Objects.Partitions.Partition import Partition
from TowerLab.Objects.Towers.Tower import Tower, TowerSequence
from TowerLab.Objects.errors import BadSpec
from TowerLab.Objects.settings import Settings

logger = logging.getLogger(__name__)

SHAPES = {
    '1k': lambda k: (1, k),
    'kk': lambda k: (k, k),
    'wk': lambda k: (Settings.KAPPA_PROXY, k),
}


def shape_of(shape):
    if callable(shape):
        return shape
    if isinstance(shape, dict):
        return shape.__getitem__
    try:
        return SHAPES[shape]
    except KeyError:
        raise BadSpec(f'Unknown tower shape {shape!r}, expected one of {sorted(SHAPES)}.') from None


class TowerSearch:
    """Color-major backtracking search for b-monochromatic (kappa, lambda)-towers.

    A multiset of colors admits a tower exactly when at least kappa columns carry, for
    every chosen color, as many rows of that color as its multiplicity; functions of
    different colors are disjoint because blocks are. Multisets are explored as
    non-decreasing color sequences, so the first hit is the lexicographically least.
    """

    def __init__(self, coloring, exclude_columns=(), exclude_colors=(), color_filter=None):
        self.coloring = coloring
        excluded_columns = set(exclude_columns)
        excluded_colors = set(exclude_colors)

        self.rows = {}
        for x, per_color in coloring.columns().items():
            if x in excluded_columns:
                continue
            for color, rows in per_color.items():
                if color in excluded_colors or (color_filter is not None and not color_filter(color, x)):
                    continue
                self.rows.setdefault(color, {})[x] = rows

        self.by_column = {}
        for color in sorted(self.rows):
            for x in self.rows[color]:
                self.by_column.setdefault(x, []).append(color)

        self.nodes = 0

    def find(self, kappa, lam):
        if kappa < 1 or lam < 1:
            raise BadSpec(f'Towers need kappa >= 1 and lambda >= 1, got ({kappa}, {lam}).')
        self.nodes = 0
        all_columns = sorted(self.by_column)
        chosen = self._extend([], all_columns, kappa, lam)
        logger.info('Tower search (%d, %d) visited %d nodes', kappa, lam, self.nodes)
        if chosen is None:
            return None
        return self._build(chosen, kappa)

    def _extend(self, chosen, eligible, kappa, remaining):
        self.nodes += 1
        if remaining == 0:
            return chosen, eligible

        last = chosen[-1][0] if chosen else None
        if last is not None:
            multiplicity = chosen[-1][1] + 1
            narrowed = [x for x in eligible if len(self.rows[last][x]) >= multiplicity]
            if len(narrowed) >= kappa:
                found = self._extend(chosen[:-1] + [(last, multiplicity)], narrowed, kappa, remaining - 1)
                if found is not None:
                    return found

        tally = Counter(c for x in eligible for c in self.by_column[x] if last is None or c > last)
        for color in sorted(c for c, n in tally.items() if n >= kappa):
            narrowed = [x for x in eligible if x in self.rows[color]]
            found = self._extend(chosen + [(color, 1)], narrowed, kappa, remaining - 1)
            if found is not None:
                return found
        return None

    def _build(self, found, kappa):
        chosen, eligible = found
        domain = eligible[:kappa]
        functions, colors = [], []
        for color, multiplicity in chosen:
            for t in range(multiplicity):
                functions.append(PartialFunction({x: self.rows[color][x][t] for x in domain}))
                colors.append(color)
        return Tower(domain=frozenset(domain), functions=tuple(functions), colors=tuple(colors))


def _as_coloring(b, window):
    if isinstance(b, Partition):
        return b.coloring(window)
    if window is not None and b.window != window:
        return b.partition.coloring(window)
    return b


def search_tower(b, kappa, lam, window=None, exclude_columns=(), exclude_colors=(), color_filter=None):
    coloring = _as_coloring(b, window)
    return TowerSearch(coloring, exclude_columns, exclude_colors, color_filter).find(kappa, lam)


def search_ed_sequence(b, count, shape, window=None):
    """Essentially different towers T_1..T_count, each avoiding the columns and colors used so far."""
    coloring = _as_coloring(b, window)
    shape = shape_of(shape)

    towers, used_columns, used_colors = [], set(), set()
    for level in range(1, count + 1):
        kappa, lam = shape(level)
        tower = search_tower(coloring, kappa, lam, exclude_columns=used_columns, exclude_colors=used_colors)
        if tower is None:
            logger.info('Window exhausted at level %d of %d', level, count)
            return None
        towers.append(tower)
        used_columns |= tower.domain
        used_colors |= tower.color_set()
    return TowerSequence(tuple(towers))
