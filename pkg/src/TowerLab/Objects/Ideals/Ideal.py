from collections import Counter
from enum import Enum

from TowerLab.Objects.Grid.PointSet import PointSet
from TowerLab.Objects.Ideals.Certificate import Certificate
from TowerLab.Objects.errors import BadSpec


class IdealKind(Enum):
    FIN = 'fin'
    FIN_GEN = 'fingen'
    SEL = 'sel'
    ED = 'ed'
    OFIN = 'ofin'
    FIN_FIN = 'finfin'

    @classmethod
    def parse(cls, text):
        try:
            return cls(text.lower())
        except ValueError:
            raise BadSpec(f'Unknown ideal kind {text!r}, expected one of {[k.value for k in cls]}.') from None

    @property
    def label(self):
        return LABELS[self]


# names used when the ideals are taken over the vertical partition
LABELS = {
    IdealKind.FIN: 'Fin',
    IdealKind.FIN_GEN: 'Fin×∅',
    IdealKind.SEL: 'Sel',
    IdealKind.ED: 'ED',
    IdealKind.OFIN: '∅×Fin',
    IdealKind.FIN_FIN: 'Fin×Fin',
}

INCLUSIONS = (
    (IdealKind.FIN, IdealKind.FIN_GEN),
    (IdealKind.FIN_GEN, IdealKind.ED),
    (IdealKind.ED, IdealKind.FIN_FIN),
    (IdealKind.FIN, IdealKind.SEL),
    (IdealKind.SEL, IdealKind.ED),
    (IdealKind.SEL, IdealKind.OFIN),
    (IdealKind.OFIN, IdealKind.FIN_FIN),
)

IDENTITIES = (
    'Sel = ED ∩ (∅×Fin)',
    'ED = (Fin×∅) ∨ Sel',
    'Fin×Fin = (Fin×∅) ∨ (∅×Fin)',
)


def ideal_inclusions():
    return {'edges': [(small.label, big.label) for small, big in INCLUSIONS],
            'identities': list(IDENTITIES)}


def is_included(small, big):
    if small == big:
        return True
    return any(is_included(middle, big) for low, middle in INCLUSIONS if low == small)


class Ideal:
    """An ideal induced by a partition, decided through finite certificates.

    `limit(color, cert)` is the number of points of a block the certificate allows,
    None meaning the whole block.
    """

    KIND = None
    USES_GENERATORS = False

    def __init__(self, partition):
        self.partition = partition
        self.kind = self.KIND

    def limit(self, color, cert):
        raise NotImplementedError

    def coloring(self, window):
        return self.partition.coloring(window)

    def group(self, x, window):
        coloring = self.coloring(window)
        groups = {}
        for point in x:
            groups.setdefault(coloring.color(point), []).append(point)
        return groups

    def accepts(self, counts, cert):
        for color, count in counts.items():
            allowed = self.limit(color, cert)
            if allowed is not None and count > allowed:
                return False
        return True

    def check(self, x, cert, window):
        x = PointSet(x).check_window(window)
        residual = x - cert.delta
        coloring = self.coloring(window)
        return self.accepts(Counter(coloring.color(p) for p in residual), cert)

    def fit(self, x, budget, window):
        raise NotImplementedError

    def realize(self, cert, window):
        points = set(cert.delta.restrict(window))
        for color, block in self.coloring(window).blocks().items():
            allowed = self.limit(color, cert)
            points.update(block.sorted() if allowed is None else block.sorted()[:allowed])
        return PointSet(points)

    def generators(self, window, budget):
        raise NotImplementedError

    def _exempt(self, groups, budget, threshold):
        ranked = sorted((c for c in groups if len(groups[c]) > threshold),
                        key=lambda c: (-len(groups[c]), c))
        return frozenset(ranked[:budget.generators])

    @staticmethod
    def _surplus(groups, skip, bound):
        delta = []
        for color, points in groups.items():
            if color not in skip:
                delta.extend(sorted(points)[bound(color):])
        return PointSet(delta)

    def to_json(self):
        return {'kind': self.KIND.value, 'partition': self.partition.to_json()}

    def __eq__(self, other):
        return isinstance(other, Ideal) and (self.kind, self.partition) == (other.kind, other.partition)

    def __hash__(self):
        return hash((self.kind, self.partition))

    def __repr__(self):
        return f'{self.__class__.__name__}({self.partition!r})'

    def __str__(self):
        return f'{self.KIND.value}({self.partition})'


class Fin(Ideal):
    KIND = IdealKind.FIN

    def limit(self, color, cert):
        return 0

    def fit(self, x, budget, window):
        x = PointSet(x)
        if len(x) > budget.delta:
            return None
        return Certificate(delta=x)

    def generators(self, window, budget):
        return [PointSet([(0, 0)]), PointSet([(window.cols - 1, window.rows - 1)])]


class FinGen(Ideal):
    """Fin<A>: generated by the blocks."""

    KIND = IdealKind.FIN_GEN
    USES_GENERATORS = True

    def limit(self, color, cert):
        return None if color in cert.colors else 0

    def fit(self, x, budget, window):
        groups = self.group(x, window)
        colors = self._exempt(groups, budget, 0)
        delta = self._surplus(groups, colors, lambda c: 0)
        if len(delta) > budget.delta:
            return None
        return Certificate(colors=colors, delta=delta)

    def generators(self, window, budget):
        return list(self.coloring(window).blocks().values())


class Sel(Ideal):
    """Sel(A): sets meeting every block in at most `width` points."""

    KIND = IdealKind.SEL

    def limit(self, color, cert):
        return cert.width

    def fit(self, x, budget, window):
        groups = self.group(x, window)
        for width in range(budget.width + 1):
            delta = self._surplus(groups, (), lambda c: width)
            if len(delta) <= budget.delta:
                return Certificate(width=width, delta=delta)
        return None

    def generators(self, window, budget):
        blocks = [block.sorted() for block in self.coloring(window).blocks().values()]
        selectors = [PointSet(b[t] for b in blocks if len(b) > t) for t in range(budget.width)]
        staggered = PointSet(b[n % len(b)] for n, b in enumerate(blocks))
        return selectors + [staggered]


class ED(Ideal):
    """ED(A): generated by the blocks and the selectors."""

    KIND = IdealKind.ED
    USES_GENERATORS = True

    def limit(self, color, cert):
        return None if color in cert.colors else cert.width

    def fit(self, x, budget, window):
        groups = self.group(x, window)
        for width in range(budget.width + 1):
            colors = self._exempt(groups, budget, width)
            delta = self._surplus(groups, colors, lambda c: width)
            if len(delta) <= budget.delta:
                return Certificate(colors=colors, width=width, delta=delta)
        return None

    def generators(self, window, budget):
        return FinGen(self.partition).generators(window, budget) + Sel(self.partition).generators(window, budget)


class OFin(Ideal):
    """(0xFin)(A): finite intersection with every block."""

    KIND = IdealKind.OFIN

    def limit(self, color, cert):
        return cert.bound(color)

    def fit(self, x, budget, window):
        groups = self.group(x, window)
        bound = budget.block_bound
        delta = self._surplus(groups, (), lambda c: bound)
        if len(delta) > budget.delta:
            return None
        per_block = {c: min(len(points), bound) for c, points in sorted(groups.items())}
        return Certificate(per_block=per_block, delta=delta)

    def generators(self, window, budget):
        blocks = self.coloring(window).blocks().values()
        return [PointSet(p for b in blocks for p in b.sorted()[:budget.block_bound])]


class FinFin(Ideal):
    """(FinxFin)(A): generated by Fin<A> and (0xFin)(A)."""

    KIND = IdealKind.FIN_FIN
    USES_GENERATORS = True

    def limit(self, color, cert):
        return None if color in cert.colors else cert.bound(color)

    def fit(self, x, budget, window):
        groups = self.group(x, window)
        bound = budget.block_bound
        colors = self._exempt(groups, budget, bound)
        delta = self._surplus(groups, colors, lambda c: bound)
        if len(delta) > budget.delta:
            return None
        per_block = {c: min(len(points), bound) for c, points in sorted(groups.items()) if c not in colors}
        return Certificate(colors=colors, per_block=per_block, delta=delta)

    def generators(self, window, budget):
        return FinGen(self.partition).generators(window, budget) + OFin(self.partition).generators(window, budget)


IDEALS = {cls.KIND: cls for cls in (Fin, FinGen, Sel, ED, OFin, FinFin)}


def make_ideal(kind, partition):
    if not isinstance(kind, IdealKind):
        kind = IdealKind.parse(kind)
    return IDEALS[kind](partition)


def check_certificate(spec, x, cert, window):
    return spec.check(x, cert, window)


def fit_certificate(spec, x, budget, window):
    return spec.fit(x, budget, window)


def minimal_width(partition, x, window):
    x = PointSet(x).check_window(window)
    counts = partition.coloring(window).count_by_color(x)
    return max(counts.values(), default=0)
