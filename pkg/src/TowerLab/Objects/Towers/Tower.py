from dataclasses import dataclass
from itertools import combinations

from TowerLab.Objects.Grid.PartialFunction import PartialFunction, pf_disjoint
from TowerLab.Objects.Partitions.Colors import parse_color


@dataclass(frozen=True)
class Tower:
    """lambda pairwise-disjoint partial functions on one common domain of size kappa."""

    domain: frozenset
    functions: tuple
    colors: tuple = None

    @property
    def kappa(self):
        return len(self.domain)

    @property
    def lam(self):
        return len(self.functions)

    def color_set(self):
        return frozenset(self.colors or ())

    def points(self):
        return [p for f in self.functions for p in f.points()]

    def to_json(self):
        return {'domain': sorted(self.domain),
                'functions': [f.to_json() for f in self.functions],
                'colors': None if self.colors is None else [str(c) for c in self.colors]}

    @classmethod
    def from_json(cls, data):
        functions = tuple(PartialFunction.from_points(points) for points in data['functions'])
        colors = data.get('colors')
        return cls(domain=frozenset(data['domain']), functions=functions,
                   colors=None if colors is None else tuple(parse_color(c) for c in colors))


def validate_tower(tower, kappa, lam, coloring=None):
    if tower.kappa != kappa or tower.lam != lam:
        return False
    if any(f.domain != tower.domain for f in tower.functions):
        return False
    if not all(pf_disjoint(f, g) for f, g in combinations(tower.functions, 2)):
        return False
    if tower.colors is not None and len(tower.colors) != lam:
        return False
    if coloring is not None:
        for n, function in enumerate(tower.functions):
            colors = {coloring.color(p) for p in function.points()}
            if len(colors) != 1:
                return False
            if tower.colors is not None and colors != {tower.colors[n]}:
                return False
    return True


@dataclass(frozen=True)
class TowerSequence:
    towers: tuple = ()

    def essentially_different(self):
        for first, second in combinations(self.towers, 2):
            if first.domain & second.domain or first.color_set() & second.color_set():
                return False
        return True

    def __len__(self):
        return len(self.towers)

    def __iter__(self):
        return iter(self.towers)

    def __getitem__(self, index):
        return self.towers[index]

    def to_json(self):
        return {'towers': [t.to_json() for t in self.towers]}


def tower_from_json(data):
    return Tower.from_json(data)
