from dataclasses import dataclass, field

from TowerLab.Objects.Grid.PointSet import PointSet
from TowerLab.Objects.Partitions.Colors import parse_color
from TowerLab.Objects.errors import BadSpec
from TowerLab.Objects.settings import Settings


@dataclass(frozen=True)
class Certificate:
    """Finite evidence that a set belongs to a partition-induced ideal.

    `colors` are the generator blocks (FinGen, FinFin) or the exempt blocks (ED); blocks
    not listed in `per_block` fall back to `width`.
    """

    colors: frozenset = frozenset()
    width: int = 0
    per_block: dict = field(default_factory=dict)
    delta: PointSet = PointSet()

    def __post_init__(self):
        if self.width < 0:
            raise BadSpec(f'Certificate width must be natural, got {self.width}.')
        object.__setattr__(self, 'colors', frozenset(self.colors))
        object.__setattr__(self, 'delta', PointSet(self.delta))

    def bound(self, color):
        return self.per_block.get(color, self.width)

    def join(self, other):
        """Certificate accepting x | y whenever self accepts x and other accepts y."""
        colors = set(self.per_block) | set(other.per_block)
        return Certificate(colors=self.colors | other.colors,
                           width=self.width + other.width,
                           per_block={c: self.bound(c) + other.bound(c) for c in colors},
                           delta=self.delta | other.delta)

    @classmethod
    def from_json(cls, data):
        return cls(colors=frozenset(parse_color(c) for c in data.get('colors', [])),
                   width=int(data.get('width', 0)),
                   per_block={parse_color(c): int(n) for c, n in data.get('perBlock', {}).items()},
                   delta=PointSet.from_json(data.get('delta', [])))

    def to_json(self):
        return {'colors': [str(c) for c in sorted(self.colors)],
                'width': self.width,
                'perBlock': {str(c): n for c, n in sorted(self.per_block.items())},
                'delta': self.delta.to_json()}

    def __hash__(self):
        return hash((self.colors, self.width, tuple(sorted(self.per_block.items())), self.delta))


@dataclass(frozen=True)
class Budget:
    """Bounds on the certificates a fitter or an adversary may use."""

    generators: int = Settings.GENERATORS
    delta: int = Settings.DELTA
    width: int = Settings.WIDTH
    per_block: int = None

    @property
    def block_bound(self):
        return self.width if self.per_block is None else self.per_block

    def to_json(self):
        return {'generators': self.generators, 'delta': self.delta, 'width': self.width,
                'perBlock': self.block_bound}
