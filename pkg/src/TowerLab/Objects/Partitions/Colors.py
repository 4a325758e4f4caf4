from dataclasses import dataclass
from enum import Enum
from functools import total_ordering

from TowerLab.Objects.errors import BadSpec

# numeric tags used by the vectorised label grids
TAG_A, TAG_B, TAG_BLOCK, TAG_NONE = 0, 1, 2, -1


@total_ordering
class ColorId:
    TAG = None

    def key(self):
        raise NotImplementedError

    def __lt__(self, other):
        if not isinstance(other, ColorId):
            return NotImplemented
        return self.key() < other.key()

    def to_json(self):
        return str(self)

    @staticmethod
    def from_label(tag, a, b):
        if tag == TAG_A:
            return AColor(int(a), int(b))
        if tag == TAG_B:
            return BColor(int(a))
        if tag == TAG_BLOCK:
            return Block(int(a))
        raise BadSpec(f'No color for label ({tag}, {a}, {b}).')


@dataclass(frozen=True, eq=True)
class AColor(ColorId):
    j: int
    i: int

    TAG = TAG_A

    def key(self):
        return self.TAG, self.j, self.i

    def __str__(self):
        return f'A:{self.j}:{self.i}'


@dataclass(frozen=True, eq=True)
class BColor(ColorId):
    i: int

    TAG = TAG_B

    def key(self):
        return self.TAG, self.i, 0

    def __str__(self):
        return f'B:{self.i}'


@dataclass(frozen=True, eq=True)
class Block(ColorId):
    n: int

    TAG = TAG_BLOCK

    def key(self):
        return self.TAG, self.n, 0

    def __str__(self):
        return f'blk:{self.n}'


class Marker(Enum):
    LEFTOVER = 'Leftover'
    COLUMN_ZERO = 'ColumnZero'

    def __str__(self):
        return self.value


def parse_color(text):
    parts = text.strip().split(':')
    try:
        if parts[0] == 'A' and len(parts) == 3:
            return AColor(int(parts[1]), int(parts[2]))
        if parts[0] == 'B' and len(parts) == 2:
            return BColor(int(parts[1]))
        if parts[0] == 'blk' and len(parts) == 2:
            return Block(int(parts[1]))
    except ValueError:
        pass
    raise BadSpec(f'Cannot read color {text!r}; expected "A:j:i", "B:i" or "blk:n".')
