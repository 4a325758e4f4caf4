from dataclasses import dataclass

from TowerLab.Objects.Partitions.DFamily import d_family
from TowerLab.Objects.errors import BadSpec, Overflow
from TowerLab.Objects.settings import Settings
from TowerLab.Objects.window import Window


@dataclass(frozen=True)
class PQSequence:
    kvec: tuple
    p: tuple
    q: tuple

    def to_json(self):
        return {'kvec': list(self.kvec), 'p': [str(n) for n in self.p], 'q': [str(n) for n in self.q]}


def pq_sequence(kvec):
    p, q = [1], [1]
    for k in kvec:
        if k > 0 and p[-1] > Settings.EXPONENT_LIMIT:
            raise Overflow(p[-1], Settings.EXPONENT_LIMIT)
        q.append(q[-1] * (k + 1) ** p[-1])
        p.append(q[-1] + p[-1] - 1)
    return PQSequence(tuple(kvec), tuple(p), tuple(q))


def window_columns(kvec, d, headroom, start=0, limit=Settings.WINDOW_LIMIT):
    """Columns holding headroom * q_top blocks of the top chain with colors start..start+p_top-1."""
    if headroom < 1:
        raise BadSpec(f'Headroom must be at least 1, got {headroom}.')
    top = max(len(kvec) - 1, 0)
    sequence = pq_sequence(kvec)
    blocks = headroom * sequence.q[top]
    last_color = start + sequence.p[top] - 1
    return d_family(d).bounded_element(blocks - 1, last_color + (blocks - 1) * top, limit) + 1


def required_window(kvec, d=None, headroom=Settings.HEADROOM, limit=Settings.WINDOW_LIMIT, start=0):
    d = d or Settings.DEFAULT_D_FAMILY
    columns = window_columns(kvec, d, headroom, start, limit)
    if columns > limit:
        raise Overflow(columns, limit)
    return Window(columns, max(1, len(kvec)))
