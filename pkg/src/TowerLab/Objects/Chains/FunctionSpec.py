import json

from TowerLab.Objects.errors import BadSpec


class FunctionSpec:
    """Closed-form total function column -> row, evaluated against a row count."""

    def evaluate(self, x, rows):
        raise NotImplementedError

    def bind(self, rows):
        return lambda x: self.evaluate(x, rows)

    @staticmethod
    def parse(text):
        kind, _, rest = text.partition(':')
        try:
            if kind == 'const':
                return Const(int(rest))
            if kind == 'lin':
                a, b = rest.split(':')
                return Linear(int(a), int(b))
            if kind == 'table':
                if rest.startswith('@'):
                    with open(rest[1:]) as handle:
                        values = json.load(handle)
                else:
                    values = [int(v) for v in rest.split(',')]
                return TableFunction(values)
        except (ValueError, OSError) as error:
            raise BadSpec(f'Cannot read function {text!r}: {error}') from None
        raise BadSpec(f'Unknown function {text!r}; expected const:c, lin:a:b or table:@file.')

    def __eq__(self, other):
        return type(self) is type(other) and str(self) == str(other)

    def __hash__(self):
        return hash(str(self))

    def to_json(self):
        return str(self)

    def __repr__(self):
        return f'FunctionSpec.parse({str(self)!r})'


class Const(FunctionSpec):

    def __init__(self, c):
        self.c = c

    def evaluate(self, x, rows):
        return self.c

    def __str__(self):
        return f'const:{self.c}'


class Linear(FunctionSpec):
    """x -> (a*x + b) mod rows."""

    def __init__(self, a, b):
        self.a = a
        self.b = b

    def evaluate(self, x, rows):
        return (self.a * x + self.b) % rows

    def __str__(self):
        return f'lin:{self.a}:{self.b}'


class TableFunction(FunctionSpec):
    """Periodic table: x -> values[x mod len(values)]."""

    def __init__(self, values):
        if not values:
            raise BadSpec('A table function needs at least one value.')
        self.values = [int(v) for v in values]

    def evaluate(self, x, rows):
        return self.values[x % len(self.values)]

    def __str__(self):
        return 'table:' + ','.join(str(v) for v in self.values)


def row_function(i):
    """The row omega x {i} as a function."""
    return Const(i)
