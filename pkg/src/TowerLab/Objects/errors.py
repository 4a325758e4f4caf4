class TowerLabError(ValueError):
    """Base class for every domain error raised by TowerLab."""


class BadSpec(TowerLabError):
    pass


class WindowMismatch(TowerLabError):

    def __init__(self, point, window):
        self.point = point
        self.window = window
        super().__init__(f'Point {tuple(point)} lies outside window {window}.')


class PartitionAxiomViolation(TowerLabError):

    def __init__(self, point, colors):
        self.point = point
        self.colors = tuple(colors)
        names = ', '.join(str(c) for c in self.colors) or 'none'
        super().__init__(f'Point {tuple(point)} must carry exactly one color, got: {names}.')


class UnknownColor(TowerLabError):

    def __init__(self, color, partition):
        self.color = color
        self.partition = partition
        super().__init__(f'Color {color} does not occur in partition {partition}.')


class InvalidCandidate(TowerLabError):
    pass


class InvalidDualWitness(TowerLabError):
    pass


class TooFewFunctions(TowerLabError):

    def __init__(self, functions, covers):
        self.functions = functions
        self.covers = covers
        super().__init__(f'Tower has {functions} functions, needs more than {covers}.')


class InsufficientLevels(TowerLabError):

    def __init__(self, needed, available):
        self.needed = needed
        self.available = available
        super().__init__(f'Tower sequence reaches level {available}, level {needed} is required.')


class NotAColor(TowerLabError):

    def __init__(self, color):
        self.color = color
        super().__init__(f'{color} is not an A-color.')


class RowZero(TowerLabError):

    def __init__(self, what):
        super().__init__(f'{what} lies in row 0, nothing below it.')


class TooShort(TowerLabError):

    def __init__(self, length, width):
        self.length = length
        self.width = width
        super().__init__(f'Chain length {length} is smaller than its width {width}.')


class WindowTooSmall(TowerLabError):

    def __init__(self, block, index, column, window):
        self.block = block
        self.index = index
        self.column = column
        self.window = window
        super().__init__(f'Element {index} of D_{block} is column {column}, outside {window}.')


class TooManyFailures(TowerLabError):

    def __init__(self, failures, bound):
        self.failures = failures
        self.bound = bound
        super().__init__(f'{failures} failures in the interval, at most {bound} allowed.')


class HypothesisViolated(TowerLabError):

    def __init__(self, width, needed):
        self.width = width
        self.needed = needed
        super().__init__(f'Chain width {width} is below the required {needed}.')


class Overflow(TowerLabError):

    def __init__(self, value, limit):
        self.value = value
        self.limit = limit
        super().__init__(f'Size {value} exceeds the configured limit {limit}.')


class WindowExhausted(TowerLabError):
    pass


class NotATowerSequence(TowerLabError):

    def __init__(self, reason):
        self.reason = reason
        super().__init__(f'Not a sequence of essentially different (n, n)-towers: {reason}.')
