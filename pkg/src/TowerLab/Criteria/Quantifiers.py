import math
from dataclasses import dataclass

from TowerLab.Objects.settings import Settings


@dataclass(frozen=True)
class ExceptionBudget:
    """Window reading of "for all but finitely many".

    Exceptions must number fewer than `fraction` of the indices. When the counts behind
    them are only window lower bounds they must also sit in the initial segment of that
    length, since only the tail carries information.
    """

    fraction: float = Settings.EXCEPTION_FRACTION

    def allowed(self, total):
        return math.ceil(self.fraction * total)

    def allows(self, exceptions, total, exact=True):
        exceptions = list(exceptions)
        if len(exceptions) >= max(self.fraction * total, 1):
            return False
        if not exact:
            return all(index < self.allowed(total) for index in exceptions)
        return True

    def to_json(self):
        return {'fraction': self.fraction, 'initialSegmentForLowerBounds': True}
