import logging
from dataclasses import dataclass

from TowerLab.Objects.Grid.PointSet import PointSet
from TowerLab.Objects.Ideals.Certificate import Budget, Certificate
from TowerLab.Objects.Verdict import ConsistentAtScale, Refuted
from TowerLab.Objects.errors import InvalidCandidate, InvalidDualWitness

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AllCovered:

    def to_json(self):
        return {'outcome': 'AllCovered'}


@dataclass(frozen=True)
class Defeated:
    index: int
    residual: PointSet

    def to_json(self):
        return {'outcome': 'Defeated', 'index': self.index, 'residual': self.residual}


@dataclass(frozen=True)
class Candidate:
    """A proposed member of the ideal: its certificate and, optionally, explicit points."""

    ideal: object
    certificate: Certificate
    points: PointSet = None

    def realize(self, window):
        if self.points is None:
            return self.ideal.realize(self.certificate, window)
        points = PointSet(self.points).check_window(window)
        if not self.ideal.check(points, self.certificate, window):
            raise InvalidCandidate(f'Candidate points fail their own {self.ideal} certificate.')
        return points

    def to_json(self):
        return {'ideal': self.ideal, 'certificate': self.certificate, 'points': self.points}


@dataclass(frozen=True)
class JoinCandidate:
    """Member of I1 v I2 given as a pair of candidates."""

    first: object
    second: object

    def realize(self, window):
        return self.first.realize(window) | self.second.realize(window)

    def to_json(self):
        return {'join': [self.first, self.second]}


def join_candidates(first, second):
    return JoinCandidate(as_candidate(first), as_candidate(second))


def as_candidate(candidate):
    if isinstance(candidate, (Candidate, JoinCandidate)):
        return candidate
    return Candidate(*candidate)


def fits(spec, x, budget, window):
    """True iff x is in spec under a fixed certificate or under some certificate within a Budget."""
    if isinstance(budget, Budget):
        return spec.fit(x, budget, window) is not None
    return spec.check(x, budget, window)


def realize(candidate, window):
    return as_candidate(candidate).realize(window)


def pj_game_round(family, candidate, jspec, jbudget, window):
    family = [PointSet(member).check_window(window) for member in family]
    covered = realize(candidate, window)

    for index, member in enumerate(family):
        residual = member - covered
        if not fits(jspec, residual, jbudget, window):
            logger.debug('Candidate defeated by family member %d (%d residual points)', index, len(residual))
            return Defeated(index, residual)
    return AllCovered()


def orthogonality_check(ispec, icert, jspec, jcert, x, window):
    x = PointSet(x).check_window(window)
    complement = PointSet(window.points()) - x
    return fits(ispec, x, icert, window) and fits(jspec, complement, jcert, window)


def almost_subideal_check(ispec, jspec, e, samples, jbudget, window, ibudget=None):
    ibudget = ibudget or Budget()
    samples = list(samples)
    e = PointSet(e).check_window(window)

    rest = PointSet(window.points()) - e
    if ispec.fit(rest, ibudget, window) is None:
        raise InvalidDualWitness(f'The complement of e ({len(rest)} points) is not in {ispec} within {ibudget}.')

    for index, sample in enumerate(samples):
        sample = PointSet(sample).check_window(window)
        if ispec.fit(sample, ibudget, window) is None:
            continue
        part = sample & e
        if not fits(jspec, part, jbudget, window):
            return Refuted({'sample': index, 'points': part},
                           details={'statement': f'{ispec} restricted to e is not inside {jspec}'})
    return ConsistentAtScale(window, f'every sample in {ispec} meets e inside {jspec}',
                             details={'samples': len(samples), 'budget': ibudget})
