from TowerLab.Objects.Towers.Tower import validate_tower
from TowerLab.Objects.errors import InsufficientLevels, NotATowerSequence, TooFewFunctions


def _uncovered(function, domain, cover):
    return sum(1 for x in domain if all(h(x) != function(x) for h in cover))


def uncovered_omega(tower, cover):
    """Index and count of the tower function least covered by the total functions `cover`.

    The first |cover|+1 functions hold (|cover|+1)*kappa points and `cover` meets at most
    |cover|*kappa of them, so the returned count is at least ceil(kappa / (|cover| + 1)).
    """
    cover = list(cover)
    if tower.lam <= len(cover):
        raise TooFewFunctions(tower.lam, len(cover))
    domain = sorted(tower.domain)
    counts = [_uncovered(g, domain, cover) for g in tower.functions]
    best = max(range(len(counts)), key=lambda i: (counts[i], -i))
    return best, counts[best]


def _levels(towers):
    """Towers keyed by level n; each must be an (n, n)-tower on its own columns."""
    by_level, seen = {}, set()
    for tower in towers:
        if not validate_tower(tower, tower.kappa, tower.kappa):
            raise NotATowerSequence(f'tower on {sorted(tower.domain)} is not a ({tower.kappa}, {tower.kappa})-tower')
        if tower.kappa in by_level:
            raise NotATowerSequence(f'level {tower.kappa} occurs twice')
        if tower.domain & seen:
            raise NotATowerSequence(f'columns {sorted(tower.domain & seen)} are shared between towers')
        seen |= tower.domain
        by_level[tower.kappa] = tower
    return by_level


def uncovered_kk(towers, cover, m):
    """(i, n, count) with count = |g_i^n minus the cover| >= m and i <= |cover|.

    Levels are read off the tower sizes (T_n is an (n, n)-tower). Every level
    m'(|cover|+1), m' >= m, yields some i(m') by the pigeonhole inside that tower; the i
    repeated most often wins and is reported at its least such level.
    """
    cover = list(cover)
    step = len(cover) + 1
    by_level = _levels(towers)
    if m * step not in by_level:
        raise InsufficientLevels(m * step, max(by_level, default=0))

    hits = {}
    scale = m
    while scale * step in by_level:
        tower = by_level[scale * step]
        domain = sorted(tower.domain)
        counts = [_uncovered(g, domain, cover) for g in tower.functions[:step]]
        i = max(range(step), key=lambda n: (counts[n], -n))
        hits.setdefault(i, []).append((scale * step, counts[i]))
        scale += 1

    i = min(hits, key=lambda n: (-len(hits[n]), n))
    level, count = hits[i][0]
    return i, level, count
