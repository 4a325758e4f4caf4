import logging
import random
from itertools import combinations

import progressbar

from TowerLab.Objects.Chains.Chain import down_color
from TowerLab.Objects.Chains.Coverage import interval_pigeonhole
from TowerLab.Objects.Chains.PQ import pq_sequence
from TowerLab.Objects.Partitions.Colors import AColor
from TowerLab.Objects.Partitions.EPartition import EPartition, e_color
from TowerLab.Objects.Towers.TowerSearch import search_tower
from TowerLab.Objects.window import Window

logger = logging.getLogger(__name__)


def observation_report(window=None, d=None):
    """Tower search against E in both readings: the whole coloring, and A-colors off column 0."""
    window = window or Window(256, 16)
    e = EPartition(d)

    full_33 = search_tower(e, 3, 3, window)
    full_32 = search_tower(e, 3, 2, window)
    full_22 = search_tower(e, 2, 2, window)
    a_colors_22 = search_tower(e, 2, 2, window, exclude_columns=(0,),
                               color_filter=lambda color, x: isinstance(color, AColor))

    return {
        'partition': str(e),
        'window': window,
        'towers': {'3x3': full_33, '3x2': full_32, '2x2': full_22, '2x2 A-colors off column 0': a_colors_22},
        'readings': {
            'whole coloring': 'a (2,2)-tower exists' if full_22 else 'no (2,2)-tower',
            'A-colors off column 0': 'a (2,2)-tower exists' if a_colors_22 else 'no (2,2)-tower',
        },
        'holds': full_33 is None and full_32 is None and a_colors_22 is None,
    }


def check_partition_axioms(window=None, d=None):
    window = window or Window(4096, 16)
    e = EPartition(d)
    coloring = e.coloring(window)

    for color, block in coloring.blocks().items():
        if not isinstance(color, AColor):
            continue
        blocks = []
        for x, y in block:
            k, r = e.d.locate(x)
            if y != color.i or r - k * color.i != color.j:
                return False, f'{color} holds the foreign point ({x}, {y})'
            blocks.append(k)
        if len(blocks) != len(set(blocks)):
            return False, f'{color} meets some D_k twice'

        expected, k = set(), 0
        while e.d.bounded_element(k, color.j + k * color.i, window.cols) < window.cols:
            expected.add(k)
            k += 1
        if expected != set(blocks):
            return False, f'{color} misses resident blocks {sorted(expected - set(blocks))}'
    return True, f'{len(coloring.colors())} colors on {window}'


def check_down_color(window=None, d=None, rows=15, colors=50):
    """The column A(j, i+1) shares with D_k carries A(j+k, i) one row lower."""
    window = window or Window(4096, 16)
    e = EPartition(d)
    checked = 0
    for i in range(min(rows, window.rows - 1)):
        for j in range(colors):
            k = 0
            while True:
                column = e.d.bounded_element(k, j + k * (i + 1), window.cols)
                if column >= window.cols:
                    break
                if e_color(e.d, (column, i)) != down_color(AColor(j, i + 1), k):
                    return False, f'mismatch at A({j},{i + 1}) over D_{k}'
                checked += 1
                k += 1
    return True, f'{checked} columns agree'


def check_nested_floor(top=1000, divisors=20):
    for a in range(1, top + 1):
        for b in range(1, divisors + 1):
            for c in range(1, divisors + 1):
                if (a // b) // c != a // (b * c):
                    return False, f'fails at ({a}, {b}, {c})'
    return True, f'a <= {top}, b, c <= {divisors}'


def check_interval_pigeonhole(max_size=24, max_k=4):
    cases = 0
    for size in range(1, max_size + 1):
        for k in range(min(max_k, size - 1) + 1):
            for n in range(k + 1):
                for failures in combinations(range(size), n):
                    lo, hi = interval_pigeonhole(0, size - 1, failures, k)
                    if hi - lo + 1 != size // (k + 1) or any(lo <= f <= hi for f in failures):
                        return False, f'size {size}, k {k}, failures {failures}'
                    cases += 1
    return True, f'{cases} failure sets'


def check_pq(samples=1000, seed=0):
    if pq_sequence((1, 1)).p != (1, 2, 9) or pq_sequence((2, 2)).q != (1, 3, 81):
        return False, 'fixed values differ'
    rng = random.Random(seed)
    for _ in range(samples):
        kvec = tuple(rng.randint(0, 2) for _ in range(rng.randint(1, 3)))
        p = pq_sequence(kvec).p
        q = pq_sequence(kvec).q
        if any(p[l] - q[l] != p[l - 1] - 1 for l in range(1, len(p))):
            return False, f'telescoping fails for {kvec}'
    return True, f'{samples} random width vectors'


def check_observation(window=None):
    report = observation_report(window)
    return report['holds'], report['readings']


def check_flagship():
    from TowerLab.Examples.Flagship import flagship_report
    report = flagship_report()
    return report['towersAreNotEnough'], 'tower condition holds, refutation succeeds'


CLAIMS = (
    ('partition axioms', check_partition_axioms),
    ('down color', check_down_color),
    ('nested floor', check_nested_floor),
    ('interval pigeonhole', check_interval_pigeonhole),
    ('p/q telescoping', check_pq),
    ('observation', check_observation),
    ('flagship', check_flagship),
)


def verify_claims(progress=False):
    results = {}
    bar = progressbar.ProgressBar(maxval=len(CLAIMS)).start() if progress else None
    for n, (name, check) in enumerate(CLAIMS):
        logger.info('Checking %s', name)
        passed, detail = check()
        results[name] = {'passed': passed, 'detail': detail}
        if bar is not None:
            bar.update(n + 1)
    if bar is not None:
        bar.finish()
    return {'claims': results, 'passed': all(r['passed'] for r in results.values())}
