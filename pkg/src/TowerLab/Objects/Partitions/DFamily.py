import math

import numexpr as ne
import numpy as np

from TowerLab.Objects.errors import BadSpec


def cantor_pair(a, b):
    return (a + b) * (a + b + 1) // 2 + b


def cantor_unpair(n):
    w = (math.isqrt(8 * n + 1) - 1) // 2
    b = n - w * (w + 1) // 2
    return w - b, b


def cantor_unpair_grid(n):
    n = np.asarray(n, dtype=np.int64)
    nf = n.astype(np.float64)
    w = np.floor(ne.evaluate('(sqrt(8 * nf + 1) - 1) / 2')).astype(np.int64)
    # float rounding is off by at most one either way
    w -= (w * (w + 1) // 2 > n)
    w += ((w + 1) * (w + 2) // 2 <= n)
    b = n - w * (w + 1) // 2
    return w - b, b


class DFamily:
    """Auxiliary partition {D_k} of the positive integers into infinite sets.

    `element(k, r)` is the r-th element of D_k (0-indexed, increasing in r) and
    `locate(m)` inverts it.
    """

    NAME = None

    def element(self, k, r):
        raise NotImplementedError

    def locate(self, m):
        raise NotImplementedError

    def locate_grid(self, m):
        raise NotImplementedError

    def bounded_element(self, k, r, limit):
        """element(k, r), or some value above limit once the element is known to exceed it."""
        if k > limit or r > limit:
            return limit + 1
        return self.element(k, r)

    def __eq__(self, other):
        return isinstance(other, DFamily) and self.NAME == other.NAME

    def __hash__(self):
        return hash(self.NAME)

    def __repr__(self):
        return f'{self.__class__.__name__}()'

    def __str__(self):
        return self.NAME


class CantorPairing(DFamily):
    NAME = 'cantor'

    def element(self, k, r):
        return cantor_pair(k, r) + 1

    def locate(self, m):
        if m < 1:
            raise BadSpec(f'D-families partition the positive integers, got {m}.')
        return cantor_unpair(m - 1)

    def locate_grid(self, m):
        return cantor_unpair_grid(np.asarray(m, dtype=np.int64) - 1)


class Dyadic(DFamily):
    NAME = 'dyadic'

    def element(self, k, r):
        return (2 * r + 1) << k

    def bounded_element(self, k, r, limit):
        if k >= limit.bit_length():
            return limit + 1
        return super().bounded_element(k, r, limit)

    def locate(self, m):
        if m < 1:
            raise BadSpec(f'D-families partition the positive integers, got {m}.')
        k = (m & -m).bit_length() - 1
        return k, ((m >> k) - 1) // 2

    def locate_grid(self, m):
        odd = np.asarray(m, dtype=np.int64).copy()
        k = np.zeros_like(odd)
        even = (odd > 0) & (odd % 2 == 0)
        while even.any():
            odd[even] //= 2
            k[even] += 1
            even = (odd > 0) & (odd % 2 == 0)
        return k, (odd - 1) // 2


D_FAMILIES = {family.NAME: family for family in (CantorPairing(), Dyadic())}


def d_family(d):
    if isinstance(d, DFamily):
        return d
    try:
        return D_FAMILIES[d]
    except KeyError:
        raise BadSpec(f'Unknown D-family {d!r}, expected one of {sorted(D_FAMILIES)}.') from None


def d_element(d, k, r):
    return d_family(d).element(k, r)


def d_locate(d, m):
    return d_family(d).locate(m)
