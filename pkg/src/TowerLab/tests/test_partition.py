import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from TowerLab.Criteria.Claims import check_partition_axioms
from TowerLab.Objects.Partitions.Coloring import Exactness, build_coloring, intersection_count
from TowerLab.Objects.Partitions.Colors import AColor, BColor, Block, Marker, parse_color
from TowerLab.Objects.Partitions.DFamily import (cantor_pair, cantor_unpair, cantor_unpair_grid, d_element,
                                                 d_family, d_locate)
from TowerLab.Objects.Partitions.EPartition import EPartition, e_color
from TowerLab.Objects.Partitions.Rows import Rows
from TowerLab.Objects.Partitions.TablePartition import TablePartition
from TowerLab.Objects.Partitions.Vertical import Vertical
from TowerLab.Objects.errors import BadSpec, PartitionAxiomViolation, UnknownColor
from TowerLab.Objects.window import Window


def test_cantor_pairing_values():
    assert cantor_pair(0, 0) == 0
    assert cantor_pair(2, 1) == 7
    assert cantor_unpair(7) == (2, 1)


@given(st.integers(0, 10 ** 6), st.integers(0, 10 ** 6))
def test_cantor_unpair_inverts_pairing(a, b):
    assert cantor_unpair(cantor_pair(a, b)) == (a, b)


def test_cantor_unpair_grid_matches_scalar():
    n = np.concatenate((np.arange(5000), np.array([2 ** 40 - 1, 2 ** 40, 2 ** 45 + 17])))
    first, second = cantor_unpair_grid(n)
    assert [(int(a), int(b)) for a, b in zip(first, second)] == [cantor_unpair(int(m)) for m in n]


@pytest.mark.parametrize('d, k, r, m', [
    ('cantor', 0, 0, 1),
    ('cantor', 1, 0, 2),
    ('cantor', 0, 1, 3),
    ('dyadic', 0, 0, 1),
    ('dyadic', 2, 1, 12),
    ('dyadic', 1, 3, 14),
])
def test_d_family_elements(d, k, r, m):
    assert d_element(d, k, r) == m
    assert d_locate(d, m) == (k, r)


@pytest.mark.parametrize('d', ['cantor', 'dyadic'])
def test_locate_grid_matches_scalar(d):
    family = d_family(d)
    k, r = family.locate_grid(np.arange(1, 3000))
    assert [(int(a), int(b)) for a, b in zip(k, r)] == [family.locate(m) for m in range(1, 3000)]


def test_d_family_errors():
    with pytest.raises(BadSpec):
        d_family('ternary')
    with pytest.raises(BadSpec):
        d_locate('cantor', 0)


def test_e_colors_near_the_origin():
    e = EPartition()
    assert e.color_of(1, 0) == AColor(0, 0)
    assert e.color_of(0, 0) == BColor(0)
    assert e.color_of(0, 1) == BColor(1)
    assert e.color_of(2, 1) == BColor(0)
    assert e.color_of(2, 2) == BColor(1)
    assert e_color('cantor', (2, 1)) is Marker.LEFTOVER
    assert e_color('cantor', (0, 5)) is Marker.COLUMN_ZERO


@pytest.mark.parametrize('d', ['cantor', 'dyadic'])
def test_vectorised_coloring_matches_pointwise(d):
    e = EPartition(d)
    coloring = e.coloring(Window(64, 8))
    for x, y in Window(64, 8).points():
        assert coloring.color((x, y)) == e.color_of(x, y)


@pytest.mark.parametrize('d', ['cantor', 'dyadic'])
def test_leftover_index_enumerates_leftovers_in_order(d):
    e = EPartition(d)
    leftovers = []
    for m in range(1, 20):
        for i in range(20):
            k, r = e.d.locate(m)
            if r < k * i:
                leftovers.append((m, i))
    leftovers.sort(key=lambda p: (max(p), p[0], p[1]))
    shell = [p for p in leftovers if max(p) < 20]
    assert [e.leftovers.index(m, i) for m, i in shell] == list(range(len(shell)))


@pytest.mark.parametrize('d', ['cantor', 'dyadic'])
def test_partition_axioms(d):
    passed, detail = check_partition_axioms(Window(4096, 16), d)
    assert passed, detail


def test_table_partition_conflicts_are_reported():
    table = TablePartition.from_cells([(0, 0, 'blk:0'), (0, 0, 'blk:1')])
    with pytest.raises(PartitionAxiomViolation):
        build_coloring(table, Window(1, 1))


def test_table_partition_must_cover_the_window():
    table = TablePartition.from_cells([(0, 0, 'blk:0')])
    with pytest.raises(PartitionAxiomViolation):
        build_coloring(table, Window(2, 1))


def test_named_rules():
    counterexample = TablePartition.counterexample()
    assert counterexample.color_of(5, 3) == Block(0)
    assert counterexample.color_of(0, 1) == Block(2)
    merged = TablePartition.merged_rows()
    assert merged.color_of(3, 0) == Block(4)
    assert merged.color_of(3, 2) == Block(0)
    absorbed = TablePartition.absorbed()
    assert absorbed.color_of(0, 1) == Block(1)
    assert absorbed.color_of(2, 0) == Block(1)
    with pytest.raises(BadSpec):
        TablePartition.named('nothing')


def test_parse_color():
    assert parse_color('A:3:1') == AColor(3, 1)
    assert parse_color('B:7') == BColor(7)
    assert parse_color('blk:2') == Block(2)
    with pytest.raises(BadSpec):
        parse_color('C:1')


def test_blocks_partition_the_window():
    coloring = EPartition().coloring(Window(32, 6))
    sizes = [len(block) for block in coloring.blocks().values()]
    assert sum(sizes) == 32 * 6
    assert coloring.colors() == sorted(coloring.blocks())


def test_closed_form_counts():
    window = Window(16, 16)
    report = intersection_count(Vertical(), Block(3), Rows(), Block(5), window)
    assert (report.count, report.exactness) == (1, Exactness.EXACT)
    assert intersection_count(Vertical(), Block(2), Vertical(), Block(2), window).count == math.inf
    assert intersection_count(Vertical(), Block(2), Vertical(), Block(3), window).count == 0

    e = EPartition()
    assert intersection_count(e, AColor(0, 2), Rows(), Block(2), window).infinite
    assert intersection_count(e, AColor(0, 2), Rows(), Block(1), window).count == 0
    column = e.column_of(AColor(1, 1), 2)
    assert intersection_count(e, AColor(1, 1), Vertical(), Block(column), window).count == 1
    assert intersection_count(e, AColor(1, 1), Vertical(), Block(0), window).count == 0


def test_window_counts_are_lower_bounds():
    report = intersection_count(EPartition(), BColor(0), TablePartition.counterexample(), Block(0), Window(16, 8))
    assert report.exactness is Exactness.WINDOW_LOWER_BOUND
    assert report.count >= 1


def test_unknown_color():
    with pytest.raises(UnknownColor):
        intersection_count(Vertical(), AColor(0, 0), Rows(), Block(0), Window(4, 4))
