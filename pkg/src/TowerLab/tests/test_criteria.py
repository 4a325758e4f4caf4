import math

import pytest

from TowerLab.Criteria.AdGen import adgen_verdict
from TowerLab.Criteria.Quantifiers import ExceptionBudget
from TowerLab.Criteria.Table1 import EXPECTED, Table1Reproducer, render_table1, table1_all, table1_reproduce
from TowerLab.Criteria.Table2 import table2_verdict
from TowerLab.Criteria.TowerCriteria import ed_ofin_verdict, ref1_verdict, sufficient_scan, veze_verdict
from TowerLab.Examples.Flagship import flagship_report
from TowerLab.Objects.Ideals.Certificate import Budget
from TowerLab.Objects.Ideals.Game import pj_game_round
from TowerLab.Objects.Ideals.Ideal import IdealKind, make_ideal
from TowerLab.Objects.Partitions.Colors import Block
from TowerLab.Objects.Partitions.EPartition import EPartition
from TowerLab.Objects.Partitions.Rows import Rows
from TowerLab.Objects.Partitions.TablePartition import TablePartition
from TowerLab.Objects.Partitions.Vertical import Vertical
from TowerLab.Objects.Towers.Tower import validate_tower
from TowerLab.Objects.Verdict import ConsistentAtScale, Refuted
from TowerLab.Objects.errors import BadSpec
from TowerLab.Objects.window import Window


def test_exception_budget():
    budget = ExceptionBudget()
    assert budget.allows([], 64)
    assert budget.allows(range(6), 64)
    assert not budget.allows(range(7), 64)
    assert budget.allows([60], 64)
    assert not budget.allows([60], 64, exact=False)
    assert not budget.allows([0], 4)


def test_table2_vertical_against_itself():
    window = Window(16, 16)
    sel = table2_verdict(Vertical(), Vertical(), IdealKind.SEL, window)
    assert isinstance(sel, Refuted)

    finfin = table2_verdict(Vertical(), Vertical(), IdealKind.FIN_FIN, window)
    assert isinstance(finfin, ConsistentAtScale)
    assert finfin.details['readings'] == {'literal': 'ConsistentAtScale', 'diagonalAware': 'ConsistentAtScale'}

    ofin = table2_verdict(Vertical(), Vertical(), IdealKind.OFIN, window)
    assert isinstance(ofin, Refuted)
    assert ofin.witness['triples'][0] == ['blk:0', 'blk:0', math.inf]
    assert ofin.details['readings']['diagonalAware'] == 'ConsistentAtScale'

    assert table2_verdict(Vertical(), Vertical(), 'fingen', window).consistent


def test_table2_vertical_against_rows():
    window = Window(16, 16)
    sel = table2_verdict(Vertical(), Rows(), IdealKind.SEL, window)
    assert isinstance(sel, ConsistentAtScale)
    assert sel.details['exact']
    assert 'readings' not in sel.details
    assert sel.details['k'] == 2
    assert isinstance(table2_verdict(Vertical(), Rows(), IdealKind.FIN_GEN, window), Refuted)


def bands():
    return TablePartition.from_function('bands', lambda x, y: Block(y // 5))


def test_table2_separates_sel_from_ofin():
    window = Window(16, 20)
    ofin = table2_verdict(Vertical(), bands(), IdealKind.OFIN, window)
    assert isinstance(ofin, ConsistentAtScale)
    assert 'k' not in ofin.details

    sel = table2_verdict(Vertical(), bands(), IdealKind.SEL, window)
    assert isinstance(sel, Refuted)
    assert not sel.witness['exact']
    assert sel.witness['triples'][0] == ['blk:0', 'blk:0', 5]

    wider = table2_verdict(Vertical(), bands(), IdealKind.SEL, window, widths=Budget(width=5))
    assert isinstance(wider, ConsistentAtScale)
    assert wider.details['k'] == 6


def test_table2_ed_reports_k_beside_the_exceptions():
    verdict = table2_verdict(Vertical(), Vertical(), IdealKind.ED, Window(16, 16))
    assert isinstance(verdict, ConsistentAtScale)
    assert verdict.details['k'] == 1
    assert 'k' not in table2_verdict(Vertical(), Vertical(), IdealKind.FIN_FIN, Window(16, 16)).details


def test_table2_with_window_counts():
    verdict = table2_verdict(TablePartition.counterexample(), Vertical(), IdealKind.OFIN, Window(16, 16))
    assert isinstance(verdict, Refuted)
    assert not verdict.witness['exact']


def test_table2_rejects_fin():
    with pytest.raises(BadSpec):
        table2_verdict(Vertical(), Vertical(), IdealKind.FIN, Window(4, 4))


def test_adgen_verdict():
    window = Window(32, 32)
    verticals = [window.column(n) for n in range(32)]
    fin = make_ideal(IdealKind.FIN, Vertical())
    finfin = make_ideal(IdealKind.FIN_FIN, Vertical())
    assert isinstance(adgen_verdict(verticals, fin, Budget(), window), Refuted)
    assert isinstance(adgen_verdict(verticals, finfin, Budget(), window), ConsistentAtScale)
    assert isinstance(adgen_verdict([], fin, Budget(), window), ConsistentAtScale)


def test_ref1_rows_are_never_orthogonal():
    window = Window(64, 64)
    verdict = ref1_verdict(Rows(), window)
    assert isinstance(verdict, Refuted)
    sequence = verdict.witness
    assert len(sequence) == 8
    assert sequence.essentially_different()
    coloring = Rows().coloring(window)
    assert all(validate_tower(t, 1, k, coloring) for k, t in enumerate(sequence, start=1))


def test_ref1_counterexample_is_covered():
    window = Window(16, 16)
    verdict = ref1_verdict(TablePartition.counterexample(), window)
    assert isinstance(verdict, ConsistentAtScale)
    assert verdict.evidence.verticals == (0,)
    assert verdict.evidence.blocks == (Block(0),)
    assert verdict.details['verified']


def test_ref1_vertical_is_refuted():
    assert isinstance(ref1_verdict(Vertical(), Window(32, 32)), Refuted)


def test_veze_for_e():
    verdict = veze_verdict(EPartition(), 3, 3, Window(64, 8))
    assert isinstance(verdict, ConsistentAtScale)
    assert verdict.details['leastM'] == 2
    assert 'certainty' in verdict.details


def test_veze_for_merged_rows():
    window = Window(16, 8)
    verdict = veze_verdict(TablePartition.merged_rows(), 3, 3, window)
    assert isinstance(verdict, Refuted)
    assert validate_tower(verdict.witness, 3, 3, TablePartition.merged_rows().coloring(window))


def test_veze_edges():
    assert isinstance(veze_verdict(EPartition(), 1, 3, Window(16, 4)), ConsistentAtScale)
    with pytest.raises(BadSpec):
        veze_verdict(EPartition(), 3, 2, Window(16, 4))


def test_ed_ofin_absorbed_partition_is_orthogonal():
    window = Window(16, 16)
    verdict = ed_ofin_verdict(TablePartition.absorbed(), window)
    assert isinstance(verdict, ConsistentAtScale)
    assert verdict.details['verified']

    exempt = ed_ofin_verdict(TablePartition.absorbed(), window, Budget(width=0, per_block=4, delta=0))
    assert exempt.evidence.verticals == (0,)
    assert exempt.evidence.functions == ()
    assert exempt.evidence.ed_certificate.colors == {Block(0)}
    assert exempt.details['verified']


def test_ed_ofin_vertical_fails_the_fin_half():
    verdict = ed_ofin_verdict(Vertical(), Window(16, 16))
    assert isinstance(verdict, Refuted)
    assert verdict.witness['half'] == 'finGen'
    assert verdict.witness['witness']['triples'][0] == ['blk:0', 'blk:0', math.inf]


def test_ed_ofin_rows_fail_the_sel_half():
    window = Window(16, 16)
    verdict = ed_ofin_verdict(Rows(), window)
    assert isinstance(verdict, Refuted)
    assert verdict.witness['half'] == 'sel'
    assert verdict.details['halves']['finGen'].consistent
    assert validate_tower(verdict.witness['witness'], 3, 3, Rows().coloring(window))


def test_sufficient_scan():
    scan = sufficient_scan(EPartition(), 'B', Window(64, 8))
    assert scan.holds
    assert scan.details['noTower'] == [3, 3]

    rows = sufficient_scan(Rows(), 'A', Window(64, 64))
    assert not rows.holds
    assert rows.evidence.essentially_different()

    assert not sufficient_scan(TablePartition.merged_rows(), 'D', Window(16, 8)).holds
    with pytest.raises(BadSpec):
        sufficient_scan(Rows(), 'Z', Window(4, 4))


def test_flagship():
    report = flagship_report(Window(64, 8))
    assert report['towerCondition'].holds
    assert report['recounted']
    assert report['towersAreNotEnough']


@pytest.mark.parametrize('row, col, how', [
    (IdealKind.FIN_GEN, IdealKind.OFIN, 'witness'),
    (IdealKind.SEL, IdealKind.FIN, 'witness'),
    (IdealKind.SEL, IdealKind.ED, 'inclusion'),
    (IdealKind.OFIN, IdealKind.SEL, 'p-ideal'),
    (IdealKind.FIN_FIN, IdealKind.FIN_GEN, 'join'),
])
def test_table1_cells(row, col, how):
    report = table1_reproduce(row, col)
    assert report.justification == how
    assert report.expected == EXPECTED[row, col]
    assert report.matches


def test_table1_defeats_replay():
    reproducer = Table1Reproducer()
    report = reproducer.reproduce(IdealKind.SEL, IdealKind.FIN_GEN)
    replay = report.verdict.witness['replay']
    family = reproducer.rows()
    outcome = pj_game_round(family, replay['candidate'], make_ideal(IdealKind.FIN_GEN, Vertical()),
                            reproducer.budget, reproducer.window)
    assert outcome == replay['outcome']


def test_table1_family_members_belong_to_the_row_ideal():
    report = table1_reproduce(IdealKind.ED, IdealKind.SEL)
    assert isinstance(report.verdict, Refuted)
    assert report.verdict.details['membersInIdeal']


def test_table1_full():
    reports = table1_all(with_p=True)
    assert len(reports) == 30
    assert all(r.matches for r in reports)

    text = render_table1(reports).splitlines()
    assert text[0].split() == ['I', '\\', 'J', 'P', 'P(Fin×∅)', 'P(Sel)', 'P(ED)', 'P(∅×Fin)', 'P(Fin×Fin)']
    assert text[4].split() == ['∅×Fin', '✓', '✓', '✓', '✓', '✓', '✓']
    assert text[3].split() == ['ED', '✗', '✗', '✗', '✓', '✗', '✓']
