import pytest
from hypothesis import given, settings, strategies as st

from TowerLab.Objects.Grid.PointSet import PointSet
from TowerLab.Objects.Ideals.Certificate import Budget, Certificate
from TowerLab.Objects.Ideals.Game import (AllCovered, Candidate, Defeated, almost_subideal_check, fits,
                                          join_candidates, orthogonality_check, pj_game_round, realize)
from TowerLab.Objects.Ideals.Ideal import (INCLUSIONS, IdealKind, check_certificate, ideal_inclusions, is_included,
                                           make_ideal, minimal_width)
from TowerLab.Objects.Partitions.Colors import Block
from TowerLab.Objects.Partitions.EPartition import EPartition
from TowerLab.Objects.Partitions.Rows import Rows
from TowerLab.Objects.Partitions.Vertical import Vertical
from TowerLab.Objects.Verdict import ConsistentAtScale, Refuted
from TowerLab.Objects.errors import BadSpec, InvalidCandidate, InvalidDualWitness
from TowerLab.Objects.window import Window


def column(x, window):
    return PointSet(window.column(x))


def row(y, window):
    return PointSet((x, y) for x in range(window.cols))


def ideal(kind):
    return make_ideal(kind, Vertical())


def test_ideal_kind_parse():
    assert IdealKind.parse('FinFin') is IdealKind.FIN_FIN
    assert IdealKind.OFIN.label == '∅×Fin'
    with pytest.raises(BadSpec):
        IdealKind.parse('maximal')


def test_certificate_json():
    cert = Certificate(colors={Block(3)}, width=2, per_block={Block(1): 1}, delta=PointSet([(0, 0)]))
    assert Certificate.from_json(cert.to_json()) == cert
    assert cert.bound(Block(1)) == 1
    assert cert.bound(Block(7)) == 2


def test_sel_check():
    window = Window(8, 8)
    sel = ideal(IdealKind.SEL)
    assert sel.check(row(0, window), Certificate(width=1), window)
    assert not sel.check(row(0, window), Certificate(width=0), window)
    assert sel.check(row(0, window), Certificate(width=0, delta=row(0, window)), window)


def test_fingen_fit_uses_the_blocks():
    window = Window(16, 16)
    cert = ideal(IdealKind.FIN_GEN).fit(column(3, window) | column(5, window), Budget(), window)
    assert cert.colors == frozenset({Block(3), Block(5)})
    assert not cert.delta


def test_ed_fit_exempts_heavy_blocks():
    window = Window(32, 32)
    cert = ideal(IdealKind.ED).fit(column(3, window) | row(0, window), Budget(), window)
    assert cert.colors == frozenset({Block(3)})
    assert cert.width == 1


def test_fit_gives_up_beyond_the_budget():
    window = Window(32, 32)
    everything = PointSet(window.points())
    assert ideal(IdealKind.OFIN).fit(everything, Budget(), window) is None
    assert ideal(IdealKind.FIN).fit(column(0, window), Budget(), window) is None
    assert ideal(IdealKind.FIN).fit(PointSet([(1, 1)]), Budget(), window) is not None


def test_minimal_width():
    window = Window(8, 8)
    assert minimal_width(Vertical(), column(2, window) | row(0, window), window) == 8
    assert minimal_width(Vertical(), PointSet(), window) == 0


def test_ideal_inclusions():
    lattice = ideal_inclusions()
    assert ('Sel', 'ED') in lattice['edges']
    assert 'Fin×Fin = (Fin×∅) ∨ (∅×Fin)' in lattice['identities']
    assert is_included(IdealKind.FIN, IdealKind.FIN_FIN)
    assert not is_included(IdealKind.OFIN, IdealKind.ED)
    assert not is_included(IdealKind.FIN_GEN, IdealKind.SEL)


@pytest.mark.parametrize('small, big', INCLUSIONS)
def test_inclusions_hold_on_generators(small, big):
    window = Window(16, 16)
    for generator in ideal(small).generators(window, Budget()):
        assert fits(ideal(big), generator, Budget(), window)


def test_realize_takes_least_points_per_block():
    window = Window(4, 6)
    points = realize(Candidate(ideal(IdealKind.SEL), Certificate(width=2)), window)
    assert points == PointSet((x, y) for x in range(4) for y in range(2))


def test_realize_rejects_points_outside_their_certificate():
    window = Window(4, 4)
    candidate = Candidate(ideal(IdealKind.SEL), Certificate(width=1), column(0, window))
    with pytest.raises(InvalidCandidate):
        candidate.realize(window)


def test_game_round_rows_defeat_a_selector():
    window = Window(32, 32)
    family = [row(n, window) for n in range(8)]
    candidate = Candidate(ideal(IdealKind.SEL), Certificate(width=4))
    outcome = pj_game_round(family, candidate, ideal(IdealKind.FIN_GEN), Budget(), window)
    assert isinstance(outcome, Defeated)
    assert outcome.index == 4
    assert outcome.residual == family[4]


def test_game_round_all_covered():
    window = Window(16, 16)
    family = [column(n, window) for n in range(4)]
    candidate = Candidate(ideal(IdealKind.FIN_GEN), Certificate(colors={Block(n) for n in range(4)}))
    assert isinstance(pj_game_round(family, candidate, ideal(IdealKind.FIN), Budget(), window), AllCovered)


def test_join_candidates_realize_the_union():
    window = Window(8, 8)
    first = Candidate(ideal(IdealKind.FIN_GEN), Certificate(colors={Block(0)}))
    second = (ideal(IdealKind.SEL), Certificate(width=1))
    joined = join_candidates(first, second)
    assert joined.realize(window) == column(0, window) | row(0, window)


def test_orthogonality_check():
    window = Window(4, 4)
    fingen = ideal(IdealKind.FIN_GEN)
    x = column(0, window)
    rest = Certificate(colors={Block(1), Block(2), Block(3)})
    assert orthogonality_check(fingen, Certificate(colors={Block(0)}), fingen, rest, x, window)
    assert not orthogonality_check(fingen, Certificate(), fingen, rest, x, window)


def test_almost_subideal_check():
    window = Window(8, 5)
    e = row(0, window)
    samples = [row(n, window) for n in range(5)]
    sel, fin = ideal(IdealKind.SEL), ideal(IdealKind.FIN)

    assert isinstance(almost_subideal_check(sel, fin, e, samples, Budget(), window), ConsistentAtScale)
    refuted = almost_subideal_check(sel, fin, e, samples, Budget(delta=2), window)
    assert isinstance(refuted, Refuted)
    assert refuted.witness['sample'] == 0


def test_almost_subideal_needs_a_dual_witness():
    window = Window(32, 8)
    sel, fin = ideal(IdealKind.SEL), ideal(IdealKind.FIN)
    with pytest.raises(InvalidDualWitness):
        almost_subideal_check(sel, fin, PointSet(), [], Budget(), window)


PARTITIONS = [Vertical(), Rows(), EPartition()]
SMALL = Window(6, 6)
cells = st.frozensets(st.tuples(st.integers(0, 5), st.integers(0, 5)), max_size=10)


def test_certificate_join():
    first = Certificate(colors={Block(0)}, width=1, per_block={Block(2): 3}, delta=PointSet([(0, 0)]))
    second = Certificate(width=2, per_block={Block(4): 0}, delta=PointSet([(1, 1)]))
    joined = first.join(second)
    assert joined.colors == {Block(0)}
    assert joined.width == 3
    assert joined.per_block == {Block(2): 5, Block(4): 1}
    assert joined.delta == PointSet([(0, 0), (1, 1)])


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(list(IdealKind)), st.sampled_from(PARTITIONS), cells, cells, st.data())
def test_certificates_are_monotone_and_closed_under_union(kind, partition, x, y, data):
    spec = make_ideal(kind, partition)
    budget = Budget(generators=2, delta=4, width=2)
    cx, cy = spec.fit(x, budget, SMALL), spec.fit(y, budget, SMALL)
    if cx is None or cy is None:
        return

    assert check_certificate(spec, x, cx, SMALL)
    part = data.draw(st.frozensets(st.sampled_from(sorted(x)))) if x else frozenset()
    assert check_certificate(spec, part, cx, SMALL)
    assert check_certificate(spec, x | y, cx.join(cy), SMALL)
    assert check_certificate(spec, x | y, cy.join(cx), SMALL)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(list(IdealKind)), st.sampled_from(PARTITIONS),
       st.lists(cells, max_size=3), st.lists(cells, max_size=3), cells, cells)
def test_game_rounds_split_over_a_join(kind, partition, first, second, one, two):
    """A candidate against I1 v I2 serves I1 and I2; candidates for each join to one for the union."""
    jspec = make_ideal(kind, partition)
    budget = Budget(generators=1, delta=2, width=1)
    fin = make_ideal(IdealKind.FIN, partition)
    left, right = Candidate(fin, Certificate(delta=one)), Candidate(fin, Certificate(delta=two))
    both = join_candidates(left, right)

    def wins(family, candidate):
        return isinstance(pj_game_round(family, candidate, jspec, budget, SMALL), AllCovered)

    if wins(first, left) and wins(second, right):
        assert wins(first + second, both)
    if wins(first + second, both):
        assert wins(first, both) and wins(second, both)
    if wins(first, left):
        assert wins(first, both)
