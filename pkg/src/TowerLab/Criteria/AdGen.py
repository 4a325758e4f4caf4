from TowerLab.Criteria.Quantifiers import ExceptionBudget
from TowerLab.Objects.Grid.PointSet import PointSet
from TowerLab.Objects.Ideals.Game import fits
from TowerLab.Objects.Verdict import ConsistentAtScale, Refuted


def adgen_verdict(c, jspec, jcert, window, budget=None):
    """The ideal generated by an almost disjoint family C is P(J) iff only finitely many C-blocks lie outside J."""
    budget = budget or ExceptionBudget()
    blocks = [PointSet(block).restrict(window) for block in c]
    failing = [n for n, block in enumerate(blocks) if not fits(jspec, block, jcert, window)]

    statement = f'the ideal generated by {len(blocks)} blocks is P({jspec})'
    if not budget.allows(failing, len(blocks), exact=False):
        return Refuted({'failingBlocks': failing, 'total': len(blocks)}, details={'statement': statement})
    return ConsistentAtScale(window, f'{len(failing)} of {len(blocks)} blocks outside {jspec}, within {budget}',
                             details={'statement': statement, 'budget': budget, 'exceptions': failing})
