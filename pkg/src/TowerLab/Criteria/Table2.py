from TowerLab.Criteria.Quantifiers import ExceptionBudget
from TowerLab.Objects.Ideals.Certificate import Budget
from TowerLab.Objects.Ideals.Ideal import IdealKind
from TowerLab.Objects.Partitions.Coloring import OMEGA, Exactness, intersection_count, joint_counts
from TowerLab.Objects.Verdict import ConsistentAtScale, Refuted
from TowerLab.Objects.errors import BadSpec

PATTERNS = {
    IdealKind.FIN_GEN: '(∀^∞ m) A_n∩B_m=∅',
    IdealKind.SEL: '(∃k)(∀m) |A_n∩B_m|<k',
    IdealKind.ED: '(∃k)(∀^∞ m) |A_n∩B_m|<k',
    IdealKind.OFIN: '(∀m) |A_n∩B_m|<ω',
    IdealKind.FIN_FIN: '(∀^∞ m) |A_n∩B_m|<ω',
}


class Table2Evaluator:
    """Checks (∀^∞ n) A_n ∈ J(B) through the block intersection counts of two partitions.

    For Sel and ED the witness k of "(∃k) ... |A_n∩B_m|<k" is the largest bounded count
    plus one; a k above `widths.width + 1` fails the row at budget, never with certainty.
    """

    def __init__(self, a, b, kind, window, budget=None, widths=None):
        if kind not in PATTERNS:
            raise BadSpec(f'Table 2 covers {[k.value for k in PATTERNS]}, got {kind.value}.')
        self.a, self.b, self.kind, self.window = a, b, kind, window
        self.budget = budget or ExceptionBudget()
        self.widths = widths or Budget()
        # a lower-bound count this large stands for an infinite intersection
        self.large = max(1, min(window.cols, window.rows) // 2)

        self.a_colors = a.coloring(window).colors()
        self.b_colors = b.coloring(window).colors()
        self.joint = joint_counts(a, b, window)

    def count(self, i, j):
        return intersection_count(self.a, i, self.b, j, self.window, joint=self.joint)

    def unbounded(self, report):
        return report.infinite or (report.exactness is Exactness.WINDOW_LOWER_BOUND and report.count >= self.large)

    def row(self, i, skip_diagonal):
        """(holds, violations, exact, k) for one block A_n = i; k is None outside Sel and ED."""
        reports = [(j, self.count(i, j)) for j in self.b_colors if not (skip_diagonal and j == i)]
        if self.kind is IdealKind.FIN_GEN:
            bad = [(m, j, r) for m, (j, r) in enumerate(reports) if r.count > 0]
        else:
            bad = [(m, j, r) for m, (j, r) in enumerate(reports) if self.unbounded(r)]

        exact = all(r.exactness is Exactness.EXACT for _, _, r in bad)
        if self.kind in (IdealKind.SEL, IdealKind.OFIN):
            holds = not bad
        else:
            holds = self.budget.allows([m for m, _, _ in bad], len(reports), exact)

        k = None
        if self.kind in (IdealKind.SEL, IdealKind.ED):
            if not holds:
                return False, [(j, r) for _, j, r in bad], exact, OMEGA
            skipped = {m for m, _, _ in bad}
            bounded = [(m, j, r) for m, (j, r) in enumerate(reports) if m not in skipped]
            k = 1 + max((int(r.count) for _, _, r in bounded), default=0)
            if k > self.widths.width + 1:
                wide = [(j, r) for _, j, r in bounded if r.count > self.widths.width]
                return False, wide, False, k
        return holds, [(j, r) for _, j, r in bad], exact, k

    def evaluate(self, skip_diagonal=False):
        failing, triples, exact, ks = [], [], True, []
        for n, i in enumerate(self.a_colors):
            holds, bad, row_exact, k = self.row(i, skip_diagonal)
            if not holds:
                failing.append(n)
                j, report = bad[0]
                triples.append([str(i), str(j), report.count])
                exact = exact and row_exact
            elif k is not None:
                ks.append(k)

        statement = f'(∀^∞ n) {PATTERNS[self.kind]} for A={self.a}, B={self.b}'
        details = {'statement': statement}
        if self.kind in (IdealKind.SEL, IdealKind.ED):
            details.update(k=max(ks, default=1), widths=self.widths)
        if not self.budget.allows(failing, len(self.a_colors), exact):
            return Refuted({'triples': triples, 'exact': exact}, details=details)
        return ConsistentAtScale(self.window, f'{statement}: {len(failing)} exceptional n within {self.budget}',
                                 details=dict(details, exact=exact, budget=self.budget))


def _name(verdict):
    return 'Refuted' if isinstance(verdict, Refuted) else 'ConsistentAtScale'


def table2_verdict(a, b, kind, window, budget=None, widths=None):
    if not isinstance(kind, IdealKind):
        kind = IdealKind.parse(kind)
    evaluator = Table2Evaluator(a, b, kind, window, budget, widths)
    literal = evaluator.evaluate()
    if a != b:
        return literal

    diagonal = evaluator.evaluate(skip_diagonal=True)
    literal.details['readings'] = {'literal': _name(literal), 'diagonalAware': _name(diagonal)}
    return literal
