from dataclasses import dataclass, field


@dataclass(frozen=True)
class Refuted:
    """Certain: the witness re-validates independently of the window."""

    witness: object
    details: dict = field(default_factory=dict)

    consistent = False

    def to_json(self):
        return {'verdict': 'Refuted', 'witness': self.witness, 'details': self.details}


@dataclass(frozen=True)
class ConsistentAtScale:
    """No counterexample inside the window and budgets; never a proof."""

    window: object
    note: str
    evidence: object = None
    details: dict = field(default_factory=dict)

    consistent = True

    def to_json(self):
        return {'verdict': 'ConsistentAtScale', 'window': self.window, 'note': self.note,
                'evidence': self.evidence, 'details': self.details}
