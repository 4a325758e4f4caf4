from TowerLab.Criteria.TowerCriteria import sufficient_scan
from TowerLab.Objects.Chains.Refutation import Mode, RefutationEngine, Witness
from TowerLab.Objects.Partitions.EPartition import EPartition
from TowerLab.Objects.window import Window


def flagship_report(window=None):

    # The tower condition for "Sel is P(Sel(E))": some k admits no (k,k)-tower
    e = EPartition()
    scan = sufficient_scan(e, 'B', window or Window(256, 16))

    # ...and yet a single constant function with widths (1, 1) is beaten by the chain descent
    engine = RefutationEngine(['const:0'], (1, 1), Mode.SEL)
    refutation = engine.run()
    recounted = isinstance(refutation.outcome, Witness) and engine.recount(refutation.outcome)

    return {
        'towerCondition': scan,
        'refutation': refutation,
        'recounted': recounted,
        'towersAreNotEnough': scan.holds and recounted,
    }


if __name__ == '__main__':

    from TowerLab.Functions.Serialize import canonical_json
    print(canonical_json(flagship_report()), end='')
