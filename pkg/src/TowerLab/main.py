import argparse
import logging
import sys

from TowerLab import __version__
from TowerLab.Criteria.Claims import observation_report, verify_claims
from TowerLab.Criteria.Table1 import render_table1, table1_all, table1_reproduce
from TowerLab.Criteria.Table2 import table2_verdict
from TowerLab.Criteria.TowerCriteria import ed_ofin_verdict, ref1_verdict, sufficient_scan, veze_verdict
from TowerLab.Functions.Parse import parse_functions, parse_kvec, parse_partition
from TowerLab.Functions.Serialize import canonical_json, to_jsonable
from TowerLab.Objects.Chains.PQ import pq_sequence
from TowerLab.Objects.Chains.Refutation import ContradictionAtColumn, Mode, refute_witness
from TowerLab.Objects.Ideals.Certificate import Budget
from TowerLab.Objects.Ideals.Ideal import IdealKind
from TowerLab.Objects.Towers.TowerSearch import SHAPES, search_ed_sequence, search_tower
from TowerLab.Objects.errors import TowerLabError
from TowerLab.Objects.settings import Settings
from TowerLab.Objects.window import Window

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_CONTRADICTION, EXIT_BAD_INPUT = 0, 1, 2


class UsageError(Exception):
    pass


class Parser(argparse.ArgumentParser):
    """Raises on usage errors instead of exiting, so run() owns the exit code."""

    def error(self, message):
        raise UsageError(f'{self.prog}: {message}')


def _window(text):
    return Window.parse(text)


def _budget(args):
    return Budget(args.generators, args.delta, args.width)


def build_parser():
    common = Parser(add_help=False)
    common.add_argument('--window', type=_window, default=None, help='COLSxROWS')
    common.add_argument('--format', choices=('json', 'text'), default='json')
    common.add_argument('-v', '--verbose', action='count', default=0)

    budgets = Parser(add_help=False)
    budgets.add_argument('--generators', type=int, default=Settings.GENERATORS)
    budgets.add_argument('--delta', type=int, default=Settings.DELTA)
    budgets.add_argument('--width', type=int, default=Settings.WIDTH)

    parser = Parser(prog='TowerLab-cli', description='Partition-induced ideals on the grid, at window scale.')
    parser.add_argument('--version', action='version', version=__version__)
    verbs = parser.add_subparsers(dest='verb', required=True, parser_class=Parser)

    gen = verbs.add_parser('gen', parents=[common], help='emit a coloring table')
    gen.add_argument('--partition', required=True)

    color = verbs.add_parser('color', parents=[common], help='color of one point')
    color.add_argument('--partition', required=True)
    color.add_argument('--x', type=int, required=True)
    color.add_argument('--y', type=int, required=True)

    tower = verbs.add_parser('tower', parents=[common], help='search a monochromatic tower')
    tower.add_argument('--partition', required=True)
    tower.add_argument('--kappa', type=int, required=True)
    tower.add_argument('--lambda', dest='lam', type=int, required=True)

    sequence = verbs.add_parser('ed-seq', parents=[common], help='search essentially different towers')
    sequence.add_argument('--partition', required=True)
    sequence.add_argument('--shape', choices=sorted(SHAPES), default='1k')
    sequence.add_argument('--count', type=int, default=Settings.SEQUENCE_COUNT)

    refute = verbs.add_parser('refute', parents=[common], help='run the chain refutation engine')
    refute.add_argument('--mode', choices=[m.value for m in Mode], default=Mode.SEL.value)
    refute.add_argument('--f', action='append', default=[], help='const:c, lin:a:b or table:@file')
    refute.add_argument('--k', required=True, help='comma separated widths, one more than functions')
    refute.add_argument('--d', default=Settings.DEFAULT_D_FAMILY)
    refute.add_argument('--headroom', type=int, default=Settings.HEADROOM)

    criteria = verbs.add_parser('criteria', parents=[common, budgets], help='characterisation verdicts')
    criteria.add_argument('criterion', choices=('table2', 'ref1', 'veze', 'ed-ofin', 'sufficient', 'observation'))
    criteria.add_argument('--partition', default='E:cantor')
    criteria.add_argument('--a', default='vertical')
    criteria.add_argument('--ideal', type=IdealKind.parse, default=IdealKind.SEL)
    criteria.add_argument('--case', default='B')
    criteria.add_argument('--kmax', type=int, default=3)
    criteria.add_argument('--kappa-min', type=int, default=Settings.KAPPA_PROXY)
    criteria.add_argument('--count', type=int, default=Settings.SEQUENCE_COUNT)

    pq = verbs.add_parser('pq', parents=[common], help='p and q sequences')
    pq.add_argument('--k', required=True)

    claims = verbs.add_parser('verify-claims', parents=[common], help='check the finite lemmas')
    claims.add_argument('--progress', action='store_true')

    table1 = verbs.add_parser('table1', parents=[common, budgets], help='reproduce the P(J) table')
    table1.add_argument('--row', type=IdealKind.parse, default=None)
    table1.add_argument('--col', type=IdealKind.parse, default=None)
    table1.add_argument('--family-size', type=int, default=Settings.FAMILY_SIZE)
    table1.add_argument('--with-p', action='store_true')

    return parser


def _gen(args):
    partition = parse_partition(args.partition)
    window = args.window or Window(16, 16)
    return partition.coloring(window), window


def _color(args):
    return parse_partition(args.partition).color_of(args.x, args.y), args.window


def _tower(args):
    window = args.window or Window(64, 64)
    found = search_tower(parse_partition(args.partition), args.kappa, args.lam, window)
    return ('none found' if found is None else found), window


def _sequence(args):
    window = args.window or Window(64, 64)
    found = search_ed_sequence(parse_partition(args.partition), args.count, args.shape, window)
    return ('none found' if found is None else found), window


def _refute(args):
    functions = parse_functions(args.f)
    report = refute_witness(functions, parse_kvec(args.k), Mode(args.mode), args.d,
                            headroom=args.headroom, window=args.window)
    return report, report.window


def _criteria(args):
    window = args.window or Window(64, 64)
    b = parse_partition(args.partition)
    if args.criterion == 'table2':
        result = table2_verdict(parse_partition(args.a), b, args.ideal, window, widths=_budget(args))
    elif args.criterion == 'ref1':
        result = ref1_verdict(b, window, _budget(args), args.count)
    elif args.criterion == 'veze':
        result = veze_verdict(b, args.kmax, args.kappa_min, window)
    elif args.criterion == 'ed-ofin':
        result = ed_ofin_verdict(b, window, _budget(args), args.kmax, args.kappa_min)
    elif args.criterion == 'sufficient':
        result = sufficient_scan(b, args.case, window, kappa=args.kappa_min, count=args.count)
    else:
        window = args.window or Window(256, 16)
        result = observation_report(window)
    return result, window


def _pq(args):
    return pq_sequence(parse_kvec(args.k)), None


def _claims(args):
    return verify_claims(progress=args.progress), None


def _table1(args):
    window = args.window or Window(64, 64)
    if args.row is not None and args.col is not None:
        return [table1_reproduce(args.row, args.col, window, _budget(args), args.family_size)], window
    return table1_all(window, _budget(args), args.family_size, args.with_p), window


HANDLERS = {
    'gen': _gen,
    'color': _color,
    'tower': _tower,
    'ed-seq': _sequence,
    'refute': _refute,
    'criteria': _criteria,
    'pq': _pq,
    'verify-claims': _claims,
    'table1': _table1,
}


def _text(report):
    result = report['result']
    if report['command']['verb'] == 'table1':
        return render_table1(result)
    lines = [f"{report['command']['verb']} on {report['window'] or '-'}"]
    plain = to_jsonable(result)
    if isinstance(plain, dict):
        lines += [f'{key}: {canonical_json(value).strip()}' for key, value in sorted(plain.items())]
    else:
        lines.append(canonical_json(plain).strip())
    return '\n'.join(lines) + '\n'


def emit_report(report, format='json'):
    if format == 'text':
        return _text(report)
    return canonical_json(report)


def run(argv, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    argv = list(argv)

    try:
        args = build_parser().parse_args(argv)
    except UsageError as error:
        print(error, file=err)
        return EXIT_BAD_INPUT
    except SystemExit as done:
        return done.code or EXIT_OK

    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(level=level, stream=err, format='%(levelname)s %(name)s: %(message)s')

    try:
        result, window = HANDLERS[args.verb](args)
    except TowerLabError as error:
        print(f'{type(error).__name__}: {error}', file=err)
        return EXIT_BAD_INPUT

    report = {'command': {'verb': args.verb, 'argv': argv}, 'result': result, 'window': window,
              'versions': {'towerlab': __version__}}
    out.write(emit_report(report, args.format))

    if isinstance(getattr(result, 'outcome', None), ContradictionAtColumn):
        print(canonical_json(result.trace), file=err, end='')
        return EXIT_CONTRADICTION
    return EXIT_OK


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == '__main__':
    main()
