"""
INTENDED FOR KRONECKER REPRESENTATION USE
Command line surface. Representations travel between commands as JSON on
stdin/stdout, so that e.g.

    pykronecker make X --q 2 | pykronecker sigma | pykronecker decompose

prints the single (4,2) summand of the shift of X. Reports are JSON (and CSV
for the census), coefficient quivers optionally DOT. Errors go to stderr as
{"error": {...}} with a distinct exit code per error class.

copyright October 2026
"""

# pylint: disable=C0103
import argparse
import json
import logging
import sys

from pyKronecker import exactalg as ea
from pyKronecker import k0
from pyKronecker.bgp import is_regular_rep, sigma_inv_power, sigma_power, \
     tau, tau_inv
from pyKronecker.census import run_census, verify_theorem
from pyKronecker.coeffquiver import coefficient_quiver, cycle_report, \
     is_tree, is_type_a, to_dot, tree_module_search
from pyKronecker.config import get_config, load_config, set_config
from pyKronecker.errors import EXIT_FAIL, EXIT_OK, EXIT_REFUSAL, EXIT_USAGE, \
     DomainError, FormatError, KroneckerError
from pyKronecker.rep import KronRep, decompose, dual, end_dim, hom_space, \
     restrict_k2
from pyKronecker.structure import STRATEGIES, elementary_filtration, \
     find_u12, is_elementary, k2_restriction_profile, \
     nonelem_normal_form, nonelementarity_witness, verify_prop5, \
     x_normal_form
from pyKronecker.zoo import make, zoo_names

logger = logging.getLogger(__name__)


class UsageError(KroneckerError):
    exit_code = EXIT_USAGE


class _Parser(argparse.ArgumentParser):
    """ argparse raising instead of exiting, so main() owns the exit
    code. """

    def error(self, message):
        raise UsageError(message)


def _emit(data):
    sys.stdout.write(json.dumps(data, sort_keys=True))
    sys.stdout.write('\n')


def _read_text(path):
    if path in (None, '-'):
        return sys.stdin.read()
    try:
        with open(path) as handle:
            return handle.read()
    except OSError as err:
        raise FormatError('cannot read %s: %s' % (path, err))


def _read_rep(path):
    return KronRep.from_json(_read_text(path))


def _ints(text, count=None):
    try:
        values = [int(v) for v in text.split(',')]
    except ValueError:
        raise UsageError('expected comma separated integers, got %r' % text)
    if count is not None and len(values) != count:
        raise UsageError('expected %d integers, got %r' % (count, text))
    return values


def _field(args):
    q = args.q if getattr(args, 'q', None) is not None \
        else get_config().default_q
    return ea.field_from_q(q)


# ---------------------------------
# Commands
# ---------------------------------

def cmd_make(args):
    if args.list:
        _emit(zoo_names())
        return EXIT_OK
    if not args.name:
        raise UsageError('make needs a zoo name (see make --list)')
    _emit(make(args.name, _field(args)).to_dict())
    return EXIT_OK


def cmd_sigma(args):
    M = _read_rep(args.input)
    M = sigma_inv_power(M, args.power) if args.inverse \
        else sigma_power(M, args.power)
    _emit(M.to_dict())
    return EXIT_OK


def cmd_tau(args):
    M = _read_rep(args.input)
    _emit((tau_inv(M) if args.inverse else tau(M)).to_dict())
    return EXIT_OK


def cmd_dual(args):
    _emit(dual(_read_rep(args.input)).to_dict())
    return EXIT_OK


def cmd_hom(args):
    M = _read_rep(args.source)
    N = _read_rep(args.target)
    hom = hom_space(M, N)
    _emit({'dim': hom.dim,
           'basis': [[ea.to_ints(f1).tolist(), ea.to_ints(f2).tolist()]
                     for f1, f2 in hom]})
    return EXIT_OK


def cmd_decompose(args):
    parts = decompose(_read_rep(args.input), get_config())
    _emit({'count': len(parts),
           'dims': [list(p.dims) for p in parts],
           'summands': [p.to_dict() for p in parts]})
    return EXIT_OK


def cmd_check_elementary(args):
    M = _read_rep(args.input)
    config = get_config()
    # is_elementary only accepts nonzero regular modules
    if M.is_zero():
        _emit({'elementary': False, 'reason': 'zero module'})
        return EXIT_OK
    if not is_regular_rep(M):
        _emit({'elementary': False, 'reason': 'not regular'})
        return EXIT_OK
    out = {'elementary': is_elementary(M, config)}
    if args.witness and not out['elementary']:
        found = nonelementarity_witness(M, config)
        out['witness'] = None if found is None else \
            {'sub': list(found[0].dims), 'factor': found[1].to_dict()}
    _emit(out)
    return EXIT_OK


def cmd_filtration(args):
    M = _read_rep(args.input)
    chain = elementary_filtration(M, args.strategy, get_config())
    out = chain.to_dict()
    out['factor_dims'] = [list(d) for d in chain.factor_dims()]
    _emit(out)
    return EXIT_OK


def cmd_find_u12(args):
    U = find_u12(_read_rep(args.input), get_config())
    _emit(None if U is None else {'u1': ea.to_ints(U.u1).tolist(),
                                  'u2': ea.to_ints(U.u2).tolist()})
    return EXIT_OK


def cmd_normal_form(args):
    M = _read_rep(args.input)
    config = get_config()
    if is_elementary(M, config):
        witness = x_normal_form(M, config)
        variant = 'X'
    else:
        variant, witness = nonelem_normal_form(M, config)
    _emit({'variant': variant,
           'witness': None if witness is None else witness.to_dict()})
    return EXIT_OK


def cmd_coeffquiver(args):
    M = _read_rep(args.input)
    cq = coefficient_quiver(M)
    if args.dot:
        sys.stdout.write(to_dot(cq))
        return EXIT_OK
    out = {'n_top': cq.n_top, 'n_bottom': cq.n_bottom,
           'edges': [list(e) for e in cq.edges],
           'tree': is_tree(cq), 'type_a': is_type_a(cq)}
    if args.cycles:
        out['cycles'] = cycle_report(cq)
    _emit(out)
    return EXIT_OK


def cmd_tree_search(args):
    witness = tree_module_search(_read_rep(args.input), get_config())
    _emit({'tree_module': witness is not None,
           'witness': None if witness is None else witness.to_dict()})
    return EXIT_OK


def cmd_dimvec(args):
    v = (args.x, args.y)
    n = args.arrows
    verb = args.verb
    if verb == 'q':
        out = k0.tits_q(v, n)
    elif verb == 'sigma':
        out = list(k0.sigma_dim(v, n))
    elif verb == 'sigma-inv':
        out = list(k0.sigma_inv_dim(v, n))
    elif verb == 'delta':
        out = list(k0.delta(v))
    elif verb == 'reduce':
        reduced, word = k0.reduce_to_F(v, get_config())
        out = {'reduced': list(reduced), 'word': word}
    elif verb == 'type':
        kind = k0.sigma_type(v, get_config())
        out = None if kind is None else kind.value
    elif verb == 'exists-elementary':
        out = k0.exists_elementary_dim(v, n)
    else:
        out = k0.is_regular_dim(v, n)
    _emit(out)
    return EXIT_OK


def cmd_restrict_k2(args):
    M = _read_rep(args.input)
    if args.profile:
        _emit([{'b1': list(b[0]), 'b2': list(b[1]), 'end_dim': dim}
               for b, dim in k2_restriction_profile(M, get_config())])
        return EXIT_OK
    if args.b1 is None or args.b2 is None:
        raise UsageError('restrict-k2 needs --b1 and --b2, or --profile')
    R = restrict_k2(M, _ints(args.b1, 3), _ints(args.b2, 3))
    out = R.to_dict()
    out['end_dim'] = end_dim(R)
    _emit(out)
    return EXIT_OK


def cmd_verify_prop5(args):
    config = get_config()
    field = _field(args)
    reports = [verify_prop5(t, field, config) for t in args.t]
    _emit([r.to_dict() for r in reports])
    statuses = set(r.status for r in reports)
    if 'fail' in statuses:
        return EXIT_FAIL
    if 'inconclusive' in statuses:
        return EXIT_REFUSAL
    return EXIT_OK


def cmd_census(args):
    config = get_config()
    dims = _ints(args.dim, 2)
    checks = None if args.checks is None else \
        [c for c in args.checks.split(',') if c]
    report = run_census(dims, _field(args), args.mode, checks, config,
                        jobs=args.jobs, partitions=args.partitions)
    if args.out:
        report.write_json(args.out)
    if args.csv:
        report.write_csv(args.csv)
    if not args.out:
        _emit(report.to_dict())
    return report.exit_code


def cmd_verify_theorem(args):
    config = get_config()
    full = ((4, 2), ) if args.full_42 else ()
    result = verify_theorem(_field(args), config, jobs=args.jobs,
                            full_dims=full)
    if args.out:
        with open(args.out, 'w') as handle:
            handle.write(result.to_json())
            handle.write('\n')
    else:
        _emit(result.to_dict())
    return result.exit_code


# ---------------------------------
# Parser
# ---------------------------------

DIMVEC_VERBS = ('q', 'sigma', 'sigma-inv', 'delta', 'reduce', 'type',
                'exists-elementary', 'regular')


def _add_input(sub):
    sub.add_argument('input', nargs='?', default='-',
                     help='representation JSON file, default stdin')


def build_parser():
    parser = _Parser(prog='pykronecker',
                     description='Representations of the Kronecker quivers '
                                 'K(2), K(3) over small finite fields.')
    parser.add_argument('--config', default=None,
                        help='INI file, default $PYKRONECKER_CONFIG')
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='raise iprint (repeat for debug output)')
    subs = parser.add_subparsers(dest='command', parser_class=_Parser)

    sub = subs.add_parser('make', help='build a named module of the zoo '
                          '(X, Y, bristles B:i, V:i,j, sigma^i S(1) as I:i)')
    sub.add_argument('name', nargs='?')
    sub.add_argument('--q', type=int, default=None)
    sub.add_argument('--list', action='store_true', help='list zoo names')
    sub.set_defaults(func=cmd_make)

    sub = subs.add_parser('sigma', help='BGP shift sigma (kernel '
                          'construction), or sigma_inv with --inverse')
    _add_input(sub)
    sub.add_argument('--power', type=int, default=1)
    sub.add_argument('--inverse', action='store_true')
    sub.set_defaults(func=cmd_sigma)

    sub = subs.add_parser('tau', help='Auslander-Reiten translate '
                          'tau = sigma^2, or tau^-1 with --inverse')
    _add_input(sub)
    sub.add_argument('--inverse', action='store_true')
    sub.set_defaults(func=cmd_tau)

    sub = subs.add_parser('dual', help='transpose the arrow matrices')
    _add_input(sub)
    sub.set_defaults(func=cmd_dual)

    sub = subs.add_parser('hom', help='basis of Hom(source, target)')
    sub.add_argument('source')
    sub.add_argument('target')
    sub.set_defaults(func=cmd_hom)

    sub = subs.add_parser('decompose', help='indecomposable summands')
    _add_input(sub)
    sub.set_defaults(func=cmd_decompose)

    sub = subs.add_parser('check-elementary', help='elementarity by the '
                          'submodule criterion: every submodule '
                          'preprojective or with preinjective factor; '
                          'zero and non-regular input report false')
    _add_input(sub)
    sub.add_argument('--witness', action='store_true',
                     help='print a regular submodule with regular factor')
    sub.set_defaults(func=cmd_check_elementary)

    sub = subs.add_parser('filtration', help='filtration of a regular '
                          'module with elementary factors; min_sub and '
                          'max_sub give the two filtrations of the worked '
                          'examples M and N (make M, make N)')
    _add_input(sub)
    sub.add_argument('--strategy', choices=STRATEGIES, default='min_sub')
    sub.set_defaults(func=cmd_filtration)

    sub = subs.add_parser('find-u12', help='submodule of dimension (1,2) '
                          'for 2 <= y <= x+1, the step that excludes '
                          '(3,2), (3,3) and (4,3) from the classification')
    _add_input(sub)
    sub.set_defaults(func=cmd_find_u12)

    sub = subs.add_parser('normal-form', help='bases bringing a (2,2) '
                          'indecomposable onto the X picture (elementary) '
                          'or one of the two tree pictures (not elementary)')
    _add_input(sub)
    sub.set_defaults(func=cmd_normal_form)

    sub = subs.add_parser('coeffquiver', help='coefficient quiver in the '
                          'standard bases')
    _add_input(sub)
    sub.add_argument('--dot', action='store_true')
    sub.add_argument('--cycles', action='store_true')
    sub.set_defaults(func=cmd_coeffquiver)

    sub = subs.add_parser('tree-search', help='exhaustive search for bases '
                          'with a tree coefficient quiver: a (2,2) '
                          'indecomposable is elementary or a tree module')
    _add_input(sub)
    sub.set_defaults(func=cmd_tree_search)

    sub = subs.add_parser('dimvec', help='K_0 arithmetic: Tits form, '
                          'shift, duality, reduction to the fundamental '
                          'domain, elementary orbits')
    sub.add_argument('verb', choices=DIMVEC_VERBS)
    sub.add_argument('x', type=int)
    sub.add_argument('y', type=int)
    sub.add_argument('--arrows', type=int, default=3, choices=(2, 3))
    sub.set_defaults(func=cmd_dimvec)

    sub = subs.add_parser('restrict-k2', help='restriction to the K(2) '
                          'spanned by two arrow-space vectors; K(2) '
                          'regular modules R(t) have type A coefficient '
                          'quivers')
    _add_input(sub)
    sub.add_argument('--b1', default=None)
    sub.add_argument('--b2', default=None)
    sub.add_argument('--profile', action='store_true',
                     help='End dimension of every K(2) restriction')
    sub.set_defaults(func=cmd_restrict_k2)

    sub = subs.add_parser('verify-prop5', aliases=['shift-sequence'],
                          help='exact sequence 0 -> X -> sigma^t X -> '
                          'sum (sigma^i S(1))^2 -> 0 from the shifts of X; '
                          'exit 5 when the isomorphism scan is refused')
    sub.add_argument('--t', type=int, nargs='+', default=[1, 2, 3])
    sub.add_argument('--q', type=int, default=None)
    sub.set_defaults(func=cmd_verify_prop5)

    sub = subs.add_parser('census', help='check every triple (or a sample) '
                          'of a dimension vector against the classification '
                          'of elementary modules: tau-orbits of (1,1), '
                          '(2,1), (2,2) and (4,2)')
    sub.add_argument('--dim', required=True)
    sub.add_argument('--q', type=int, default=None)
    sub.add_argument('--mode', default='full',
                     help='full, sample, sample:N or sample:N:SEED')
    sub.add_argument('--checks', default=None,
                     help='comma separated subset of elementary, '
                          'normal_form, tree, u12, cycle')
    sub.add_argument('--jobs', type=int, default=None)
    sub.add_argument('--partitions', type=int, default=None)
    sub.add_argument('--out', default=None)
    sub.add_argument('--csv', default=None)
    sub.set_defaults(func=cmd_census)

    sub = subs.add_parser('verify-theorem', help='classification of '
                          'elementary modules: censuses of (1,1), (2,1), '
                          '(2,2), (3,2), (3,3), (4,2) and the cross-check of '
                          'q(x,y) in {-1,-4}, over F_2 or F_3')
    sub.add_argument('--q', type=int, default=None)
    sub.add_argument('--jobs', type=int, default=None)
    sub.add_argument('--full-42', action='store_true',
                     help='full census at (4,2) instead of the sample')
    sub.add_argument('--out', default=None)
    sub.set_defaults(func=cmd_verify_theorem)
    return parser


def _fail(err):
    sys.stderr.write(json.dumps({'error': err.to_dict()}, sort_keys=True))
    sys.stderr.write('\n')
    return err.exit_code


def main(argv=None):
    """ Run one command; returns the exit code. """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError('a command is required')
        config = load_config(args.config)
        if args.verbose:
            config = config.replace(iprint=config.iprint + args.verbose)
        set_config(config)
        return args.func(args)
    except KroneckerError as err:
        return _fail(err)
    except ValueError as err:
        return _fail(DomainError(str(err)))


if __name__ == '__main__':
    sys.exit(main())
