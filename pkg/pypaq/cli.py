"""
Command line interface: ``pypaq {qn,verify,knuth,survey,rs,expand}``.

Exit codes are 0 on success, 1 on a usage error, 2 when the answer is "not
symmetric" or "does not hold", and 3 when a resource limit is hit.
"""
import argparse
import json
import logging
import os
import re
import sys

from .common import (ResourceLimitError, WitnessError, config,
                     set_default_config)
from .permutations import permutation, patternSet, iota, delta
from .tableaux import (tableau, parse_partition, rs, knuth_class,
                       knuth_class_shape)
from .qsym import (qsymM, schurVector, notSymmetric, from_json, f_to_m,
                   m_to_f, schur_expand, schur_combination)
from . import avoidance
from . import closure
from . import verify

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NEGATIVE = 2
EXIT_RESOURCE = 3

VERIFY_PARAMS = ('n', 'k', 'l', 'r', 's', 'a', 'b')


class _parser(argparse.ArgumentParser):
    # usage errors exit with 1, not argparse's 2
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, '%s: error: %s\n' % (self.prog, message))


def _positive_int(value):
    try:
        n = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError('expected integer, got: %r' % value)
    if n <= 0:
        raise argparse.ArgumentTypeError('expected a positive integer, got: %d'
                                         % n)
    return n


def _nonnegative_int(value):
    try:
        n = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError('expected integer, got: %r' % value)
    if n < 0:
        raise argparse.ArgumentTypeError('expected a non-negative integer, '
                                         'got: %d' % n)
    return n


def load_tableau(path):
    """
    Read a tableau from a JSON file ({"rows": ...}) or a text file of rows
    """
    with open(path) as f:
        text = f.read()
    if text.lstrip().startswith('{'):
        return tableau.from_json(text)
    return tableau.parse(text)


_NAMED = re.compile(r'^(iota|delta|pshuffle):(.+)$')
_KNUTH = re.compile(r'^K\((.*)\)$')


def parse_pattern_token(token, cfg=None):
    """
    Parse one pattern token into a patternSet

    Accepted forms are a digit string ('132'), a comma list ('10,2,...'),
    'iota:k', 'delta:k', 'K(3,1,1)', 'K(path/to/tableau)', 'pshuffle:k,1',
    'pshuffle:k,2' and 'pi0'.
    """
    if token == 'pi0':
        return avoidance.pi_zero()
    match = _KNUTH.match(token)
    if match:
        inner = match.group(1)
        if os.path.isfile(inner):
            return patternSet(knuth_class(load_tableau(inner), cfg=cfg))
        return patternSet(knuth_class_shape(parse_partition(inner), cfg=cfg))
    match = _NAMED.match(token)
    if match:
        name, arg = match.groups()
        try:
            values = [int(v) for v in arg.split(',')]
        except ValueError:
            raise ValueError('Cannot parse pattern token %r.' % token)
        if name in ('iota', 'delta') and len(values) == 1 and values[0] >= 1:
            return patternSet([(iota if name == 'iota' else delta)(values[0])])
        if name == 'pshuffle' and len(values) == 2:
            return avoidance.pi_partial(*values)
        raise ValueError('Cannot parse pattern token %r.' % token)
    try:
        return patternSet([permutation.parse(token)])
    except ValueError:
        raise ValueError('Cannot parse pattern token %r.' % token)


def parse_patterns(items, cfg=None):
    """
    Union of the pattern sets named by `items`; each item may hold several
    tokens separated by whitespace or ';'
    """
    Pi = patternSet()
    for item in items or ():
        for token in re.split(r'[\s;]+', item.strip()):
            if token:
                Pi = Pi | parse_pattern_token(token, cfg=cfg)
    return Pi


def _format_set(Pi):
    return '{%s}' % ', '.join(str(p) for p in Pi)


def _emit(cfg, text, data):
    if cfg.output == 'json':
        print(json.dumps(data, sort_keys=True))
    else:
        print(text)


def convert(q, basis):
    """
    Convert a qsymF, qsymM or schurVector to `basis` ('F', 'M' or 's')

    Returns notSymmetric when the Schur basis is requested for a function
    that is not symmetric.
    """
    if isinstance(q, schurVector):
        if basis == 's':
            return q
        q = schur_combination(q)
    elif isinstance(q, qsymM):
        if basis == 'M':
            return q
        q = m_to_f(q)
    if basis == 'F':
        return q
    if basis == 'M':
        return f_to_m(q)
    if basis == 's':
        return schur_expand(q)
    raise ValueError('Basis %r not understood.' % basis)


def _show_function(cfg, value, extra):
    data = dict(extra)
    data['result'] = value.to_json()
    _emit(cfg, str(value), data)
    return EXIT_NEGATIVE if isinstance(value, notSymmetric) else EXIT_OK


def cmd_qn(args, cfg):
    Pi = parse_patterns(args.patterns, cfg=cfg)
    q = avoidance.qn(Pi, args.n, cfg=cfg, progress_bar=args.progress)
    return _show_function(cfg, convert(q, args.basis),
                          {'patterns': [str(p) for p in Pi], 'n': args.n})


def cmd_expand(args, cfg):
    if args.file == '-':
        text = sys.stdin.read()
    else:
        with open(args.file) as f:
            text = f.read()
    q = from_json(text)
    return _show_function(cfg, convert(q, args.basis), {'input': q.basis})


def cmd_verify(args, cfg):
    if args.list or args.claim is None:
        lines = ['%-22s %s' % (cid, verify.CLAIMS[cid].summary)
                 for cid in sorted(verify.CLAIMS)]
        _emit(cfg, '\n'.join(lines),
              {cid: {'summary': verify.CLAIMS[cid].summary,
                     'defaults': verify.CLAIMS[cid].defaults}
               for cid in sorted(verify.CLAIMS)})
        return EXIT_OK
    params = {p: getattr(args, p) for p in VERIFY_PARAMS
              if getattr(args, p) is not None}
    report = verify.run_claim(args.claim, cfg=cfg, **params)
    _emit(cfg, str(report), report.to_json())
    return EXIT_OK if report.holds else EXIT_NEGATIVE


def cmd_knuth(args, cfg):
    if args.tableau is not None:
        K = knuth_class(load_tableau(args.tableau), cfg=cfg)
    else:
        K = knuth_class_shape(parse_partition(args.shape), cfg=cfg)
    members = sorted(K)
    if args.list:
        _emit(cfg, '\n'.join(str(p) for p in members),
              {'count': len(members), 'permutations': [str(p) for p in members]})
    else:
        _emit(cfg, str(len(members)), {'count': len(members)})
    return EXIT_OK


def cmd_survey(args, cfg):
    if args.budget is not None:
        cfg.survey_budget = args.budget
    survivors = []
    candidates = 0
    for Pi, symmetric in closure.survey_symmetric_sets(
            args.k, args.p, args.n_max, canonical=not args.no_canonical,
            cfg=cfg, progress_bar=args.progress):
        candidates += 1
        if symmetric:
            survivors.append(Pi)
            if cfg.output == 'text':
                print(_format_set(Pi))
    summary = ('%d of %d candidate sets have Q_n symmetric for n <= %d.' %
               (len(survivors), candidates, args.n_max))
    if cfg.output == 'json':
        _emit(cfg, summary, {'k': args.k, 'p': args.p, 'n_max': args.n_max,
                             'candidates': candidates,
                             'survivors': [[str(p) for p in Pi]
                                           for Pi in survivors]})
    else:
        print(summary)
    return EXIT_OK


def cmd_rs(args, cfg):
    sigma = permutation.parse(args.permutation)
    P, Q = rs(sigma)
    _emit(cfg, 'P:\n%s\nQ:\n%s' % (P, Q),
          {'permutation': str(sigma), 'P': P.to_json(), 'Q': Q.to_json()})
    return EXIT_OK


def build_parser():
    p = _parser(prog='pypaq',
                description='Pattern avoidance and quasisymmetric functions.')
    p.add_argument('-v', '--verbose', action='count', default=0,
                   help='-v for INFO, -vv for DEBUG logging')
    p.add_argument('--output', choices=('text', 'json'), default='text')
    p.add_argument('--threads', type=_positive_int, default=None,
                   help='threads for the parallel kernels')
    p.add_argument('--bound', type=_positive_int, default=None,
                   help='largest n that may be enumerated')
    sub = p.add_subparsers(dest='command', metavar='command')
    sub.required = True

    qn = sub.add_parser('qn', help='compute Q_n(Pi)')
    qn.add_argument('--patterns', nargs='*', default=[],
                    help='pattern tokens, e.g. 132 iota:3 K(3,1,1) pi0')
    qn.add_argument('--n', type=_nonnegative_int, required=True)
    qn.add_argument('--basis', choices=('F', 'M', 's'), default='F')
    qn.add_argument('--progress', action='store_true')
    qn.set_defaults(func=cmd_qn)

    ver = sub.add_parser('verify', help='check a claim on a bounded range')
    ver.add_argument('claim', nargs='?', default=None)
    ver.add_argument('--list', action='store_true', help='list claim ids')
    for name in VERIFY_PARAMS:
        ver.add_argument('--' + name, type=_nonnegative_int, default=None)
    ver.set_defaults(func=cmd_verify)

    kn = sub.add_parser('knuth', help='list or count a Knuth class')
    source = kn.add_mutually_exclusive_group(required=True)
    source.add_argument('--tableau', help='file holding a tableau')
    source.add_argument('--shape', help='partition such as 3,1,1')
    action = kn.add_mutually_exclusive_group()
    action.add_argument('--list', action='store_true')
    action.add_argument('--count', action='store_true')
    kn.set_defaults(func=cmd_knuth)

    sv = sub.add_parser('survey', help='search for symmetric pattern sets')
    sv.add_argument('--k', type=_positive_int, required=True)
    sv.add_argument('--p', type=_positive_int, required=True)
    sv.add_argument('--n-max', type=_nonnegative_int, required=True)
    sv.add_argument('--budget', type=_positive_int, default=None)
    sv.add_argument('--no-canonical', action='store_true',
                    help='test every set instead of one per symmetry orbit')
    sv.add_argument('--progress', action='store_true')
    sv.set_defaults(func=cmd_survey)

    r = sub.add_parser('rs', help='print the Robinson-Schensted tableaux')
    r.add_argument('permutation')
    r.set_defaults(func=cmd_rs)

    ex = sub.add_parser('expand', help='convert a serialized function')
    ex.add_argument('file', help="JSON file, or '-' for standard input")
    ex.add_argument('--basis', choices=('F', 'M', 's'), default='s')
    ex.set_defaults(func=cmd_expand)
    return p


def run(args):
    """
    Execute parsed arguments and return the exit code
    """
    level = [logging.WARNING, logging.INFO, logging.DEBUG][min(args.verbose, 2)]
    logging.basicConfig(level=level,
                        format='%(levelname)s %(name)s: %(message)s')
    try:
        cfg = config.from_environment(threads=args.threads, output=args.output)
        if args.bound is not None:
            cfg.enumeration_bound = args.bound
        set_default_config(cfg)
        return args.func(args, cfg)
    except ResourceLimitError as err:
        print('resource limit: %s' % err, file=sys.stderr)
        return EXIT_RESOURCE
    except WitnessError as err:
        print('error: %s (witness: %s)' % (err, err.witness), file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, TypeError, KeyError, OSError) as err:
        print('error: %s' % (err.args[0] if err.args else err), file=sys.stderr)
        return EXIT_USAGE


def main(argv=None):
    args = build_parser().parse_args(argv)
    return run(args)


if __name__ == '__main__':
    sys.exit(main())
