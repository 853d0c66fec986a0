import argparse
import logging
import os
import sys
from typing import Optional, Sequence
from main import COMMANDS
from divpoly.core import LOG_LEVEL_ENV, QUATERNION
from divpoly.errors import DivpolyError

GRAMMAR = """
expressions: + - * ^ and parentheses over rationals p/q, basis names
(1 i j k for the quaternions, e1..em for any algebra) and variables x1..xn.
^ binds tighter than unary minus, which binds tighter than *.
Multiplication is noncommutative; there is no implicit multiplication.
"""


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        '--algebra',
        '-a',
        default=QUATERNION,
        help='Algebra spec JSON file (default: quaternion)'
    )
    common.add_argument('-n', type=int, default=None, help='Variable count (default: inferred)')
    common.add_argument('--json', action='store_true', help='Print JSON instead of text')
    common.add_argument(
        '--verbose',
        '-v',
        action='count',
        default=0,
        help='Log progress (-v info, -vv debug)'
    )

    parser = argparse.ArgumentParser(
        prog='divpoly',
        description='divpoly - Polynomial functions over finite-dimensional division algebras',
        epilog=GRAMMAR,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    subparsers = parser.add_subparsers(dest='command', help='Available commands')

    def add(name: str, help: str) -> argparse.ArgumentParser:
        return subparsers.add_parser(name, help=help, parents=[common], epilog=GRAMMAR,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)

    normalize_parser = add('normalize', 'Print the central polynomial of EXPR')
    normalize_parser.add_argument('expr', help='Expression')
    normalize_parser.add_argument(
        '--free',
        action='store_true',
        help='Print the sum of a_I Y^I form in the free product instead'
    )

    add('identity', 'Decide whether EXPR vanishes everywhere (exit 0 if so)').add_argument('expr')

    eval_parser = add('eval', 'Evaluate EXPR at a point')
    eval_parser.add_argument('expr', help='Expression')
    eval_parser.add_argument('--at', nargs='+', metavar='xI=EXPR', help='Constant value per variable')

    add('conj', 'Conjugate polynomial (quaternions only)').add_argument('expr')
    add('norm', 'Norm polynomial p * conj(p) (quaternions only)').add_argument('expr')

    phi_parser = add('phi', 'Image of EXPR in the central polynomial ring')
    phi_parser.add_argument('expr', help='Expression')
    phi_parser.add_argument('--components', action='store_true', help='Print one scalar polynomial per basis element')

    add('psi', 'Substitute Y_ij for y_ij in a central expression').add_argument('expr', help='Expression in y<i>_<j>')

    add('coord-table', 'Print the coordinate functions Y_1j')

    add('gpi-gens', 'List the generators of the identities (default n: 1)')

    cert_parser = add('gpi-cert', 'Write a generator certificate for an identity')
    cert_parser.add_argument('expr', help='Identity')
    cert_parser.add_argument('--output', '-o', required=True, help='Output certificate file')

    add('gpi-verify', 'Check a generator certificate (exit 0 if valid)').add_argument('file', help='Certificate file')

    ideal_parser = subparsers.add_parser('ideal', help='Ideal files')
    ideal_commands = ideal_parser.add_subparsers(dest='ideal_command', required=True)
    make_parser = ideal_commands.add_parser('make', help='Build an ideal file', parents=[common])
    make_parser.add_argument('--generators', '-g', nargs='*', default=[], help='Generator expressions')
    make_parser.add_argument('--output', '-o', required=True, help='Output ideal file')

    member_parser = add('member', 'Decide ideal membership (exit 0 if member)')
    member_parser.add_argument('expr', help='Expression')
    member_parser.add_argument('--ideal', required=True, help='Ideal file')

    radical_parser = add('radical-verify', 'Check a quaternionic radical certificate (exit 0 if valid)')
    radical_parser.add_argument('--ideal', required=True, help='Ideal file')
    radical_parser.add_argument('--cert', required=True, help='Radical certificate file')

    vanish_parser = add('vanish', 'Decide whether the ideal vanishes at a point (exit 0 if so)')
    vanish_parser.add_argument('--ideal', required=True, help='Ideal file')
    vanish_parser.add_argument('--at', nargs='+', metavar='xI=EXPR', help='Constant value per variable')

    scan_parser = add('scan', 'Filter candidate points through the zero locus')
    scan_parser.add_argument('--ideal', required=True, help='Ideal file')
    scan_parser.add_argument('--points', required=True, help='JSON list of points')

    algebra_parser = subparsers.add_parser('algebra', help='Algebra specs')
    algebra_commands = algebra_parser.add_subparsers(dest='algebra_command', required=True)
    algebra_commands.add_parser('show', help='Print the validated spec as JSON', parents=[common])

    return parser


def configure_logging(verbose: int) -> None:
    level = logging.WARNING if verbose == 0 else logging.INFO if verbose == 1 else logging.DEBUG
    override = os.environ.get(LOG_LEVEL_ENV)
    if override:
        level = logging.getLevelName(override.upper())
        if not isinstance(level, int):
            level = logging.WARNING
    logging.basicConfig(level=level, format='%(levelname)s %(name)s: %(message)s', stream=sys.stderr)
    logging.getLogger('divpoly').setLevel(level)


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Parse argv, run one subcommand and return its exit status: 0 for
    success or a true predicate, 1 for a false predicate or a domain
    error, 2 for usage errors.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    if not args.command:
        parser.print_help()
        return 2

    configure_logging(args.verbose)
    try:
        return COMMANDS[args.command](args)
    except DivpolyError as e:
        print(f'{e.code}: {e}', file=sys.stderr)
        return 1


if __name__ == '__main__':
    sys.exit(run())
