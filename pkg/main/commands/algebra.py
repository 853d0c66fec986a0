import json
from divpoly.serialization import dump_algebra
from .common import algebra_of


def cmd_algebra_show(args) -> int:
    print(json.dumps(dump_algebra(algebra_of(args)), indent=None if args.json else 2, sort_keys=True))
    return 0


def cmd_algebra(args) -> int:
    return ALGEBRA_COMMANDS[args.algebra_command](args)


ALGEBRA_COMMANDS = {
    'show': cmd_algebra_show,
}

__all__ = ['cmd_algebra', 'cmd_algebra_show']
