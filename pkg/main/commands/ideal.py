from divpoly.nullstellensatz import (
    make_ideal,
    member,
    scan_zero_locus,
    vanishes,
    verify_radical_certificate,
)
from divpoly.serialization import (
    load_artifact,
    load_ideal,
    point_to_json,
    points_from_json,
    radical_from_json,
    save_ideal,
)
from divpoly.utils import GenericFile
from .common import algebra_of, emit, parse_all, parse_point, variable_count, verdict


def cmd_ideal_make(args) -> int:
    spec = algebra_of(args)
    n = max(variable_count(args, *args.generators), 1) if args.n is None else args.n
    gens = parse_all(args, args.generators, spec, n)
    ideal = make_ideal(gens, spec, n)
    save_ideal(args.output, ideal)
    emit(
        args,
        '\n'.join(str(g) for g in ideal.gb) or '0',
        {'groebner': [str(g) for g in ideal.gb], 'output': args.output},
    )
    return 0


def cmd_ideal(args) -> int:
    return IDEAL_COMMANDS[args.ideal_command](args)


def cmd_member(args) -> int:
    ideal = load_ideal(args.ideal)
    f, = parse_all(args, [args.expr], ideal.spec, ideal.n)
    return verdict(args, member(f, ideal))


def cmd_radical_verify(args) -> int:
    ideal = load_ideal(args.ideal)
    certificate = radical_from_json(load_artifact(args.cert, 'radical-certificate', allow_bare=True))
    return verdict(args, verify_radical_certificate(certificate, ideal))


def cmd_vanish(args) -> int:
    ideal = load_ideal(args.ideal)
    point = parse_point(args.at or [], ideal.spec, ideal.n)
    return verdict(args, vanishes(ideal, point))


def cmd_scan(args) -> int:
    ideal = load_ideal(args.ideal)
    candidates = points_from_json(GenericFile(args.points).read_json(), ideal.spec, ideal.n)
    found = scan_zero_locus(ideal, candidates)
    emit(
        args,
        '\n'.join(', '.join(str(value) for value in a) for a in found),
        [point_to_json(a) for a in found],
    )
    return 0


IDEAL_COMMANDS = {
    'make': cmd_ideal_make,
}

__all__ = ['cmd_ideal', 'cmd_ideal_make', 'cmd_member', 'cmd_radical_verify', 'cmd_vanish', 'cmd_scan']
