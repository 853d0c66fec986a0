import logging
from divpoly.algebra import coordinate_functionals
from divpoly.errors import VariableOutOfRange
from divpoly.expression import render
from divpoly.serialization import (
    certificate_from_json,
    certificate_to_json,
    encode_rational,
    freepoly_to_json,
    load_artifact,
    save_artifact,
)
from divpoly.transport import gpi_certificate, gpi_generators, is_identity, make_Y, verify_certificate
from .common import algebra_of, emit, parse_all, verdict

logger = logging.getLogger(__name__)


def cmd_identity(args) -> int:
    p, = parse_all(args, [args.expr])
    return verdict(args, is_identity(p))


def cmd_coord_table(args) -> int:
    spec = algebra_of(args)
    table = coordinate_functionals(spec)
    lines = [f'Y1_{j + 1} = {render(make_Y(spec, table, 1, j + 1))}' for j in range(spec.m)]
    payload = [
        [[encode_rational(table[j, s, t]) for t in range(spec.m)] for s in range(spec.m)]
        for j in range(spec.m)
    ]
    logger.debug('Coordinate table with %d nonzero entries', sum(len(list(table.terms(j))) for j in range(spec.m)))
    emit(args, '\n'.join(lines), payload)
    return 0


def cmd_gpi_gens(args) -> int:
    spec = algebra_of(args)
    n = 1 if args.n is None else args.n
    if n < 1:
        raise VariableOutOfRange(f'Generator sets need n >= 1, got {n}')
    gens = gpi_generators(spec, n)
    emit(
        args,
        '\n'.join(render(g) for g in gens),
        [{'family': info.family, 'label': info.label, 'poly': freepoly_to_json(info.poly)} for info in gens.generators],
    )
    return 0


def cmd_gpi_cert(args) -> int:
    p, = parse_all(args, [args.expr])
    certificate = gpi_certificate(p)
    save_artifact(args.output, 'gpi-certificate', certificate_to_json(certificate))
    emit(args, f'{len(certificate)} steps written to {args.output}', {'steps': len(certificate), 'output': args.output})
    return 0


def cmd_gpi_verify(args) -> int:
    certificate = certificate_from_json(load_artifact(args.file, 'gpi-certificate'))
    return verdict(args, verify_certificate(certificate))


__all__ = ['cmd_identity', 'cmd_coord_table', 'cmd_gpi_gens', 'cmd_gpi_cert', 'cmd_gpi_verify']
