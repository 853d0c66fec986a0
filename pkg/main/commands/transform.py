from divpoly.expression import parse_central, render
from divpoly.freepoly import fp_conj, fp_norm
from divpoly.serialization import centralpoly_to_json, encode_rational, freepoly_to_json, scalarpoly_to_json
from divpoly.centralpoly import components
from divpoly.transport import normal_form, phi, psi
from .common import algebra_of, emit, parse_all, parse_point


def cmd_normalize(args) -> int:
    p, = parse_all(args, [args.expr])
    if args.free:
        q = normal_form(p)
        emit(args, render(q), freepoly_to_json(q))
    else:
        image = phi(p)
        emit(args, render(image), centralpoly_to_json(image))
    return 0


def cmd_phi(args) -> int:
    p, = parse_all(args, [args.expr])
    image = phi(p)
    if args.components:
        parts = components(image)
        labels = [image.spec.symbol(t) for t in range(image.spec.m)]
        emit(
            args,
            '\n'.join(f'{label}: {part}' for label, part in zip(labels, parts)),
            [scalarpoly_to_json(part) for part in parts],
        )
    else:
        emit(args, render(image), centralpoly_to_json(image))
    return 0


def cmd_psi(args) -> int:
    spec = algebra_of(args)
    q = parse_central(args.expr, spec, args.n)
    p = psi(q)
    emit(args, render(p), freepoly_to_json(p))
    return 0


def cmd_conj(args) -> int:
    p, = parse_all(args, [args.expr])
    result = fp_conj(p)
    emit(args, render(result), freepoly_to_json(result))
    return 0


def cmd_norm(args) -> int:
    p, = parse_all(args, [args.expr])
    result = fp_norm(p)
    emit(args, render(result), freepoly_to_json(result))
    return 0


def cmd_eval(args) -> int:
    p, = parse_all(args, [args.expr])
    value = p.evaluate(parse_point(args.at or [], p.spec, p.n))
    emit(args, str(value), [encode_rational(c) for c in value.coords])
    return 0


__all__ = ['cmd_normalize', 'cmd_phi', 'cmd_psi', 'cmd_conj', 'cmd_norm', 'cmd_eval']
