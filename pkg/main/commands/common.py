import json
from typing import Any, List, Optional, Sequence
from divpoly.algebra import AlgebraSpec, Element
from divpoly.errors import ExpressionSyntaxError, LengthMismatch, VariableOutOfRange
from divpoly.expression import infer_variable_count, parse
from divpoly.freepoly import FreePoly, Point
from divpoly.serialization import load_algebra


def algebra_of(args) -> AlgebraSpec:
    return load_algebra(getattr(args, 'algebra', None))


def variable_count(args, *texts: str) -> int:
    """The -n flag, or the largest x index in the expressions."""
    if getattr(args, 'n', None) is not None:
        return args.n
    return infer_variable_count(*texts)


def parse_all(args, texts: Sequence[str], spec: Optional[AlgebraSpec] = None, n: Optional[int] = None) -> List[FreePoly]:
    spec = algebra_of(args) if spec is None else spec
    n = variable_count(args, *texts) if n is None else n
    return [parse(text, spec, n) for text in texts]


def parse_point(assignments: Sequence[str], spec: AlgebraSpec, n: int) -> Point:
    """
    Build a point from 'x1=EXPR' assignments; each EXPR must be constant.

    Raises:
        ExpressionSyntaxError: For an assignment without '='.
        VariableOutOfRange: For names other than x1..xn.
        LengthMismatch: When a variable is left unassigned.
    """
    values: List[Optional[Element]] = [None] * n
    for assignment in assignments:
        name, sep, text = assignment.partition('=')
        if not sep:
            raise ExpressionSyntaxError(f'Expected x<i>=EXPR, got {assignment!r}', len(assignment), ("'='",))
        name = name.strip()
        if not (name.startswith('x') and name[1:].isdigit() and 1 <= int(name[1:]) <= n):
            raise VariableOutOfRange(f'{name} is not one of x1..x{n}')
        values[int(name[1:]) - 1] = parse(text, spec, 0).constant_value()
    missing = [f'x{i + 1}' for i, value in enumerate(values) if value is None]
    if missing:
        raise LengthMismatch(f"No value given for {', '.join(missing)}")
    return Point(values, spec)


def emit(args, text: str, payload: Any = None) -> None:
    """Print text, or the JSON payload under --json."""
    if getattr(args, 'json', False):
        print(json.dumps(payload if payload is not None else text, sort_keys=True))
    else:
        print(text)


def verdict(args, value: bool, payload: Any = None) -> int:
    emit(args, 'true' if value else 'false', payload if payload is not None else {'result': value})
    return 0 if value else 1


__all__ = ['algebra_of', 'variable_count', 'parse_all', 'parse_point', 'emit', 'verdict']
