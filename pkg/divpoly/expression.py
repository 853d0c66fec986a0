"""
Text syntax for polynomials.

    expr  := term (('+' | '-') term)*
    term  := unary ('*' unary)*
    unary := '-' unary | power
    power := atom ('^' uint)?
    atom  := rational | basis | variable | '(' expr ')'

`^` binds tighter than unary minus, which binds tighter than `*`, so
-x1^2 is -(x1^2). Multiplication is noncommutative and left associative
and there is no implicit multiplication. Basis names are the algebra's
labels (1, i, j, k for the quaternions) or e1..em; variables are x1..xn,
and central variables y<i>_<j> are accepted where a CentralPoly is parsed.
"""
import re
from fractions import Fraction
from typing import Callable, Dict, Iterator, List, NamedTuple, Optional, Union
from .algebra import AlgebraSpec
from .centralpoly import CentralPoly, format_centralpoly
from .errors import ExpressionSyntaxError, UnknownSymbol, VariableOutOfRange
from .freepoly import FreePoly, format_freepoly

TOKENS = {
    'rational': r'\d+(?:/\d+)?',
    'name': r'[A-Za-z_][A-Za-z0-9_]*',
    'plus': r'\+',
    'minus': r'-',
    'mul': r'\*',
    'pow': r'\^',
    'lpar': r'\(',
    'rpar': r'\)',
    'skip': r'\s+',
    'mismatch': r'.',
}

TOKEN_REGEX = re.compile('|'.join(f'(?P<{name}>{pattern})' for name, pattern in TOKENS.items()))
VARIABLE = re.compile(r'x(\d+)')
CENTRAL_VARIABLE = re.compile(r'y(\d+)_(\d+)')
ALIAS = re.compile(r'e(\d+)')


class Token(NamedTuple):
    type: str
    value: str
    where: int


def tokenize(text: str) -> Iterator[Token]:
    for match in TOKEN_REGEX.finditer(text):
        kind = match.lastgroup
        if kind == 'skip':
            continue
        if kind == 'mismatch':
            raise ExpressionSyntaxError(f'Unexpected character {match.group()!r}', match.start())
        yield Token(kind, match.group(), match.start())
    yield Token('end', '', len(text))


def basis_names(spec: AlgebraSpec) -> Dict[str, int]:
    names = {f'e{s + 1}': s for s in range(spec.m)}
    for s in range(spec.m):
        names[spec.symbol(s)] = s
        label = spec.labels[s]
        if label.isidentifier() and not VARIABLE.fullmatch(label) and not CENTRAL_VARIABLE.fullmatch(label):
            names[label] = s
    return names


def infer_variable_count(*texts: str) -> int:
    """Largest x index mentioned in the texts (0 when none)."""
    count = 0
    for text in texts:
        for token in tokenize(text):
            if token.type == 'name':
                match = VARIABLE.fullmatch(token.value)
                if match:
                    count = max(count, int(match.group(1)))
    return count


Value = Union[FreePoly, CentralPoly]


class Parser:
    """
    Recursive descent parser lowering text directly into polynomials.

    Args:
        spec (AlgebraSpec): Algebra whose basis names are recognised.
        n (int): Number of variables.
        central (bool): Parse a CentralPoly (y variables) instead of a
            FreePoly (x variables).
    """

    def __init__(self, spec: AlgebraSpec, n: int, central: bool = False):
        self.spec = spec
        self.n = n
        self.central = central
        self.names = basis_names(spec)
        self.tokens: List[Token] = []
        self.index = 0
        kind = CentralPoly if central else FreePoly
        self.constant: Callable[[object], Value] = lambda value: kind.constant(spec, n, value)

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def expect(self, kind: str, *expected: str) -> Token:
        token = self.current
        if token.type != kind:
            found = 'end of input' if token.type == 'end' else repr(token.value)
            raise ExpressionSyntaxError(f'Unexpected {found}', token.where, expected or (kind,))
        return self.advance()

    def parse(self, text: str) -> Value:
        self.tokens = list(tokenize(text))
        self.index = 0
        value = self.expr()
        self.expect('end', "'+'", "'-'", "'*'", "'^'", 'end of input')
        return value

    def expr(self) -> Value:
        value = self.term()
        while self.current.type in ('plus', 'minus'):
            op = self.advance()
            right = self.term()
            value = value + right if op.type == 'plus' else value - right
        return value

    def term(self) -> Value:
        value = self.unary()
        while self.current.type == 'mul':
            self.advance()
            value = value * self.unary()
        return value

    def unary(self) -> Value:
        if self.current.type == 'minus':
            self.advance()
            return -self.unary()
        return self.power()

    def power(self) -> Value:
        value = self.atom()
        if self.current.type == 'pow':
            self.advance()
            exponent = self.expect('rational', 'nonnegative integer')
            if '/' in exponent.value:
                raise ExpressionSyntaxError('Exponent must be an integer', exponent.where, ('nonnegative integer',))
            value = value ** int(exponent.value)
        return value

    def atom(self) -> Value:
        token = self.current
        if token.type == 'rational':
            self.advance()
            if token.value.endswith('/0') or re.search(r'/0+$', token.value):
                raise ExpressionSyntaxError('Zero denominator', token.where, ('nonzero denominator',))
            return self.constant(Fraction(token.value))
        if token.type == 'name':
            self.advance()
            return self.symbol(token)
        if token.type == 'lpar':
            self.advance()
            value = self.expr()
            self.expect('rpar', "')'")
            return value
        raise ExpressionSyntaxError(
            f"Unexpected {'end of input' if token.type == 'end' else repr(token.value)}",
            token.where, ('number', 'basis element', 'variable', "'('", "'-'"),
        )

    def symbol(self, token: Token) -> Value:
        name = token.value
        if name in self.names:
            return self.constant(self.spec.basis(self.names[name]))
        variable = VARIABLE.fullmatch(name)
        if variable and not self.central:
            index = int(variable.group(1))
            if not 1 <= index <= self.n:
                raise VariableOutOfRange(f'{name} at offset {token.where} is out of range for n={self.n}')
            return FreePoly.variable(self.spec, self.n, index - 1)
        central = CENTRAL_VARIABLE.fullmatch(name)
        if central and self.central:
            i, j = int(central.group(1)), int(central.group(2))
            if not (1 <= i <= self.n and 1 <= j <= self.spec.m):
                raise VariableOutOfRange(
                    f'{name} at offset {token.where} is out of range for n={self.n}, m={self.spec.m}'
                )
            return CentralPoly.variable(self.spec, self.n, i - 1, j - 1)
        raise UnknownSymbol(f'Unknown symbol {name!r} at offset {token.where}')


def parse(text: str, spec: AlgebraSpec, n: Optional[int] = None) -> FreePoly:
    """
    Parse text into a FreePoly in canonical form.

    Args:
        text (str): Expression such as '1/4*(x1 - i*x1*i)'.
        spec (AlgebraSpec): Algebra of the basis names.
        n (Optional[int]): Variable count; inferred from the largest x
            index when omitted.

    Raises:
        ExpressionSyntaxError: With the failing offset and expected tokens.
        UnknownSymbol: For names that are neither basis elements nor x<d>.
        VariableOutOfRange: For x0 or indices above n.
    """
    if n is None:
        n = infer_variable_count(text)
    return Parser(spec, n).parse(text)


def infer_central_count(text: str) -> int:
    count = 0
    for token in tokenize(text):
        if token.type == 'name':
            match = CENTRAL_VARIABLE.fullmatch(token.value)
            if match:
                count = max(count, int(match.group(1)))
    return count


def parse_central(text: str, spec: AlgebraSpec, n: Optional[int] = None) -> CentralPoly:
    """Parse a polynomial in the central variables y<i>_<j>."""
    if n is None:
        n = infer_central_count(text)
    return Parser(spec, n, central=True).parse(text)


def render(p: Value) -> str:
    """Canonical text; parse(render(p)) == p for FreePolys."""
    if isinstance(p, CentralPoly):
        return format_centralpoly(p)
    return format_freepoly(p)


__all__ = [
    'Token', 'tokenize', 'basis_names', 'infer_variable_count', 'infer_central_count',
    'Parser', 'parse', 'parse_central', 'render',
]
