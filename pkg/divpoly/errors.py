class DivpolyError(ValueError):
    """
    Base class for every domain error raised by divpoly.

    Each subclass carries a `code` naming the violated invariant; the
    command line prints it on stderr before exiting with status 1.

    Attributes:
        code (str): Stable error name, e.g. 'LemmaMatrixSingular'.
    """

    code = 'DivpolyError'

    def __init__(self, message: str = ''):
        super().__init__(message or self.code)


class AlgebraSpecError(DivpolyError):
    """Raised by make_algebra when the structure constants are rejected."""

    code = 'AlgebraSpecError'


class UnitMissing(AlgebraSpecError):
    code = 'UnitMissing'


class NotAssociative(AlgebraSpecError):
    code = 'NotAssociative'


class DimensionOne(AlgebraSpecError):
    code = 'DimensionOne'


class LemmaMatrixSingular(AlgebraSpecError):
    code = 'LemmaMatrixSingular'


class NotCentral(AlgebraSpecError):
    code = 'NotCentral'


class ZeroDivisor(AlgebraSpecError):
    code = 'ZeroDivisor'


class ZeroElement(DivpolyError):
    code = 'ZeroElement'


class DimensionMismatch(DivpolyError):
    code = 'DimensionMismatch'


class AmbientMismatch(DivpolyError):
    code = 'AmbientMismatch'


class NotQuaternionAmbient(DivpolyError):
    code = 'NotQuaternionAmbient'


class LengthMismatch(DivpolyError):
    code = 'LengthMismatch'


class IndexOutOfRange(DivpolyError):
    code = 'IndexOutOfRange'


class NotAnIdentity(DivpolyError):
    code = 'NotAnIdentity'


class BadExponent(DivpolyError):
    code = 'BadExponent'


class ExpressionSyntaxError(DivpolyError):
    """
    Raised by the expression parser.

    Attributes:
        position (int): Character offset where parsing failed.
        expected (tuple): Token kinds that would have been accepted.
    """

    code = 'SyntaxError'

    def __init__(self, message: str, position: int, expected=()):
        self.position = position
        self.expected = tuple(expected)
        detail = f'{message} at offset {position}'
        if self.expected:
            detail += f" (expected {', '.join(self.expected)})"
        super().__init__(detail)


class UnknownSymbol(DivpolyError):
    code = 'UnknownSymbol'


class VariableOutOfRange(DivpolyError):
    code = 'VariableOutOfRange'


class ArtifactError(DivpolyError):
    """Raised when a JSON artifact is missing, malformed or of the wrong kind."""

    code = 'ArtifactError'


class DigestMismatch(ArtifactError):
    code = 'DigestMismatch'


__all__ = [
    'DivpolyError', 'AlgebraSpecError', 'UnitMissing', 'NotAssociative',
    'DimensionOne', 'LemmaMatrixSingular', 'NotCentral', 'ZeroDivisor',
    'ZeroElement', 'DimensionMismatch', 'AmbientMismatch',
    'NotQuaternionAmbient', 'LengthMismatch', 'IndexOutOfRange',
    'NotAnIdentity', 'BadExponent', 'ExpressionSyntaxError', 'UnknownSymbol',
    'VariableOutOfRange', 'ArtifactError', 'DigestMismatch',
]
