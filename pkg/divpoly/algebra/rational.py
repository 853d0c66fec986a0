from fractions import Fraction
from typing import Union
import sympy

Rational = Fraction
"""
Scalars of the base field. Fraction keeps numerator and denominator coprime
with a positive denominator, and zero as 0/1.
"""

RationalLike = Union[Fraction, int, str]


def to_rational(value: RationalLike) -> Fraction:
    """
    Coerce an int, Fraction or 'p/q' string into a Fraction.

    Args:
        value (RationalLike): The value to convert.

    Returns:
        Fraction: The exact rational.

    Raises:
        ValueError: If a string is not of the form 'p' or 'p/q'.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError(f'Not a rational: {value!r}')
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text or any(ch in text for ch in '.eE'):
            raise ValueError(f'Not a rational: {value!r}')
        return Fraction(text)
    raise ValueError(f'Not a rational: {value!r}')


def format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f'{value.numerator}/{value.denominator}'


def to_sympy(value: Fraction) -> sympy.Rational:
    return sympy.Rational(value.numerator, value.denominator)


def from_sympy(value) -> Fraction:
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


__all__ = ['Rational', 'RationalLike', 'to_rational', 'format_rational', 'to_sympy', 'from_sympy']
