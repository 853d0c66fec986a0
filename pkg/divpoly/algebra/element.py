from __future__ import annotations

from fractions import Fraction
from typing import TYPE_CHECKING, Iterable, Tuple
import sympy
from ..errors import DimensionMismatch, NotQuaternionAmbient, ZeroDivisor, ZeroElement
from .rational import RationalLike, format_rational, from_sympy, to_rational, to_sympy

if TYPE_CHECKING:
    from .spec import AlgebraSpec


class Element:
    """
    An element of a finite-dimensional algebra, stored by its coordinates in
    the basis v1..vm of the owning AlgebraSpec.

    Elements are immutable; arithmetic returns new elements. Rationals and
    ints act as central scalars on either side.

    Attributes:
        coords (Tuple[Fraction, ...]): Coordinates, one per basis element.
        spec (AlgebraSpec): The owning algebra.
    """

    __slots__ = ('coords', 'spec', '_hash')

    def __init__(self, coords: Iterable[RationalLike], spec: AlgebraSpec):
        coords = tuple(to_rational(c) for c in coords)
        if len(coords) != spec.m:
            raise DimensionMismatch(f'Element has {len(coords)} coordinates, algebra has dimension {spec.m}')
        object.__setattr__(self, 'coords', coords)
        object.__setattr__(self, 'spec', spec)
        object.__setattr__(self, '_hash', None)

    def __setattr__(self, name, value):
        raise AttributeError('Element is immutable')

    def _check(self, other: Element) -> None:
        if self.spec is not other.spec and self.spec != other.spec:
            raise DimensionMismatch('Elements belong to different algebras')

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.spec.scalar(other)
        if not isinstance(other, Element):
            return NotImplemented
        self._check(other)
        return Element((a + b for a, b in zip(self.coords, other.coords)), self.spec)

    __radd__ = __add__

    def __neg__(self) -> Element:
        return Element((-a for a in self.coords), self.spec)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.spec.scalar(other)
        if not isinstance(other, Element):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Element):
            return NotImplemented
        return mul(self, other, self.spec)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, factor: RationalLike) -> Element:
        factor = to_rational(factor)
        return Element((factor * a for a in self.coords), self.spec)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.spec.scalar(other)
        if not isinstance(other, Element):
            return NotImplemented
        return self.coords == other.coords and (self.spec is other.spec or self.spec == other.spec)

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, '_hash', hash(self.coords))
        return self._hash

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_scalar(self) -> bool:
        """True when the element lies in the span of the unit v1."""
        return not any(self.coords[1:])

    def __repr__(self) -> str:
        return f'Element({self})'

    def __str__(self) -> str:
        parts = []
        for index, value in enumerate(self.coords):
            if value == 0:
                continue
            label = self.spec.symbol(index)
            if index == 0:
                body = format_rational(abs(value))
            elif abs(value) == 1:
                body = label
            else:
                body = f'{format_rational(abs(value))}*{label}'
            sign = '-' if value < 0 else '+'
            if not parts:
                parts.append(body if sign == '+' else f'-{body}')
            else:
                parts.append(f'{sign} {body}')
        return ' '.join(parts) if parts else '0'


def mul(a: Element, b: Element, spec: AlgebraSpec) -> Element:
    """
    Multiply two elements through the structure constants,
    (a*b)_u = sum over s, t of a_s * b_t * c[s][t][u].

    Args:
        a (Element): Left factor.
        b (Element): Right factor.
        spec (AlgebraSpec): The algebra both factors belong to.

    Returns:
        Element: The product.

    Raises:
        DimensionMismatch: If either factor does not belong to spec.
    """
    if len(a.coords) != spec.m or len(b.coords) != spec.m:
        raise DimensionMismatch(f'Operands do not have dimension {spec.m}')
    if (a.spec is not spec and a.spec != spec) or (b.spec is not spec and b.spec != spec):
        raise DimensionMismatch('Operands belong to a different algebra')
    out = [Fraction(0)] * spec.m
    for s, a_s in enumerate(a.coords):
        if not a_s:
            continue
        for t, b_t in enumerate(b.coords):
            if not b_t:
                continue
            weight = a_s * b_t
            for u, c in spec.product_terms(s, t):
                out[u] += weight * c
    return Element(out, spec)


def left_matrix(a: Element) -> sympy.Matrix:
    """
    Matrix of the map y -> a*y in the basis; column t holds a*v_t.
    """
    spec = a.spec
    columns = [mul(a, spec.basis(t), spec).coords for t in range(spec.m)]
    return sympy.Matrix(spec.m, spec.m, lambda u, t: to_sympy(columns[t][u]))


def inverse(a: Element, spec: AlgebraSpec) -> Element:
    """
    Invert a nonzero element by solving the linear system of its
    left-multiplication matrix for the unit.

    Args:
        a (Element): The element to invert.
        spec (AlgebraSpec): The owning algebra.

    Returns:
        Element: b with a*b = b*a = 1.

    Raises:
        ZeroElement: If a is zero.
        ZeroDivisor: If the left-multiplication matrix is singular, or the
            right inverse found is not also a left inverse.
    """
    if len(a.coords) != spec.m:
        raise DimensionMismatch(f'Element does not have dimension {spec.m}')
    if a.is_zero():
        raise ZeroElement('Cannot invert the zero element')
    matrix = left_matrix(a)
    if matrix.rank() < spec.m:
        raise ZeroDivisor(f'{a} is a zero divisor')
    unit = sympy.Matrix([to_sympy(c) for c in spec.unit().coords])
    solution = matrix.LUsolve(unit)
    b = Element((from_sympy(v) for v in solution), spec)
    if mul(b, a, spec) != spec.unit():
        raise ZeroDivisor(f'{a} has a one-sided inverse only')
    return b


def conj(a: Element) -> Element:
    """
    Quaternion conjugation: a + b i + c j + d k -> a - b i - c j - d k.

    Raises:
        NotQuaternionAmbient: If a is not a quaternion.
    """
    if not a.spec.is_quaternion:
        raise NotQuaternionAmbient('Conjugation is defined on the quaternions only')
    first, *rest = a.coords
    return Element((first, *(-c for c in rest)), a.spec)


def element_norm(a: Element) -> Fraction:
    """Return the quaternion norm a * conj(a) as a rational."""
    return mul(a, conj(a), a.spec).coords[0]


__all__ = ['Element', 'mul', 'inverse', 'left_matrix', 'conj', 'element_norm']
