from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple, Union
from .algebra import AlgebraSpec, Element, mul
from .algebra.rational import RationalLike, to_rational
from .errors import AmbientMismatch, BadExponent, IndexOutOfRange, LengthMismatch
from .freepoly import format_term, join_terms

Monomial = Tuple[int, ...]
"""
Exponent vector over the central variables y_ij, flattened with the
variable index i major and the coordinate index j minor.
"""


def monomial_key(monomial: Monomial) -> tuple:
    """
    Sort key for degree-reverse-lexicographic order with
    y11 > y12 > ... > ynm; larger keys are larger monomials.
    """
    return (sum(monomial), tuple(-e for e in reversed(monomial)))


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_text(monomial: Monomial, m: int) -> List[str]:
    factors = []
    for index, e in enumerate(monomial):
        if not e:
            continue
        name = f'y{index // m + 1}_{index % m + 1}'
        factors.append(name if e == 1 else f'{name}^{e}')
    return factors


class ScalarPoly:
    """
    Commutative polynomial with rational coefficients in the central
    variables y_ij, 1 <= i <= n, 1 <= j <= m: an element of F[y_ij].

    Attributes:
        n (int): Number of noncommuting variables the y's come from.
        m (int): Dimension of the algebra (coordinates per variable).
        terms (Dict[Monomial, Fraction]): Nonzero coefficients.
    """

    __slots__ = ('n', 'm', 'terms')

    def __init__(self, n: int, m: int, terms: Optional[Dict[Monomial, RationalLike]] = None):
        self.n = n
        self.m = m
        clean: Dict[Monomial, Fraction] = {}
        for monomial, coef in (terms or {}).items():
            monomial = tuple(monomial)
            if len(monomial) != n * m or any(e < 0 for e in monomial):
                raise LengthMismatch(f'Monomial {monomial} does not have {n * m} nonnegative exponents')
            coef = to_rational(coef)
            if coef:
                clean[monomial] = coef
        self.terms = clean

    @property
    def nvars(self) -> int:
        return self.n * self.m

    @classmethod
    def _raw(cls, n: int, m: int, terms: Dict[Monomial, Fraction]) -> ScalarPoly:
        poly = cls.__new__(cls)
        poly.n, poly.m, poly.terms = n, m, terms
        return poly

    @classmethod
    def constant(cls, n: int, m: int, value: RationalLike) -> ScalarPoly:
        value = to_rational(value)
        return cls._raw(n, m, {(0,) * (n * m): value} if value else {})

    @classmethod
    def variable(cls, n: int, m: int, i: int, j: int) -> ScalarPoly:
        """The central variable y_{i+1, j+1} (zero-based indices)."""
        if not (0 <= i < n and 0 <= j < m):
            raise IndexOutOfRange(f'y{i + 1}_{j + 1} is out of range for n={n}, m={m}')
        exponents = [0] * (n * m)
        exponents[i * m + j] = 1
        return cls._raw(n, m, {tuple(exponents): Fraction(1)})

    def _like(self, other) -> Optional[ScalarPoly]:
        if isinstance(other, ScalarPoly):
            if (other.n, other.m) != (self.n, self.m):
                raise AmbientMismatch('Scalar polynomials live in different rings')
            return other
        if isinstance(other, (int, Fraction)):
            return ScalarPoly.constant(self.n, self.m, other)
        return None

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        return max((sum(mono) for mono in self.terms), default=-1)

    def leading(self) -> Tuple[Monomial, Fraction]:
        """Leading (monomial, coefficient) in degrevlex order."""
        monomial = max(self.terms, key=monomial_key)
        return monomial, self.terms[monomial]

    def sorted_terms(self) -> List[Tuple[Monomial, Fraction]]:
        return sorted(self.terms.items(), key=lambda item: monomial_key(item[0]), reverse=True)

    def __add__(self, other):
        other = self._like(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for monomial, coef in other.terms.items():
            value = terms.get(monomial, 0) + coef
            if value:
                terms[monomial] = value
            else:
                terms.pop(monomial, None)
        return ScalarPoly._raw(self.n, self.m, terms)

    __radd__ = __add__

    def __neg__(self) -> ScalarPoly:
        return ScalarPoly._raw(self.n, self.m, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        other = self._like(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, factor: RationalLike) -> ScalarPoly:
        factor = to_rational(factor)
        if not factor:
            return ScalarPoly._raw(self.n, self.m, {})
        return ScalarPoly._raw(self.n, self.m, {k: v * factor for k, v in self.terms.items()})

    def shift(self, monomial: Monomial, factor: RationalLike = 1) -> ScalarPoly:
        """Multiply by factor * y^monomial."""
        factor = to_rational(factor)
        if not factor:
            return ScalarPoly._raw(self.n, self.m, {})
        return ScalarPoly._raw(
            self.n, self.m, {monomial_mul(k, monomial): v * factor for k, v in self.terms.items()}
        )

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._like(other)
        if other is None:
            return NotImplemented
        out: Dict[Monomial, Fraction] = {}
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                key = monomial_mul(a, b)
                out[key] = out.get(key, 0) + ca * cb
        return ScalarPoly._raw(self.n, self.m, {k: v for k, v in out.items() if v})

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> ScalarPoly:
        if not isinstance(exponent, int) or exponent < 0:
            raise BadExponent(f'Exponent must be a nonnegative integer, got {exponent!r}')
        result = ScalarPoly.constant(self.n, self.m, 1)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        other = self._like(other) if not isinstance(other, ScalarPoly) else other
        if other is None:
            return NotImplemented
        return (self.n, self.m) == (other.n, other.m) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.n, self.m, frozenset(self.terms.items())))

    def monic(self) -> ScalarPoly:
        if not self.terms:
            return self
        return self.scale(1 / self.leading()[1])

    def primitive(self) -> ScalarPoly:
        """Divide by the gcd of numerators over the lcm of denominators."""
        if not self.terms:
            return self
        numerators = 0
        denominators = 1
        for coef in self.terms.values():
            numerators = gcd(numerators, coef.numerator)
            denominators = denominators * coef.denominator // gcd(denominators, coef.denominator)
        content = Fraction(numerators, denominators)
        if self.leading()[1] < 0:
            content = -content
        return self.scale(1 / content)

    def evaluate(self, point: Sequence[RationalLike]) -> Fraction:
        if len(point) != self.nvars:
            raise LengthMismatch(f'Point has length {len(point)}, expected {self.nvars}')
        values = [to_rational(v) for v in point]
        total = Fraction(0)
        for monomial, coef in self.terms.items():
            term = coef
            for value, e in zip(values, monomial):
                if e:
                    term *= value ** e
            total += term
        return total

    def to_central(self, spec: AlgebraSpec) -> CentralPoly:
        if spec.m != self.m:
            raise AmbientMismatch(f'Algebra dimension {spec.m} does not match m={self.m}')
        return CentralPoly(spec, self.n, {k: spec.scalar(v) for k, v in self.terms.items()}, _trusted=True)

    def __repr__(self) -> str:
        return f'ScalarPoly({self})'

    def __str__(self) -> str:
        return join_terms(
            format_term(coef, monomial_text(monomial, self.m)) for monomial, coef in self.sorted_terms()
        )


class CentralPoly:
    """
    Polynomial in the central variables y_ij with algebra coefficients,
    written a_I y^I with the coefficient on the left. Coefficients multiply
    in the algebra; the variables commute with everything.

    Attributes:
        spec (AlgebraSpec): The coefficient algebra.
        n (int): Number of noncommuting variables the y's come from.
        terms (Dict[Monomial, Element]): Nonzero coefficients.
    """

    __slots__ = ('spec', 'n', 'terms')

    def __init__(
            self,
            spec: AlgebraSpec,
            n: int,
            terms: Optional[Dict[Monomial, Element]] = None,
            _trusted: bool = False
        ):
        self.spec = spec
        self.n = n
        if _trusted:
            self.terms: Dict[Monomial, Element] = terms or {}
            return
        clean: Dict[Monomial, Element] = {}
        for monomial, coef in (terms or {}).items():
            monomial = tuple(monomial)
            if len(monomial) != n * spec.m or any(e < 0 for e in monomial):
                raise LengthMismatch(f'Monomial {monomial} does not have {n * spec.m} nonnegative exponents')
            if not isinstance(coef, Element):
                coef = spec.scalar(coef)
            if coef.spec is not spec and coef.spec != spec:
                raise AmbientMismatch('Coefficient belongs to a different algebra')
            total = clean.get(monomial, spec.zero()) + coef
            clean[monomial] = total
        self.terms = {k: v for k, v in clean.items() if not v.is_zero()}

    @property
    def m(self) -> int:
        return self.spec.m

    @classmethod
    def zero(cls, spec: AlgebraSpec, n: int) -> CentralPoly:
        return cls(spec, n, {}, _trusted=True)

    @classmethod
    def constant(cls, spec: AlgebraSpec, n: int, value: Union[Element, RationalLike]) -> CentralPoly:
        if not isinstance(value, Element):
            value = spec.scalar(value)
        if value.is_zero():
            return cls.zero(spec, n)
        return cls(spec, n, {(0,) * (n * spec.m): value}, _trusted=True)

    @classmethod
    def variable(cls, spec: AlgebraSpec, n: int, i: int, j: int) -> CentralPoly:
        return ScalarPoly.variable(n, spec.m, i, j).to_central(spec)

    def _like(self, other) -> Optional[CentralPoly]:
        if isinstance(other, CentralPoly):
            if self.n != other.n or (self.spec is not other.spec and self.spec != other.spec):
                raise AmbientMismatch('Central polynomials live in different rings')
            return other
        if isinstance(other, ScalarPoly):
            return self._like(other.to_central(self.spec))
        if isinstance(other, (int, Fraction, Element)):
            return CentralPoly.constant(self.spec, self.n, other)
        return None

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        return max((sum(mono) for mono in self.terms), default=-1)

    def sorted_terms(self) -> List[Tuple[Monomial, Element]]:
        return sorted(self.terms.items(), key=lambda item: monomial_key(item[0]), reverse=True)

    def __add__(self, other):
        other = self._like(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for monomial, coef in other.terms.items():
            value = terms[monomial] + coef if monomial in terms else coef
            if value.is_zero():
                terms.pop(monomial, None)
            else:
                terms[monomial] = value
        return CentralPoly(self.spec, self.n, terms, _trusted=True)

    __radd__ = __add__

    def __neg__(self) -> CentralPoly:
        return CentralPoly(self.spec, self.n, {k: -v for k, v in self.terms.items()}, _trusted=True)

    def __sub__(self, other):
        other = self._like(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._like(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CentralPoly(
                self.spec, self.n,
                {k: v.scale(other) for k, v in self.terms.items()} if other else {}, _trusted=True,
            )
        other = self._like(other)
        if other is None:
            return NotImplemented
        spec = self.spec
        out: Dict[Monomial, Element] = {}
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                key = monomial_mul(a, b)
                product = mul(ca, cb, spec)
                out[key] = out[key] + product if key in out else product
        return CentralPoly(spec, self.n, {k: v for k, v in out.items() if not v.is_zero()}, _trusted=True)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        other = self._like(other)
        if other is None:
            return NotImplemented
        return other * self

    def __pow__(self, exponent: int) -> CentralPoly:
        if not isinstance(exponent, int) or exponent < 0:
            raise BadExponent(f'Exponent must be a nonnegative integer, got {exponent!r}')
        result = CentralPoly.constant(self.spec, self.n, 1)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, CentralPoly):
            return (
                self.n == other.n
                and (self.spec is other.spec or self.spec == other.spec)
                and self.terms == other.terms
            )
        other = self._like(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.terms.items())))

    def evaluate(self, point: Sequence[RationalLike]) -> Element:
        """
        Evaluate at a central point (one rational per y_ij).

        Raises:
            LengthMismatch: If the point does not have n * m entries.
        """
        size = self.n * self.spec.m
        if len(point) != size:
            raise LengthMismatch(f'Point has length {len(point)}, expected {size}')
        values = [to_rational(v) for v in point]
        total = self.spec.zero()
        for monomial, coef in self.terms.items():
            factor = Fraction(1)
            for value, e in zip(values, monomial):
                if e:
                    factor *= value ** e
            total = total + coef.scale(factor)
        return total

    def __repr__(self) -> str:
        return f'CentralPoly({self})'

    def __str__(self) -> str:
        return format_centralpoly(self)


def _coefficient_text(coef: Element) -> Tuple[str, Optional[str], Fraction]:
    nonzero = [(s, c) for s, c in enumerate(coef.coords) if c]
    if len(nonzero) == 1:
        s, c = nonzero[0]
        return ('-' if c < 0 else '+'), (coef.spec.symbol(s) if s else None), abs(c)
    return '+', f'({coef})', Fraction(1)


def format_centralpoly(p: CentralPoly) -> str:
    """Deterministic text, leading degrevlex terms first: 'k*y1_1*y1_2'."""
    parts = []
    for monomial, coef in p.sorted_terms():
        sign, label, magnitude = _coefficient_text(coef)
        factors = ([label] if label else []) + monomial_text(monomial, p.spec.m)
        _, body = format_term(magnitude, factors)
        parts.append((sign, body))
    return join_terms(parts)


def cp_add(p: CentralPoly, q: CentralPoly) -> CentralPoly:
    return p + p._like(q)


def cp_mul(p: CentralPoly, q: CentralPoly) -> CentralPoly:
    """(sum a_I y^I)(sum b_J y^J) = sum a_I b_J y^(I+J), coefficients in order."""
    return p * p._like(q)


def cp_eval(p: CentralPoly, point: Sequence[RationalLike]) -> Element:
    return p.evaluate(point)


def components(p: CentralPoly) -> List[ScalarPoly]:
    """
    Split p = sum over t of v_t * g_t with every g_t in F[y_ij].

    Returns:
        List[ScalarPoly]: g_1..g_m, one per basis element.
    """
    m = p.spec.m
    parts: List[Dict[Monomial, Fraction]] = [{} for _ in range(m)]
    for monomial, coef in p.terms.items():
        for t, c in enumerate(coef.coords):
            if c:
                parts[t][monomial] = c
    return [ScalarPoly._raw(p.n, m, part) for part in parts]


def recombine(parts: Sequence[ScalarPoly], spec: AlgebraSpec) -> CentralPoly:
    """Inverse of components: sum over t of v_t * g_t."""
    if len(parts) != spec.m:
        raise LengthMismatch(f'Expected {spec.m} components, got {len(parts)}')
    n = parts[0].n
    terms: Dict[Monomial, List[Fraction]] = {}
    for t, part in enumerate(parts):
        if (part.n, part.m) != (n, spec.m):
            raise AmbientMismatch('Components live in different rings')
        for monomial, coef in part.terms.items():
            terms.setdefault(monomial, [Fraction(0)] * spec.m)[t] += coef
    return CentralPoly(spec, n, {k: Element(v, spec) for k, v in terms.items()})


__all__ = [
    'Monomial', 'monomial_key', 'monomial_mul', 'monomial_divides', 'monomial_lcm',
    'ScalarPoly', 'CentralPoly', 'format_centralpoly',
    'cp_add', 'cp_mul', 'cp_eval', 'components', 'recombine',
]
