from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, NamedTuple, Optional, Sequence, Tuple, Union
from .algebra import AlgebraSpec, Element, format_rational, mul
from .algebra.rational import RationalLike, to_rational
from .errors import AmbientMismatch, BadExponent, DimensionMismatch, NotQuaternionAmbient, VariableOutOfRange


class Word(NamedTuple):
    """
    Interlaced basis word v_{s0} x_{mu1} v_{s1} ... x_{muk} v_{sk}.

    Indices are zero-based; `bases` has one more entry than `variables`.
    """

    bases: Tuple[int, ...]
    variables: Tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.variables)

    def sort_key(self) -> tuple:
        # graded lexicographic on (degree, variables, bases)
        return (len(self.variables), self.variables, self.bases)


UNIT_WORD = Word((0,), ())

Scalar = Union[int, Fraction]


class Point:
    """
    A point of D^n: one algebra element per variable.

    Attributes:
        coords (Tuple[Element, ...]): The coordinates a_1..a_n.
        spec (AlgebraSpec): Ambient algebra shared by all coordinates.
    """

    def __init__(self, coords: Sequence[Element], spec: AlgebraSpec):
        for value in coords:
            if value.spec is not spec and value.spec != spec:
                raise AmbientMismatch('Point coordinate belongs to a different algebra')
        self.coords: Tuple[Element, ...] = tuple(coords)
        self.spec = spec

    @classmethod
    def from_rationals(cls, rows: Sequence[Sequence[RationalLike]], spec: AlgebraSpec) -> Point:
        return cls([spec.element(row) for row in rows], spec)

    def __len__(self) -> int:
        return len(self.coords)

    def __getitem__(self, index: int) -> Element:
        return self.coords[index]

    def __iter__(self) -> Iterator[Element]:
        return iter(self.coords)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Point):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def __repr__(self) -> str:
        return f"Point({', '.join(str(c) for c in self.coords)})"


class FreePoly:
    """
    Canonical-form element of the free product of an algebra D with the free
    algebra on x_1..x_n, stored on the interlaced-word basis.

    Two FreePolys are equal as elements of the free product exactly when
    their term maps are identical. Zero coefficients are never stored and
    every word is checked against (m, n) on construction.

    Attributes:
        spec (AlgebraSpec): The ambient algebra D.
        n (int): Number of noncommuting variables.
        terms (Dict[Word, Fraction]): Word -> nonzero coefficient.
    """

    __slots__ = ('spec', 'n', 'terms')

    def __init__(
            self,
            spec: AlgebraSpec,
            n: int,
            terms: Optional[Dict[Word, RationalLike]] = None,
            _trusted: bool = False
        ):
        if n < 0:
            raise VariableOutOfRange(f'Variable count must be nonnegative, got {n}')
        self.spec = spec
        self.n = n
        if _trusted:
            self.terms: Dict[Word, Fraction] = terms or {}
            return
        clean: Dict[Word, Fraction] = {}
        for word, coef in (terms or {}).items():
            word = Word(tuple(word[0]), tuple(word[1]))
            self._check_word(word)
            coef = to_rational(coef)
            if coef:
                clean[word] = clean.get(word, Fraction(0)) + coef
        self.terms = {w: c for w, c in clean.items() if c}

    def _check_word(self, word: Word) -> None:
        if len(word.bases) != len(word.variables) + 1:
            raise DimensionMismatch(f'Malformed word {word}')
        if any(not 0 <= s < self.spec.m for s in word.bases):
            raise DimensionMismatch(f'Basis index out of range in {word}')
        if any(not 0 <= mu < self.n for mu in word.variables):
            raise VariableOutOfRange(f'Variable index out of range in {word} (n={self.n})')

    # constructors

    @classmethod
    def zero(cls, spec: AlgebraSpec, n: int) -> FreePoly:
        return cls(spec, n, {}, _trusted=True)

    @classmethod
    def constant(cls, spec: AlgebraSpec, n: int, value: Union[Element, RationalLike]) -> FreePoly:
        if not isinstance(value, Element):
            value = spec.scalar(value)
        elif value.spec is not spec and value.spec != spec:
            raise AmbientMismatch('Constant belongs to a different algebra')
        return cls(spec, n, {Word((s,), ()): c for s, c in enumerate(value.coords) if c}, _trusted=True)

    @classmethod
    def one(cls, spec: AlgebraSpec, n: int) -> FreePoly:
        return cls(spec, n, {UNIT_WORD: Fraction(1)}, _trusted=True)

    @classmethod
    def basis(cls, spec: AlgebraSpec, n: int, s: int) -> FreePoly:
        return cls(spec, n, {Word((s,), ()): Fraction(1)})

    @classmethod
    def variable(cls, spec: AlgebraSpec, n: int, index: int) -> FreePoly:
        """The variable x_{index+1} (zero-based index)."""
        if not 0 <= index < n:
            raise VariableOutOfRange(f'x{index + 1} is out of range for n={n}')
        return cls(spec, n, {Word((0, 0), (index,)): Fraction(1)}, _trusted=True)

    # structure

    def _compatible(self, other: FreePoly) -> None:
        if self.n != other.n or (self.spec is not other.spec and self.spec != other.spec):
            raise AmbientMismatch(
                f'Operands live in different rings (n={self.n} vs n={other.n})'
            )

    def _coerce(self, other) -> Optional[FreePoly]:
        if isinstance(other, FreePoly):
            self._compatible(other)
            return other
        if isinstance(other, (int, Fraction, Element)):
            return FreePoly.constant(self.spec, self.n, other)
        return None

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        """Largest word degree; -1 for the zero polynomial."""
        return max((w.degree for w in self.terms), default=-1)

    def sorted_terms(self) -> List[Tuple[Word, Fraction]]:
        return sorted(self.terms.items(), key=lambda item: item[0].sort_key())

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        other_poly = self._coerce(other) if not isinstance(other, FreePoly) else other
        if other_poly is None:
            return NotImplemented
        return (
            self.n == other_poly.n
            and (self.spec is other_poly.spec or self.spec == other_poly.spec)
            and self.terms == other_poly.terms
        )

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    # arithmetic

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for word, coef in other.terms.items():
            value = terms.get(word, 0) + coef
            if value:
                terms[word] = value
            else:
                terms.pop(word, None)
        return FreePoly(self.spec, self.n, terms, _trusted=True)

    __radd__ = __add__

    def __neg__(self) -> FreePoly:
        return FreePoly(self.spec, self.n, {w: -c for w, c in self.terms.items()}, _trusted=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def scale(self, factor: RationalLike) -> FreePoly:
        factor = to_rational(factor)
        if not factor:
            return FreePoly.zero(self.spec, self.n)
        return FreePoly(self.spec, self.n, {w: factor * c for w, c in self.terms.items()}, _trusted=True)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        spec = self.spec
        out: Dict[Word, Fraction] = {}
        for w1, c1 in self.terms.items():
            head, last = w1.bases[:-1], w1.bases[-1]
            for w2, c2 in other.terms.items():
                weight = c1 * c2
                tail = w2.bases[1:]
                variables = w1.variables + w2.variables
                # junction v_last * v_first relinearized through the constants
                for u, c in spec.product_terms(last, w2.bases[0]):
                    word = Word(head + (u,) + tail, variables)
                    out[word] = out.get(word, 0) + weight * c
        return FreePoly(spec, self.n, {w: c for w, c in out.items() if c}, _trusted=True)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self

    def __pow__(self, exponent: int) -> FreePoly:
        if not isinstance(exponent, int) or exponent < 0:
            raise BadExponent(f'Exponent must be a nonnegative integer, got {exponent!r}')
        result = FreePoly.one(self.spec, self.n)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    # evaluation

    def evaluate(self, point: Union[Point, Sequence[Element]]) -> Element:
        """
        Substitute point[mu] for x_mu in every word and sum in the algebra.

        Raises:
            AmbientMismatch: If the point has the wrong length or algebra.
        """
        spec = self.spec
        if not isinstance(point, Point):
            point = Point(point, spec)
        if len(point) != self.n or (point.spec is not spec and point.spec != spec):
            raise AmbientMismatch(f'Point of length {len(point)} does not match n={self.n}')
        basis = [spec.basis(s) for s in range(spec.m)]
        total = [Fraction(0)] * spec.m
        for word, coef in self.terms.items():
            value = basis[word.bases[0]]
            for mu, s in zip(word.variables, word.bases[1:]):
                value = mul(mul(value, point[mu], spec), basis[s], spec)
            for u, c in enumerate(value.coords):
                if c:
                    total[u] += coef * c
        return Element(total, spec)

    def split_last(self) -> Tuple[FreePoly, Dict[Tuple[int, int], FreePoly]]:
        """
        Decompose p = p0 + sum over (mu, s) of p_{mu,s} * x_mu * v_s.

        Returns:
            Tuple: The degree-zero part p0 and the prefix polynomials keyed by
            (variable, trailing basis index).
        """
        constant: Dict[Word, Fraction] = {}
        prefixes: Dict[Tuple[int, int], Dict[Word, Fraction]] = {}
        for word, coef in self.terms.items():
            if not word.variables:
                constant[word] = coef
                continue
            key = (word.variables[-1], word.bases[-1])
            prefix = Word(word.bases[:-1], word.variables[:-1])
            prefixes.setdefault(key, {})[prefix] = coef
        return (
            FreePoly(self.spec, self.n, constant, _trusted=True),
            {k: FreePoly(self.spec, self.n, v, _trusted=True) for k, v in prefixes.items()},
        )

    def constant_value(self) -> Element:
        """The element of a polynomial without variables."""
        if self.degree > 0:
            raise VariableOutOfRange('Polynomial is not constant')
        coords = [Fraction(0)] * self.spec.m
        for word, coef in self.terms.items():
            coords[word.bases[0]] += coef
        return Element(coords, self.spec)

    def __repr__(self) -> str:
        return f'FreePoly({self})'

    def __str__(self) -> str:
        return format_freepoly(self)


def format_term(coef: Fraction, factors: List[str]) -> Tuple[str, str]:
    """Split a coefficient and its factor names into (sign, body)."""
    sign = '-' if coef < 0 else '+'
    magnitude = abs(coef)
    if not factors:
        return sign, format_rational(magnitude)
    if magnitude == 1:
        return sign, '*'.join(factors)
    return sign, '*'.join([format_rational(magnitude)] + factors)


def join_terms(parts: Iterable[Tuple[str, str]]) -> str:
    text = ''
    for sign, body in parts:
        if not text:
            text = body if sign == '+' else f'-{body}'
        else:
            text += f' {sign} {body}'
    return text or '0'


def format_freepoly(p: FreePoly) -> str:
    """
    Deterministic text of a FreePoly, terms in graded lexicographic word
    order, unit basis factors omitted: '1/4*x1 - 1/4*i*x1*i'.
    """
    spec = p.spec
    parts = []
    for word, coef in p.sorted_terms():
        factors = []
        if word.bases[0]:
            factors.append(spec.symbol(word.bases[0]))
        for mu, s in zip(word.variables, word.bases[1:]):
            factors.append(f'x{mu + 1}')
            if s:
                factors.append(spec.symbol(s))
        parts.append(format_term(coef, factors))
    return join_terms(parts)


def _check_same(p: FreePoly, q: FreePoly) -> None:
    if not isinstance(p, FreePoly) or not isinstance(q, FreePoly):
        raise AmbientMismatch('Operands must both be FreePolys')
    p._compatible(q)


def fp_add(p: FreePoly, q: FreePoly) -> FreePoly:
    _check_same(p, q)
    return p + q


def fp_scale(p: FreePoly, factor: Union[RationalLike, Element]) -> FreePoly:
    """Multiply by a rational, or on the left by an algebra element."""
    if isinstance(factor, Element):
        return FreePoly.constant(p.spec, p.n, factor) * p
    return p.scale(factor)


def fp_mul(p: FreePoly, q: FreePoly) -> FreePoly:
    _check_same(p, q)
    return p * q


def fp_eval(p: FreePoly, a: Union[Point, Sequence[Element]]) -> Element:
    return p.evaluate(a)


def _require_quaternion(p: FreePoly) -> None:
    if not p.spec.is_quaternion:
        raise NotQuaternionAmbient('Conjugation and norm need the quaternion ambient')


def fp_conj(p: FreePoly) -> FreePoly:
    """
    Conjugate polynomial function -1/2 (p + i p i + j p j + k p k).

    Its values are the quaternion conjugates of the values of p; as free
    elements fp_conj(fp_conj(p)) agrees with p only up to an identity.

    Raises:
        NotQuaternionAmbient: Outside the quaternions.
    """
    _require_quaternion(p)
    total = p
    for s in (1, 2, 3):
        unit = FreePoly.basis(p.spec, p.n, s)
        total = total + unit * p * unit
    return total.scale(Fraction(-1, 2))


def fp_norm(p: FreePoly) -> FreePoly:
    """The norm p * conj(p); its values are real and nonnegative."""
    _require_quaternion(p)
    return p * fp_conj(p)


__all__ = [
    'Word', 'UNIT_WORD', 'Point', 'FreePoly', 'format_freepoly', 'format_term', 'join_terms',
    'fp_add', 'fp_scale', 'fp_mul', 'fp_eval', 'fp_conj', 'fp_norm',
]
