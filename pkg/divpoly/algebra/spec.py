import logging
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Iterable, List, Optional, Sequence, Tuple
from ..core import QUATERNION_LABELS
from ..errors import (
    DimensionMismatch,
    DimensionOne,
    NotAssociative,
    UnitMissing,
    ZeroDivisor,
)
from .element import Element, left_matrix
from .linear import check_central, check_lemma_matrix
from .rational import RationalLike, to_rational

logger = logging.getLogger(__name__)

ConstantTable = Tuple[Tuple[Tuple[Fraction, ...], ...], ...]


class AlgebraSpec:
    """
    A finite-dimensional algebra over the rationals given by structure
    constants, v_s * v_t = sum over u of c[s][t][u] * v_u.

    Basis index 0 (v1 in the one-based notation used on the command line and
    in files) is the unit. Instances are immutable and compare equal when
    dimension and constants agree; labels only affect display.

    Use make_algebra to obtain a validated spec; the bare constructor only
    checks table shape.

    Attributes:
        m (int): Dimension, the number of basis elements.
        constants (ConstantTable): c[s][t][u] as Fractions.
        labels (Tuple[str, ...]): Display names per basis element.
    """

    def __init__(
            self,
            m: int,
            constants: Sequence[Sequence[Sequence[RationalLike]]],
            labels: Optional[Sequence[str]] = None
        ):
        if m < 1:
            raise DimensionMismatch(f'Dimension must be positive, got {m}')
        if len(constants) != m or any(len(row) != m for row in constants) \
                or any(len(cell) != m for row in constants for cell in row):
            raise DimensionMismatch(f'Structure constant table must be {m}x{m}x{m}')
        self.m = m
        self.constants: ConstantTable = tuple(
            tuple(tuple(to_rational(c) for c in cell) for cell in row) for row in constants
        )
        if labels is None:
            labels = [f'e{s + 1}' for s in range(m)]
        if len(labels) != m:
            raise DimensionMismatch(f'Expected {m} labels, got {len(labels)}')
        self.labels: Tuple[str, ...] = tuple(str(label) for label in labels)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraSpec):
            return NotImplemented
        return self is other or (self.m == other.m and self.constants == other.constants)

    def __hash__(self) -> int:
        return hash((self.m, self.constants))

    def __repr__(self) -> str:
        return f"AlgebraSpec(m={self.m}, labels={list(self.labels)})"

    @cached_property
    def _products(self) -> Tuple[Tuple[Tuple[Tuple[int, Fraction], ...], ...], ...]:
        return tuple(
            tuple(
                tuple((u, c) for u, c in enumerate(self.constants[s][t]) if c)
                for t in range(self.m)
            )
            for s in range(self.m)
        )

    def product_terms(self, s: int, t: int) -> Tuple[Tuple[int, Fraction], ...]:
        """Nonzero (u, c[s][t][u]) pairs of the basis product v_s * v_t."""
        return self._products[s][t]

    def element(self, coords: Iterable[RationalLike]) -> Element:
        return Element(coords, self)

    def zero(self) -> Element:
        return Element([0] * self.m, self)

    def basis(self, s: int) -> Element:
        coords = [0] * self.m
        coords[s] = 1
        return Element(coords, self)

    def unit(self) -> Element:
        return self.basis(0)

    def scalar(self, value: RationalLike) -> Element:
        coords = [0] * self.m
        coords[0] = to_rational(value)
        return Element(coords, self)

    def symbol(self, s: int) -> str:
        """Parseable name of basis element s; falls back to e<s+1>."""
        label = self.labels[s]
        if s > 0 and label.isidentifier() and not _is_reserved(label):
            return label
        return label if s == 0 else f'e{s + 1}'

    @cached_property
    def is_quaternion(self) -> bool:
        return self == quaternion_algebra()


def _is_reserved(label: str) -> bool:
    head, tail = label[:1], label[1:]
    return head in ('x', 'y') and bool(tail) and tail.replace('_', '').isdigit()


def check_unit(spec: AlgebraSpec) -> None:
    for t in range(spec.m):
        for u in range(spec.m):
            expected = 1 if t == u else 0
            if spec.constants[0][t][u] != expected or spec.constants[t][0][u] != expected:
                raise UnitMissing(
                    f'Basis element 1 is not a two-sided unit (fails on basis element {t + 1})'
                )


def check_associative(spec: AlgebraSpec) -> None:
    m = spec.m
    c = spec.constants
    for s in range(m):
        for t in range(m):
            for r in range(m):
                for w in range(m):
                    left = sum(c[s][t][u] * c[u][r][w] for u in range(m))
                    right = sum(c[t][r][u] * c[s][u][w] for u in range(m))
                    if left != right:
                        raise NotAssociative(
                            f'(v{s + 1} v{t + 1}) v{r + 1} != v{s + 1} (v{t + 1} v{r + 1})'
                        )


def probe_zero_divisors(spec: AlgebraSpec) -> None:
    """
    Reject specs where a basis element, or a sum or difference of two basis
    elements, has a singular left-multiplication matrix.

    Passing the probe does not prove the algebra is a division algebra;
    inverse reports any remaining zero divisor lazily.

    Raises:
        ZeroDivisor: Naming the offending element.
    """
    candidates: List[Element] = [spec.basis(s) for s in range(spec.m)]
    for s, t in combinations(range(spec.m), 2):
        candidates.append(spec.basis(s) + spec.basis(t))
        candidates.append(spec.basis(s) - spec.basis(t))
    for candidate in candidates:
        if left_matrix(candidate).rank() < spec.m:
            raise ZeroDivisor(f'{candidate} is a zero divisor, the algebra is not a division algebra')


def make_algebra(
        m: int,
        constants: Sequence[Sequence[Sequence[RationalLike]]],
        labels: Optional[Sequence[str]] = None
    ) -> AlgebraSpec:
    """
    Build and validate an AlgebraSpec.

    Checks run eagerly, in order: dimension greater than one, unit,
    associativity on all basis triples, invertibility of the lemma matrix,
    one-dimensional center, and the zero-divisor probe.

    Args:
        m (int): Dimension.
        constants: The m x m x m table c[s][t][u] (ints, Fractions or 'p/q').
        labels (Optional[Sequence[str]]): Display names; defaults to e1..em.

    Returns:
        AlgebraSpec: The validated spec.

    Raises:
        DimensionMismatch: If the table is not m x m x m.
        DimensionOne, UnitMissing, NotAssociative, LemmaMatrixSingular,
        NotCentral, ZeroDivisor: Naming the violated invariant.
    """
    spec = AlgebraSpec(m, constants, labels)
    if spec.m == 1:
        raise DimensionOne('The algebra must have dimension greater than one over its center')
    check_unit(spec)
    check_associative(spec)
    check_lemma_matrix(spec)
    check_central(spec)
    probe_zero_divisors(spec)
    logger.debug('Validated algebra of dimension %d with labels %s', spec.m, spec.labels)
    return spec


def _quaternion_constants() -> List[List[List[int]]]:
    # Signed products of 1, i, j, k as (sign, index)
    table = {
        (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
        (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
        (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
        (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
    }
    constants = [[[0] * 4 for _ in range(4)] for _ in range(4)]
    for (s, t), (sign, u) in table.items():
        constants[s][t][u] = sign
    return constants


@lru_cache(maxsize=None)
def quaternion_algebra() -> AlgebraSpec:
    """
    The rational quaternions (-1,-1 | Q) with basis 1, i, j, k.
    """
    return make_algebra(4, _quaternion_constants(), QUATERNION_LABELS)


__all__ = [
    'AlgebraSpec', 'ConstantTable', 'make_algebra', 'quaternion_algebra',
    'check_unit', 'check_associative', 'probe_zero_divisors',
]
