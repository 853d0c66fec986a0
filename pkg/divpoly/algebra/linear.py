from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import TYPE_CHECKING, Iterator, List, Tuple
import sympy
from ..errors import LemmaMatrixSingular, NotCentral
from .element import Element, mul
from .rational import from_sympy, to_sympy

if TYPE_CHECKING:
    from .spec import AlgebraSpec


def _triple_coord(spec: AlgebraSpec, s: int, r: int, t: int, u: int) -> Fraction:
    # coordinate u of v_s * v_r * v_t
    total = Fraction(0)
    for w, c1 in spec.product_terms(s, r):
        for u2, c2 in spec.product_terms(w, t):
            if u2 == u:
                total += c1 * c2
    return total


def lemma_matrix(spec: AlgebraSpec) -> sympy.Matrix:
    """
    Build the m^2 x m^2 matrix whose column (s, t) is the vectorized matrix
    of the map x -> v_s * x * v_t.

    Row (u, r) of column (s, t) holds coordinate u of v_s * v_r * v_t; pairs
    are flattened row-major, so (s, t) sits at index s * m + t. The matrix is
    invertible exactly when the two-sided multiplications span all linear
    endomorphisms of the algebra.

    Args:
        spec (AlgebraSpec): Spec with well-formed constants (validation of
            invertibility is what this matrix is for).

    Returns:
        sympy.Matrix: Exact rational matrix.
    """
    m = spec.m
    size = m * m
    entries = [[sympy.Integer(0)] * size for _ in range(size)]
    for s in range(m):
        for t in range(m):
            column = s * m + t
            for r in range(m):
                for u in range(m):
                    value = _triple_coord(spec, s, r, t, u)
                    if value:
                        entries[u * m + r][column] = to_sympy(value)
    return sympy.Matrix(entries)


def check_lemma_matrix(spec: AlgebraSpec) -> None:
    matrix = lemma_matrix(spec)
    if matrix.rank() < spec.m * spec.m:
        raise LemmaMatrixSingular(
            'The maps x -> v_s x v_t do not span the endomorphisms of the algebra'
        )


def centralizer(spec: AlgebraSpec) -> List[Element]:
    """
    Basis of the center: the kernel of z -> (z v_t - v_t z) over all t.
    """
    m = spec.m
    rows = []
    for t in range(m):
        for w in range(m):
            rows.append([
                to_sympy(spec.constants[u][t][w] - spec.constants[t][u][w]) for u in range(m)
            ])
    kernel = sympy.Matrix(rows).nullspace()
    return [Element((from_sympy(v) for v in vector), spec) for vector in kernel]


def check_central(spec: AlgebraSpec) -> None:
    dimension = len(centralizer(spec))
    if dimension != 1:
        raise NotCentral(f'The center has dimension {dimension}, expected 1')


class CoordTable:
    """
    Coordinate functionals of an algebra: rationals b[i][s][t] with
    sum over s, t of b[i][s][t] * v_s * x * v_t = x_i * v1 for every x.

    Indices are zero-based here; the table is unique for its spec.

    Attributes:
        spec (AlgebraSpec): The algebra the table belongs to.
        entries (Tuple[Tuple[Tuple[Fraction, ...], ...], ...]): b[i][s][t].
    """

    def __init__(self, spec: AlgebraSpec, entries):
        self.spec = spec
        self.entries: Tuple[Tuple[Tuple[Fraction, ...], ...], ...] = tuple(
            tuple(tuple(Fraction(v) for v in row) for row in block) for block in entries
        )

    def __getitem__(self, key: Tuple[int, int, int]) -> Fraction:
        i, s, t = key
        return self.entries[i][s][t]

    def terms(self, i: int) -> Iterator[Tuple[int, int, Fraction]]:
        """Nonzero (s, t, b[i][s][t]) entries of functional i."""
        for s, row in enumerate(self.entries[i]):
            for t, value in enumerate(row):
                if value:
                    yield s, t, value

    def apply(self, i: int, x: Element) -> Element:
        """Evaluate sum b[i][s][t] v_s x v_t, which equals x_i * v1."""
        spec = self.spec
        total = spec.zero()
        for s, t, value in self.terms(i):
            total = total + mul(mul(spec.basis(s), x, spec), spec.basis(t), spec).scale(value)
        return total

    def __eq__(self, other) -> bool:
        if not isinstance(other, CoordTable):
            return NotImplemented
        return self.spec == other.spec and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)


@lru_cache(maxsize=32)
def coordinate_functionals(spec: AlgebraSpec) -> CoordTable:
    """
    Solve lemma_matrix(spec) * b_i = vec(x -> x_i * v1) for every i.

    The right-hand side for functional i is the unit vector at row (0, i),
    so the solutions are the columns i of the inverse matrix.

    Args:
        spec (AlgebraSpec): A validated spec.

    Returns:
        CoordTable: The unique coordinate table.

    Raises:
        LemmaMatrixSingular: If the lemma matrix is singular.
    """
    m = spec.m
    matrix = lemma_matrix(spec)
    if matrix.rank() < m * m:
        raise LemmaMatrixSingular('Coordinate functionals need an invertible lemma matrix')
    inverse = matrix.inv()
    entries = [
        [[from_sympy(inverse[s * m + t, i]) for t in range(m)] for s in range(m)]
        for i in range(m)
    ]
    return CoordTable(spec, entries)


__all__ = [
    'lemma_matrix', 'check_lemma_matrix', 'centralizer', 'check_central',
    'CoordTable', 'coordinate_functionals',
]
