from .rational import Rational, to_rational, format_rational
from .element import Element, mul, inverse, conj, element_norm
from .spec import AlgebraSpec, make_algebra, quaternion_algebra
from .linear import CoordTable, lemma_matrix, coordinate_functionals, centralizer

__all__ = [
    'Rational', 'to_rational', 'format_rational',
    'Element', 'mul', 'inverse', 'conj', 'element_norm',
    'AlgebraSpec', 'make_algebra', 'quaternion_algebra',
    'CoordTable', 'lemma_matrix', 'coordinate_functionals', 'centralizer',
]
