from .algebra import (
    AlgebraSpec,
    CoordTable,
    Element,
    conj,
    coordinate_functionals,
    element_norm,
    inverse,
    make_algebra,
    mul,
    quaternion_algebra,
)
from .centralpoly import CentralPoly, ScalarPoly, components, recombine
from .errors import DivpolyError
from .expression import parse, parse_central, render
from .freepoly import FreePoly, Point, fp_conj, fp_eval, fp_norm
from .groebner import GroebnerBasis, buchberger, divide, reduce
from .nullstellensatz import (
    IdealHandle,
    RadicalCertificate,
    make_ideal,
    member,
    qpoint,
    rho,
    scan_zero_locus,
    vanishes,
    verify_radical_certificate,
)
from .transport import (
    GpiCertificate,
    gpi_certificate,
    gpi_generators,
    is_identity,
    make_Y,
    phi,
    psi,
    verify_certificate,
)

__all__ = [
    'AlgebraSpec', 'CoordTable', 'Element', 'conj', 'coordinate_functionals', 'element_norm',
    'inverse', 'make_algebra', 'mul', 'quaternion_algebra',
    'CentralPoly', 'ScalarPoly', 'components', 'recombine',
    'DivpolyError',
    'parse', 'parse_central', 'render',
    'FreePoly', 'Point', 'fp_conj', 'fp_eval', 'fp_norm',
    'GroebnerBasis', 'buchberger', 'divide', 'reduce',
    'IdealHandle', 'RadicalCertificate', 'make_ideal', 'member', 'qpoint', 'rho',
    'scan_zero_locus', 'vanishes', 'verify_radical_certificate',
    'GpiCertificate', 'gpi_certificate', 'gpi_generators', 'is_identity', 'make_Y', 'phi',
    'psi', 'verify_certificate',
]
