"""
Two-sided ideals of the polynomial function ring and their commutative
shadows.

An ideal of D[x_1..x_n] generated by f_1..f_r corresponds to the ideal I'
of F[y_ij] generated by all components of phi(f_1)..phi(f_r); membership of
f is decided by reducing the components of phi(f) modulo a Gröbner basis
of I'. Zero loci are only ever sampled at user supplied rational points.
"""
import logging
from fractions import Fraction
from typing import Iterable, List, NamedTuple, Optional, Sequence
from .algebra import AlgebraSpec, quaternion_algebra
from .algebra.rational import RationalLike
from .centralpoly import CentralPoly, ScalarPoly, components
from .errors import AmbientMismatch, BadExponent, NotQuaternionAmbient
from .freepoly import FreePoly, Point, fp_norm
from .groebner import GroebnerBasis, buchberger, contains_ideal
from .transport import flatten_point, phi, psi

logger = logging.getLogger(__name__)

QPoint = Point


def qpoint(rows: Sequence[Sequence[RationalLike]]) -> QPoint:
    """A point of H^n from n quadruples of rational coordinates."""
    return Point.from_rationals(rows, quaternion_algebra())


def rho(a: QPoint) -> List[Fraction]:
    """
    The bijection H^n -> Q^(4n): (a_11, a_12, a_13, a_14, a_21, ...).

    Satisfies f(a) == cp_eval(phi(f), rho(a)) for every f.
    """
    if not a.spec.is_quaternion:
        raise NotQuaternionAmbient('rho is defined on points of H^n')
    return flatten_point(a)


class IdealHandle:
    """
    Two-sided ideal given by generators, with its commutative
    correspondent.

    The correspondence holds for any central division algebra: the two-sided
    ideal generated by phi(gens) in D tensor F[y] is D tensor I', where I'
    is generated by the components of phi(gens), because the basis of D is
    spanned by two-sided multiplications.

    Attributes:
        spec (AlgebraSpec): Ambient algebra.
        n (int): Number of variables.
        generators (List[FreePoly]): Generators of the two-sided ideal.
        scalar_generators (List[ScalarPoly]): Nonzero components of the
            phi images, generator by generator.
        gb (GroebnerBasis): Reduced basis of the ideal they generate.
    """

    def __init__(
            self,
            spec: AlgebraSpec,
            n: int,
            generators: Sequence[FreePoly],
            scalar_generators: Sequence[ScalarPoly],
            gb: GroebnerBasis
        ):
        self.spec = spec
        self.n = n
        self.generators: List[FreePoly] = list(generators)
        self.scalar_generators: List[ScalarPoly] = list(scalar_generators)
        self.gb = gb

    def __repr__(self) -> str:
        return f"IdealHandle(n={self.n}, generators=[{', '.join(str(g) for g in self.generators)}])"

    def is_unit(self) -> bool:
        return self.gb.is_unit_ideal()

    def is_zero(self) -> bool:
        return not self.gb.generators

    def check(self, p: FreePoly) -> None:
        if p.n != self.n or (p.spec is not self.spec and p.spec != self.spec):
            raise AmbientMismatch(f'Polynomial with n={p.n} does not live in the ideal ring (n={self.n})')


def scalar_generators_of(gens: Sequence[FreePoly]) -> List[ScalarPoly]:
    derived: List[ScalarPoly] = []
    for g in gens:
        derived.extend(part for part in components(phi(g)) if not part.is_zero())
    return derived


def make_ideal(
        gens: Sequence[FreePoly],
        spec: Optional[AlgebraSpec] = None,
        n: Optional[int] = None
    ) -> IdealHandle:
    """
    Build the handle of the two-sided ideal generated by gens.

    Args:
        gens (Sequence[FreePoly]): Generators sharing one ring.
        spec (Optional[AlgebraSpec]): Ambient; defaults to that of gens, or
            the quaternions when gens is empty.
        n (Optional[int]): Variable count; required when gens is empty.

    Returns:
        IdealHandle: With derived scalar generators and reduced basis.

    Raises:
        AmbientMismatch: If the generators live in different rings.
    """
    gens = list(gens)
    if gens:
        spec = gens[0].spec if spec is None else spec
        n = gens[0].n if n is None else n
    spec = quaternion_algebra() if spec is None else spec
    n = 1 if n is None else n
    for g in gens:
        if g.n != n or (g.spec is not spec and g.spec != spec):
            raise AmbientMismatch('Ideal generators must share the algebra and the variable count')
    derived = scalar_generators_of(gens)
    gb = buchberger(derived, n, spec.m)
    logger.debug('Ideal with %d generators: %d scalar generators, basis of %d', len(gens), len(derived), len(gb))
    return IdealHandle(spec, n, gens, derived, gb)


def _central_member(q: CentralPoly, ideal: IdealHandle) -> bool:
    return all(ideal.gb.contains(part) for part in components(q))


def member(f: FreePoly, ideal: IdealHandle) -> bool:
    """
    Whether f lies in the two-sided ideal: every component of phi(f)
    reduces to zero modulo the basis.
    """
    ideal.check(f)
    return _central_member(phi(f), ideal)


def vanishes(ideal: IdealHandle, a: Point) -> bool:
    """Whether every generator, hence every element, is zero at a."""
    if len(a) != ideal.n:
        raise AmbientMismatch(f'Point of length {len(a)} does not match n={ideal.n}')
    return all(g.evaluate(a).is_zero() for g in ideal.generators)


def scan_zero_locus(ideal: IdealHandle, candidates: Iterable[Point]) -> List[Point]:
    return [a for a in candidates if vanishes(ideal, a)]


def point_ideal(a: Point) -> IdealHandle:
    """The ideal (x_1 - a_1, ..., x_n - a_n) of a rational point."""
    n = len(a)
    gens = [
        FreePoly.variable(a.spec, n, i) - FreePoly.constant(a.spec, n, value)
        for i, value in enumerate(a)
    ]
    return make_ideal(gens, a.spec, n)


def _same_ring(first: IdealHandle, second: IdealHandle) -> None:
    if first.n != second.n or first.spec != second.spec:
        raise AmbientMismatch('Ideals live in different rings')


def ideal_sum(first: IdealHandle, second: IdealHandle) -> IdealHandle:
    _same_ring(first, second)
    return make_ideal(first.generators + second.generators, first.spec, first.n)


def ideal_product(first: IdealHandle, second: IdealHandle) -> IdealHandle:
    """
    Product ideal; its correspondent is generated by the pairwise products
    of scalar generators, and its generators are their psi images.
    """
    _same_ring(first, second)
    spec, n = first.spec, first.n
    gens = [
        psi((a * b).to_central(spec))
        for a in first.scalar_generators for b in second.scalar_generators
    ]
    return make_ideal(gens, spec, n)


def ideal_contains(outer: IdealHandle, inner: IdealHandle) -> bool:
    """True when inner is a subset of outer."""
    _same_ring(outer, inner)
    return contains_ideal(outer.gb, inner.gb)


def ideal_equal(first: IdealHandle, second: IdealHandle) -> bool:
    _same_ring(first, second)
    return first.gb == second.gb


class RadicalCertificate(NamedTuple):
    """
    Claim that (f conj(f))^m + sum of w conj(w) over the witnesses lies in
    an ideal, placing f in its quaternionic radical.
    """

    f: FreePoly
    m: int
    witnesses: List[FreePoly]


def _require_quaternion(spec: AlgebraSpec) -> None:
    if not spec.is_quaternion:
        raise NotQuaternionAmbient('Radical certificates need the quaternion ambient')


def radical_image(certificate: RadicalCertificate) -> CentralPoly:
    """phi of (f conj(f))^m + sum of w conj(w); a scalar valued polynomial."""
    if not isinstance(certificate.m, int) or certificate.m < 1:
        raise BadExponent(f'Radical exponent must be at least 1, got {certificate.m!r}')
    _require_quaternion(certificate.f.spec)
    total = phi(fp_norm(certificate.f)) ** certificate.m
    for w in certificate.witnesses:
        total = total + phi(fp_norm(w))
    return total


def verify_radical_certificate(certificate: RadicalCertificate, ideal: IdealHandle) -> bool:
    """
    Check a quaternionic radical certificate against an ideal.

    phi is a ring homomorphism, so the power and the sum are formed on the
    central side before the membership test.

    Raises:
        BadExponent: If the exponent is below 1.
        AmbientMismatch: If f or a witness lives in another ring.
    """
    ideal.check(certificate.f)
    for w in certificate.witnesses:
        ideal.check(w)
    return _central_member(radical_image(certificate), ideal)


def multiply_radical_certificates(first: RadicalCertificate, second: RadicalCertificate) -> RadicalCertificate:
    """
    Combine certificates for the same f against ideals I and J into one
    against their product.

    With N the norm, (N(f)^a + sum N(u))(N(f)^b + sum N(w)) expands to
    N(f)^(a+b) plus norms of f^a w, u f^b and u w, since norms are central
    and multiplicative as functions.
    """
    if first.f != second.f:
        raise AmbientMismatch('Certificates must be for the same polynomial')
    f = first.f
    witnesses = [f ** first.m * w for w in second.witnesses]
    witnesses += [u * f ** second.m for u in first.witnesses]
    witnesses += [u * w for u in first.witnesses for w in second.witnesses]
    return RadicalCertificate(f, first.m + second.m, witnesses)


def refutes_quaternionic(ideal: IdealHandle, fs: Sequence[FreePoly]) -> bool:
    """
    Whether fs witnesses that the ideal is not quaternionic: the sum of
    their norms lies in the ideal while some f does not.
    """
    if not fs:
        return False
    _require_quaternion(ideal.spec)
    for f in fs:
        ideal.check(f)
    total = phi(fp_norm(fs[0]))
    for f in fs[1:]:
        total = total + phi(fp_norm(f))
    return _central_member(total, ideal) and not all(member(f, ideal) for f in fs)


__all__ = [
    'QPoint', 'qpoint', 'rho', 'IdealHandle', 'scalar_generators_of', 'make_ideal', 'member',
    'vanishes', 'scan_zero_locus', 'point_ideal', 'ideal_sum', 'ideal_product',
    'ideal_contains', 'ideal_equal', 'RadicalCertificate', 'radical_image',
    'verify_radical_certificate', 'multiply_radical_certificates', 'refutes_quaternionic',
]
