from fractions import Fraction
import pytest
from divpoly.centralpoly import ScalarPoly
from divpoly.errors import AmbientMismatch, BadExponent, NotQuaternionAmbient
from divpoly.freepoly import FreePoly, Point, fp_eval, fp_norm
from divpoly.nullstellensatz import (
    RadicalCertificate,
    ideal_contains,
    ideal_equal,
    ideal_product,
    ideal_sum,
    make_ideal,
    member,
    multiply_radical_certificates,
    point_ideal,
    qpoint,
    radical_image,
    refutes_quaternionic,
    rho,
    scan_zero_locus,
    vanishes,
    verify_radical_certificate,
)
from divpoly.transport import phi
from helpers import random_freepoly, random_point, random_word, random_rational

I_POINT = [[0, 1, 0, 0]]
J_POINT = [[0, 0, 1, 0]]


def y(i, j):
    return ScalarPoly.variable(1, 4, i - 1, j - 1)


def cofactor(rng, spec, degree):
    return FreePoly(spec, 1, {random_word(rng, spec, 1, degree): random_rational(rng, 5)})


def combination(rng, ideal, summands=2):
    """A random element sum of left * g * right over the generators of ideal."""
    total = FreePoly.zero(ideal.spec, ideal.n)
    for _ in range(summands):
        g = ideal.generators[rng.randrange(len(ideal.generators))]
        total = total + cofactor(rng, ideal.spec, rng.randint(0, 1)) * g * cofactor(rng, ideal.spec, rng.randint(0, 1))
    return total


def test_rho_flattens_coordinates(H):
    assert rho(qpoint([[1, 2, 3, 4]])) == [1, 2, 3, 4]
    assert rho(qpoint([[0, 1, 0, 0], [0, 0, 1, 0]])) == [0, 1, 0, 0, 0, 0, 1, 0]
    assert all(isinstance(c, Fraction) for c in rho(qpoint([[1, 2, 3, 4]])))


def test_rho_requires_quaternions(other_quaternions):
    with pytest.raises(NotQuaternionAmbient):
        rho(Point.from_rationals([[1, 0, 0, 0]], other_quaternions))


def test_evaluation_through_rho(rng, H):
    for _ in range(300):
        n = rng.randint(1, 2)
        f = random_freepoly(rng, H, n, max_degree=2, max_terms=3)
        a = random_point(rng, H, n)
        assert fp_eval(f, a) == phi(f).evaluate(rho(a))


def test_derived_generators_of_point_ideal(ideal_at_i):
    assert ideal_at_i.scalar_generators == [y(1, 1), y(1, 2) - 1, y(1, 3), y(1, 4)]
    assert set(ideal_at_i.gb.generators) == {y(1, 1), y(1, 2) - 1, y(1, 3), y(1, 4)}
    assert not ideal_at_i.is_unit()
    assert not ideal_at_i.is_zero()


def test_zero_and_unit_ideals(H):
    zero = make_ideal([])
    assert zero.is_zero()
    assert zero.gb.generators == ()
    unit = make_ideal([FreePoly.one(H, 1)])
    assert unit.is_unit()
    assert member(FreePoly.variable(H, 1, 0), unit)


def test_make_ideal_checks_rings(H, x1):
    with pytest.raises(AmbientMismatch):
        make_ideal([x1, FreePoly.variable(H, 2, 1)])


def test_membership_worked_example(H, x1, unit_i, ideal_at_i):
    # x1^2 + 1 = x1 (x1 - i) + (x1 - i) i in the free product
    assert x1 * (x1 - unit_i) + (x1 - unit_i) * unit_i == x1 * x1 + 1
    assert member(x1 * x1 + 1, ideal_at_i)
    # x1 takes the value i at the zero i, so it cannot be a member
    assert not fp_eval(x1, qpoint(I_POINT)).is_zero()
    assert not member(x1, ideal_at_i)
    assert member(x1 - unit_i, ideal_at_i)


def test_member_checks_ring(H, ideal_at_i):
    with pytest.raises(AmbientMismatch):
        member(FreePoly.variable(H, 2, 0), ideal_at_i)


def test_membership_of_combinations(rng, H, ideal_at_i):
    other = make_ideal([fp_norm(FreePoly.variable(H, 1, 0)) - 1, FreePoly.variable(H, 1, 0) * FreePoly.basis(H, 1, 2)])
    for ideal in (ideal_at_i, other):
        for _ in range(20):
            assert member(combination(rng, ideal), ideal)


def test_members_vanish_on_the_zero_locus(rng, H, ideal_at_i):
    candidates = [random_point(rng, H, 1) for _ in range(99)] + [qpoint(I_POINT)]
    zeros = scan_zero_locus(ideal_at_i, candidates)
    assert qpoint(I_POINT) in zeros
    assert all(a == qpoint(I_POINT) for a in zeros)
    for _ in range(20):
        h = combination(rng, ideal_at_i)
        assert member(h, ideal_at_i)
        assert all(fp_eval(h, a).is_zero() for a in zeros)


def test_vanishes(H, ideal_at_i):
    assert vanishes(ideal_at_i, qpoint(I_POINT))
    assert not vanishes(ideal_at_i, qpoint(J_POINT))
    assert vanishes(make_ideal([]), qpoint(J_POINT))
    with pytest.raises(AmbientMismatch):
        vanishes(ideal_at_i, qpoint([[0, 1, 0, 0], [0, 1, 0, 0]]))


def test_scan_zero_locus(H, ideal_at_i):
    candidates = [qpoint(I_POINT), qpoint(J_POINT), qpoint([[1, 0, 0, 0]])]
    assert scan_zero_locus(ideal_at_i, candidates) == [qpoint(I_POINT)]
    assert scan_zero_locus(make_ideal([]), candidates) == candidates
    assert scan_zero_locus(make_ideal([FreePoly.one(H, 1)]), candidates) == []


def test_point_ideal(H, ideal_at_i):
    assert ideal_equal(point_ideal(qpoint(I_POINT)), ideal_at_i)
    assert vanishes(point_ideal(qpoint([[1, 2, 3, 4]])), qpoint([[1, 2, 3, 4]]))


def test_ideal_operations(ideal_at_i):
    at_j = point_ideal(qpoint(J_POINT))
    assert ideal_sum(ideal_at_i, at_j).is_unit()
    product = ideal_product(ideal_at_i, at_j)
    assert ideal_contains(ideal_at_i, product)
    assert ideal_contains(at_j, product)
    assert not ideal_contains(product, ideal_at_i)
    assert not ideal_equal(ideal_at_i, at_j)
    assert vanishes(product, qpoint(I_POINT))
    assert vanishes(product, qpoint(J_POINT))


def test_ideal_operations_check_rings(H, ideal_at_i):
    two = make_ideal([FreePoly.variable(H, 2, 1)])
    with pytest.raises(AmbientMismatch):
        ideal_sum(ideal_at_i, two)


def test_basis_does_not_depend_on_generator_order(rng, H):
    for _ in range(10):
        gens = [random_freepoly(rng, H, 1, max_degree=1, max_terms=2) for _ in range(3)]
        first = make_ideal(gens, H, 1)
        second = make_ideal(list(reversed(gens)), H, 1)
        assert first.gb == second.gb


def test_radical_certificate_for_a_norm_generator(H, x1, unit_i):
    f = x1 - unit_i
    ideal = make_ideal([fp_norm(f)])
    assert verify_radical_certificate(RadicalCertificate(f, 1, []), ideal)


def test_radical_certificate_worked_example(H, x1, unit_i, ideal_at_i):
    assert verify_radical_certificate(RadicalCertificate(x1 - unit_i, 1, []), ideal_at_i)
    # x1 - j takes the value i - j at the zero i, so no certificate can exist
    f = x1 - FreePoly.basis(H, 1, 2)
    assert not fp_eval(f, qpoint(I_POINT)).is_zero()
    assert not verify_radical_certificate(RadicalCertificate(f, 1, []), ideal_at_i)
    assert not verify_radical_certificate(RadicalCertificate(f, 3, [x1]), ideal_at_i)


def test_radical_certificate_with_witnesses(H, x1):
    # no real point makes |x1|^2 + |x1 - 1|^2 vanish
    ideal = make_ideal([fp_norm(x1) + fp_norm(x1 - 1)])
    assert verify_radical_certificate(RadicalCertificate(x1, 1, [x1 - 1]), ideal)
    assert not verify_radical_certificate(RadicalCertificate(x1, 1, []), ideal)


def test_radical_exponent_must_be_positive(x1, ideal_at_i):
    with pytest.raises(BadExponent):
        verify_radical_certificate(RadicalCertificate(x1, 0, []), ideal_at_i)
    with pytest.raises(BadExponent):
        radical_image(RadicalCertificate(x1, -1, []))


def test_radical_requires_quaternions(other_quaternions):
    x = FreePoly.variable(other_quaternions, 1, 0)
    ideal = make_ideal([x])
    with pytest.raises(NotQuaternionAmbient):
        verify_radical_certificate(RadicalCertificate(x, 1, []), ideal)


def test_radical_image_is_scalar(rng, H):
    for _ in range(20):
        f = random_freepoly(rng, H, 1, max_degree=1, max_terms=2)
        w = random_freepoly(rng, H, 1, max_degree=1, max_terms=2)
        image = radical_image(RadicalCertificate(f, 2, [w]))
        assert all(value.is_scalar() for value in image.terms.values())


def test_accepted_certificates_vanish_on_the_zero_locus(rng, H, ideal_at_i):
    zero = qpoint(I_POINT)
    for _ in range(20):
        g = ideal_at_i.generators[0]
        f = cofactor(rng, H, 1) * g * cofactor(rng, H, 0)
        certificate = RadicalCertificate(f, rng.randint(1, 2), [])
        assert verify_radical_certificate(certificate, ideal_at_i)
        assert fp_eval(certificate.f, zero).is_zero()


def test_product_of_certificates(H, x1, unit_i, ideal_at_i):
    f = x1 - unit_i
    norm_ideal = make_ideal([fp_norm(f)])
    first = RadicalCertificate(f, 1, [])
    second = RadicalCertificate(f, 1, [])
    combined = multiply_radical_certificates(first, second)
    assert combined.m == 2
    assert verify_radical_certificate(combined, ideal_product(ideal_at_i, norm_ideal))


def test_product_of_certificates_with_witnesses(H, x1):
    ideal = make_ideal([fp_norm(x1) + fp_norm(x1 - 1)])
    certificate = RadicalCertificate(x1, 1, [x1 - 1])
    combined = multiply_radical_certificates(certificate, certificate)
    assert combined.m == 2
    assert len(combined.witnesses) == 3
    assert verify_radical_certificate(combined, ideal_product(ideal, ideal))


def test_product_needs_the_same_polynomial(x1, unit_i):
    with pytest.raises(AmbientMismatch):
        multiply_radical_certificates(RadicalCertificate(x1, 1, []), RadicalCertificate(x1 - unit_i, 1, []))


def test_refutes_quaternionic(H, x1, unit_i, ideal_at_i):
    norm_ideal = make_ideal([fp_norm(x1)])
    assert refutes_quaternionic(norm_ideal, [x1])
    assert not refutes_quaternionic(ideal_at_i, [x1 - unit_i])
    assert not refutes_quaternionic(ideal_at_i, [x1])
    assert not refutes_quaternionic(ideal_at_i, [])
