from fractions import Fraction
import pytest
from divpoly.algebra import coordinate_functionals
from divpoly.centralpoly import CentralPoly, ScalarPoly, components, cp_eval
from divpoly.errors import AmbientMismatch, IndexOutOfRange, NotAnIdentity
from divpoly.expression import parse
from divpoly.freepoly import FreePoly, Point, fp_eval, fp_norm
from divpoly.transport import (
    CertificateStep,
    GpiCertificate,
    GpiGeneratorSet,
    evaluate_via_phi,
    flatten_point,
    gpi_certificate,
    gpi_generators,
    intro_generator_count,
    is_identity,
    make_Y,
    normal_form,
    phi,
    psi,
    rewrite,
    transport_for,
    verify_certificate,
)
from helpers import random_centralpoly, random_freepoly, random_point, random_rational, random_word


def y(spec, n, i, j):
    return CentralPoly.variable(spec, n, i - 1, j - 1)


def Y(spec, i, j, n=1):
    return make_Y(spec, coordinate_functionals(spec), i, j, n)


def substitution_element(spec, n=1, i=1):
    total = FreePoly.variable(spec, n, i - 1)
    for j in range(spec.m):
        total = total - Y(spec, i, j + 1, n) * FreePoly.basis(spec, n, j)
    return total


def monomial_cofactor(rng, spec, n, degree):
    return FreePoly(spec, n, {random_word(rng, spec, n, degree): random_rational(rng, 5)})


def kernel_element(rng, spec, gens, summands, degrees):
    """A random sum of left * g * right over generators g, and its decomposition."""
    total = FreePoly.zero(spec, gens.n)
    for _ in range(summands):
        left_degree, right_degree = degrees(rng)
        g = gens[rng.randrange(len(gens))]
        left = monomial_cofactor(rng, spec, gens.n, left_degree)
        right = monomial_cofactor(rng, spec, gens.n, right_degree)
        total = total + left * g * right
    return total


def test_coordinate_functions_match_displays(H):
    assert Y(H, 1, 1) == parse('1/4*(x1 - i*x1*i - j*x1*j - k*x1*k)', H, 1)
    assert Y(H, 1, 2) == parse('1/4*(-x1*i - i*x1 + j*x1*k - k*x1*j)', H, 1)
    assert Y(H, 1, 3) == parse('1/4*(-x1*j - j*x1 + k*x1*i - i*x1*k)', H, 1)
    assert Y(H, 1, 4) == parse('1/4*(i*x1*j - x1*k - k*x1 - j*x1*i)', H, 1)


def test_coordinate_functions_extract_coordinates(rng, other_quaternions):
    spec = other_quaternions
    for _ in range(20):
        a = random_point(rng, spec, 2)
        for i in (1, 2):
            for j in range(1, 5):
                assert fp_eval(Y(spec, i, j, 2), a) == spec.scalar(a[i - 1].coords[j - 1])


def test_coordinate_function_range(H):
    table = coordinate_functionals(H)
    with pytest.raises(IndexOutOfRange):
        make_Y(H, table, 1, 5)
    with pytest.raises(IndexOutOfRange):
        make_Y(H, table, 0, 1)
    with pytest.raises(IndexOutOfRange):
        make_Y(H, table, 3, 1, 2)


def test_phi_of_variable(H, x1):
    expected = y(H, 1, 1, 1) + H.basis(1) * y(H, 1, 1, 2) + H.basis(2) * y(H, 1, 1, 3) + H.basis(3) * y(H, 1, 1, 4)
    assert phi(x1) == expected


def test_phi_of_commutator_with_i(H, x1, unit_i):
    # (y1 + i y2 + j y3 + k y4) i - i (y1 + i y2 + j y3 + k y4)
    #   = (i y1 - y2 - k y3 + j y4) - (i y1 - y2 + k y3 - j y4)
    #   = -2k y3 + 2j y4
    image = phi(x1 * unit_i - unit_i * x1)
    assert image == H.basis(3) * y(H, 1, 1, 3) * -2 + H.basis(2) * y(H, 1, 1, 4) * 2
    # at x1 = j only y3 = 1 survives
    assert image.evaluate([0, 0, 1, 0]) == H.element([0, 0, 0, -2])


def test_phi_kills_the_substitution_element(H):
    assert phi(substitution_element(H)).is_zero()
    assert is_identity(substitution_element(H))


def test_is_identity_examples(H, x1, unit_i):
    assert is_identity(Y(H, 1, 1) * Y(H, 1, 2) - Y(H, 1, 2) * Y(H, 1, 1))
    assert is_identity(unit_i * Y(H, 1, 3) - Y(H, 1, 3) * unit_i)
    assert not is_identity(x1 * unit_i - unit_i * x1)
    assert not is_identity(x1)


def test_psi_examples(H):
    assert psi(y(H, 1, 1, 1)) == Y(H, 1, 1)
    q = H.basis(1) * y(H, 1, 1, 2) + H.basis(2)
    assert psi(q) == FreePoly.basis(H, 1, 1) * Y(H, 1, 2) + FreePoly.basis(H, 1, 2)
    assert psi(y(H, 1, 1, 1) * y(H, 1, 1, 3)) == Y(H, 1, 1) * Y(H, 1, 3)


def test_transport_rejects_mixed_rings(H, other_quaternions):
    with pytest.raises(AmbientMismatch):
        transport_for(H, 1).phi(FreePoly.variable(H, 2, 0))
    with pytest.raises(AmbientMismatch):
        transport_for(H, 1).psi(y(other_quaternions, 1, 1, 1))


def test_phi_inverts_psi(rng, H):
    for _ in range(300):
        q = random_centralpoly(rng, H, 1, max_degree=3, max_terms=3)
        assert phi(psi(q)) == q


def test_psi_phi_differs_by_an_identity(rng, H):
    for _ in range(300):
        p = random_freepoly(rng, H, 1, max_degree=2, max_terms=3)
        assert is_identity(p - normal_form(p))
        assert phi(normal_form(p)) == phi(p)


def test_substitution_formula(rng, H, other_quaternions):
    for count in range(500):
        spec = H if count % 5 else other_quaternions
        n = rng.randint(1, 2)
        f = random_freepoly(rng, spec, n, max_degree=3, max_terms=3)
        a = random_point(rng, spec, n)
        assert fp_eval(f, a) == cp_eval(phi(f), flatten_point(a))
        assert evaluate_via_phi(f, a) == fp_eval(f, a)


def test_phi_is_a_homomorphism(rng, other_quaternions):
    spec = other_quaternions
    for _ in range(80):
        n = rng.randint(1, 2)
        p = random_freepoly(rng, spec, n, max_degree=2, max_terms=3)
        q = random_freepoly(rng, spec, n, max_degree=2, max_terms=3)
        assert phi(p * q) == phi(p) * phi(q)
        assert phi(p + q) == phi(p) + phi(q)


def test_norm_is_central(rng, H):
    for _ in range(200):
        p = random_freepoly(rng, H, 1, max_degree=1, max_terms=3)
        parts = components(phi(p))
        expected = ScalarPoly(1, 4)
        for g in parts:
            expected = expected + g * g
        zero = ScalarPoly(1, 4)
        assert components(phi(fp_norm(p))) == [expected, zero, zero, zero]


def test_generator_counts(H):
    assert len(gpi_generators(H, 1)) == 19
    assert len(gpi_generators(H, 2)) == 2 * 4 * 3 + 28 + 2 == 54
    assert GpiGeneratorSet.expected_size(4, 2) == 54
    assert intro_generator_count(4) == 19 == GpiGeneratorSet.expected_size(4, 1)
    assert intro_generator_count(4) != GpiGeneratorSet.expected_size(4, 2)
    with pytest.raises(IndexOutOfRange):
        gpi_generators(H, 0)


def test_generator_order(H):
    gens = gpi_generators(H, 1)
    assert [len(gens.family(k)) for k in (1, 2, 3)] == [12, 6, 1]
    assert [g.family for g in gens.generators] == [1] * 12 + [2] * 6 + [3]
    assert gens[18] == substitution_element(H)
    assert gens[gens.swap_index[(0, 1)]] == Y(H, 1, 1) * Y(H, 1, 2) - Y(H, 1, 2) * Y(H, 1, 1)


@pytest.mark.parametrize('n', [1, 2])
def test_generators_are_identities(H, other_quaternions, n):
    for spec in (H, other_quaternions):
        gens = gpi_generators(spec, n)
        assert len(gens) == GpiGeneratorSet.expected_size(4, n)
        assert all(phi(g).is_zero() for g in gens)


def test_generators_vanish_at_points(rng, H):
    gens = gpi_generators(H, 1)
    for _ in range(5):
        a = random_point(rng, H, 1)
        assert all(fp_eval(g, a).is_zero() for g in gens)


def test_certificate_of_a_generator(H):
    gens = gpi_generators(H, 1)
    one = FreePoly.one(H, 1)
    certificate = gpi_certificate(gens[18])
    assert len(certificate) == 1
    assert certificate.steps[0] == CertificateStep(one, 18, one)
    assert verify_certificate(certificate)


def test_certificate_of_two_sided_multiple(H):
    gens = gpi_generators(H, 1)
    unit_i, unit_j = FreePoly.basis(H, 1, 1), FreePoly.basis(H, 1, 2)
    p = unit_i * gens[gens.swap_index[(1, 3)]] * unit_j
    certificate = gpi_certificate(p)
    assert certificate.target == p
    assert verify_certificate(certificate)


def test_certificate_rejects_non_identities(H, x1, unit_i):
    with pytest.raises(NotAnIdentity):
        gpi_certificate(x1 * unit_i - unit_i * x1)
    with pytest.raises(NotAnIdentity):
        gpi_certificate(FreePoly.one(H, 1))


def test_empty_certificates(H, x1):
    zero = FreePoly.zero(H, 1)
    assert verify_certificate(GpiCertificate(zero, []))
    assert not verify_certificate(GpiCertificate(x1, []))
    assert gpi_certificate(zero).steps == []


def test_certificate_rejects_bad_generator_index(H):
    one = FreePoly.one(H, 1)
    gens = gpi_generators(H, 1)
    assert not verify_certificate(GpiCertificate(gens[0], [CertificateStep(one, 19, one)]))
    assert not verify_certificate(GpiCertificate(gens[0], [CertificateStep(one, -1, one)]))


def test_certificates_for_random_identities(rng, H):
    gens = gpi_generators(H, 1)

    def quadratic(rng):
        return rng.randint(0, 2), rng.randint(0, 2)

    for _ in range(100):
        p = kernel_element(rng, H, gens, rng.randint(1, 2), quadratic)
        certificate = gpi_certificate(p)
        assert verify_certificate(certificate)
        if not certificate.steps:
            assert p.is_zero()
            continue
        first = certificate.steps[0]
        mutated = GpiCertificate(p, [first._replace(left=first.left + 1)] + certificate.steps[1:])
        assert not verify_certificate(mutated)


def test_certificates_in_two_variables(rng, H):
    gens = gpi_generators(H, 2)
    for _ in range(5):
        p = kernel_element(rng, H, gens, 1, lambda rng: (0, rng.randint(0, 1)))
        assert verify_certificate(gpi_certificate(p))


def test_rewrite_leaves_phi_image(rng, H):
    for _ in range(20):
        p = random_freepoly(rng, H, 1, max_degree=2, max_terms=2)
        steps, remainder = rewrite(p)
        assert remainder == phi(p)
        total = psi(remainder)
        gens = gpi_generators(H, 1)
        for step in steps:
            total = total + step.left * gens[step.generator] * step.right
        assert total == p


def test_evaluation_through_phi_on_a_known_point(H):
    p = parse('x1*i - i*x1', H, 1)
    a = Point.from_rationals([[0, 0, 1, 0]], H)
    assert evaluate_via_phi(p, a) == H.element([0, 0, 0, -2])
    assert flatten_point(a) == [Fraction(0), Fraction(0), Fraction(1), Fraction(0)]
