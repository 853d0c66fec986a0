import logging
from fractions import Fraction
import pytest
from divpoly.errors import ArtifactError, DigestMismatch, LemmaMatrixSingular
from divpoly.nullstellensatz import RadicalCertificate, ideal_equal, make_ideal
from divpoly.serialization import (
    algebra_to_json,
    centralpoly_from_json,
    centralpoly_to_json,
    certificate_from_json,
    certificate_to_json,
    decode_rational,
    dump_algebra,
    encode_rational,
    freepoly_from_json,
    freepoly_to_json,
    ideal_from_json,
    ideal_to_json,
    load_algebra,
    load_artifact,
    load_ideal,
    radical_from_json,
    radical_to_json,
    save_artifact,
    save_ideal,
    unwrap,
    wrap,
)
from divpoly.transport import gpi_certificate, gpi_generators, verify_certificate
from divpoly.utils import CalculatedHash, GenericFile, canonical_json
from helpers import gaussian_rationals_constants, random_centralpoly, random_freepoly


def test_rationals():
    assert encode_rational(Fraction(-3, 6)) == '-1/2'
    assert decode_rational('-1/2') == Fraction(-1, 2)
    assert decode_rational(3) == 3
    for bad in ('0.5', '1/0', None, 'x'):
        with pytest.raises(ArtifactError):
            decode_rational(bad)


def test_envelope():
    document = wrap('ideal', {'n': 1})
    assert document['format'] == 'DIVPOLYv1'
    assert document['digest'] == CalculatedHash(canonical_json({'n': 1})).value
    assert unwrap(document, 'ideal') == {'n': 1}
    with pytest.raises(ArtifactError):
        unwrap(document, 'gpi-certificate')
    with pytest.raises(ArtifactError):
        unwrap({'payload': {}}, 'ideal')
    document['payload']['n'] = 2
    with pytest.raises(DigestMismatch):
        unwrap(document, 'ideal')


def test_digest_ignores_key_order():
    assert CalculatedHash.of_payload({'a': 1, 'b': 2}).value == CalculatedHash.of_payload({'b': 2, 'a': 1}).value


def test_freepoly_codec_is_one_based(H, x1, unit_i):
    data = freepoly_to_json(x1 * unit_i)
    assert data == [{'coef': '1', 'bases': [1, 2], 'vars': [1]}]
    assert freepoly_from_json(data, H, 1) == x1 * unit_i


def test_freepoly_codec(rng, H):
    for _ in range(20):
        p = random_freepoly(rng, H, 2)
        assert freepoly_from_json(freepoly_to_json(p), H, 2) == p


def test_algebra_files(tmp_path, H, other_quaternions):
    assert load_algebra(None) is H
    assert load_algebra('quaternion') is H
    bare = tmp_path / 'bare.json'
    GenericFile(bare).write_json(algebra_to_json(other_quaternions))
    assert load_algebra(str(bare)) == other_quaternions
    wrapped = tmp_path / 'wrapped.json'
    GenericFile(wrapped).write_json(dump_algebra(other_quaternions))
    assert load_algebra(str(wrapped)).labels == other_quaternions.labels
    rejected = tmp_path / 'rejected.json'
    GenericFile(rejected).write_json({'m': 2, 'constants': gaussian_rationals_constants()})
    with pytest.raises(LemmaMatrixSingular):
        load_algebra(str(rejected))


def test_ideal_file(tmp_path, ideal_at_i):
    path = tmp_path / 'ideal.json'
    save_ideal(str(path), ideal_at_i)
    loaded = load_ideal(str(path))
    assert loaded.n == 1
    assert loaded.generators == ideal_at_i.generators
    assert loaded.gb == ideal_at_i.gb
    assert ideal_equal(loaded, ideal_at_i)


def test_stale_basis_cache_is_recomputed(caplog, ideal_at_i, H, x1):
    payload = ideal_to_json(ideal_at_i)
    payload['groebner'] = ideal_to_json(make_ideal([x1]))['groebner']
    with caplog.at_level(logging.WARNING, logger='divpoly'):
        ideal = ideal_from_json(payload)
    assert ideal.gb == ideal_at_i.gb
    assert 'does not match' in caplog.text


def test_ideal_without_algebra_defaults_to_quaternions(H, x1, unit_i):
    payload = {'n': 1, 'generators': [freepoly_to_json(x1 - unit_i)]}
    assert ideal_from_json(payload).spec == H
    with pytest.raises(ArtifactError):
        ideal_from_json({'n': -1, 'generators': []})
    with pytest.raises(ArtifactError):
        ideal_from_json({'n': 1})


def test_certificate_codec(tmp_path, H):
    gens = gpi_generators(H, 1)
    certificate = gpi_certificate(gens[3] * gens[18])
    path = tmp_path / 'cert.json'
    save_artifact(str(path), 'gpi-certificate', certificate_to_json(certificate))
    loaded = certificate_from_json(load_artifact(str(path), 'gpi-certificate'))
    assert loaded.target == certificate.target
    assert loaded.steps == certificate.steps
    assert verify_certificate(loaded)


def test_certificate_index_must_be_integer(H):
    payload = certificate_to_json(gpi_certificate(gpi_generators(H, 1)[0]))
    payload['steps'][0]['gen'] = '0'
    with pytest.raises(ArtifactError):
        certificate_from_json(payload)


def test_radical_codec(tmp_path, x1, unit_i):
    certificate = RadicalCertificate(x1 - unit_i, 2, [x1])
    assert radical_from_json(radical_to_json(certificate)) == certificate
    path = tmp_path / 'bare.json'
    GenericFile(path).write_json({'n': 1, 'f': freepoly_to_json(x1), 'm': 1})
    assert radical_from_json(load_artifact(str(path), 'radical-certificate', allow_bare=True)).witnesses == []
    with pytest.raises(ArtifactError):
        load_artifact(str(path), 'radical-certificate')


def test_broken_json(tmp_path):
    path = tmp_path / 'broken.json'
    GenericFile(path).write_file('{')
    with pytest.raises(ArtifactError):
        load_artifact(str(path), 'ideal')


def test_centralpoly_codec(rng, H):
    q = random_centralpoly(rng, H, 1)
    assert centralpoly_from_json(centralpoly_to_json(q), H, 1) == q
    with pytest.raises(ArtifactError):
        centralpoly_from_json([{'coef': ['1'], 'exponents': [0, 0, 0, 0]}], H, 1)


def test_boolean_exponent_is_rejected(x1):
    payload = {'n': 1, 'f': freepoly_to_json(x1), 'm': True}
    with pytest.raises(ArtifactError):
        radical_from_json(payload)
    with pytest.raises(ArtifactError):
        radical_from_json({'n': True, 'f': [], 'm': 1})


def test_exponent_lists_must_hold_integers(H):
    with pytest.raises(ArtifactError):
        centralpoly_from_json([{'coef': ['1', '0', '0', '0'], 'exponents': ['0', 0, 0, 0]}], H, 1)
    with pytest.raises(ArtifactError):
        centralpoly_from_json({'coef': []}, H, 1)
