"""
JSON codecs for algebras, polynomials, ideals and certificates.

Artifacts are wrapped as {"format", "kind", "payload", "digest"} where the
digest is the SHA-256 of the canonical payload JSON; every payload carries
its algebra and variable count so files are self-describing.
"""
import logging
from fractions import Fraction
from typing import Any, Dict, List, Sequence, Union
from .algebra import AlgebraSpec, format_rational, make_algebra, quaternion_algebra, to_rational
from .centralpoly import CentralPoly, ScalarPoly
from .core import FORMAT_HEADER, QUATERNION
from .errors import ArtifactError, DigestMismatch, DivpolyError
from .freepoly import FreePoly, Point, Word
from .groebner import buchberger
from .nullstellensatz import IdealHandle, RadicalCertificate, make_ideal
from .transport import CertificateStep, GpiCertificate
from .utils import CalculatedHash, GenericFile

logger = logging.getLogger(__name__)

Json = Dict[str, Any]


def encode_rational(value: Fraction) -> str:
    return format_rational(value)


def decode_rational(value: Any) -> Fraction:
    try:
        return to_rational(value)
    except (DivpolyError, TypeError, ValueError, ZeroDivisionError) as e:
        raise ArtifactError(f'Bad rational {value!r}: {e}')


def _field(document: Json, name: str) -> Any:
    try:
        return document[name]
    except (KeyError, TypeError):
        raise ArtifactError(f'Missing field {name!r}')



def _is_integer(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def _list(value: Any, name: str) -> List[Any]:
    if not isinstance(value, list):
        raise ArtifactError(f'Field {name!r} must be a JSON list, got {value!r}')
    return value


def _indices(document: Json, name: str) -> List[int]:
    values = _list(_field(document, name), name)
    if not all(_is_integer(v) for v in values):
        raise ArtifactError(f'Field {name!r} must hold integers, got {values!r}')
    return values


# algebras

def algebra_to_json(spec: AlgebraSpec) -> Json:
    return {
        'm': spec.m,
        'labels': list(spec.labels),
        'constants': [[[encode_rational(c) for c in cell] for cell in row] for row in spec.constants],
    }


def algebra_from_json(document: Json) -> AlgebraSpec:
    """Rebuild and validate an algebra; validation errors propagate."""
    m = _field(document, 'm')
    constants = [[[decode_rational(c) for c in cell] for cell in row] for row in _field(document, 'constants')]
    if not isinstance(m, int):
        raise ArtifactError(f'Dimension must be an integer, got {m!r}')
    return make_algebra(m, constants, document.get('labels'))


def load_algebra(source: Union[str, None]) -> AlgebraSpec:
    """
    Resolve an algebra by name or file.

    Args:
        source: 'quaternion' (or None) for the built-in quaternions, or a
            path to a JSON file holding either a bare spec object or an
            'algebra' artifact.
    """
    if source is None or source == QUATERNION:
        return quaternion_algebra()
    document = GenericFile(source).read_json()
    if isinstance(document, dict) and 'format' in document:
        document = unwrap(document, 'algebra')
    return algebra_from_json(document)


def dump_algebra(spec: AlgebraSpec) -> Json:
    return wrap('algebra', algebra_to_json(spec))


# polynomials

def freepoly_to_json(p: FreePoly) -> List[Json]:
    return [
        {
            'coef': encode_rational(coef),
            'bases': [s + 1 for s in word.bases],
            'vars': [mu + 1 for mu in word.variables],
        }
        for word, coef in p.sorted_terms()
    ]


def freepoly_from_json(data: Sequence[Json], spec: AlgebraSpec, n: int) -> FreePoly:
    terms: Dict[Word, Fraction] = {}
    for entry in _list(data, 'terms'):
        word = Word(
            tuple(s - 1 for s in _indices(entry, 'bases')),
            tuple(mu - 1 for mu in _indices(entry, 'vars')),
        )
        terms[word] = terms.get(word, Fraction(0)) + decode_rational(_field(entry, 'coef'))
    return FreePoly(spec, n, terms)


def scalarpoly_to_json(p: ScalarPoly) -> List[Json]:
    return [{'coef': encode_rational(c), 'exponents': list(k)} for k, c in p.sorted_terms()]


def scalarpoly_from_json(data: Sequence[Json], n: int, m: int) -> ScalarPoly:
    return ScalarPoly(n, m, {
        tuple(_indices(entry, 'exponents')): decode_rational(_field(entry, 'coef'))
        for entry in _list(data, 'terms')
    })


def centralpoly_to_json(p: CentralPoly) -> List[Json]:
    return [
        {'coef': [encode_rational(c) for c in coef.coords], 'exponents': list(k)}
        for k, coef in p.sorted_terms()
    ]


def centralpoly_from_json(data: Sequence[Json], spec: AlgebraSpec, n: int) -> CentralPoly:
    terms = {}
    for entry in _list(data, 'terms'):
        coef = [decode_rational(c) for c in _list(_field(entry, 'coef'), 'coef')]
        if len(coef) != spec.m:
            raise ArtifactError(f'Coefficient must have {spec.m} coordinates')
        terms[tuple(_indices(entry, 'exponents'))] = spec.element(coef)
    return CentralPoly(spec, n, terms)


def point_to_json(a: Point) -> List[List[str]]:
    return [[encode_rational(c) for c in value.coords] for value in a]


def points_from_json(data: Any, spec: AlgebraSpec, n: int) -> List[Point]:
    """A list of points, each a list of n coordinate vectors of length m."""
    if not isinstance(data, list):
        raise ArtifactError('Points file must hold a JSON list')
    points = []
    for row in data:
        if (
                not isinstance(row, list) or len(row) != n
                or any(not isinstance(value, list) or len(value) != spec.m for value in row)
        ):
            raise ArtifactError(f'Every point needs {n} coordinate vectors of length {spec.m}')
        points.append(Point.from_rationals([[decode_rational(c) for c in value] for value in row], spec))
    return points


# envelopes

def wrap(kind: str, payload: Json) -> Json:
    return {
        'format': FORMAT_HEADER,
        'kind': kind,
        'payload': payload,
        'digest': CalculatedHash.of_payload(payload).value,
    }


def unwrap(document: Json, kind: str) -> Json:
    """
    Check the format tag, kind and digest of an artifact.

    Raises:
        ArtifactError: For foreign files or the wrong kind.
        DigestMismatch: When the payload was altered.
    """
    if not isinstance(document, dict) or document.get('format') != FORMAT_HEADER:
        raise ArtifactError('Not a divpoly artifact')
    if document.get('kind') != kind:
        raise ArtifactError(f"Expected a {kind!r} artifact, found {document.get('kind')!r}")
    payload = _field(document, 'payload')
    if CalculatedHash.of_payload(payload).value != document.get('digest'):
        raise DigestMismatch(f'Digest does not match the {kind} payload')
    return payload


def save_artifact(path: str, kind: str, payload: Json) -> Json:
    document = wrap(kind, payload)
    GenericFile(path).write_json(document)
    logger.info('Wrote %s artifact to %s', kind, path)
    return document


def load_artifact(path: str, kind: str, allow_bare: bool = False) -> Json:
    """
    Read and unwrap an artifact; with allow_bare a hand written payload
    object without the envelope is accepted as is.
    """
    document = GenericFile(path).read_json()
    if allow_bare and isinstance(document, dict) and 'format' not in document:
        return document
    return unwrap(document, kind)


def _ring(payload: Json):
    # hand written payloads may leave out the algebra; it defaults to the quaternions
    spec = algebra_from_json(payload['algebra']) if 'algebra' in payload else quaternion_algebra()
    n = _field(payload, 'n')
    if not _is_integer(n) or n < 0:
        raise ArtifactError(f'Variable count must be a nonnegative integer, got {n!r}')
    return spec, n


# ideals

def ideal_to_json(ideal: IdealHandle) -> Json:
    return {
        'algebra': algebra_to_json(ideal.spec),
        'n': ideal.n,
        'generators': [freepoly_to_json(g) for g in ideal.generators],
        'scalar_generators': [scalarpoly_to_json(g) for g in ideal.scalar_generators],
        'groebner': [scalarpoly_to_json(g) for g in ideal.gb],
    }


def ideal_from_json(payload: Json) -> IdealHandle:
    """
    Rebuild an ideal from its generators; the cached scalar generators and
    basis are compared with the recomputed ones and a mismatch is logged.
    """
    spec, n = _ring(payload)
    gens = [freepoly_from_json(g, spec, n) for g in _list(_field(payload, 'generators'), 'generators')]
    ideal = make_ideal(gens, spec, n)
    cached = [scalarpoly_from_json(g, n, spec.m) for g in _list(payload.get('groebner', []), 'groebner')]
    if buchberger(cached, n, spec.m) != ideal.gb:
        logger.warning('Cached Gröbner basis does not match the generators; using the recomputed basis')
    return ideal


def save_ideal(path: str, ideal: IdealHandle) -> Json:
    return save_artifact(path, 'ideal', ideal_to_json(ideal))


def load_ideal(path: str) -> IdealHandle:
    return ideal_from_json(load_artifact(path, 'ideal'))


# certificates

def certificate_to_json(certificate: GpiCertificate) -> Json:
    target = certificate.target
    return {
        'algebra': algebra_to_json(target.spec),
        'n': target.n,
        'target': freepoly_to_json(target),
        'steps': [
            {'left': freepoly_to_json(s.left), 'gen': s.generator, 'right': freepoly_to_json(s.right)}
            for s in certificate.steps
        ],
    }


def certificate_from_json(payload: Json) -> GpiCertificate:
    spec, n = _ring(payload)
    steps = []
    for step in _list(_field(payload, 'steps'), 'steps'):
        gen = _field(step, 'gen')
        if not _is_integer(gen):
            raise ArtifactError(f'Generator index must be an integer, got {gen!r}')
        steps.append(CertificateStep(
            freepoly_from_json(_field(step, 'left'), spec, n),
            gen,
            freepoly_from_json(_field(step, 'right'), spec, n),
        ))
    return GpiCertificate(freepoly_from_json(_field(payload, 'target'), spec, n), steps)


def radical_to_json(certificate: RadicalCertificate) -> Json:
    f = certificate.f
    return {
        'algebra': algebra_to_json(f.spec),
        'n': f.n,
        'f': freepoly_to_json(f),
        'm': certificate.m,
        'witnesses': [freepoly_to_json(w) for w in certificate.witnesses],
    }


def radical_from_json(payload: Json) -> RadicalCertificate:
    spec, n = _ring(payload)
    m = _field(payload, 'm')
    # bool is an int subclass; true must not pass as exponent 1
    if not _is_integer(m):
        raise ArtifactError(f'Exponent must be an integer, got {m!r}')
    return RadicalCertificate(
        freepoly_from_json(_field(payload, 'f'), spec, n),
        m,
        [freepoly_from_json(w, spec, n) for w in _list(payload.get('witnesses', []), 'witnesses')],
    )


__all__ = [
    'encode_rational', 'decode_rational', 'algebra_to_json', 'algebra_from_json', 'load_algebra',
    'dump_algebra', 'freepoly_to_json', 'freepoly_from_json', 'scalarpoly_to_json',
    'scalarpoly_from_json', 'centralpoly_to_json', 'centralpoly_from_json', 'point_to_json',
    'points_from_json', 'wrap', 'unwrap', 'save_artifact', 'load_artifact', 'ideal_to_json',
    'ideal_from_json', 'save_ideal', 'load_ideal', 'certificate_to_json', 'certificate_from_json',
    'radical_to_json', 'radical_from_json',
]
