"""
Transport between polynomial functions on D^n and central polynomials.

The coordinate functions Y_ij = sum b[j][s][t] v_s x_i v_t take values in
the base field; phi sends x_i to sum_j v_j y_ij and identifies the ring of
polynomial functions with D_c[y_ij], psi sends y_ij back to Y_ij. The kernel
of phi on the free product is the ideal of generalized polynomial
identities, generated by three families of elements built from the Y_ij.
"""
import logging
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Dict, Iterator, List, NamedTuple, Optional, Sequence, Tuple
from .algebra import AlgebraSpec, CoordTable, Element, coordinate_functionals, mul
from .centralpoly import CentralPoly, Monomial
from .errors import AmbientMismatch, IndexOutOfRange, NotAnIdentity
from .freepoly import FreePoly, Point, Word

logger = logging.getLogger(__name__)


def make_Y(spec: AlgebraSpec, table: CoordTable, i: int, j: int, n: Optional[int] = None) -> FreePoly:
    """
    Build the coordinate function Y_ij = sum over s, t of b[j][s][t] v_s x_i v_t.

    Args:
        spec (AlgebraSpec): Validated algebra.
        table (CoordTable): Its coordinate functionals.
        i (int): Variable index, one-based.
        j (int): Coordinate index, one-based.
        n (Optional[int]): Variable count of the result; defaults to i.

    Returns:
        FreePoly: Y_ij, whose value at a is coordinate j of a_i (times v1).

    Raises:
        IndexOutOfRange: If i or j is outside its range.
    """
    n = i if n is None else n
    if not (1 <= i <= n and 1 <= j <= spec.m):
        raise IndexOutOfRange(f'Y{i}_{j} is out of range for n={n}, m={spec.m}')
    if table.spec != spec:
        raise AmbientMismatch('Coordinate table belongs to a different algebra')
    terms = {Word((s, t), (i - 1,)): value for s, t, value in table.terms(j - 1)}
    return FreePoly(spec, n, terms, _trusted=True)


class GeneratorInfo(NamedTuple):
    family: int
    label: str
    poly: FreePoly


class GpiGeneratorSet:
    """
    Generators of the ideal of generalized polynomial identities, in a
    fixed order that certificate files refer to by index:

    1. v_k Y_ij - Y_ij v_k for every (i, j) and every non-unit k,
    2. Y_a Y_b - Y_b Y_a for pairs a < b of (i, j) in lexicographic order,
    3. x_i - sum_j Y_ij v_j for every i.

    Attributes:
        spec (AlgebraSpec): Ambient algebra.
        n (int): Number of variables.
        generators (Tuple[GeneratorInfo, ...]): All members in order.
    """

    def __init__(self, spec: AlgebraSpec, n: int, transport: 'Transport'):
        self.spec = spec
        self.n = n
        m = spec.m
        members: List[GeneratorInfo] = []
        self.commutator_index: Dict[Tuple[int, int], int] = {}
        self.swap_index: Dict[Tuple[int, int], int] = {}
        self.substitution_index: Dict[int, int] = {}

        for c in range(n * m):
            i, j = divmod(c, m)
            y = transport.Y(c)
            for k in range(1, m):
                unit = FreePoly.basis(spec, n, k)
                self.commutator_index[(c, k)] = len(members)
                members.append(GeneratorInfo(
                    1, f'{spec.symbol(k)}*Y{i + 1}_{j + 1} - Y{i + 1}_{j + 1}*{spec.symbol(k)}',
                    unit * y - y * unit,
                ))
        for a in range(n * m):
            for b in range(a + 1, n * m):
                ya, yb = transport.Y(a), transport.Y(b)
                self.swap_index[(a, b)] = len(members)
                name_a = f'Y{a // m + 1}_{a % m + 1}'
                name_b = f'Y{b // m + 1}_{b % m + 1}'
                members.append(GeneratorInfo(
                    2, f'{name_a}*{name_b} - {name_b}*{name_a}', ya * yb - yb * ya,
                ))
        for i in range(n):
            total = FreePoly.variable(spec, n, i)
            for j in range(m):
                total = total - transport.Y(i * m + j) * FreePoly.basis(spec, n, j)
            self.substitution_index[i] = len(members)
            members.append(GeneratorInfo(3, f'x{i + 1} - sum_j Y{i + 1}_j*v_j', total))
        self.generators: Tuple[GeneratorInfo, ...] = tuple(members)

    @staticmethod
    def expected_size(m: int, n: int) -> int:
        return n * m * (m - 1) + comb(n * m, 2) + n

    def __len__(self) -> int:
        return len(self.generators)

    def __getitem__(self, index: int) -> FreePoly:
        return self.generators[index].poly

    def __iter__(self) -> Iterator[FreePoly]:
        return (g.poly for g in self.generators)

    def family(self, number: int) -> List[FreePoly]:
        return [g.poly for g in self.generators if g.family == number]


def intro_generator_count(m: int) -> int:
    """
    The count 3 * C(m, 2) + 1 quoted for a single variable; it agrees with
    GpiGeneratorSet.expected_size(m, 1) and not with larger n.
    """
    return 3 * comb(m, 2) + 1


class Transport:
    """
    Cached machinery for one (algebra, n): coordinate functions, products of
    them, and the images of basis products needed by phi.

    Use transport_for to share instances.

    Attributes:
        spec (AlgebraSpec): Ambient algebra.
        n (int): Number of variables.
        table (CoordTable): Coordinate functionals of spec.
    """

    def __init__(self, spec: AlgebraSpec, n: int):
        self.spec = spec
        self.n = n
        self.table = coordinate_functionals(spec)
        m = spec.m
        self._Y = [make_Y(spec, self.table, c // m + 1, c % m + 1, n) for c in range(n * m)]
        self._products: Dict[Tuple[int, ...], FreePoly] = {(): FreePoly.one(spec, n)}
        self._generators: Optional[GpiGeneratorSet] = None
        self._basis = [spec.basis(s) for s in range(m)]
        # v_j * v_s for the substitution x -> sum_j v_j y_ij followed by v_s
        self._junction = [[mul(self._basis[j], self._basis[s], spec) for s in range(m)] for j in range(m)]

    def Y(self, flat: int) -> FreePoly:
        """Y for the flat index i * m + j (zero-based)."""
        return self._Y[flat]

    def product(self, indices: Tuple[int, ...]) -> FreePoly:
        """Ordered product Y_{c1} * Y_{c2} * ... over flat indices."""
        cached = self._products.get(indices)
        if cached is None:
            cached = self.product(indices[:-1]) * self._Y[indices[-1]]
            self._products[indices] = cached
        return cached

    def monomial_product(self, monomial: Monomial) -> FreePoly:
        return self.product(monomial_indices(monomial))

    @property
    def generators(self) -> GpiGeneratorSet:
        if self._generators is None:
            self._generators = GpiGeneratorSet(self.spec, self.n, self)
        return self._generators

    def phi_word(self, word: Word) -> Dict[Monomial, Element]:
        spec = self.spec
        m = spec.m
        size = self.n * m
        zero = (0,) * size
        current: Dict[Monomial, Element] = {zero: self._basis[word.bases[0]]}
        for mu, s in zip(word.variables, word.bases[1:]):
            following: Dict[Monomial, Element] = {}
            for monomial, value in current.items():
                for j in range(m):
                    product = mul(value, self._junction[j][s], spec)
                    if product.is_zero():
                        continue
                    exponents = list(monomial)
                    exponents[mu * m + j] += 1
                    key = tuple(exponents)
                    following[key] = following[key] + product if key in following else product
            current = following
        return current

    def phi(self, p: FreePoly) -> CentralPoly:
        self._check(p)
        spec = self.spec
        total: Dict[Monomial, List[Fraction]] = {}
        for word, coef in p.terms.items():
            for monomial, value in self.phi_word(word).items():
                bucket = total.setdefault(monomial, [Fraction(0)] * spec.m)
                for u, c in enumerate(value.coords):
                    if c:
                        bucket[u] += coef * c
        terms = {k: Element(v, spec) for k, v in total.items() if any(v)}
        return CentralPoly(spec, self.n, terms, _trusted=True)

    def psi(self, q: CentralPoly) -> FreePoly:
        self._check(q)
        total = FreePoly.zero(self.spec, self.n)
        for monomial, coef in q.terms.items():
            total = total + FreePoly.constant(self.spec, self.n, coef) * self.monomial_product(monomial)
        return total

    def _check(self, value) -> None:
        if value.n != self.n or (value.spec is not self.spec and value.spec != self.spec):
            raise AmbientMismatch(f'Expected n={self.n} over the transport algebra')


def monomial_indices(monomial: Monomial) -> Tuple[int, ...]:
    """Flat indices of a monomial in ascending order, with multiplicity."""
    return tuple(c for c, e in enumerate(monomial) for _ in range(e))


@lru_cache(maxsize=64)
def transport_for(spec: AlgebraSpec, n: int) -> Transport:
    return Transport(spec, n)


def phi(p: FreePoly) -> CentralPoly:
    """
    Image of p under x_i -> sum_j v_j y_ij, computed word by word.

    phi is a ring homomorphism whose kernel is the set of generalized
    polynomial identities; phi(p) = 0 exactly when p vanishes on D^n.
    """
    return transport_for(p.spec, p.n).phi(p)


def psi(q: CentralPoly) -> FreePoly:
    """Substitute Y_ij for y_ij; phi(psi(q)) == q."""
    return transport_for(q.spec, q.n).psi(q)


def normal_form(p: FreePoly) -> FreePoly:
    """The representative sum a_I Y^I of p, equal to psi(phi(p))."""
    return psi(phi(p))


def is_identity(p: FreePoly) -> bool:
    return phi(p).is_zero()


def gpi_generators(spec: AlgebraSpec, n: int) -> GpiGeneratorSet:
    """
    The generator set of the identities for (spec, n); its size is
    n*m*(m-1) + C(n*m, 2) + n, which is 19 for the quaternions with n = 1.
    """
    if n < 1:
        raise IndexOutOfRange(f'Generator sets need n >= 1, got {n}')
    return transport_for(spec, n).generators


def flatten_point(point: Point) -> List[Fraction]:
    return [c for value in point for c in value.coords]


def evaluate_via_phi(p: FreePoly, point: Point) -> Element:
    """Substitution formula: p(a) computed as phi(p) at the coordinates of a."""
    return phi(p).evaluate(flatten_point(point))


class CertificateStep(NamedTuple):
    left: FreePoly
    generator: int
    right: FreePoly


class GpiCertificate:
    """
    Witness that target lies in the ideal generated by the identity
    generators: sum of left * generator * right over steps equals target.

    Attributes:
        target (FreePoly): The certified identity.
        steps (List[CertificateStep]): Cofactor triples; generator indices
            refer to gpi_generators(target.spec, target.n).
    """

    def __init__(self, target: FreePoly, steps: Sequence[CertificateStep]):
        self.target = target
        self.steps: List[CertificateStep] = list(steps)

    def __len__(self) -> int:
        return len(self.steps)

    def __repr__(self) -> str:
        return f'GpiCertificate(steps={len(self.steps)}, target={self.target})'


class _StepAccumulator:
    """Sums left cofactors that share a generator and a right cofactor."""

    def __init__(self, spec: AlgebraSpec, n: int):
        self.spec = spec
        self.n = n
        self.lefts: Dict[tuple, FreePoly] = {}
        self.count = 0

    def add(self, key: tuple, left: FreePoly) -> None:
        if left.is_zero():
            return
        self.count += 1
        current = self.lefts.get(key)
        self.lefts[key] = left if current is None else current + left


def rewrite(p: FreePoly) -> Tuple[List[CertificateStep], CentralPoly]:
    """
    Rewrite p with the identity generators into sum a_I Y^I.

    Each round peels the last variable off every word, p = p0 + sum
    p_{mu,s} x_mu v_s: x_mu is replaced by sum_j Y_{mu j} v_j (third
    family), the element v_j v_s is moved left across Y_{mu j} (first
    family), and Y_{mu j} is sorted into the Y-monomial on its right
    (second family). Cofactors sharing a generator and a right factor are
    summed, so the step count stays polynomial in the size of p.

    Returns:
        Tuple: The steps, and the remaining coefficients a_I as a
        CentralPoly; p = sum of steps + sum a_I Y^I.
    """
    spec, n = p.spec, p.n
    transport = transport_for(spec, n)
    gens = transport.generators
    m = spec.m
    size = n * m
    zero = (0,) * size
    acc = _StepAccumulator(spec, n)
    pending: Dict[Monomial, FreePoly] = {zero: p}
    rounds = 0

    def deposit(store: Dict[Monomial, FreePoly], key: Monomial, value: FreePoly) -> None:
        if value.is_zero():
            return
        current = store.get(key)
        total = value if current is None else current + value
        if total.is_zero():
            store.pop(key, None)
        else:
            store[key] = total

    while any(q.degree > 0 for q in pending.values()):
        rounds += 1
        following: Dict[Monomial, FreePoly] = {}
        for monomial, q in pending.items():
            if q.degree <= 0:
                deposit(following, monomial, q)
                continue
            head, prefixes = q.split_last()
            deposit(following, monomial, head)
            tail = monomial_indices(monomial)
            for (mu, s), prefix in prefixes.items():
                acc.add(('subst', gens.substitution_index[mu], s, tail), prefix)
                for j in range(m):
                    flat = mu * m + j
                    element = transport._junction[j][s]
                    for k in range(1, m):
                        if element.coords[k]:
                            acc.add(
                                ('comm', gens.commutator_index[(flat, k)], tail),
                                prefix.scale(-element.coords[k]),
                            )
                    moved = prefix * FreePoly.constant(spec, n, element)
                    position = 0
                    while position < len(tail) and tail[position] < flat:
                        acc.add(
                            ('swap', gens.swap_index[(tail[position], flat)],
                             tail[:position], tail[position + 1:]),
                            -moved,
                        )
                        position += 1
                    exponents = list(monomial)
                    exponents[flat] += 1
                    deposit(following, tuple(exponents), moved)
        pending = following

    steps = _materialize(acc, transport)
    remainder = {
        monomial: q.constant_value() for monomial, q in pending.items() if not q.is_zero()
    }
    logger.debug('Rewrote %d terms in %d rounds into %d steps', len(p), rounds, len(steps))
    return steps, CentralPoly(spec, n, remainder)


def _materialize(acc: _StepAccumulator, transport: Transport) -> List[CertificateStep]:
    spec, n = transport.spec, transport.n
    grouped: Dict[tuple, FreePoly] = {}
    for key in sorted(acc.lefts, key=repr):
        left = acc.lefts[key]
        kind = key[0]
        if kind == 'subst':
            _, index, s, tail = key
            right_key = ('vY', s, tail)
        elif kind == 'comm':
            _, index, tail = key
            right_key = ('Y', tail)
        else:
            _, index, before, after = key
            left = left * transport.product(before)
            right_key = ('Y', after)
        group = (index, right_key)
        grouped[group] = grouped[group] + left if group in grouped else left
    steps = []
    for (index, right_key), left in sorted(grouped.items(), key=lambda item: repr(item[0])):
        if left.is_zero():
            continue
        if right_key[0] == 'vY':
            right = FreePoly.basis(spec, n, right_key[1]) * transport.product(right_key[2])
        else:
            right = transport.product(right_key[1])
        steps.append(CertificateStep(left, index, right))
    return steps


def gpi_certificate(p: FreePoly) -> GpiCertificate:
    """
    Express an identity as sum of left * generator * right.

    Args:
        p (FreePoly): An element of the kernel of phi.

    Returns:
        GpiCertificate: Steps whose sum is exactly p.

    Raises:
        NotAnIdentity: If phi(p) is not zero.
    """
    if not is_identity(p):
        raise NotAnIdentity('The polynomial does not vanish on every point; no certificate exists')
    if p.is_zero():
        return GpiCertificate(p, [])
    gens = gpi_generators(p.spec, p.n)
    one = FreePoly.one(p.spec, p.n)
    for index, generator in enumerate(gens):
        ratio = _scalar_ratio(p, generator)
        if ratio is not None:
            return GpiCertificate(p, [CertificateStep(one.scale(ratio), index, one)])
    steps, remainder = rewrite(p)
    if not remainder.is_zero():
        raise NotAnIdentity('Rewriting left a nonzero central part')
    return GpiCertificate(p, steps)


def _scalar_ratio(p: FreePoly, q: FreePoly) -> Optional[Fraction]:
    if len(p.terms) != len(q.terms) or q.is_zero():
        return None
    word = next(iter(q.terms))
    if word not in p.terms:
        return None
    ratio = p.terms[word] / q.terms[word]
    if all(p.terms.get(w) == ratio * c for w, c in q.terms.items()):
        return ratio
    return None


def verify_certificate(certificate: GpiCertificate) -> bool:
    """
    Check that the steps of a certificate sum to its target exactly.

    Steps sharing a right cofactor are summed before that cofactor is
    multiplied on, which keeps the expansion close to the size of the
    target.
    """
    target = certificate.target
    if not certificate.steps:
        return target.is_zero()
    if target.n < 1:
        return False
    gens = gpi_generators(target.spec, target.n)
    by_right: Dict[FreePoly, FreePoly] = {}
    try:
        for step in certificate.steps:
            if not 0 <= step.generator < len(gens):
                return False
            partial = step.left * gens[step.generator]
            by_right[step.right] = by_right[step.right] + partial if step.right in by_right else partial
        total = FreePoly.zero(target.spec, target.n)
        for right, left in by_right.items():
            total = total + left * right
    except AmbientMismatch:
        return False
    return total == target


__all__ = [
    'make_Y', 'GeneratorInfo', 'GpiGeneratorSet', 'intro_generator_count', 'Transport',
    'transport_for', 'monomial_indices', 'phi', 'psi', 'normal_form', 'is_identity',
    'gpi_generators', 'flatten_point', 'evaluate_via_phi', 'CertificateStep',
    'GpiCertificate', 'rewrite', 'gpi_certificate', 'verify_certificate',
]
