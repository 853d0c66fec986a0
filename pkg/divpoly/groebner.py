import logging
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Sequence, Tuple
from .centralpoly import (
    Monomial,
    ScalarPoly,
    monomial_divides,
    monomial_key,
    monomial_lcm,
)
from .errors import AmbientMismatch

logger = logging.getLogger(__name__)


class GroebnerBasis:
    """
    Reduced Gröbner basis of an ideal of F[y_ij] in degrevlex order.

    Generators are monic, no term of one is divisible by the leading
    monomial of another, and they are sorted by leading monomial, largest
    first. For a fixed order this basis is unique for its ideal, so two
    bases are equal exactly when their ideals are.

    Attributes:
        n (int): Number of noncommuting variables behind the y's.
        m (int): Coordinates per variable.
        generators (Tuple[ScalarPoly, ...]): The basis elements.
    """

    def __init__(self, n: int, m: int, generators: Sequence[ScalarPoly] = ()):
        self.n = n
        self.m = m
        self.generators: Tuple[ScalarPoly, ...] = tuple(generators)

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self) -> Iterator[ScalarPoly]:
        return iter(self.generators)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroebnerBasis):
            return NotImplemented
        return (self.n, self.m) == (other.n, other.m) and self.generators == other.generators

    def __hash__(self) -> int:
        return hash(self.generators)

    def __repr__(self) -> str:
        return f"GroebnerBasis([{', '.join(str(g) for g in self.generators)}])"

    def is_unit_ideal(self) -> bool:
        return any(g.degree == 0 for g in self.generators)

    def reduce(self, f: ScalarPoly) -> ScalarPoly:
        return reduce(f, self)

    def contains(self, f: ScalarPoly) -> bool:
        return reduce(f, self).is_zero()


def _check_ring(f: ScalarPoly, n: int, m: int) -> None:
    if (f.n, f.m) != (n, m):
        raise AmbientMismatch(f'Polynomial lives in a ring with n={f.n}, m={f.m}, expected n={n}, m={m}')


def divide(f: ScalarPoly, divisors: Sequence[ScalarPoly]) -> Tuple[List[ScalarPoly], ScalarPoly]:
    """
    Multivariate division with remainder.

    Repeatedly cancels the leading term of the running polynomial with the
    first divisor whose leading monomial divides it; terms no leading
    monomial divides move to the remainder.

    Args:
        f (ScalarPoly): Dividend.
        divisors (Sequence[ScalarPoly]): Nonzero divisors.

    Returns:
        Tuple[List[ScalarPoly], ScalarPoly]: Cofactors q_i and remainder r
        with sum q_i * g_i + r = f and no term of r divisible by any leading
        monomial.
    """
    divisors = [g for g in divisors]
    for g in divisors:
        _check_ring(g, f.n, f.m)
    leads = [g.leading() for g in divisors]
    quotients: List[Dict[Monomial, Fraction]] = [{} for _ in divisors]
    remainder: Dict[Monomial, Fraction] = {}
    running = f
    while not running.is_zero():
        monomial, coef = running.leading()
        for index, (lead, lead_coef) in enumerate(leads):
            if monomial_divides(lead, monomial):
                shift = tuple(a - b for a, b in zip(monomial, lead))
                factor = coef / lead_coef
                quotients[index][shift] = quotients[index].get(shift, 0) + factor
                running = running - divisors[index].shift(shift, factor)
                break
        else:
            remainder[monomial] = coef
            running = running - ScalarPoly._raw(f.n, f.m, {monomial: coef})
    return (
        [ScalarPoly._raw(f.n, f.m, {k: v for k, v in q.items() if v}) for q in quotients],
        ScalarPoly._raw(f.n, f.m, remainder),
    )


def reduce(f: ScalarPoly, gb: GroebnerBasis) -> ScalarPoly:
    """
    Normal form of f modulo a Gröbner basis; zero exactly when f lies in
    the ideal.
    """
    _check_ring(f, gb.n, gb.m)
    return divide(f, gb.generators)[1]


def s_polynomial(f: ScalarPoly, g: ScalarPoly) -> ScalarPoly:
    (lf, cf), (lg, cg) = f.leading(), g.leading()
    lcm = monomial_lcm(lf, lg)
    left = f.shift(tuple(a - b for a, b in zip(lcm, lf)), 1 / cf)
    right = g.shift(tuple(a - b for a, b in zip(lcm, lg)), 1 / cg)
    return left - right


def _coprime(a: Monomial, b: Monomial) -> bool:
    return all(not (x and y) for x, y in zip(a, b))


def is_groebner_basis(polys: Sequence[ScalarPoly]) -> bool:
    """Buchberger criterion: every S-polynomial reduces to zero."""
    polys = [p for p in polys if not p.is_zero()]
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            if divide(s_polynomial(polys[i], polys[j]), polys)[1].terms:
                return False
    return True


def _interreduce(basis: List[ScalarPoly]) -> List[ScalarPoly]:
    basis = [g.monic() for g in basis]
    # drop elements whose leading monomial is a multiple of another's
    minimal: List[ScalarPoly] = []
    for index, g in enumerate(basis):
        lead = g.leading()[0]
        redundant = False
        for other_index, h in enumerate(basis):
            if other_index == index:
                continue
            other_lead = h.leading()[0]
            if monomial_divides(other_lead, lead) and (other_lead != lead or other_index < index):
                redundant = True
                break
        if not redundant:
            minimal.append(g)
    reduced = []
    for index, g in enumerate(minimal):
        others = minimal[:index] + minimal[index + 1:]
        reduced.append(divide(g, others)[1].monic())
    return sorted(reduced, key=lambda g: monomial_key(g.leading()[0]), reverse=True)


def buchberger(
        gens: Sequence[ScalarPoly],
        n: Optional[int] = None,
        m: Optional[int] = None
    ) -> GroebnerBasis:
    """
    Compute the reduced Gröbner basis of the ideal generated by gens.

    Pairs are processed smallest least-common-multiple first (the normal
    strategy, ties broken by pair index), and pairs whose leading monomials
    are coprime are skipped. New basis elements are made primitive after
    every reduction; the final basis is interreduced and monic.

    Args:
        gens (Sequence[ScalarPoly]): Generators, all in the same ring.
        n (Optional[int]): Ring parameters, needed when gens is empty.
        m (Optional[int]): Ring parameters, needed when gens is empty.

    Returns:
        GroebnerBasis: The reduced basis; empty for the zero ideal.
    """
    if gens:
        n = gens[0].n if n is None else n
        m = gens[0].m if m is None else m
    n = n or 0
    m = m or 0
    for g in gens:
        _check_ring(g, n, m)
    basis: List[ScalarPoly] = [g.primitive() for g in gens if not g.is_zero()]
    if any(g.degree == 0 for g in basis):
        return GroebnerBasis(n, m, [ScalarPoly.constant(n, m, 1)])
    pairs = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}
    processed = 0
    while pairs:
        def pair_key(pair):
            i, j = pair
            lcm = monomial_lcm(basis[i].leading()[0], basis[j].leading()[0])
            return (monomial_key(lcm), j, i)

        pair = min(pairs, key=pair_key)
        pairs.discard(pair)
        i, j = pair
        if _coprime(basis[i].leading()[0], basis[j].leading()[0]):
            continue
        processed += 1
        remainder = divide(s_polynomial(basis[i], basis[j]), basis)[1]
        if remainder.is_zero():
            continue
        remainder = remainder.primitive()
        if remainder.degree == 0:
            logger.debug('Unit ideal detected after %d pairs', processed)
            return GroebnerBasis(n, m, [ScalarPoly.constant(n, m, 1)])
        basis.append(remainder)
        new = len(basis) - 1
        pairs.update((k, new) for k in range(new))
    result = _interreduce(basis) if basis else []
    logger.debug(
        'Buchberger processed %d pairs; %d generators reduced to %d',
        processed, len(gens), len(result),
    )
    return GroebnerBasis(n, m, result)


def contains_ideal(gb: GroebnerBasis, other: GroebnerBasis) -> bool:
    """True when the ideal of other is contained in the ideal of gb."""
    return all(gb.contains(g) for g in other.generators)


__all__ = [
    'GroebnerBasis', 'divide', 'reduce', 's_polynomial', 'is_groebner_basis', 'buchberger',
    'contains_ideal',
]
