"""Division, S-polynomials, Buchberger's algorithm and elimination.

Pair selection follows the normal strategy (smallest lcm degree first, ties
broken by the index pair) and applies only the coprime leading-term
criterion, so every run is reproducible.
"""

import heapq
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import attr
import structlog

from plucker_asl.exactalg.orders import (
    MonomialOrder,
    OrderScheme,
    leading_monomial,
    leading_term,
)
from plucker_asl.exactalg.polynomial import Monomial, Polynomial, Variable
from plucker_asl.exceptions import (
    AmbientMismatchError,
    BudgetExceeded,
    InvalidOrderError,
    UnknownVariableError,
    ZeroPolynomialError,
)

SLOG = structlog.get_logger(__name__)

#: Maximum number of S-pair reductions a single Buchberger run may perform.
DEFAULT_SPAIR_BUDGET = 200_000


@attr.s(frozen=True, slots=True, repr=False)
class Ideal:
    """An ideal given by generators inside the ring of ``variables``.

    An ideal without generators is the zero ideal.
    """

    generators: Tuple[Polynomial, ...] = attr.ib(converter=tuple)
    variables: FrozenSet[Variable] = attr.ib(converter=frozenset)

    def __attrs_post_init__(self):
        for f in self.generators:
            if f.is_zero:
                raise ZeroPolynomialError("ideal generators must be nonzero")
            outside = f.variables - self.variables
            if outside:
                raise UnknownVariableError(sorted(outside)[0])

    @classmethod
    def of(
        cls, generators: Iterable[Polynomial], variables: Iterable[Variable] = None
    ) -> "Ideal":
        """Build an ideal, dropping zero generators. The ambient variables
        default to those the generators use."""
        generators = [f for f in generators if not f.is_zero]
        if variables is None:
            variables = set()
            for f in generators:
                variables |= f.variables
        return cls(generators, variables)

    @property
    def is_zero(self) -> bool:
        return not self.generators

    def __len__(self) -> int:
        return len(self.generators)

    def __repr__(self) -> str:
        return f"Ideal({len(self.generators)} generators in {len(self.variables)} variables)"


@attr.s(frozen=True, slots=True, repr=False)
class GroebnerBasis:
    elements: Tuple[Polynomial, ...] = attr.ib(converter=tuple)
    order: MonomialOrder = attr.ib()
    reduced: bool = attr.ib(default=False)

    def leading_monomials(self) -> List[Monomial]:
        return [leading_monomial(g, self.order) for g in self.elements]

    def reduce(self, f: Polynomial) -> Polynomial:
        if not self.elements:
            return f
        return normal_form(f, self.elements, self.order)

    def contains(self, f: Polynomial) -> bool:
        return self.reduce(f).is_zero

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __repr__(self) -> str:
        return f"GroebnerBasis({len(self.elements)} elements, {self.order.scheme.value})"


def _reduce(
    f: Polynomial,
    basis: Sequence[Polynomial],
    leads: Sequence[Tuple[Monomial, object]],
    order: MonomialOrder,
) -> Polynomial:
    pending: Dict[Monomial, object] = dict(f.terms)
    remainder = {}
    key = order.key
    while pending:
        mono = max(pending, key=key)
        coef = pending[mono]
        for g, (lead, lead_coef) in zip(basis, leads):
            if lead.divides(mono):
                shift = mono / lead
                factor = coef / lead_coef
                for m, c in g.terms.items():
                    target = m * shift
                    value = pending.get(target, 0) - factor * c
                    if value:
                        pending[target] = value
                    else:
                        pending.pop(target, None)
                break
        else:
            remainder[mono] = coef
            del pending[mono]
    return Polynomial._raw(remainder)


def normal_form(
    f: Polynomial, G: Sequence[Polynomial], order: MonomialOrder
) -> Polynomial:
    """Fully reduce ``f`` by ``G``; no monomial of the result is divisible
    by a leading monomial of ``G``."""
    if not G:
        raise ValueError("cannot reduce by an empty list")
    leads = [leading_term(g, order) for g in G]
    return _reduce(f, G, leads, order)


def _s_polynomial(f, g, lead_f, lead_g) -> Polynomial:
    (mf, cf), (mg, cg) = lead_f, lead_g
    lcm = mf.lcm(mg)
    return f.times_term(lcm / mf, 1 / cf) - g.times_term(lcm / mg, 1 / cg)


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    """The S-polynomial normalized by leading coefficients."""
    return _s_polynomial(f, g, leading_term(f, order), leading_term(g, order))


def _check_order_covers(variables: Iterable[Variable], order: MonomialOrder):
    missing = set(variables) - set(order.variables)
    if missing:
        raise UnknownVariableError(sorted(missing)[0])


def buchberger(
    ideal: Ideal, order: MonomialOrder, spair_budget: int = DEFAULT_SPAIR_BUDGET
) -> GroebnerBasis:
    """Compute the reduced Groebner basis of ``ideal``.

    Args:
        ideal (Ideal): A nonzero ideal
        order (MonomialOrder): Must order every ambient variable
        spair_budget (int): Maximum number of S-pair reductions

    Raises:
        BudgetExceeded: The S-pair budget ran out before the basis was complete

    Returns:
        GroebnerBasis: monic, inter-reduced, sorted by leading monomial descending
    """
    if ideal.is_zero:
        raise ValueError("buchberger needs at least one generator")
    _check_order_covers(ideal.variables, order)
    log = SLOG.bind(order=order.scheme.value, generators=len(ideal.generators))
    log.debug("buchberger.start")

    basis: List[Polynomial] = []
    leads = []
    queue: List[Tuple[int, int, int]] = []
    skipped = 0

    def add(f: Polynomial):
        nonlocal skipped
        f = f.monic(order)
        basis.append(f)
        leads.append(leading_term(f, order))
        k = len(basis) - 1
        for i in range(k):
            mi, mk = leads[i][0], leads[k][0]
            if mi.is_coprime(mk):
                skipped += 1
                continue
            heapq.heappush(queue, (mi.lcm(mk).degree, i, k))

    for f in ideal.generators:
        add(f)

    reductions = 0
    while queue:
        _, i, j = heapq.heappop(queue)
        reductions += 1
        if reductions > spair_budget:
            log.warning("buchberger.budget_exceeded", budget=spair_budget)
            raise BudgetExceeded(
                f"S-pair budget of {spair_budget} reductions exceeded "
                f"with {len(basis)} basis elements",
                budget=spair_budget,
                used=reductions - 1,
            )
        s = _s_polynomial(basis[i], basis[j], leads[i], leads[j])
        remainder = _reduce(s, basis, leads, order)
        if not remainder.is_zero:
            add(remainder)
            log.debug("buchberger.new_element", size=len(basis), pair=(i, j))

    gb = reduce_basis(basis, order)
    log.info(
        "buchberger.done",
        size=len(gb),
        reductions=reductions,
        coprime_skipped=skipped,
    )
    return gb


def reduce_basis(G: Iterable[Polynomial], order: MonomialOrder) -> GroebnerBasis:
    """Turn a Groebner basis into the reduced one."""
    monic = []
    for g in G:
        if not g.is_zero:
            g = g.monic(order)
            if g not in monic:
                monic.append(g)
    leads = [leading_monomial(g, order) for g in monic]

    minimal = []
    for k, lead in enumerate(leads):
        redundant = any(
            other.divides(lead) and (other != lead or m < k)
            for m, other in enumerate(leads)
            if m != k
        )
        if not redundant:
            minimal.append(monic[k])

    reduced = []
    for k, g in enumerate(minimal):
        others = minimal[:k] + minimal[k + 1 :]
        if others:
            g = normal_form(g, others, order).monic(order)
        reduced.append(g)
    reduced.sort(key=lambda g: order.key(leading_monomial(g, order)), reverse=True)
    return GroebnerBasis(reduced, order, reduced=True)


def is_groebner(G: Sequence[Polynomial], order: MonomialOrder) -> bool:
    """Buchberger's criterion: every S-pair reduces to zero modulo ``G``.

    Pairs with coprime leading monomials are skipped.
    """
    G = list(G)
    leads = [leading_term(g, order) for g in G]
    for j in range(len(G)):
        for i in range(j):
            if leads[i][0].is_coprime(leads[j][0]):
                continue
            s = _s_polynomial(G[i], G[j], leads[i], leads[j])
            if not _reduce(s, G, leads, order).is_zero:
                SLOG.debug("is_groebner.failed_pair", pair=(i, j))
                return False
    return True


def initial_ideal(gb: GroebnerBasis) -> FrozenSet[Monomial]:
    """Minimal monomial generators of the initial ideal."""
    leads = gb.leading_monomials()
    return frozenset(
        m for m in leads if not any(o != m and o.divides(m) for o in leads)
    )


def eliminate(
    ideal: Ideal,
    keep: Iterable[Variable],
    order: MonomialOrder,
    spair_budget: int = DEFAULT_SPAIR_BUDGET,
    gb: Optional[GroebnerBasis] = None,
) -> Ideal:
    """Intersect ``ideal`` with the subring generated by ``keep``.

    The generators returned are the elements of the reduced Groebner basis
    that only use kept variables, which form a Groebner basis of the
    elimination ideal for the restricted order.

    Args:
        gb (GroebnerBasis, optional): A precomputed reduced basis of ``ideal``
            under ``order``
    """
    keep = frozenset(keep)
    outside = keep - ideal.variables
    if outside:
        raise UnknownVariableError(sorted(outside)[0])
    if order.scheme != OrderScheme.BLOCK_ELIM_LEX:
        raise InvalidOrderError("elimination needs a block elimination order")
    if order.eliminated != ideal.variables - keep:
        raise InvalidOrderError("the order must eliminate exactly the dropped variables")

    if ideal.is_zero:
        return Ideal((), keep)
    if gb is None:
        gb = buchberger(ideal, order, spair_budget=spair_budget)
    generators = [g for g in gb.elements if g.variables <= keep]
    SLOG.info(
        "eliminate.done",
        kept=len(keep),
        eliminated=len(order.eliminated),
        generators=len(generators),
    )
    return Ideal(generators, keep)


def ideal_equal(
    I: Ideal,
    J: Ideal,
    order: MonomialOrder,
    spair_budget: int = DEFAULT_SPAIR_BUDGET,
) -> bool:
    """Two-sided containment through reduced Groebner bases."""
    if I.variables != J.variables:
        raise AmbientMismatchError("ideals live in different rings")
    if I.is_zero or J.is_zero:
        return I.is_zero and J.is_zero
    gb_i = buchberger(I, order, spair_budget=spair_budget)
    gb_j = buchberger(J, order, spair_budget=spair_budget)
    return all(gb_j.contains(f) for f in I.generators) and all(
        gb_i.contains(f) for f in J.generators
    )
