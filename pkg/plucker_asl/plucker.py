"""The Plücker ideal of Gr(2, n) and the polynomials built around it.

``p[i,j]`` maps to the minor ``x[i]*y[j] - x[j]*y[i]``; the Plücker ideal
is the kernel of that substitution, which gives an exact membership test.
This module builds the quadrics and the appendix cubics, the monomial
orders under which they are studied, the straightening law, elimination
checks for sublattices and graphs, and the Stanley-Reisner analysis of
the appendix initial ideal.
"""

import itertools
from functools import lru_cache
from types import MappingProxyType
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

import attr
import structlog
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from plucker_asl.caching import cached_buchberger
from plucker_asl.exactalg.orders import MonomialOrder, leading_monomial
from plucker_asl.exactalg.polynomial import Monomial, Polynomial, Rational, Variable, x, y
from plucker_asl.exceptions import (
    BudgetExceeded,
    ConsistencyError,
    InvalidIndexError,
    InvalidOrderError,
    NotCompatibleError,
)
from plucker_asl.graphs import Graph
from plucker_asl.groebner import (
    DEFAULT_SPAIR_BUDGET,
    Ideal,
    eliminate,
    ideal_equal,
    normal_form,
)
from plucker_asl.lattice import (
    PairIndex,
    PosetKind,
    Sublattice,
    all_pairs,
    asl_closure_holds,
    is_compatible,
    leq_L,
    linear_extension,
)

SLOG = structlog.get_logger(__name__)

#: Caps for the exact linear algebra of the standard monomial check.
MAX_BASIS_CHECK_N = 6
MAX_BASIS_CHECK_DEGREE = 3


def _increasing(indices: Sequence[int]) -> bool:
    return all(a < b for a, b in zip(indices, indices[1:]))


def _check_indices(indices: Sequence[int], allow_unordered: bool = False):
    if min(indices) < 1:
        raise InvalidIndexError(f"indices start at 1, got {tuple(indices)}")
    if allow_unordered:
        if len(set(indices)) != len(indices):
            raise InvalidIndexError(f"indices must be distinct, got {tuple(indices)}")
    elif not _increasing(indices):
        raise InvalidIndexError(f"indices must increase strictly, got {tuple(indices)}")


def signed_p(a: int, b: int) -> Polynomial:
    """``p[a,b]`` extended antisymmetrically: ``p[b,a] = -p[a,b]``."""
    if a == b:
        raise InvalidIndexError(f"p[{a},{a}] is zero and has no variable")
    if a < b:
        return Polynomial.from_variable(Variable.plucker(a, b))
    return -Polynomial.from_variable(Variable.plucker(b, a))


def quadric(i: int, j: int, k: int, l: int) -> Polynomial:
    """``p[i,l]*p[j,k] - p[i,k]*p[j,l] + p[i,j]*p[k,l]`` for ``i < j < k < l``."""
    _check_indices((i, j, k, l))
    P = signed_p
    return P(i, l) * P(j, k) - P(i, k) * P(j, l) + P(i, j) * P(k, l)


def cubic5(i: int, j: int, k: int, l: int, m: int, allow_unordered: bool = False) -> Polynomial:
    """The five-index cubic whose leading term under the appendix order is
    ``p[i,k]*p[j,l]*p[k,m]``.

    Args:
        allow_unordered (bool): Accept any distinct indices, reading
            ``p[b,a]`` as ``-p[a,b]``
    """
    _check_indices((i, j, k, l, m), allow_unordered)
    P = signed_p
    return (
        P(i, k) * P(j, l) * P(k, m)
        - P(i, k) * P(j, m) * P(k, l)
        - P(i, l) * P(j, k) * P(k, m)
        + P(i, m) * P(j, k) * P(k, l)
    )


def cubic6(
    i: int, j: int, k: int, l: int, m: int, s: int, allow_unordered: bool = False
) -> Polynomial:
    """The six-index cubic led by ``p[i,l]*p[j,m]*p[k,s]``."""
    _check_indices((i, j, k, l, m, s), allow_unordered)
    P = signed_p
    return (
        P(i, l) * P(j, m) * P(k, s)
        - P(i, l) * P(j, s) * P(k, m)
        - P(i, m) * P(j, k) * P(l, s)
        + P(i, s) * P(j, k) * P(l, m)
    )


def plucker_variables(n: int) -> List[Variable]:
    return [pair.variable for pair in all_pairs(n)]


@lru_cache(maxsize=32)
def plucker_map(n: int) -> Mapping[Variable, Polynomial]:
    """``p[i,j] -> x[i]*y[j] - x[j]*y[i]`` for all pairs of [n]."""
    images = {}
    for pair in all_pairs(n):
        images[pair.variable] = x(pair.i) * y(pair.j) - x(pair.j) * y(pair.i)
    return MappingProxyType(images)


def _ambient_n(f: Polynomial) -> int:
    indices = [v.j for v in f.variables if v.is_plucker]
    return max(indices, default=2)


def plucker_image(f: Polynomial) -> Polynomial:
    """Substitute the 2x2 minors into ``f``."""
    return f.substitute(plucker_map(_ambient_n(f)))


def plucker_map_oracle(f: Polynomial) -> bool:
    """True when ``f`` lies in the Plücker ideal."""
    return plucker_image(f).is_zero


def plucker_ideal(n: int) -> Ideal:
    quadrics = [quadric(*idx) for idx in itertools.combinations(range(1, n + 1), 4)]
    return Ideal(quadrics, plucker_variables(n))


def quadric_ideal(L: Sublattice) -> Ideal:
    """The quadrics ``Q[i,j,k,l]`` with ``p[i,l]`` in ``L``."""
    generators = [
        quadric(*idx)
        for idx in itertools.combinations(range(1, L.n + 1), 4)
        if PairIndex(idx[0], idx[3]) in L.members
    ]
    return Ideal(generators, L.variables)


def edge_quadric_ideal(G: Graph) -> Ideal:
    """The quadrics all six of whose variables are edges of ``G``."""
    generators = []
    for idx in itertools.combinations(range(1, G.n + 1), 4):
        pairs = {PairIndex(a, b) for a, b in itertools.combinations(idx, 2)}
        if pairs <= G.edges:
            generators.append(quadric(*idx))
    return Ideal(generators, [e.variable for e in G.edges])


def _check_extension(n: int, extension: Sequence[PairIndex]):
    if sorted(extension) != all_pairs(n):
        raise InvalidOrderError(f"not a permutation of the pairs of [{n}]")


def revlex_order(n: int, extension: Optional[Sequence[PairIndex]] = None) -> MonomialOrder:
    """Reverse lex refining a linear extension of L_n (given bottom up)."""
    if extension is None:
        extension = linear_extension(n, PosetKind.L)
    _check_extension(n, extension)
    return MonomialOrder.revlex([pair.variable for pair in reversed(extension)])


def pi_lex_order(n: int, extension: Optional[Sequence[PairIndex]] = None) -> MonomialOrder:
    """Lex order in which the bottom of a linear extension of Π_n is largest."""
    if extension is None:
        extension = linear_extension(n, PosetKind.PI)
    _check_extension(n, extension)
    return MonomialOrder.lex([pair.variable for pair in extension])


def appendix_order(n: int) -> MonomialOrder:
    """Lex with ``p[1,2] > p[1,3] > ... > p[1,n] > p[2,3] > ... > p[n-1,n]``."""
    return MonomialOrder.lex(plucker_variables(n))


def elimination_order(L: Sublattice) -> MonomialOrder:
    """Block order eliminating the complement of ``L``; each block is
    ordered by a linear extension of Π_n."""
    def by_pi(pair):
        return pair.i, -pair.j

    eliminated = sorted(set(all_pairs(L.n)) - L.members, key=by_pi)
    kept = sorted(L.members, key=by_pi)
    return MonomialOrder.block_elim_lex(
        [pair.variable for pair in eliminated], [pair.variable for pair in kept]
    )


def appendix_basis(n: int) -> List[Polynomial]:
    """All quadrics and both cubic families on [n], sorted by leading
    monomial under the appendix order, largest first."""
    order = appendix_order(n)
    points = range(1, n + 1)
    basis = [quadric(*idx) for idx in itertools.combinations(points, 4)]
    basis += [cubic5(*idx) for idx in itertools.combinations(points, 5)]
    basis += [cubic6(*idx) for idx in itertools.combinations(points, 6)]
    basis.sort(key=lambda g: order.key(leading_monomial(g, order)), reverse=True)
    return basis


# Stanley-Reisner


@attr.s(frozen=True, slots=True, repr=False)
class SquarefreeMonomialIdeal:
    """A monomial ideal with squarefree, pairwise non-dividing generators in
    the ring of ``variables``."""

    generators: FrozenSet[Monomial] = attr.ib(converter=frozenset)
    variables: Tuple[Variable, ...] = attr.ib(converter=lambda vs: tuple(sorted(vs)))

    def __attrs_post_init__(self):
        for g in self.generators:
            if not g.is_squarefree:
                raise ValueError(f"{g} is not squarefree")
            if not g.variables <= set(self.variables):
                raise InvalidIndexError(f"{g} uses variables outside the ring")
        for g, h in itertools.permutations(self.generators, 2):
            if g.divides(h):
                raise ValueError(f"{g} divides {h}; generators must be minimal")

    @classmethod
    def of(cls, monomials: Iterable[Monomial], variables: Iterable[Variable]):
        """Keep the minimal monomials of ``monomials``."""
        monomials = set(monomials)
        minimal = [m for m in monomials if not any(o != m and o.divides(m) for o in monomials)]
        return cls(minimal, variables)

    def __len__(self) -> int:
        return len(self.generators)

    def __repr__(self) -> str:
        size = f"{len(self.generators)} generators in {len(self.variables)} variables"
        return f"SquarefreeMonomialIdeal({size})"


@attr.s(frozen=True, slots=True, repr=False)
class SimplicialComplex:
    vertices: Tuple[Variable, ...] = attr.ib(converter=tuple)
    facets: Tuple[FrozenSet[Variable], ...] = attr.ib(
        converter=lambda fs: tuple(sorted((frozenset(f) for f in fs), key=sorted))
    )

    def __attrs_post_init__(self):
        for f, g in itertools.permutations(self.facets, 2):
            if f <= g:
                raise ValueError("facets must be pairwise non-contained")

    def __repr__(self) -> str:
        return f"SimplicialComplex({len(self.vertices)} vertices, {len(self.facets)} facets)"


@attr.s(frozen=True, slots=True)
class StanleyReisnerSummary:
    #: Krull dimension, the largest facet cardinality
    dimension: int = attr.ib()
    #: Number of facets of the largest cardinality
    degree: int = attr.ib()
    equidimensional: bool = attr.ib()


def appendix_monomial_ideal(n: int) -> SquarefreeMonomialIdeal:
    """Leading monomials of the appendix basis."""
    order = appendix_order(n)
    leads = [leading_monomial(g, order) for g in appendix_basis(n)]
    return SquarefreeMonomialIdeal.of(leads, plucker_variables(n))


def stanley_reisner_complex(M: SquarefreeMonomialIdeal) -> SimplicialComplex:
    """Facets of the complex whose faces are the squarefree monomials outside M.

    A depth-first include/exclude search over the vertices; a vertex may be
    left out only while some generator through it can still be completed
    by the chosen face.
    """
    vertices = list(M.variables)
    bit = {v: 1 << k for k, v in enumerate(vertices)}
    masks = [sum(bit[v] for v in g.variables) for g in M.generators]
    through = [[g for g in masks if g & (1 << k)] for k in range(len(vertices))]
    count = len(vertices)
    facets = []

    def blockable(k: int, reachable: int) -> bool:
        return any((g & ~(1 << k)) & ~reachable == 0 for g in through[k])

    def search(k: int, face: int, excluded: List[int]):
        undecided = ((1 << count) - 1) & ~((1 << k) - 1)
        reachable = face | undecided
        if not all(blockable(e, reachable & ~(1 << e)) for e in excluded):
            return
        if k == count:
            facets.append(frozenset(v for v in vertices if face & bit[v]))
            return
        with_k = face | (1 << k)
        if not any(g & ~with_k == 0 for g in through[k]):
            search(k + 1, with_k, excluded)
        search(k + 1, face, excluded + [k])

    search(0, 0, [])
    return SimplicialComplex(vertices, facets)


def stanley_reisner_analysis(M: SquarefreeMonomialIdeal) -> StanleyReisnerSummary:
    complex_ = stanley_reisner_complex(M)
    sizes = [len(f) for f in complex_.facets]
    top = max(sizes, default=0)
    summary = StanleyReisnerSummary(
        dimension=top,
        degree=sizes.count(top),
        equidimensional=len(set(sizes)) <= 1,
    )
    SLOG.debug("stanley_reisner.done", facets=len(sizes), **attr.asdict(summary))
    return summary


def facet_arc_sets(M: SquarefreeMonomialIdeal) -> List[FrozenSet[Tuple[int, int]]]:
    """Facets read as arc sets, ``p[a,b] -> (a,b)``."""
    return sorted(
        (frozenset(v.pair for v in facet) for facet in stanley_reisner_complex(M).facets),
        key=sorted,
    )


# Straightening


@attr.s(frozen=True, slots=True, repr=False, cache_hash=True)
class StandardMonomial:
    """A product of Plücker variables along a weakly increasing chain of L_n."""

    elements: Tuple[PairIndex, ...] = attr.ib(converter=lambda ps: tuple(sorted(ps)))

    def __attrs_post_init__(self):
        for a, b in zip(self.elements, self.elements[1:]):
            if not leq_L(a, b):
                raise ValueError(f"{a} and {b} are incomparable; not a standard monomial")

    @classmethod
    def from_monomial(cls, mono: Monomial) -> "StandardMonomial":
        pairs = []
        for var, exp in mono.powers:
            pairs.extend([PairIndex.from_variable(var)] * exp)
        return cls(pairs)

    @property
    def monomial(self) -> Monomial:
        return Monomial.of(*(pair.variable for pair in self.elements))

    @property
    def degree(self) -> int:
        return len(self.elements)

    def __str__(self) -> str:
        return str(self.monomial)

    def __repr__(self) -> str:
        return f"StandardMonomial({self})"


@attr.s(frozen=True, slots=True)
class StraighteningStep:
    """One rewrite ``alpha*beta -> sum(coef * first*second)`` applied inside a
    monomial, read off the quadric whose leading product is ``alpha*beta``."""

    monomial: Monomial = attr.ib()
    alpha: PairIndex = attr.ib()
    beta: PairIndex = attr.ib()
    products: Tuple[Tuple[Rational, PairIndex, PairIndex], ...] = attr.ib(converter=tuple)

    @property
    def dominated(self) -> bool:
        """Every product is a chain whose smaller factor lies strictly below
        both alpha and beta."""
        return bool(self.products) and all(
            leq_L(first, second)
            and first not in (self.alpha, self.beta)
            and leq_L(first, self.alpha)
            and leq_L(first, self.beta)
            for _, first, second in self.products
        )


def _incomparable_pair(mono: Monomial) -> Optional[Tuple[PairIndex, PairIndex]]:
    pairs = sorted(PairIndex.from_variable(v) for v in mono.variables)
    for a, b in itertools.combinations(pairs, 2):
        if a.i < b.i and b.j < a.j:
            return a, b
    return None


def _factors(mono: Monomial) -> List[PairIndex]:
    return sorted(
        PairIndex.from_variable(v) for v in mono.variables for _ in range(mono.exponent(v))
    )


def _rewrite(alpha: PairIndex, beta: PairIndex) -> List[Tuple[Rational, PairIndex, PairIndex]]:
    """Solve the quadric on ``alpha.i < beta.i < beta.j < alpha.j`` for
    ``alpha*beta``."""
    relation = quadric(alpha.i, beta.i, beta.j, alpha.j)
    lead = Monomial.of(alpha.variable, beta.variable)
    lead_coef = relation.coefficient(lead)
    if not lead_coef:
        raise ConsistencyError(f"{relation} does not contain {lead}")
    products = []
    for mono, coef in relation.items():
        if mono == lead:
            continue
        factors = _factors(mono)
        if len(factors) != 2:
            raise ConsistencyError(f"{relation} is not quadratic in {mono}")
        products.append((-coef / lead_coef, factors[0], factors[1]))
    return products


def straightening_steps(f: Polynomial) -> Tuple[Polynomial, List[StraighteningStep]]:
    """Straighten ``f`` one incomparable product at a time.

    The largest non-standard monomial (in reverse lex) is rewritten with the
    quadric ``p[i,l]*p[j,k] - p[i,k]*p[j,l] + p[i,j]*p[k,l]`` until only
    standard monomials remain.

    Raises:
        ConsistencyError: a rewrite violates the dominance condition
    """
    order = revlex_order(_ambient_n(f))
    pending: Dict[Monomial, Rational] = dict(f.terms)
    steps = []
    while True:
        rough = [m for m in pending if _incomparable_pair(m) is not None]
        if not rough:
            break
        mono = max(rough, key=order.key)
        coef = pending.pop(mono)
        alpha, beta = _incomparable_pair(mono)
        rest = mono / Monomial.of(alpha.variable, beta.variable)
        step = StraighteningStep(mono, alpha, beta, _rewrite(alpha, beta))
        if not step.dominated:
            raise ConsistencyError(f"rewrite of {mono} is not dominated: {step}")
        steps.append(step)
        for factor, first, second in step.products:
            target = rest * Monomial.of(first.variable, second.variable)
            value = pending.get(target, 0) + factor * coef
            if value:
                pending[target] = value
            else:
                pending.pop(target, None)
    return Polynomial._raw(pending), steps


def straighten(f: Polynomial) -> List[Tuple[Rational, StandardMonomial]]:
    """Express ``f`` modulo the Plücker ideal in standard monomials.

    This is the normal form with respect to the quadrics, which form a
    reverse lex Groebner basis.
    """
    n = _ambient_n(f)
    if n < 4 or f.is_zero:
        reduced = f
    else:
        reduced = normal_form(f, plucker_ideal(n).generators, revlex_order(n))
    return [(coef, StandardMonomial.from_monomial(mono)) for mono, coef in reduced.items()]


def asl_dominance_holds(n: int) -> bool:
    """Straighten every incomparable product of L_n, step by step and by
    normal form, and check that the smaller factor of each resulting term
    lies below both inputs."""
    for alpha, beta in itertools.combinations(all_pairs(n), 2):
        if leq_L(alpha, beta) or leq_L(beta, alpha):
            continue
        product = Polynomial.from_monomial(Monomial.of(alpha.variable, beta.variable))
        try:
            straightening_steps(product)
        except ConsistencyError as exc:
            SLOG.info("asl.dominance_failed", alpha=str(alpha), beta=str(beta), error=str(exc))
            return False
        for _, standard in straighten(product):
            first = standard.elements[0]
            if not (leq_L(first, alpha) and leq_L(first, beta)):
                SLOG.info("asl.dominance_failed", alpha=str(alpha), beta=str(beta))
                return False
    return True


def standard_monomials(pairs: Sequence[PairIndex], degree: int) -> List[StandardMonomial]:
    """Degree ``degree`` multichains drawn from ``pairs``."""
    result = []
    for combo in itertools.combinations_with_replacement(sorted(pairs), degree):
        if all(leq_L(a, b) for a, b in zip(combo, combo[1:])):
            result.append(StandardMonomial(combo))
    return result


def _image_rank(monomials: Sequence[Monomial], n: int) -> int:
    """Rank over Q of the Plücker images of ``monomials``."""
    images = [plucker_image(Polynomial.from_monomial(m)) for m in monomials]
    columns = sorted({m for image in images for m in image.terms}, key=str)
    if not images or not columns:
        return 0
    index = {m: c for c, m in enumerate(columns)}
    rows = []
    for image in images:
        row = [QQ(0)] * len(columns)
        for m, coef in image.terms.items():
            row[index[m]] = QQ(coef.numerator, coef.denominator)
        rows.append(row)
    return DomainMatrix(rows, (len(rows), len(columns)), QQ).rank()


def standard_monomial_basis_check(n: int, degree: int) -> bool:
    """Degree-``degree`` standard monomials map to independent polynomials,
    and there are as many of them as monomials outside the reverse lex
    initial ideal.

    Raises:
        BudgetExceeded: ``n`` or ``degree`` is above the linear algebra caps
    """
    if n > MAX_BASIS_CHECK_N or degree > MAX_BASIS_CHECK_DEGREE:
        raise BudgetExceeded(
            f"basis check is limited to n <= {MAX_BASIS_CHECK_N}, "
            f"degree <= {MAX_BASIS_CHECK_DEGREE}",
            budget=MAX_BASIS_CHECK_N,
        )
    if degree == 0:
        return _image_rank([Monomial.one()], n) == 1
    pairs = all_pairs(n)
    standard = standard_monomials(pairs, degree)
    order = revlex_order(n)
    leads = [leading_monomial(q, order) for q in plucker_ideal(n).generators]
    outside = 0
    for combo in itertools.combinations_with_replacement(pairs, degree):
        mono = Monomial.of(*(pair.variable for pair in combo))
        if not any(lead.divides(mono) for lead in leads):
            outside += 1
    rank = _image_rank([s.monomial for s in standard], n)
    SLOG.debug(
        "asl.basis_check", n=n, degree=degree, standard=len(standard), outside=outside, rank=rank
    )
    return rank == len(standard) == outside


def span_check_degree_two(S: Sublattice) -> bool:
    """Degree-two standard monomials on ``S`` span the images of all degree-two
    monomials on ``S``."""
    members = sorted(S.members)
    products = [
        Monomial.of(a.variable, b.variable)
        for a, b in itertools.combinations_with_replacement(members, 2)
    ]
    standard = standard_monomials(members, 2)
    return _image_rank(products, S.n) == len(standard)


# Elimination


def _eliminate_cached(ideal: Ideal, keep, order: MonomialOrder, settings) -> Ideal:
    budget = settings.spair_budget if settings is not None else DEFAULT_SPAIR_BUDGET
    gb = None if ideal.is_zero else cached_buchberger(ideal, order, settings)
    return eliminate(ideal, keep, order, spair_budget=budget, gb=gb)


def eliminate_onto(L: Sublattice, settings=None) -> Ideal:
    """The Plücker ideal of L_n intersected with the ring of ``L``."""
    return _eliminate_cached(plucker_ideal(L.n), L.variables, elimination_order(L), settings)


def unsound_generators(eliminated: Ideal, keep: Iterable[Variable]) -> List[Polynomial]:
    """Generators that use an eliminated variable or fail the membership
    oracle."""
    keep = frozenset(keep)
    return [
        g for g in eliminated.generators
        if not g.variables <= keep or not plucker_map_oracle(g)
    ]


def elimination_vs_quadrics(L: Sublattice, settings=None) -> bool:
    """The elimination ideal of the Plücker ideal onto ``L`` is generated by
    the quadrics ``Q[i,j,k,l]`` with ``p[i,l]`` in ``L``.

    Raises:
        NotCompatibleError: ``L`` is not a compatible sublattice
    """
    if not is_compatible(L):
        raise NotCompatibleError(f"{L!r} is not a compatible sublattice")
    eliminated = eliminate_onto(L, settings)
    unsound = unsound_generators(eliminated, L.variables)
    if unsound:
        SLOG.warning("elimination.unsound", sublattice=repr(L), generator=str(unsound[0]))
        return False
    budget = settings.spair_budget if settings is not None else DEFAULT_SPAIR_BUDGET
    restricted = elimination_order(L).restrict(L.variables)
    return ideal_equal(eliminated, quadric_ideal(L), restricted, spair_budget=budget)


def deleted_segment(G: Graph) -> int:
    """How many variables of the appendix order the graph drops.

    Raises:
        NotCompatibleError: the missing edges are not an initial segment of
            ``(1,2), (1,3), ..., (1,n), (2,3), ...``
    """
    pairs = all_pairs(G.n)
    missing = set(pairs) - G.edges
    if set(pairs[: len(missing)]) != missing:
        raise NotCompatibleError(
            f"missing edges {sorted(missing)} are not an initial segment of the appendix order"
        )
    return len(missing)


def elim_order_graph_corollary(G: Graph, settings=None) -> bool:
    """Eliminating a leading segment of the appendix order leaves an ideal
    generated by the quadrics supported on the edges of ``G``."""
    k = deleted_segment(G)
    variables = plucker_variables(G.n)
    keep = variables[k:]
    order = MonomialOrder.block_elim_lex(variables[:k], keep)
    eliminated = _eliminate_cached(plucker_ideal(G.n), keep, order, settings)
    if unsound_generators(eliminated, keep):
        return False
    budget = settings.spair_budget if settings is not None else DEFAULT_SPAIR_BUDGET
    return ideal_equal(
        eliminated, edge_quadric_ideal(G), order.restrict(keep), spair_budget=budget
    )


def sublattice_lemma_holds(S: Sublattice) -> bool:
    """The closure condition agrees with the degree-two span test."""
    return asl_closure_holds(S) == span_check_degree_two(S)

