"""Named verification checks and the runner behind the command line.

Each check takes ``n`` and the run ``Settings`` and returns an ``Outcome``;
``run_check`` wraps it in a timed ``VerificationReport``. ``Runner.run``
runs the membership oracle first and skips everything else when it fails.
"""

import itertools
import random
from concurrent.futures import ThreadPoolExecutor
from math import comb
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import attr
import structlog

from plucker_asl import arcs, graphs, lattice, plucker
from plucker_asl.caching import cached_buchberger
from plucker_asl.exactalg.orders import leading_monomial
from plucker_asl.exceptions import BudgetExceeded, ConsistencyError, InvalidIndexError
from plucker_asl.groebner import is_groebner
from plucker_asl.lattice import PosetKind, RankClause, Sublattice
from plucker_asl.reports import ReportSet, Verdict, VerificationReport, timed

SLOG = structlog.get_logger(__name__)

ORACLE = "oracle"

#: Largest n at which the oracle also covers Groebner basis elements and
#: elimination generators.
ORACLE_DERIVED_MAX_N = 5


@attr.s(frozen=True)
class Outcome:
    ok: bool = attr.ib()
    witness: Optional[str] = attr.ib(default=None)
    notes: Tuple[str, ...] = attr.ib(converter=tuple, factory=tuple)
    value: Optional[int] = attr.ib(default=None)

    @classmethod
    def from_failures(cls, failures: Sequence[str], notes=(), value=None) -> "Outcome":
        notes = list(notes)
        if len(failures) > 1:
            notes.append(f"{len(failures)} failing cases")
        return cls(not failures, failures[0] if failures else None, notes, value)


@attr.s(frozen=True)
class Check:
    name: str = attr.ib()
    func: Callable[..., Outcome] = attr.ib(repr=False)
    description: str = attr.ib()
    min_n: int = attr.ib()
    max_n: int = attr.ib()


CHECKS: Dict[str, Check] = {}


def check(name: str, description: str, min_n: int, max_n: int):
    """Register a check under ``name``."""

    def decorator(func):
        CHECKS[name] = Check(name, func, description, min_n, max_n)
        return func

    return decorator


def _subsets(pairs: Sequence, nonempty: bool = True):
    start = 1 if nonempty else 0
    for mask in range(start, 1 << len(pairs)):
        yield [p for bit, p in enumerate(pairs) if mask >> bit & 1]


@check(ORACLE, "constructed generators, bases and eliminations vanish under the Plücker map", 4, 7)
def check_oracle(n: int, settings) -> Outcome:
    points = range(1, n + 1)
    cases = [plucker.quadric(*idx) for idx in itertools.combinations(points, 4)]
    cases += [plucker.cubic5(*idx) for idx in itertools.combinations(points, 5)]
    cases += [plucker.cubic6(*idx) for idx in itertools.combinations(points, 6)]
    failures = [str(f) for f in cases if not plucker.plucker_map_oracle(f)]
    if plucker.plucker_map_oracle(plucker.signed_p(1, 2)):
        failures.append("p[1,2] passes the membership oracle")
    notes = [f"{len(cases)} polynomials"]
    if not failures and n <= ORACLE_DERIVED_MAX_N:
        ideal = plucker.plucker_ideal(n)
        bases = [cached_buchberger(ideal, plucker.appendix_order(n), settings)]
        bases.append(cached_buchberger(ideal, plucker.revlex_order(n), settings))
        derived = [g for gb in bases for g in gb]
        failures += [
            f"Groebner basis element {g} fails the membership oracle"
            for g in derived
            if not plucker.plucker_map_oracle(g)
        ]
        perfect = lattice.enumerate_perfect_compatible(n, settings.rank_clause)
        for L in perfect:
            eliminated = plucker.eliminate_onto(L, settings)
            derived += eliminated.generators
            failures += [
                f"elimination generator {g} onto {L!r} is unsound"
                for g in plucker.unsound_generators(eliminated, L.variables)
            ]
        notes.append(f"{len(derived)} derived generators over {len(perfect)} eliminations")
    return Outcome.from_failures(failures, notes=notes)


@check("gb-quadrics", "the quadrics are a Groebner basis under revlex or Π-lex", 4, 7)
def check_gb_quadrics(n: int, settings, order: str = "revlex", extensions: int = 5) -> Outcome:
    if order == "revlex":
        factory, kind = plucker.revlex_order, PosetKind.L
    elif order == "lex":
        factory, kind = plucker.pi_lex_order, PosetKind.PI
    else:
        raise ValueError(f"order must be revlex or lex, got {order!r}")
    quadrics = plucker.plucker_ideal(n).generators
    orders = [("canonical extension", factory(n))]
    for k in range(extensions):
        seed = settings.seed + k
        extension = lattice.linear_extension(n, kind, seed)
        orders.append((f"extension seed {seed}", factory(n, extension)))
    failures = [
        f"not a Groebner basis for the {label}: {o.describe()}"
        for label, o in orders
        if not is_groebner(quadrics, o)
    ]
    notes = [f"{len(orders)} orders"]
    if order == "lex" and n <= 6:
        rev = {leading_monomial(q, plucker.revlex_order(n)) for q in quadrics}
        lex = {leading_monomial(q, plucker.pi_lex_order(n)) for q in quadrics}
        if rev != lex:
            failures.append(f"initial ideals differ at {sorted(map(str, rev ^ lex))[0]}")
        else:
            notes.append("revlex and Π-lex initial ideals coincide")
    return Outcome.from_failures(failures, notes)


@check("gb-appendix", "quadrics and cubics form the reduced appendix basis", 4, 7)
def check_gb_appendix(n: int, settings) -> Outcome:
    order = plucker.appendix_order(n)
    ideal = plucker.plucker_ideal(n)
    gb = cached_buchberger(ideal, order, settings)
    expected = plucker.appendix_basis(n)
    failures = []
    if len(gb) != len(expected):
        failures.append(f"basis has {len(gb)} elements, expected {len(expected)}")
    for got, want in zip(gb.elements, expected):
        if got != want:
            failures.append(f"found {got} where {want} was expected")
            break
    failures += [
        f"{g} fails the membership oracle" for g in gb if not plucker.plucker_map_oracle(g)
    ]
    if n >= 5 and is_groebner(ideal.generators, order):
        failures.append("the quadrics alone are already a basis")
    notes = [f"{len(gb)} elements = {comb(n, 4)} + {comb(n, 5)} + {comb(n, 6)}"]
    return Outcome.from_failures(failures, notes)


@check("elimination", "eliminating onto compatible sublattices leaves the quadrics", 3, 6)
def check_elimination(n: int, settings) -> Outcome:
    if n <= 5:
        scope, found = "compatible", lattice.enumerate_compatible(n, settings.rank_clause)
    else:
        scope, found = "perfect", lattice.enumerate_perfect_compatible(n, settings.rank_clause)
    failures = []
    for L in found:
        unsound = plucker.unsound_generators(plucker.eliminate_onto(L, settings), L.variables)
        if unsound:
            failures.append(f"{unsound[0]} onto {L!r} leaves the ring or fails the oracle")
        elif not plucker.elimination_vs_quadrics(L, settings):
            failures.append(repr(L))
    return Outcome.from_failures(failures, notes=[f"{len(found)} {scope} sublattices"])


@check("elim-order-graphs", "graphs missing a leading segment keep quadric generators", 4, 6)
def check_elim_order_graphs(n: int, settings) -> Outcome:
    pairs = lattice.all_pairs(n)
    failures = []
    for k in range(len(pairs)):
        G = graphs.Graph(n, pairs[k:])
        if not plucker.elim_order_graph_corollary(G, settings):
            failures.append(f"deleting {k} leading variables: {G!r}")
    return Outcome.from_failures(failures, notes=[f"{len(pairs)} graphs"])


@check("sublattice-lemma", "the closure condition matches the degree-two span test", 3, 5)
def check_sublattice_lemma(n: int, settings) -> Outcome:
    pairs = lattice.all_pairs(n)
    sublattices = [
        Sublattice(n, members)
        for members in _subsets(pairs, nonempty=False)
        if lattice.is_sublattice(members)
    ]
    failures = [repr(S) for S in sublattices if not plucker.sublattice_lemma_holds(S)]
    compatible = lattice.enumerate_compatible(n, settings.rank_clause)
    failures += [
        f"compatible {S!r} violates the closure condition"
        for S in compatible
        if not lattice.asl_closure_holds(S)
    ]
    return Outcome.from_failures(
        failures, notes=[f"{len(sublattices)} sublattices", f"{len(compatible)} compatible"]
    )


#: Largest n for which every subset of L_n is tried by the graph checks.
EXHAUSTIVE_GRAPH_N = 6


def _sample_edge_sets(n: int, samples: int, seed: int) -> List[List[lattice.PairIndex]]:
    """Random edge sets, half uniform and half near an interval system."""
    rng = random.Random(seed)
    pairs = lattice.all_pairs(n)
    systems = list(graphs.enumerate_interval_systems(n, allow_gaps=True))
    found = []
    for attempt in range(samples * 20):
        if len(found) == samples:
            break
        if attempt % 2:
            edges = [p for p in pairs if rng.random() < 0.5]
        else:
            edges = set(rng.choice(systems).members())
            if rng.random() < 0.5:
                edges ^= {rng.choice(pairs)}
            edges = sorted(edges)
        if edges and not graphs.Graph(n, edges).isolated_vertices:
            found.append(edges)
    return found


@check("sydney", "Π up-sets, interval graphs and condition (*) agree", 3, 7)
def check_sydney(n: int, settings) -> Outcome:
    if n <= EXHAUSTIVE_GRAPH_N:
        mode = "exhaustive"
        candidates = (
            S for S in _subsets(lattice.all_pairs(n)) if not graphs.Graph(n, S).isolated_vertices
        )
    else:
        mode = f"{settings.samples} samples, seed {settings.seed + n}"
        candidates = _sample_edge_sets(n, settings.samples, settings.seed + n)

    failures = []
    cases = disconnected_star = 0
    for edges in candidates:
        cases += 1
        G = graphs.Graph(n, edges)
        interval = graphs.interval_system(G) is not None
        up_set = lattice.complement_is_poset_ideal(Sublattice(n, edges))
        star = graphs.condition_star(G)
        if up_set != interval:
            failures.append(f"up-set={up_set} interval={interval}: {G!r}")
        if interval and not graphs.is_chordal(G):
            failures.append(f"interval graph is not chordal: {G!r}")
        if G.is_connected:
            if star != interval:
                failures.append(f"(*)={star} interval={interval}: {G!r}")
        elif interval and not star:
            failures.append(f"interval graph violates (*): {G!r}")
        elif star and not interval:
            disconnected_star += 1
    notes = [
        f"{cases} graphs ({mode})",
        f"{disconnected_star} disconnected graphs satisfy (*) without being interval",
    ]
    return Outcome.from_failures(failures, notes)


@check("gorenstein", "overlap criteria match purity and perfection", 4, 10)
def check_gorenstein(n: int, settings) -> Outcome:
    failures = []
    notes = []
    if n <= 8:
        systems = list(graphs.enumerate_interval_systems(n))
        for system in systems:
            S = system.sublattice()
            pure = lattice.is_pure(lattice.join_irreducibles(S))
            if graphs.gorenstein_criterion(system) != pure:
                failures.append(f"overlaps {graphs.overlaps(system)} but pure={pure}: {system}")
            if n <= 7 and graphs.perfect_criterion(system) != lattice.is_perfect(
                S, settings.rank_clause
            ):
                failures.append(f"perfect criterion disagrees on {system}")
        notes.append(f"{len(systems)} interval systems")
    try:
        count = graphs.count_gorenstein_perfect(n)
    except ConsistencyError as exc:
        failures.append(str(exc))
        count = None
    return Outcome.from_failures(failures, notes, value=count)


@check("asl-basis", "standard monomials are a basis and straightening is dominated", 3, 6)
def check_asl_basis(n: int, settings, max_degree: int = 3) -> Outcome:
    failures = [
        f"degree {d} standard monomials are not a basis"
        for d in range(max_degree + 1)
        if not plucker.standard_monomial_basis_check(n, d)
    ]
    if not plucker.asl_dominance_holds(n):
        failures.append("an incomparable product straightens without dominance")
    for alpha, beta in itertools.combinations(lattice.all_pairs(n), 2):
        product = plucker.signed_p(*alpha) * plucker.signed_p(*beta)
        rewritten, _ = plucker.straightening_steps(product)
        expected = {s.monomial: c for c, s in plucker.straighten(product)}
        if dict(rewritten.terms) != expected:
            failures.append(f"straightening methods disagree on {alpha}*{beta}")
    return Outcome.from_failures(failures, notes=[f"degrees 0..{max_degree}"])


@check("stanley-reisner", "the appendix initial ideal has the expected complex", 4, 8)
def check_stanley_reisner(n: int, settings) -> Outcome:
    M = plucker.appendix_monomial_ideal(n)
    summary = plucker.stanley_reisner_analysis(M)
    failures = []
    if summary.dimension != 2 * n - 3:
        failures.append(f"dimension {summary.dimension}, expected {2 * n - 3}")
    if summary.degree != lattice.catalan(n - 2):
        failures.append(f"degree {summary.degree}, expected {lattice.catalan(n - 2)}")
    if not summary.equidimensional:
        failures.append("complex is not equidimensional")
    facets = set(plucker.facet_arc_sets(M))
    maximal = {A.arcs for A in arcs.enumerate_maximal(n)}
    if facets != maximal:
        failures.append(f"facets and maximal arrangements differ in {len(facets ^ maximal)} sets")
    notes = [f"{len(M)} generators", f"dimension {summary.dimension}, degree {summary.degree}"]
    return Outcome.from_failures(failures, notes)


@check("arcs-bijection", "maximal arrangements match full binary trees", 2, 9)
def check_arcs_bijection(n: int, settings) -> Outcome:
    found = arcs.enumerate_maximal(n)
    failures = []
    if len(found) != lattice.catalan(n - 2):
        failures.append(f"{len(found)} maximal arrangements, expected {lattice.catalan(n - 2)}")
    quota = {length: 2 for length in range(1, n - 1)}
    quota[n - 1] = 1
    shapes = set()
    for A in found:
        if A.length_counts() != quota:
            failures.append(f"length counts {A.length_counts()} in {A}")
        tree = arcs.to_tree(A)
        if arcs.from_tree(tree) != A or tree.leaf_count != n - 1:
            failures.append(f"tree round trip fails for {A}")
        shapes.add(arcs.tree_shape(tree))
        for arc in A.sorted()[:2]:
            smaller = arcs.ArcArrangement(n, A.arcs - {arc})
            extended = arcs.extend_to_maximal(smaller)
            if not (extended.is_maximal and smaller.arcs <= extended.arcs):
                failures.append(f"extension of {smaller} failed")
    if n >= 2 and shapes != arcs.enumerate_tree_shapes(n - 1):
        failures.append("tree shapes do not cover every full binary tree")
    if n <= arcs.MAX_NAIVE_N and arcs.enumerate_maximal_naive(n) != found:
        failures.append("search and subset oracle disagree")
    return Outcome.from_failures(failures, notes=[f"{len(found)} arrangements"])


@check("count-perfect", "perfect compatible sublattices are counted by Catalan numbers", 3, 9)
def check_count_perfect(n: int, settings) -> Outcome:
    count = len(lattice.enumerate_perfect_compatible(n, settings.rank_clause))
    expected = lattice.catalan(n - 2)
    failures = [] if count == expected else [f"found {count}, expected C_{n - 2} = {expected}"]
    return Outcome.from_failures(failures, value=count)


@check("count-gorenstein", "Gorenstein perfect sublattices, counted three ways", 4, 12)
def check_count_gorenstein(n: int, settings) -> Outcome:
    try:
        return Outcome(True, value=graphs.count_gorenstein_perfect(n))
    except ConsistencyError as exc:
        return Outcome(False, str(exc))


@check("count-arcs", "maximal arc arrangements are counted by Catalan numbers", 2, 10)
def check_count_arcs(n: int, settings) -> Outcome:
    count = len(arcs.enumerate_maximal(n))
    expected = lattice.catalan(n - 2)
    failures = [] if count == expected else [f"found {count}, expected C_{n - 2} = {expected}"]
    return Outcome.from_failures(failures, value=count)


@check("rank-clause", "compare the two readings of the rank requirement", 3, 9)
def check_rank_clause(n: int, settings) -> Outcome:
    at_least = set(map(repr, lattice.enumerate_compatible(n, RankClause.AT_LEAST_N)))
    exact = set(map(repr, lattice.enumerate_compatible(n, RankClause.EXACT_N)))
    failures = [] if exact <= at_least else ["an exact-rank sublattice misses the weaker reading"]
    notes = [
        f"{len(at_least)} compatible with rank >= {lattice.rank_threshold(n)}",
        f"{len(exact)} with rank == {lattice.rank_threshold(n)}",
        f"readings differ on {len(at_least - exact)} sublattices",
    ]
    return Outcome.from_failures(failures, notes)


def run_check(name: str, n: int, settings, **options) -> VerificationReport:
    """Run one check and report it.

    Raises:
        KeyError: no check is registered under ``name``
        BudgetExceeded: ``n`` is above the check's limit, or a computation
            ran out of budget
    """
    chk = CHECKS[name]
    if n < chk.min_n:
        raise InvalidIndexError(f"{name} needs n >= {chk.min_n}, got {n}")
    if n > chk.max_n:
        raise BudgetExceeded(f"{name} runs up to n = {chk.max_n}, got {n}", budget=chk.max_n)
    log = SLOG.bind(check=name, n=n)
    log.debug("check.start", **options)
    with timed() as clock:
        outcome = chk.func(n, settings, **options)
    report = VerificationReport(
        check=name,
        parameters={"n": n, **options},
        verdict=Verdict.PASS if outcome.ok else Verdict.FAIL,
        witness=outcome.witness,
        elapsed=clock["elapsed"],
        notes=outcome.notes,
        value=outcome.value,
    )
    log.info("check.done", verdict=report.verdict.value, elapsed=round(report.elapsed, 3))
    return report


PlanItem = Tuple[str, int, dict]


def plan_run_all(max_n: int) -> List[PlanItem]:
    """Every registered check at every n it supports up to ``max_n``."""
    plan = []
    for name in sorted(CHECKS):
        chk = CHECKS[name]
        for n in range(chk.min_n, min(chk.max_n, max_n) + 1):
            if name == "gb-quadrics":
                plan.append((name, n, {"order": "revlex"}))
                plan.append((name, n, {"order": "lex"}))
            else:
                plan.append((name, n, {}))
    return plan


class Runner:
    """Runs a plan behind the oracle gate and collects reports."""

    def __init__(self, settings):
        self.settings = settings
        self.reports = ReportSet()
        self.budget_exceeded = False

    def _run(self, item: PlanItem) -> VerificationReport:
        name, n, options = item
        try:
            return run_check(name, n, self.settings, **options)
        except BudgetExceeded as exc:
            self.budget_exceeded = True
            SLOG.warning("check.budget_exceeded", check=name, n=n, error=str(exc))
            return VerificationReport(
                check=name,
                parameters={"n": n, **options},
                verdict=Verdict.SKIPPED,
                notes=[f"budget exceeded: {exc}"],
            )

    def gate(self, plan: Sequence[PlanItem]) -> bool:
        """Run the oracle at every n of the plan that it covers."""
        oracle = CHECKS[ORACLE]
        ns = sorted({n for _, n, _ in plan if oracle.min_n <= n <= oracle.max_n})
        if not ns:
            ns = [oracle.min_n]
        gate_reports = [self._run((ORACLE, n, {})) for n in ns]
        self.reports.extend(gate_reports)
        return all(r.passed for r in gate_reports)

    def run(self, plan: Sequence[PlanItem], gated: bool = True) -> ReportSet:
        """Run ``plan``; with ``gated`` the oracle runs first and a failure
        skips the rest."""
        rest = [item for item in plan if item[0] != ORACLE] if gated else list(plan)
        if gated and not self.gate(plan):
            SLOG.warning("oracle.failed", skipped=len(rest))
            self.reports.extend(
                VerificationReport(
                    check=name,
                    parameters={"n": n, **options},
                    verdict=Verdict.SKIPPED,
                    notes=["membership oracle failed"],
                )
                for name, n, options in rest
            )
            return self.reports
        if self.settings.jobs > 1:
            with ThreadPoolExecutor(max_workers=self.settings.jobs) as pool:
                self.reports.extend(pool.map(self._run, rest))
        else:
            self.reports.extend(self._run(item) for item in rest)
        return self.reports
