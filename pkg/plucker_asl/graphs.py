"""Graphs on [n], interval recognition and the overlap criteria.

The graph of a subposet S of L_n has an edge {i,j} for each (i,j) in S.
It is an interval graph when each maximal clique is a run {a, ..., b}
with a < b. Functions that assume no isolated vertices say so.
"""

import itertools
from typing import FrozenSet, Iterator, List, Optional, Tuple

import attr
import networkx as nx
import structlog
import sympy as sp

from plucker_asl.exceptions import (
    BudgetExceeded,
    ConsistencyError,
    InvalidIndexError,
    InvalidSystemError,
)
from plucker_asl.lattice import PairIndex, Sublattice, as_pair

SLOG = structlog.get_logger(__name__)

#: Largest n for clique and interval-system enumeration.
MAX_GRAPH_N = 12
#: Largest n for which the Gorenstein count is confirmed by enumeration.
GORENSTEIN_BRUTE_FORCE_N = 10

Interval = Tuple[int, int]


@attr.s(frozen=True, slots=True, repr=False)
class Graph:
    n: int = attr.ib()
    edges: FrozenSet[PairIndex] = attr.ib(
        converter=lambda pairs: frozenset(as_pair(p) for p in pairs)
    )

    def __attrs_post_init__(self):
        for edge in self.edges:
            if edge.j > self.n:
                raise InvalidIndexError(f"edge {edge} is not on [{self.n}]")

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, itertools.combinations(range(1, n + 1), 2))

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(1, self.n + 1))
        graph.add_edges_from(tuple(e) for e in self.edges)
        return graph

    @property
    def isolated_vertices(self) -> List[int]:
        touched = {v for e in self.edges for v in e}
        return [v for v in range(1, self.n + 1) if v not in touched]

    @property
    def is_connected(self) -> bool:
        return self.n > 0 and nx.is_connected(self.to_networkx())

    def complement(self) -> "Graph":
        everything = Graph.complete(self.n).edges
        return Graph(self.n, everything - self.edges)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, {{{' '.join(map(str, sorted(self.edges)))}}})"


@attr.s(frozen=True, slots=True, repr=False)
class CliqueIntervalSystem:
    """Maximal cliques [a_1,b_1], ..., [a_s,b_s] of an interval graph with
    strictly increasing left and right endpoints."""

    n: int = attr.ib()
    intervals: Tuple[Interval, ...] = attr.ib(
        converter=lambda items: tuple((int(a), int(b)) for a, b in items)
    )

    def __attrs_post_init__(self):
        for a, b in self.intervals:
            if not (1 <= a < b <= self.n):
                raise InvalidSystemError(f"[{a},{b}] is not an interval of [{self.n}]")
        for (a1, b1), (a2, b2) in zip(self.intervals, self.intervals[1:]):
            if a2 <= a1:
                raise InvalidSystemError("left endpoints must increase strictly")
            if b2 <= b1:
                raise InvalidSystemError(
                    f"right endpoints must increase strictly, [{a2},{b2}] lies in [{a1},{b1}]"
                )

    @classmethod
    def parse(cls, text: str, n: int) -> "CliqueIntervalSystem":
        from plucker_asl.textformat.builder import parse_clique_system

        return cls(n, parse_clique_system(text, n=n))

    @property
    def isolated_vertices(self) -> List[int]:
        covered = {v for a, b in self.intervals for v in range(a, b + 1)}
        return [v for v in range(1, self.n + 1) if v not in covered]

    @property
    def is_connected(self) -> bool:
        return not self.isolated_vertices and all(o > 0 for o in overlaps(self))

    def members(self) -> FrozenSet[PairIndex]:
        return frozenset(
            PairIndex(i, j)
            for a, b in self.intervals
            for i in range(a, b + 1)
            for j in range(i + 1, b + 1)
        )

    def sublattice(self) -> Sublattice:
        return Sublattice(self.n, self.members())

    def graph(self) -> Graph:
        return Graph(self.n, self.members())

    def __str__(self) -> str:
        from plucker_asl.textformat.builder import format_clique_system

        return format_clique_system(self.intervals)

    def __repr__(self) -> str:
        return f"CliqueIntervalSystem(n={self.n}, {self})"


def graph_of(S, n: int) -> Graph:
    if isinstance(S, Sublattice):
        S = S.members
    return Graph(n, S)


def maximal_cliques(G: Graph) -> List[Tuple[int, ...]]:
    """Every maximal clique, sorted; isolated vertices are singleton cliques."""
    if G.n > MAX_GRAPH_N:
        raise BudgetExceeded(f"clique enumeration is capped at n = {MAX_GRAPH_N}", MAX_GRAPH_N)
    return sorted(tuple(sorted(c)) for c in nx.find_cliques(G.to_networkx()))


def interval_system(
    G: Graph, allow_isolated: bool = False
) -> Optional[CliqueIntervalSystem]:
    """The clique interval system of G, or None when G is not an interval graph.

    Args:
        allow_isolated (bool): Ignore isolated vertices instead of refusing
            the graph

    Raises:
        InvalidSystemError: G has isolated vertices and ``allow_isolated``
            is off
    """
    if G.isolated_vertices and not allow_isolated:
        raise InvalidSystemError(
            f"vertices {G.isolated_vertices} are isolated; interval graphs here have none"
        )
    intervals = []
    for clique in maximal_cliques(G):
        if len(clique) < 2:
            continue
        a, b = clique[0], clique[-1]
        if b - a + 1 != len(clique):
            return None
        intervals.append((a, b))
    return CliqueIntervalSystem(G.n, sorted(intervals))


def is_interval_graph(G: Graph, allow_isolated: bool = False) -> bool:
    return interval_system(G, allow_isolated=allow_isolated) is not None


def condition_star(G: Graph) -> bool:
    """Edges {i,j}, {i,l} force {j,l}; edges {i,j}, {k,j} force {i,k}."""
    edges = G.edges
    for e, f in itertools.combinations(edges, 2):
        if e.i == f.i and PairIndex(min(e.j, f.j), max(e.j, f.j)) not in edges:
            return False
        if e.j == f.j and PairIndex(min(e.i, f.i), max(e.i, f.i)) not in edges:
            return False
    return True


def is_chordal(G: Graph) -> bool:
    return nx.is_chordal(G.to_networkx())


def overlaps(system: CliqueIntervalSystem) -> List[int]:
    return [
        max(0, b1 - a2 + 1)
        for (_, b1), (a2, _) in zip(system.intervals, system.intervals[1:])
    ]


def perfect_criterion(system: CliqueIntervalSystem) -> bool:
    return all(o >= 2 for o in overlaps(system))


def gorenstein_criterion(system: CliqueIntervalSystem) -> bool:
    return all(o <= 3 for o in overlaps(system))


def enumerate_interval_systems(
    n: int,
    min_overlap: int = 0,
    max_overlap: Optional[int] = None,
    allow_gaps: bool = False,
) -> Iterator[CliqueIntervalSystem]:
    """Yield clique interval systems on [n] in lexicographic order.

    Without gaps the intervals cover [n] (no isolated vertices). With gaps
    any nonempty family of pairwise non-nested intervals is produced.
    Overlap bounds apply to consecutive intervals.
    """
    if n > MAX_GRAPH_N:
        raise BudgetExceeded(
            f"interval systems are enumerated up to n = {MAX_GRAPH_N}", MAX_GRAPH_N
        )

    def fits(b_prev: int, a_next: int) -> bool:
        overlap = max(0, b_prev - a_next + 1)
        if overlap < min_overlap:
            return False
        return max_overlap is None or overlap <= max_overlap

    def extend(prefix: List[Interval]) -> Iterator[List[Interval]]:
        a_last, b_last = prefix[-1]
        if b_last == n or allow_gaps:
            yield prefix
        top = n if allow_gaps else b_last + 1
        for a in range(a_last + 1, min(top, n - 1) + 1):
            if not fits(b_last, a):
                continue
            for b in range(max(b_last + 1, a + 1), n + 1):
                yield from extend(prefix + [(a, b)])

    first_starts = range(1, n) if allow_gaps else [1]
    for a in first_starts:
        for b in range(a + 1, n + 1):
            for intervals in extend([(a, b)]):
                yield CliqueIntervalSystem(n, intervals)


def gorenstein_count_recurrence(n: int) -> int:
    """p_{k+1} = 2 p_k + q_k, q_{k+1} = p_k + q_k from p_0 = q_0 = 1;
    the count is p_{n-4} + q_{n-4}."""
    _check_gorenstein_n(n)
    p, q = 1, 1
    for _ in range(n - 4):
        p, q = 2 * p + q, p + q
    return p + q


def gorenstein_count_closed_form(n: int) -> int:
    """Evaluate the closed form exactly in Q(sqrt 5)."""
    _check_gorenstein_n(n)
    root5 = sp.sqrt(5)
    k = n - 4
    value = sp.expand(
        sp.Rational(1, 5)
        * (
            (5 + 2 * root5) * ((3 + root5) / 2) ** k
            + (5 - 2 * root5) * ((3 - root5) / 2) ** k
        )
    )
    if not value.is_Integer:
        raise ConsistencyError(f"closed form is not an integer at n = {n}: {value}")
    return int(value)


def gorenstein_count_brute_force(n: int) -> int:
    """Interval systems covering [n] with every overlap in {2, 3}."""
    _check_gorenstein_n(n)
    return sum(1 for _ in enumerate_interval_systems(n, min_overlap=2, max_overlap=3))


def count_gorenstein_perfect(
    n: int, brute_force_limit: int = GORENSTEIN_BRUTE_FORCE_N
) -> int:
    """Number of perfect compatible sublattices of L_n with Gorenstein ASL.

    Raises:
        ConsistencyError: the independent methods disagree
    """
    counts = {
        "recurrence": gorenstein_count_recurrence(n),
        "closed_form": gorenstein_count_closed_form(n),
    }
    if n <= brute_force_limit:
        counts["brute_force"] = gorenstein_count_brute_force(n)
    if len(set(counts.values())) != 1:
        raise ConsistencyError(f"Gorenstein counts disagree at n = {n}: {counts}")
    SLOG.debug("gorenstein.count", n=n, **counts)
    return counts["recurrence"]


def _check_gorenstein_n(n: int):
    if n < 4:
        raise InvalidIndexError(f"the Gorenstein count needs n >= 4, got {n}")
