"""The lattice L_n, its companion poset Π_n, and compatible sublattices.

L_n orders pairs componentwise (``(i,j) <= (k,l)`` when ``i <= k`` and
``j <= l``); Π_n flips the second coordinate. A sublattice of L_n is
compatible when its complement is a down-set of Π_n and its rank reaches
the threshold ``min(n, 2n-4)``; the cap makes ``L_3`` (rank 2) count.
"""

import itertools
import random
from enum import Enum
from math import comb
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Set, Tuple, Union

import attr
import networkx as nx
import structlog

from plucker_asl.exactalg.polynomial import Variable
from plucker_asl.exceptions import (
    BudgetExceeded,
    EmptyPosetError,
    InvalidIndexError,
    NotALatticeError,
    NotPerfectError,
)

SLOG = structlog.get_logger(__name__)

#: Largest n for which compatible sublattices are enumerated.
MAX_ENUMERATION_N = 9
#: Largest n for the subset-by-subset enumeration oracle.
MAX_BRUTE_FORCE_N = 5


@attr.s(frozen=True, slots=True, order=True, repr=False, cache_hash=True)
class PairIndex:
    i: int = attr.ib()
    j: int = attr.ib()

    def __attrs_post_init__(self):
        if not (1 <= self.i < self.j):
            raise InvalidIndexError(
                f"pair indices must satisfy 1 <= i < j, got ({self.i},{self.j})"
            )

    @classmethod
    def from_variable(cls, var: Variable) -> "PairIndex":
        if not var.is_plucker:
            raise InvalidIndexError(f"{var} is not a Plücker variable")
        return cls(var.i, var.j)

    @property
    def variable(self) -> Variable:
        return Variable.plucker(self.i, self.j)

    @property
    def length(self) -> int:
        return self.j - self.i

    def __iter__(self) -> Iterator[int]:
        return iter((self.i, self.j))

    def __str__(self) -> str:
        if self.j < 10:
            return f"{self.i}{self.j}"
        return f"({self.i},{self.j})"

    __repr__ = __str__


PairLike = Union[PairIndex, Tuple[int, int]]


def as_pair(value: PairLike) -> PairIndex:
    if isinstance(value, PairIndex):
        return value
    i, j = value
    return PairIndex(i, j)


def all_pairs(n: int) -> List[PairIndex]:
    """The elements of L_n sorted lexicographically."""
    return [PairIndex(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def leq_L(a: PairIndex, b: PairIndex) -> bool:
    return a.i <= b.i and a.j <= b.j


def leq_Pi(a: PairIndex, b: PairIndex) -> bool:
    return a.i <= b.i and a.j >= b.j


def meet(a: PairIndex, b: PairIndex) -> PairIndex:
    return PairIndex(min(a.i, b.i), min(a.j, b.j))


def join(a: PairIndex, b: PairIndex) -> PairIndex:
    return PairIndex(max(a.i, b.i), max(a.j, b.j))


class RankClause(Enum):
    """How the rank requirement of compatibility is read."""

    AT_LEAST_N = "at_least_n"
    EXACT_N = "exact_n"


def rank_threshold(n: int) -> int:
    return min(n, 2 * n - 4)


@attr.s(frozen=True, slots=True, repr=False)
class Sublattice:
    """A subset of L_n. Closure under meet and join is a property, not an
    invariant, so non-lattices can be represented and tested."""

    n: int = attr.ib()
    members: FrozenSet[PairIndex] = attr.ib(
        converter=lambda pairs: frozenset(as_pair(p) for p in pairs)
    )

    def __attrs_post_init__(self):
        for pair in self.members:
            if pair.j > self.n:
                raise InvalidIndexError(f"{pair} does not lie in L_{self.n}")

    @classmethod
    def full(cls, n: int) -> "Sublattice":
        return cls(n, all_pairs(n))

    @property
    def variables(self) -> FrozenSet[Variable]:
        return frozenset(p.variable for p in self.members)

    @property
    def is_lattice(self) -> bool:
        return is_sublattice(self.members)

    def sorted(self) -> List[PairIndex]:
        return sorted(self.members)

    def __contains__(self, pair) -> bool:
        return as_pair(pair) in self.members

    def __iter__(self) -> Iterator[PairIndex]:
        return iter(self.sorted())

    def __len__(self) -> int:
        return len(self.members)

    def __repr__(self) -> str:
        return f"Sublattice(n={self.n}, {{{' '.join(map(str, self.sorted()))}}})"


@attr.s(frozen=True, slots=True, repr=False)
class Chain:
    elements: Tuple[PairIndex, ...] = attr.ib(converter=tuple)

    def __attrs_post_init__(self):
        for a, b in zip(self.elements, self.elements[1:]):
            if a == b or not leq_L(a, b):
                raise ValueError(f"chain is not strictly increasing at {a}, {b}")

    @property
    def length(self) -> int:
        return len(self.elements) - 1

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        return "Chain(" + ",".join(map(str, self.elements)) + ")"


def _members(S) -> FrozenSet[PairIndex]:
    if isinstance(S, Sublattice):
        return S.members
    return frozenset(as_pair(p) for p in S)


def is_sublattice(S) -> bool:
    members = _members(S)
    for a, b in itertools.combinations(members, 2):
        if meet(a, b) not in members or join(a, b) not in members:
            return False
    return True


def complement_is_poset_ideal(S: Sublattice) -> bool:
    """True when L_n minus S is closed downward in Π_n, i.e. S is an up-set."""
    universe = all_pairs(S.n)
    for a in S.members:
        for b in universe:
            if leq_Pi(a, b) and b not in S.members:
                return False
    return True


def comparability_graph(S) -> nx.DiGraph:
    members = _members(S)
    graph = nx.DiGraph()
    graph.add_nodes_from(members)
    graph.add_edges_from(
        (a, b) for a in members for b in members if a != b and leq_L(a, b)
    )
    return graph


def hasse_diagram(S) -> nx.DiGraph:
    """Cover relations of S under the order of L_n."""
    return nx.transitive_reduction(comparability_graph(S))


def rank(S) -> int:
    """The largest length of a chain in S."""
    members = _members(S)
    if not members:
        raise EmptyPosetError()
    return nx.dag_longest_path_length(comparability_graph(members))


def is_pure(P) -> bool:
    """All maximal chains of P have the same length.

    Every path from a minimal to a maximal element of the Hasse diagram is
    explored, with the set of lengths below each node memoized.
    """
    members = _members(P)
    if not members:
        return True
    hasse = hasse_diagram(members)
    lengths: Dict[PairIndex, Set[int]] = {}

    def walk(node) -> Set[int]:
        if node not in lengths:
            successors = list(hasse.successors(node))
            if not successors:
                lengths[node] = {0}
            else:
                lengths[node] = {1 + l for s in successors for l in walk(s)}
        return lengths[node]

    seen = set()
    for node in hasse.nodes:
        if hasse.in_degree(node) == 0:
            seen |= walk(node)
    return len(seen) == 1


def join_irreducibles(S) -> FrozenSet[PairIndex]:
    """Members covering exactly one other member.

    In a lattice an element covering two elements is their join, and the
    minimum covers nothing.

    Raises:
        NotALatticeError: S is not closed under meet and join
    """
    members = _members(S)
    if not members:
        raise EmptyPosetError()
    if not is_sublattice(members):
        raise NotALatticeError("join-irreducibles need a sublattice of L_n")
    result = set()
    for a in members:
        below = [b for b in members if b != a and leq_L(b, a)]
        covers = [b for b in below if not any(c != b and leq_L(b, c) for c in below)]
        if len(covers) == 1:
            result.add(a)
    return frozenset(result)


def is_compatible(S: Sublattice, rank_clause: RankClause = RankClause.AT_LEAST_N) -> bool:
    if not S.members:
        return False
    if not (is_sublattice(S) and complement_is_poset_ideal(S)):
        return False
    threshold = rank_threshold(S.n)
    if rank_clause == RankClause.EXACT_N:
        return rank(S) == threshold
    return rank(S) >= threshold


def has_perfect_pairs(S: Sublattice) -> bool:
    """All pairs (i,i+1) and (i,i+2) are present."""
    for i in range(1, S.n):
        if PairIndex(i, i + 1) not in S.members:
            return False
        if i + 2 <= S.n and PairIndex(i, i + 2) not in S.members:
            return False
    return True


def is_perfect(S: Sublattice, rank_clause: RankClause = RankClause.AT_LEAST_N) -> bool:
    return is_compatible(S, rank_clause) and has_perfect_pairs(S)


def asl_closure_holds(S) -> bool:
    """If (i,l) and (j,k) with i<j<k<l are in S then so are (i,j) and (k,l)."""
    members = _members(S)
    for a in members:
        for b in members:
            if a.i < b.i < b.j < a.j:
                if PairIndex(a.i, b.i) not in members or PairIndex(b.j, a.j) not in members:
                    return False
    return True


def fundamental_chain(S: Sublattice) -> Chain:
    """Walk from (1,2) taking (i,j+1) when present and (i+1,j) otherwise.

    Raises:
        NotPerfectError: S is not a perfect compatible sublattice
    """
    if not is_perfect(S):
        raise NotPerfectError(f"{S!r} is not a perfect compatible sublattice")
    current = PairIndex(1, 2)
    elements = [current]
    for _ in range(2 * S.n - 4):
        i, j = current
        if j + 1 <= S.n and PairIndex(i, j + 1) in S.members:
            current = PairIndex(i, j + 1)
        else:
            current = PairIndex(i + 1, j)
        if current not in S.members:
            raise NotPerfectError(f"fundamental chain leaves the sublattice at {current}")
        elements.append(current)
    return Chain(elements)


def catalan(k: int) -> int:
    return comb(2 * k, k) // (k + 1)


class PosetKind(Enum):
    L = "L"
    PI = "Pi"


def _strictly_below(kind: PosetKind):
    leq = leq_L if kind == PosetKind.L else leq_Pi
    return lambda a, b: a != b and leq(a, b)


def linear_extension(
    n: int, kind: PosetKind = PosetKind.L, seed: Optional[int] = None
) -> List[PairIndex]:
    """A linear extension of L_n or Π_n listed from the bottom up.

    Without a seed the canonical extension is returned: lexicographic order
    on (i, j) for L_n and on (i, -j) for Π_n. With a seed a random
    topological sort is drawn reproducibly.
    """
    pairs = all_pairs(n)
    if seed is None:
        if kind == PosetKind.L:
            return sorted(pairs, key=lambda p: (p.i, p.j))
        return sorted(pairs, key=lambda p: (p.i, -p.j))

    below = _strictly_below(kind)
    rng = random.Random(seed)
    remaining = set(pairs)
    result = []
    while remaining:
        minimal = sorted(a for a in remaining if not any(below(b, a) for b in remaining))
        choice = rng.choice(minimal)
        result.append(choice)
        remaining.remove(choice)
    return result


def _check_enumeration_size(n: int, limit: int):
    if n < 3:
        raise InvalidIndexError(f"n must be at least 3, got {n}")
    if n > limit:
        raise BudgetExceeded(f"refusing to enumerate beyond n = {limit}", budget=limit)


def enumerate_compatible(
    n: int, rank_clause: RankClause = RankClause.AT_LEAST_N
) -> List[Sublattice]:
    """All compatible sublattices of L_n.

    A subset of L_n whose complement is a Π_n down-set is the set of pairs
    inside some antichain of intervals, so the search runs over interval
    systems (gaps allowed) instead of subsets.
    """
    from plucker_asl.graphs import enumerate_interval_systems

    _check_enumeration_size(n, MAX_ENUMERATION_N)
    found = [
        system.sublattice()
        for system in enumerate_interval_systems(n, allow_gaps=True)
    ]
    result = sorted(
        (S for S in found if is_compatible(S, rank_clause)), key=lambda S: S.sorted()
    )
    SLOG.debug("enumerate_compatible.done", n=n, count=len(result))
    return result


def enumerate_perfect_compatible(
    n: int, rank_clause: RankClause = RankClause.AT_LEAST_N
) -> List[Sublattice]:
    """Perfect compatible sublattices, one per interval system whose
    consecutive cliques overlap in at least two vertices."""
    from plucker_asl.graphs import enumerate_interval_systems

    _check_enumeration_size(n, MAX_ENUMERATION_N)
    result = []
    for system in enumerate_interval_systems(n, min_overlap=2):
        S = system.sublattice()
        if is_perfect(S, rank_clause):
            result.append(S)
    return sorted(result, key=lambda S: S.sorted())


def brute_force_compatible(
    n: int, rank_clause: RankClause = RankClause.AT_LEAST_N
) -> List[Sublattice]:
    """Compatible sublattices found by testing every subset of L_n."""
    _check_enumeration_size(n, MAX_BRUTE_FORCE_N)
    pairs = all_pairs(n)
    result = []
    for mask in range(1, 1 << len(pairs)):
        S = Sublattice(n, [p for bit, p in enumerate(pairs) if mask >> bit & 1])
        if is_compatible(S, rank_clause):
            result.append(S)
    return sorted(result, key=lambda S: S.sorted())
