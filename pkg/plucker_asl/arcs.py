"""Arc arrangements on n collinear points and full binary trees.

An arrangement is allowed when it avoids three patterns:

* two disjoint arcs ``(i,j), (k,l)`` with ``j < k``;
* ``(i,k), (j,l), (k,m)`` with ``i < j < k < l < m``;
* ``(i,l), (j,m), (k,s)`` with ``i < j < k < l < m < s``.

Arcs sharing an endpoint are not disjoint. A maximal allowed arrangement
has ``2n - 3`` arcs: one of length ``n - 1`` and two of every shorter
length.
"""

import itertools
from functools import lru_cache
from typing import FrozenSet, Iterable, Iterator, List, Optional, Tuple

import attr
import structlog

from plucker_asl.exceptions import (
    ArrangementError,
    BudgetExceeded,
    ConsistencyError,
    InvalidIndexError,
)

SLOG = structlog.get_logger(__name__)

Arc = Tuple[int, int]

#: Largest n for the maximal arrangement search.
MAX_ARCS_N = 10
#: Largest n for the subset-by-subset oracle.
MAX_NAIVE_N = 5


def _as_arc(value) -> Arc:
    a, b = value
    return int(a), int(b)


@attr.s(frozen=True, slots=True, repr=False)
class ArcArrangement:
    n: int = attr.ib()
    arcs: FrozenSet[Arc] = attr.ib(converter=lambda arcs: frozenset(_as_arc(a) for a in arcs))

    def __attrs_post_init__(self):
        for a, b in self.arcs:
            if not (1 <= a < b <= self.n):
                raise InvalidIndexError(f"arc ({a},{b}) does not fit on {self.n} points")

    @classmethod
    def parse(cls, text: str) -> "ArcArrangement":
        from plucker_asl.textformat.builder import parse_arrangement

        n, arcs = parse_arrangement(text)
        return cls(n, arcs)

    def sorted(self) -> List[Arc]:
        return sorted(self.arcs)

    def with_arc(self, arc: Arc) -> "ArcArrangement":
        return ArcArrangement(self.n, self.arcs | {_as_arc(arc)})

    def length_counts(self) -> dict:
        counts = {}
        for arc in self.arcs:
            counts[arc_length(arc)] = counts.get(arc_length(arc), 0) + 1
        return counts

    @property
    def is_maximal(self) -> bool:
        return len(self.arcs) == max_arcs(self.n) and is_allowed(self)

    def __contains__(self, arc) -> bool:
        return _as_arc(arc) in self.arcs

    def __iter__(self) -> Iterator[Arc]:
        return iter(self.sorted())

    def __len__(self) -> int:
        return len(self.arcs)

    def __str__(self) -> str:
        from plucker_asl.textformat.builder import format_arrangement

        return format_arrangement(self.n, self.arcs)

    def __repr__(self) -> str:
        return f"ArcArrangement({self})"


def arc_length(arc: Arc) -> int:
    return arc[1] - arc[0]


def disjoint(first: Arc, second: Arc) -> bool:
    (i, j), (k, l) = sorted((first, second))
    return j < k


def nested(first: Arc, second: Arc) -> bool:
    (i, j), (k, l) = first, second
    return (i <= k and l <= j) or (k <= i and j <= l)


def crossing(first: Arc, second: Arc) -> bool:
    """The arcs overlap without either containing the other."""
    return not disjoint(first, second) and not nested(first, second)


def _triple_pattern(arcs: Tuple[Arc, Arc, Arc]) -> bool:
    (i, k), (j, l), (k2, m) = sorted(arcs)
    if k == k2 and i < j < k < l < m:
        return True
    (i, l), (j, m), (k, s) = sorted(arcs)
    return i < j < k < l < m < s


def find_forbidden(arcs: Iterable[Arc]) -> Optional[Tuple[Arc, ...]]:
    """A witness for a forbidden pattern, or None."""
    arcs = sorted(arcs)
    for first, second in itertools.combinations(arcs, 2):
        if disjoint(first, second):
            return first, second
    for triple in itertools.combinations(arcs, 3):
        if _triple_pattern(triple):
            return triple
    return None


def _conflicts(arcs: FrozenSet[Arc], new: Arc) -> bool:
    """True when adding ``new`` to an allowed set creates a pattern."""
    if any(disjoint(new, other) for other in arcs):
        return True
    for pair in itertools.combinations(arcs, 2):
        if _triple_pattern(pair + (new,)):
            return True
    return False


def is_allowed(A: ArcArrangement) -> bool:
    return find_forbidden(A.arcs) is None


def max_arcs(n: int) -> int:
    if n < 2:
        raise InvalidIndexError(f"arrangements need at least two points, got {n}")
    return 2 * n - 3


def _check_size(n: int, limit: int):
    if n < 2:
        raise InvalidIndexError(f"arrangements need at least two points, got {n}")
    if n > limit:
        raise BudgetExceeded(f"arrangements are enumerated up to n = {limit}", budget=limit)


def enumerate_maximal(n: int) -> List[ArcArrangement]:
    """All maximal allowed arrangements on ``n`` points.

    The search picks one arc of length ``n - 1`` and then two arcs of each
    shorter length, longest first, pruning on the forbidden patterns.
    """
    _check_size(n, MAX_ARCS_N)
    quota = {length: 2 for length in range(1, n - 1)}
    quota[n - 1] = 1
    found = []

    def search(length: int, chosen: FrozenSet[Arc]):
        if length == 0:
            found.append(ArcArrangement(n, chosen))
            return
        candidates = [(a, a + length) for a in range(1, n - length + 1)]
        for picks in itertools.combinations(candidates, quota[length]):
            current = chosen
            for arc in picks:
                if _conflicts(current, arc):
                    break
                current = current | {arc}
            else:
                search(length - 1, current)

    search(n - 1, frozenset())
    found.sort(key=ArcArrangement.sorted)
    SLOG.debug("arcs.enumerate_maximal", n=n, count=len(found))
    return found


def enumerate_maximal_naive(n: int) -> List[ArcArrangement]:
    """Maximal arrangements found by filtering every subset of arcs."""
    _check_size(n, MAX_NAIVE_N)
    arcs = list(itertools.combinations(range(1, n + 1), 2))
    found = [
        ArcArrangement(n, subset)
        for subset in itertools.combinations(arcs, max_arcs(n))
        if find_forbidden(subset) is None
    ]
    return sorted(found, key=ArcArrangement.sorted)


def _extension_candidates(n: int) -> List[Arc]:
    preferred = [(1, n), (1, n - 1), (2, n)]
    rest = sorted(
        (arc for arc in itertools.combinations(range(1, n + 1), 2) if arc not in preferred),
        key=lambda arc: (-arc_length(arc), arc),
    )
    return [arc for arc in preferred if arc[0] < arc[1]] + rest


def extend_to_maximal(A: ArcArrangement) -> ArcArrangement:
    """Add arcs to an allowed, non-maximal arrangement until it has ``2n - 3``.

    Raises:
        ArrangementError: A has a forbidden pattern or is already maximal
    """
    witness = find_forbidden(A.arcs)
    if witness is not None:
        raise ArrangementError(f"arrangement is not allowed: {witness}")
    target = max_arcs(A.n)
    if len(A) >= target:
        raise ArrangementError("arrangement is already maximal")
    candidates = [arc for arc in _extension_candidates(A.n) if arc not in A.arcs]

    def search(arcs: FrozenSet[Arc], start: int) -> Optional[FrozenSet[Arc]]:
        if len(arcs) == target:
            return arcs
        for k in range(start, len(candidates)):
            arc = candidates[k]
            if not _conflicts(arcs, arc):
                result = search(arcs | {arc}, k + 1)
                if result is not None:
                    return result
        return None

    extended = search(A.arcs, 0)
    if extended is None:
        raise ConsistencyError(f"no maximal extension of {A}")
    return ArcArrangement(A.n, extended)


@attr.s(frozen=True, slots=True, repr=False)
class FullBinaryTree:
    """A node labeled by an arc with either no children or two."""

    label: Arc = attr.ib(converter=_as_arc)
    left: Optional["FullBinaryTree"] = attr.ib(default=None)
    right: Optional["FullBinaryTree"] = attr.ib(default=None)

    def __attrs_post_init__(self):
        if (self.left is None) != (self.right is None):
            raise ArrangementError(f"node {self.label} must have zero or two children")

    @classmethod
    def leaf(cls, label: Arc) -> "FullBinaryTree":
        return cls(label)

    @classmethod
    def from_nested(cls, node) -> "FullBinaryTree":
        label, left, right = node
        if left is None:
            return cls(label)
        return cls(label, cls.from_nested(left), cls.from_nested(right))

    @classmethod
    def parse(cls, text: str) -> "FullBinaryTree":
        from plucker_asl.textformat.builder import parse_tree

        return cls.from_nested(parse_tree(text))

    def to_nested(self):
        if self.is_leaf:
            return (self.label, None, None)
        return (self.label, self.left.to_nested(), self.right.to_nested())

    @property
    def is_leaf(self) -> bool:
        return self.left is None

    def nodes(self) -> Iterator["FullBinaryTree"]:
        """Preorder."""
        yield self
        if not self.is_leaf:
            yield from self.left.nodes()
            yield from self.right.nodes()

    def labels(self) -> List[Arc]:
        return [node.label for node in self.nodes()]

    @property
    def leaf_count(self) -> int:
        return sum(1 for node in self.nodes() if node.is_leaf)

    @property
    def internal_count(self) -> int:
        return sum(1 for node in self.nodes() if not node.is_leaf)

    def __str__(self) -> str:
        from plucker_asl.textformat.builder import format_tree

        return format_tree(self.to_nested())

    def __repr__(self) -> str:
        return f"FullBinaryTree({self})"


def _children(arcs: FrozenSet[Arc], label: Arc) -> Optional[Tuple[Arc, Arc]]:
    a, b = label
    lefts = [j for (i, j) in arcs if i == a and a < j < b]
    rights = [i for (i, j) in arcs if j == b and a < i < b]
    if not lefts or not rights:
        return None
    j, i = max(lefts), min(rights)
    if j < i:
        return None
    return (a, j), (i, b)


def to_tree(A: ArcArrangement) -> FullBinaryTree:
    """Build the tree from the root ``(1,n)``: the children of ``(a,b)`` are
    the longest arcs ``(a,j)`` and ``(i,b)`` nested inside it, when both
    exist and meet; otherwise the node is a leaf.

    Raises:
        ArrangementError: A is not a maximal allowed arrangement
    """
    if len(A) != max_arcs(A.n) or not is_allowed(A) or (1, A.n) not in A.arcs:
        raise ArrangementError("not a maximal allowed arrangement")

    def build(label: Arc) -> FullBinaryTree:
        children = _children(A.arcs, label)
        if children is None:
            return FullBinaryTree.leaf(label)
        left, right = children
        return FullBinaryTree(label, build(left), build(right))

    tree = build((1, A.n))
    labels = tree.labels()
    if sorted(labels) != A.sorted() or tree.leaf_count != A.n - 1:
        raise ArrangementError("not a maximal allowed arrangement")
    return tree


def from_tree(T: FullBinaryTree) -> ArcArrangement:
    """Collect the node labels; the root must span every point."""
    labels = T.labels()
    if len(set(labels)) != len(labels):
        raise ArrangementError("tree labels must be distinct")
    a, n = T.label
    if a != 1:
        raise ArrangementError(f"the root must be labeled (1,n), got {T.label}")
    return ArcArrangement(n, labels)


def tree_shape(T: FullBinaryTree) -> str:
    """The unlabeled shape: ``.`` for a leaf, ``(LR)`` for an internal node."""
    if T.is_leaf:
        return "."
    return f"({tree_shape(T.left)}{tree_shape(T.right)})"


@lru_cache(maxsize=None)
def enumerate_tree_shapes(leaves: int) -> FrozenSet[str]:
    """Shapes of all full binary trees with ``leaves`` leaves."""
    if leaves < 1:
        raise InvalidIndexError("a tree has at least one leaf")
    if leaves == 1:
        return frozenset({"."})
    shapes = set()
    for left in range(1, leaves):
        for l_shape in enumerate_tree_shapes(left):
            for r_shape in enumerate_tree_shapes(leaves - left):
                shapes.add(f"({l_shape}{r_shape})")
    return frozenset(shapes)
