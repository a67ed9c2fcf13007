"""Parse and print the text formats."""

import functools
from typing import Iterable, List, Optional, Sequence, Tuple

import structlog
from lark import Lark
from lark.exceptions import UnexpectedInput, VisitError

from plucker_asl.exactalg.orders import MonomialOrder
from plucker_asl.exactalg.polynomial import Polynomial
from plucker_asl.exceptions import FormatError, FormatIssue, PluckerAslError
from plucker_asl.textformat.grammar import START_RULES, make_grammar
from plucker_asl.textformat.transformer import TransformToValues
from plucker_asl.textformat.validator import IndexValidator

SLOG = structlog.get_logger(__name__)

Pair = Tuple[int, int]


@functools.lru_cache(maxsize=None)
def get_parser() -> Lark:
    return Lark(
        make_grammar(),
        parser="lalr",
        start=list(START_RULES),
        propagate_positions=True,
    )


def _parse(text: str, start: str, n: Optional[int] = None):
    """Parse, validate and transform ``text`` from the given start rule.

    Raises:
        FormatError: A description of any errors and where they occur
    """
    try:
        tree = get_parser().parse(text, start=start)
    except UnexpectedInput as exc:
        issue = FormatIssue(
            message=f"could not parse {start.replace('_', ' ')}",
            description=exc.get_context(text),
            pos=exc.pos_in_stream or 0,
        )
        raise FormatError(repr(issue), [issue]) from None

    if n is None and start == "pair_file":
        n = int(tree.children[0])
    validator = IndexValidator(text, n=n)
    validator.visit(tree)
    if validator.errors:
        # validator.errors is a list of FormatIssue
        raise FormatError("".join(map(repr, validator.errors)), validator.errors)

    try:
        return TransformToValues().transform(tree)
    except VisitError as exc:
        if isinstance(exc.orig_exc, PluckerAslError):
            raise exc.orig_exc from None
        raise


@functools.lru_cache(maxsize=4096)
def parse_polynomial(text: str) -> Polynomial:
    return _parse(text, "polynomial")


def parse_order_line(text: str) -> MonomialOrder:
    return _parse(text, "order_line")


def parse_ideal_file(text: str) -> Tuple[MonomialOrder, List[Polynomial]]:
    """Read an ideal file: an ``order:`` header, then one polynomial per line.
    Blank lines and ``#`` comments are skipped."""
    order = None
    polynomials = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            if order is None:
                order = parse_order_line(line)
            else:
                polynomials.append(parse_polynomial(line))
        except FormatError as exc:
            raise FormatError(f"line {lineno}: {exc}", exc.errors) from None
    if order is None:
        raise FormatError("ideal file has no order header")
    SLOG.debug("ideal_file.parsed", generators=len(polynomials))
    return order, polynomials


def parse_pair_file(text: str) -> Tuple[int, List[Pair]]:
    """Read a sublattice or graph file: ``n: <int>`` then ``i j`` lines."""
    return _parse(text, "pair_file")


def parse_clique_system(text: str, n: Optional[int] = None) -> List[Pair]:
    return _parse(text, "clique_system", n=n)


def parse_arrangement(text: str) -> Tuple[int, List[Pair]]:
    n, arcs = _parse(text, "arrangement")
    too_big = [arc for arc in arcs if arc[1] > n]
    if too_big:
        raise FormatError(f"arc {too_big[0]} does not fit on {n} points")
    return n, arcs


def parse_tree(text: str):
    """Nested ``((label, left, right))`` tuples; leaves have ``None`` children."""
    return _parse(text, "tree")


def format_ideal_file(order: MonomialOrder, polynomials: Iterable[Polynomial]) -> str:
    lines = [f"order: {order.describe()}"]
    lines.extend(str(f) for f in polynomials)
    return "\n".join(lines) + "\n"


def format_pair_file(n: int, pairs: Iterable[Pair]) -> str:
    lines = [f"n: {n}"]
    lines.extend(f"{i} {j}" for i, j in sorted(pairs))
    return "\n".join(lines) + "\n"


def format_clique_system(intervals: Sequence[Pair]) -> str:
    return "".join(f"[{a},{b}]" for a, b in intervals)


def format_arrangement(n: int, arcs: Iterable[Pair]) -> str:
    body = ",".join(f"({a},{b})" for a, b in sorted(arcs))
    return f"n={n}; arcs={body}"


def format_tree(node) -> str:
    (a, b), left, right = node
    inner = "" if left is None else format_tree(left) + format_tree(right)
    return f"({inner})@[{a},{b}]"
