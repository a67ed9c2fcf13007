"""Monomial orders.

Every order is described by a list of variables, largest first, and a
scheme. ``LEX`` and ``BLOCK_ELIM_LEX`` compare exponent vectors
lexicographically; ``REVLEX`` is degree-graded reverse lex (higher degree
first, then the monomial with the smaller exponent on the least variable
where they differ is larger).
"""

import operator
from enum import Enum
from fractions import Fraction
from threading import Lock
from typing import FrozenSet, Iterable, List, Tuple

import attr
from cachetools import LRUCache, cachedmethod

from plucker_asl.exactalg.polynomial import Monomial, Polynomial, Variable
from plucker_asl.exceptions import (
    InvalidOrderError,
    UnknownVariableError,
    ZeroPolynomialError,
)


class Ordering(Enum):
    LT = -1
    EQ = 0
    GT = 1


class OrderScheme(Enum):
    LEX = "lex"
    REVLEX = "revlex"
    BLOCK_ELIM_LEX = "elim"


@attr.s(frozen=True, slots=True, repr=False)
class MonomialOrder:
    scheme: OrderScheme = attr.ib(validator=attr.validators.instance_of(OrderScheme))
    #: Variables listed largest first
    variables: Tuple[Variable, ...] = attr.ib(converter=tuple)
    #: Variables eliminated by a block order, always a prefix of ``variables``
    eliminated: FrozenSet[Variable] = attr.ib(converter=frozenset, factory=frozenset)
    _rank = attr.ib(init=False, eq=False, repr=False)
    _keys = attr.ib(init=False, eq=False, repr=False)
    _lock = attr.ib(init=False, eq=False, repr=False)

    def __attrs_post_init__(self):
        if len(set(self.variables)) != len(self.variables):
            raise InvalidOrderError("variable order must not repeat variables")
        if self.scheme == OrderScheme.BLOCK_ELIM_LEX:
            head = frozenset(self.variables[: len(self.eliminated)])
            if head != self.eliminated:
                raise InvalidOrderError(
                    "eliminated variables must precede every kept variable"
                )
        elif self.eliminated:
            raise InvalidOrderError(f"{self.scheme.value} orders eliminate nothing")
        object.__setattr__(self, "_rank", {v: r for r, v in enumerate(self.variables)})
        object.__setattr__(self, "_keys", LRUCache(maxsize=1 << 16))
        object.__setattr__(self, "_lock", Lock())

    @classmethod
    def lex(cls, variables: Iterable[Variable]) -> "MonomialOrder":
        return cls(OrderScheme.LEX, variables)

    @classmethod
    def revlex(cls, variables: Iterable[Variable]) -> "MonomialOrder":
        return cls(OrderScheme.REVLEX, variables)

    @classmethod
    def block_elim_lex(
        cls, eliminated: Iterable[Variable], kept: Iterable[Variable]
    ) -> "MonomialOrder":
        """Lex order in which every eliminated variable beats every kept one.

        Both arguments are listed largest first.
        """
        eliminated = tuple(eliminated)
        return cls(
            OrderScheme.BLOCK_ELIM_LEX,
            eliminated + tuple(kept),
            eliminated=frozenset(eliminated),
        )

    @property
    def kept(self) -> Tuple[Variable, ...]:
        return tuple(v for v in self.variables if v not in self.eliminated)

    @cachedmethod(operator.attrgetter("_keys"), lock=operator.attrgetter("_lock"))
    def key(self, mono: Monomial) -> tuple:
        """A tuple whose natural ordering agrees with this monomial order."""
        vec = [0] * len(self.variables)
        for var, exp in mono.powers:
            try:
                vec[self._rank[var]] = exp
            except KeyError:
                raise UnknownVariableError(var) from None
        if self.scheme == OrderScheme.REVLEX:
            return (sum(vec), tuple(-e for e in reversed(vec)))
        return tuple(vec)

    def compare(self, m1: Monomial, m2: Monomial) -> Ordering:
        k1, k2 = self.key(m1), self.key(m2)
        if k1 == k2:
            return Ordering.EQ
        return Ordering.GT if k1 > k2 else Ordering.LT

    def sort(self, monomials: Iterable[Monomial]) -> List[Monomial]:
        """Monomials sorted largest first."""
        return sorted(monomials, key=self.key, reverse=True)

    def restrict(self, keep: Iterable[Variable]) -> "MonomialOrder":
        """The induced order on the subring generated by ``keep``."""
        keep = frozenset(keep)
        unknown = keep - set(self.variables)
        if unknown:
            raise UnknownVariableError(sorted(unknown)[0])
        variables = [v for v in self.variables if v in keep]
        if self.scheme == OrderScheme.REVLEX:
            return MonomialOrder.revlex(variables)
        return MonomialOrder.lex(variables)

    def describe(self) -> str:
        names = ",".join(str(v) for v in self.variables)
        if self.scheme == OrderScheme.BLOCK_ELIM_LEX:
            keep = ",".join(str(v) for v in self.kept)
            return f"elim keep=[{keep}] vars=[{names}]"
        return f"{self.scheme.value} vars=[{names}]"

    def __repr__(self) -> str:
        return f"MonomialOrder({self.describe()})"


def compare(m1: Monomial, m2: Monomial, order: MonomialOrder) -> Ordering:
    return order.compare(m1, m2)


def leading_term(f: Polynomial, order: MonomialOrder) -> Tuple[Monomial, Fraction]:
    """The order-maximal monomial of ``f`` with its coefficient.

    Raises:
        ZeroPolynomialError: ``f`` is zero
    """
    if f.is_zero:
        raise ZeroPolynomialError()
    mono = max(f.terms, key=order.key)
    return mono, f.terms[mono]


def leading_monomial(f: Polynomial, order: MonomialOrder) -> Monomial:
    return leading_term(f, order)[0]
