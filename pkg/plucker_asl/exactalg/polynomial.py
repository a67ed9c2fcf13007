"""Variables, monomials and polynomials with exact rational coefficients.

Polynomials live in the Plücker variables ``p[i,j]`` and, for the
membership oracle, the auxiliary variables ``x[i]`` and ``y[i]``. All
values are immutable.
"""

import functools
from enum import IntEnum
from fractions import Fraction
from typing import Dict, FrozenSet, Iterator, Mapping, Tuple, Union

import attr

from plucker_asl.exceptions import InvalidIndexError, MissingAssignmentError

#: The coefficient field is fixed to the rationals.
Rational = Fraction
Scalar = Union[int, Fraction]


class VariableKind(IntEnum):
    PLUCKER = 0
    X = 1
    Y = 2


@attr.s(frozen=True, slots=True, order=True, repr=False, cache_hash=True)
class Variable:
    """A ring variable. Plücker variables carry a pair ``i < j``, auxiliary
    variables a single index ``i`` (``j`` is stored as 0)."""

    kind: VariableKind = attr.ib(converter=VariableKind)
    i: int = attr.ib()
    j: int = attr.ib(default=0)

    def __attrs_post_init__(self):
        if self.kind == VariableKind.PLUCKER:
            if not (1 <= self.i < self.j):
                raise InvalidIndexError(
                    f"Plücker indices must satisfy 1 <= i < j, got ({self.i},{self.j})"
                )
        elif self.i < 1 or self.j != 0:
            raise InvalidIndexError(f"auxiliary index must be >= 1, got {self.i}")

    @classmethod
    def plucker(cls, i: int, j: int) -> "Variable":
        return cls(VariableKind.PLUCKER, i, j)

    @classmethod
    def x(cls, i: int) -> "Variable":
        return cls(VariableKind.X, i)

    @classmethod
    def y(cls, i: int) -> "Variable":
        return cls(VariableKind.Y, i)

    @property
    def is_plucker(self) -> bool:
        return self.kind == VariableKind.PLUCKER

    @property
    def pair(self) -> Tuple[int, int]:
        return (self.i, self.j)

    def __str__(self) -> str:
        if self.kind == VariableKind.PLUCKER:
            return f"p[{self.i},{self.j}]"
        if self.kind == VariableKind.X:
            return f"x[{self.i}]"
        return f"y[{self.i}]"

    __repr__ = __str__


def _normalize_powers(powers) -> Tuple[Tuple[Variable, int], ...]:
    items = powers.items() if isinstance(powers, Mapping) else powers
    merged: Dict[Variable, int] = {}
    for var, exp in items:
        if not isinstance(var, Variable):
            raise TypeError(f"monomial variables must be Variable, not {var!r}")
        if exp < 0:
            raise ValueError(f"negative exponent {exp} on {var}")
        merged[var] = merged.get(var, 0) + exp
    return tuple(sorted((v, e) for v, e in merged.items() if e))


@attr.s(frozen=True, slots=True, repr=False, cache_hash=True)
class Monomial:
    """A power product stored sparsely as sorted ``(variable, exponent)`` pairs."""

    powers: Tuple[Tuple[Variable, int], ...] = attr.ib(
        default=(), converter=_normalize_powers
    )

    @classmethod
    def one(cls) -> "Monomial":
        return cls()

    @classmethod
    def of(cls, *variables: Variable) -> "Monomial":
        """The product of the given variables, repeats allowed."""
        return cls([(v, 1) for v in variables])

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.powers)

    @property
    def variables(self) -> FrozenSet[Variable]:
        return frozenset(v for v, _ in self.powers)

    @property
    def is_one(self) -> bool:
        return not self.powers

    @property
    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.powers)

    def exponent(self, var: Variable) -> int:
        return dict(self.powers).get(var, 0)

    def __mul__(self, other: "Monomial") -> "Monomial":
        if not isinstance(other, Monomial):
            return NotImplemented
        return Monomial(self.powers + other.powers)

    def divides(self, other: "Monomial") -> bool:
        theirs = dict(other.powers)
        return all(theirs.get(v, 0) >= e for v, e in self.powers)

    def __truediv__(self, other: "Monomial") -> "Monomial":
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        mine = dict(self.powers)
        for v, e in other.powers:
            mine[v] -= e
        return Monomial(mine)

    def lcm(self, other: "Monomial") -> "Monomial":
        merged = dict(self.powers)
        for v, e in other.powers:
            merged[v] = max(merged.get(v, 0), e)
        return Monomial(merged)

    def is_coprime(self, other: "Monomial") -> bool:
        return not (self.variables & other.variables)

    def __str__(self) -> str:
        if not self.powers:
            return "1"
        return "*".join(str(v) if e == 1 else f"{v}^{e}" for v, e in self.powers)

    __repr__ = __str__


def _display_cmp(a: Monomial, b: Monomial) -> int:
    """Degree-graded reverse lex over the natural variable order."""
    if a.degree != b.degree:
        return a.degree - b.degree
    ea, eb = dict(a.powers), dict(b.powers)
    for var in sorted(set(ea) | set(eb)):
        da, db = ea.get(var, 0), eb.get(var, 0)
        if da != db:
            return db - da
    return 0


def format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _clean_terms(terms) -> Dict[Monomial, Fraction]:
    cleaned: Dict[Monomial, Fraction] = {}
    for mono, coef in dict(terms).items():
        if not isinstance(mono, Monomial):
            raise TypeError(f"polynomial terms must be keyed by Monomial, not {mono!r}")
        coef = Fraction(coef)
        if coef:
            cleaned[mono] = cleaned.get(mono, 0) + coef
    return {m: c for m, c in cleaned.items() if c}


@attr.s(frozen=True, slots=True, eq=False, repr=False)
class Polynomial:
    """A sparse polynomial, a map from Monomial to nonzero Fraction."""

    terms: Dict[Monomial, Fraction] = attr.ib(factory=dict, converter=_clean_terms)

    @classmethod
    def _raw(cls, terms: Dict[Monomial, Fraction]) -> "Polynomial":
        # ``terms`` must already be free of zero coefficients
        poly = object.__new__(cls)
        object.__setattr__(poly, "terms", terms)
        return poly

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls._raw({})

    @classmethod
    def constant(cls, value: Scalar) -> "Polynomial":
        return cls({Monomial(): value})

    @classmethod
    def from_monomial(cls, mono: Monomial, coef: Scalar = 1) -> "Polynomial":
        return cls({mono: coef})

    @classmethod
    def from_variable(cls, var: Variable) -> "Polynomial":
        return cls._raw({Monomial([(var, 1)]): Fraction(1)})

    @classmethod
    def parse(cls, text: str) -> "Polynomial":
        from plucker_asl.textformat.builder import parse_polynomial

        return parse_polynomial(text)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_constant(self) -> bool:
        return all(m.is_one for m in self.terms)

    @property
    def degree(self) -> int:
        if not self.terms:
            raise ValueError("the zero polynomial has no degree")
        return max(m.degree for m in self.terms)

    @property
    def is_homogeneous(self) -> bool:
        return len({m.degree for m in self.terms}) <= 1

    @property
    def variables(self) -> FrozenSet[Variable]:
        found = set()
        for mono in self.terms:
            found.update(mono.variables)
        return frozenset(found)

    def coefficient(self, mono: Monomial) -> Fraction:
        return self.terms.get(mono, Fraction(0))

    def items(self) -> Iterator[Tuple[Monomial, Fraction]]:
        """Terms in printing order."""
        for mono in sorted(self.terms, key=functools.cmp_to_key(_display_cmp), reverse=True):
            yield mono, self.terms[mono]

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    @staticmethod
    def _coerce(other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        result = dict(self.terms)
        for mono, coef in other.terms.items():
            total = result.get(mono, 0) + coef
            if total:
                result[mono] = total
            else:
                result.pop(mono, None)
        return Polynomial._raw(result)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        result: Dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = m1 * m2
                result[mono] = result.get(mono, 0) + c1 * c2
        return Polynomial._raw({m: c for m, c in result.items() if c})

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Polynomial.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def scale(self, factor: Scalar) -> "Polynomial":
        factor = Fraction(factor)
        if not factor:
            return Polynomial.zero()
        return Polynomial._raw({m: c * factor for m, c in self.terms.items()})

    def times_term(self, mono: Monomial, coef: Scalar = 1) -> "Polynomial":
        """Multiply by a single term ``coef * mono``."""
        coef = Fraction(coef)
        if not coef:
            return Polynomial.zero()
        return Polynomial._raw({m * mono: c * coef for m, c in self.terms.items()})

    def substitute(self, assignment: Mapping[Variable, "Polynomial"]) -> "Polynomial":
        """Apply the ring homomorphism sending each variable to its image.

        Raises:
            MissingAssignmentError: a variable of this polynomial has no image
        """
        result = Polynomial.zero()
        powers_seen: Dict[Tuple[Variable, int], Polynomial] = {}
        for mono, coef in self.terms.items():
            product = Polynomial.constant(coef)
            for var, exp in mono.powers:
                if var not in assignment:
                    raise MissingAssignmentError(var)
                power = powers_seen.get((var, exp))
                if power is None:
                    power = self._coerce(assignment[var]) ** exp
                    powers_seen[(var, exp)] = power
                product = product * power
            result = result + product
        return result

    def leading_term(self, order) -> Tuple[Monomial, Fraction]:
        from plucker_asl.exactalg.orders import leading_term

        return leading_term(self, order)

    def monic(self, order) -> "Polynomial":
        _, coef = self.leading_term(order)
        return self.scale(1 / coef)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for idx, (mono, coef) in enumerate(self.items()):
            size = abs(coef)
            if mono.is_one:
                body = format_rational(size)
            elif size == 1:
                body = str(mono)
            else:
                body = f"{format_rational(size)}*{mono}"
            if idx == 0:
                parts.append(f"-{body}" if coef < 0 else body)
            else:
                parts.append(f" - {body}" if coef < 0 else f" + {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r})"


def p(i: int, j: int) -> Polynomial:
    """The Plücker variable ``p[i,j]`` as a polynomial."""
    return Polynomial.from_variable(Variable.plucker(i, j))


def x(i: int) -> Polynomial:
    return Polynomial.from_variable(Variable.x(i))


def y(i: int) -> Polynomial:
    return Polynomial.from_variable(Variable.y(i))
