from plucker_asl.exactalg.orders import (
    MonomialOrder,
    Ordering,
    OrderScheme,
    compare,
    leading_monomial,
    leading_term,
)
from plucker_asl.exactalg.polynomial import (
    Monomial,
    Polynomial,
    Rational,
    Variable,
    VariableKind,
    format_rational,
    p,
    x,
    y,
)

__all__ = [
    "Monomial",
    "MonomialOrder",
    "Ordering",
    "OrderScheme",
    "Polynomial",
    "Rational",
    "Variable",
    "VariableKind",
    "compare",
    "format_rational",
    "leading_monomial",
    "leading_term",
    "p",
    "x",
    "y",
]
