"""Turn parse trees into values."""

from fractions import Fraction

from lark import Transformer, v_args

from plucker_asl.exactalg.orders import MonomialOrder
from plucker_asl.exactalg.polynomial import Monomial, Polynomial, Variable


def _present(items):
    # Optional groups in the grammar leave None placeholders behind
    return [item for item in items if item is not None]


@v_args(inline=True)  # Affects the signatures of the methods
class TransformToValues(Transformer):
    """Builds polynomials and orders directly; combinatorial formats become
    plain tuples that the owning modules wrap in their own types."""

    def plucker(self, i, j):
        return Variable.plucker(int(i), int(j))

    def aux_x(self, i):
        return Variable.x(int(i))

    def aux_y(self, i):
        return Variable.y(int(i))

    def factor(self, var, exponent=None):
        return (var, 1 if exponent is None else int(exponent))

    def coefficient(self, num, den=None):
        return Fraction(int(num), 1 if den is None else int(den))

    def scaled_term(self, coef, *factors):
        return Polynomial.from_monomial(Monomial(factors), coef)

    def plain_term(self, *factors):
        return Polynomial.from_monomial(Monomial(factors))

    def first_term(self, *args):
        if len(args) == 2:
            sign, term = args
            return -term if sign == "-" else term
        return args[0]

    def polynomial(self, first, *rest):
        total = first
        for sign, term in zip(rest[::2], rest[1::2]):
            total = total - term if sign == "-" else total + term
        return total

    def var_list(self, *variables):
        return _present(variables)

    def keep_clause(self, variables):
        return variables

    def vars_clause(self, variables):
        return variables

    def lex_order(self, variables):
        return MonomialOrder.lex(variables)

    def revlex_order(self, variables):
        return MonomialOrder.revlex(variables)

    def elim_order(self, keep, variables):
        keep = set(keep)
        return MonomialOrder.block_elim_lex(
            [v for v in variables if v not in keep],
            [v for v in variables if v in keep],
        )

    def order_line(self, order):
        return order

    def pair(self, i, j):
        return (int(i), int(j))

    def pair_file(self, n, *pairs):
        return int(n), list(pairs)

    def interval(self, a, b):
        return (int(a), int(b))

    def clique_system(self, *intervals):
        return list(intervals)

    def arc(self, a, b):
        return (int(a), int(b))

    def arrangement(self, n, *arcs):
        return int(n), _present(arcs)

    def node(self, left, right, a, b):
        return ((int(a), int(b)), left, right)

    def tree(self, root):
        return root
