"""Polynomials, monomials and monomial orders."""

from fractions import Fraction
from unittest import TestCase

from hypothesis import given, settings
from hypothesis import strategies as st

from plucker_asl.exactalg import (
    Monomial,
    MonomialOrder,
    Ordering,
    Polynomial,
    Variable,
    leading_monomial,
    leading_term,
    p,
    x,
    y,
)
from plucker_asl.exceptions import (
    InvalidIndexError,
    InvalidOrderError,
    MissingAssignmentError,
    UnknownVariableError,
    ZeroPolynomialError,
)

VARIABLES = [Variable.plucker(i, j) for i in range(1, 5) for j in range(i + 1, 5)]

monomials = st.lists(
    st.tuples(st.sampled_from(VARIABLES), st.integers(min_value=0, max_value=3)),
    max_size=4,
).map(Monomial)

coefficients = st.fractions(min_value=-50, max_value=50, max_denominator=7)

polynomials = st.dictionaries(monomials, coefficients, max_size=4).map(Polynomial)

orders = st.tuples(
    st.permutations(VARIABLES), st.integers(min_value=1, max_value=len(VARIABLES) - 1)
).flatmap(
    lambda drawn: st.sampled_from(
        [
            MonomialOrder.lex(drawn[0]),
            MonomialOrder.revlex(drawn[0]),
            MonomialOrder.block_elim_lex(drawn[0][: drawn[1]], drawn[0][drawn[1] :]),
        ]
    )
)


class VariableTestCase(TestCase):
    def test_plucker_indices(self):
        self.assertEqual(str(Variable.plucker(1, 4)), "p[1,4]")
        self.assertEqual(Variable.plucker(2, 3).pair, (2, 3))
        with self.assertRaises(InvalidIndexError):
            Variable.plucker(3, 3)
        with self.assertRaises(InvalidIndexError):
            Variable.plucker(0, 2)

    def test_auxiliary(self):
        self.assertEqual(str(Variable.x(2)), "x[2]")
        self.assertFalse(Variable.y(1).is_plucker)
        with self.assertRaises(InvalidIndexError):
            Variable.x(0)

    def test_natural_order(self):
        """Plücker variables sort before x, x before y"""
        found = sorted(
            [Variable.y(1), Variable.x(3), Variable.plucker(2, 3), Variable.plucker(1, 4)]
        )
        self.assertEqual([str(v) for v in found], ["p[1,4]", "p[2,3]", "x[3]", "y[1]"])


class MonomialTestCase(TestCase):
    def test_arithmetic(self):
        a, b = Variable.plucker(1, 2), Variable.plucker(3, 4)
        m = Monomial.of(a, a, b)
        self.assertEqual(m.degree, 3)
        self.assertEqual(m.exponent(a), 2)
        self.assertFalse(m.is_squarefree)
        self.assertEqual(m / Monomial.of(a), Monomial.of(a, b))
        self.assertEqual(m.lcm(Monomial.of(b, b)), Monomial.of(a, a, b, b))
        self.assertTrue(Monomial.of(a).divides(m))
        self.assertFalse(Monomial.of(b, b).divides(m))
        self.assertTrue(Monomial.of(a).is_coprime(Monomial.of(b)))
        with self.assertRaises(ValueError):
            Monomial.of(b) / Monomial.of(a)

    def test_str(self):
        a, b = Variable.plucker(1, 2), Variable.plucker(3, 4)
        self.assertEqual(str(Monomial.of(a, a, b)), "p[1,2]^2*p[3,4]")
        self.assertEqual(str(Monomial.one()), "1")

    def test_type_checks(self):
        with self.assertRaises(TypeError):
            Monomial([("p12", 1)])
        with self.assertRaises(ValueError):
            Monomial([(Variable.x(1), -1)])


class PolynomialTestCase(TestCase):
    def test_quadric_prints(self):
        q = p(1, 4) * p(2, 3) - p(1, 3) * p(2, 4) + p(1, 2) * p(3, 4)
        self.assertEqual(str(q), "p[1,4]*p[2,3] - p[1,3]*p[2,4] + p[1,2]*p[3,4]")
        self.assertEqual(Polynomial.parse(str(q)), q)

    def test_rational_coefficients(self):
        f = p(1, 2).scale(Fraction(1, 3)) - 2
        self.assertEqual(str(f), "1/3*p[1,2] - 2")
        self.assertEqual(f.coefficient(Monomial()), -2)
        self.assertEqual(Polynomial.parse("1/3*p[1,2] - 2"), f)

    def test_zero(self):
        zero = p(1, 2) - p(1, 2)
        self.assertTrue(zero.is_zero)
        self.assertEqual(str(zero), "0")
        self.assertEqual(zero, 0)
        with self.assertRaises(ZeroPolynomialError):
            leading_term(zero, MonomialOrder.lex(VARIABLES))

    def test_powers_and_degree(self):
        f = (p(1, 2) + p(3, 4)) ** 2
        self.assertEqual(f.degree, 2)
        self.assertTrue(f.is_homogeneous)
        self.assertEqual(str(f), "p[3,4]^2 + 2*p[1,2]*p[3,4] + p[1,2]^2")
        self.assertFalse((f + 1).is_homogeneous)

    def test_substitute(self):
        f = p(1, 2) * p(3, 4)
        images = {
            Variable.plucker(1, 2): x(1) * y(2) - x(2) * y(1),
            Variable.plucker(3, 4): x(3),
        }
        self.assertEqual(f.substitute(images), x(1) * y(2) * x(3) - x(2) * y(1) * x(3))
        with self.assertRaises(MissingAssignmentError):
            f.substitute({Variable.plucker(1, 2): x(1)})

    def test_monic(self):
        order = MonomialOrder.lex(VARIABLES)
        f = p(1, 2).scale(3) + p(3, 4)
        self.assertEqual(f.monic(order), p(1, 2) + p(3, 4).scale(Fraction(1, 3)))

    def test_type_confusion(self):
        with self.assertRaises(TypeError):
            Polynomial({"p12": 1})

    @settings(max_examples=60, deadline=None)
    @given(polynomials, polynomials, polynomials)
    def test_ring_axioms(self, f, g, h):
        self.assertEqual(f + g, g + f)
        self.assertEqual(f * g, g * f)
        self.assertEqual((f + g) + h, f + (g + h))
        self.assertEqual((f * g) * h, f * (g * h))
        self.assertEqual(f * (g + h), f * g + f * h)
        self.assertTrue((f - f).is_zero)

    @settings(max_examples=60, deadline=None)
    @given(polynomials)
    def test_exact_coefficients(self, f):
        for _, coef in f.items():
            self.assertIsInstance(coef, Fraction)
            self.assertNotEqual(coef, 0)
        self.assertEqual(f.scale(Fraction(1, 3)).scale(3), f)

    @settings(max_examples=60, deadline=None)
    @given(polynomials)
    def test_parse_inverts_str(self, f):
        self.assertEqual(Polynomial.parse(str(f)), f)

    @settings(max_examples=60, deadline=None)
    @given(
        st.integers(min_value=-50, max_value=50),
        st.integers(min_value=1, max_value=30),
        st.integers(min_value=-50, max_value=50),
        st.integers(min_value=1, max_value=30),
        polynomials,
    )
    def test_rational_sums_clear_denominators(self, a, b, c, d, f):
        total = Polynomial.constant(Fraction(a, b)) + Fraction(c, d)
        self.assertEqual(total * b * d, a * d + c * b)
        scaled = (f.scale(Fraction(a, b)) + f.scale(Fraction(c, d))).scale(b * d)
        self.assertEqual(scaled, f.scale(a * d + c * b))


class MonomialOrderTestCase(TestCase):
    def test_lex(self):
        a, b, c = Variable.plucker(1, 2), Variable.plucker(1, 3), Variable.plucker(2, 3)
        order = MonomialOrder.lex([a, b, c])
        self.assertEqual(order.compare(Monomial.of(a), Monomial.of(b, b, c)), Ordering.GT)
        self.assertEqual(order.compare(Monomial.of(b), Monomial.of(b)), Ordering.EQ)

    def test_revlex(self):
        a, b, c = Variable.plucker(1, 2), Variable.plucker(1, 3), Variable.plucker(2, 3)
        order = MonomialOrder.revlex([a, b, c])
        # degree first
        self.assertEqual(order.compare(Monomial.of(c, c), Monomial.of(a)), Ordering.GT)
        # smaller exponent on the least variable wins
        self.assertEqual(order.compare(Monomial.of(a, c), Monomial.of(b, b)), Ordering.LT)
        self.assertEqual(order.compare(Monomial.of(a, b), Monomial.of(b, b)), Ordering.GT)

    def test_quadric_leading_terms(self):
        q = p(1, 4) * p(2, 3) - p(1, 3) * p(2, 4) + p(1, 2) * p(3, 4)
        lex = MonomialOrder.lex(VARIABLES)
        self.assertEqual(str(leading_monomial(q, lex)), "p[1,2]*p[3,4]")
        revlex = MonomialOrder.revlex(list(reversed(VARIABLES)))
        self.assertEqual(str(leading_monomial(q, revlex)), "p[1,4]*p[2,3]")

    def test_block_elimination(self):
        a, b, c = Variable.plucker(1, 2), Variable.plucker(1, 3), Variable.plucker(2, 3)
        order = MonomialOrder.block_elim_lex([a], [b, c])
        self.assertEqual(order.kept, (b, c))
        self.assertEqual(order.compare(Monomial.of(a), Monomial.of(b, b, b)), Ordering.GT)
        self.assertEqual(order.restrict([b, c]), MonomialOrder.lex([b, c]))
        self.assertIn("elim keep=[p[1,3],p[2,3]]", order.describe())

    def test_bad_orders(self):
        a = Variable.plucker(1, 2)
        with self.assertRaises(InvalidOrderError):
            MonomialOrder.lex([a, a])
        with self.assertRaises(UnknownVariableError):
            MonomialOrder.lex([a]).key(Monomial.of(Variable.plucker(1, 3)))

    def test_sort(self):
        a, b = Variable.plucker(1, 2), Variable.plucker(1, 3)
        order = MonomialOrder.lex([a, b])
        found = order.sort([Monomial.of(b), Monomial.of(a), Monomial.one()])
        self.assertEqual(found, [Monomial.of(a), Monomial.of(b), Monomial.one()])

    @settings(max_examples=40, deadline=None)
    @given(orders, monomials, monomials, monomials)
    def test_order_axioms(self, order, m1, m2, m3):
        k1, k2 = order.key(m1), order.key(m2)
        self.assertEqual(k1 == k2, m1 == m2)
        # multiplicative
        if k1 < k2:
            self.assertLess(order.key(m1 * m3), order.key(m2 * m3))
        # one is the smallest monomial
        self.assertLessEqual(order.key(Monomial.one()), k1)
        self.assertLessEqual(k1, order.key(m1 * m2))
