"""The Plücker ideal, its orders, straightening and elimination."""

from unittest import TestCase, mock

import pytest

from plucker_asl import arcs, lattice, plucker
from plucker_asl.exactalg import Monomial, leading_monomial, p, x, y
from plucker_asl.exceptions import (
    BudgetExceeded,
    ConsistencyError,
    InvalidIndexError,
    InvalidOrderError,
    NotCompatibleError,
)
from plucker_asl.graphs import Graph
from plucker_asl.groebner import Ideal, buchberger
from plucker_asl.lattice import PairIndex, Sublattice
from tests.utils import PERFECT_L5, pairs, sublattice

Q1234 = p(1, 4) * p(2, 3) - p(1, 3) * p(2, 4) + p(1, 2) * p(3, 4)


def standard_terms(f):
    return {str(s): c for c, s in plucker.straighten(f)}


class PolynomialsTestCase(TestCase):
    def test_signed_p(self):
        self.assertEqual(plucker.signed_p(3, 1), -p(1, 3))
        self.assertEqual(plucker.signed_p(1, 3), p(1, 3))
        with self.assertRaises(InvalidIndexError):
            plucker.signed_p(2, 2)

    def test_quadric(self):
        self.assertEqual(plucker.quadric(1, 2, 3, 4), Q1234)
        with self.assertRaises(InvalidIndexError):
            plucker.quadric(1, 3, 2, 4)

    def test_oracle(self):
        self.assertEqual(plucker.plucker_image(p(1, 2)), x(1) * y(2) - x(2) * y(1))
        self.assertTrue(plucker.plucker_map_oracle(Q1234))
        self.assertTrue(plucker.plucker_map_oracle(plucker.quadric(2, 3, 5, 6) * p(1, 7)))
        self.assertFalse(plucker.plucker_map_oracle(p(1, 2) * p(3, 4)))
        self.assertFalse(plucker.plucker_map_oracle(Q1234 + p(1, 2)))

    def test_cubics(self):
        self.assertTrue(plucker.plucker_map_oracle(plucker.cubic5(1, 2, 3, 4, 5)))
        self.assertTrue(plucker.plucker_map_oracle(plucker.cubic6(1, 2, 3, 4, 5, 6)))
        self.assertTrue(plucker.plucker_map_oracle(plucker.cubic5(1, 3, 4, 6, 7)))
        with self.assertRaises(InvalidIndexError):
            plucker.cubic5(2, 1, 3, 4, 5)

    def test_antisymmetric_cubics(self):
        swapped = plucker.cubic5(2, 1, 3, 4, 5, allow_unordered=True)
        self.assertTrue(plucker.plucker_map_oracle(swapped))
        self.assertTrue(
            plucker.plucker_map_oracle(plucker.cubic6(6, 2, 4, 1, 5, 3, allow_unordered=True))
        )
        with self.assertRaises(InvalidIndexError):
            plucker.cubic5(1, 1, 3, 4, 5, allow_unordered=True)

    def test_ideals(self):
        self.assertEqual(len(plucker.plucker_ideal(6)), 15)
        self.assertEqual(len(plucker.quadric_ideal(Sublattice.full(5))), 5)
        L = sublattice(5, PERFECT_L5["[1,4][2,5]"])
        self.assertEqual(
            set(plucker.quadric_ideal(L).generators),
            {plucker.quadric(1, 2, 3, 4), plucker.quadric(2, 3, 4, 5)},
        )
        self.assertEqual(len(plucker.edge_quadric_ideal(Graph.complete(5))), 5)
        self.assertTrue(plucker.edge_quadric_ideal(Graph(4, pairs("12 13 23 24 34"))).is_zero)


class OrdersTestCase(TestCase):
    def test_leading_terms(self):
        lead = {
            "revlex": plucker.revlex_order(4),
            "pi_lex": plucker.pi_lex_order(4),
            "appendix": plucker.appendix_order(4),
        }
        found = {name: str(leading_monomial(Q1234, order)) for name, order in lead.items()}
        self.assertEqual(
            found,
            {"revlex": "p[1,4]*p[2,3]", "pi_lex": "p[1,4]*p[2,3]", "appendix": "p[1,2]*p[3,4]"},
        )

    def test_any_linear_extension(self):
        for seed in range(4):
            extension = lattice.linear_extension(6, lattice.PosetKind.L, seed)
            order = plucker.revlex_order(6, extension)
            for q in plucker.plucker_ideal(6).generators:
                i, j, k, l = sorted({v for var in q.variables for v in var.pair})
                self.assertEqual(str(leading_monomial(q, order)), f"p[{i},{l}]*p[{j},{k}]")

    def test_bad_extension(self):
        with self.assertRaises(InvalidOrderError):
            plucker.revlex_order(4, pairs("12 13 14 23 24"))

    def test_elimination_order(self):
        L = sublattice(5, PERFECT_L5["[1,4][3,5]"])
        order = plucker.elimination_order(L)
        self.assertEqual(set(order.kept), L.variables)
        self.assertEqual(order.eliminated, {pair.variable for pair in pairs("15 25")})


class AppendixBasisTestCase(TestCase):
    def test_sizes(self):
        self.assertEqual([len(plucker.appendix_basis(n)) for n in (4, 5, 6, 7)], [1, 6, 22, 63])

    def test_leading_monomials(self):
        order = plucker.appendix_order(5)
        leads = [str(leading_monomial(g, order)) for g in plucker.appendix_basis(5)]
        self.assertIn("p[1,3]*p[2,4]*p[3,5]", leads)
        self.assertEqual(leads[0], "p[1,2]*p[3,4]")

    @pytest.mark.slow
    def test_reduced_basis_n6(self):
        gb = buchberger(plucker.plucker_ideal(6), plucker.appendix_order(6))
        self.assertEqual(set(gb.elements), set(plucker.appendix_basis(6)))

    def test_stanley_reisner(self):
        expected = {5: (7, 5, True), 6: (9, 14, True)}
        for n, (dimension, degree, pure) in expected.items():
            summary = plucker.stanley_reisner_analysis(plucker.appendix_monomial_ideal(n))
            self.assertEqual(summary.dimension, dimension)
            self.assertEqual(summary.degree, degree)
            self.assertEqual(summary.equidimensional, pure)

    def test_facets_are_maximal_arrangements(self):
        facets = set(plucker.facet_arc_sets(plucker.appendix_monomial_ideal(5)))
        self.assertEqual(facets, {A.arcs for A in arcs.enumerate_maximal(5)})

    def test_squarefree_ideal(self):
        a, b, c = (pair.variable for pair in pairs("12 13 23"))
        M = plucker.SquarefreeMonomialIdeal.of(
            [Monomial.of(a, b), Monomial.of(a, b, c), Monomial.of(c)], [a, b, c]
        )
        self.assertEqual(len(M), 2)
        complex_ = plucker.stanley_reisner_complex(M)
        self.assertEqual(complex_.facets, (frozenset({a}), frozenset({b})))
        with self.assertRaises(ValueError):
            plucker.SquarefreeMonomialIdeal([Monomial.of(a, a)], [a])
        with self.assertRaises(ValueError):
            plucker.SquarefreeMonomialIdeal([Monomial.of(a), Monomial.of(a, b)], [a, b])


class StraighteningTestCase(TestCase):
    def test_straighten(self):
        found = standard_terms(p(1, 4) * p(2, 3))
        self.assertEqual(found, {"p[1,3]*p[2,4]": 1, "p[1,2]*p[3,4]": -1})
        self.assertEqual(standard_terms(p(1, 2) * p(3, 4)), {"p[1,2]*p[3,4]": 1})
        self.assertEqual(standard_terms(Q1234), {})

    def test_steps(self):
        f = p(1, 5) * p(2, 4) * p(3, 6)
        rewritten, steps = plucker.straightening_steps(f)
        self.assertTrue(steps)
        self.assertTrue(all(step.dominated for step in steps))
        # the rewrite lands on the normal form
        self.assertEqual(
            dict(rewritten.terms), {s.monomial: c for c, s in plucker.straighten(f)}
        )
        self.assertTrue(plucker.plucker_map_oracle(f - rewritten))

    def test_steps_are_read_off_the_quadric(self):
        def shifted(i, j, k, l):
            return p(i, l) * p(j, k) - p(i, k) * p(j, l) + p(j, l) * p(k, l)

        with mock.patch("plucker_asl.plucker.quadric", shifted):
            with self.assertRaises(ConsistencyError):
                plucker.straightening_steps(p(1, 4) * p(2, 3))
            self.assertFalse(plucker.asl_dominance_holds(4))

    def test_dominated(self):
        mono = Monomial.of(*(pair.variable for pair in pairs("14 23")))
        alpha, beta = PairIndex(1, 4), PairIndex(2, 3)
        good = [(1, PairIndex(1, 3), PairIndex(2, 4)), (-1, PairIndex(1, 2), PairIndex(3, 4))]
        self.assertTrue(plucker.StraighteningStep(mono, alpha, beta, good).dominated)
        self.assertFalse(plucker.StraighteningStep(mono, alpha, beta, []).dominated)
        same = [(1, PairIndex(1, 4), PairIndex(2, 3))]
        self.assertFalse(plucker.StraighteningStep(mono, alpha, beta, same).dominated)
        unchained = [(1, PairIndex(1, 3), PairIndex(2, 3)), (1, PairIndex(2, 4), PairIndex(1, 5))]
        self.assertFalse(plucker.StraighteningStep(mono, alpha, beta, unchained).dominated)

    def test_standard_monomial(self):
        s = plucker.StandardMonomial(pairs("34 12"))
        self.assertEqual(str(s), "p[1,2]*p[3,4]")
        self.assertEqual(s.degree, 2)
        with self.assertRaises(ValueError):
            plucker.StandardMonomial(pairs("14 23"))

    def test_dominance(self):
        for n in (4, 5, 6):
            self.assertTrue(plucker.asl_dominance_holds(n))

    def test_standard_monomial_counts(self):
        self.assertEqual(len(plucker.standard_monomials(lattice.all_pairs(4), 2)), 20)
        self.assertEqual(len(plucker.standard_monomials(lattice.all_pairs(5), 2)), 50)

    def test_basis_check(self):
        for n, degree in [(4, 0), (4, 1), (4, 2), (4, 3), (5, 2)]:
            self.assertTrue(plucker.standard_monomial_basis_check(n, degree), (n, degree))
        with self.assertRaises(BudgetExceeded):
            plucker.standard_monomial_basis_check(7, 2)
        with self.assertRaises(BudgetExceeded):
            plucker.standard_monomial_basis_check(4, 4)


class SublatticeSpanTestCase(TestCase):
    def test_span(self):
        self.assertTrue(plucker.span_check_degree_two(Sublattice.full(4)))
        self.assertFalse(plucker.span_check_degree_two(sublattice(4, "13 14 23 24")))

    def test_lemma_on_sublattices(self):
        self.assertTrue(plucker.sublattice_lemma_holds(Sublattice.full(4)))
        self.assertTrue(plucker.sublattice_lemma_holds(sublattice(4, "13 14 23 24")))
        for text in PERFECT_L5.values():
            self.assertTrue(plucker.sublattice_lemma_holds(sublattice(5, text)))

    def test_lemma_needs_a_sublattice(self):
        # closed under the nesting condition, but 14 and 23 have no meet
        S = sublattice(4, "12 14 23 34")
        self.assertFalse(S.is_lattice)
        self.assertTrue(lattice.asl_closure_holds(S))
        self.assertFalse(plucker.span_check_degree_two(S))
        self.assertFalse(plucker.sublattice_lemma_holds(S))


class EliminationTestCase(TestCase):
    def test_perfect_sublattices_of_l5(self):
        for text in PERFECT_L5.values():
            self.assertTrue(plucker.elimination_vs_quadrics(sublattice(5, text)), text)

    def test_generators_are_sound(self):
        for text in PERFECT_L5.values():
            L = sublattice(5, text)
            eliminated = plucker.eliminate_onto(L)
            for g in eliminated.generators:
                self.assertLessEqual(g.variables, L.variables)
                self.assertTrue(plucker.plucker_map_oracle(g), str(g))
            self.assertEqual(plucker.unsound_generators(eliminated, L.variables), [])

    def test_unsound_generators(self):
        variables = plucker.plucker_variables(4)
        outside = Ideal([Q1234], variables)
        keep = variables[1:]
        self.assertEqual(plucker.unsound_generators(outside, keep), [Q1234])
        stray = p(1, 3) * p(2, 4)
        self.assertEqual(plucker.unsound_generators(Ideal([stray], variables), variables), [stray])

    def test_requires_compatible(self):
        with self.assertRaises(NotCompatibleError):
            plucker.elimination_vs_quadrics(sublattice(5, "12 13 14 23 24 34"))

    def test_graph_corollary(self):
        universe = lattice.all_pairs(5)
        for k in (1, 2, 3):
            G = Graph(5, universe[k:])
            self.assertEqual(plucker.deleted_segment(G), k)
            self.assertTrue(plucker.elim_order_graph_corollary(G))

    def test_deleted_segment(self):
        self.assertEqual(plucker.deleted_segment(Graph.complete(4)), 0)
        with self.assertRaises(NotCompatibleError):
            plucker.deleted_segment(Graph(4, pairs("12 14 23 24 34")))


@pytest.mark.slow
class ExhaustiveEliminationTestCase(TestCase):
    def test_compatible_sublattices_of_l5(self):
        found = lattice.enumerate_compatible(5)
        self.assertTrue(found)
        for L in found:
            self.assertTrue(plucker.elimination_vs_quadrics(L), repr(L))

    def test_perfect_sublattices_of_l6(self):
        found = lattice.enumerate_perfect_compatible(6)
        self.assertEqual(len(found), 14)
        for L in found:
            eliminated = plucker.eliminate_onto(L)
            self.assertEqual(plucker.unsound_generators(eliminated, L.variables), [])
            self.assertTrue(plucker.elimination_vs_quadrics(L), repr(L))
