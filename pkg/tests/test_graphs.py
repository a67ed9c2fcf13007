"""Interval graphs, condition (*) and the overlap criteria."""

import itertools
from unittest import TestCase

from plucker_asl import graphs, lattice
from plucker_asl.exceptions import InvalidIndexError, InvalidSystemError
from plucker_asl.graphs import CliqueIntervalSystem, Graph
from tests.utils import PERFECT_L5, WIDE_OVERLAP_L7, pairs, sublattice


def all_graphs(n: int):
    """Every graph on [n] without isolated vertices."""
    universe = lattice.all_pairs(n)
    for size in range(1, len(universe) + 1):
        for edges in itertools.combinations(universe, size):
            G = Graph(n, edges)
            if not G.isolated_vertices:
                yield G


class GraphTestCase(TestCase):
    def test_basics(self):
        G = Graph(4, pairs("12 23"))
        self.assertEqual(G.isolated_vertices, [4])
        self.assertFalse(G.is_connected)
        self.assertEqual(repr(G), "Graph(n=4, {12 23})")
        self.assertEqual(G.complement().edges, frozenset(pairs("13 14 24 34")))
        self.assertTrue(Graph.complete(4).is_connected)
        with self.assertRaises(InvalidIndexError):
            Graph(3, pairs("14"))

    def test_graph_of(self):
        S = sublattice(5, PERFECT_L5["[1,4][3,5]"])
        self.assertEqual(graphs.graph_of(S, 5).edges, S.members)

    def test_maximal_cliques(self):
        self.assertEqual(graphs.maximal_cliques(Graph.complete(4)), [(1, 2, 3, 4)])
        G = Graph(5, pairs("12 23 34 45 35 13 14 24"))
        self.assertEqual(graphs.maximal_cliques(G), [(1, 2, 3, 4), (3, 4, 5)])


class IntervalRecognitionTestCase(TestCase):
    def test_interval_graph(self):
        G = Graph(5, pairs("12 23 34 45 35 13 14 24"))
        system = graphs.interval_system(G)
        self.assertEqual(str(system), "[1,4][3,5]")
        self.assertTrue(graphs.condition_star(G))
        self.assertTrue(graphs.is_chordal(G))

    def test_not_interval(self):
        # {2,4,5} is a maximal clique that is not a run
        G = Graph(5, pairs("13 23 24 45 25 12 14 34"))
        self.assertIsNone(graphs.interval_system(G))
        self.assertFalse(graphs.is_interval_graph(G))
        # 23 and 25 are edges but 35 is not
        self.assertFalse(graphs.condition_star(G))

    def test_disconnected_counterexample(self):
        G = Graph(4, pairs("13 24"))
        self.assertFalse(G.is_connected)
        self.assertTrue(graphs.condition_star(G))
        self.assertFalse(graphs.is_interval_graph(G))

    def test_isolated_vertices(self):
        G = Graph(5, pairs("12 23 13"))
        with self.assertRaises(InvalidSystemError):
            graphs.interval_system(G)
        system = graphs.interval_system(G, allow_isolated=True)
        self.assertEqual(system.intervals, ((1, 3),))
        self.assertEqual(system.isolated_vertices, [4, 5])

    def test_condition_star_characterizes_connected_interval_graphs(self):
        for n in (3, 4, 5):
            for G in all_graphs(n):
                if G.is_connected:
                    self.assertEqual(graphs.condition_star(G), graphs.is_interval_graph(G), G)

    def test_interval_graphs_are_chordal(self):
        for G in all_graphs(5):
            if graphs.is_interval_graph(G):
                self.assertTrue(graphs.is_chordal(G), G)


class CliqueIntervalSystemTestCase(TestCase):
    def test_validation(self):
        self.assertEqual(len(CliqueIntervalSystem(5, [(1, 3), (2, 5)]).intervals), 2)
        for bad in ([(1, 3), (1, 4)], [(1, 4), (2, 3)], [(0, 2)], [(2, 6)], [(3, 3)]):
            with self.assertRaises(InvalidSystemError):
                CliqueIntervalSystem(5, bad)

    def test_parse_and_members(self):
        for text, members in PERFECT_L5.items():
            system = CliqueIntervalSystem.parse(text, 5)
            self.assertEqual(str(system), text)
            self.assertEqual(system.members(), sublattice(5, members).members)
            self.assertTrue(system.is_connected)

    def test_round_trip_through_graphs(self):
        system = CliqueIntervalSystem.parse("[1,5][2,6][4,7]", 7)
        self.assertEqual(system.sublattice(), sublattice(7, WIDE_OVERLAP_L7))
        self.assertEqual(graphs.interval_system(system.graph()), system)

    def test_overlaps_and_criteria(self):
        wide = CliqueIntervalSystem.parse("[1,5][2,6][4,7]", 7)
        self.assertEqual(graphs.overlaps(wide), [4, 3])
        self.assertTrue(graphs.perfect_criterion(wide))
        self.assertFalse(graphs.gorenstein_criterion(wide))
        loose = CliqueIntervalSystem.parse("[1,3][3,5]", 5)
        self.assertEqual(graphs.overlaps(loose), [1])
        self.assertFalse(graphs.perfect_criterion(loose))
        gapped = CliqueIntervalSystem.parse("[1,2][4,5]", 5)
        self.assertEqual(graphs.overlaps(gapped), [0])
        self.assertFalse(gapped.is_connected)
        self.assertEqual(gapped.isolated_vertices, [3])


class EnumerationTestCase(TestCase):
    def test_perfect_systems(self):
        found = {str(s) for s in graphs.enumerate_interval_systems(5, min_overlap=2)}
        self.assertEqual(found, set(PERFECT_L5))

    def test_systems_cover(self):
        for system in graphs.enumerate_interval_systems(6):
            self.assertEqual(system.isolated_vertices, [])
        gapped = list(graphs.enumerate_interval_systems(4, allow_gaps=True))
        self.assertIn("[1,2][3,4]", {str(s) for s in gapped})
        self.assertGreater(len(gapped), len(list(graphs.enumerate_interval_systems(4))))

    def test_perfect_criterion_matches_lattice(self):
        for n in (4, 5, 6):
            for system in graphs.enumerate_interval_systems(n):
                self.assertEqual(
                    graphs.perfect_criterion(system),
                    lattice.is_perfect(system.sublattice()),
                    system,
                )

    def test_gorenstein_criterion_matches_purity(self):
        for n in (5, 6):
            for system in graphs.enumerate_interval_systems(n, min_overlap=2):
                ji = lattice.join_irreducibles(system.sublattice())
                self.assertEqual(graphs.gorenstein_criterion(system), lattice.is_pure(ji), system)

    def test_budget(self):
        with self.assertRaises(graphs.BudgetExceeded):
            list(graphs.enumerate_interval_systems(graphs.MAX_GRAPH_N + 1))


class GorensteinCountTestCase(TestCase):
    EXPECTED = {4: 2, 5: 5, 6: 13, 7: 34, 8: 89, 9: 233, 10: 610}

    def test_three_methods_agree(self):
        for n, expected in self.EXPECTED.items():
            self.assertEqual(graphs.gorenstein_count_recurrence(n), expected)
            self.assertEqual(graphs.gorenstein_count_closed_form(n), expected)
            self.assertEqual(graphs.count_gorenstein_perfect(n), expected)
        for n in (4, 5, 6, 7):
            self.assertEqual(graphs.gorenstein_count_brute_force(n), self.EXPECTED[n])

    def test_beyond_enumeration(self):
        self.assertEqual(
            graphs.count_gorenstein_perfect(14), graphs.gorenstein_count_recurrence(14)
        )
        # odd-indexed Fibonacci numbers
        self.assertEqual(graphs.gorenstein_count_recurrence(11), 1597)

    def test_small_n(self):
        with self.assertRaises(InvalidIndexError):
            graphs.gorenstein_count_recurrence(3)
