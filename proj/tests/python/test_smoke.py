"""Smoke tests for the python bindings: a quick pass over every exposed
surface, with the exact values mirrored from the C++ suites."""

import unittest
from fractions import Fraction

import graphfp


class GraphTests(unittest.TestCase):
    def test_two_vertex_graph(self):
        g = graphfp.make_two_vertex(Fraction(2), Fraction(1))
        self.assertEqual(g.vertex_count, 2)
        self.assertEqual(g.edge_count, 2)
        self.assertEqual(g.mu("v"), Fraction(2))
        self.assertEqual(g.dual("e"), "e~")
        self.assertEqual(g.source("e"), "v")
        self.assertEqual(g.range("e"), "w")
        self.assertFalse(g.normalized)
        self.assertEqual(g.mu_square_sum, Fraction(5))
        self.assertEqual(graphfp.two_vertex_rho(g), Fraction(2))
        report = g.validate()
        self.assertTrue(report["ok"])

    def test_weight_convention_rejected(self):
        with self.assertRaises(graphfp.GraphError):
            graphfp.make_two_vertex(Fraction(1), Fraction(2))

    def test_flower_and_paths(self):
        g = graphfp.make_flower(2, [(0, 1)])
        self.assertEqual(g.dual("e1"), "e2")
        paths = graphfp.enumerate_paths(g, 2)
        self.assertEqual(len(paths), 4)
        for p in paths:
            self.assertEqual(p["source"], "v")
            self.assertEqual(len(p["edges"]), 2)

    def test_json_round_trip(self):
        g = graphfp.make_two_vertex(Fraction(4, 5), Fraction(3, 5))
        h = graphfp.load_graph_json(g.to_json())
        self.assertTrue(h.normalized)
        with self.assertRaises(graphfp.GraphError):
            graphfp.load_graph_json("{\"vertices\": [], \"edges\": []}")
        with self.assertRaises(graphfp.GraphError):
            graphfp.load_graph_json(
                '{"vertices": [{"id": "v", "mu": "1"}, {"id": "w", "mu": "1"}],'
                ' "edges": [{"id": "e", "source": "v", "range": "w", "dual": "e"}]}'
            )


class TraceTests(unittest.TestCase):
    def test_three_evaluators_agree(self):
        g = graphfp.make_two_vertex(Fraction(2), Fraction(1))
        word = graphfp.alternating_word(g, 2)
        self.assertEqual(word, ["e~", "e", "e~", "e"])
        t1 = graphfp.trace_pair_partition(g, word)
        t2 = graphfp.trace_operator_model(g, word)
        t3 = graphfp.trace_from_cumulants(g, word)
        self.assertEqual(t1, Fraction(1))
        self.assertEqual(t1, t2)
        self.assertEqual(t2, t3)

    def test_star_suffix_in_words(self):
        g = graphfp.make_two_vertex(Fraction(2), Fraction(1))
        self.assertEqual(
            graphfp.trace_pair_partition(g, ["e*", "e"]),
            graphfp.trace_pair_partition(g, ["e~", "e"]),
        )
        self.assertEqual(graphfp.parse_word(g, "e,e*"), ["e", "e~"])

    def test_free_poisson_identity(self):
        g = graphfp.make_two_vertex(Fraction(2), Fraction(1))
        tau_pw = Fraction(1, 5)
        for n in range(1, 6):
            word = graphfp.alternating_word(g, n)
            lhs = graphfp.trace_pair_partition(g, word) / tau_pw
            rhs = sum(
                graphfp.narayana(n, k) * Fraction(2) ** (2 * k - n)
                for k in range(1, n + 1)
            )
            self.assertEqual(lhs, rhs)
            self.assertEqual(graphfp.tstar_t_moment(Fraction(2), n), rhs)

    def test_semicircular_petal(self):
        g = graphfp.make_flower(1, [(0, 0)])
        catalan = [1, 2, 5, 14, 42]
        for n in range(1, 6):
            self.assertEqual(
                graphfp.trace_pair_partition(g, ["e1"] * (2 * n)), catalan[n - 1]
            )


class CumulantTests(unittest.TestCase):
    def test_kappa_base(self):
        g = graphfp.make_two_vertex(Fraction(2), Fraction(1))
        self.assertEqual(graphfp.kappa_base(g, ["e", "e~"]), {"v": Fraction(1, 2)})
        self.assertEqual(graphfp.kappa_base(g, ["e~", "e"]), {"w": Fraction(2)})
        self.assertEqual(graphfp.kappa_base(g, ["e"]), {})

    def test_kappa_pi_and_moment(self):
        g = graphfp.make_two_vertex(Fraction(2), Fraction(1))
        word = ["e~", "e", "e~", "e"]
        self.assertEqual(
            graphfp.kappa_pi(g, word, [[1, 2], [3, 4]]), {"w": Fraction(4)}
        )
        self.assertEqual(graphfp.moment_from_cumulants(g, word), {"w": Fraction(5)})

    def test_freeness_report(self):
        g = graphfp.make_flower(3, [(0, 1), (2, 2)])
        report = graphfp.mixed_cumulants_vanish(g, 4)
        self.assertTrue(report["free"])
        self.assertGreater(report["mixed_tuples_checked"], 0)
        self.assertEqual(report["violations"], [])

    def test_covariance(self):
        g = graphfp.make_two_vertex(Fraction(2), Fraction(1))
        cov = graphfp.covariance_maps(g)
        self.assertEqual(cov["rho"], Fraction(2))
        self.assertEqual(cov["alpha"][1][0], Fraction(2))
        self.assertEqual(cov["beta"][0][1], Fraction(1, 2))
        self.assertEqual(cov["eta"][0][0], Fraction(0))

    def test_scalar_transforms(self):
        mu = graphfp.cumulants_to_moments([Fraction(0), Fraction(1), Fraction(0), Fraction(0)])
        self.assertEqual(mu, [Fraction(0), Fraction(1), Fraction(0), Fraction(2)])
        probe = [Fraction(3, 7), Fraction(-2), Fraction(11, 5)]
        self.assertEqual(
            graphfp.moments_to_cumulants(graphfp.cumulants_to_moments(probe)), probe
        )

    def test_free_poisson_moment(self):
        self.assertEqual(
            graphfp.free_poisson_moment(1, Fraction(3), Fraction(5, 2)),
            Fraction(15, 2),
        )
        for n in range(1, 6):
            self.assertEqual(
                graphfp.free_poisson_moment(n, Fraction(1), Fraction(1)),
                graphfp.catalan(n),
            )


class CombinatoricsTests(unittest.TestCase):
    def test_counts(self):
        self.assertEqual(graphfp.catalan(8), 1430)
        self.assertEqual(len(graphfp.noncrossing_partitions(5)), 42)
        self.assertEqual(len(graphfp.noncrossing_pair_partitions(10)), 42)
        self.assertEqual(graphfp.narayana_row(4), [1, 6, 6, 1])
        self.assertEqual(graphfp.narayana_poly(2, Fraction(1, 3)), Fraction(4, 9))

    def test_bijection(self):
        pairs = [(1, 8), (2, 5), (3, 4), (6, 7), (9, 12), (10, 11)]
        blocks = graphfp.tl_bijection(pairs)
        self.assertEqual(blocks, [[1, 3, 4], [2], [5, 6]])
        self.assertEqual(graphfp.odd_block_count(pairs), 3)
        self.assertEqual(sorted(graphfp.tl_inverse(6, blocks)), sorted(pairs))


class FockTests(unittest.TestCase):
    def test_band_matrix(self):
        mat = graphfp.tstar_t_matrix(Fraction(2), 4)
        self.assertEqual(mat[0][0], Fraction(2))
        self.assertEqual(mat[1][1], Fraction(5, 2))
        self.assertEqual(mat[0][2], Fraction(1))
        self.assertEqual(mat[0][1], Fraction(0))

    def test_general_model(self):
        for n in range(1, 5):
            self.assertEqual(
                graphfp.general_t_moment(Fraction(2), Fraction(1), n),
                graphfp.free_poisson_moment(n, Fraction(4), Fraction(1)),
            )


class SpectralTests(unittest.TestCase):
    def test_boundary_values(self):
        self.assertEqual(graphfp.boundary_f0(2.0), complex(-1, 0))
        self.assertEqual(graphfp.boundary_f0(0.0), complex(0, 1))

    def test_herglotz(self):
        z = complex(0.3, 0.5)
        self.assertGreater(graphfp.cauchy_f0(z).imag, 0)
        self.assertGreater(graphfp.cauchy_frho(z, 2.0).imag, 0)

    def test_density(self):
        lo, hi = graphfp.tstar_t_support(2.0)
        self.assertAlmostEqual(lo, 0.5)
        self.assertAlmostEqual(hi, 4.5)
        self.assertAlmostEqual(graphfp.density_mass(2.0), 1.0, places=8)
        exact = float(graphfp.tstar_t_moment(Fraction(2), 3))
        self.assertAlmostEqual(graphfp.density_moment(3, 2.0), exact, places=6)
        self.assertEqual(graphfp.density_tstar_t(0.1, 2.0), 0.0)

    def test_inversion_scan(self):
        rows = graphfp.stieltjes_inversion_scan(2.0, 1e-6, graphfp.linspace(-1.9, 1.9, 21))
        self.assertEqual(len(rows), 21)
        self.assertLess(max(row[3] for row in rows), 1e-4)


if __name__ == "__main__":
    unittest.main()
