import os
import unittest

from pyKronecker import coeffquiver as cqv
from pyKronecker import exactalg as ea
from pyKronecker.config import Config
from pyKronecker.errors import RefusalError
from pyKronecker.zoo import build_B, build_k2_regular_R, \
     build_nonelem_tree, build_X, build_Y

SLOW = bool(os.environ.get('PYKRONECKER_SLOW'))

F2 = ea.FieldDesc(2)
F3 = ea.FieldDesc(3)


class Testcase_pyKronecker_coeffquiver(unittest.TestCase):
    """ Coefficient quivers in given bases. """

    def test_edges(self):
        cq = cqv.coefficient_quiver(build_X(F2))
        self.assertEqual(cq.edges, ((0, 0, 0), (0, 1, 2), (1, 0, 1),
                                    (1, 1, 0)))
        self.assertEqual(cq.n_vertices, 4)
        G = cq.graph()
        self.assertEqual(G.number_of_nodes(), 4)
        self.assertEqual(G.number_of_edges(), 4)

    def test_cycles(self):
        report = cqv.cycle_report(cqv.coefficient_quiver(build_X(F3)))
        self.assertEqual(report, {'edges': 4, 'vertices': 4,
                                  'components': 1, 'cycle_rank': 1})
        report = cqv.cycle_report(cqv.coefficient_quiver(build_Y(F2)))
        self.assertEqual(report['cycle_rank'], 1)
        empty = cqv.CoeffQuiver(0, 0, ())
        self.assertEqual(cqv.cycle_report(empty)['components'], 0)

    def test_trees(self):
        self.assertTrue(cqv.is_tree(cqv.coefficient_quiver(build_B(F2, 1))))
        self.assertFalse(cqv.is_tree(cqv.coefficient_quiver(build_X(F2))))
        self.assertFalse(cqv.is_tree(cqv.CoeffQuiver(0, 0, ())))
        left = cqv.coefficient_quiver(build_nonelem_tree(F2, 'left'))
        self.assertTrue(cqv.is_type_a(left))
        self.assertTrue(cqv.is_type_a(cqv.coefficient_quiver(
            build_k2_regular_R(3, F3))))
        # a double edge and an isolated vertex
        split = cqv.CoeffQuiver(1, 2, ((0, 0, 0), (0, 0, 1)))
        self.assertFalse(cqv.is_tree(split))
        self.assertEqual(cqv.cycle_report(split)['cycle_rank'], 1)

    def test_bases(self):
        X = build_X(F2)
        b1 = F2.array([[1, 1], [0, 1]])
        cq = cqv.coefficient_quiver(X, b1=b1)
        self.assertNotEqual(cq.edges,
                            cqv.coefficient_quiver(X).edges)
        g = F2.array([[1, 0, 0], [0, 0, 1], [0, 1, 0]])
        swapped = cqv.coefficient_quiver(X, g=g)
        self.assertIn((1, 0, 2), swapped.edges)

    def test_dot(self):
        dot = cqv.to_dot(cqv.coefficient_quiver(build_X(F2)))
        self.assertIn('coeffquiver', dot)
        self.assertIn('box', dot)
        self.assertIn('circle', dot)
        self.assertIn('t1', dot)
        self.assertIn('b0', dot)


class Testcase_pyKronecker_tree_search(unittest.TestCase):
    """ Exhaustive search for tree coefficient quivers. """

    def test_size(self):
        self.assertEqual(cqv.tree_search_size(build_X(F2)), 6 * 6 * 168)
        self.assertEqual(cqv.tree_search_size(build_B(F3, 0)), 5616)

    def test_tree_modules(self):
        for M in (build_B(F2, 2), build_nonelem_tree(F2, 'left'),
                  build_nonelem_tree(F2, 'right')):
            witness = cqv.tree_module_search(M)
            self.assertIsNotNone(witness)
            self.assertTrue(cqv.is_tree(witness.quiver))
            self.assertEqual(cqv.coefficient_quiver(M, witness.b1,
                                                    witness.b2,
                                                    witness.g),
                             witness.quiver)
            self.assertEqual(len(witness.to_dict()['edges']), M.total - 1)

    def test_X_is_not_a_tree_module(self):
        self.assertIsNone(cqv.tree_module_search(build_X(F2)))

    @unittest.skipUnless(SLOW, 'set PYKRONECKER_SLOW=1 for slow runs')
    def test_X_over_F3(self):
        self.assertIsNone(cqv.tree_module_search(build_X(F3)))

    def test_refusal(self):
        with self.assertRaises(RefusalError):
            cqv.tree_module_search(build_X(F2),
                                   Config(tree_search_bound=100))


if __name__ == "__main__":
    unittest.main()
