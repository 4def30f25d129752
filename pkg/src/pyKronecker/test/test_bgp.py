import os
import unittest

import numpy as np

from pyKronecker import bgp
from pyKronecker import census
from pyKronecker import exactalg as ea
from pyKronecker import k0
from pyKronecker.errors import DomainError
from pyKronecker.rep import KronRep, decompose, direct_sum, \
     is_indecomposable, is_isomorphic
from pyKronecker.structure import is_elementary
from pyKronecker.zoo import build_I, build_k2_regular_R, build_P1, \
     build_S1, build_S2, build_X, build_Y

SLOW = bool(os.environ.get('PYKRONECKER_SLOW'))

F2 = ea.FieldDesc(2)
F3 = ea.FieldDesc(3)


class Testcase_pyKronecker_reflection(unittest.TestCase):
    """ Shift functors and the Auslander-Reiten translate. """

    def test_shift_of_X(self):
        for field in (F2, F3):
            SX = bgp.sigma_rep(build_X(field))
            self.assertEqual(SX.dims, (4, 2))
            self.assertTrue(is_isomorphic(SX, build_Y(field)))
            self.assertTrue(is_isomorphic(bgp.sigma_inv_rep(SX),
                                          build_X(field)))

    def test_simples(self):
        self.assertTrue(bgp.sigma_inv_rep(build_S1(F2)).is_zero())
        self.assertTrue(bgp.sigma_rep(build_S2(F2)).is_zero())
        P = bgp.sigma_inv_rep(build_S2(F3))
        self.assertEqual(P.dims, (1, 3))
        self.assertTrue(is_isomorphic(P, build_P1(F3)))
        self.assertEqual(bgp.sigma_rep(build_S1(F2)).dims, (3, 1))

    def test_powers(self):
        X = build_X(F2)
        self.assertEqual(bgp.tau(X).dims, (10, 4))
        self.assertEqual(bgp.sigma_power(X, 2), bgp.tau(X))
        self.assertEqual(bgp.tau_inv(X).dims, (4, 10))
        self.assertTrue(is_isomorphic(bgp.sigma_inv_power(bgp.tau(X), 2), X))
        self.assertEqual(build_I(2, F2).dims, (8, 3))


class Testcase_pyKronecker_classes(unittest.TestCase):
    """ Preprojective, preinjective and regular detection. """

    def test_classify(self):
        self.assertEqual(bgp.classify_indecomposable(build_P1(F2)),
                         'preprojective')
        self.assertEqual(bgp.classify_indecomposable(build_S2(F2)),
                         'preprojective')
        self.assertEqual(bgp.classify_indecomposable(build_I(1, F2)),
                         'preinjective')
        self.assertEqual(bgp.classify_indecomposable(build_X(F2)), 'regular')
        self.assertEqual(bgp.classify_indecomposable(build_Y(F2)), 'regular')

    def test_summands(self):
        X = build_X(F2)
        self.assertTrue(bgp.is_regular_rep(X))
        self.assertTrue(bgp.is_regular_rep(direct_sum(X, build_Y(F2))))
        self.assertFalse(bgp.is_regular_rep(direct_sum(X, build_S1(F2))))
        self.assertTrue(bgp.has_preprojective_summand(
            direct_sum(X, build_P1(F2))))
        self.assertTrue(bgp.has_preinjective_summand(
            direct_sum(X, build_I(1, F2))))
        self.assertTrue(bgp.is_regular_by_decomposition(X))
        self.assertFalse(bgp.is_regular_by_decomposition(
            direct_sum(X, build_P1(F2))))

    def test_preinjective_multiplicities(self):
        M = direct_sum(build_S1(F2), build_I(1, F2), build_X(F2))
        self.assertEqual(bgp.preinjective_multiplicities(M, 3), [1, 1, 0])
        self.assertEqual(bgp.preinjective_multiplicities(M, 0), [])
        with self.assertRaises(DomainError):
            bgp.preinjective_multiplicities(M, -1)


class Testcase_pyKronecker_functor_coherence(unittest.TestCase):
    """ sigma and sigma_inv on the indecomposable (2,2) modules over F_2. """

    def check_codes(self, codes, transported):
        """ transported: how many elementary modules to carry through
        sigma, None for all of them. """
        carried = 0
        for entries in census.decode_codes(codes, (2, 2), 2):
            M = census.rep_from_entries(F2, (2, 2), entries)
            if not is_indecomposable(M):
                continue
            SM = bgp.sigma_rep(M)
            self.assertEqual(tuple(SM.dims), tuple(k0.sigma_dim(M.dims)))
            self.assertTrue(is_isomorphic(bgp.sigma_inv_rep(SM), M),
                            M.to_dict())
            if transported is not None and carried >= transported:
                continue
            if is_elementary(M):
                carried += 1
                self.assertTrue(is_elementary(SM), M.to_dict())

    def test_X(self):
        self.assertTrue(is_elementary(bgp.sigma_rep(build_X(F2))))

    def test_sample(self):
        rng = ea.make_rng(23)
        self.check_codes(np.sort(rng.choice(4096, size=120, replace=False)),
                         transported=6)

    @unittest.skipUnless(SLOW, 'set PYKRONECKER_SLOW=1 for slow runs')
    def test_all(self):
        self.check_codes(np.arange(4096), transported=None)


class Testcase_pyKronecker_k2(unittest.TestCase):
    """ Decomposition of K(2) modules against the dimension classes. """

    def test_random_k2(self):
        rng = ea.make_rng(29)
        trials = 1000 if SLOW else 150
        for _ in range(trials):
            total = int(rng.integers(1, 9))
            d1 = int(rng.integers(0, total + 1))
            d2 = total - d1
            M = KronRep(F2, d1, d2, [ea.random_matrix(F2, d2, d1, rng)
                                     for _ in range(2)])
            parts = decompose(M)
            self.assertEqual(tuple(map(sum, zip(*[p.dims for p in parts]))),
                             (d1, d2))
            for part in parts:
                kind = k0.k2_dim_class(part.dims)
                self.assertIsNotNone(kind, part.dims)
                self.assertEqual(bgp.classify_indecomposable(part), kind,
                                 part.to_dict())

    def test_regular_paths(self):
        for t in range(1, 6):
            R = build_k2_regular_R(t, F2)
            self.assertTrue(is_indecomposable(R), t)
            self.assertEqual(bgp.classify_indecomposable(R), 'regular')


if __name__ == "__main__":
    unittest.main()
