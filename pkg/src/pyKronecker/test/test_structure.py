import os
import unittest

import numpy as np

from pyKronecker import census
from pyKronecker import exactalg as ea
from pyKronecker import structure as st
from pyKronecker.bgp import is_regular_rep
from pyKronecker.errors import DomainError
from pyKronecker.rep import a_equivalent, arrow_change, base_change, \
     is_isomorphic, is_submodule, quotient, sub_rep
from pyKronecker.zoo import ALPHA, BETA, GAMMA, build_B, build_example_M, \
     build_example_N, build_nonelem_tree, build_S1, build_V, build_X, build_Y

SLOW = bool(os.environ.get('PYKRONECKER_SLOW'))

F2 = ea.FieldDesc(2)
F3 = ea.FieldDesc(3)


def scrambled(M, seed):
    """ M after a random arrow change and random base changes. """
    field = M.field
    rng = ea.make_rng(seed)
    M = arrow_change(M, ea.random_invertible(field, 3, rng))
    return base_change(M, ea.random_invertible(field, M.d1, rng),
                       ea.random_invertible(field, M.d2, rng))


def has_regular_split(M):
    """ Some proper non-zero submodule U with U and M/U both regular. """
    for U in st.enumerate_submodules(M):
        if tuple(U.dims) in ((0, 0), tuple(M.dims)):
            continue
        if is_regular_rep(sub_rep(M, U)) and is_regular_rep(quotient(M, U)):
            return True
    return False


class Testcase_pyKronecker_elementary(unittest.TestCase):
    """ Submodules and the elementary criterion. """

    def test_submodule_count(self):
        subs = list(st.enumerate_submodules(build_B(F2, 0)))
        self.assertEqual(sorted(tuple(U.dims) for U in subs),
                         [(0, 0), (0, 1), (1, 1)])
        subs = list(st.enumerate_submodules(build_X(F3)))
        self.assertEqual(len(set(subs)), len(subs))
        for U in subs:
            self.assertTrue(is_submodule(build_X(F3), U.u1, U.u2))

    def test_is_elementary(self):
        for field in (F2, F3):
            self.assertTrue(st.is_elementary(build_X(field)))
            self.assertTrue(st.is_elementary(build_B(field, 1)))
            for variant in ('left', 'right'):
                self.assertFalse(st.is_elementary(
                    build_nonelem_tree(field, variant)))
        self.assertTrue(st.is_elementary(build_Y(F2)))
        self.assertFalse(st.is_elementary(build_example_M(F2)))
        with self.assertRaises(DomainError):
            st.is_elementary(build_S1(F2))

    def test_witness(self):
        self.assertIsNone(st.nonelementarity_witness(build_X(F2)))
        U, factor = st.nonelementarity_witness(build_example_M(F2))
        self.assertTrue(0 < sum(U.dims) < 6)
        self.assertEqual(tuple(factor.dims),
                         (3 - U.dims[0], 3 - U.dims[1]))


class Testcase_pyKronecker_elementary_oracle(unittest.TestCase):
    """ is_elementary against the definition on (2,2) over F_2. """

    def check_codes(self, codes):
        checked = 0
        for entries in census.decode_codes(codes, (2, 2), 2):
            M = census.rep_from_entries(F2, (2, 2), entries)
            if not is_regular_rep(M):
                continue
            elementary = st.is_elementary(M)
            self.assertEqual(elementary, not has_regular_split(M),
                             M.to_dict())
            self.assertEqual(elementary,
                             st.nonelementarity_witness(M) is None)
            checked += 1
        return checked

    def test_sample(self):
        rng = ea.make_rng(17)
        codes = np.sort(rng.choice(4096, size=300, replace=False))
        self.assertGreater(self.check_codes(codes), 0)

    @unittest.skipUnless(SLOW, 'set PYKRONECKER_SLOW=1 for slow runs')
    def test_all(self):
        self.assertGreater(self.check_codes(np.arange(4096)), 0)


class Testcase_pyKronecker_filtration(unittest.TestCase):
    """ Filtrations with elementary factors. """

    def test_min_sub(self):
        M = build_example_M(F2)
        chain = st.elementary_filtration(M, 'min_sub')
        self.assertEqual(chain.factor_dims(), [(1, 1), (2, 2)])
        self.assertTrue(st.validate_filtration(M, chain))

    def test_max_sub(self):
        M = build_example_M(F2)
        chain = st.elementary_filtration(M, 'max_sub')
        self.assertTrue(st.validate_filtration(M, chain))
        self.assertEqual(chain.factor_dims(), [(1, 2), (2, 1)])
        self.assertIsNotNone(a_equivalent(chain.factors[1],
                                          build_V(F2, BETA, GAMMA)))

    def test_example_M_factors(self):
        M = build_example_M(F2)
        chain = st.elementary_filtration(M, 'min_sub')
        self.assertTrue(is_isomorphic(chain.factors[0],
                                      build_B(F2, GAMMA)))
        self.assertTrue(is_isomorphic(chain.factors[1], build_X(F2)))
        # kernel generated by the last top basis vector
        chain = st.filtration_from_generators(M, [([[0, 0, 1]], [])])
        self.assertEqual(chain.factor_dims(), [(1, 2), (2, 1)])
        self.assertTrue(st.validate_filtration(M, chain))
        self.assertTrue(is_isomorphic(chain.factors[1],
                                      build_V(F2, BETA, GAMMA)))

    def test_example_N_factors(self):
        N = build_example_N(F2)
        chain = st.filtration_from_generators(
            N, [([[0, 0, 1, 0], [0, 0, 0, 1]], [])])
        self.assertEqual(chain.factor_dims(), [(2, 2), (2, 1)])
        self.assertTrue(st.validate_filtration(N, chain))
        self.assertTrue(is_isomorphic(chain.factors[0], build_X(F2)))
        self.assertTrue(is_isomorphic(chain.factors[1],
                                      build_V(F2, ALPHA, BETA)))

        chain = st.filtration_from_generators(
            N, [([[1, 0, 0, 0]], []), ([[0, 1, 0, 0]], [])])
        self.assertEqual(chain.factor_dims(), [(1, 1), (1, 1), (2, 1)])
        self.assertTrue(st.validate_filtration(N, chain))
        for factor in chain.factors[:2]:
            self.assertTrue(is_isomorphic(factor, build_B(F2, BETA)))
        self.assertTrue(is_isomorphic(chain.factors[2],
                                      build_V(F2, ALPHA, GAMMA)))

    def test_example_N_strategies(self):
        N = build_example_N(F2)
        low = st.elementary_filtration(N, 'min_sub')
        high = st.elementary_filtration(N, 'max_sub')
        self.assertTrue(st.validate_filtration(N, low))
        self.assertTrue(st.validate_filtration(N, high))
        self.assertEqual(low.factor_dims()[0], (1, 1))
        self.assertGreaterEqual(high.factor_dims()[0][0], 2)

    def test_elementary_is_one_step(self):
        chain = st.elementary_filtration(build_X(F2))
        self.assertEqual(chain.factor_dims(), [(2, 2)])
        with self.assertRaises(DomainError):
            st.elementary_filtration(build_X(F2), 'middle')

    def test_from_generators(self):
        M = build_example_M(F2)
        chain = st.filtration_from_generators(M, [([[1, 0, 0]], [])])
        self.assertEqual(chain.factor_dims(), [(1, 1), (2, 2)])
        self.assertTrue(st.validate_filtration(M, chain))
        self.assertEqual(chain.to_dict()['subs'], [[0, 0], [1, 1], [3, 3]])
        bad = st.filtration_from_generators(M, [([[0, 1, 0]], [])])
        self.assertFalse(st.validate_filtration(M, bad))


class Testcase_pyKronecker_u12(unittest.TestCase):
    """ Submodules of dimension vector (1,2). """

    def test_find(self):
        for M in (build_X(F2), build_X(F3), build_Y(F2),
                  scrambled(build_X(F3), 5)):
            U = st.find_u12(M)
            self.assertIsNotNone(U)
            self.assertEqual(U.dims, (1, 2))
            self.assertTrue(is_submodule(M, U.u1, U.u2))

    def test_domain(self):
        with self.assertRaises(DomainError):
            st.find_u12(build_B(F2, 0))


class Testcase_pyKronecker_normal_forms(unittest.TestCase):
    """ Constructive normal forms of the (2,2) modules. """

    def test_x_form(self):
        for field, seed in ((F2, 1), (F2, 2), (F3, 3), (F3, 4)):
            M = scrambled(build_X(field), seed)
            witness = st.x_normal_form(M)
            self.assertIsNotNone(witness)
            self.assertEqual(witness.reconstruct(M), build_X(field))
            self.assertEqual(witness.variant, 'X')

    def test_tree_forms(self):
        for field, seed in ((F2, 6), (F3, 7)):
            for variant in ('left', 'right'):
                M = scrambled(build_nonelem_tree(field, variant), seed)
                found, witness = st.nonelem_normal_form(M)
                self.assertEqual(found, variant)
                self.assertIsNotNone(witness)
                self.assertEqual(witness.reconstruct(M),
                                 build_nonelem_tree(field, variant))

    def test_domain(self):
        with self.assertRaises(DomainError):
            st.x_normal_form(build_nonelem_tree(F2, 'left'))
        with self.assertRaises(DomainError):
            st.nonelem_normal_form(build_X(F2))
        with self.assertRaises(DomainError):
            st.x_normal_form(build_Y(F2))

    def test_k2_profile(self):
        profile = st.k2_restriction_profile(build_X(F2))
        self.assertEqual(len(profile), 7)
        self.assertTrue(all(dim >= 1 for _, dim in profile))
        self.assertEqual(len(st.k2_restriction_profile(build_X(F3))), 13)


class Testcase_pyKronecker_sequence(unittest.TestCase):
    """ The embedding of X into its shifts. """

    def test_small_t(self):
        for t in (1, 2):
            report = st.verify_prop5(t, F2)
            self.assertTrue(report.passed, report.to_dict())
            self.assertEqual(report.multiplicities, [2] * t)
        report = st.verify_prop5(1, F2)
        self.assertEqual(report.isomorphism, 'pass')
        self.assertEqual(tuple(report.quotient_dims), (2, 0))
        self.assertEqual(report.to_dict()['labeling']['used'], st.USED_LABEL)

    @unittest.skipUnless(SLOW, 'set PYKRONECKER_SLOW=1 for slow runs')
    def test_all_t(self):
        for field in (F2, F3):
            for t in (1, 2, 3):
                self.assertTrue(st.verify_prop5(t, field).passed,
                                (t, field))

    def test_range(self):
        with self.assertRaises(DomainError):
            st.verify_prop5(4, F2)

    def test_status(self):
        report = st.SequenceReport(t=1, q=2, injective_found=True,
                                   dimension_identity=True,
                                   preinjective=True, multiplicities=[2],
                                   isomorphism='pass')
        self.assertEqual(report.status, 'pass')
        report.isomorphism = 'skipped'
        self.assertEqual(report.status, 'inconclusive')
        self.assertFalse(report.passed)
        self.assertEqual(report.to_dict()['status'], 'inconclusive')
        report.isomorphism = 'fail'
        self.assertEqual(report.status, 'fail')
        report.isomorphism = 'skipped'
        report.preinjective = False
        self.assertEqual(report.status, 'fail')


if __name__ == "__main__":
    unittest.main()
