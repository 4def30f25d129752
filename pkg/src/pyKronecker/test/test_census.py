import csv
import json
import os
import shutil
import tempfile
import unittest

import numpy as np

from pyKronecker import census
from pyKronecker import exactalg as ea
from pyKronecker.config import Config
from pyKronecker.errors import DomainError, EXIT_OK, RefusalError, \
     VerificationError
from pyKronecker.zoo import build_Y

SLOW = bool(os.environ.get('PYKRONECKER_SLOW'))

F2 = ea.FieldDesc(2)
F3 = ea.FieldDesc(3)


class Testcase_pyKronecker_census_encoding(unittest.TestCase):
    """ Modes and the integer encoding of triples. """

    def test_modes(self):
        self.assertEqual(census.parse_mode('full'), census.FULL)
        mode = census.parse_mode('sample:10:2')
        self.assertEqual(mode, census.CensusMode('sample', 10, 2))
        self.assertEqual(str(mode), 'sample(10,2)')
        config = Config(sample_size=7, seed=3)
        self.assertEqual(census.parse_mode('sample', config),
                         census.CensusMode('sample', 7, 3))
        for bad in ('bogus', 'sample:x', 'sample:0', 'sample:1:2:3'):
            with self.assertRaises(DomainError):
                census.parse_mode(bad)

    def test_codes(self):
        self.assertEqual(census.code_length((2, 2)), 12)
        self.assertEqual(census.triple_count((2, 1), 3), 3**6)
        entries = census.decode_codes([0, 1, 2**12 - 1], (2, 2), 2)
        self.assertEqual(entries.shape, (3, 3, 2, 2))
        self.assertFalse(np.any(entries[0]))
        self.assertEqual(entries[1, 2, 1, 1], 1)
        self.assertTrue(np.all(entries[2] == 1))
        self.assertEqual(census.encode_entries(entries, (2, 2), 2).tolist(),
                         [0, 1, 2**12 - 1])

    def test_enumerate(self):
        reps = list(census.enumerate_reps((1, 1), F3))
        self.assertEqual(len(reps), 27)
        self.assertEqual(len(set(reps)), 27)
        sample = list(census.enumerate_reps((2, 2), F2, 'sample:5:1'))
        self.assertEqual(len(sample), 5)
        with self.assertRaises(RefusalError):
            list(census.enumerate_reps((3, 3), F2))

    def test_orbits(self):
        codes, weights = census.orbit_representatives((1, 1), F3)
        self.assertEqual(len(codes), 14)
        self.assertEqual(int(weights.sum()), 27)
        self.assertEqual(int(codes[0]), 0)
        codes, weights = census.orbit_representatives((2, 1), F2)
        self.assertEqual(int(weights.sum()), 64)
        self.assertTrue(np.all(np.diff(codes) > 0))

    def test_next_unseen(self):
        seen = np.ones(3 * census.SCAN_BLOCK, dtype=bool)
        self.assertIsNone(census._next_unseen(seen, 0))
        seen[2 * census.SCAN_BLOCK + 5] = False
        self.assertEqual(census._next_unseen(seen, 0),
                         2 * census.SCAN_BLOCK + 5)
        self.assertIsNone(
            census._next_unseen(seen, 2 * census.SCAN_BLOCK + 6))

    def test_y_orbit(self):
        Y = build_Y(F2)
        y_code = int(census.encode_entries(
            np.stack([ea.to_ints(m) for m in Y.mats]), (4, 2), 2))
        entries = census.y_orbit_entries(F2, Config())
        self.assertEqual(entries.shape, (120960, 3, 2, 4))
        codes = census.encode_entries(entries, (4, 2), 2)
        self.assertEqual(np.unique(codes).size, 120960)
        self.assertIn(y_code, codes.tolist())
        # groups above the bound fall back to random conjugates
        few = census.y_orbit_entries(F2, Config(orbit_enum_bound=10,
                                                orbit_sample=5))
        self.assertEqual(few.shape, (6, 3, 2, 4))
        self.assertEqual(int(census.encode_entries(few[0], (4, 2), 2)),
                         y_code)


class Testcase_pyKronecker_census(unittest.TestCase):
    """ Full censuses of the small dimension vectors. """

    def setUp(self):
        self.tmpdir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmpdir)

    def test_bristles(self):
        report = census.run_census((1, 1), F2)
        self.assertEqual(report.verdict, census.VERDICT_PASS)
        self.assertEqual(report.exit_code, EXIT_OK)
        c = report.counts
        self.assertEqual(c['total'], 8)
        self.assertEqual(c['decomposable'], 1)
        self.assertEqual(c['indecomposable'], 7)
        self.assertEqual(c['regular'], 7)
        self.assertEqual(c['elementary'], 7)
        self.assertEqual(c['a_equiv_to_normal_form'], 7)

    def test_21(self):
        report = census.run_census((2, 1), F2)
        self.assertEqual(report.verdict, census.VERDICT_PASS)
        c = report.counts
        self.assertEqual(c['total'], 64)
        self.assertEqual(c['decomposable'], 22)
        self.assertEqual(c['indecomposable'], 42)
        self.assertEqual(c['scalar_local'], 42)
        self.assertEqual(c['elementary'], 42)

    def test_dedup_agrees(self):
        swept = census.run_census((2, 1), F2, dedup=True)
        plain = census.run_census((2, 1), F2, dedup=False)
        self.assertEqual(swept.counts, plain.counts)
        self.assertEqual(plain.orbits, 0)
        self.assertGreater(swept.orbits, 0)

    def test_partitions(self):
        self.assertTrue(census.check_partitions((2, 1), F2, counts=(1, 3)))
        self.assertTrue(census.check_partitions((1, 1), F3, counts=(1, 5,
                                                                    40)))

    def test_jobs(self):
        serial = census.run_census((1, 1), F3, jobs=1)
        pooled = census.run_census((1, 1), F3, jobs=2, partitions=3)
        self.assertEqual(serial.to_json(timing=False),
                         pooled.to_json(timing=False))

    def test_sample(self):
        report = census.run_census((2, 1), F3, 'sample:40:5')
        self.assertEqual(report.counts['total'], 40)
        self.assertEqual(report.mode, 'sample(40,5)')
        again = census.run_census((2, 1), F3, 'sample:40:5', partitions=2)
        self.assertEqual(report.counts, again.counts)

    def test_22(self):
        report = census.run_census((2, 2), F2)
        self.assertEqual(report.verdict, census.VERDICT_PASS,
                         report.anomalies[:3])
        c = report.counts
        self.assertEqual(c['total'], 4096)
        self.assertEqual(c['elementary'], c['a_equiv_to_normal_form'])
        self.assertEqual(c['elementary'] + c['tree_modules'],
                         c['scalar_local'])
        self.assertEqual(c['nonelem_left'] + c['nonelem_right'],
                         c['tree_modules'])
        self.assertEqual(c['unique_cycle'], c['elementary'])
        self.assertIn('tree', report.checks)

    def test_outputs(self):
        report = census.run_census((1, 1), F2)
        json_path = os.path.join(self.tmpdir, 'r.json')
        csv_path = os.path.join(self.tmpdir, 'r.csv')
        report.write_json(json_path)
        report.write_csv(csv_path)
        with open(json_path) as handle:
            data = json.load(handle)
        self.assertEqual(data['dims'], [1, 1])
        self.assertEqual(data['verdict'], 'pass')
        self.assertIn('wall_seconds', data['timing'])
        with open(csv_path) as handle:
            rows = dict((row[0], row[1]) for row in csv.reader(handle))
        self.assertEqual(rows['total'], '8')
        self.assertEqual(rows['dims'], '1,1')
        self.assertEqual(rows['verdict'], 'pass')

    def test_merge(self):
        a = census.CensusReport((1, 1), 2, 'full')
        b = census.CensusReport((1, 1), 2, 'full')
        a.counts['total'] = 3
        b.counts['total'] = 4
        b.anomalies.append({'kind': 'fail', 'reason': 'x', 'weight': 1,
                            'rep': {}})
        merged = census.merge_reports(a, b)
        self.assertEqual(merged.counts['total'], 7)
        self.assertEqual(merged.verdict, census.VERDICT_FAIL)
        with self.assertRaises(DomainError):
            census.merge_reports(a, census.CensusReport((2, 1), 2, 'full'))

    def test_verdicts(self):
        report = census.CensusReport((3, 2), 2, 'full')
        report.anomalies.append({'kind': 'closure-gap', 'reason': 'x',
                                 'weight': 1, 'rep': {}})
        self.assertEqual(report.verdict, census.VERDICT_GAP)
        self.assertEqual(report.exit_code, 6)
        report.counts['total'] = 1
        report.counts['indecomposable'] = 1
        report.counts['elementary'] = 1
        with self.assertRaises(VerificationError):
            report.check_consistency()

    def test_refusals(self):
        with self.assertRaises(RefusalError):
            census.run_census((3, 3), F2, dedup=False)
        with self.assertRaises(RefusalError):
            census.run_census((3, 3), F2, config=Config(sweep_bound=2**20))
        with self.assertRaises(RefusalError):
            census.run_census((3, 3), F3)
        with self.assertRaises(RefusalError):
            census.run_census((2, 2), F2, config=Config(census_bound=100))
        with self.assertRaises(DomainError):
            census.run_census((1, 0), F2)
        with self.assertRaises(DomainError):
            census.run_census((2, 1), F2, checks=['elementary', 'tree'])
        with self.assertRaises(DomainError):
            census.run_census((1, 1), F2, jobs=0)

    def test_orbit_closure(self):
        self.assertEqual(census.orbit_closure_check((2, 1), F2,
                                                    n_orbits=6), [])

    @unittest.skipUnless(SLOW, 'set PYKRONECKER_SLOW=1 for slow runs')
    def test_22_over_F3(self):
        report = census.run_census((2, 2), F3, jobs=4)
        self.assertEqual(report.verdict, census.VERDICT_PASS)

    @unittest.skipUnless(SLOW, 'set PYKRONECKER_SLOW=1 for slow runs')
    def test_42_sample(self):
        config = Config(sample_size=200, orbit_sample=20)
        report = census.run_census((4, 2), F2, 'sample', config=config)
        self.assertEqual(report.counts['total'], 200 + 120960)
        self.assertEqual(report.verdict, census.VERDICT_PASS)

    @unittest.skipUnless(SLOW, 'set PYKRONECKER_SLOW=1 for slow runs')
    def test_excluded_dims_full(self):
        for dims in ((3, 2), (3, 3)):
            report = census.run_census(dims, F2, jobs=4)
            self.assertEqual(report.mode, 'full')
            self.assertEqual(report.counts['total'],
                             census.triple_count(dims, 2))
            self.assertGreater(report.orbits, 0)
            self.assertNotEqual(report.verdict, census.VERDICT_FAIL)


class Testcase_pyKronecker_theorem(unittest.TestCase):
    """ The classification run and its corollary table. """

    def test_modes(self):
        config = Config()
        self.assertEqual(census.theorem_mode((2, 2), F2, config),
                         census.FULL)
        self.assertEqual(census.theorem_mode((4, 2), F2, config).kind,
                         'sample')
        self.assertEqual(census.theorem_mode((4, 2), F2, config,
                                             full_dims=((4, 2), )),
                         census.FULL)
        self.assertEqual(census.theorem_mode((3, 3), F2, config),
                         census.FULL)
        self.assertEqual(census.theorem_mode((3, 2), F2, config),
                         census.FULL)
        self.assertTrue(census.use_orbit_sweep((3, 3), F2, config))
        small = config.replace(orbit_group_bound=1000)
        self.assertFalse(census.fits_full((3, 3), F2, small))
        self.assertEqual(census.theorem_mode((3, 3), F3, config).kind,
                         'sample')

    def test_corollary(self):
        rows = census.corollary_table([])
        by_dims = dict((tuple(r['dims']), r) for r in rows)
        self.assertTrue(by_dims[(2, 2)]['exists_elementary'])
        self.assertEqual(by_dims[(2, 2)]['q_form'], -4)
        self.assertFalse(by_dims[(3, 2)]['exists_elementary'])
        self.assertFalse(by_dims[(3, 2)]['censused'])
        self.assertNotIn((1, 0), by_dims)

    def test_small_theorem(self):
        result = census.verify_theorem(F2, dims_list=((1, 1), (2, 1)))
        self.assertEqual(result.verdict, census.VERDICT_PASS)
        self.assertEqual(len(result.reports), 2)
        data = json.loads(result.to_json(timing=False))
        self.assertEqual(data['q'], 2)
        with self.assertRaises(DomainError):
            census.verify_theorem(ea.FieldDesc(5))

    @unittest.skipUnless(SLOW, 'set PYKRONECKER_SLOW=1 for slow runs')
    def test_theorem_F2(self):
        config = Config(sample_size=2000, orbit_sample=20)
        result = census.verify_theorem(F2, config, jobs=4)
        self.assertNotEqual(result.verdict, census.VERDICT_FAIL)


if __name__ == "__main__":
    unittest.main()
