import logging
import os
import shutil
import tempfile
import unittest
from unittest import mock

from pyKronecker import config as cfg
from pyKronecker.errors import DomainError, FormatError, RefusalError, \
     refuse


class Testcase_pyKronecker_config(unittest.TestCase):
    """ INI configuration, bounds and the iprint knob. """

    def setUp(self):
        self.tmpdir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmpdir)
        cfg.set_config(cfg.Config())

    def test_ini_round_trip(self):
        config = cfg.Config(seed=7, jobs=3, census_bound=1000)
        self.assertEqual(cfg.Config.from_ini(config.to_ini()), config)

    def test_partial_ini(self):
        config = cfg.Config.from_ini('[pyKronecker]\nseed = 5\n')
        self.assertEqual(config.seed, 5)
        self.assertEqual(config.jobs, cfg.Config().jobs)
        self.assertEqual(cfg.Config.from_ini('[other]\nx = 1\n'),
                         cfg.Config())

    def test_bad_ini(self):
        for text in ('[pyKronecker]\nseed = x\n',
                     '[pyKronecker]\nunknown = 1\n',
                     'no section header'):
            with self.assertRaises(FormatError):
                cfg.Config.from_ini(text)

    def test_validation(self):
        with self.assertRaises(DomainError):
            cfg.Config(jobs=0)
        with self.assertRaises(DomainError):
            cfg.Config(seed=-1)
        with self.assertRaises(DomainError):
            cfg.Config(sample_size='10')
        self.assertEqual(cfg.Config(seed=0).seed, 0)
        self.assertEqual(cfg.Config().replace(jobs=4).jobs, 4)

    def test_load(self):
        path = os.path.join(self.tmpdir, 'k.ini')
        with open(path, 'w') as handle:
            handle.write('[pyKronecker]\njobs = 2\n')
        self.assertEqual(cfg.load_config(path).jobs, 2)
        with mock.patch.dict(os.environ, {cfg.ENV_VAR: path}):
            self.assertEqual(cfg.load_config().jobs, 2)
        with mock.patch.dict(os.environ, {}, clear=True):
            self.assertEqual(cfg.load_config(), cfg.Config())
        with self.assertRaises(FormatError):
            cfg.load_config(os.path.join(self.tmpdir, 'missing.ini'))

    def test_current(self):
        config = cfg.Config(seed=11)
        cfg.set_config(config)
        self.assertIs(cfg.get_config(), config)
        self.assertIs(cfg.resolve(), config)
        other = cfg.Config(seed=12)
        self.assertIs(cfg.resolve(other), other)

    def test_iprint(self):
        logger = cfg.configure_logging(0)
        self.assertEqual(logger.level, logging.WARNING)
        self.assertEqual(cfg.configure_logging(1).level, logging.INFO)
        self.assertEqual(cfg.configure_logging(5).level, logging.DEBUG)
        self.assertEqual(len(logger.handlers), 1)

    def test_refusal_details(self):
        with self.assertRaises(RefusalError) as ctx:
            refuse('scan', 10, 5)
        data = ctx.exception.to_dict()
        self.assertEqual(data['exit_code'], 5)
        self.assertEqual(data['details']['requested'], 10)
        self.assertEqual(data['details']['scan'], 'scan')


if __name__ == "__main__":
    unittest.main()
