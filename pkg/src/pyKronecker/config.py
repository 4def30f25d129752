"""
INTENDED FOR KRONECKER REPRESENTATION USE
This file contains the run configuration: enumeration bounds, seeds and
worker counts, read from an INI file whose path is given on the command
line or through the PYKRONECKER_CONFIG environment variable. It also maps
the iprint verbosity knob onto the package logger.

copyright October 2026
"""

import configparser
import dataclasses
import io
import logging
import os

from pyKronecker.errors import DomainError, FormatError

ENV_VAR = 'PYKRONECKER_CONFIG'
SECTION = 'pyKronecker'

_LEVELS = {0: logging.WARNING, 1: logging.INFO, 2: logging.DEBUG}


@dataclasses.dataclass(frozen=True)
class Config(object):
    """ Bounds, seeds and worker counts used across the package. """

    subspace_bound: int = 2**24
    idempotent_bound: int = 2**20
    hom_scan_bound: int = 2**20
    tree_search_bound: int = 10**7
    census_bound: int = 2**24
    orbit_group_bound: int = 30000
    sweep_bound: int = 2**27
    orbit_enum_bound: int = 2**17
    reduce_depth: int = 64
    gl_scan_max_q: int = 4
    default_q: int = 2
    seed: int = 42
    sample_size: int = 100000
    orbit_sample: int = 100
    jobs: int = 1
    iprint: int = 0

    def __post_init__(self):
        for field in dataclasses.fields(self):
            value = getattr(self, field.name)
            if not isinstance(value, int) or isinstance(value, bool):
                raise DomainError('config value %s must be an integer'
                                  % field.name, key=field.name)
            if field.name in ('seed', 'iprint'):
                if value < 0:
                    raise DomainError('config value %s must be non-negative'
                                      % field.name, key=field.name)
            elif value <= 0:
                raise DomainError('config value %s must be positive'
                                  % field.name, key=field.name)

    def replace(self, **changes):
        """ Return a copy with some values changed. """
        return dataclasses.replace(self, **changes)

    def to_ini(self):
        """ Serialize to INI text with a single [pyKronecker] section. """
        parser = configparser.ConfigParser()
        parser[SECTION] = dict((k, str(v))
                               for k, v in dataclasses.asdict(self).items())
        out = io.StringIO()
        parser.write(out)
        return out.getvalue()

    @classmethod
    def from_ini(cls, text):
        """ Parse INI text; missing keys keep their defaults. """
        parser = configparser.ConfigParser()
        try:
            parser.read_string(text)
        except configparser.Error as err:
            raise FormatError('unreadable config: %s' % err)

        if not parser.has_section(SECTION):
            return cls()

        known = set(f.name for f in dataclasses.fields(cls))
        values = {}
        for key, raw in parser.items(SECTION):
            if key not in known:
                raise FormatError('unknown config key %r' % key, key=key)
            try:
                values[key] = int(raw)
            except ValueError:
                raise FormatError('config key %r is not an integer: %r'
                                  % (key, raw), key=key)
        return cls(**values)


def load_config(path=None):
    """ Read the config from `path`, else from $PYKRONECKER_CONFIG, else
    return the defaults. """

    path = path or os.environ.get(ENV_VAR)
    if not path:
        return Config()
    try:
        with open(path) as handle:
            text = handle.read()
    except OSError as err:
        raise FormatError('cannot read config %s: %s' % (path, err),
                          path=path)
    return Config.from_ini(text)


_current = Config()


def get_config():
    """ The process-wide current config. """
    return _current


def set_config(config):
    """ Replace the process-wide current config. """
    global _current
    _current = config
    configure_logging(config.iprint)


def resolve(config=None):
    return config if config is not None else _current


def configure_logging(iprint=0):
    """ Map the iprint knob to a level on the package logger. """

    logger = logging.getLogger('pyKronecker')
    if not logger.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(
            logging.Formatter('%(name)s:%(levelname)s:%(message)s'))
        logger.addHandler(handler)
    logger.setLevel(_LEVELS.get(min(iprint, 2), logging.DEBUG))
    return logger
