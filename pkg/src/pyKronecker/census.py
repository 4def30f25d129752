"""
INTENDED FOR KRONECKER REPRESENTATION USE
This file contains the census: every matrix triple of a dimension vector
over F_q (or a seeded sample of them) is pushed through the check pipeline
and the verdicts are counted. Triples are encoded as integers whose base-q
digits, most significant first, are the entries of the three matrices in
row-major order. When GL_{d1} x GL_{d2} is small the enumeration sweeps
orbits with a bitmap and weights each representative by its orbit size.

Partitions of the work run in a multiprocessing pool; partial reports merge
by an associative fold and the anomaly list is sorted at the end, so the
report does not depend on the partition count.

copyright October 2026
"""

# pylint: disable=C0103
import csv
import dataclasses
import json
import logging
import multiprocessing
import time
from typing import Dict, List, NamedTuple, Tuple

import numpy as np
from tqdm import tqdm

from pyKronecker import exactalg as ea
from pyKronecker.checks import ANOMALY_GAP, NORMAL_FORMS, \
     CheckPipeline, flags_signature, random_conjugate, record_counts
from pyKronecker.config import resolve, set_config
from pyKronecker.errors import DomainError, EXIT_CLOSURE_GAP, EXIT_FAIL, \
     EXIT_OK, RefusalError, VerificationError, refuse
from pyKronecker.k0 import exists_elementary_dim, is_regular_dim, tits_q
from pyKronecker.rep import KronRep
from pyKronecker.zoo import build_Y

logger = logging.getLogger(__name__)

N_ARROWS = 3
CHUNK = 4096
SCAN_BLOCK = 1 << 16

COUNT_KEYS = ('total', 'decomposable', 'indecomposable', 'scalar_local',
              'elementary', 'a_equiv_to_normal_form', 'tree_modules',
              'non_scalar_local_elementary', 'regular', 'preprojective',
              'preinjective', 'u12_absent', 'unique_cycle', 'nonelem_left',
              'nonelem_right')

VERDICT_PASS = 'pass'
VERDICT_FAIL = 'fail'
VERDICT_GAP = 'closure-gap'

THEOREM_DIMS = ((1, 1), (2, 1), (2, 2), (3, 2), (3, 3), (4, 2))
THEOREM_FIELDS = (2, 3)
SAMPLED_BY_DEFAULT = ((4, 2), )
COROLLARY_MAX_TOTAL = 8

BAR_FORMAT = '{l_bar}{bar}| {n_fmt}/{total_fmt} ({elapsed}<{remaining})'


class CensusMode(NamedTuple):
    """ 'full', or 'sample' of `size` triples drawn with `seed`. """

    kind: str
    size: int = 0
    seed: int = 0

    def __str__(self):
        if self.kind == 'full':
            return 'full'
        return 'sample(%d,%d)' % (self.size, self.seed)


FULL = CensusMode('full')


def parse_mode(text, config=None):
    """ 'full', 'sample', 'sample:N' or 'sample:N:SEED'. """
    config = resolve(config)
    if isinstance(text, CensusMode):
        return text
    parts = str(text).split(':')
    if parts == ['full']:
        return FULL
    if parts[0] != 'sample' or len(parts) > 3:
        raise DomainError('unknown census mode %r' % (text, ))
    try:
        size = int(parts[1]) if len(parts) > 1 else config.sample_size
        seed = int(parts[2]) if len(parts) > 2 else config.seed
    except ValueError:
        raise DomainError('bad census mode %r' % (text, ))
    if size <= 0 or seed < 0:
        raise DomainError('sample size must be positive, got %d' % size)
    return CensusMode('sample', size, seed)


# ---------------------------------
# Integer encoding of triples
# ---------------------------------

def code_length(dims):
    return N_ARROWS * dims[0] * dims[1]


def triple_count(dims, q):
    return q**code_length(dims)


def _powers(dims, q):
    return q**np.arange(code_length(dims) - 1, -1, -1, dtype=np.int64)


def decode_codes(codes, dims, q):
    """ Integer codes to entry arrays of shape (count, 3, d2, d1). """
    codes = np.asarray(codes, dtype=np.int64)
    digits = (codes[:, None] // _powers(dims, q)[None, :]) % q
    return digits.reshape(-1, N_ARROWS, dims[1], dims[0])


def encode_entries(entries, dims, q):
    entries = np.asarray(entries, dtype=np.int64)
    flat = entries.reshape(entries.shape[:-3] + (code_length(dims), ))
    return flat @ _powers(dims, q)


def rep_from_entries(field, dims, entries):
    return KronRep(field, dims[0], dims[1],
                   [field.GF(entries[i]) for i in range(N_ARROWS)])


def _check_full(dims, field, config, dedup=False):
    """ Refuse full enumerations above census_bound, or above sweep_bound
    when the orbit sweep weights representatives instead. """
    count = triple_count(dims, field.q)
    limit = config.sweep_bound if dedup else config.census_bound
    if count > limit:
        refuse('full census of %s over F_%d' % (tuple(dims), field.q),
               count, limit)
    return count


def sample_entries(dims, field, mode):
    """ Seeded sample of `mode.size` triples as entry arrays. """
    rng = ea.make_rng(mode.seed)
    return rng.integers(0, field.q, size=(mode.size, N_ARROWS, dims[1],
                                          dims[0])).astype(np.int64)


def y_orbit_entries(field, config):
    """ The GL_4 x GL_2 orbit of build_Y, each triple once. Groups above
    orbit_enum_bound fall back to `orbit_sample` random conjugates. """
    Y = build_Y(field)
    entries = np.stack([ea.to_ints(m) for m in Y.mats])
    if orbit_group_order(Y.dims, field.q) > config.orbit_enum_bound:
        logger.warning('GL_4 x GL_2 over F_%d exceeds orbit_enum_bound, '
                       'using %d random conjugates of Y', field.q,
                       config.orbit_sample)
        rng = ea.make_rng(config.seed + 1)
        reps = [random_conjugate(Y, rng) for _ in range(config.orbit_sample)]
        return np.concatenate(
            [entries[None],
             np.stack([np.stack([ea.to_ints(m) for m in R.mats])
                       for R in reps])])
    groups = (ea.enumerate_gl_ints(4, field), ea.enumerate_gl_ints(2, field))
    codes = orbit_codes(entries, Y.dims, field, groups)
    logger.info('orbit of Y over F_%d: %d triples', field.q, codes.size)
    return decode_codes(codes, Y.dims, field.q)


def enumerate_reps(dims, field, mode='full', config=None):
    """ Every triple exactly once in code order, or the seeded sample. """
    config = resolve(config)
    mode = parse_mode(mode, config)
    dims = tuple(dims)
    if mode.kind == 'full':
        count = _check_full(dims, field, config)
        for start in range(0, count, CHUNK):
            codes = np.arange(start, min(start + CHUNK, count),
                              dtype=np.int64)
            for entries in decode_codes(codes, dims, field.q):
                yield rep_from_entries(field, dims, entries)
    else:
        for entries in sample_entries(dims, field, mode):
            yield rep_from_entries(field, dims, entries)


# ---------------------------------
# Orbit sweep
# ---------------------------------

def orbit_group_order(dims, q):
    return ea.gl_order(dims[0], q) * ea.gl_order(dims[1], q)


def orbit_codes(entries, dims, field, groups):
    """ Sorted distinct codes of g2 M g1 over all pairs in groups, for a
    single triple of shape (3, d2, d1). """
    g1, g2 = groups
    left = ea.batched_matmul_ints(field, g2[:, None, None, :, :],
                                  entries[None, None, :, :, :])
    full = ea.batched_matmul_ints(field, left, g1[None, :, None, :, :])
    return np.unique(encode_entries(full, dims, field.q).reshape(-1))


def _next_unseen(seen, ptr):
    """ First index >= ptr with seen False, or None. """
    count = seen.size
    while ptr < count:
        block = seen[ptr:ptr + SCAN_BLOCK]
        hole = int(np.argmin(block))
        if not block[hole]:
            return ptr + hole
        ptr += block.size
    return None


def orbit_representatives(dims, field, config=None):
    """ (codes, weights): the smallest code of every GL_{d1} x GL_{d2}
    orbit and the orbit size, in increasing code order. """
    config = resolve(config)
    dims = tuple(dims)
    count = _check_full(dims, field, config, dedup=True)
    groups = (ea.enumerate_gl_ints(dims[0], field),
              ea.enumerate_gl_ints(dims[1], field))
    seen = np.zeros(count, dtype=bool)
    reps, weights = [], []
    ptr = _next_unseen(seen, 0)
    while ptr is not None:
        entries = decode_codes([ptr], dims, field.q)[0]
        orbit = orbit_codes(entries, dims, field, groups)
        seen[orbit] = True
        reps.append(ptr)
        weights.append(orbit.size)
        ptr = _next_unseen(seen, ptr + 1)
    logger.info('%d orbits among %d triples of %s over F_%d', len(reps),
                count, dims, field.q)
    return np.array(reps, dtype=np.int64), np.array(weights, dtype=np.int64)


def use_orbit_sweep(dims, field, config):
    return orbit_group_order(dims, field.q) <= config.orbit_group_bound


def fits_full(dims, field, config):
    """ Whether a full census of dims stays within census_bound, or within
    sweep_bound when the orbit sweep applies. """
    dedup = use_orbit_sweep(dims, field, config)
    limit = config.sweep_bound if dedup else config.census_bound
    return triple_count(dims, field.q) <= limit


# ---------------------------------
# Reports
# ---------------------------------

def _anomaly_key(anomaly):
    return json.dumps(anomaly, sort_keys=True)


@dataclasses.dataclass
class CensusReport(object):
    """ Weighted verdict counts of one census. """

    dims: Tuple[int, int]
    q: int
    mode: str
    checks: List[str] = dataclasses.field(default_factory=list)
    counts: Dict[str, int] = dataclasses.field(
        default_factory=lambda: dict((k, 0) for k in COUNT_KEYS))
    anomalies: List[dict] = dataclasses.field(default_factory=list)
    orbits: int = 0
    timing: Dict[str, float] = dataclasses.field(default_factory=dict)

    @property
    def verdict(self):
        if not self.anomalies:
            return VERDICT_PASS
        if all(a['kind'] == ANOMALY_GAP for a in self.anomalies):
            return VERDICT_GAP
        return VERDICT_FAIL

    @property
    def exit_code(self):
        return {VERDICT_PASS: EXIT_OK,
                VERDICT_GAP: EXIT_CLOSURE_GAP}.get(self.verdict, EXIT_FAIL)

    def add_record(self, record):
        for key, value in record_counts(record).items():
            self.counts[key] = self.counts.get(key, 0) + int(value)
        self.anomalies.extend(record.anomalies)

    def check_consistency(self):
        """ Raise unless the counts nest as they must. """
        c = self.counts
        if c['decomposable'] + c['indecomposable'] != c['total']:
            raise VerificationError('decomposable and indecomposable counts '
                                    'do not add up', counts=dict(c))
        chain = ('elementary', 'scalar_local', 'indecomposable', 'total')
        for small, big in zip(chain[:-1], chain[1:]):
            if c[small] > c[big]:
                raise VerificationError('%s count exceeds %s count'
                                        % (small, big), counts=dict(c))
        return True

    def to_dict(self, timing=True):
        out = {'dims': list(self.dims),
               'q': self.q,
               'mode': self.mode,
               'checks': sorted(self.checks),
               'counts': dict(self.counts),
               'orbits': self.orbits,
               'anomalies': self.anomalies,
               'verdict': self.verdict}
        if timing:
            out['timing'] = dict(self.timing)
        return out

    def to_json(self, timing=True):
        return json.dumps(self.to_dict(timing), sort_keys=True, indent=2)

    def write_json(self, path):
        with open(path, 'w') as handle:
            handle.write(self.to_json())
            handle.write('\n')

    def write_csv(self, path):
        """ One key,value row per count after the run description. """
        with open(path, 'w', newline='') as handle:
            writer = csv.writer(handle)
            writer.writerow(['key', 'value'])
            writer.writerow(['dims', '%d,%d' % tuple(self.dims)])
            writer.writerow(['q', self.q])
            writer.writerow(['mode', self.mode])
            writer.writerow(['verdict', self.verdict])
            writer.writerow(['orbits', self.orbits])
            for key in COUNT_KEYS:
                writer.writerow([key, self.counts.get(key, 0)])
            writer.writerow(['anomalies', len(self.anomalies)])


def merge_reports(a, b):
    """ Fold two partial reports of the same census. """
    if (tuple(a.dims), a.q, a.mode) != (tuple(b.dims), b.q, b.mode):
        raise DomainError('cannot merge reports of different censuses')
    counts = dict(a.counts)
    for key, value in b.counts.items():
        counts[key] = counts.get(key, 0) + value
    timing = dict(a.timing)
    for key, value in b.timing.items():
        timing[key] = timing.get(key, 0.0) + value
    return CensusReport(tuple(a.dims), a.q, a.mode,
                        sorted(set(a.checks) | set(b.checks)), counts,
                        sorted(a.anomalies + b.anomalies, key=_anomaly_key),
                        a.orbits + b.orbits, timing)


# ---------------------------------
# Workers
# ---------------------------------

def _run_partition(task):
    """ Worker body. Refusals come back as data so that they survive the
    trip through the pool. """
    q, dims, kind, payload, weights, checks, config = task
    field = ea.field_from_q(q)
    pipeline = CheckPipeline(dims, field, checks, config)
    report = CensusReport(dims, q, '', sorted(pipeline.checks))
    if kind == 'range':
        start, stop = payload
        codes = np.arange(start, stop, dtype=np.int64)
        entries_all = decode_codes(codes, dims, q)
    elif kind == 'codes':
        entries_all = decode_codes(payload, dims, q)
        report.orbits = len(payload)
    else:
        entries_all = payload
    processed = 0
    try:
        for i, entries in enumerate(entries_all):
            weight = int(weights[i]) if weights is not None else 1
            record = pipeline.run(rep_from_entries(field, dims, entries),
                                  weight)
            report.add_record(record)
            processed += 1
    except RefusalError as err:
        return 'refused', err.to_dict(), processed
    return 'ok', report, processed


def _tasks(dims, field, mode, checks, config, partitions, dedup):
    """ Split the census into `partitions` worker tasks. """
    q = field.q
    if mode.kind == 'full':
        count = _check_full(dims, field, config, dedup)
        if dedup:
            codes, weights = orbit_representatives(dims, field, config)
            return [(q, dims, 'codes', c, w, checks, config)
                    for c, w in zip(np.array_split(codes, partitions),
                                    np.array_split(weights, partitions))]
        bounds = [count * k // partitions for k in range(partitions + 1)]
        return [(q, dims, 'range', (lo, hi), None, checks, config)
                for lo, hi in zip(bounds[:-1], bounds[1:])]

    entries = sample_entries(dims, field, mode)
    if dims in SAMPLED_BY_DEFAULT:
        entries = np.concatenate([entries, y_orbit_entries(field, config)])
    return [(q, dims, 'entries', part, None, checks, config)
            for part in np.array_split(entries, partitions)]


def _progress(iterable, total, config, desc):
    if config.iprint < 1:
        return iterable
    return tqdm(iterable, total=total, ncols=80, desc=desc, leave=True,
                bar_format=BAR_FORMAT)


def run_census(dims, field, mode='full', checks=None, config=None,
               jobs=None, partitions=None, dedup=None):
    """ Census of the triples of dimension vector dims over field.

    mode: 'full', 'sample', 'sample:N' or 'sample:N:SEED'.
    checks: optional checks to run (see checks.CHECK_NAMES); the default
        is every check meaningful for dims within the configured bounds.
    jobs: worker processes; 1 runs in this process.
    partitions: number of work units, default four per job.
    dedup: sweep GL orbits; default when the group is within
        orbit_group_bound. Only full censuses sweep orbits.
    """
    config = resolve(config)
    dims = tuple(int(v) for v in dims)
    mode = parse_mode(mode, config)
    jobs = config.jobs if jobs is None else int(jobs)
    if jobs < 1:
        raise DomainError('jobs must be positive, got %d' % jobs)
    partitions = 4 * jobs if partitions is None else int(partitions)
    if partitions < 1:
        raise DomainError('partitions must be positive, got %d' % partitions)
    if not is_regular_dim(dims):
        raise DomainError('census needs a regular dimension vector, got %s'
                          % (dims, ), dims=list(dims))
    # validates the requested checks before any work
    pipeline = CheckPipeline(dims, field, checks, config)
    checks = sorted(pipeline.checks)
    if dedup is None:
        dedup = use_orbit_sweep(dims, field, config)
    dedup = bool(dedup) and mode.kind == 'full'

    started = time.perf_counter()
    tasks = _tasks(dims, field, mode, checks, config, partitions, dedup)
    desc = 'census %d,%d F_%d' % (dims[0], dims[1], field.q)
    report = CensusReport(dims, field.q, str(mode), checks)
    done = 0
    if jobs == 1:
        results = _progress(map(_run_partition, tasks), len(tasks), config,
                            desc)
        report, done = _collect(report, results, done)
    else:
        with multiprocessing.Pool(jobs, initializer=set_config,
                                  initargs=(config, )) as pool:
            results = _progress(pool.imap(_run_partition, tasks), len(tasks),
                                config, desc)
            report, done = _collect(report, results, done)

    elapsed = time.perf_counter() - started
    report.timing = {'wall_seconds': elapsed,
                     'reps_per_second': done / elapsed if elapsed else 0.0}
    report.anomalies.sort(key=_anomaly_key)
    report.check_consistency()
    logger.info('census %s over F_%d (%s): %s, %d anomalies', dims,
                field.q, mode, report.verdict, len(report.anomalies))
    return report


def _collect(report, results, done):
    for status, payload, processed in results:
        done += processed
        if status == 'refused':
            details = dict(payload['details'])
            raise RefusalError(payload['message'],
                               details.pop('requested'),
                               details.pop('limit'),
                               processed=done, **details)
        payload.mode = report.mode
        report = merge_reports(report, payload)
    return report, done


# ---------------------------------
# Invariant spot checks
# ---------------------------------

def check_partitions(dims, field, mode='full', checks=None, config=None,
                     counts=(1, 4, 8)):
    """ True iff the report is the same for every partition count. """
    seen = set()
    for partitions in counts:
        report = run_census(dims, field, mode, checks, config, jobs=1,
                            partitions=partitions)
        seen.add(report.to_json(timing=False))
    return len(seen) == 1


def orbit_closure_check(dims, field, checks=None, config=None,
                        n_orbits=None):
    """ Compare the flags of orbit representatives with those of a random
    conjugate. Returns the list of mismatches. """
    config = resolve(config)
    dims = tuple(dims)
    n_orbits = config.orbit_sample if n_orbits is None else n_orbits
    pipeline = CheckPipeline(dims, field, checks, config)
    if use_orbit_sweep(dims, field, config) and \
       fits_full(dims, field, config):
        codes, _ = orbit_representatives(dims, field, config)
        entries = decode_codes(codes[:n_orbits], dims, field.q)
    else:
        entries = sample_entries(dims, field,
                                 CensusMode('sample', n_orbits, config.seed))
    rng = ea.make_rng(config.seed + 2)
    mismatches = []
    for ent in entries:
        M = rep_from_entries(field, dims, ent)
        N = random_conjugate(M, rng)
        a = flags_signature(pipeline.run(M))
        b = flags_signature(pipeline.run(N))
        if a != b:
            mismatches.append({'rep': M.to_dict(), 'conjugate': N.to_dict(),
                               'flags': [list(a), list(b)]})
    return mismatches


# ---------------------------------
# The classification theorem
# ---------------------------------

@dataclasses.dataclass
class TheoremReport(object):
    """ Censuses of the theorem's dimension vectors and the cross-check of
    exists_elementary_dim against them. """

    q: int
    reports: List[CensusReport]
    corollary: List[dict]

    @property
    def verdict(self):
        verdicts = set(r.verdict for r in self.reports)
        failed_rows = [row for row in self.corollary
                       if row['censused'] and not row['agrees'] and
                       tuple(row['dims']) in NORMAL_FORMS]
        if VERDICT_FAIL in verdicts or failed_rows:
            return VERDICT_FAIL
        if VERDICT_GAP in verdicts or \
           any(row['censused'] and not row['agrees']
               for row in self.corollary):
            return VERDICT_GAP
        return VERDICT_PASS

    @property
    def exit_code(self):
        return {VERDICT_PASS: EXIT_OK,
                VERDICT_GAP: EXIT_CLOSURE_GAP}.get(self.verdict, EXIT_FAIL)

    def to_dict(self, timing=True):
        return {'q': self.q,
                'verdict': self.verdict,
                'reports': [r.to_dict(timing) for r in self.reports],
                'corollary': self.corollary}

    def to_json(self, timing=True):
        return json.dumps(self.to_dict(timing), sort_keys=True, indent=2)


def theorem_mode(dims, field, config, full_dims=()):
    """ Full census when it fits the bounds (see fits_full), otherwise the
    configured sample. (4,2) is sampled unless listed in full_dims. """
    dims = tuple(dims)
    if dims in SAMPLED_BY_DEFAULT and dims not in full_dims:
        return CensusMode('sample', config.sample_size, config.seed)
    if fits_full(dims, field, config):
        return FULL
    return CensusMode('sample', config.sample_size, config.seed)


def corollary_table(reports, max_total=COROLLARY_MAX_TOTAL):
    """ For every regular (x, y) with x + y <= max_total: whether q(x, y)
    allows elementary modules, and whether a census found one. """
    found = dict((tuple(r.dims), r.counts['elementary'] > 0)
                 for r in reports)
    rows = []
    for total in range(2, max_total + 1):
        for x in range(1, total):
            dims = (x, total - x)
            if not is_regular_dim(dims):
                continue
            exists = exists_elementary_dim(dims)
            censused = dims in found
            rows.append({'dims': list(dims),
                         'q_form': tits_q(dims),
                         'exists_elementary': exists,
                         'censused': censused,
                         'found': found.get(dims),
                         'agrees': found.get(dims) == exists
                         if censused else None})
    return rows


def verify_theorem(field, config=None, jobs=None, dims_list=THEOREM_DIMS,
                   full_dims=()):
    """ Censuses of the theorem's dimension vectors over F_2 or F_3. """
    config = resolve(config)
    if field.q not in THEOREM_FIELDS:
        raise DomainError('verify_theorem runs over F_2 and F_3, got F_%d'
                          % field.q, q=field.q)
    reports = []
    for dims in dims_list:
        mode = theorem_mode(dims, field, config, full_dims)
        logger.info('theorem census %s over F_%d, %s', dims, field.q, mode)
        reports.append(run_census(dims, field, mode, None, config, jobs))
    result = TheoremReport(field.q, reports, corollary_table(reports))
    logger.info('theorem over F_%d: %s', field.q, result.verdict)
    return result


