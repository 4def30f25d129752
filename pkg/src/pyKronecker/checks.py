"""
INTENDED FOR KRONECKER REPRESENTATION USE
This file contains the census check systems. Each Sys* component reads the
flags earlier systems left on a CheckRecord and adds its own; the
CheckPipeline assembly lists them in a fixed workflow, cheap filters first:
zero-summand detection and End dimension, then indecomposability,
scalar-locality, elementarity, A-equivalence to the zoo normal form, the
tree search and the exploratory (1,2)-submodule and cycle reports.

copyright October 2026
"""

# pylint: disable=C0103
import logging

from pyKronecker import exactalg as ea
from pyKronecker.bgp import classify_indecomposable
from pyKronecker.coeffquiver import coefficient_quiver, cycle_report, \
     tree_module_search, tree_search_size
from pyKronecker.config import resolve
from pyKronecker.errors import DomainError
from pyKronecker.k0 import exists_elementary_dim, is_regular_dim
from pyKronecker.rep import a_equivalent, arrow_change, base_change, \
     end_dim, is_indecomposable, is_isomorphic, is_scalar_local, \
     simple_summand_counts
from pyKronecker.structure import find_u12, is_elementary, \
     nonelem_normal_form, x_normal_form
from pyKronecker.zoo import build_nonelem_tree, build_X, make

logger = logging.getLogger(__name__)

# zoo picture every elementary module of the dimension vector is
# A-equivalent to
NORMAL_FORMS = {(1, 1): 'B:0',
                (2, 1): 'V:0,1',
                (2, 2): 'X',
                (4, 2): 'Y'}

# every scalar-local indecomposable of these dimension vectors is elementary
ALWAYS_ELEMENTARY = ((1, 1), (2, 1))

CHECK_NAMES = ('elementary', 'normal_form', 'tree', 'u12', 'cycle')

ANOMALY_FAIL = 'fail'
ANOMALY_GAP = 'closure-gap'


class CheckRecord(object):
    """ One representation travelling through the pipeline, with its
    census weight, the flags set so far and any anomalies. """

    def __init__(self, rep, weight=1):
        self.rep = rep
        self.weight = weight
        self.flags = {}
        self.witnesses = {}
        self.anomalies = []

    def flag(self, name, default=False):
        return self.flags.get(name, default)

    @property
    def settled(self):
        """ True once the record is known to be decomposable. """
        return self.flags.get('indecomposable') is False

    def add_anomaly(self, kind, reason):
        self.anomalies.append({'kind': kind,
                               'reason': reason,
                               'weight': int(self.weight),
                               'rep': self.rep.to_dict()})


class Component(object):
    """ Base class of the check systems. """

    def __init__(self, config=None):
        self.config = resolve(config)

    def applies(self, record):
        return not record.settled

    def execute(self, record):
        raise NotImplementedError()


class SysZeroSummand(Component):
    """ S(1) or S(2) split off a module of length at least two. """

    def execute(self, record):
        M = record.rep
        s1, s2 = simple_summand_counts(M)
        if M.total > 1 and (s1 or s2):
            record.flags['indecomposable'] = False


class SysEndDim(Component):
    """ End(M) = F forces M indecomposable and scalar-local. """

    def execute(self, record):
        dim = end_dim(record.rep)
        record.flags['end_dim'] = dim
        if dim == 1:
            record.flags['indecomposable'] = True
            record.flags['scalar_local'] = True


class SysIndecomposable(Component):
    """ Indecomposability and the preprojective / preinjective / regular
    class of the indecomposables. """

    def execute(self, record):
        if 'indecomposable' not in record.flags:
            record.flags['indecomposable'] = \
                is_indecomposable(record.rep, self.config)
        if record.flags['indecomposable']:
            record.flags['kind'] = classify_indecomposable(record.rep)


class SysScalarLocal(Component):

    def execute(self, record):
        if 'scalar_local' not in record.flags:
            record.flags['scalar_local'] = is_scalar_local(record.rep)


class SysElementary(Component):
    """ Submodule criterion on regular indecomposables. Scalar-local
    elementary modules at dimension vectors without elementary modules
    are closure-gap anomalies. """

    def applies(self, record):
        return record.flag('indecomposable') and \
            record.flags.get('kind') == 'regular'

    def execute(self, record):
        M = record.rep
        elementary = is_elementary(M, self.config)
        record.flags['elementary'] = elementary
        if not record.flag('scalar_local'):
            return
        dims = tuple(M.dims)
        if dims in ALWAYS_ELEMENTARY and not elementary:
            record.add_anomaly(ANOMALY_FAIL,
                               'scalar-local indecomposable is not '
                               'elementary')
        if elementary and not exists_elementary_dim(dims, M.n_arrows):
            record.add_anomaly(ANOMALY_GAP,
                               'elementary module at a dimension vector '
                               'outside the elementary orbits')


class SysNormalForm(Component):
    """ A-equivalence to the zoo picture of the dimension vector: on the
    scalar-local stratum it must hold exactly for the elementary modules.
    Non-elementary (2,2) modules must match one of the two tree
    pictures. """

    def __init__(self, field, dims, config=None):
        super(SysNormalForm, self).__init__(config)
        self.picture = make(NORMAL_FORMS[tuple(dims)], field)

    def applies(self, record):
        return record.flag('indecomposable') and record.flag('scalar_local') \
            and 'elementary' in record.flags

    def execute(self, record):
        M = record.rep
        g = a_equivalent(M, self.picture, self.config)
        matched = g is not None
        if matched and not is_isomorphic(arrow_change(self.picture, g), M,
                                         self.config):
            record.add_anomaly(ANOMALY_FAIL, 'arrow change does not carry '
                               'the normal form onto the module')
            matched = False
        record.flags['a_equiv'] = matched
        elementary = record.flags['elementary']
        if matched != elementary:
            record.add_anomaly(ANOMALY_FAIL,
                               'elementary is %s but A-equivalence to the '
                               'normal form is %s' % (elementary, matched))
        if tuple(M.dims) != (2, 2):
            return
        if elementary:
            variant = 'X'
            witness = x_normal_form(M, self.config)
        else:
            variant, witness = nonelem_normal_form(M, self.config)
            record.flags['nonelem_variant'] = variant
        if witness is None:
            record.add_anomaly(ANOMALY_FAIL, 'no %s normal form over the '
                               'field' % variant)
            return
        expected = build_X(M.field) if variant == 'X' else \
            build_nonelem_tree(M.field, variant)
        if witness.reconstruct(M) != expected:
            record.add_anomaly(ANOMALY_FAIL, 'the %s normal form witness '
                               'does not reconstruct the picture' % variant)
            return
        record.witnesses['normal_form'] = witness


class SysTreeSearch(Component):
    """ On (2,2) scalar-local indecomposables the tree modules are exactly
    the non-elementary ones. """

    def applies(self, record):
        return record.flag('indecomposable') and record.flag('scalar_local')

    def execute(self, record):
        witness = tree_module_search(record.rep, self.config)
        tree = witness is not None
        record.flags['tree'] = tree
        if 'elementary' in record.flags and \
           tree == record.flags['elementary']:
            record.add_anomaly(ANOMALY_FAIL,
                               'elementary is %s and tree module is %s'
                               % (record.flags['elementary'], tree))


class SysU12(Component):
    """ Whether the field holds a (1,2) submodule; descriptive. """

    def applies(self, record):
        return record.flag('indecomposable') and \
            record.flags.get('kind') == 'regular'

    def execute(self, record):
        record.flags['u12'] = find_u12(record.rep, self.config) is not None


class SysUniqueCycle(Component):
    """ Cycle rank of the coefficient quiver of the normal-form picture;
    descriptive. """

    def applies(self, record):
        return 'normal_form' in record.witnesses

    def execute(self, record):
        witness = record.witnesses['normal_form']
        cq = coefficient_quiver(record.rep, witness.b1, witness.b2,
                                witness.g)
        record.flags['cycle_rank'] = cycle_report(cq)['cycle_rank']


class Workflow(object):
    """ Ordered list of system names. """

    def __init__(self):
        self.names = []

    def add(self, names):
        self.names.extend(names)


def default_checks(dims, field, config=None):
    """ The checks that are meaningful and within bounds for dims. """
    config = resolve(config)
    dims = tuple(dims)
    checks = {'elementary'}
    if dims in NORMAL_FORMS and field.q <= config.gl_scan_max_q:
        checks.add('normal_form')
    if dims == (2, 2):
        sample = make('X', field)
        if tree_search_size(sample) <= config.tree_search_bound:
            checks.add('tree')
        if 'normal_form' in checks:
            checks.add('cycle')
    if 2 <= dims[1] <= dims[0] + 1:
        checks.add('u12')
    return checks


def validate_checks(dims, checks):
    """ Raise unless every requested check makes sense for dims. """
    dims = tuple(dims)
    unknown = set(checks) - set(CHECK_NAMES)
    if unknown:
        raise DomainError('unknown checks %s' % sorted(unknown),
                          checks=sorted(unknown))
    if not is_regular_dim(dims):
        raise DomainError('census needs a regular dimension vector, got %s'
                          % (dims, ), dims=list(dims))
    if 'normal_form' in checks and dims not in NORMAL_FORMS:
        raise DomainError('no normal form for %s' % (dims, ))
    if 'normal_form' in checks and 'elementary' not in checks:
        raise DomainError('normal_form needs the elementary check')
    if ('tree' in checks or 'cycle' in checks) and dims != (2, 2):
        raise DomainError('tree and cycle checks are defined for (2,2)')
    if 'cycle' in checks and 'normal_form' not in checks:
        raise DomainError('cycle needs the normal_form check')
    if 'u12' in checks and not 2 <= dims[1] <= dims[0] + 1:
        raise DomainError('u12 needs 2 <= y <= x + 1')


class CheckPipeline(object):
    """ Assembly of the check systems for one dimension vector. """

    def __init__(self, dims, field, checks=None, config=None):
        self.dims = tuple(dims)
        self.field = field
        self.config = resolve(config)
        self.checks = set(default_checks(dims, field, self.config)
                          if checks is None else checks)
        validate_checks(self.dims, self.checks)
        self.systems = {}
        self.workflow = Workflow()
        self.configure()

    def add(self, name, system):
        self.systems[name] = system
        return system

    def configure(self):
        """ Set it all up. """
        config = self.config
        self.add('SysZeroSummand', SysZeroSummand(config))
        self.add('SysEndDim', SysEndDim(config))
        self.add('SysIndecomposable', SysIndecomposable(config))
        self.add('SysScalarLocal', SysScalarLocal(config))
        names = ['SysZeroSummand', 'SysEndDim', 'SysIndecomposable',
                 'SysScalarLocal']

        optional = (('elementary', 'SysElementary', SysElementary),
                    ('normal_form', 'SysNormalForm', None),
                    ('tree', 'SysTreeSearch', SysTreeSearch),
                    ('u12', 'SysU12', SysU12),
                    ('cycle', 'SysUniqueCycle', SysUniqueCycle))
        for check, name, cls in optional:
            if check not in self.checks:
                continue
            if cls is None:
                self.add(name, SysNormalForm(self.field, self.dims, config))
            else:
                self.add(name, cls(config))
            names.append(name)

        #-------------------------
        # Iteration Hierarchy
        #-------------------------
        self.workflow.add(names)

    def run(self, rep, weight=1):
        """ Push one representation through the workflow. """
        record = CheckRecord(rep, weight)
        for name in self.workflow.names:
            system = self.systems[name]
            if system.applies(record):
                system.execute(record)
        return record


def flags_signature(record):
    """ Verdict flags without witnesses, for comparing conjugates. """
    return tuple(sorted((k, v) for k, v in record.flags.items()
                        if k != 'end_dim'))


def record_counts(record):
    """ Census counters a record contributes to, each with its weight. """
    w = record.weight
    counts = {'total': w}
    flags = record.flags
    if not flags.get('indecomposable'):
        counts['decomposable'] = w
        return counts
    counts['indecomposable'] = w
    counts[flags['kind']] = w
    if flags.get('scalar_local'):
        counts['scalar_local'] = w
        if flags.get('elementary'):
            counts['elementary'] = w
        if flags.get('a_equiv'):
            counts['a_equiv_to_normal_form'] = w
        if flags.get('tree'):
            counts['tree_modules'] = w
        variant = flags.get('nonelem_variant')
        if variant is not None:
            counts['nonelem_' + variant] = w
    elif flags.get('elementary'):
        counts['non_scalar_local_elementary'] = w
    if flags.get('u12') is False:
        counts['u12_absent'] = w
    if flags.get('cycle_rank') == 1:
        counts['unique_cycle'] = w
    return counts


def random_conjugate(M, rng):
    """ g2 M g1^-1 for random invertible g1, g2. """
    b1 = ea.random_invertible(M.field, M.d1, rng)
    b2 = ea.random_invertible(M.field, M.d2, rng)
    return base_change(M, b1, b2)
